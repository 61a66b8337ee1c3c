#include "lookahead/algorithms.hpp"

#include <algorithm>

namespace lookahead {

std::string to_string(SchedulerId id) {
    switch (id) {
        case SchedulerId::ls: return "ls";
        case SchedulerId::two_la1: return "2la1";
        case SchedulerId::three_la1: return "3la1";
    }
    return "?";
}

SchedulerId parse_scheduler_id(std::string_view name) {
    if (name == "ls") return SchedulerId::ls;
    if (name == "2la1") return SchedulerId::two_la1;
    if (name == "3la1") return SchedulerId::three_la1;
    throw InvalidParam("unknown scheduler '" + std::string(name) + "' (expected ls, 2la1 or 3la1)");
}

int least_loaded(std::span<const Rational> loads) {
    // min_element returns the first minimum, which is the lowest index.
    return static_cast<int>(std::min_element(loads.begin(), loads.end()) - loads.begin()) + 1;
}

ListScheduling::ListScheduling(int machines) : machines_(machines) {
    if (machines < 2) throw SchedulerMachineMismatch("ls needs at least 2 machines");
}

int ListScheduling::choose(const LookaheadWindow&, std::span<const Rational> loads) const {
    return least_loaded(loads);
}

bool two_la1_admit(const Rational& l1, const Rational& l2, const Rational& p_i, const Rational& p_next) {
    return Rational(3) * (l1 + p_i) <= Rational(2) * (l1 + l2 + p_i + p_next);
}

int TwoLookaheadOne::choose(const LookaheadWindow& window, std::span<const Rational> loads) const {
    // Last job: lighter machine, M2 on a tie. Equal jobs then always leave
    // floor(2n/3) of them on M1, n = 1 included.
    if (window.future.empty()) return loads[0] < loads[1] ? 1 : 2;
    return two_la1_admit(loads[0], loads[1], window.current, window.future.front()) ? 1 : 2;
}

int three_la1_admit(const Rational& l1, const Rational& l2, const Rational& l3, const Rational& p_i,
                    const Rational& p_next) {
    const Rational visible = l1 + l2 + l3 + p_i + p_next;
    if (Rational(33) * (l1 + p_i) <= Rational(16) * visible) return 1;
    if (Rational(33) * (l2 + p_i) <= Rational(15) * visible) return 2;
    return 3;
}

int ThreeLookaheadOne::choose(const LookaheadWindow& window, std::span<const Rational> loads) const {
    if (window.future.empty()) return least_loaded(loads);
    return three_la1_admit(loads[0], loads[1], loads[2], window.current, window.future.front());
}

std::unique_ptr<OnlinePolicy> make_policy(SchedulerId id, int machines) {
    switch (id) {
        case SchedulerId::ls:
            return std::make_unique<ListScheduling>(machines);
        case SchedulerId::two_la1:
            if (machines != 2)
                throw SchedulerMachineMismatch("2la1 runs on exactly 2 machines, got " + std::to_string(machines));
            return std::make_unique<TwoLookaheadOne>();
        case SchedulerId::three_la1:
            if (machines != 3)
                throw SchedulerMachineMismatch("3la1 runs on exactly 3 machines, got " + std::to_string(machines));
            return std::make_unique<ThreeLookaheadOne>();
    }
    throw InvalidParam("unknown scheduler");
}

ScheduleResult run_online(const OnlinePolicy& policy, const Instance& instance, std::size_t k) {
    if (k < policy.min_lookahead())
        throw InvalidParam(policy.name() + " needs lookahead k >= " +
                           std::to_string(policy.min_lookahead()) + ", got " + std::to_string(k));
    const int m = policy.machine_count();
    std::vector<Rational> loads(static_cast<std::size_t>(m));
    std::vector<int> assignment;
    assignment.reserve(instance.size());
    DecisionTrace trace;
    trace.reserve(instance.size());

    for (std::size_t i = 1; i <= instance.size(); ++i) {
        auto window = lookahead_window(instance, i, k);
        const int machine = policy.choose(window, loads);
        if (machine < 1 || machine > m)
            throw InvalidParam("policy chose machine " + std::to_string(machine) + " of " + std::to_string(m));
        loads[static_cast<std::size_t>(machine - 1)] += window.current;
        assignment.push_back(machine);
        trace.push_back(DecisionRecord{i, std::move(window), machine, loads});
    }
    return {Schedule::from_assignment(instance, std::move(assignment), m), std::move(trace)};
}

ScheduleResult ls_schedule(const Instance& instance, int machines) {
    return run_online(ListScheduling(machines), instance, 0);
}

ScheduleResult two_la1_schedule(const Instance& instance) {
    return run_online(TwoLookaheadOne{}, instance, 1);
}

ScheduleResult three_la1_schedule(const Instance& instance) {
    return run_online(ThreeLookaheadOne{}, instance, 1);
}

}  // namespace lookahead
