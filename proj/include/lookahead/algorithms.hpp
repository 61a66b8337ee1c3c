#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lookahead/core.hpp"

namespace lookahead {

enum class SchedulerId { ls, two_la1, three_la1 };

std::string to_string(SchedulerId id);
/// "ls", "2la1" or "3la1". Throws InvalidParam otherwise.
SchedulerId parse_scheduler_id(std::string_view name);

/// A deterministic online policy. It sees nothing but the current lookahead
/// window and the machine loads produced by its own earlier decisions, so
/// revelation timing is enforced by the signature.
class OnlinePolicy {
public:
    virtual ~OnlinePolicy() = default;

    virtual std::string name() const = 0;
    virtual int machine_count() const = 0;
    /// Smallest k the policy is defined for.
    virtual std::size_t min_lookahead() const = 0;
    /// Returns the machine (1..m) for window.current.
    virtual int choose(const LookaheadWindow& window, std::span<const Rational> loads) const = 0;
};

/// Graham's rule: a least-loaded machine, lowest index on ties.
class ListScheduling final : public OnlinePolicy {
public:
    explicit ListScheduling(int machines);
    std::string name() const override { return "ls"; }
    int machine_count() const override { return machines_; }
    std::size_t min_lookahead() const override { return 0; }
    int choose(const LookaheadWindow& window, std::span<const Rational> loads) const override;

private:
    int machines_;
};

/// Two machines, one job of lookahead. M1 is kept at most 2/3 of the
/// visible total; everything else goes to M2.
class TwoLookaheadOne final : public OnlinePolicy {
public:
    std::string name() const override { return "2la1"; }
    int machine_count() const override { return 2; }
    std::size_t min_lookahead() const override { return 1; }
    int choose(const LookaheadWindow& window, std::span<const Rational> loads) const override;
};

/// Three machines, one job of lookahead, with thresholds 16/33 on M1 and
/// 15/33 on M2. M3 takes whatever both refuse.
class ThreeLookaheadOne final : public OnlinePolicy {
public:
    std::string name() const override { return "3la1"; }
    int machine_count() const override { return 3; }
    std::size_t min_lookahead() const override { return 1; }
    int choose(const LookaheadWindow& window, std::span<const Rational> loads) const override;
};

/// Throws SchedulerMachineMismatch if the policy is not defined for m
/// machines (2-LA1 needs m = 2, 3-LA1 needs m = 3, LS needs m >= 2).
std::unique_ptr<OnlinePolicy> make_policy(SchedulerId id, int machines);

// 3·(l1 + p_i) <= 2·(l1 + l2 + p_i + p_next)
bool two_la1_admit(const Rational& l1, const Rational& l2, const Rational& p_i, const Rational& p_next);

/// Machine picked by the 3-LA1 admission test for a non-final job:
/// 1 if 33·(l1+p_i) <= 16·S, else 2 if 33·(l2+p_i) <= 15·S, else 3,
/// with S = l1 + l2 + l3 + p_i + p_next.
int three_la1_admit(const Rational& l1, const Rational& l2, const Rational& l3, const Rational& p_i,
                    const Rational& p_next);

/// Lowest-index machine among those with minimum load.
int least_loaded(std::span<const Rational> loads);

struct DecisionRecord {
    std::size_t job;
    LookaheadWindow window;
    int machine;
    std::vector<Rational> loads_after;
};

using DecisionTrace = std::vector<DecisionRecord>;

struct ScheduleResult {
    Schedule schedule;
    DecisionTrace trace;
};

/// Feeds the instance to the policy job by job with k jobs of lookahead.
/// Throws InvalidParam if k is below the policy's minimum.
ScheduleResult run_online(const OnlinePolicy& policy, const Instance& instance, std::size_t k);

ScheduleResult ls_schedule(const Instance& instance, int machines);
ScheduleResult two_la1_schedule(const Instance& instance);
ScheduleResult three_la1_schedule(const Instance& instance);

}  // namespace lookahead
