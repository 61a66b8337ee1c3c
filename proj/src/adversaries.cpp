#include "lookahead/adversaries.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>

namespace lookahead {

namespace {

struct FamilySpec {
    FamilyKind kind;
    std::string_view name;
    std::string_view key;  // empty when the family takes no parameter
};

constexpr FamilySpec kFamilies[] = {
    {FamilyKind::three_jobs, "fig1", ""},
    {FamilyKind::tight_two_machine, "theorem2", "n"},
    {FamilyKind::equal_jobs, "corollary21", "x"},
    {FamilyKind::pmax_16_16_1, "lemma4", ""},
    {FamilyKind::pmax_17_14_1_1, "lemma5a", ""},
    {FamilyKind::pmax_1_1_14_17, "lemma5b", ""},
    {FamilyKind::equal_jobs_33, "lemma6", "x"},
    {FamilyKind::three_machine_case, "thm4", "case"},
};

const FamilySpec& spec_of(FamilyKind kind) {
    for (const auto& s : kFamilies)
        if (s.kind == kind) return s;
    throw InvalidParam("unknown family kind");
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
    std::int64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || text.empty())
        throw InvalidParam("malformed " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

void validate(const FamilyId& family) {
    switch (family.kind) {
        case FamilyKind::tight_two_machine:
            if (family.param < 4) throw InvalidParam("theorem2 needs n >= 4, got " + std::to_string(family.param));
            break;
        case FamilyKind::equal_jobs:
        case FamilyKind::equal_jobs_33:
            if (family.param < 1)
                throw InvalidParam(std::string(spec_of(family.kind).name) + " needs x >= 1, got " +
                                   std::to_string(family.param));
            break;
        case FamilyKind::three_machine_case: {
            const auto& ids = three_machine_case_ids();
            if (std::find(ids.begin(), ids.end(), family.case_id) == ids.end())
                throw InvalidParam("unknown thm4 case '" + family.case_id + "'");
            break;
        }
        default:
            break;
    }
}

std::vector<Rational> repeat(std::int64_t count, std::int64_t value) {
    return std::vector<Rational>(static_cast<std::size_t>(count), Rational(value));
}

// Steps an online policy through a sequence whose values are committed
// lazily: before job i is shown, every value up to p_{i+k} must be fixed, and
// `commit` is asked for each missing one with the decisions made so far.
using CommitFn = std::function<Rational(std::size_t index, std::span<const int> decisions,
                                        std::span<const Rational> loads)>;

GameTranscript play(const OnlinePolicy& policy, std::size_t n, std::size_t k, const CommitFn& commit,
                    const OracleLimits& limits) {
    const int m = policy.machine_count();
    std::vector<Rational> values;
    std::vector<Rational> loads(static_cast<std::size_t>(m));
    std::vector<int> decisions;
    std::vector<LookaheadWindow> revealed;

    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t horizon = std::min(n, i + k);
        while (values.size() < horizon) values.push_back(commit(values.size() + 1, decisions, loads));

        LookaheadWindow window{values[i - 1], {values.begin() + static_cast<std::ptrdiff_t>(i),
                                               values.begin() + static_cast<std::ptrdiff_t>(horizon)}};
        const int machine = policy.choose(window, loads);
        if (machine < 1 || machine > m)
            throw InvalidParam("policy chose machine " + std::to_string(machine) + " of " + std::to_string(m));
        loads[static_cast<std::size_t>(machine - 1)] += window.current;
        decisions.push_back(machine);
        revealed.push_back(std::move(window));
    }

    auto instance = make_instance(values);
    const auto schedule = Schedule::from_assignment(instance, decisions, m);
    const auto opt = optimal_makespan(instance, m, limits);
    return GameTranscript{std::move(revealed),
                          std::move(decisions),
                          std::move(instance),
                          schedule.makespan(),
                          opt.makespan,
                          competitive_ratio(schedule.makespan(), opt.makespan),
                          {},
                          false};
}

}  // namespace

const std::vector<std::string>& three_machine_case_ids() {
    static const std::vector<std::string> ids = {"1", "2.1", "2.2", "2.3", "3a.1", "3a.2", "3a.3", "3b.1", "3b.2"};
    return ids;
}

FamilyId parse_family(std::string_view text) {
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    const auto* spec = std::find_if(std::begin(kFamilies), std::end(kFamilies),
                                    [&](const FamilySpec& s) { return s.name == name; });
    if (spec == std::end(kFamilies)) throw InvalidParam("unknown family '" + std::string(name) + "'");

    FamilyId family{spec->kind, 0, {}};
    if (spec->key.empty()) {
        if (colon != std::string_view::npos)
            throw InvalidParam("family '" + std::string(name) + "' takes no parameter");
        return family;
    }
    if (colon == std::string_view::npos)
        throw InvalidParam("family '" + std::string(name) + "' needs " + std::string(spec->key) + "=<value>");
    const auto arg = text.substr(colon + 1);
    const auto eq = arg.find('=');
    if (eq == std::string_view::npos || arg.substr(0, eq) != spec->key)
        throw InvalidParam("family '" + std::string(name) + "' needs " + std::string(spec->key) + "=<value>");
    const auto value = arg.substr(eq + 1);
    if (spec->kind == FamilyKind::three_machine_case)
        family.case_id = std::string(value);
    else
        family.param = parse_int(value, spec->key);
    validate(family);
    return family;
}

std::string to_string(const FamilyId& family) {
    const auto& spec = spec_of(family.kind);
    std::string out(spec.name);
    if (spec.key.empty()) return out;
    out += ':';
    out += spec.key;
    out += '=';
    out += family.kind == FamilyKind::three_machine_case ? family.case_id : std::to_string(family.param);
    return out;
}

std::vector<FamilyId> expand_family_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) return {parse_family(text)};

    const auto eq = text.rfind('=', dots);
    if (eq == std::string_view::npos) throw InvalidParam("malformed family range '" + std::string(text) + "'");
    const auto prefix = text.substr(0, eq + 1);
    const auto lo = parse_int(text.substr(eq + 1, dots - eq - 1), "range start");
    const auto hi = parse_int(text.substr(dots + 2), "range end");
    if (lo > hi) throw InvalidParam("empty family range '" + std::string(text) + "'");

    std::vector<FamilyId> out;
    for (auto v = lo; v <= hi; ++v) out.push_back(parse_family(std::string(prefix) + std::to_string(v)));
    if (out.front().kind == FamilyKind::three_machine_case)
        throw InvalidParam("thm4 cases cannot be swept as a numeric range");
    return out;
}

Instance named_instance(const FamilyId& family) {
    validate(family);
    switch (family.kind) {
        case FamilyKind::three_jobs:
            return make_instance({1, 1, 2});
        case FamilyKind::tight_two_machine: {
            const auto n = family.param;
            auto values = repeat(n - 3, 1);
            values.insert(values.end(), {Rational(n), Rational(2 * n + 3), Rational(2 * n)});
            return make_instance(values);
        }
        case FamilyKind::equal_jobs:
            return make_instance(repeat(6 * family.param, 1));
        case FamilyKind::pmax_16_16_1:
            return make_instance({16, 16, 1});
        case FamilyKind::pmax_17_14_1_1:
            return make_instance({17, 14, 1, 1});
        case FamilyKind::pmax_1_1_14_17:
            return make_instance({1, 1, 14, 17});
        case FamilyKind::equal_jobs_33:
            return make_instance(repeat(33 * family.param, 1));
        case FamilyKind::three_machine_case: {
            const auto& c = family.case_id;
            std::int64_t p4 = 7, p5 = 11;  // 1, 2.1, 3a.1
            if (c == "2.2" || c == "3a.3") {
                p4 = 11;
                p5 = 7;
            } else if (c == "2.3" || c == "3a.2") {
                p4 = 4;
                p5 = 11;
            } else if (c == "3b.1") {
                p4 = 7;
                p5 = 8;
            } else if (c == "3b.2") {
                p4 = 8;
                p5 = 7;
            }
            return make_instance({7, 4, 4, p4, p5});
        }
    }
    throw InvalidParam("unknown family");
}

GameTranscript play_two_machine_game(const OnlinePolicy& policy, std::size_t n, std::size_t k, const Rational& x,
                             const OracleLimits& limits) {
    if (policy.machine_count() != 2)
        throw InvalidParam("the two-machine game needs a 2-machine policy, got " + policy.name());
    if (k < 1) throw InvalidParam("lookahead k must be at least 1");
    if (k < policy.min_lookahead())
        throw InvalidParam(policy.name() + " needs lookahead k >= " + std::to_string(policy.min_lookahead()));
    if (n < k + 2)
        throw InvalidParam("need n >= k + 2, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
    if (x.sign() <= 0) throw InvalidParam("x must be positive");

    std::string applied;
    bool degenerate = false;
    auto commit = [&](std::size_t index, std::span<const int>, std::span<const Rational> loads) -> Rational {
        if (index + k + 1 <= n) return x;  // index <= n-k-1
        if (index < n) return Rational(1);
        // p_n is due now, at the arrival of job n-k; loads cover jobs 1..n-k-1.
        const Rational heavy = std::max(loads[0], loads[1]);
        const Rational light = std::min(loads[0], loads[1]);
        if (heavy >= Rational(2) * light) {
            applied = "1";
            return Rational(static_cast<std::int64_t>(k));
        }
        applied = "2";
        Rational y = Rational(2) * heavy - light;
        if (y.sign() <= 0) {
            degenerate = true;
            y = Rational(1);
        }
        return y;
    };
    auto transcript = play(policy, n, k, commit, limits);
    transcript.applied_case = applied;
    transcript.degenerate = degenerate;
    return transcript;
}

GameTranscript play_three_machine_game(const OnlinePolicy& policy, const OracleLimits& limits) {
    if (policy.machine_count() != 3)
        throw InvalidParam("the three-machine game needs a 3-machine policy, got " + policy.name());
    if (policy.min_lookahead() > 1) throw InvalidParam(policy.name() + " needs more than one job of lookahead");

    std::string applied;
    auto commit = [&](std::size_t index, std::span<const int> d, std::span<const Rational>) -> Rational {
        switch (index) {
            case 1: return Rational(7);
            case 2:
            case 3: return Rational(4);
            case 4: return Rational(7);  // every branch known at J3's arrival opens with p4 = 7
            default: break;
        }
        // p5 is due at J4's arrival; placements of J1..J3 are known.
        if (d[0] == d[1]) {
            applied = d[2] == d[0] ? "1" : "2.1";
            return Rational(11);
        }
        if (d[2] == d[1]) {
            applied = "3b.1";
            return Rational(8);
        }
        applied = d[2] == d[0] ? "3a.1" : "1";
        return Rational(11);
    };
    auto transcript = play(policy, 5, 1, commit, limits);
    transcript.applied_case = applied;
    return transcript;
}

InstanceSpace::InstanceSpace(std::size_t min_length, std::size_t max_length, std::vector<Rational> values)
    : min_length_(min_length), max_length_(max_length), values_(std::move(values)) {
    if (min_length_ < 1 || min_length_ > max_length_)
        throw InvalidParam("instance lengths must satisfy 1 <= min <= max");
    if (values_.empty()) throw InvalidParam("value set is empty");
    for (const auto& v : values_)
        if (v.sign() <= 0) throw InvalidParam("value " + v.to_string() + " is not positive");
    if (std::set<Rational>(values_.begin(), values_.end()).size() != values_.size())
        throw InvalidParam("value set contains duplicates");

    const auto base = static_cast<std::uint64_t>(values_.size());
    for (std::size_t n = min_length_; n <= max_length_; ++n) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (count > std::numeric_limits<std::uint64_t>::max() / base)
                throw InvalidParam("instance space too large to index");
            count *= base;
        }
        offsets_.push_back(total_);
        if (total_ > std::numeric_limits<std::uint64_t>::max() - count)
            throw InvalidParam("instance space too large to index");
        total_ += count;
    }
}

Instance InstanceSpace::at(std::uint64_t index) const {
    if (index >= total_) throw IndexOutOfRange("instance index " + std::to_string(index) + " out of range");
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index) - 1;
    const std::size_t n = min_length_ + static_cast<std::size_t>(it - offsets_.begin());
    std::uint64_t local = index - *it;

    const auto base = static_cast<std::uint64_t>(values_.size());
    std::vector<Rational> times(n);
    for (std::size_t pos = n; pos-- > 0;) {
        times[pos] = values_[static_cast<std::size_t>(local % base)];
        local /= base;
    }
    return make_instance(times);
}

void InstanceSpace::for_each(std::uint64_t begin, std::uint64_t end,
                             const std::function<void(const Instance&)>& fn) const {
    end = std::min(end, total_);
    for (auto i = begin; i < end; ++i) fn(at(i));
}

std::string InstanceSpace::describe() const {
    std::string out = "n=" + std::to_string(min_length_);
    if (max_length_ != min_length_) out += ".." + std::to_string(max_length_);
    out += " values={";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ',';
        out += values_[i].to_string();
    }
    return out + "}";
}

InstanceSpace enumerate_instances(std::size_t n, std::vector<Rational> values) {
    return InstanceSpace(n, n, std::move(values));
}

}  // namespace lookahead
