#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lookahead/algorithms.hpp"
#include "lookahead/oracle.hpp"

namespace lookahead {

// ---------------------------------------------------------------------------
// Named instance families
// ---------------------------------------------------------------------------

enum class FamilyKind {
    three_jobs,
    tight_two_machine,
    equal_jobs,
    pmax_16_16_1,
    pmax_17_14_1_1,
    pmax_1_1_14_17,
    equal_jobs_33,
    three_machine_case,
};

/// A named instance family plus its parameter. Textual form (stable, used on
/// the command line and in CSV output):
///   fig1, theorem2:n=<int>, corollary21:x=<int>, lemma4, lemma5a, lemma5b,
///   lemma6:x=<int>, thm4:case=<id>
struct FamilyId {
    FamilyKind kind = FamilyKind::three_jobs;
    std::int64_t param = 0;  // n for theorem2, x for corollary21 / lemma6
    std::string case_id;     // thm4 only

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

/// Case ids of the three-machine lower-bound tree.
const std::vector<std::string>& three_machine_case_ids();

/// Throws InvalidParam on unknown names, malformed or out-of-range parameters.
FamilyId parse_family(std::string_view text);
std::string to_string(const FamilyId& family);

/// Expands "theorem2:n=4..8" into theorem2:n=4, ..., theorem2:n=8. A plain
/// family id expands to itself.
std::vector<FamilyId> expand_family_range(std::string_view text);

/// theorem2(n): n-3 unit jobs then n, 2n+3, 2n.  corollary21(x): 6x unit
/// jobs.  lemma6(x): 33x unit jobs.  thm4 cases: 7, 4, 4 followed by the
/// case's (p4, p5).
Instance named_instance(const FamilyId& family);

// ---------------------------------------------------------------------------
// Adaptive games
// ---------------------------------------------------------------------------

struct GameTranscript {
    std::vector<LookaheadWindow> revealed;  // window shown at each step
    std::vector<int> decisions;             // machine chosen at each step
    Instance final_instance;
    Rational alg_makespan;
    Rational opt_makespan;
    Rational ratio;
    std::string applied_case;  // which branch of the construction fired
    bool degenerate = false;   // adversary had to clamp a non-positive value
};

/// Two machines, lookahead k. Jobs 1..n-k-1 have length x and jobs
/// n-k..n-1 length 1. p_n is fixed when job n-k arrives, from the loads
/// (relabelled so l1 >= l2) left by jobs 1..n-k-1: k if l1 >= 2*l2,
/// otherwise 2*l1 - l2. Requires n >= k + 2, k >= 1 and x > 0.
GameTranscript play_two_machine_game(const OnlinePolicy& policy, std::size_t n, std::size_t k, const Rational& x,
                             const OracleLimits& limits = {});

/// Three machines, one job of lookahead. p1..p4 = 7, 4, 4, 7 and p5 is
/// chosen when J4 arrives from where J1..J3 went: 8 if J1 and J2 are apart
/// and J3 joined J2, 11 otherwise.
GameTranscript play_three_machine_game(const OnlinePolicy& policy, const OracleLimits& limits = {});

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

/// Every instance with length in [min_length, max_length] over a finite value
/// set. Ordered by length, then lexicographically by value index. Indexable,
/// so any sub-range can be produced independently.
class InstanceSpace {
public:
    InstanceSpace(std::size_t min_length, std::size_t max_length, std::vector<Rational> values);

    std::uint64_t size() const noexcept { return total_; }
    Instance at(std::uint64_t index) const;
    void for_each(std::uint64_t begin, std::uint64_t end, const std::function<void(const Instance&)>& fn) const;

    std::size_t min_length() const noexcept { return min_length_; }
    std::size_t max_length() const noexcept { return max_length_; }
    const std::vector<Rational>& values() const noexcept { return values_; }

    /// e.g. "n=1..7 values={1,2,3}"
    std::string describe() const;

private:
    std::size_t min_length_;
    std::size_t max_length_;
    std::vector<Rational> values_;
    std::vector<std::uint64_t> offsets_;  // first global index of each length
    std::uint64_t total_ = 0;
};

/// All |values|^n instances of length exactly n.
InstanceSpace enumerate_instances(std::size_t n, std::vector<Rational> values);

}  // namespace lookahead
