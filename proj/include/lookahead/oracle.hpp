#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lookahead/core.hpp"

namespace lookahead {

struct OptResult {
    Rational makespan;
    // witness[i - 1] is the machine of job i; lexicographically smallest optimum.
    std::vector<int> witness;
};

struct OracleLimits {
    // Sum of processing times after scaling by the LCM of denominators.
    std::int64_t max_scaled_total = 20000;
    // Bits held by the per-job feasibility tables of the m = 2, 3 dynamic program.
    std::uint64_t max_table_bits = std::uint64_t{1} << 28;
    // Largest n accepted by the m^n exhaustive search.
    std::size_t max_exhaustive_jobs = 12;
};

/// Exact minimum makespan over all m^n assignments. m = 2 and m = 3 use a
/// dynamic program over reachable machine loads; m > 3 falls back to
/// exhaustive search. Throws CapacityExceeded instead of approximating.
OptResult optimal_makespan(const Instance& instance, int machines, const OracleLimits& limits = {});

/// Plain m^n enumeration. Independent of the dynamic program and used to
/// cross-check it.
OptResult exhaustive_makespan(const Instance& instance, int machines, const OracleLimits& limits = {});

/// max(p_max, T / m)
Rational opt_lower_bound(const Instance& instance, int machines);

/// alg / opt. Throws ZeroOpt when opt is zero.
Rational competitive_ratio(const Rational& alg_makespan, const Rational& opt_makespan);

}  // namespace lookahead
