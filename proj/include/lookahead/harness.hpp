#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lookahead/adversaries.hpp"
#include "lookahead/algorithms.hpp"
#include "lookahead/oracle.hpp"

namespace lookahead {

struct ExperimentRow {
    std::string scheduler;
    std::string instance;  // family id or the inline values
    int m = 2;
    std::size_t k = 1;
    Rational alg_makespan;
    Rational opt_makespan;
    Rational ratio;
};

/// Runs one scheduler on one instance and measures it against the exact
/// optimum. An empty descriptor is replaced by the inline values.
ExperimentRow run_one(SchedulerId scheduler, const Instance& instance, int m, std::size_t k,
                      std::string descriptor = {}, const OracleLimits& limits = {});

struct Violation {
    Instance instance;
    Rational ratio;
};

struct VerificationReport {
    std::string scheduler;
    int m = 2;
    std::size_t k = 1;
    std::string space;
    std::uint64_t instances_checked = 0;
    Rational max_ratio;
    Instance argmax_instance;  // lexicographically smallest among maximisers
    std::vector<Violation> violations;  // enumeration order
    Rational target_bound;
};

struct VerifyOptions {
    unsigned jobs = 1;  // worker threads; the report does not depend on it
    OracleLimits limits;
};

/// Checks ratio <= target_bound on every instance of length 1..n_max over
/// `values`. Violations are collected, never fatal.
VerificationReport verify_bound(SchedulerId scheduler, int m, std::size_t k, std::size_t n_max,
                                std::vector<Rational> values, const Rational& target_bound,
                                const VerifyOptions& options = {});

/// Same, over an arbitrary space.
VerificationReport verify_bound(SchedulerId scheduler, int m, std::size_t k, const InstanceSpace& space,
                                const Rational& target_bound, const VerifyOptions& options = {});

/// One row per family, in the given order.
std::vector<ExperimentRow> run_family_sweep(SchedulerId scheduler, std::span<const FamilyId> families, int m,
                                            std::size_t k, const OracleLimits& limits = {});

inline constexpr const char* kCsvHeader = "scheduler,instance,m,k,alg_makespan,opt_makespan,ratio,ratio_decimal";

/// Header plus one line per row. ratio_decimal is a rounded rendering for
/// display; the exact ratio is the a/b column.
std::string emit_csv(std::span<const ExperimentRow> rows);

/// The argmax row first, then one row per violation.
std::string emit_csv(const VerificationReport& report);

/// Multi-line human readable summary; violations are listed verbatim.
std::string format_report(const VerificationReport& report);

}  // namespace lookahead
