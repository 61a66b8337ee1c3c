#include "lookahead/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <optional>
#include <sstream>
#include <thread>

namespace lookahead {

namespace {

struct Partial {
    std::uint64_t checked = 0;
    std::optional<Instance> argmax;
    Rational max_ratio;
    std::vector<Violation> violations;
    std::exception_ptr error;
};

// Larger ratio wins; equal ratios go to the lexicographically smaller
// instance. Associative and commutative, so chunking cannot change it.
void absorb_max(Partial& into, const Rational& ratio, const Instance& instance) {
    if (!into.argmax || ratio > into.max_ratio || (ratio == into.max_ratio && instance < *into.argmax)) {
        into.max_ratio = ratio;
        into.argmax = instance;
    }
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string decimal(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", r.to_double());
    return buf;
}

void append_row(std::string& out, const ExperimentRow& row) {
    out += csv_field(row.scheduler) + ',' + csv_field(row.instance) + ',' + std::to_string(row.m) + ',' +
           std::to_string(row.k) + ',' + row.alg_makespan.to_string() + ',' + row.opt_makespan.to_string() + ',' +
           row.ratio.to_string() + ',' + decimal(row.ratio) + '\n';
}

}  // namespace

ExperimentRow run_one(SchedulerId scheduler, const Instance& instance, int m, std::size_t k,
                      std::string descriptor, const OracleLimits& limits) {
    const auto policy = make_policy(scheduler, m);
    const auto result = run_online(*policy, instance, k);
    const auto opt = optimal_makespan(instance, m, limits);

    ExperimentRow row;
    row.scheduler = to_string(scheduler);
    row.instance = descriptor.empty() ? instance.to_string() : std::move(descriptor);
    row.m = m;
    row.k = k;
    row.alg_makespan = result.schedule.makespan();
    row.opt_makespan = opt.makespan;
    row.ratio = competitive_ratio(row.alg_makespan, row.opt_makespan);
    return row;
}

VerificationReport verify_bound(SchedulerId scheduler, int m, std::size_t k, std::size_t n_max,
                                std::vector<Rational> values, const Rational& target_bound,
                                const VerifyOptions& options) {
    return verify_bound(scheduler, m, k, InstanceSpace(1, n_max, std::move(values)), target_bound, options);
}

VerificationReport verify_bound(SchedulerId scheduler, int m, std::size_t k, const InstanceSpace& space,
                                const Rational& target_bound, const VerifyOptions& options) {
    const auto policy = make_policy(scheduler, m);
    if (k < policy->min_lookahead())
        throw InvalidParam(policy->name() + " needs lookahead k >= " + std::to_string(policy->min_lookahead()));

    const std::uint64_t total = space.size();
    const std::uint64_t workers = std::clamp<std::uint64_t>(options.jobs, 1, std::max<std::uint64_t>(total, 1));
    std::vector<Partial> partials(workers);

    auto work = [&](std::uint64_t w) {
        Partial& part = partials[w];
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        try {
            for (auto idx = begin; idx < end; ++idx) {
                const auto instance = space.at(idx);
                const auto alg = run_online(*policy, instance, k).schedule.makespan();
                const auto opt = optimal_makespan(instance, m, options.limits).makespan;
                const auto ratio = competitive_ratio(alg, opt);
                ++part.checked;
                absorb_max(part, ratio, instance);
                if (ratio > target_bound) part.violations.push_back({instance, ratio});
            }
        } catch (...) {
            part.error = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        for (std::uint64_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    }

    Partial merged;
    for (auto& part : partials) {
        if (part.error) std::rethrow_exception(part.error);
        merged.checked += part.checked;
        if (part.argmax) absorb_max(merged, part.max_ratio, *part.argmax);
        std::move(part.violations.begin(), part.violations.end(), std::back_inserter(merged.violations));
    }

    return VerificationReport{to_string(scheduler), m,           k,
                              space.describe(),     merged.checked, merged.max_ratio,
                              *merged.argmax,       std::move(merged.violations), target_bound};
}

std::vector<ExperimentRow> run_family_sweep(SchedulerId scheduler, std::span<const FamilyId> families, int m,
                                            std::size_t k, const OracleLimits& limits) {
    std::vector<ExperimentRow> rows;
    rows.reserve(families.size());
    for (const auto& family : families)
        rows.push_back(run_one(scheduler, named_instance(family), m, k, to_string(family), limits));
    return rows;
}

std::string emit_csv(std::span<const ExperimentRow> rows) {
    std::string out = std::string(kCsvHeader) + '\n';
    for (const auto& row : rows) append_row(out, row);
    return out;
}

std::string emit_csv(const VerificationReport& report) {
    // Rows are rerun so each carries its own makespans.
    const auto scheduler = parse_scheduler_id(report.scheduler);
    std::vector<ExperimentRow> rows;
    rows.push_back(run_one(scheduler, report.argmax_instance, report.m, report.k));
    for (const auto& v : report.violations) rows.push_back(run_one(scheduler, v.instance, report.m, report.k));
    return emit_csv(rows);
}

std::string format_report(const VerificationReport& report) {
    std::ostringstream os;
    os << "scheduler: " << report.scheduler << '\n'
       << "m: " << report.m << '\n'
       << "k: " << report.k << '\n'
       << "space: " << report.space << '\n'
       << "instances_checked: " << report.instances_checked << '\n'
       << "target_bound: " << report.target_bound << '\n'
       << "max_ratio: " << report.max_ratio << " (" << decimal(report.max_ratio) << ")\n"
       << "argmax_instance: " << report.argmax_instance.to_string() << '\n'
       << "violations: " << report.violations.size() << '\n';
    for (const auto& v : report.violations)
        os << "  violation: [" << v.instance.to_string() << "] ratio " << v.ratio << '\n';
    return os.str();
}

}  // namespace lookahead
