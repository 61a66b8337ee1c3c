#include "lookahead/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace lookahead {

namespace {

struct ScaledInstance {
    std::vector<std::int64_t> times;
    std::int64_t total = 0;
    BigInt scale;
};

// Multiplies every processing time by the LCM of the denominators.
ScaledInstance scale_to_integers(const Instance& instance, const BigInt& max_total) {
    BigInt scale = 1;
    for (const auto& p : instance.times()) scale = boost::multiprecision::lcm(scale, p.denominator());

    std::vector<BigInt> scaled;
    BigInt total = 0;
    for (const auto& p : instance.times()) {
        scaled.push_back(p.numerator() * (scale / p.denominator()));
        total += scaled.back();
    }
    if (total > max_total)
        throw CapacityExceeded("scaled total " + total.str() + " of instance [" + instance.to_string() +
                               "] exceeds the oracle limit " + max_total.str());

    ScaledInstance out;
    out.scale = scale;
    out.total = static_cast<std::int64_t>(total);
    for (const auto& v : scaled) out.times.push_back(static_cast<std::int64_t>(v));
    return out;
}

// Reachable-load dynamic program for 2 or 3 machines. A state stores the
// loads of machines 1..m-1; the load of machine m is implied by the prefix
// total, so a job placed on machine m leaves the state index unchanged.
class LoadGrid {
public:
    LoadGrid(int dims, std::int64_t bound) : dims_(dims), side_(bound + 1) {
        cells_ = dims == 1 ? static_cast<std::uint64_t>(side_)
                           : static_cast<std::uint64_t>(side_) * static_cast<std::uint64_t>(side_);
        stride_ = {1, side_};
    }

    std::uint64_t cells() const { return cells_; }
    std::int64_t stride(int j) const { return stride_[static_cast<std::size_t>(j)]; }

    std::array<std::int64_t, 2> decode(std::uint64_t idx) const {
        const auto i = static_cast<std::int64_t>(idx);
        if (dims_ == 1) return {i, 0};
        return {i % side_, i / side_};
    }

    std::int64_t explicit_sum(std::uint64_t idx) const {
        const auto l = decode(idx);
        return l[0] + l[1];
    }

private:
    int dims_;
    std::int64_t side_;
    std::uint64_t cells_;
    std::array<std::int64_t, 2> stride_;
};

void check_table(std::uint64_t bits, const OracleLimits& limits, const Instance& instance) {
    if (bits > limits.max_table_bits)
        throw CapacityExceeded("dynamic program for instance [" + instance.to_string() + "] needs " +
                               std::to_string(bits) + " table bits, limit is " +
                               std::to_string(limits.max_table_bits));
}

OptResult dp_makespan(const Instance& instance, int machines, const OracleLimits& limits) {
    const auto scaled = scale_to_integers(instance, BigInt(limits.max_scaled_total));
    const auto& p = scaled.times;
    const std::size_t n = p.size();
    const int dims = machines - 1;

    // Any feasible schedule bounds the optimum; list scheduling is cheap.
    std::int64_t upper = 0;
    {
        std::vector<std::int64_t> loads(static_cast<std::size_t>(machines), 0);
        for (auto v : p) {
            auto it = std::min_element(loads.begin(), loads.end());
            *it += v;
        }
        upper = *std::max_element(loads.begin(), loads.end());
    }

    // Forward pass: best reachable max load.
    std::int64_t best = 0;
    {
        const LoadGrid grid(dims, upper);
        check_table(2 * grid.cells(), limits, instance);
        std::vector<bool> cur(grid.cells()), next(grid.cells());
        cur[0] = true;
        std::int64_t prefix = 0;
        for (const auto v : p) {
            std::fill(next.begin(), next.end(), false);
            for (std::uint64_t idx = 0; idx < grid.cells(); ++idx) {
                if (!cur[idx]) continue;
                const auto l = grid.decode(idx);
                for (int j = 0; j < dims; ++j)
                    if (l[static_cast<std::size_t>(j)] + v <= upper) next[idx + static_cast<std::uint64_t>(v * grid.stride(j))] = true;
                if (prefix - grid.explicit_sum(idx) + v <= upper) next[idx] = true;
            }
            std::swap(cur, next);
            prefix += v;
        }
        best = std::numeric_limits<std::int64_t>::max();
        for (std::uint64_t idx = 0; idx < grid.cells(); ++idx) {
            if (!cur[idx]) continue;
            const auto l = grid.decode(idx);
            best = std::min(best, std::max({l[0], l[1], scaled.total - grid.explicit_sum(idx)}));
        }
    }

    // Backward pass: feasible[i] holds states after i jobs from which the
    // remaining jobs fit under `best`. Walking it forward picks the
    // lexicographically smallest witness.
    const LoadGrid grid(dims, best);
    check_table(static_cast<std::uint64_t>(n + 1) * grid.cells(), limits, instance);
    std::vector<std::int64_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + p[i];

    std::vector<std::vector<bool>> feasible(n + 1, std::vector<bool>(grid.cells()));
    auto implied_ok = [&](std::uint64_t idx, std::size_t i) {
        const auto implied = prefix[i] - grid.explicit_sum(idx);
        return implied >= 0 && implied <= best;
    };
    for (std::uint64_t idx = 0; idx < grid.cells(); ++idx) feasible[n][idx] = implied_ok(idx, n);
    for (std::size_t i = n; i-- > 0;) {
        const auto v = p[i];
        for (std::uint64_t idx = 0; idx < grid.cells(); ++idx) {
            if (!implied_ok(idx, i)) continue;
            const auto l = grid.decode(idx);
            bool ok = feasible[i + 1][idx];
            for (int j = 0; j < dims && !ok; ++j)
                ok = l[static_cast<std::size_t>(j)] + v <= best &&
                     feasible[i + 1][idx + static_cast<std::uint64_t>(v * grid.stride(j))];
            feasible[i][idx] = ok;
        }
    }

    OptResult result;
    result.makespan = Rational(BigInt(best), scaled.scale);
    std::uint64_t state = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = p[i];
        const auto l = grid.decode(state);
        int chosen = machines;
        for (int j = 0; j < dims; ++j) {
            if (l[static_cast<std::size_t>(j)] + v > best) continue;
            const auto moved = state + static_cast<std::uint64_t>(v * grid.stride(j));
            if (feasible[i + 1][moved]) {
                chosen = j + 1;
                state = moved;
                break;
            }
        }
        result.witness.push_back(chosen);
    }
    return result;
}

void check_machines(int machines) {
    if (machines < 2) throw InvalidParam("machine count must be at least 2, got " + std::to_string(machines));
}

}  // namespace

OptResult exhaustive_makespan(const Instance& instance, int machines, const OracleLimits& limits) {
    check_machines(machines);
    const std::size_t n = instance.size();
    if (n > limits.max_exhaustive_jobs)
        throw CapacityExceeded("exhaustive search over " + std::to_string(n) + " jobs exceeds the limit of " +
                               std::to_string(limits.max_exhaustive_jobs));
    const auto scaled = scale_to_integers(instance, BigInt(std::numeric_limits<std::int64_t>::max() / 2));

    // Odometer over assignments with job 1 as the most significant digit, so
    // the first optimum met is the lexicographically smallest.
    std::vector<int> digits(n, 0);
    std::vector<std::int64_t> loads(static_cast<std::size_t>(machines));
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<int> best_digits;
    while (true) {
        std::fill(loads.begin(), loads.end(), 0);
        for (std::size_t i = 0; i < n; ++i) loads[static_cast<std::size_t>(digits[i])] += scaled.times[i];
        const auto makespan = *std::max_element(loads.begin(), loads.end());
        if (makespan < best) {
            best = makespan;
            best_digits = digits;
        }
        std::size_t pos = n;
        while (pos > 0 && digits[pos - 1] == machines - 1) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
    }

    OptResult result;
    result.makespan = Rational(BigInt(best), scaled.scale);
    for (int d : best_digits) result.witness.push_back(d + 1);
    return result;
}

OptResult optimal_makespan(const Instance& instance, int machines, const OracleLimits& limits) {
    check_machines(machines);
    if (machines <= 3) return dp_makespan(instance, machines, limits);
    return exhaustive_makespan(instance, machines, limits);
}

Rational opt_lower_bound(const Instance& instance, int machines) {
    check_machines(machines);
    return std::max(instance.max_time(), instance.total() / Rational(machines));
}

Rational competitive_ratio(const Rational& alg_makespan, const Rational& opt_makespan) {
    if (opt_makespan.sign() == 0) throw ZeroOpt();
    return alg_makespan / opt_makespan;
}

}  // namespace lookahead
