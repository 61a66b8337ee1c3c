#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's scaled-integer dynamic program: plain recursion over assignments
// in exact rational arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "lookahead/core.hpp"

namespace lookahead::testing {

inline Rational brute_force_opt(const std::vector<Rational>& times, int machines) {
    std::vector<Rational> loads(static_cast<std::size_t>(machines));
    Rational best = -1;
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == times.size()) {
            const auto makespan = *std::max_element(loads.begin(), loads.end());
            if (best.sign() < 0 || makespan < best) best = makespan;
            return;
        }
        for (auto& l : loads) {
            l += times[i];
            place(i + 1);
            l -= times[i];
        }
    };
    place(0);
    return best;
}

/// Seeded generator of small random instances for property checks.
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed) : rng_(seed) {}

    std::vector<Rational> times(std::size_t max_len, std::int64_t max_value, std::int64_t max_den = 1) {
        std::uniform_int_distribution<std::size_t> len(1, max_len);
        std::uniform_int_distribution<std::int64_t> num(1, max_value);
        std::uniform_int_distribution<std::int64_t> den(1, max_den);
        std::vector<Rational> out(len(rng_));
        for (auto& v : out) v = Rational(BigInt(num(rng_)), BigInt(den(rng_)));
        return out;
    }

    Instance instance(std::size_t max_len, std::int64_t max_value, std::int64_t max_den = 1) {
        return make_instance(times(max_len, max_value, max_den));
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline std::vector<Rational> ints(std::initializer_list<std::int64_t> values) {
    return {values.begin(), values.end()};
}

}  // namespace lookahead::testing
