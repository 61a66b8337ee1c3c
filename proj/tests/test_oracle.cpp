#include <doctest.h>

#include "lookahead/adversaries.hpp"
#include "lookahead/oracle.hpp"
#include "support/reference.hpp"

using namespace lookahead;
using lookahead::testing::brute_force_opt;
using lookahead::testing::ints;

TEST_CASE("optimal makespan on the worked instances") {
    CHECK(optimal_makespan(make_instance(ints({1, 1, 2})), 2).makespan == Rational(2));
    CHECK(optimal_makespan(make_instance(ints({1, 1, 1, 6, 15, 12})), 2).makespan == Rational(18));
    CHECK(optimal_makespan(make_instance(ints({7, 4, 4, 7, 11})), 3).makespan == Rational(11));
    CHECK(optimal_makespan(make_instance(ints({2, 2, 2})), 3).makespan == Rational(2));
    CHECK(optimal_makespan(make_instance(ints({5})), 2).makespan == Rational(5));
}

TEST_CASE("fractional processing times are scaled exactly") {
    const auto inst = make_instance({Rational::parse("1/2"), Rational::parse("1/3"), Rational::parse("1/6"),
                                     Rational::parse("7/6")});
    CHECK(optimal_makespan(inst, 2).makespan == Rational::parse("7/6"));
    CHECK(optimal_makespan(inst, 3).makespan == Rational::parse("7/6"));
    CHECK(optimal_makespan(make_instance({Rational::parse("3/4"), Rational::parse("3/4")}), 2).makespan ==
          Rational::parse("3/4"));
}

TEST_CASE("witness is the lexicographically smallest optimum") {
    const auto inst = make_instance(ints({7, 4, 4, 7, 11}));
    const auto r = optimal_makespan(inst, 3);
    CHECK(r.witness == std::vector<int>{1, 1, 2, 2, 3});
    CHECK(Schedule::from_assignment(inst, r.witness, 3).makespan() == r.makespan);
    CHECK(exhaustive_makespan(inst, 3).witness == r.witness);
}

TEST_CASE("DP agrees with plain enumeration and with the reference brute force") {
    lookahead::testing::InstanceGenerator gen(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto times = gen.times(8, 9, trial % 3 == 0 ? 4 : 1);
        const auto inst = make_instance(times);
        for (int m : {2, 3}) {
            const auto dp = optimal_makespan(inst, m);
            const auto ex = exhaustive_makespan(inst, m);
            const auto ref = brute_force_opt(times, m);
            REQUIRE_MESSAGE(dp.makespan == ref, "[" << inst.to_string() << "] m=" << m);
            CHECK(ex.makespan == ref);
            CHECK(dp.witness == ex.witness);
            CHECK(Schedule::from_assignment(inst, dp.witness, m).makespan() == dp.makespan);
        }
    }
}

TEST_CASE("oracle is invariant under job permutation") {
    lookahead::testing::InstanceGenerator gen(5);
    for (int trial = 0; trial < 60; ++trial) {
        auto times = gen.times(9, 12);
        const auto base2 = optimal_makespan(make_instance(times), 2).makespan;
        const auto base3 = optimal_makespan(make_instance(times), 3).makespan;
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            std::shuffle(times.begin(), times.end(), gen.rng());
            CHECK(optimal_makespan(make_instance(times), 2).makespan == base2);
            CHECK(optimal_makespan(make_instance(times), 3).makespan == base3);
        }
    }
}

TEST_CASE("more than three machines use exhaustive search") {
    // Three 3s cannot share machines with 5 or 4 and stay at 5.
    const auto inst = make_instance(ints({5, 4, 3, 3, 3, 2}));
    CHECK(optimal_makespan(inst, 4).makespan == Rational(6));
    CHECK(optimal_makespan(make_instance(ints({5, 4, 3, 2, 3, 3})), 5).makespan == Rational(5));
    CHECK(optimal_makespan(inst, 4).makespan == brute_force_opt(ints({5, 4, 3, 3, 3, 2}), 4));
    CHECK_THROWS_AS(optimal_makespan(make_instance(std::vector<Rational>(13, Rational(1))), 4), CapacityExceeded);
}

TEST_CASE("capacity limits are reported, never approximated") {
    OracleLimits tight;
    tight.max_scaled_total = 100;
    CHECK_THROWS_AS(optimal_makespan(make_instance(ints({60, 50})), 2, tight), CapacityExceeded);
    CHECK(optimal_makespan(make_instance(ints({60, 40})), 2, tight).makespan == Rational(60));

    // Scaling 1/7919 and 1/7907 pushes the scaled total far beyond the default.
    const auto coprime = make_instance({Rational::parse("1/7919"), Rational::parse("1/7907"), Rational(3)});
    try {
        optimal_makespan(coprime, 2);
        FAIL("expected CapacityExceeded");
    } catch (const CapacityExceeded& e) {
        CHECK(std::string(e.what()).find("1/7919") != std::string::npos);
    }

    OracleLimits small_table;
    small_table.max_table_bits = 64;
    CHECK_THROWS_AS(optimal_makespan(make_instance(ints({30, 30, 30})), 3, small_table), CapacityExceeded);
}

TEST_CASE("lower bound and ratio") {
    CHECK(opt_lower_bound(make_instance(ints({1, 1, 2})), 2) == Rational(2));
    CHECK(opt_lower_bound(make_instance(ints({7, 4, 4, 7, 11})), 3) == Rational(11));
    CHECK(opt_lower_bound(make_instance(ints({5})), 2) == Rational(5));
    CHECK(opt_lower_bound(make_instance(ints({1, 1, 1})), 2) == Rational::parse("3/2"));

    CHECK(competitive_ratio(24, 18) == Rational::parse("4/3"));
    CHECK(competitive_ratio(15, 11) == Rational::parse("15/11"));
    CHECK(competitive_ratio(7, 7) == Rational(1));
    CHECK_THROWS_AS(competitive_ratio(1, 0), ZeroOpt);
    CHECK_THROWS_AS(optimal_makespan(make_instance(ints({1})), 1), InvalidParam);
}

TEST_CASE("lower bound never exceeds the optimum") {
    lookahead::testing::InstanceGenerator gen(99);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = gen.instance(10, 20, 3);
        for (int m : {2, 3}) CHECK(opt_lower_bound(inst, m) <= optimal_makespan(inst, m).makespan);
    }
}
