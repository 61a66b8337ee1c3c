#include <doctest.h>

#include "lookahead/algorithms.hpp"
#include "support/reference.hpp"

using namespace lookahead;
using lookahead::testing::ints;

namespace {

std::vector<int> machines(const DecisionTrace& trace) {
    std::vector<int> out;
    for (const auto& r : trace) out.push_back(r.machine);
    return out;
}

}  // namespace

TEST_CASE("list scheduling") {
    SUBCASE("<1,1,2> without lookahead") {
        const auto r = ls_schedule(make_instance(ints({1, 1, 2})), 2);
        CHECK(r.schedule.makespan() == Rational(3));
        CHECK(machines(r.trace) == std::vector<int>{1, 2, 1});
    }
    SUBCASE("single job") {
        CHECK(ls_schedule(make_instance(ints({5})), 2).schedule.makespan() == Rational(5));
    }
    SUBCASE("three machines, lowest index on ties") {
        // 7->M1, 4->M2, 4->M3, 7->M2 (4 < 7, M2 before M3), 11->M3
        const auto r = ls_schedule(make_instance(ints({7, 4, 4, 7, 11})), 3);
        CHECK(r.schedule.loads() == ints({7, 11, 15}));
        CHECK(r.schedule.makespan() == Rational(15));
    }
    CHECK_THROWS_AS(ListScheduling(1), SchedulerMachineMismatch);
}

TEST_CASE("two_la1_admit") {
    CHECK(two_la1_admit(0, 0, 1, 1));
    // Equality: 3 * 24 == 2 * 36.
    CHECK(two_la1_admit(9, 0, 15, 12));
    CHECK_FALSE(two_la1_admit(9, 0, 15, Rational::parse("23/2")));
    CHECK(two_la1_admit(1, 1, 1, 1));
    // 3 * 4 = 12 > 2 * 5 = 10
    CHECK_FALSE(two_la1_admit(3, 0, 1, 1));
}

TEST_CASE("two_la1_schedule") {
    SUBCASE("<1,1,2> with one job of lookahead") {
        const auto r = two_la1_schedule(make_instance(ints({1, 1, 2})));
        CHECK(r.schedule.loads() == ints({2, 2}));
        CHECK(r.schedule.makespan() == Rational(2));
    }
    SUBCASE("<1,1,1,6,15,12>") {
        const auto r = two_la1_schedule(make_instance(ints({1, 1, 1, 6, 15, 12})));
        CHECK(machines(r.trace) == std::vector<int>{1, 1, 1, 1, 1, 2});
        CHECK(r.schedule.loads() == ints({24, 12}));
        CHECK(r.schedule.makespan() == Rational(24));
    }
    SUBCASE("<1,1,1,1,7,17,14>: the third unit job goes to M2") {
        // 3 * 3 = 9 > 2 * (2 + 0 + 1 + 1) = 8
        const auto r = two_la1_schedule(make_instance(ints({1, 1, 1, 1, 7, 17, 14})));
        CHECK(machines(r.trace) == std::vector<int>{1, 1, 2, 1, 1, 1, 2});
        CHECK(r.schedule.makespan() == Rational(27));
    }
    SUBCASE("six unit jobs") {
        // 1<=4/3 M1; 2<=2 M1; 3>8/3 M2; 3<=10/3 M1; 4<=4 M1; last -> lighter M2
        const auto r = two_la1_schedule(make_instance(ints({1, 1, 1, 1, 1, 1})));
        CHECK(machines(r.trace) == std::vector<int>{1, 1, 2, 1, 1, 2});
        CHECK(r.schedule.makespan() == Rational(4));
    }
    SUBCASE("single job") {
        const auto r = two_la1_schedule(make_instance(ints({5})));
        CHECK(r.schedule.makespan() == Rational(5));
    }
    SUBCASE("last job on tied loads goes to M2") {
        // <1,2,1,4>: M1, M2, M1, then loads (2, 2).
        const auto r = two_la1_schedule(make_instance(ints({1, 2, 1, 4})));
        CHECK(machines(r.trace) == std::vector<int>{1, 2, 1, 2});
        CHECK(r.schedule.makespan() == Rational(6));
    }
}

TEST_CASE("equal jobs leave floor(2n/3) on M1") {
    for (const auto& x : {Rational(1), Rational(7), Rational::parse("5/3")}) {
        for (std::size_t n = 1; n <= 30; ++n) {
            const auto r = two_la1_schedule(make_instance(std::vector<Rational>(n, x)));
            const auto on_m1 = std::count(r.schedule.assignment().begin(), r.schedule.assignment().end(), 1);
            CHECK_MESSAGE(static_cast<std::size_t>(on_m1) == 2 * n / 3, "n = " << n << ", x = " << x);
        }
    }
}

TEST_CASE("three_la1_admit") {
    // 33*16 = 528 > 16*32 = 512 and > 15*32 = 480
    CHECK(three_la1_admit(0, 0, 0, 16, 16) == 3);
    // equality: 33*16 == 16*33
    CHECK(three_la1_admit(0, 0, 16, 16, 1) == 1);
    CHECK(three_la1_admit(0, 0, 0, 1, 1) == 3);
    // 33*15 = 495 > 16*30 = 480, 33*7 = 231 <= 15*30 = 450
    CHECK(three_la1_admit(8, 0, 7, 7, 8) == 2);
}

TEST_CASE("three_la1_schedule") {
    SUBCASE("<7,4,4,7,11>") {
        const auto r = three_la1_schedule(make_instance(ints({7, 4, 4, 7, 11})));
        CHECK(machines(r.trace) == std::vector<int>{3, 1, 1, 1, 2});
        CHECK(r.schedule.loads() == ints({15, 11, 7}));
        CHECK(r.schedule.makespan() == Rational(15));
    }
    SUBCASE("<16,16,1>") {
        const auto r = three_la1_schedule(make_instance(ints({16, 16, 1})));
        CHECK(machines(r.trace) == std::vector<int>{3, 1, 2});
        CHECK(r.schedule.makespan() == Rational(16));
    }
    SUBCASE("<17,14,1,1>") {
        const auto r = three_la1_schedule(make_instance(ints({17, 14, 1, 1})));
        CHECK(machines(r.trace) == std::vector<int>{3, 1, 1, 2});
        CHECK(r.schedule.makespan() == Rational(17));
    }
    SUBCASE("<1,1,14,17>") {
        const auto r = three_la1_schedule(make_instance(ints({1, 1, 14, 17})));
        CHECK(machines(r.trace) == std::vector<int>{3, 1, 1, 2});
        CHECK(r.schedule.makespan() == Rational(17));
    }
    SUBCASE("<16,16,16,16>") {
        // 16 -> M3; 16 -> M1; 33*32 > 16*64 so 16 -> M2; last job on a tie -> M1
        const auto r = three_la1_schedule(make_instance(ints({16, 16, 16, 16})));
        CHECK(machines(r.trace) == std::vector<int>{3, 1, 2, 1});
        CHECK(r.schedule.loads() == ints({32, 16, 16}));
    }
}

TEST_CASE("policy factory enforces machine counts") {
    CHECK_THROWS_AS(make_policy(SchedulerId::two_la1, 3), SchedulerMachineMismatch);
    CHECK_THROWS_AS(make_policy(SchedulerId::three_la1, 2), SchedulerMachineMismatch);
    CHECK_THROWS_AS(make_policy(SchedulerId::ls, 1), SchedulerMachineMismatch);
    CHECK(make_policy(SchedulerId::ls, 5)->machine_count() == 5);
    CHECK(parse_scheduler_id("3la1") == SchedulerId::three_la1);
    CHECK_THROWS_AS(parse_scheduler_id("greedy"), InvalidParam);
}

TEST_CASE("lookahead policies need k >= 1") {
    const auto inst = make_instance(ints({1, 2}));
    CHECK_THROWS_AS(run_online(TwoLookaheadOne{}, inst, 0), InvalidParam);
    CHECK_NOTHROW(run_online(ListScheduling(2), inst, 0));
    // Larger k only widens the window; the decision uses p_{i+1}.
    CHECK(run_online(TwoLookaheadOne{}, inst, 3).schedule.assignment() ==
          two_la1_schedule(inst).schedule.assignment());
}

TEST_CASE("decision trace records windows and running loads") {
    const auto inst = make_instance(ints({7, 4, 4, 7, 11}));
    const auto r = three_la1_schedule(inst);
    REQUIRE(r.trace.size() == inst.size());
    std::vector<Rational> loads(3);
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const auto& rec = r.trace[i];
        CHECK(rec.job == i + 1);
        CHECK(rec.window == lookahead_window(inst, i + 1, 1));
        loads[static_cast<std::size_t>(rec.machine - 1)] += inst.time(i + 1);
        CHECK(rec.loads_after == loads);
    }
}
