// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "approxsys/builtin.hpp"
#include "approxsys/errors.hpp"
#include "approxsys/evaluator.hpp"
#include "approxsys/verifier.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace approxsys;

namespace {

constexpr Nat kLarge = 100'000'000;

EvalResult value_of(const EvalOutcome& o)
{
    REQUIRE(std::holds_alternative<EvalResult>(o));
    return std::get<EvalResult>(o);
}

std::vector<Point> repeat(const Point& p, std::size_t len)
{
    return std::vector<Point>(len, p);
}

} // namespace

TEST_CASE("input ladder")
{
    CHECK(input_index_of_rung(0) == 0);
    CHECK(input_index_of_rung(1) == 1);
    CHECK(input_index_of_rung(4) == 15);
    CHECK(input_index_of_rung(63) == (Nat{1} << 63) - 1);
    CHECK_THROWS_AS(input_index_of_rung(64), DomainError);
}

TEST_CASE("apply on the built-in systems")
{
    auto r = value_of(apply(division_system(), name_of_point(Point{1, 3}), 2, Budget{kLarge}));
    CHECK(abs(r.value - Rat(1, 3)) < Rat(1, 3));
    CHECK(r.precision_index == 2);
    CHECK(r.search_steps <= kLarge);

    auto t = apply(division_system(), name_of_point(Point{1, 0}), 0, Budget{100000});
    REQUIRE(std::holds_alternative<Timeout>(t));
    CHECK(std::get<Timeout>(t).search_steps == 100000);

    auto c = value_of(apply(cosine_system(), name_of_point(Point{0}), 9, Budget{kLarge}));
    CHECK(abs(c.value - Rat(1)) < Rat(1, 10));

    CHECK_THROWS_AS(apply(division_system(), name_of_point(Point{1}), 0, Budget{10}),
                    DimensionError);
}

TEST_CASE("division evaluation is sound at random points")
{
    gen::Gen g(51);
    ApproxSystem div = division_system();
    for (int i = 0; i < 100; ++i) {
        Point xi{g.rat(1000, 100), g.nonzero_rat(1000, 100)};
        OrdinaryName f = name_of_point(xi);
        for (Nat n : {0u, 9u, 99u, 999u}) {
            auto r = value_of(apply(div, f, n, Budget{kLarge}));
            CHECK(abs(r.value - xi[0] / xi[1]) < unit(n));
        }
    }
}

TEST_CASE("names that are not constant")
{
    // f(i) = 1/3 + (-1)^i / (2 (i+1)), a valid name of 1/3
    OrdinaryName wobbly(1, [](Nat i) {
        Rat off = unit(i) / Rat(2);
        return Point{Rat(1, 3) + (i % 2 ? -off : off)};
    });
    for (Nat n : {0u, 9u, 99u}) {
        auto r = value_of(apply(*builtin_system("square"), wobbly, n, Budget{kLarge}));
        CHECK(abs(r.value - Rat(1, 9)) < unit(n));
        auto c = value_of(apply(cosine_system(), wobbly, n, Budget{kLarge}));
        auto cos_third = ref::cos_enclosure(Rat(1, 3), Rat(BigInt(1), BigInt(1) << 80));
        CHECK(ref::interval_within(cos_third, c.value, unit(n)));
    }
}

TEST_CASE("budget monotonicity of apply")
{
    gen::Gen g(53);
    ApproxSystem div = division_system();
    for (int i = 0; i < 30; ++i) {
        Point xi{g.rat(50, 9), g.nonzero_rat(50, 9)};
        OrdinaryName f = name_of_point(xi);
        Nat n = g.nat(200);
        auto first = value_of(apply(div, f, n, Budget{kLarge}));
        const Nat s = first.search_steps;
        CHECK(std::holds_alternative<Timeout>(apply(div, f, n, Budget{s - 1})));
        for (Nat extra : {0u, 1u, 1000u}) {
            auto again = value_of(apply(div, f, n, Budget{s + extra}));
            CHECK(again.value == first.value);
            CHECK(again.input_index == first.input_index);
            CHECK(again.search_steps == s);
        }
    }
}

TEST_CASE("budget schedules")
{
    auto sched = geometric_schedule();
    CHECK(sched(0).steps == 10000);
    CHECK(sched(3).steps == 80000);
    CHECK(sched(100).steps == ~Nat{0});
    CHECK(geometric_schedule(1)(63).steps == Nat{1} << 63);
    CHECK(geometric_schedule(1)(64).steps == ~Nat{0});
}

TEST_CASE("eval_name")
{
    OrdinaryName cos1 = eval_name(cosine_system(), name_of_point(Point{1}));
    CHECK(cos1.dim() == 1);
    CHECK(!check_name_consistency(cos1, 50));

    OrdinaryName zero = eval_name(division_system(), name_of_point(Point{0, 5}));
    for (Nat n = 0; n <= 50; ++n)
        CHECK(abs(zero.approx(n)[0]) < unit(n));
    CHECK(!check_name_consistency(zero, 50));

    OrdinaryName nowhere = eval_name(division_system(), name_of_point(Point{1, 0}),
                                     [](Nat) { return Budget{1000}; });
    try {
        (void)nowhere.approx(4);
        FAIL("expected a timeout");
    } catch (const TimeoutError& e) {
        CHECK(e.index() == 4);
    }
}

TEST_CASE("composition names cos(cos 1)")
{
    OrdinaryName inner = eval_name(cosine_system(), name_of_point(Point{1}));
    OrdinaryName outer = eval_name(cosine_system(), inner);
    const Rat width(BigInt(1), BigInt(1) << 60);
    auto expected = ref::cos_of_interval(ref::cos_enclosure(Rat(1), width), width);
    for (Nat n : {0u, 9u, 99u})
        CHECK(ref::interval_within(expected, outer.approx(n)[0], unit(n)));
    CHECK(!check_name_consistency(outer, 50));
}

TEST_CASE("operators on fragments")
{
    NameOperator op = operator_from_system(division_system());
    CHECK(op.dim() == 2);
    const Point p{1, 2};

    RunOutcome short_run = op.run(repeat(p, 3), 19, Budget{kLarge});
    CHECK(short_run.kind == RunOutcome::Kind::OracleMiss);
    CHECK(short_run.miss_index == 3);

    RunOutcome tight = op.run(repeat(p, 16), 19, Budget{10});
    CHECK(tight.kind == RunOutcome::Kind::OutOfBudget);

    RunOutcome full = op.run(repeat(p, 16), 19, Budget{kLarge});
    REQUIRE(full.kind == RunOutcome::Kind::Value);
    CHECK(abs(full.value - Rat(1, 2)) < Rat(1, 20));
    // the same value on longer fragments and larger budgets
    for (std::size_t len : {16u, 17u, 40u, 200u})
        for (Nat s : {full.steps, full.steps + 1, kLarge}) {
            RunOutcome r = op.run(repeat(p, len), 19, Budget{s});
            REQUIRE(r.kind == RunOutcome::Kind::Value);
            CHECK(r.value == full.value);
        }

    CHECK_THROWS_AS(op.run(repeat(Point{1}, 4), 0, Budget{10}), DimensionError);
    CHECK_THROWS_AS(NameOperator(0, [](std::span<const Point>, Nat, Budget) { return RunOutcome(); }),
                    DimensionError);
}

TEST_CASE("systems extracted from operators")
{
    NameOperator silent(1, [](std::span<const Point>, Nat, Budget b) {
        return RunOutcome::out_of_budget(b.steps);
    });
    ApproxSystem none = system_from_operator(silent, 1);
    for (Nat s : {0u, 10u, 1000u})
        CHECK(none.membership(Quadruple{Point{0}, 5, 0, 0}, Budget{s}) == Membership::NotYet);
    for (Nat k = 0; k < 300; ++k)
        CHECK(!none.enumerate(k));

    // T(g)(p) = 7 for every fragment: needs 2l+1 <= m, so m = 0 never certifies
    NameOperator seven(1, [](std::span<const Point>, Nat, Budget) { return RunOutcome::found(Rat(7), 1); });
    ApproxSystem sevens = system_from_operator(seven, 1);
    CHECK(sevens.membership(Quadruple{Point{3}, 0, 7, 0}, Budget{1000}) == Membership::NotYet);
    CHECK(sevens.membership(Quadruple{Point{3}, 1, 7, 0}, Budget{1000}) == Membership::Yes);
    CHECK(sevens.membership(Quadruple{Point{3}, 1, Rat(15, 2), 0}, Budget{1000}) == Membership::NotYet);
    for (Nat k = 0; k < 2000; ++k)
        if (auto q = sevens.enumerate(k)) {
            CHECK(q->m >= 1);
            CHECK(abs(q->b - Rat(7)) < unit(2 * q->n + 1));
        }

    ApproxSystem ext = system_from_operator(operator_from_system(division_system()), 2);
    auto r = value_of(apply(ext, name_of_point(Point{1, 2}), 9, Budget{kLarge}));
    CHECK(abs(r.value - Rat(1, 2)) < Rat(1, 10));

    // certified quadruples are sound: brute force on a coarse grid around a
    RefOracle oracle = division_oracle();
    int certified = 0;
    for (Point a : {Point{1, 2}, Point{Rat(101, 100), 2}, Point{3, 5}})
        for (Nat m : {31u, 40u})
            for (Nat n = 0; n < 3; ++n)
                for (Nat j = 0; j < 60; ++j) {
                    Quadruple q{a, m, decode_rat(j), n};
                    if (ext.membership(q, Budget{4096}) == Membership::Yes) {
                        ++certified;
                        CHECK(brute_force_condition1_check(q, oracle, 4));
                        CHECK(ext.membership(q, Budget{8192}) == Membership::Yes);
                    }
                }
    CHECK(certified >= 10);
    CHECK_THROWS_AS(system_from_operator(seven, 2), DimensionError);
}
