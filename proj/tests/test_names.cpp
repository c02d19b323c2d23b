// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <thread>

#include "doctest.h"

#include "approxsys/errors.hpp"
#include "approxsys/names.hpp"
#include "support/reference.hpp"

using namespace approxsys;

namespace {

const Rat kThird(1, 3);

// f(i) = 1/3 truncated to a dyadic with error at most 2^-(i+2).
OrdinaryName third_by_truncation()
{
    return OrdinaryName(1, [](Nat i) {
        if (i > (Nat{1} << 22))
            throw DomainError("test name only defined up to 2^22");
        return Point{ref::dyadic_floor(kThird, static_cast<unsigned>(i + 2))};
    });
}

} // namespace

TEST_CASE("constant names")
{
    OrdinaryName f = name_of_point(Point{1, 3});
    CHECK(f.dim() == 2);
    CHECK(f.approx(5) == Point{1, 3});
    CHECK(!check_name_consistency(f, 50));

    CauchyName h = ordinary_to_cauchy(f);
    CHECK(h.dim() == 2);
    for (Nat i = 0; i < 20; ++i)
        CHECK(h.approx(i) == Point{1, 3});

    OrdinaryName back = cauchy_to_ordinary(h);
    for (Nat n = 0; n <= 100; ++n)
        CHECK(back.approx(n) == Point{1, 3});
}

TEST_CASE("ordinary to Cauchy")
{
    OrdinaryName f = third_by_truncation();
    CHECK(!check_name_consistency(f, 60));
    CauchyName h = ordinary_to_cauchy(f);
    CHECK(h.approx(0) == f.approx(2));
    CHECK(h.approx(3) == f.approx(16));
    CHECK(!check_cauchy_consistency(h, 20));
    for (Nat i = 0; i < 20; ++i)
        for (Nat k = i + 1; k <= 20; ++k)
            CHECK(dist(h.approx(i), h.approx(k)) <= Rat(BigInt(1), BigInt(1) << i));
    CHECK_THROWS_AS(h.approx(63), DomainError);
}

TEST_CASE("Cauchy to ordinary index schedule")
{
    CHECK(cauchy_index_for(0) == 1);
    CHECK(cauchy_index_for(1) == 2);
    CHECK(cauchy_index_for(2) == 3);
    CHECK(cauchy_index_for(5) == 4);
    CHECK(cauchy_index_for(100) == 8);
    // the defining inequality, checked exactly around the chosen index
    for (Nat n = 0; n < 2000; ++n) {
        Nat i = cauchy_index_for(n);
        auto margin = [](Nat j) {
            return Rat(BigInt(1), BigInt(1) << j) + Rat(BigInt(1), BigInt(1) << (j + 1));
        };
        CHECK(margin(i) < unit(n));
        if (i > 0)
            CHECK(!(margin(i - 1) < unit(n)));
    }
}

TEST_CASE("round trip keeps the ordinary contract")
{
    OrdinaryName g = cauchy_to_ordinary(ordinary_to_cauchy(third_by_truncation()));
    for (Nat n = 0; n <= 100; ++n)
        CHECK(abs(g.approx(n)[0] - kThird) < unit(n));
    CHECK(!check_name_consistency(g, 100));
}

TEST_CASE("pairwise consistency detects a broken stream")
{
    OrdinaryName bad(1, [](Nat i) { return Point{Rat(i == 9 ? 2 : 0)}; });
    auto v = check_name_consistency(bad, 20);
    REQUIRE(v);
    CHECK(v->first == 0);
    CHECK(v->second == 9);

    CauchyName jumpy(1, [](Nat i) { return Point{Rat(i >= 4 ? 1 : 0)}; });
    auto w = check_cauchy_consistency(jumpy, 10);
    REQUIRE(w);
    CHECK(w->first == 1);
    CHECK(w->second == 4);
}

TEST_CASE("memoization")
{
    std::atomic<int> calls{0};
    OrdinaryName f(1, [&](Nat i) {
        ++calls;
        return Point{Rat::from_u64(i)};
    });
    const Point& first = f.approx(7);
    const Point& again = f.approx(7);
    CHECK(&first == &again);
    CHECK(calls == 1);

    OrdinaryName copy = f;
    CHECK(copy.approx(7) == Point{7});
    CHECK(calls == 1);

    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&] {
            for (Nat i = 0; i < 200; ++i)
                CHECK(f.approx(i) == Point{Rat::from_u64(i)});
        });
    for (auto& t : pool)
        t.join();
    CHECK(calls <= 4 * 200);

    OrdinaryName wrong_dim(2, [](Nat) { return Point{1}; });
    CHECK_THROWS_AS(wrong_dim.approx(0), DimensionError);
}
