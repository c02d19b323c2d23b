// SPDX-License-Identifier: Apache-2.0

#include "approxsys/builtin.hpp"

#include <algorithm>

#include "approxsys/errors.hpp"

namespace approxsys {

namespace {

Rat scaled(Nat m, const Rat& x)
{
    return Rat::from_u64(m) * x + x; // (m+1) x
}

} // namespace

// ---------------------------------------------------------------------------
// division

bool division_member(const Quadruple& q)
{
    const Rat& a1 = q.a[0];
    const Rat& a2 = q.a[1];
    if (a2.is_zero() || a2 * q.b != a1)
        return false;
    Rat lhs = scaled(q.m, a2.abs());
    Rat rhs = Rat(1) + scaled(q.n, q.b.abs() + Rat(1));
    return lhs >= rhs;
}

ApproxSystem division_system()
{
    return dovetail_enumerator(division_member, 2, "division", [](const Point& a, Nat, Nat) {
        return a[1].is_zero() ? std::vector<Rat>{} : std::vector<Rat>{a[0] / a[1]};
    });
}

// ---------------------------------------------------------------------------
// maximal division

std::optional<std::vector<Rat>> division_corners(const Point& a, Nat m)
{
    if (a.dim() != 2)
        throw DimensionError("division_corners: expected a point of dimension 2");
    Rat s1 = scaled(m, a[0]);
    Rat s2 = scaled(m, a[1]);
    if (s2.abs() <= Rat(1))
        return std::nullopt;
    return std::vector<Rat>{(s1 + 1) / (s2 + 1), (s1 + 1) / (s2 - 1), (s1 - 1) / (s2 + 1),
                            (s1 - 1) / (s2 - 1)};
}

bool maximal_division_member(const Quadruple& q)
{
    auto corners = division_corners(q.a, q.m);
    if (!corners)
        return false;
    const Rat v = unit(q.n);
    const Rat lo = q.b - v;
    const Rat hi = q.b + v;
    return std::all_of(corners->begin(), corners->end(),
                       [&](const Rat& c) { return lo <= c && c <= hi; });
}

ApproxSystem maximal_division_system()
{
    return dovetail_enumerator(
        maximal_division_member, 2, "maximal-division", [](const Point& a, Nat m, Nat) {
            auto corners = division_corners(a, m);
            if (!corners)
                return std::vector<Rat>{};
            auto [lo, hi] = std::minmax_element(corners->begin(), corners->end());
            return std::vector<Rat>{(*lo + *hi) / Rat(2)};
        });
}

// ---------------------------------------------------------------------------
// cosine

Rat sigma_k(const Rat& a, Nat k)
{
    Rat sum;
    Rat power(1);    // a^(2i)
    BigInt fact = 1; // (2i)!
    for (Nat i = 0; i < k; ++i) {
        Rat term = power / Rat(fact);
        sum += (i % 2 == 0) ? term : -term;
        power *= a * a;
        fact *= (2 * i + 1) * (2 * i + 2);
    }
    Rat last = power / Rat(BigInt(fact * 2));
    return sum + ((k % 2 == 0) ? last : -last);
}

namespace {

// Walks k = 0, 1, ... maintaining sigma_k(a) and the error term
// a^(2k) / (2 (2k)!) incrementally. `visit` sees admissible k only
// (a^2 <= (2k+1)(2k+2)) and returns true to stop.
template <class Visit>
void walk_sigma(const Rat& a, Visit&& visit)
{
    const Rat a2 = a * a;
    Rat partial;   // sum_{i<k} (-1)^i a^(2i)/(2i)!
    Rat term(1);   // a^(2k)/(2k)!
    for (Nat k = 0;; ++k) {
        const Rat bound = Rat::from_u64((2 * k + 1) * (2 * k + 2));
        if (a2 <= bound) {
            const Rat half = term / Rat(2);
            const Rat sigma = partial + ((k % 2 == 0) ? half : -half);
            if (visit(k, sigma, half))
                return;
        }
        partial += (k % 2 == 0) ? term : -term;
        term *= a2 / bound;
    }
}

} // namespace

bool cosine_member(const Quadruple& q)
{
    // |b - sigma_k| + error_k >= 0, so m < n (1/(m+1) > 1/(n+1)) never fits.
    if (q.m < q.n)
        return false;
    const Rat u = unit(q.m);
    const Rat v = unit(q.n);
    bool member = false;
    // For admissible k, |sigma_k(a) - cos a| <= error_k, so once
    // |b - sigma_k| - error_k + u > v no larger k can succeed either. Since
    // cos a is irrational for rational a != 0, one of the two exits fires.
    walk_sigma(q.a[0], [&](Nat, const Rat& sigma, const Rat& error) {
        const Rat gap = abs(q.b - sigma);
        if (gap + error + u <= v) {
            member = true;
            return true;
        }
        return gap - error + u > v;
    });
    return member;
}

ApproxSystem cosine_system()
{
    return dovetail_enumerator(cosine_member, 1, "cosine", [](const Point& a, Nat m, Nat n) {
        if (m < n)
            return std::vector<Rat>{};
        const Rat slack = unit(n) - unit(m);
        std::vector<Rat> out;
        walk_sigma(a[0], [&](Nat, const Rat& sigma, const Rat& error) {
            if (error <= slack) {
                out.push_back(sigma);
                return true;
            }
            // error_k is non-increasing from here on, but reaches 0 only at a = 0
            return slack.is_zero() && !a[0].is_zero();
        });
        return out;
    });
}

// ---------------------------------------------------------------------------
// semialgebraic

ApproxSystem semialgebraic_system(PolyFormula formula, std::size_t dim, std::string name)
{
    if (dim == 0)
        throw FormatError("semialgebraic_system: dimension must be positive");
    formula.validate(dim + 3);
    return dovetail_enumerator(
        [formula = std::move(formula)](const Quadruple& q) {
            std::vector<Rat> vars(q.a.coords());
            vars.push_back(q.b);
            vars.push_back(unit(q.m));
            vars.push_back(unit(q.n));
            return formula.eval(vars);
        },
        dim, std::move(name));
}

PolyFormula squaring_formula()
{
    // variables: a, b, u, v
    auto mono = [](long c, unsigned ea, unsigned eb, unsigned eu, unsigned ev) {
        return Monomial{BigInt(c), {ea, eb, eu, ev}};
    };
    auto ge = [](std::vector<Monomial> t) {
        return PolyFormula::atom(Polynomial(std::move(t)), Relation::GreaterEqual);
    };
    auto gt = [](std::vector<Monomial> t) {
        return PolyFormula::atom(Polynomial(std::move(t)), Relation::Greater);
    };

    // (a-u)^2 >= b - v,  b + v >= (a-u)^2,  (a+u)^2 >= b - v,  b + v >= (a+u)^2
    auto low_minus = ge({mono(1, 2, 0, 0, 0), mono(-2, 1, 0, 1, 0), mono(1, 0, 0, 2, 0),
                         mono(-1, 0, 1, 0, 0), mono(1, 0, 0, 0, 1)});
    auto high_minus = ge({mono(1, 0, 1, 0, 0), mono(1, 0, 0, 0, 1), mono(-1, 2, 0, 0, 0),
                          mono(2, 1, 0, 1, 0), mono(-1, 0, 0, 2, 0)});
    auto low_plus = ge({mono(1, 2, 0, 0, 0), mono(2, 1, 0, 1, 0), mono(1, 0, 0, 2, 0),
                        mono(-1, 0, 1, 0, 0), mono(1, 0, 0, 0, 1)});
    auto high_plus = ge({mono(1, 0, 1, 0, 0), mono(1, 0, 0, 0, 1), mono(-1, 2, 0, 0, 0),
                         mono(-2, 1, 0, 1, 0), mono(-1, 0, 0, 2, 0)});

    // Interval (a-u, a+u) clear of 0: x^2 ranges strictly between the endpoint squares.
    auto clear_of_zero = PolyFormula::disj({ge({mono(1, 1, 0, 0, 0), mono(-1, 0, 0, 1, 0)}),
                                            ge({mono(-1, 1, 0, 0, 0), mono(-1, 0, 0, 1, 0)})});
    auto monotone_case =
        PolyFormula::conj({clear_of_zero, low_minus, high_minus, low_plus, high_plus});

    // 0 inside the interval: x^2 ranges over [0, max endpoint square).
    auto around_zero = PolyFormula::conj({gt({mono(1, 0, 0, 1, 0), mono(-1, 1, 0, 0, 0)}),
                                          gt({mono(1, 0, 0, 1, 0), mono(1, 1, 0, 0, 0)}),
                                          gt({mono(1, 0, 0, 0, 1), mono(-1, 0, 1, 0, 0)}),
                                          high_minus, high_plus});

    return PolyFormula::disj({monotone_case, around_zero});
}

// ---------------------------------------------------------------------------

std::optional<ApproxSystem> builtin_system(std::string_view name)
{
    if (name == "division")
        return division_system();
    if (name == "maximal-division")
        return maximal_division_system();
    if (name == "cosine")
        return cosine_system();
    if (name == "square")
        return semialgebraic_system(squaring_formula(), 1, "square");
    return std::nullopt;
}

std::vector<std::string> builtin_system_names()
{
    return {"division", "maximal-division", "cosine", "square"};
}

} // namespace approxsys
