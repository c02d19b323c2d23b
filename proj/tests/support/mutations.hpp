// SPDX-License-Identifier: Apache-2.0
//
// Deliberately broken variants of the built-in predicates, used to check
// that the verifier notices.

#pragma once

#include <algorithm>

#include "approxsys/builtin.hpp"

namespace mutant {

using namespace approxsys;

// Division with the "+1" dropped: (m+1)|a2| >= (n+1)(|b|+1).
inline bool division_without_one(const Quadruple& q)
{
    const Rat& a1 = q.a[0];
    const Rat& a2 = q.a[1];
    if (a2.is_zero() || a2 * q.b != a1)
        return false;
    return Rat::from_u64(q.m + 1) * a2.abs() >= Rat::from_u64(q.n + 1) * (q.b.abs() + Rat(1));
}

// Cosine without the a^(2k)/(2 (2k)!) term: |b - sigma_k(a)| + 1/(m+1) <= 1/(n+1)
// for some admissible k (searched up to a fixed bound).
inline bool cosine_without_error_term(const Quadruple& q)
{
    const Rat& a = q.a[0];
    const Rat slack = unit(q.n) - unit(q.m);
    for (Nat k = 0; k < 40; ++k) {
        if (a * a > Rat::from_u64((2 * k + 1) * (2 * k + 2)))
            continue;
        if (abs(q.b - sigma_k(a, k)) <= slack)
            return true;
    }
    return false;
}

// Maximal division read with the open interval (b - v, b + v). A subset of
// the maximal system, hence still sound.
inline bool maximal_division_open_interval(const Quadruple& q)
{
    auto corners = division_corners(q.a, q.m);
    if (!corners)
        return false;
    const Rat v = unit(q.n);
    return std::all_of(corners->begin(), corners->end(),
                       [&](const Rat& c) { return q.b - v < c && c < q.b + v; });
}

// Maximal division with its boundary case flipped: (m+1)|a2| >= 1 instead of
// > 1, skipping corners whose denominator vanishes.
inline bool maximal_division_boundary_flip(const Quadruple& q)
{
    const Rat s1 = Rat::from_u64(q.m + 1) * q.a[0];
    const Rat s2 = Rat::from_u64(q.m + 1) * q.a[1];
    if (s2.abs() < Rat(1))
        return false;
    const Rat v = unit(q.n);
    for (int num : {1, -1})
        for (int den : {1, -1}) {
            const Rat d = s2 + Rat(den);
            if (d.is_zero())
                continue;
            const Rat c = (s1 + Rat(num)) / d;
            if (c < q.b - v || c > q.b + v)
                return false;
        }
    return true;
}

inline ApproxSystem division_without_one_system()
{
    return dovetail_enumerator(division_without_one, 2, "division-without-one");
}

inline ApproxSystem cosine_without_error_term_system()
{
    return dovetail_enumerator(cosine_without_error_term, 1, "cosine-without-error");
}

inline ApproxSystem maximal_division_open_interval_system()
{
    return dovetail_enumerator(maximal_division_open_interval, 2, "maximal-division-open");
}

inline ApproxSystem maximal_division_boundary_flip_system()
{
    return dovetail_enumerator(maximal_division_boundary_flip, 2, "maximal-division-flip");
}

} // namespace mutant
