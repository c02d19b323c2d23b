// SPDX-License-Identifier: Apache-2.0
//
// Reference computations for the tests. None of these call into the code
// under test beyond the Rat and Point value types.

#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "approxsys/formula.hpp"
#include "approxsys/point.hpp"
#include "approxsys/rat.hpp"

namespace ref {

using approxsys::BigInt;
using approxsys::Rat;

// An interval [lo, hi] containing cos x, of width at most `width`. Uses the
// fact that once the terms of an alternating series decrease, consecutive
// partial sums bracket the limit.
inline std::pair<Rat, Rat> cos_enclosure(const Rat& x, const Rat& width)
{
    const Rat x2 = x * x;
    Rat s_prev;
    Rat term(1);
    std::uint64_t i = 0;
    for (;; ++i) {
        Rat s_next = s_prev + ((i % 2 == 0) ? term : -term);
        Rat next_term = term * x2 / Rat::from_u64((2 * i + 1) * (2 * i + 2));
        // term_{i+1} <= term_i holds for every later index once x^2 <= (2i+1)(2i+2)
        bool decreasing = x2 <= Rat::from_u64((2 * i + 1) * (2 * i + 2));
        if (decreasing && i > 0 && term <= width) {
            return s_prev < s_next ? std::pair{s_prev, s_next} : std::pair{s_next, s_prev};
        }
        s_prev = s_next;
        term = next_term;
    }
}

// cos is decreasing on [0, pi], so on an enclosure [lo, hi] within [0, 3]
// the image is bracketed by the enclosures of cos hi and cos lo.
inline std::pair<Rat, Rat> cos_of_interval(const std::pair<Rat, Rat>& x, const Rat& width)
{
    return {cos_enclosure(x.second, width).first, cos_enclosure(x.first, width).second};
}

inline bool interval_within(const std::pair<Rat, Rat>& iv, const Rat& b, const Rat& tol)
{
    return approxsys::abs(b - iv.first) < tol && approxsys::abs(b - iv.second) < tol;
}

// Cantor pairing by walking the diagonals one cell at a time.
inline std::pair<std::uint64_t, std::uint64_t> walk_unpair(std::uint64_t k)
{
    std::uint64_t x = 0, y = 0;
    for (std::uint64_t i = 0; i < k; ++i) {
        if (x == 0) {
            x = y + 1;
            y = 0;
        } else {
            --x;
            ++y;
        }
    }
    return {x, y};
}

// Multivariate Horner: group by the exponent of the leading variable and
// recurse on the rest.
inline Rat horner(const std::vector<approxsys::Monomial>& terms, const std::vector<Rat>& vars,
                  std::size_t var = 0)
{
    if (terms.empty())
        return Rat();
    if (var == vars.size()) {
        Rat sum;
        for (const auto& t : terms)
            sum += Rat(t.coef);
        return sum;
    }
    std::map<unsigned, std::vector<approxsys::Monomial>> by_exp;
    for (const auto& t : terms)
        by_exp[t.exps[var]].push_back(t);
    const unsigned top = by_exp.rbegin()->first;
    Rat acc;
    for (unsigned e = top + 1; e-- > 0;) {
        acc *= vars[var];
        if (auto it = by_exp.find(e); it != by_exp.end())
            acc += horner(it->second, vars, var + 1);
    }
    return acc;
}

// floor(x * 2^bits) / 2^bits, within 2^-bits below x.
inline Rat dyadic_floor(const Rat& x, unsigned bits)
{
    BigInt scale = BigInt(1) << bits;
    BigInt num = x.numerator() * scale;
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.denominator().get_mpz_t());
    return Rat(q, scale);
}

} // namespace ref
