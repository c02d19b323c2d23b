// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "approxsys/formula.hpp"
#include "approxsys/system.hpp"

namespace approxsys {

/// theta(x1, x2) = x1 / x2 on R x (R \ {0}). Members satisfy a2*b = a1 and
/// (m+1)|a2| >= 1 + (n+1)(|b|+1).
ApproxSystem division_system();
bool division_member(const Quadruple& q);

/// The maximal system for the same quotient: (m+1)|a2| > 1 and the four
/// corner quotients ((m+1)a1 +- 1)/((m+1)a2 +- 1) lie in [b - 1/(n+1), b + 1/(n+1)].
ApproxSystem maximal_division_system();
bool maximal_division_member(const Quadruple& q);
/// The four corner quotients, or nothing when (m+1)|a2| <= 1.
std::optional<std::vector<Rat>> division_corners(const Point& a, Nat m);

/// sigma_k(a) = (-1)^k a^(2k) / (2 (2k)!) + sum_{i<k} (-1)^i a^(2i) / (2i)!
Rat sigma_k(const Rat& a, Nat k);

/// Union over k of the sets S_k: a^2 <= (2k+1)(2k+2) and
/// |b - sigma_k(a)| + a^(2k)/(2 (2k)!) + 1/(m+1) <= 1/(n+1).
ApproxSystem cosine_system();
bool cosine_member(const Quadruple& q);

/// Quadruples (a, m, b, n) for which the quantifier-free `formula` holds at
/// (a1..aN, b, 1/(m+1), 1/(n+1)).
ApproxSystem semialgebraic_system(PolyFormula formula, std::size_t dim,
                                  std::string name = "semialgebraic");

/// theta(x) = x^2: the exact condition that x^2 stays within 1/(n+1) of b on
/// the open interval of radius 1/(m+1) around a.
PolyFormula squaring_formula();

/// "division", "maximal-division", "cosine", "square".
std::optional<ApproxSystem> builtin_system(std::string_view name);
std::vector<std::string> builtin_system_names();

} // namespace approxsys
