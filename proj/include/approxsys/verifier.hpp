// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "approxsys/system.hpp"

namespace approxsys {

/// Reference implementation of the function a system claims to approximate.
struct RefOracle {
    /// |eval(xi, eps) - theta(xi)| <= eps. Exact oracles may be called with eps = 0.
    std::function<Rat(const Point&, const Rat&)> eval;
    std::function<bool(const Point&)> domain_test;
    bool exact = false;
    std::string name;
};

RefOracle division_oracle();
/// Alternating Taylor series, rounded to a dyadic within eps.
RefOracle cosine_oracle();
RefOracle square_oracle();
/// Oracle for a built-in system name.
std::optional<RefOracle> builtin_oracle(std::string_view name);

struct Witness {
    Quadruple quad;
    Point xi;
};

struct Verdict {
    enum class Outcome { Pass, CounterExample, Inconclusive };

    Outcome outcome = Outcome::Pass;
    std::optional<Witness> witness; // set exactly for CounterExample
    std::string diagnostics;
    Nat seed = 0;
    Nat samples = 0; // checks performed
};

struct Condition1Options {
    /// Enumeration indices scanned before giving up on finding more quadruples.
    Nat max_scan = 2'000'000;
};

/// Samples quadruples from sys.enumerate and, for each, points xi in the
/// open ball of radius 1/(m+1) around a: a itself, the corners at
/// 1/(m+1) - 1/(m+1)^2, corners creeping toward the boundary, and random
/// interior points. A check fails when |b - theta(xi)| >= 1/(n+1). Inexact
/// oracles are queried with eps = 1/(10 (n+1)^2), refined three times by a
/// factor of 100 while the answer lies within eps of the bound; what still
/// straddles it makes the verdict Inconclusive, never Pass.
Verdict verify_condition1(const ApproxSystem& sys, const RefOracle& oracle, Nat quad_samples,
                          Nat xi_samples, Nat seed, Condition1Options options = {});

/// Looks for m in 0..m_cap such that every sampled a within 1/(m+1) of xi has
/// some b with membership((a, m, b, n), budget) = Yes. Pass names the m
/// found; otherwise Inconclusive.
Verdict verify_condition2(const ApproxSystem& sys, const RefOracle& oracle, const Point& xi,
                          Nat n, Nat m_cap, Nat a_samples, Budget budget, Nat seed);

/// Scans grid^dim cell centres of the open cube of radius 1/(m+1) around q.a
/// and returns false iff one of them (inside the domain) violates
/// |b - theta(xi)| < 1/(n+1). grid = 1 checks xi = a alone.
bool brute_force_condition1_check(const Quadruple& q, const RefOracle& oracle, Nat grid);

/// Witness xi of the first violation, if any.
std::optional<Point> brute_force_condition1_witness(const Quadruple& q, const RefOracle& oracle,
                                                    Nat grid);

std::string_view outcome_name(Verdict::Outcome o);

nlohmann::json quadruple_to_json(const Quadruple& q);
Quadruple quadruple_from_json(const nlohmann::json& j);
/// {"outcome", "witness"?, "seed", "samples", "diagnostics"}
nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& j);

} // namespace approxsys
