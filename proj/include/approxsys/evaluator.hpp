// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <variant>

#include "approxsys/names.hpp"
#include "approxsys/system.hpp"

namespace approxsys {

struct EvalResult {
    Rat value;            // |value - theta(xi)| < 1/(precision_index+1)
    Nat precision_index = 0;
    Nat input_index = 0;  // the name index l whose approximation certified `value`
    Nat search_steps = 0; // <= the budget supplied
};

/// The search exhausted its budget. Either xi lies outside the domain, the
/// name is invalid, or the budget was too small; these are indistinguishable.
struct Timeout {
    Nat precision_index = 0;
    Nat search_steps = 0;
};

using EvalOutcome = std::variant<EvalResult, Timeout>;

/// One value of theta(xi) to within 1/(n+1), found by dovetailing over
/// (input rung i, output candidate j, membership budget s).
///
/// Step k tests the quadruple (f(l), l, b_j, n) with l = 2^i - 1, where b_j
/// runs through the system's suggestions for (f(l), l, n) and then through
/// every rational code. For decidable systems the budget coordinate is
/// degenerate and (i, j) = unpair2(k); otherwise (i, j, s) = pair3(k). The
/// first accepted b is returned.
///
/// Only the input indices 2^i - 1 are consulted: f(l) for l >= m serves
/// whenever f(m) does, so an unbounded ladder loses nothing, and it keeps
/// the diagonal short when a fine input is needed.
EvalOutcome apply(const ApproxSystem& sys, const OrdinaryName& f, Nat n, Budget budget);

/// 2^i - 1, for rungs i < 64.
Nat input_index_of_rung(Nat i);

using BudgetSchedule = std::function<Budget(Nat)>;

/// budget(n) = base * 2^n, saturating at 2^64 - 1.
BudgetSchedule geometric_schedule(Nat base = 10'000);

/// Lazily memoized name n -> apply(sys, f, n, schedule(n)).value of
/// theta(xi). Forcing an index whose search times out throws TimeoutError.
OrdinaryName eval_name(const ApproxSystem& sys, const OrdinaryName& f,
                       BudgetSchedule schedule = geometric_schedule());

// ---------------------------------------------------------------------------
// Operators on finite name fragments

struct RunOutcome {
    enum class Kind { Value, OutOfBudget, OracleMiss };

    Kind kind = Kind::OutOfBudget;
    Rat value;
    Nat miss_index = 0; // first fragment index the operator needed but lacked
    /// Budget consumed. For Value outcomes the same value is produced under
    /// every budget >= steps and on every extension of the fragment.
    Nat steps = 0;

    static RunOutcome found(Rat v, Nat steps) { return {Kind::Value, std::move(v), 0, steps}; }
    static RunOutcome out_of_budget(Nat steps) { return {Kind::OutOfBudget, Rat(), 0, steps}; }
    static RunOutcome oracle_miss(Nat index, Nat steps) { return {Kind::OracleMiss, Rat(), index, steps}; }
};

/// fragment[k] is the k-th approximation of the input name, for k = 0..l.
using OperatorFn =
    std::function<RunOutcome(std::span<const Point> fragment, Nat output_index, Budget steps)>;

/// A budgeted transformer of name fragments, standing in for a recursive
/// operator mapping ordinary names of xi to ordinary names of theta(xi).
class NameOperator {
public:
    NameOperator(std::size_t dim, OperatorFn fn);

    std::size_t dim() const { return dim_; }
    RunOutcome run(std::span<const Point> fragment, Nat output_index, Budget steps) const;

private:
    std::size_t dim_;
    OperatorFn fn_;
};

/// The evaluator of `sys` run on the finite name given by the fragment.
NameOperator operator_from_system(ApproxSystem sys);

/// Approximation system read off an operator: (a, m, b, n) is accepted at
/// budget s when one of the first s attempts finds l with 2l+1 <= m and a
/// fragment g of length l+1 with dist(g(k), a) < 1/(2k+2), such that
/// T(g)(2n+1) = v within s steps and |v - b| < 1/(2n+2).
///
/// Attempt t unpacks to (l, c) = unpair2(t); c splits into l+1 candidate
/// indices. Candidate 0 for g(k) is `a` itself; candidate c >= 1 is the
/// (c-1)-th point in code order within 1/(2k+2) of `a`, and is available only
/// if found among the first s codes.
ApproxSystem system_from_operator(NameOperator op, std::size_t dim);

} // namespace approxsys
