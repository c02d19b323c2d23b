// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "approxsys/coding.hpp"
#include "approxsys/point.hpp"
#include "approxsys/rat.hpp"

namespace approxsys {

/// One element (a, m, b, n) of an approximation system: every point within
/// 1/(m+1) of `a` (and in the domain) is mapped within 1/(n+1) of `b`.
struct Quadruple {
    Point a;
    Nat m = 0;
    Rat b;
    Nat n = 0;

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
    std::string str() const;
};

struct Budget {
    Nat steps = 0;
};

enum class Membership { Yes, NotYet };

/// Canonical code of a quadruple: pair2(pair2(point, m), pair2(rat, n)).
NatCode encode_quadruple(const Quadruple& q);
Quadruple decode_quadruple(const NatCode& code, std::size_t dim);
Quadruple decode_quadruple(Nat code, std::size_t dim);

/// Implementation side of an approximation system. Implementations must be
/// immutable (or internally synchronized) and reentrant.
class SystemModel {
public:
    virtual ~SystemModel() = default;

    virtual std::size_t dim() const = 0;
    virtual std::string name() const = 0;

    /// Deterministic; the image over all k is the coded set. Gaps allowed.
    virtual std::optional<Quadruple> enumerate(Nat k) const = 0;
    /// Semi-decision with budget; Yes must be monotone in the budget.
    virtual Membership membership(const Quadruple& q, Budget s) const = 0;

    virtual bool decidable() const { return false; }
    /// Total decision procedure; only consulted when decidable() is true.
    virtual bool decide(const Quadruple& q) const;

    /// Output candidates worth trying first for input `a` at (m, n). Purely a
    /// search-order hint: membership is still checked for every candidate.
    virtual std::vector<Rat> suggest(const Point& a, Nat m, Nat n) const;
};

/// Shareable handle to an approximation system. Every call checks that the
/// quadruple's point has the system's input dimension.
class ApproxSystem {
public:
    explicit ApproxSystem(std::shared_ptr<const SystemModel> model);

    std::size_t dim() const { return model_->dim(); }
    std::string name() const { return model_->name(); }
    bool decidable() const { return model_->decidable(); }

    std::optional<Quadruple> enumerate(Nat k) const;
    Membership membership(const Quadruple& q, Budget s) const;
    /// Empty when the system only supports semi-decision.
    std::optional<bool> decide(const Quadruple& q) const;
    std::vector<Rat> suggest(const Point& a, Nat m, Nat n) const;

    const SystemModel& model() const { return *model_; }

private:
    void check_dim(const Point& a) const;

    std::shared_ptr<const SystemModel> model_;
};

using DecideFn = std::function<bool(const Quadruple&)>;
using SuggestFn = std::function<std::vector<Rat>(const Point&, Nat, Nat)>;
using EnumerateFn = std::function<std::optional<Quadruple>(Nat)>;

/// Presents a decidable set as an enumerable one: enumerate(k) decodes k as a
/// quadruple code and keeps it when `decide` accepts it.
ApproxSystem dovetail_enumerator(DecideFn decide, std::size_t dim, std::string name = "decidable",
                                 SuggestFn suggest = {});

/// A system known only through an enumeration: membership(q, s) = Yes iff q
/// is among enumerate(0..s).
ApproxSystem enumeration_system(EnumerateFn enumerate, std::size_t dim,
                                std::string name = "enumerated");

} // namespace approxsys
