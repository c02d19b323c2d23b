// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>

#include "approxsys/coding.hpp"
#include "approxsys/point.hpp"

namespace approxsys {

using Approximant = std::function<Point(Nat)>;

namespace detail {
class PointStream;
}

// Names are read-only handles onto a memoized stream i -> Point. Each index
// is produced at most once; concurrent readers of the same index observe a
// single value. References returned by approx() stay valid while any copy of
// the name is alive.

/// Stream f with dist(f(i), xi) < 1/(i+1) for the named point xi.
class OrdinaryName {
public:
    OrdinaryName(std::size_t dim, Approximant generator);

    std::size_t dim() const;
    const Point& approx(Nat i) const;

private:
    std::shared_ptr<detail::PointStream> stream_;
};

/// Stream h with dist(h(i), h(k)) <= 2^-i for i < k.
class CauchyName {
public:
    CauchyName(std::size_t dim, Approximant generator);

    std::size_t dim() const;
    const Point& approx(Nat i) const;

private:
    std::shared_ptr<detail::PointStream> stream_;
};

OrdinaryName name_of_point(const Point& p);

/// result(i) = f(2^(i+1)). Forcing i >= 63 throws DomainError.
CauchyName ordinary_to_cauchy(const OrdinaryName& f);

/// Smallest i with 2^-i + 2^-(i+1) < 1/(n+1).
Nat cauchy_index_for(Nat n);

/// result(n) = h(cauchy_index_for(n)).
OrdinaryName cauchy_to_ordinary(const CauchyName& h);

/// First pair i < k <= upto with dist(f(i), f(k)) >= 1/(i+1) + 1/(k+1).
std::optional<std::pair<Nat, Nat>> check_name_consistency(const OrdinaryName& f, Nat upto);

/// First pair i < k <= upto with dist(h(i), h(k)) > 2^-i.
std::optional<std::pair<Nat, Nat>> check_cauchy_consistency(const CauchyName& h, Nat upto);

} // namespace approxsys
