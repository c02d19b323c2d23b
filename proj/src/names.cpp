// SPDX-License-Identifier: Apache-2.0

#include "approxsys/names.hpp"

#include <mutex>
#include <string>
#include <unordered_map>

#include "approxsys/errors.hpp"

namespace approxsys {

namespace detail {

class PointStream {
public:
    PointStream(std::size_t dim, Approximant generator)
        : dim_(dim), generator_(std::move(generator))
    {
        if (dim_ == 0)
            throw DimensionError("names need dimension >= 1");
        if (!generator_)
            throw DomainError("name without a generator");
    }

    std::size_t dim() const { return dim_; }

    const Point& get(Nat i)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = memo_.find(i); it != memo_.end())
                return it->second;
        }
        // Generated outside the lock: a generator may force other names.
        Point p = generator_(i);
        if (p.dim() != dim_)
            throw DimensionError("name produced a point of dimension " + std::to_string(p.dim()) +
                                 ", expected " + std::to_string(dim_));
        std::lock_guard lock(mutex_);
        return memo_.try_emplace(i, std::move(p)).first->second;
    }

private:
    std::size_t dim_;
    Approximant generator_;
    std::mutex mutex_;
    std::unordered_map<Nat, Point> memo_;
};

} // namespace detail

OrdinaryName::OrdinaryName(std::size_t dim, Approximant generator)
    : stream_(std::make_shared<detail::PointStream>(dim, std::move(generator)))
{
}

std::size_t OrdinaryName::dim() const
{
    return stream_->dim();
}

const Point& OrdinaryName::approx(Nat i) const
{
    return stream_->get(i);
}

CauchyName::CauchyName(std::size_t dim, Approximant generator)
    : stream_(std::make_shared<detail::PointStream>(dim, std::move(generator)))
{
}

std::size_t CauchyName::dim() const
{
    return stream_->dim();
}

const Point& CauchyName::approx(Nat i) const
{
    return stream_->get(i);
}

OrdinaryName name_of_point(const Point& p)
{
    return OrdinaryName(p.dim(), [p](Nat) { return p; });
}

CauchyName ordinary_to_cauchy(const OrdinaryName& f)
{
    return CauchyName(f.dim(), [f](Nat i) {
        if (i >= 63)
            throw DomainError("ordinary_to_cauchy: index " + std::to_string(i) +
                              " needs an ordinary index beyond 2^63");
        return f.approx(Nat{1} << (i + 1));
    });
}

Nat cauchy_index_for(Nat n)
{
    // 2^-i + 2^-(i+1) < 1/(n+1)  <=>  3(n+1) < 2^(i+1)
    unsigned __int128 bound = (static_cast<unsigned __int128>(n) + 1) * 3;
    Nat i = 0;
    while ((static_cast<unsigned __int128>(1) << (i + 1)) <= bound)
        ++i;
    return i;
}

OrdinaryName cauchy_to_ordinary(const CauchyName& h)
{
    return OrdinaryName(h.dim(), [h](Nat n) { return h.approx(cauchy_index_for(n)); });
}

std::optional<std::pair<Nat, Nat>> check_name_consistency(const OrdinaryName& f, Nat upto)
{
    for (Nat k = 1; k <= upto; ++k)
        for (Nat i = 0; i < k; ++i)
            if (dist(f.approx(i), f.approx(k)) >= unit(i) + unit(k))
                return std::pair{i, k};
    return std::nullopt;
}

std::optional<std::pair<Nat, Nat>> check_cauchy_consistency(const CauchyName& h, Nat upto)
{
    for (Nat k = 1; k <= upto; ++k)
        for (Nat i = 0; i < k; ++i) {
            BigInt den;
            mpz_ui_pow_ui(den.get_mpz_t(), 2, i);
            if (dist(h.approx(i), h.approx(k)) > Rat(BigInt(1), den))
                return std::pair{i, k};
        }
    return std::nullopt;
}

} // namespace approxsys
