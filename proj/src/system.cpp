// SPDX-License-Identifier: Apache-2.0

#include "approxsys/system.hpp"

#include "approxsys/errors.hpp"

namespace approxsys {

std::string Quadruple::str() const
{
    return "(" + a.str() + ", " + std::to_string(m) + ", " + b.str() + ", " + std::to_string(n) +
           ")";
}

NatCode encode_quadruple(const Quadruple& q)
{
    return pair2(pair2(encode_point(q.a), NatCode(q.m)), pair2(encode_rat(q.b), NatCode(q.n)));
}

Quadruple decode_quadruple(const NatCode& code, std::size_t dim)
{
    auto [left, right] = unpair2(code);
    auto [pc, m] = unpair2(left);
    auto [rc, n] = unpair2(right);
    return {decode_point(pc, dim), m.to_u64(), decode_rat(rc), n.to_u64()};
}

Quadruple decode_quadruple(Nat code, std::size_t dim)
{
    auto [left, right] = unpair2(code);
    auto [pc, m] = unpair2(left);
    auto [rc, n] = unpair2(right);
    return {decode_point(pc, dim), m, decode_rat(rc), n};
}

bool SystemModel::decide(const Quadruple&) const
{
    throw DomainError(name() + " has no decision procedure");
}

std::vector<Rat> SystemModel::suggest(const Point&, Nat, Nat) const
{
    return {};
}

ApproxSystem::ApproxSystem(std::shared_ptr<const SystemModel> model) : model_(std::move(model))
{
    if (!model_)
        throw DomainError("null system model");
    if (model_->dim() == 0)
        throw DimensionError("systems need input dimension >= 1");
}

void ApproxSystem::check_dim(const Point& a) const
{
    if (a.dim() != dim())
        throw DimensionError(name() + ": point of dimension " + std::to_string(a.dim()) +
                             ", system expects " + std::to_string(dim()));
}

std::optional<Quadruple> ApproxSystem::enumerate(Nat k) const
{
    return model_->enumerate(k);
}

Membership ApproxSystem::membership(const Quadruple& q, Budget s) const
{
    check_dim(q.a);
    return model_->membership(q, s);
}

std::optional<bool> ApproxSystem::decide(const Quadruple& q) const
{
    check_dim(q.a);
    if (!model_->decidable())
        return std::nullopt;
    return model_->decide(q);
}

std::vector<Rat> ApproxSystem::suggest(const Point& a, Nat m, Nat n) const
{
    check_dim(a);
    return model_->suggest(a, m, n);
}

namespace {

class DecidableModel final : public SystemModel {
public:
    DecidableModel(DecideFn decide, std::size_t dim, std::string name, SuggestFn suggest)
        : decide_(std::move(decide)), dim_(dim), name_(std::move(name)),
          suggest_(std::move(suggest))
    {
        if (!decide_)
            throw DomainError("dovetail_enumerator: missing decision procedure");
    }

    std::size_t dim() const override { return dim_; }
    std::string name() const override { return name_; }

    std::optional<Quadruple> enumerate(Nat k) const override
    {
        Quadruple q = decode_quadruple(k, dim_);
        if (decide_(q))
            return q;
        return std::nullopt;
    }

    Membership membership(const Quadruple& q, Budget) const override
    {
        return decide_(q) ? Membership::Yes : Membership::NotYet;
    }

    bool decidable() const override { return true; }
    bool decide(const Quadruple& q) const override { return decide_(q); }

    std::vector<Rat> suggest(const Point& a, Nat m, Nat n) const override
    {
        return suggest_ ? suggest_(a, m, n) : std::vector<Rat>{};
    }

private:
    DecideFn decide_;
    std::size_t dim_;
    std::string name_;
    SuggestFn suggest_;
};

class EnumeratedModel final : public SystemModel {
public:
    EnumeratedModel(EnumerateFn enumerate, std::size_t dim, std::string name)
        : enumerate_(std::move(enumerate)), dim_(dim), name_(std::move(name))
    {
        if (!enumerate_)
            throw DomainError("enumeration_system: missing enumeration");
    }

    std::size_t dim() const override { return dim_; }
    std::string name() const override { return name_; }

    std::optional<Quadruple> enumerate(Nat k) const override { return enumerate_(k); }

    Membership membership(const Quadruple& q, Budget s) const override
    {
        for (Nat k = 0; k <= s.steps; ++k) {
            if (auto e = enumerate_(k); e && *e == q)
                return Membership::Yes;
            if (k == s.steps)
                break;
        }
        return Membership::NotYet;
    }

private:
    EnumerateFn enumerate_;
    std::size_t dim_;
    std::string name_;
};

} // namespace

ApproxSystem dovetail_enumerator(DecideFn decide, std::size_t dim, std::string name,
                                 SuggestFn suggest)
{
    return ApproxSystem(std::make_shared<DecidableModel>(std::move(decide), dim, std::move(name),
                                                         std::move(suggest)));
}

ApproxSystem enumeration_system(EnumerateFn enumerate, std::size_t dim, std::string name)
{
    return ApproxSystem(
        std::make_shared<EnumeratedModel>(std::move(enumerate), dim, std::move(name)));
}

} // namespace approxsys
