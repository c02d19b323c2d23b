// SPDX-License-Identifier: Apache-2.0

#include "approxsys/evaluator.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

#include "approxsys/errors.hpp"

namespace approxsys {

namespace {

struct Found {
    Rat value;
    Nat input_index;
    Nat steps;
};
struct Missed {
    Nat index;
    Nat steps;
};
using SearchOutcome = std::variant<Found, Missed, Timeout>;

constexpr Nat kRungs = 64;

} // namespace

Nat input_index_of_rung(Nat i)
{
    if (i >= kRungs)
        throw DomainError("input index rung " + std::to_string(i) + " out of range");
    return (Nat{1} << i) - 1;
}

namespace {

// The dovetailed search shared by apply() and operator_from_system().
// `lookup(l)` returns the l-th input approximation, or nullptr when the input
// is a finite fragment that ends before l.
template <class Lookup>
SearchOutcome search(const ApproxSystem& sys, Lookup&& lookup, Nat n, Budget budget)
{
    const SystemModel& model = sys.model();
    const bool decidable = model.decidable();

    // Per rung i: the quadruple template (a, l, _, n) with l = 2^i - 1, and
    // the suggestions for it.
    struct Slot {
        bool ready = false;
        Quadruple q;
        std::vector<Rat> suggestions;
    };
    std::vector<Slot> slots;

    for (Nat k = 0; k < budget.steps; ++k) {
        Nat i, j, s = 0;
        if (decidable) {
            auto p = unpair2(k);
            i = p.first;
            j = p.second;
        } else {
            auto t = pair3(k);
            i = t.first;
            j = t.second;
            s = t.third;
        }
        if (i >= kRungs)
            continue;
        if (i >= slots.size())
            slots.resize(i + 1);
        Slot& slot = slots[i];
        if (!slot.ready) {
            const Nat l = input_index_of_rung(i);
            const Point* a = lookup(l);
            if (!a)
                return Missed{l, k + 1};
            if (a->dim() != sys.dim())
                throw DimensionError(sys.name() + ": input approximation of dimension " +
                                     std::to_string(a->dim()));
            slot.q = Quadruple{*a, l, Rat(), n};
            slot.suggestions = model.suggest(*a, l, n);
            slot.ready = true;
        }
        const auto hints = slot.suggestions.size();
        slot.q.b = j < hints ? slot.suggestions[j] : decode_rat(j - hints);
        const bool accepted = decidable ? model.decide(slot.q)
                                        : model.membership(slot.q, Budget{s}) == Membership::Yes;
        if (accepted)
            return Found{slot.q.b, slot.q.m, k + 1};
    }
    return Timeout{n, budget.steps};
}

} // namespace

EvalOutcome apply(const ApproxSystem& sys, const OrdinaryName& f, Nat n, Budget budget)
{
    if (f.dim() != sys.dim())
        throw DimensionError("apply: name of dimension " + std::to_string(f.dim()) + " for " +
                             sys.name() + " of dimension " + std::to_string(sys.dim()));
    auto outcome = search(sys, [&](Nat l) { return &f.approx(l); }, n, budget);
    if (auto* hit = std::get_if<Found>(&outcome))
        return EvalResult{hit->value, n, hit->input_index, hit->steps};
    return std::get<Timeout>(outcome);
}

BudgetSchedule geometric_schedule(Nat base)
{
    return [base](Nat n) {
        constexpr Nat cap = std::numeric_limits<Nat>::max();
        Nat b = base;
        for (Nat i = 0; i < n && b != cap; ++i)
            b = b > cap / 2 ? cap : b * 2;
        return Budget{b};
    };
}

OrdinaryName eval_name(const ApproxSystem& sys, const OrdinaryName& f, BudgetSchedule schedule)
{
    if (!schedule)
        throw DomainError("eval_name: missing budget schedule");
    return OrdinaryName(1, [sys, f, schedule = std::move(schedule)](Nat n) {
        auto outcome = apply(sys, f, n, schedule(n));
        if (auto* t = std::get_if<Timeout>(&outcome))
            throw TimeoutError(sys.name() + ": no certified value at index " + std::to_string(n) +
                                   " within " + std::to_string(t->search_steps) + " steps",
                               n);
        return Point{std::get<EvalResult>(outcome).value};
    });
}

// ---------------------------------------------------------------------------

NameOperator::NameOperator(std::size_t dim, OperatorFn fn) : dim_(dim), fn_(std::move(fn))
{
    if (dim_ == 0)
        throw DimensionError("operators need input dimension >= 1");
    if (!fn_)
        throw DomainError("NameOperator without a body");
}

RunOutcome NameOperator::run(std::span<const Point> fragment, Nat output_index,
                             Budget steps) const
{
    for (const auto& p : fragment)
        if (p.dim() != dim_)
            throw DimensionError("operator fragment point of dimension " +
                                 std::to_string(p.dim()));
    return fn_(fragment, output_index, steps);
}

NameOperator operator_from_system(ApproxSystem sys)
{
    const std::size_t dim = sys.dim();
    return NameOperator(dim, [sys = std::move(sys)](std::span<const Point> fragment, Nat p,
                                                    Budget budget) {
        auto outcome = search(
            sys,
            [&](Nat l) -> const Point* { return l < fragment.size() ? &fragment[l] : nullptr; },
            p, budget);
        if (auto* hit = std::get_if<Found>(&outcome))
            return RunOutcome::found(hit->value, hit->steps);
        if (auto* miss = std::get_if<Missed>(&outcome))
            return RunOutcome::oracle_miss(miss->index, miss->steps);
        return RunOutcome::out_of_budget(std::get<Timeout>(outcome).search_steps);
    });
}

// ---------------------------------------------------------------------------

namespace {

// A value certified for the key (a, m, n), with the least budget at which
// membership sees it.
struct Certificate {
    Nat need;
    Rat value;
};

class ExtractedModel final : public SystemModel {
public:
    ExtractedModel(NameOperator op, std::size_t dim) : op_(std::move(op)), dim_(dim)
    {
        if (op_.dim() != dim_)
            throw DimensionError("system_from_operator: operator dimension mismatch");
    }

    std::size_t dim() const override { return dim_; }
    std::string name() const override { return "extracted"; }

    std::optional<Quadruple> enumerate(Nat k) const override
    {
        auto [code, s] = unpair2(k);
        Quadruple q = decode_quadruple(code, dim_);
        if (accepts(explore(q.a, q.m, q.n, s), q.b, q.n, s))
            return q;
        return std::nullopt;
    }

    Membership membership(const Quadruple& q, Budget s) const override
    {
        Key key{q.a, q.m, q.n};
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end() && it->second.horizon >= s.steps)
                return accepts(it->second.found, q.b, q.n, s.steps) ? Membership::Yes
                                                                    : Membership::NotYet;
        }
        // Explore ahead so that a caller raising the budget step by step does
        // not redo the same attempts; certificates record their exact need.
        Nat horizon = std::max<Nat>(s.steps, 16);
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(key); it != cache_.end())
                horizon = std::max(horizon, std::min<Nat>(it->second.horizon, kMaxHorizon / 2) * 2);
        }
        Entry fresh{horizon, explore(q.a, q.m, q.n, horizon)};
        bool yes = accepts(fresh.found, q.b, q.n, s.steps);
        std::lock_guard lock(mutex_);
        auto& slot = cache_[key];
        if (slot.horizon < fresh.horizon)
            slot = std::move(fresh);
        return yes ? Membership::Yes : Membership::NotYet;
    }

private:
    static constexpr Nat kMaxHorizon = Nat{1} << 40;

    using Key = std::tuple<Point, Nat, Nat>;
    struct Entry {
        Nat horizon = 0;
        std::vector<Certificate> found;
    };

    static bool accepts(const std::vector<Certificate>& found, const Rat& b, Nat n, Nat s)
    {
        const Rat tol = unit(2 * n + 1); // 1/(2n+2)
        return std::any_of(found.begin(), found.end(), [&](const Certificate& c) {
            return c.need <= s && abs(c.value - b) < tol;
        });
    }

    // Codes of points within 1/(2k+2) of `a`, scanned in code order.
    struct Scan {
        Nat next_code = 0;
        std::vector<Nat> hits;
    };

    // All certificates whose attempts fit in `horizon`: attempt t < horizon,
    // candidate scans within `horizon` codes, operator run within `horizon`
    // steps.
    std::vector<Certificate> explore(const Point& a, Nat m, Nat n, Nat horizon) const
    {
        std::vector<Certificate> found;
        std::vector<Scan> scans;
        std::vector<Point> fragment;
        for (Nat t = 0; t < horizon; ++t) {
            auto [l, choice] = unpair2(t);
            if (2 * l + 1 > m)
                continue;
            if (scans.size() < l + 1)
                scans.resize(l + 1);
            const auto picks = split_tuple(choice, l + 1);
            fragment.clear();
            Nat need = t + 1;
            bool available = true;
            for (Nat k = 0; k <= l && available; ++k) {
                if (picks[k] == 0) {
                    fragment.push_back(a);
                    continue;
                }
                auto scanned = nth_nearby(scans[k], a, k, picks[k] - 1, horizon);
                if (!scanned) {
                    available = false;
                    break;
                }
                need = std::max(need, scanned->second);
                fragment.push_back(std::move(scanned->first));
            }
            if (!available)
                continue;
            RunOutcome r = op_.run(fragment, 2 * n + 1, Budget{horizon});
            if (r.kind == RunOutcome::Kind::Value)
                found.push_back({std::max(need, r.steps), std::move(r.value)});
        }
        return found;
    }

    // The index-th point in code order within 1/(2k+2) of a, together with the
    // number of codes scanned to reach it; nothing if that exceeds `limit`.
    std::optional<std::pair<Point, Nat>> nth_nearby(Scan& scan, const Point& a, Nat k, Nat index,
                                                    Nat limit) const
    {
        const Rat radius = unit(2 * k + 1);
        while (scan.hits.size() <= index && scan.next_code < limit) {
            Point p = decode_point(scan.next_code, dim_);
            if (dist(p, a) < radius)
                scan.hits.push_back(scan.next_code);
            ++scan.next_code;
        }
        if (scan.hits.size() <= index)
            return std::nullopt;
        Nat code = scan.hits[index];
        return std::pair{decode_point(code, dim_), code + 1};
    }

    NameOperator op_;
    std::size_t dim_;
    mutable std::mutex mutex_;
    mutable std::map<Key, Entry> cache_;
};

} // namespace

ApproxSystem system_from_operator(NameOperator op, std::size_t dim)
{
    return ApproxSystem(std::make_shared<ExtractedModel>(std::move(op), dim));
}

} // namespace approxsys
