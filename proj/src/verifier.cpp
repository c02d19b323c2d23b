// SPDX-License-Identifier: Apache-2.0

#include "approxsys/verifier.hpp"

#include <random>

#include "approxsys/errors.hpp"

namespace approxsys {

using nlohmann::json;

// ---------------------------------------------------------------------------
// oracles

RefOracle division_oracle()
{
    return {[](const Point& x, const Rat&) { return x[0] / x[1]; },
            [](const Point& x) { return x.dim() == 2 && !x[1].is_zero(); }, true, "division"};
}

RefOracle square_oracle()
{
    return {[](const Point& x, const Rat&) { return x[0] * x[0]; },
            [](const Point& x) { return x.dim() == 1; }, true, "square"};
}

namespace {

Rat taylor_cos(const Rat& x, const Rat& eps)
{
    if (eps.sign() <= 0)
        throw DomainError("cosine oracle needs a positive error bound");
    const Rat half = eps / Rat(2);
    const Rat x2 = x * x;
    Rat sum;
    Rat term(1);
    for (Nat i = 0;; ++i) {
        sum += (i % 2 == 0) ? term : -term;
        const Rat bound = Rat::from_u64((2 * i + 1) * (2 * i + 2));
        term *= x2 / bound;
        // From here on the terms decrease, so the first omitted one bounds the tail.
        if (x2 <= Rat::from_u64((2 * i + 3) * (2 * i + 4)) && term <= half)
            break;
    }
    // Round down to a multiple of 2^-p <= eps/2 to keep denominators small.
    BigInt scale = 1;
    while (Rat(scale) * half < Rat(1))
        scale *= 2;
    const mpq_class scaled = sum.raw() * scale;
    BigInt floor_num;
    mpz_fdiv_q(floor_num.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return Rat(floor_num, scale);
}

} // namespace

RefOracle cosine_oracle()
{
    return {[](const Point& x, const Rat& eps) { return taylor_cos(x[0], eps); },
            [](const Point& x) { return x.dim() == 1; }, false, "cosine"};
}

std::optional<RefOracle> builtin_oracle(std::string_view name)
{
    if (name == "division" || name == "maximal-division")
        return division_oracle();
    if (name == "cosine")
        return cosine_oracle();
    if (name == "square")
        return square_oracle();
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// sampling

namespace {

// Points strictly inside the open cube of radius r around a, in a fixed
// order: a, the corners at r - r^2, then alternately a corner pushed toward
// the boundary and a uniform interior point.
class BallSampler {
public:
    BallSampler(const Point& a, Nat m, std::mt19937_64& rng) : a_(a), r_(unit(m)), rng_(rng)
    {
        const Rat inner = r_ - r_ * r_;
        if (!inner.is_zero())
            corners_ = a_.dim() <= 3 ? Nat{1} << a_.dim() : 8;
        inner_ = inner;
    }

    Point next()
    {
        const Nat i = count_++;
        if (i == 0)
            return a_;
        if (i <= corners_) {
            const Nat signs = a_.dim() <= 3 ? i - 1 : rng_();
            return corner(inner_, signs);
        }
        if ((i - corners_) % 2 == 1) {
            const Nat t = 1 + rng_() % 40;
            Rat rho = r_ - r_ / Rat(BigInt(BigInt(1) << static_cast<mp_bitcnt_t>(t)));
            return corner(rho, rng_());
        }
        std::vector<Rat> c;
        c.reserve(a_.dim());
        constexpr long res = 1L << 20;
        for (std::size_t d = 0; d < a_.dim(); ++d) {
            // (2k+1)/2^20 - 1 lies in (-1, 1)
            const long k = static_cast<long>(rng_() % res);
            c.push_back(a_[d] + r_ * (Rat(2 * k + 1, res) - Rat(1)));
        }
        return Point(std::move(c));
    }

private:
    Point corner(const Rat& rho, Nat signs) const
    {
        std::vector<Rat> c;
        c.reserve(a_.dim());
        for (std::size_t d = 0; d < a_.dim(); ++d)
            c.push_back(((signs >> d) & 1) ? a_[d] - rho : a_[d] + rho);
        return Point(std::move(c));
    }

    const Point& a_;
    Rat r_;
    Rat inner_;
    Nat corners_ = 0;
    Nat count_ = 0;
    std::mt19937_64& rng_;
};

enum class Check { Ok, Violated, Straddles };

// Inexact oracles are first asked for eps = 1/(10 (n+1)^2), then for
// eps / 100^r while the answer straddles the bound.
constexpr int kRefinements = 3;

Check check_point(const Quadruple& q, const RefOracle& oracle, const Point& xi)
{
    const Rat v = unit(q.n);
    if (oracle.exact)
        return abs(q.b - oracle.eval(xi, Rat())) < v ? Check::Ok : Check::Violated;
    Rat eps = v * v / Rat(10);
    for (int round = 0; round <= kRefinements; ++round, eps /= Rat(100)) {
        const Rat gap = abs(q.b - oracle.eval(xi, eps));
        if (gap + eps < v)
            return Check::Ok;
        if (gap - eps >= v)
            return Check::Violated;
    }
    return Check::Straddles;
}

} // namespace

Verdict verify_condition1(const ApproxSystem& sys, const RefOracle& oracle, Nat quad_samples,
                          Nat xi_samples, Nat seed, Condition1Options options)
{
    std::mt19937_64 rng(seed);
    Verdict out;
    out.seed = seed;
    const Nat start = seed == 0 ? 0 : rng() % 65536;

    Nat quads = 0;
    Nat straddles = 0;
    Nat scanned = 0;
    for (Nat k = start; quads < quad_samples && scanned < options.max_scan; ++k, ++scanned) {
        auto q = sys.enumerate(k);
        if (!q)
            continue;
        ++quads;
        BallSampler sampler(q->a, q->m, rng);
        Nat taken = 0;
        for (Nat tries = 0; taken < xi_samples && tries < 4 * xi_samples + 4; ++tries) {
            Point xi = sampler.next();
            if (!oracle.domain_test(xi))
                continue;
            ++taken;
            ++out.samples;
            switch (check_point(*q, oracle, xi)) {
            case Check::Ok:
                break;
            case Check::Straddles:
                ++straddles;
                break;
            case Check::Violated:
                out.outcome = Verdict::Outcome::CounterExample;
                out.witness = Witness{*q, xi};
                out.diagnostics = "enumeration index " + std::to_string(k) + ": |b - theta(xi)| >= 1/" +
                                  std::to_string(q->n + 1);
                return out;
            }
        }
    }

    out.diagnostics = std::to_string(quads) + " quadruples from " + std::to_string(scanned) +
                      " enumeration indices";
    if (straddles) {
        out.outcome = Verdict::Outcome::Inconclusive;
        out.diagnostics += "; " + std::to_string(straddles) + " checks within the oracle margin";
    }
    return out;
}

Verdict verify_condition2(const ApproxSystem& sys, const RefOracle& oracle, const Point& xi,
                          Nat n, Nat m_cap, Nat a_samples, Budget budget, Nat seed)
{
    if (!oracle.domain_test(xi))
        throw DomainError("verify_condition2: xi outside the oracle's domain");
    Verdict out;
    out.seed = seed;
    const Rat target = oracle.eval(xi, unit(n) / Rat(4));
    const Nat scan = std::min<Nat>(budget.steps, 4096);

    for (Nat m = 0; m <= m_cap; ++m) {
        std::mt19937_64 rng(seed ^ (m * 0x9E3779B97F4A7C15ULL));
        BallSampler sampler(xi, m, rng);
        bool all = true;
        for (Nat i = 0; i < a_samples && all; ++i) {
            Point a = sampler.next();
            ++out.samples;
            auto accepted = [&](const Rat& b) {
                return sys.membership(Quadruple{a, m, b, n}, budget) == Membership::Yes;
            };
            bool found = accepted(target);
            for (const Rat& b : sys.suggest(a, m, n))
                if (!found)
                    found = accepted(b);
            for (Nat j = 0; j < scan && !found; ++j)
                found = accepted(decode_rat(j));
            all = found;
        }
        if (all) {
            out.outcome = Verdict::Outcome::Pass;
            out.diagnostics = "m = " + std::to_string(m) + " serves all " +
                              std::to_string(a_samples) + " sampled inputs";
            return out;
        }
    }
    out.outcome = Verdict::Outcome::Inconclusive;
    out.diagnostics = "no m <= " + std::to_string(m_cap) + " served every sampled input";
    return out;
}

std::optional<Point> brute_force_condition1_witness(const Quadruple& q, const RefOracle& oracle,
                                                    Nat grid)
{
    if (grid == 0)
        throw DomainError("brute force grid must be positive");
    const std::size_t dim = q.a.dim();
    const Rat r = unit(q.m);
    std::vector<Rat> offsets;
    for (Nat t = 0; t < grid; ++t)
        offsets.push_back(r * (Rat::from_u64(2 * t + 1) / Rat::from_u64(grid) - Rat(1)));

    std::vector<Nat> idx(dim, 0);
    std::vector<Rat> c(dim);
    for (;;) {
        for (std::size_t d = 0; d < dim; ++d)
            c[d] = q.a[d] + offsets[idx[d]];
        Point xi(c);
        if (oracle.domain_test(xi) && check_point(q, oracle, xi) == Check::Violated)
            return xi;
        std::size_t d = 0;
        while (d < dim && ++idx[d] == grid)
            idx[d++] = 0;
        if (d == dim)
            return std::nullopt;
    }
}

bool brute_force_condition1_check(const Quadruple& q, const RefOracle& oracle, Nat grid)
{
    return !brute_force_condition1_witness(q, oracle, grid);
}

// ---------------------------------------------------------------------------
// reports

std::string_view outcome_name(Verdict::Outcome o)
{
    switch (o) {
    case Verdict::Outcome::Pass:
        return "pass";
    case Verdict::Outcome::CounterExample:
        return "counterexample";
    case Verdict::Outcome::Inconclusive:
        return "inconclusive";
    }
    return "unknown";
}

namespace {

json point_to_json(const Point& p)
{
    json out = json::array();
    for (const auto& c : p.coords())
        out.push_back(c.str());
    return out;
}

Point point_from_json(const json& j)
{
    if (!j.is_array())
        throw FormatError("point must be an array of rationals: " + j.dump());
    std::vector<Rat> c;
    for (const auto& e : j)
        c.push_back(Rat::parse(e.get<std::string>()));
    return Point(std::move(c));
}

Nat nat_from_json(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_unsigned())
        throw FormatError(std::string("missing natural number '") + key + "'");
    return j.at(key).get<Nat>();
}

} // namespace

json quadruple_to_json(const Quadruple& q)
{
    return {{"a", point_to_json(q.a)}, {"m", q.m}, {"b", q.b.str()}, {"n", q.n}};
}

Quadruple quadruple_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("a") || !j.contains("b") || !j.at("b").is_string())
        throw FormatError("quadruple needs 'a', 'm', 'b', 'n': " + j.dump());
    return {point_from_json(j.at("a")), nat_from_json(j, "m"), Rat::parse(j.at("b").get<std::string>()),
            nat_from_json(j, "n")};
}

json verdict_to_json(const Verdict& v)
{
    json out = {{"outcome", outcome_name(v.outcome)},
                {"seed", v.seed},
                {"samples", v.samples},
                {"diagnostics", v.diagnostics}};
    if (v.witness)
        out["witness"] = {{"quadruple", quadruple_to_json(v.witness->quad)},
                          {"xi", point_to_json(v.witness->xi)}};
    return out;
}

Verdict verdict_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("outcome") || !j.at("outcome").is_string())
        throw FormatError("report without an outcome");
    Verdict v;
    const auto name = j.at("outcome").get<std::string>();
    if (name == "pass")
        v.outcome = Verdict::Outcome::Pass;
    else if (name == "counterexample")
        v.outcome = Verdict::Outcome::CounterExample;
    else if (name == "inconclusive")
        v.outcome = Verdict::Outcome::Inconclusive;
    else
        throw FormatError("unknown outcome '" + name + "'");
    v.seed = nat_from_json(j, "seed");
    v.samples = nat_from_json(j, "samples");
    if (j.contains("diagnostics"))
        v.diagnostics = j.at("diagnostics").get<std::string>();
    if (j.contains("witness")) {
        const auto& w = j.at("witness");
        v.witness = Witness{quadruple_from_json(w.at("quadruple")), point_from_json(w.at("xi"))};
    }
    if ((v.outcome == Verdict::Outcome::CounterExample) != v.witness.has_value())
        throw FormatError("a witness accompanies exactly the counterexample outcome");
    return v;
}

} // namespace approxsys
