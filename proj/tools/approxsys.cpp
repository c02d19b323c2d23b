// SPDX-License-Identifier: Apache-2.0
//
// approxsys eval | enumerate | verify

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "approxsys/builtin.hpp"
#include "approxsys/errors.hpp"
#include "approxsys/evaluator.hpp"
#include "approxsys/names.hpp"
#include "approxsys/verifier.hpp"

using namespace approxsys;
using nlohmann::json;

namespace {

enum Exit : int {
    kOk = 0,
    kUsage = 1,
    kTimeout = 2,
    kCounterExample = 3,
    kInconclusive = 4,
};

struct Options {
    std::string system;
    std::string point;
    std::optional<Nat> prec_index;
    std::string eps;
    std::optional<Nat> budget;
    std::string compose;
    Nat count = 10;
    Nat start = 0;
    Nat max_scan = 10'000'000;
    std::string oracle;
    Nat quads = 1000;
    Nat xi_per_quad = 10;
    Nat seed = 0;
    std::string cond2_point;
    Nat cond2_n = 4;
    Nat m_cap = 50;
    Nat a_samples = 20;
    bool json = false;
};

struct Loaded {
    ApproxSystem sys;
    std::optional<RefOracle> oracle;
};

Loaded load_system(const std::string& source)
{
    if (auto sys = builtin_system(source))
        return {*sys, builtin_oracle(source)};
    if (!std::filesystem::exists(source))
        throw FormatError("unknown system '" + source + "' (built-ins: division, maximal-division, "
                          "cosine, square; or a formula file)");
    FormulaDocument doc = load_formula_file(source);
    return {semialgebraic_system(std::move(doc.formula), doc.dim,
                                 std::filesystem::path(source).stem().string()),
            std::nullopt};
}

Nat default_budget_base()
{
    const char* env = std::getenv("APPROXSYS_DEFAULT_BUDGET");
    if (!env || !*env)
        return 10'000;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0)
            throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw FormatError(std::string("APPROXSYS_DEFAULT_BUDGET is not a positive integer: ") + env);
    }
}

BudgetSchedule schedule_for(const Options& o)
{
    if (o.budget)
        return [b = *o.budget](Nat) { return Budget{b}; };
    return geometric_schedule(default_budget_base());
}

// Least n with 1/(n+1) <= eps, i.e. n = ceil(1/eps) - 1.
Nat index_for_eps(const std::string& text)
{
    const Rat eps = Rat::parse(text);
    if (eps.sign() <= 0)
        throw FormatError("--eps must be positive");
    const Rat inv = eps.reciprocal();
    BigInt ceil;
    mpz_cdiv_q(ceil.get_mpz_t(), inv.numerator().get_mpz_t(), inv.denominator().get_mpz_t());
    ceil -= 1;
    if (!ceil.fits_ulong_p())
        throw FormatError("--eps too small");
    return ceil.get_ui();
}

Nat precision_index(const Options& o)
{
    if (o.prec_index && !o.eps.empty())
        throw FormatError("give either --prec-index or --eps, not both");
    if (o.prec_index)
        return *o.prec_index;
    if (!o.eps.empty())
        return index_for_eps(o.eps);
    throw FormatError("eval needs --prec-index or --eps");
}

// Enough fractional digits that the truncation error is below 1/(n+1).
unsigned digits_for(Nat n)
{
    unsigned d = 1;
    for (Nat scale = 10; scale <= n + 1 && d < 19; scale *= 10)
        ++d;
    return d + 1;
}

json point_json(const Point& p)
{
    json out = json::array();
    for (const auto& c : p.coords())
        out.push_back(c.str());
    return out;
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, ','))
        out.push_back(part);
    return out;
}

int cmd_eval(const Options& o)
{
    const Nat n = precision_index(o);
    const Point xi = Point::parse(o.point);

    Rat value;
    json extra = json::object();
    if (!o.compose.empty()) {
        // outer,...,inner: apply right to left
        const auto chain = split_commas(o.compose);
        if (chain.empty())
            throw FormatError("--compose needs system names");
        OrdinaryName name = name_of_point(xi);
        std::vector<ApproxSystem> systems;
        for (const auto& s : chain) {
            systems.push_back(load_system(s).sys);
            if (systems.back().dim() != 1)
                throw DimensionError("--compose takes unary systems; '" + s + "' is not");
        }
        if (xi.dim() != 1)
            throw DimensionError("--compose needs a one-dimensional point");
        for (auto it = systems.rbegin(); it != systems.rend(); ++it)
            name = eval_name(*it, name, schedule_for(o));
        value = name.approx(n)[0];
        extra["compose"] = chain;
    } else {
        ApproxSystem sys = load_system(o.system).sys;
        if (xi.dim() != sys.dim())
            throw DimensionError("system '" + sys.name() + "' takes points of dimension " +
                                 std::to_string(sys.dim()) + ", got " + std::to_string(xi.dim()));
        const Budget budget = schedule_for(o)(n);
        EvalOutcome outcome = apply(sys, name_of_point(xi), n, budget);
        if (auto* t = std::get_if<Timeout>(&outcome)) {
            if (o.json)
                std::cout << json{{"outcome", "timeout"},
                                  {"system", sys.name()},
                                  {"point", point_json(xi)},
                                  {"precision_index", n},
                                  {"search_steps", t->search_steps}}
                                 .dump()
                          << "\n";
            std::cerr << "timeout: no certified value within " << t->search_steps << " steps\n";
            return kTimeout;
        }
        const auto& r = std::get<EvalResult>(outcome);
        value = r.value;
        extra["system"] = sys.name();
        extra["input_index"] = r.input_index;
        extra["search_steps"] = r.search_steps;
    }

    const std::string decimal = value.decimal(digits_for(n));
    if (o.json) {
        json out = {{"outcome", "value"},
                    {"point", point_json(xi)},
                    {"precision_index", n},
                    {"bound", unit(n).str()},
                    {"value", value.str()},
                    {"decimal", decimal}};
        out.update(extra);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value.str() << "\n"
                  << decimal << "  (|value - theta| < 1/" << n + 1 << ")\n";
    }
    return kOk;
}

int cmd_enumerate(const Options& o)
{
    ApproxSystem sys = load_system(o.system).sys;
    json list = json::array();
    Nat printed = 0, k = o.start;
    for (Nat scanned = 0; printed < o.count && scanned < o.max_scan; ++k, ++scanned) {
        auto q = sys.enumerate(k);
        if (!q)
            continue;
        ++printed;
        if (o.json) {
            json item = quadruple_to_json(*q);
            item["index"] = k;
            list.push_back(std::move(item));
        } else {
            std::cout << k << "\t" << q->str() << "\n";
        }
    }
    if (o.json)
        std::cout << list.dump() << "\n";
    if (printed < o.count)
        std::cerr << "stopped after scanning " << o.max_scan << " indices with " << printed
                  << " quadruples\n";
    return kOk;
}

int exit_for(Verdict::Outcome outcome)
{
    switch (outcome) {
    case Verdict::Outcome::Pass:
        return kOk;
    case Verdict::Outcome::CounterExample:
        return kCounterExample;
    case Verdict::Outcome::Inconclusive:
        return kInconclusive;
    }
    return kUsage;
}

void print_verdict(const char* label, const Verdict& v)
{
    std::cout << label << ": " << outcome_name(v.outcome) << " (" << v.samples << " samples, seed "
              << v.seed << ")\n";
    if (v.witness)
        std::cout << "  witness " << v.witness->quad.str() << " at xi = " << v.witness->xi.str()
                  << "\n";
    if (!v.diagnostics.empty())
        std::cout << "  " << v.diagnostics << "\n";
}

int cmd_verify(const Options& o)
{
    Loaded loaded = load_system(o.system);
    std::optional<RefOracle> oracle = loaded.oracle;
    if (!o.oracle.empty()) {
        oracle = builtin_oracle(o.oracle);
        if (!oracle)
            throw FormatError("unknown oracle '" + o.oracle + "'");
    }
    if (!oracle)
        throw FormatError("no reference oracle for '" + o.system + "'; pass --oracle");

    Verdict c1 = verify_condition1(loaded.sys, *oracle, o.quads, o.xi_per_quad, o.seed);
    std::optional<Verdict> c2;
    if (!o.cond2_point.empty())
        c2 = verify_condition2(loaded.sys, *oracle, Point::parse(o.cond2_point), o.cond2_n, o.m_cap,
                               o.a_samples, Budget{o.budget.value_or(10'000)}, o.seed);

    Verdict::Outcome overall = c1.outcome;
    if (c2 && overall == Verdict::Outcome::Pass)
        overall = c2->outcome;

    if (o.json) {
        json out = {{"system", loaded.sys.name()},
                    {"outcome", outcome_name(overall)},
                    {"condition1", verdict_to_json(c1)}};
        if (c2)
            out["condition2"] = verdict_to_json(*c2);
        std::cout << out.dump() << "\n";
    } else {
        print_verdict("condition 1", c1);
        if (c2)
            print_verdict("condition 2", *c2);
    }
    return exit_for(overall);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Approximation systems: evaluate, enumerate and verify"};
    app.require_subcommand(1);
    Options o;

    auto add_system = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--system", o.system, "built-in name or formula file");
        if (required)
            opt->required();
    };

    auto* eval = app.add_subcommand("eval", "evaluate theta(xi) to precision 1/(n+1)");
    add_system(eval, false);
    eval->add_option("--point", o.point, "comma-separated rationals, e.g. 1,3 or 0.5")->required();
    eval->add_option("--prec-index", o.prec_index, "n: the result is within 1/(n+1)");
    eval->add_option("--eps", o.eps, "p/q: pick the least n with 1/(n+1) <= p/q");
    eval->add_option("--budget", o.budget, "search steps (default 10^4 * 2^n)");
    eval->add_option("--compose", o.compose, "outer,inner: compose unary systems");
    eval->add_flag("--json", o.json, "print JSON");

    auto* enumerate = app.add_subcommand("enumerate", "list quadruples in enumeration order");
    add_system(enumerate, true);
    enumerate->add_option("--count", o.count, "quadruples to print");
    enumerate->add_option("--start", o.start, "first enumeration index");
    enumerate->add_option("--max-scan", o.max_scan, "indices scanned before giving up");
    enumerate->add_flag("--json", o.json, "print JSON");

    auto* verify = app.add_subcommand("verify", "check the two defining conditions by sampling");
    add_system(verify, true);
    verify->add_option("--oracle", o.oracle, "reference function: division, cosine or square");
    verify->add_option("--quads", o.quads, "quadruples drawn from the enumeration");
    verify->add_option("--xi-per-quad", o.xi_per_quad, "points checked per quadruple");
    verify->add_option("--seed", o.seed, "sampling seed");
    verify->add_option("--cond2-point", o.cond2_point, "also check condition 2 at this point");
    verify->add_option("--cond2-n", o.cond2_n, "output index for condition 2");
    verify->add_option("--m-cap", o.m_cap, "largest m tried for condition 2");
    verify->add_option("--a-samples", o.a_samples, "inputs sampled per m for condition 2");
    verify->add_option("--budget", o.budget, "membership budget for condition 2");
    verify->add_flag("--json", o.json, "print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*eval) {
            if (o.system.empty() == o.compose.empty())
                throw FormatError("eval needs exactly one of --system and --compose");
            return cmd_eval(o);
        }
        if (*enumerate)
            return cmd_enumerate(o);
        return cmd_verify(o);
    } catch (const TimeoutError& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return kTimeout;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
