// SPDX-License-Identifier: Apache-2.0

#include "approxsys/formula.hpp"

#include <algorithm>
#include <fstream>

#include "approxsys/errors.hpp"

namespace approxsys {

using nlohmann::json;

Polynomial::Polynomial(std::vector<Monomial> terms) : terms_(std::move(terms))
{
    for (const auto& t : terms_) {
        if (degrees_.size() < t.exps.size())
            degrees_.resize(t.exps.size(), 0);
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            degrees_[i] = std::max(degrees_[i], t.exps[i]);
    }
}

unsigned Polynomial::degree_in(std::size_t var) const
{
    return var < degrees_.size() ? degrees_[var] : 0;
}

Rat Polynomial::eval(std::span<const Rat> vars) const
{
    Rat sum;
    for (const auto& t : terms_) {
        Rat term(t.coef);
        for (std::size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i])
                term *= pow(vars[i], t.exps[i]);
        sum += term;
    }
    return sum;
}

int Polynomial::sign_at(std::span<const Rat> vars) const
{
    // Multiply through by prod_i den_i^deg_i, which is positive.
    BigInt total, term, factor;
    for (const auto& t : terms_) {
        term = t.coef;
        for (std::size_t i = 0; i < t.exps.size(); ++i) {
            const unsigned e = t.exps[i];
            const unsigned top = degrees_[i];
            if (e) {
                mpz_pow_ui(factor.get_mpz_t(), vars[i].raw().get_num_mpz_t(), e);
                term *= factor;
            }
            if (top > e) {
                mpz_pow_ui(factor.get_mpz_t(), vars[i].raw().get_den_mpz_t(), top - e);
                term *= factor;
            }
        }
        total += term;
    }
    return sgn(total);
}

PolyFormula PolyFormula::atom(Polynomial p, Relation rel)
{
    PolyFormula f;
    f.kind_ = Kind::Atom;
    f.poly_ = std::move(p);
    f.rel_ = rel;
    return f;
}

PolyFormula PolyFormula::conj(std::vector<PolyFormula> children)
{
    PolyFormula f;
    f.kind_ = Kind::And;
    f.children_ = std::move(children);
    return f;
}

PolyFormula PolyFormula::disj(std::vector<PolyFormula> children)
{
    PolyFormula f;
    f.kind_ = Kind::Or;
    f.children_ = std::move(children);
    return f;
}

PolyFormula PolyFormula::negate(PolyFormula child)
{
    PolyFormula f;
    f.kind_ = Kind::Not;
    f.children_.push_back(std::move(child));
    return f;
}

void PolyFormula::validate(std::size_t nvars) const
{
    switch (kind_) {
    case Kind::Atom:
        for (const auto& t : poly_.terms())
            if (t.exps.size() != nvars)
                throw FormatError("monomial with " + std::to_string(t.exps.size()) +
                                  " exponents, expected " + std::to_string(nvars));
        return;
    case Kind::Not:
        if (children_.size() != 1)
            throw FormatError("'not' takes exactly one operand");
        break;
    case Kind::And:
    case Kind::Or:
        break;
    }
    for (const auto& c : children_)
        c.validate(nvars);
}

bool PolyFormula::eval(std::span<const Rat> vars) const
{
    switch (kind_) {
    case Kind::Atom: {
        int s = poly_.sign_at(vars);
        return rel_ == Relation::Greater ? s > 0 : s >= 0;
    }
    case Kind::And:
        for (const auto& c : children_)
            if (!c.eval(vars))
                return false;
        return true;
    case Kind::Or:
        for (const auto& c : children_)
            if (c.eval(vars))
                return true;
        return false;
    case Kind::Not:
        return !children_.front().eval(vars);
    }
    return false;
}

namespace {

BigInt coef_from_json(const json& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<long>());
    if (j.is_string()) {
        Rat r = Rat::parse(j.get<std::string>());
        if (!r.is_integer())
            throw FormatError("coefficient is not an integer: " + j.dump());
        return r.numerator();
    }
    throw FormatError("coefficient must be an integer: " + j.dump());
}

json coef_to_json(const BigInt& c)
{
    if (c.fits_slong_p())
        return c.get_si();
    return c.get_str(10);
}

PolyFormula node_from_json(const json& j, std::size_t nvars)
{
    if (!j.is_object())
        throw FormatError("formula node must be an object: " + j.dump());
    if (j.contains("op")) {
        const auto& op = j.at("op");
        Relation rel;
        if (op == ">")
            rel = Relation::Greater;
        else if (op == ">=")
            rel = Relation::GreaterEqual;
        else
            throw FormatError("unknown relation " + op.dump());
        if (!j.contains("poly") || !j.at("poly").is_array())
            throw FormatError("atom without a 'poly' array");
        std::vector<Monomial> terms;
        for (const auto& mono : j.at("poly")) {
            if (!mono.is_array() || mono.size() != 2 || !mono[1].is_array())
                throw FormatError("monomial must be [coef, [exponents]]: " + mono.dump());
            Monomial m;
            m.coef = coef_from_json(mono[0]);
            for (const auto& e : mono[1]) {
                if (!e.is_number_unsigned())
                    throw FormatError("exponents must be natural numbers: " + mono.dump());
                m.exps.push_back(e.get<unsigned>());
            }
            if (m.exps.size() != nvars)
                throw FormatError("monomial " + mono.dump() + " needs " + std::to_string(nvars) +
                                  " exponents");
            terms.push_back(std::move(m));
        }
        return PolyFormula::atom(Polynomial(std::move(terms)), rel);
    }
    if (j.size() != 1)
        throw FormatError("formula node must have exactly one key: " + j.dump());
    const auto& [key, value] = *j.items().begin();
    std::vector<PolyFormula> children;
    if (value.is_array()) {
        for (const auto& c : value)
            children.push_back(node_from_json(c, nvars));
    } else {
        children.push_back(node_from_json(value, nvars));
    }
    if (key == "and")
        return PolyFormula::conj(std::move(children));
    if (key == "or")
        return PolyFormula::disj(std::move(children));
    if (key == "not") {
        if (children.size() != 1)
            throw FormatError("'not' takes exactly one operand");
        return PolyFormula::negate(std::move(children.front()));
    }
    throw FormatError("unknown formula node '" + key + "'");
}

json node_to_json(const PolyFormula& f)
{
    switch (f.kind()) {
    case PolyFormula::Kind::Atom: {
        json poly = json::array();
        for (const auto& t : f.poly().terms())
            poly.push_back(json::array({coef_to_json(t.coef), t.exps}));
        return {{"op", f.relation() == Relation::Greater ? ">" : ">="}, {"poly", poly}};
    }
    case PolyFormula::Kind::And:
    case PolyFormula::Kind::Or:
    case PolyFormula::Kind::Not: {
        json kids = json::array();
        for (const auto& c : f.children())
            kids.push_back(node_to_json(c));
        const char* key = f.kind() == PolyFormula::Kind::And
                              ? "and"
                              : (f.kind() == PolyFormula::Kind::Or ? "or" : "not");
        return {{key, kids}};
    }
    }
    return nullptr;
}

} // namespace

FormulaDocument formula_from_json(const json& doc)
{
    if (!doc.is_object() || !doc.contains("vars") || !doc.contains("formula"))
        throw FormatError("formula document needs 'vars' and 'formula'");
    if (!doc.at("vars").is_number_unsigned() || doc.at("vars").get<std::size_t>() == 0)
        throw FormatError("'vars' must be a positive integer");
    FormulaDocument out;
    out.dim = doc.at("vars").get<std::size_t>();
    out.formula = node_from_json(doc.at("formula"), out.dim + 3);
    return out;
}

json formula_to_json(const FormulaDocument& doc)
{
    return {{"vars", doc.dim}, {"formula", node_to_json(doc.formula)}};
}

FormulaDocument load_formula_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open formula file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError("formula file '" + path + "': " + e.what());
    }
    return formula_from_json(doc);
}

} // namespace approxsys
