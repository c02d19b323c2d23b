// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "approxsys/rat.hpp"

// Quantifier-free formulas over polynomial sign conditions with integer
// coefficients. Variables are ordered a1..aN, b, u, v where u and v stand for
// 1/(m+1) and 1/(n+1).
//
// JSON form:
//   {"vars": N, "formula": F}
//   F := {"op": ">" | ">=", "poly": [[coef, [e1, ..., e_{N+3}]], ...]}
//      | {"and": [F, ...]} | {"or": [F, ...]} | {"not": [F]}
// Coefficients are JSON integers or decimal strings for large values.

namespace approxsys {

struct Monomial {
    BigInt coef;
    std::vector<unsigned> exps;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const { return terms_; }
    /// Exact value at `vars` (one Rat per exponent slot).
    Rat eval(std::span<const Rat> vars) const;
    /// Sign of the value, computed over the integers after clearing denominators.
    int sign_at(std::span<const Rat> vars) const;
    unsigned degree_in(std::size_t var) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Monomial> terms_;
    std::vector<unsigned> degrees_;
};

enum class Relation { Greater, GreaterEqual };

class PolyFormula {
public:
    enum class Kind { Atom, And, Or, Not };

    static PolyFormula atom(Polynomial p, Relation rel);
    static PolyFormula conj(std::vector<PolyFormula> children);
    static PolyFormula disj(std::vector<PolyFormula> children);
    static PolyFormula negate(PolyFormula child);

    Kind kind() const { return kind_; }
    const Polynomial& poly() const { return poly_; }
    Relation relation() const { return rel_; }
    const std::vector<PolyFormula>& children() const { return children_; }

    /// Throws FormatError unless every exponent vector has length `nvars`.
    void validate(std::size_t nvars) const;
    bool eval(std::span<const Rat> vars) const;

    friend bool operator==(const PolyFormula&, const PolyFormula&) = default;

private:
    Kind kind_ = Kind::And;
    Polynomial poly_;
    Relation rel_ = Relation::Greater;
    std::vector<PolyFormula> children_;
};

struct FormulaDocument {
    std::size_t dim = 0;
    PolyFormula formula;
};

FormulaDocument formula_from_json(const nlohmann::json& doc);
nlohmann::json formula_to_json(const FormulaDocument& doc);
FormulaDocument load_formula_file(const std::string& path);

} // namespace approxsys
