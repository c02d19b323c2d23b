// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "approxsys/point.hpp"
#include "approxsys/rat.hpp"

// Natural-number codes for rationals, points and quadruples.
//
// Every natural number is a valid code. A rational code j unpacks to a
// triple (r, s, t) and denotes (r - s)/(t + 1); points are right-nested
// pairs of rational codes. Pairing is Cantor's:
//
//     pair2(x, y) = (x + y)(x + y + 1)/2 + y
//
// and triples nest it on the left: k <-> (pair2(x, y), z).

namespace approxsys {

using Nat = std::uint64_t;

/// A natural-number code of unbounded size.
struct NatCode {
    BigInt value;

    NatCode() = default;
    explicit NatCode(BigInt v);
    explicit NatCode(Nat v);

    bool fits_u64() const;
    Nat to_u64() const; // throws DomainError when it does not fit
    std::string str() const { return value.get_str(10); }

    friend bool operator==(const NatCode& x, const NatCode& y) { return x.value == y.value; }
    friend std::strong_ordering operator<=>(const NatCode& x, const NatCode& y);
};

struct Pair {
    Nat first = 0;
    Nat second = 0;
    friend bool operator==(const Pair&, const Pair&) = default;
};

struct Triple {
    Nat first = 0;
    Nat second = 0;
    Nat third = 0;
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// Cantor pairing on machine naturals; throws DomainError on overflow.
Nat pair2(Nat x, Nat y);
Pair unpair2(Nat k);
NatCode pair2(const NatCode& x, const NatCode& y);
std::pair<NatCode, NatCode> unpair2(const NatCode& k);

/// The bijection N -> N^3 used to dovetail three unbounded searches.
Triple pair3(Nat k);
/// Inverse of pair3.
Nat unpair3(const Triple& t);
NatCode unpair3(const NatCode& r, const NatCode& s, const NatCode& t);

/// Splits k into `arity` naturals by right-nested unpairing (arity >= 1).
std::vector<Nat> split_tuple(Nat k, std::size_t arity);
Nat join_tuple(const std::vector<Nat>& parts);

/// Canonical code: r = max(p, 0), s = max(-p, 0), t = q - 1 for p/q in lowest terms.
NatCode encode_rat(const Rat& x);
Rat decode_rat(const NatCode& j);
Rat decode_rat(Nat j);

NatCode encode_point(const Point& p);
Point decode_point(const NatCode& code, std::size_t dim);
Point decode_point(Nat code, std::size_t dim);

} // namespace approxsys
