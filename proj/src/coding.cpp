// SPDX-License-Identifier: Apache-2.0

#include "approxsys/coding.hpp"

#include <cmath>
#include <limits>

#include "approxsys/errors.hpp"

namespace approxsys {

namespace {

using u128 = unsigned __int128;

u128 isqrt128(u128 v)
{
    auto r = static_cast<u128>(std::sqrt(static_cast<long double>(v)));
    while (r * r > v)
        --r;
    while ((r + 1) * (r + 1) <= v)
        ++r;
    return r;
}

BigInt to_big(Nat v)
{
    return BigInt(static_cast<unsigned long>(v));
}

} // namespace

NatCode::NatCode(BigInt v) : value(std::move(v))
{
    if (value < 0)
        throw DomainError("negative natural code");
}

NatCode::NatCode(Nat v) : value(to_big(v)) {}

bool NatCode::fits_u64() const
{
    return mpz_sizeinbase(value.get_mpz_t(), 2) <= 64;
}

Nat NatCode::to_u64() const
{
    if (!fits_u64())
        throw DomainError("code " + str() + " exceeds 64 bits");
    return static_cast<Nat>(mpz_get_ui(value.get_mpz_t()));
}

std::strong_ordering operator<=>(const NatCode& x, const NatCode& y)
{
    int c = cmp(x.value, y.value);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Nat pair2(Nat x, Nat y)
{
    u128 s = static_cast<u128>(x) + y;
    u128 k = s * (s + 1) / 2 + y;
    if (k > std::numeric_limits<Nat>::max())
        throw DomainError("pair2 overflow");
    return static_cast<Nat>(k);
}

Pair unpair2(Nat k)
{
    u128 d = (isqrt128(static_cast<u128>(k) * 8 + 1) - 1) / 2;
    u128 y = k - d * (d + 1) / 2;
    return {static_cast<Nat>(d - y), static_cast<Nat>(y)};
}

NatCode pair2(const NatCode& x, const NatCode& y)
{
    BigInt s = x.value + y.value;
    return NatCode(BigInt(s * (s + 1) / 2 + y.value));
}

std::pair<NatCode, NatCode> unpair2(const NatCode& k)
{
    BigInt t = k.value * 8 + 1;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    BigInt d = (r - 1) / 2;
    BigInt y = k.value - d * (d + 1) / 2;
    return {NatCode(BigInt(d - y)), NatCode(y)};
}

Triple pair3(Nat k)
{
    auto [w, z] = unpair2(k);
    auto [x, y] = unpair2(w);
    return {x, y, z};
}

Nat unpair3(const Triple& t)
{
    return pair2(pair2(t.first, t.second), t.third);
}

NatCode unpair3(const NatCode& r, const NatCode& s, const NatCode& t)
{
    return pair2(pair2(r, s), t);
}

std::vector<Nat> split_tuple(Nat k, std::size_t arity)
{
    if (arity == 0)
        throw DomainError("split_tuple: arity must be positive");
    std::vector<Nat> parts;
    parts.reserve(arity);
    for (std::size_t i = 0; i + 1 < arity; ++i) {
        auto [head, rest] = unpair2(k);
        parts.push_back(head);
        k = rest;
    }
    parts.push_back(k);
    return parts;
}

Nat join_tuple(const std::vector<Nat>& parts)
{
    if (parts.empty())
        throw DomainError("join_tuple: empty tuple");
    Nat k = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;)
        k = pair2(parts[i], k);
    return k;
}

NatCode encode_rat(const Rat& x)
{
    BigInt p = x.numerator();
    BigInt r = p > 0 ? p : BigInt(0);
    BigInt s = p < 0 ? BigInt(-p) : BigInt(0);
    BigInt t = x.denominator() - 1;
    return unpair3(NatCode(r), NatCode(s), NatCode(t));
}

Rat decode_rat(const NatCode& j)
{
    auto [w, t] = unpair2(j);
    auto [r, s] = unpair2(w);
    return Rat(r.value - s.value, t.value + 1);
}

Rat decode_rat(Nat j)
{
    auto [r, s, t] = pair3(j);
    // r, s, t < 2^33 here, so the signed difference cannot overflow.
    return Rat(BigInt(static_cast<long>(r) - static_cast<long>(s)), to_big(t) + 1);
}

NatCode encode_point(const Point& p)
{
    NatCode code = encode_rat(p[p.dim() - 1]);
    for (std::size_t i = p.dim() - 1; i-- > 0;)
        code = pair2(encode_rat(p[i]), code);
    return code;
}

Point decode_point(const NatCode& code, std::size_t dim)
{
    if (dim == 0)
        throw DimensionError("decode_point: dimension must be positive");
    std::vector<Rat> coords;
    coords.reserve(dim);
    NatCode rest = code;
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        auto [head, tail] = unpair2(rest);
        coords.push_back(decode_rat(head));
        rest = std::move(tail);
    }
    coords.push_back(decode_rat(rest));
    return Point(std::move(coords));
}

Point decode_point(Nat code, std::size_t dim)
{
    if (dim == 0)
        throw DimensionError("decode_point: dimension must be positive");
    std::vector<Rat> coords;
    coords.reserve(dim);
    for (Nat part : split_tuple(code, dim))
        coords.push_back(decode_rat(part));
    return Point(std::move(coords));
}

} // namespace approxsys
