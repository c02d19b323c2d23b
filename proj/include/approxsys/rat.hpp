// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace approxsys {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Values are immutable from the outside; arithmetic returns
/// fresh canonical values.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}                        // NOLINT(google-explicit-constructor)
    Rat(int v) : q_(static_cast<long>(v)) {}      // NOLINT(google-explicit-constructor)
    explicit Rat(const BigInt& num) : q_(num) {}
    /// Throws DomainError when `den` is zero.
    Rat(const BigInt& num, const BigInt& den);
    explicit Rat(const mpq_class& q);

    static Rat from_u64(std::uint64_t v);

    /// Accepts "p", "p/q", and finite decimals such as "-0.25" or "3.".
    static Rat parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat abs() const;
    Rat reciprocal() const;

    friend Rat operator+(const Rat& x, const Rat& y);
    friend Rat operator-(const Rat& x, const Rat& y);
    friend Rat operator*(const Rat& x, const Rat& y);
    friend Rat operator/(const Rat& x, const Rat& y);
    friend Rat operator-(const Rat& x);

    Rat& operator+=(const Rat& y);
    Rat& operator-=(const Rat& y);
    Rat& operator*=(const Rat& y);
    Rat& operator/=(const Rat& y);

    friend bool operator==(const Rat& x, const Rat& y) { return x.q_ == y.q_; }
    friend std::strong_ordering operator<=>(const Rat& x, const Rat& y);

    /// Canonical "p/q" form ("p" when the denominator is 1).
    std::string str() const;
    /// Decimal expansion truncated toward zero after `digits` fractional digits.
    std::string decimal(unsigned digits) const;
    /// Nearest double, for diagnostics only.
    double approx_double() const { return q_.get_d(); }

private:
    mpq_class q_;
};

Rat abs(const Rat& x);
Rat min(const Rat& x, const Rat& y);
Rat max(const Rat& x, const Rat& y);
/// x^e for a natural exponent; pow(0, 0) = 1.
Rat pow(const Rat& x, unsigned long e);
/// 1/(k+1), the precision unit attached to an index.
Rat unit(std::uint64_t k);

std::ostream& operator<<(std::ostream& os, const Rat& x);

} // namespace approxsys
