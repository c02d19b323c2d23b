// SPDX-License-Identifier: Apache-2.0

#include "approxsys/rat.hpp"

#include <cctype>
#include <ostream>

#include "approxsys/errors.hpp"

namespace approxsys {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

BigInt parse_int(std::string_view s, std::string_view whole)
{
    if (!all_digits(s))
        throw FormatError("not a rational literal: '" + std::string(whole) + "'");
    return BigInt(std::string(s), 10);
}

} // namespace

Rat::Rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(const mpq_class& q) : q_(q)
{
    if (q_.get_den() == 0)
        throw DomainError("rational with zero denominator");
    q_.canonicalize();
}

Rat Rat::from_u64(std::uint64_t v)
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return Rat(BigInt(static_cast<unsigned long>(v)));
}

Rat Rat::parse(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);

    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty())
        throw FormatError("empty rational literal");

    Rat r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_int(s.substr(0, slash), text);
        BigInt den = parse_int(s.substr(slash + 1), text);
        if (den == 0)
            throw FormatError("zero denominator in '" + std::string(text) + "'");
        r = Rat(num, den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw FormatError("not a rational literal: '" + std::string(text) + "'");
        BigInt whole = ip.empty() ? BigInt(0) : parse_int(ip, text);
        BigInt frac = fp.empty() ? BigInt(0) : parse_int(fp, text);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        r = Rat(whole * scale + frac, scale);
    } else {
        r = Rat(parse_int(s, text));
    }
    return negative ? -r : r;
}

Rat Rat::abs() const
{
    Rat r;
    r.q_ = ::abs(q_);
    return r;
}

Rat Rat::reciprocal() const
{
    if (is_zero())
        throw DomainError("reciprocal of zero");
    Rat r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rat operator+(const Rat& x, const Rat& y)
{
    Rat r;
    mpq_add(r.q_.get_mpq_t(), x.q_.get_mpq_t(), y.q_.get_mpq_t());
    return r;
}

Rat operator-(const Rat& x, const Rat& y)
{
    Rat r;
    mpq_sub(r.q_.get_mpq_t(), x.q_.get_mpq_t(), y.q_.get_mpq_t());
    return r;
}

Rat operator*(const Rat& x, const Rat& y)
{
    Rat r;
    mpq_mul(r.q_.get_mpq_t(), x.q_.get_mpq_t(), y.q_.get_mpq_t());
    return r;
}

Rat operator/(const Rat& x, const Rat& y)
{
    if (y.is_zero())
        throw DomainError("division by zero");
    Rat r;
    mpq_div(r.q_.get_mpq_t(), x.q_.get_mpq_t(), y.q_.get_mpq_t());
    return r;
}

Rat operator-(const Rat& x)
{
    Rat r;
    mpq_neg(r.q_.get_mpq_t(), x.q_.get_mpq_t());
    return r;
}

Rat& Rat::operator+=(const Rat& y)
{
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), y.q_.get_mpq_t());
    return *this;
}

Rat& Rat::operator-=(const Rat& y)
{
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), y.q_.get_mpq_t());
    return *this;
}

Rat& Rat::operator*=(const Rat& y)
{
    mpq_mul(q_.get_mpq_t(), q_.get_mpq_t(), y.q_.get_mpq_t());
    return *this;
}

Rat& Rat::operator/=(const Rat& y)
{
    if (y.is_zero())
        throw DomainError("division by zero");
    mpq_div(q_.get_mpq_t(), q_.get_mpq_t(), y.q_.get_mpq_t());
    return *this;
}

std::strong_ordering operator<=>(const Rat& x, const Rat& y)
{
    int c = cmp(x.q_, y.q_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::str() const
{
    return q_.get_str(10);
}

std::string Rat::decimal(unsigned digits) const
{
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigInt scaled = ::abs(q_.get_num()) * scale;
    BigInt truncated;
    mpz_tdiv_q(truncated.get_mpz_t(), scaled.get_mpz_t(), q_.get_den().get_mpz_t());

    std::string body = truncated.get_str(10);
    if (body.size() <= digits)
        body.insert(0, digits + 1 - body.size(), '0');
    std::string out = sign() < 0 ? "-" : "";
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

Rat abs(const Rat& x)
{
    return x.abs();
}

Rat min(const Rat& x, const Rat& y)
{
    return y < x ? y : x;
}

Rat max(const Rat& x, const Rat& y)
{
    return x < y ? y : x;
}

Rat pow(const Rat& x, unsigned long e)
{
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), x.raw().get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.raw().get_den_mpz_t(), e);
    return Rat(num, den);
}

Rat unit(std::uint64_t k)
{
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    BigInt den(static_cast<unsigned long>(k));
    den += 1;
    return Rat(BigInt(1), den);
}

std::ostream& operator<<(std::ostream& os, const Rat& x)
{
    return os << x.str();
}

} // namespace approxsys
