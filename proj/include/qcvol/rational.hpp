#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcvol {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Thrown by parse_rational; position() is the byte offset of the offending
/// character in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1. Values are immutable once constructed and safe
/// to share across threads.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    Int numerator() const { return v_.get_num(); }
    Int denominator() const { return v_.get_den(); }
    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    const mpq_class& raw() const { return v_; }
    /// Wraps an mpq value, restoring canonical form if needed.
    static Rational from_raw(mpq_class v);

    Rational operator-() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

Rational abs(const Rational& x);

/// n choose k, exact. Throws std::domain_error if k > n.
Int binomial(unsigned long n, unsigned long k);

/// Parses the canonical rational text format: optional sign, an integer, and
/// an optional "/" followed by a positive integer. No spaces.
Rational parse_rational(std::string_view text);

/// Canonical text form: lowest terms, "/1" omitted, ASCII hyphen-minus sign.
std::string to_string(const Rational& value);
std::string to_string(const Int& value);

std::ostream& operator<<(std::ostream& os, const Rational& value);

} // namespace qcvol
