#include "qcvol/rational.hpp"

#include <cctype>
#include <ostream>

namespace qcvol {

Rational::Rational(const Int& num, const Int& den) : v_(num, den) {
    if (sgn(den) == 0)
        throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::from_raw(mpq_class v) {
    v.canonicalize();
    Rational r;
    r.v_ = std::move(v);
    return r;
}

Rational Rational::operator-() const {
    return from_raw(mpq_class(-v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n)
        throw std::domain_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) + "): k exceeds n");
    if (n - k < k)
        k = n - k;
    // Running product n-k+1 ... n over 1 ... k; every intermediate quotient
    // is an exact integer.
    Int r = 1;
    for (unsigned long i = 1; i <= k; ++i) {
        r *= static_cast<unsigned long>(n - k + i);
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
    }
    return r;
}

Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    const std::size_t n = text.size();
    auto fail = [&](const std::string& what, std::size_t at) {
        return ParseError("invalid rational \"" + std::string(text) + "\": " + what +
                              " at position " + std::to_string(at),
                          at);
    };
    bool negative = false;
    if (pos < n && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t num_start = pos;
    while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == num_start)
        throw fail("expected digits", pos);
    Int num(std::string(text.substr(num_start, pos - num_start)), 10);
    Int den = 1;
    if (pos < n && text[pos] == '/') {
        ++pos;
        const std::size_t den_start = pos;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == den_start)
            throw fail("expected digits after '/'", pos);
        den = Int(std::string(text.substr(den_start, pos - den_start)), 10);
        if (sgn(den) == 0)
            throw fail("denominator must be positive", den_start);
    }
    if (pos != n)
        throw fail("unexpected character", pos);
    if (negative)
        num = -num;
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    return value.raw().get_str();
}

std::string to_string(const Int& value) {
    return value.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << to_string(value);
}

} // namespace qcvol
