#include "gaussint/gaussian_int.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gaussint {

std::string GaussianInt::to_string() const {
    std::ostringstream os;
    os << re_;
    if (im_ >= 0) os << "+";
    os << im_ << "i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) {
    return os << z.to_string();
}

namespace {

// floor((2x + n) / (2n)) = round-to-nearest x/n for n > 0, half rounded up.
mpz_class div_round_nearest(const mpz_class& x, const mpz_class& n) {
    mpz_class q;
    mpz_class num = 2 * x + n;
    mpz_class den = 2 * n;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

}  // namespace

bool divides(const GaussianInt& d, const GaussianInt& z) {
    if (d.is_zero()) throw std::domain_error("divides: zero divisor");
    const GaussianInt t = z * d.conj();
    const mpz_class n = d.norm();
    return mpz_divisible_p(t.re().get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(t.im().get_mpz_t(), n.get_mpz_t());
}

GaussianInt div_exact(const GaussianInt& z, const GaussianInt& d) {
    if (d.is_zero()) throw std::domain_error("div_exact: zero divisor");
    const GaussianInt t = z * d.conj();
    const mpz_class n = d.norm();
    mpz_class qr, qi;
    mpz_class rr, ri;
    mpz_fdiv_qr(qr.get_mpz_t(), rr.get_mpz_t(), t.re().get_mpz_t(), n.get_mpz_t());
    mpz_fdiv_qr(qi.get_mpz_t(), ri.get_mpz_t(), t.im().get_mpz_t(), n.get_mpz_t());
    if (rr != 0 || ri != 0) throw std::domain_error("div_exact: not divisible");
    return {qr, qi};
}

std::pair<GaussianInt, GaussianInt> divmod_rounded(const GaussianInt& z, const GaussianInt& d) {
    if (d.is_zero()) throw std::domain_error("divmod_rounded: zero divisor");
    const GaussianInt t = z * d.conj();
    const mpz_class n = d.norm();
    GaussianInt q{div_round_nearest(t.re(), n), div_round_nearest(t.im(), n)};
    GaussianInt r = z - q * d;
    return {q, r};
}

GaussianInt canonical_unit(const GaussianInt& z) {
    if (z.is_zero()) return GaussianInt(1);
    // The four associates have coordinates (a,b), (-b,a), (-a,-b), (b,-a);
    // exactly one lies in {re > 0, im >= 0}.
    if (z.re() > 0 && z.im() >= 0) return GaussianInt(1);
    if (z.re() <= 0 && z.im() > 0) return GaussianInt(0, -1);  // -i * z = (b, -a) -> (im, -re)
    if (z.re() < 0 && z.im() <= 0) return GaussianInt(-1, 0);
    return GaussianInt(0, 1);  // re >= 0, im < 0
}

GaussianInt canonical_associate(const GaussianInt& z) {
    return canonical_unit(z) * z;
}

GaussianInt gi_gcd(const GaussianInt& a, const GaussianInt& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gi_gcd: gcd(0,0) undefined");
    GaussianInt x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod_rounded(x, y);
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

GaussianInt gi_pow(const GaussianInt& z, unsigned long e) {
    GaussianInt acc(1), base = z;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

ExtendedGcd gi_extended_gcd(const GaussianInt& a, const GaussianInt& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gi_extended_gcd: gcd(0,0) undefined");
    GaussianInt r0 = a, r1 = b;
    GaussianInt s0(1), s1(0);
    GaussianInt t0(0), t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod_rounded(r0, r1);
        r0 = r1;
        r1 = r;
        GaussianInt s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        GaussianInt t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    const GaussianInt u = canonical_unit(r0);
    return {u * r0, u * s0, u * t0};
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// integer := ['+'|'-'] digits ; returns false if no digits present
bool read_integer(std::string_view s, size_t& pos, mpz_class& out, bool& had_digits) {
    size_t start = pos;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    std::string digits;
    while (pos < s.size() && is_digit(s[pos])) digits.push_back(s[pos++]);
    had_digits = !digits.empty();
    if (!had_digits) {
        out = neg ? -1 : 1;  // bare sign: coefficient of a lone 'i'
        if (start == pos) out = 1;
        return pos != start || start == pos;
    }
    out = mpz_class(digits);
    if (neg) out = -out;
    return true;
}

}  // namespace

GaussianInt parse_gaussian(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("parse_gaussian: empty input");

    size_t pos = 0;
    mpz_class first;
    bool digits = false;
    read_integer(s, pos, first, digits);
    if (!digits && pos == 0 && s[pos] != 'i')
        throw std::invalid_argument("parse_gaussian: expected number in '" + s + "'");

    // lone imaginary part: "i", "-i", "3i"
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        if (pos != s.size())
            throw std::invalid_argument("parse_gaussian: trailing input in '" + s + "'");
        return {mpz_class(0), first};
    }
    if (!digits) throw std::invalid_argument("parse_gaussian: expected number in '" + s + "'");
    if (pos == s.size()) return {first, mpz_class(0)};

    if (s[pos] != '+' && s[pos] != '-')
        throw std::invalid_argument("parse_gaussian: expected '+' or '-' in '" + s + "'");
    mpz_class second;
    bool digits2 = false;
    read_integer(s, pos, second, digits2);
    if (pos >= s.size() || s[pos] != 'i')
        throw std::invalid_argument("parse_gaussian: expected imaginary part in '" + s + "'");
    ++pos;
    if (pos != s.size())
        throw std::invalid_argument("parse_gaussian: trailing input in '" + s + "'");
    return {first, second};
}

}  // namespace gaussint
