#include "gaussint/polynomial.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "gaussint/numutil.hpp"

namespace gaussint {

namespace {
const GaussianInt kZero{};
}

GIPolynomial::GIPolynomial(std::vector<GaussianInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void GIPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GIPolynomial GIPolynomial::constant(GaussianInt c) {
    return GIPolynomial(std::vector<GaussianInt>{std::move(c)});
}

GIPolynomial GIPolynomial::monomial(GaussianInt c, unsigned long k) {
    std::vector<GaussianInt> v(k + 1);
    v[k] = std::move(c);
    return GIPolynomial(std::move(v));
}

unsigned long GIPolynomial::degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return coeffs_.size() - 1;
}

const GaussianInt& GIPolynomial::coeff(unsigned long j) const {
    return j < coeffs_.size() ? coeffs_[j] : kZero;
}

const GaussianInt& GIPolynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

GaussianInt GIPolynomial::eval(const GaussianInt& z) const {
    GaussianInt acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

GIPolynomial GIPolynomial::operator+(const GIPolynomial& q) const {
    std::vector<GaussianInt> v(std::max(coeffs_.size(), q.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + q.coeff(i);
    return GIPolynomial(std::move(v));
}

GIPolynomial GIPolynomial::operator-(const GIPolynomial& q) const {
    std::vector<GaussianInt> v(std::max(coeffs_.size(), q.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - q.coeff(i);
    return GIPolynomial(std::move(v));
}

GIPolynomial GIPolynomial::operator*(const GIPolynomial& q) const {
    if (is_zero() || q.is_zero()) return zero();
    std::vector<GaussianInt> v(coeffs_.size() + q.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * q.coeffs_[j];
    return GIPolynomial(std::move(v));
}

GIPolynomial GIPolynomial::operator*(const GaussianInt& c) const {
    std::vector<GaussianInt> v(coeffs_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] * c;
    return GIPolynomial(std::move(v));
}

GIPolynomial GIPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return zero();
    std::vector<GaussianInt> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * mpz_class(i);
    return GIPolynomial(std::move(v));
}

std::optional<GIPolynomial> GIPolynomial::div_exact_scalar(const GaussianInt& c) const {
    if (c.is_zero()) throw std::domain_error("div_exact_scalar: zero divisor");
    std::vector<GaussianInt> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (!divides(c, coeffs_[i])) return std::nullopt;
        v[i] = div_exact(coeffs_[i], c);
    }
    return GIPolynomial(std::move(v));
}

std::string GIPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = coeffs_.size(); j-- > 0;) {
        if (coeffs_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[j] << ")";
        if (j >= 1) os << "x";
        if (j >= 2) os << "^" << j;
    }
    return os.str();
}

mpz_class mp_squared(const GIPolynomial& p) {
    if (p.is_zero()) throw std::domain_error("mp_squared: zero polynomial");
    mpz_class m = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class n = c.norm();
        if (n > m) m = n;
    }
    return 4 * m;
}

NonvanishingWitness nonvanishing_check(const GIPolynomial& p, const GaussianInt& z) {
    if (p.is_zero() || p.degree() == 0)
        throw std::domain_error("nonvanishing_check: polynomial must be nonconstant");
    const GaussianInt value = p.eval(z);
    if (z.norm() > mp_squared(p)) {
        if (value.is_zero())
            throw std::logic_error("nonvanishing_check: root beyond the Cauchy radius");
        return {true, value};
    }
    return {false, value};
}

GIPolynomial shift_scale(const GIPolynomial& q, const GaussianInt& r, const GaussianInt& alpha) {
    if (alpha.is_zero()) throw std::domain_error("shift_scale: alpha must be nonzero");
    if (q.is_zero()) return GIPolynomial::zero();
    // Horner in the linear substitution: result = ((a_d)(alpha x + r) + a_{d-1})...
    GIPolynomial lin(std::vector<GaussianInt>{r, alpha});
    GIPolynomial acc;
    for (size_t j = q.coeffs().size(); j-- > 0;)
        acc = acc * lin + GIPolynomial::constant(q.coeffs()[j]);
    return acc;
}

GIPolynomial degree_lower_diff(const GIPolynomial& p, const GaussianInt& k, const GaussianInt& k_prime) {
    if (p.is_zero() || p.degree() < 1)
        throw std::domain_error("degree_lower_diff: polynomial must be nonconstant");
    if (k == k_prime) throw std::domain_error("degree_lower_diff: k and k' must differ");
    const unsigned long d = p.degree();

    // powers of k and k' up to d
    std::vector<GaussianInt> pk(d + 1), pk2(d + 1);
    pk[0] = GaussianInt(1);
    pk2[0] = GaussianInt(1);
    for (unsigned long i = 1; i <= d; ++i) {
        pk[i] = pk[i - 1] * k;
        pk2[i] = pk2[i - 1] * k_prime;
    }

    std::vector<GaussianInt> b(d);
    for (unsigned long j = 0; j < d; ++j)
        for (unsigned long i = j + 1; i <= d; ++i)
            b[j] += p.coeff(i) * binomial(i, j) * (pk2[i - j] - pk[i - j]);

    GIPolynomial out{std::move(b)};
    if (out.is_zero() || out.degree() != d - 1)
        throw std::logic_error("degree_lower_diff: degree did not drop by one");

    // squared bound: 4*norm(b_j) <= 2^{4d} * M_p^2 * max(N(k), N(k'))^d
    const mpz_class kn = std::max(k.norm(), k_prime.norm());
    const mpz_class rhs = (mpz_class(1) << (4 * d)) * mp_squared(p) * pow_mpz(kn, d);
    for (const auto& bj : out.coeffs())
        if (4 * bj.norm() > rhs)
            throw std::logic_error("degree_lower_diff: coefficient bound violated");
    return out;
}

bool mq_bound_check(const GIPolynomial& q_a, const GIPolynomial& q, const GaussianInt& alpha) {
    const unsigned long d = q.degree();
    const mpz_class rhs = (mpz_class(1) << (4 * d)) * pow_mpz(alpha.norm(), d - 1) * mp_squared(q);
    return mp_squared(q_a) <= rhs;
}

namespace {

struct PolyParser {
    std::string s;
    size_t pos = 0;

    explicit PolyParser(std::string_view text) {
        s.reserve(text.size());
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse_polynomial: " + why + " at position " +
                                    std::to_string(pos) + " in '" + s + "'");
    }

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    mpz_class read_uint() {
        size_t start = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected digits");
        return mpz_class(s.substr(start, pos - start));
    }

    // coeff := '(' gaussian ')' | uint 'i'? | 'i'
    GaussianInt read_coeff() {
        if (peek() == '(') {
            size_t depth = 0, start = pos;
            while (!eof()) {
                if (peek() == '(') ++depth;
                if (peek() == ')' && --depth == 0) break;
                ++pos;
            }
            if (eof()) fail("unbalanced parenthesis");
            std::string inner = s.substr(start + 1, pos - start - 1);
            ++pos;  // consume ')'
            return parse_gaussian(inner);
        }
        if (peek() == 'i') {
            ++pos;
            return {0, 1};
        }
        mpz_class n = read_uint();
        if (!eof() && peek() == 'i') {
            ++pos;
            return {mpz_class(0), n};
        }
        return {n, mpz_class(0)};
    }

    // term := coeff '*'? xpart | coeff | xpart
    GIPolynomial read_term() {
        GaussianInt c(1);
        bool have_coeff = false;
        if (!eof() && peek() != 'x') {
            c = read_coeff();
            have_coeff = true;
        }
        if (!eof() && peek() == '*') {
            ++pos;
            if (eof() || peek() != 'x') fail("expected x after '*'");
        }
        unsigned long power = 0;
        if (!eof() && peek() == 'x') {
            ++pos;
            power = 1;
            if (!eof() && peek() == '^') {
                ++pos;
                mpz_class e = read_uint();
                if (!e.fits_ulong_p()) fail("exponent too large");
                power = e.get_ui();
            }
        } else if (!have_coeff) {
            fail("expected term");
        }
        return GIPolynomial::monomial(c, power);
    }

    GIPolynomial parse() {
        if (eof()) fail("empty input");
        GIPolynomial acc = GIPolynomial::zero();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = (peek() == '-');
            ++pos;
        }
        for (;;) {
            GIPolynomial term = read_term();
            acc = negate ? acc - term : acc + term;
            if (eof()) break;
            if (peek() == '+')
                negate = false;
            else if (peek() == '-')
                negate = true;
            else
                fail("expected '+' or '-'");
            ++pos;
        }
        return acc;
    }
};

}  // namespace

GIPolynomial parse_polynomial(std::string_view text) {
    return PolyParser(text).parse();
}

}  // namespace gaussint
