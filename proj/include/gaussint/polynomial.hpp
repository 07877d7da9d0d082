#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaussint/gaussian_int.hpp"

namespace gaussint {

/// Polynomial over Z[i] by ascending coefficient vector a_0..a_d, a_d != 0.
/// The zero polynomial is a distinct variant (empty vector); its degree is
/// an error, never -infinity arithmetic.
///
/// M_p := 2*max|a_j| is irrational in general, so the artifact stores and
/// compares M_p^2 = 4*max norm(a_j); every |.|-inequality downstream is used
/// in its squared form over exact integers.
class GIPolynomial {
public:
    GIPolynomial() = default;
    explicit GIPolynomial(std::vector<GaussianInt> coeffs);

    static GIPolynomial zero() { return GIPolynomial(); }
    static GIPolynomial constant(GaussianInt c);
    /// c * x^k
    static GIPolynomial monomial(GaussianInt c, unsigned long k);

    bool is_zero() const { return coeffs_.empty(); }
    unsigned long degree() const;
    const std::vector<GaussianInt>& coeffs() const { return coeffs_; }
    const GaussianInt& coeff(unsigned long j) const;  // 0 beyond degree
    const GaussianInt& leading() const;

    GaussianInt eval(const GaussianInt& z) const;

    GIPolynomial operator+(const GIPolynomial& q) const;
    GIPolynomial operator-(const GIPolynomial& q) const;
    GIPolynomial operator*(const GIPolynomial& q) const;
    GIPolynomial operator*(const GaussianInt& c) const;
    bool operator==(const GIPolynomial& q) const { return coeffs_ == q.coeffs_; }
    bool operator!=(const GIPolynomial& q) const { return !(*this == q); }

    GIPolynomial derivative() const;

    /// Coefficientwise exact division by c; nullopt if some coefficient is
    /// not divisible.
    std::optional<GIPolynomial> div_exact_scalar(const GaussianInt& c) const;

    std::string to_string() const;

private:
    std::vector<GaussianInt> coeffs_;
    void normalize();
};

/// M_p^2 = 4 * max_j norm(a_j), exact. Throws on the zero polynomial.
mpz_class mp_squared(const GIPolynomial& p);

/// Root localization: p(z) != 0 whenever |z| > M_p. For norm(z) > M_p^2 the
/// result is guaranteed_nonzero (with the evaluation asserted nonzero);
/// otherwise must_evaluate with the exact value attached.
struct NonvanishingWitness {
    bool guaranteed_nonzero;
    GaussianInt value;
};
NonvanishingWitness nonvanishing_check(const GIPolynomial& p, const GaussianInt& z);

/// q(r + alpha*x) by exact binomial expansion; degree preserved, leading
/// coefficient a_d * alpha^d. alpha must be nonzero.
GIPolynomial shift_scale(const GIPolynomial& q, const GaussianInt& r, const GaussianInt& alpha);

/// The degree-lowering difference polynomial p' with
/// p'(y) = p(y + k') - p(y + k), built from the closed-form coefficients
/// b_j = sum_{i=j+1}^{d} a_i * C(i,j) * (k'^{i-j} - k^{i-j}).
/// deg p' = deg p - 1 and b_{d-1} = a_d * d * (k'-k) != 0; the squared
/// coefficient bound 4*norm(b_j) <= 2^{4d} * M_p^2 * max(N(k),N(k'))^d is
/// checked on every call. Throws for k = k' or constant p.
GIPolynomial degree_lower_diff(const GIPolynomial& p, const GaussianInt& k, const GaussianInt& k_prime);

/// Squared form of the auxiliary-polynomial coefficient bound
/// M_{q_a} <= 2^{2d} |alpha|^{d-1} M_q, i.e.
/// M_{q_a}^2 <= 2^{4d} * norm(alpha)^{d-1} * M_q^2.
bool mq_bound_check(const GIPolynomial& q_a, const GIPolynomial& q, const GaussianInt& alpha);

/// Inline surface syntax, e.g. "x^2 + (1+1i)x - 3". Grammar:
///   poly  := term (('+'|'-') term)*
///   term  := coeff '*'? xpart | coeff | xpart
///   xpart := 'x' ('^' uint)?
///   coeff := '(' gaussian ')' | int | int? 'i'
/// Throws std::invalid_argument on malformed input.
GIPolynomial parse_polynomial(std::string_view text);

}  // namespace gaussint
