#pragma once

#include <vector>

#include "gaussint/gaussian_int.hpp"
#include "gaussint/polynomial.hpp"

namespace gaussint {

/// Element of Q(i) with exact rational coordinates.
struct GaussianRational {
    mpq_class re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(const GaussianInt& z) : re(z.re()), im(z.im()) {}

    bool is_zero() const { return re == 0 && im == 0; }
    mpq_class norm() const { return re * re + im * im; }
    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator+(const GaussianRational& w) const { return {re + w.re, im + w.im}; }
    GaussianRational operator-(const GaussianRational& w) const { return {re - w.re, im - w.im}; }
    GaussianRational operator*(const GaussianRational& w) const {
        return {re * w.re - im * w.im, re * w.im + im * w.re};
    }
    GaussianRational operator/(const GaussianRational& w) const;
    bool operator==(const GaussianRational& w) const { return re == w.re && im == w.im; }
};

/// Polynomial over Q(i), used only for gcd/squarefree machinery.
class QiPoly {
public:
    QiPoly() = default;
    explicit QiPoly(std::vector<GaussianRational> coeffs);
    explicit QiPoly(const GIPolynomial& p);

    bool is_zero() const { return coeffs_.empty(); }
    unsigned long degree() const;
    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    const GaussianRational& leading() const;

    QiPoly operator+(const QiPoly& q) const;
    QiPoly operator-(const QiPoly& q) const;
    QiPoly operator*(const QiPoly& q) const;
    QiPoly operator*(const GaussianRational& c) const;
    QiPoly derivative() const;
    QiPoly monic() const;

    /// Euclidean division: returns (quotient, remainder).
    std::pair<QiPoly, QiPoly> divmod(const QiPoly& d) const;

private:
    std::vector<GaussianRational> coeffs_;
    void normalize();
};

/// Monic gcd over Q(i)[x]; gcd(0,0) is an error.
QiPoly qi_gcd(const QiPoly& a, const QiPoly& b);

/// Clear denominators and divide by the Z[i]-content; leading coefficient
/// normalized to its canonical associate.
GIPolynomial primitive_integer_poly(const QiPoly& p);

/// Squarefree part of q over Q(i), returned primitive over Z[i].
GIPolynomial squarefree_part(const GIPolynomial& q);

/// Yun decomposition q ~ prod f_m^m: pairs (f_m primitive over Z[i],
/// multiplicity m) for the factors with deg >= 1, ascending m.
std::vector<std::pair<GIPolynomial, unsigned long>> squarefree_decomposition(const GIPolynomial& q);

/// Resultant Res(f, g) over Z[i] via fraction-free Bareiss elimination of
/// the Sylvester matrix. Res(f, c) = c^{deg f} for constant c.
GaussianInt resultant(const GIPolynomial& f, const GIPolynomial& g);

}  // namespace gaussint
