#include "gaussint/qi_poly.hpp"

#include <stdexcept>

namespace gaussint {

GaussianRational GaussianRational::operator/(const GaussianRational& w) const {
    if (w.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    const mpq_class n = w.norm();
    const GaussianRational t = *this * w.conj();
    return {t.re / n, t.im / n};
}

QiPoly::QiPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QiPoly::QiPoly(const GIPolynomial& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void QiPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

unsigned long QiPoly::degree() const {
    if (is_zero()) throw std::domain_error("degree of zero polynomial");
    return coeffs_.size() - 1;
}

const GaussianRational& QiPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

QiPoly QiPoly::operator+(const QiPoly& q) const {
    std::vector<GaussianRational> v(std::max(coeffs_.size(), q.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < coeffs_.size()) v[i] = v[i] + coeffs_[i];
        if (i < q.coeffs_.size()) v[i] = v[i] + q.coeffs_[i];
    }
    return QiPoly(std::move(v));
}

QiPoly QiPoly::operator-(const QiPoly& q) const {
    return *this + q * GaussianRational(mpq_class(-1), mpq_class(0));
}

QiPoly QiPoly::operator*(const QiPoly& q) const {
    if (is_zero() || q.is_zero()) return {};
    std::vector<GaussianRational> v(coeffs_.size() + q.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < q.coeffs_.size(); ++j)
            v[i + j] = v[i + j] + coeffs_[i] * q.coeffs_[j];
    return QiPoly(std::move(v));
}

QiPoly QiPoly::operator*(const GaussianRational& c) const {
    std::vector<GaussianRational> v(coeffs_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] * c;
    return QiPoly(std::move(v));
}

QiPoly QiPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<GaussianRational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * GaussianRational(mpq_class(i), mpq_class(0));
    return QiPoly(std::move(v));
}

QiPoly QiPoly::monic() const {
    if (is_zero()) return {};
    const GaussianRational inv = GaussianRational(mpq_class(1), mpq_class(0)) / leading();
    return *this * inv;
}

std::pair<QiPoly, QiPoly> QiPoly::divmod(const QiPoly& d) const {
    if (d.is_zero()) throw std::domain_error("QiPoly::divmod: zero divisor");
    QiPoly rem = *this;
    if (rem.is_zero() || rem.degree() < d.degree()) return {QiPoly(), rem};
    std::vector<GaussianRational> q(rem.degree() - d.degree() + 1);
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        const unsigned long shift = rem.degree() - d.degree();
        const GaussianRational c = rem.leading() / d.leading();
        q[shift] = c;
        std::vector<GaussianRational> sub(shift + d.coeffs().size());
        for (size_t i = 0; i < d.coeffs().size(); ++i) sub[shift + i] = d.coeffs()[i] * c;
        rem = rem - QiPoly(std::move(sub));
    }
    return {QiPoly(std::move(q)), rem};
}

QiPoly qi_gcd(const QiPoly& a, const QiPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("qi_gcd: gcd(0,0) undefined");
    QiPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = x.divmod(y);
        (void)q;
        x = y;
        y = r;
    }
    return x.monic();
}

GIPolynomial primitive_integer_poly(const QiPoly& p) {
    if (p.is_zero()) return GIPolynomial::zero();
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class t;
        mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), c.re.get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), t.get_mpz_t(), c.im.get_den().get_mpz_t());
    }
    std::vector<GaussianInt> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        mpq_class re = c.re * l, im = c.im * l;
        v.emplace_back(re.get_num(), im.get_num());
    }
    // Z[i]-content
    GaussianInt content;
    bool first = true;
    for (const auto& c : v) {
        if (c.is_zero()) continue;
        content = first ? canonical_associate(c) : gi_gcd(content, c);
        first = false;
    }
    for (auto& c : v) c = div_exact(c, content);
    GIPolynomial out{std::move(v)};
    return out * canonical_unit(out.leading());
}

GIPolynomial squarefree_part(const GIPolynomial& q) {
    if (q.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (q.degree() == 0) return GIPolynomial::constant(GaussianInt(1));
    const QiPoly f(q);
    const QiPoly g = qi_gcd(f, f.derivative());
    auto [quot, rem] = f.divmod(g);
    if (!rem.is_zero()) throw std::logic_error("squarefree_part: inexact division");
    return primitive_integer_poly(quot);
}

std::vector<std::pair<GIPolynomial, unsigned long>> squarefree_decomposition(const GIPolynomial& q) {
    if (q.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<GIPolynomial, unsigned long>> out;
    if (q.degree() == 0) return out;

    // Yun's algorithm over Q(i) (characteristic 0).
    const QiPoly f(q);
    QiPoly g = qi_gcd(f, f.derivative());
    QiPoly c = f.divmod(g).first;
    QiPoly d = f.derivative().divmod(g).first - c.derivative();
    for (unsigned long m = 1; !c.is_zero() && c.degree() >= 1; ++m) {
        if (m > q.degree() + 1) throw std::logic_error("squarefree_decomposition: runaway loop");
        QiPoly fac = qi_gcd(c, d);
        if (fac.degree() >= 1) out.emplace_back(primitive_integer_poly(fac), m);
        c = c.divmod(fac).first;
        d = d.divmod(fac).first - c.derivative();
    }
    return out;
}

GaussianInt resultant(const GIPolynomial& f, const GIPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return GaussianInt();
    const unsigned long m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return GaussianInt(1);
    if (n == 0) return gi_pow(g.leading(), m);
    if (m == 0) return gi_pow(f.leading(), n);

    // Sylvester matrix, (m+n) x (m+n)
    const size_t size = m + n;
    std::vector<std::vector<GaussianInt>> a(size, std::vector<GaussianInt>(size));
    for (unsigned long r = 0; r < n; ++r)
        for (unsigned long j = 0; j <= m; ++j) a[r][r + j] = f.coeff(m - j);
    for (unsigned long r = 0; r < m; ++r)
        for (unsigned long j = 0; j <= n; ++j) a[n + r][r + j] = g.coeff(n - j);

    // Bareiss fraction-free elimination (exact division in Z[i]).
    GaussianInt prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < size; ++k) {
        if (a[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < size && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == size) return GaussianInt();  // singular: resultant 0
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < size; ++i)
            for (size_t j = k + 1; j < size; ++j)
                a[i][j] = div_exact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    GaussianInt det = a[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

}  // namespace gaussint
