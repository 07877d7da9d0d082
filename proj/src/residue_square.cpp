#include "gaussint/residue_square.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaussint {

ResidueSquare::ResidueSquare(GaussianInt alpha) : alpha_(std::move(alpha)), norm_(alpha_.norm()) {
    if (alpha_.is_zero()) throw std::domain_error("ResidueSquare: zero modulus");
}

bool ResidueSquare::contains(const GaussianInt& z) const {
    const GaussianInt t = z * alpha_.conj();
    return t.re() > 0 && t.re() <= norm_ && t.im() > 0 && t.im() <= norm_;
}

GaussianInt ResidueSquare::reduce(const GaussianInt& z) const {
    // With t = z*conj(alpha) = u + vi, subtracting q*alpha from z shifts t
    // by -q*N(alpha) componentwise; the unique q lands u', v' in (0, N].
    const GaussianInt t = z * alpha_.conj();
    mpz_class qr, qi, tmp;
    tmp = t.re() - 1;
    mpz_fdiv_q(qr.get_mpz_t(), tmp.get_mpz_t(), norm_.get_mpz_t());
    tmp = t.im() - 1;
    mpz_fdiv_q(qi.get_mpz_t(), tmp.get_mpz_t(), norm_.get_mpz_t());
    return z - GaussianInt(qr, qi) * alpha_;
}

std::vector<GaussianInt> ResidueSquare::elements() const {
    if (!norm_.fits_slong_p() || norm_.get_si() > 100000000L)
        throw std::domain_error("ResidueSquare::elements: modulus norm too large to enumerate");

    // Bounding box of the half-open square with corners {0, a, ia, (1+i)a}.
    const mpz_class& ar = alpha_.re();
    const mpz_class& ai = alpha_.im();
    mpz_class xs[4] = {0, ar, -ai, ar - ai};
    mpz_class ys[4] = {0, ai, ar, ar + ai};
    mpz_class xmin = *std::min_element(xs, xs + 4), xmax = *std::max_element(xs, xs + 4);
    mpz_class ymin = *std::min_element(ys, ys + 4), ymax = *std::max_element(ys, ys + 4);

    std::vector<GaussianInt> out;
    out.reserve(norm_.get_ui());
    for (mpz_class y = ymin; y <= ymax; ++y)
        for (mpz_class x = xmin; x <= xmax; ++x) {
            GaussianInt z{x, y};
            if (contains(z)) out.push_back(z);
        }
    if (mpz_class(out.size()) != norm_)
        throw std::logic_error("ResidueSquare::elements: cardinality mismatch");
    return out;
}

GaussianInt residue_square_reduce(const GaussianInt& z, const GaussianInt& alpha) {
    return ResidueSquare(alpha).reduce(z);
}

std::vector<GaussianInt> residues_mod(const GaussianInt& modulus) {
    return ResidueSquare(modulus).elements();
}

}  // namespace gaussint
