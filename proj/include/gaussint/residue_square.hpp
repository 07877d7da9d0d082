#pragma once

#include <vector>

#include "gaussint/gaussian_int.hpp"

namespace gaussint {

/// The residue square S_alpha, a canonical complete residue system mod
/// alpha: z in S_alpha iff 0 < Re(z*conj(alpha)) <= N(alpha) and
/// 0 < Im(z*conj(alpha)) <= N(alpha). Exactly N(alpha) elements, pairwise
/// incongruent. The rotated-inequality form is algebraically identical to
/// the arg/real-part definition and needs only exact integers.
class ResidueSquare {
public:
    explicit ResidueSquare(GaussianInt alpha);

    const GaussianInt& modulus() const { return alpha_; }
    const mpz_class& modulus_norm() const { return norm_; }

    bool contains(const GaussianInt& z) const;

    /// The unique w in S_alpha with w == z (mod alpha); |w| <= sqrt(2)|alpha|.
    GaussianInt reduce(const GaussianInt& z) const;

    /// All N(alpha) elements in deterministic row-major order (im outer,
    /// re inner over the bounding box). Throws if the norm is too large to
    /// enumerate.
    std::vector<GaussianInt> elements() const;

private:
    GaussianInt alpha_;
    mpz_class norm_;
};

/// reduce(z, alpha) convenience wrapper.
GaussianInt residue_square_reduce(const GaussianInt& z, const GaussianInt& alpha);

/// S_modulus as a stream of exactly norm(modulus) pairwise-incongruent
/// values, fixed order.
std::vector<GaussianInt> residues_mod(const GaussianInt& modulus);

}  // namespace gaussint
