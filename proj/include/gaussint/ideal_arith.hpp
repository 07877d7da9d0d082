#pragma once

#include <vector>

#include "gaussint/gaussian_int.hpp"
#include "gaussint/int_factor.hpp"

namespace gaussint {

enum class SplitType { ramified, split, inert };

/// A Gaussian prime as canonical-associate generator plus its residue
/// characteristic. norm(pi) = p for split/ramified, p^2 for inert;
/// ramified only at p = 2 (pi = 1+i up to units).
struct GaussianPrime {
    GaussianInt pi;
    mpz_class p;
    SplitType type;

    mpz_class norm() const { return pi.norm(); }
    bool operator==(const GaussianPrime& o) const { return pi == o.pi; }
};

/// A nonzero ideal of Z[i] as generator plus prime-power decomposition:
/// generator = unit * prod pi_i^{e_i}, primes pairwise non-associate,
/// ordered by (p, canonical pi lexicographic).
struct IdealFactorization {
    GaussianInt generator;
    GaussianInt unit;
    std::vector<std::pair<GaussianPrime, unsigned long>> factors;

    /// prod pi^e (an associate of the generator).
    GaussianInt primary_product() const;
};

/// Exact prime-power factorization of (alpha). Units get an empty factor
/// list. Deterministic ordering. Throws std::domain_error for alpha = 0 and
/// EffortExceeded if the norm cannot be factored within rho_budget.
IdealFactorization factor_ideal(const GaussianInt& alpha,
                                unsigned long rho_budget = 50'000'000);

/// pi-adic valuation v_pi(z) for z != 0.
unsigned long prime_valuation(const GaussianInt& pi, const GaussianInt& z);

/// Chinese remainder theorem: z == residues[i].first (mod residues[i].second)
/// for all i, with pairwise coprime moduli; result reduced into S of the
/// modulus product. Throws std::domain_error on non-coprime moduli.
GaussianInt crt(const std::vector<std::pair<GaussianInt, GaussianInt>>& residues);

/// Inverse of a mod m (gcd(a, m) must be a unit).
GaussianInt inverse_mod(const GaussianInt& a, const GaussianInt& m);

/// All Gaussian primes with norm <= bound, canonical generators, sorted by
/// (norm, re, im).
std::vector<GaussianPrime> primes_up_to_norm(const mpz_class& bound);

}  // namespace gaussint
