#include "gaussint/ideal_arith.hpp"

#include <algorithm>
#include <stdexcept>

#include "gaussint/residue_square.hpp"

namespace gaussint {

GaussianInt IdealFactorization::primary_product() const {
    GaussianInt prod(1);
    for (const auto& [prime, e] : factors)
        for (unsigned long i = 0; i < e; ++i) prod *= prime.pi;
    return prod;
}

unsigned long prime_valuation(const GaussianInt& pi, const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("prime_valuation: zero argument");
    unsigned long v = 0;
    GaussianInt w = z;
    while (divides(pi, w)) {
        w = div_exact(w, pi);
        ++v;
    }
    return v;
}

IdealFactorization factor_ideal(const GaussianInt& alpha, unsigned long rho_budget) {
    if (alpha.is_zero()) throw std::domain_error("factor_ideal: zero ideal");
    IdealFactorization out;
    out.generator = alpha;
    if (alpha.is_unit()) {
        out.unit = alpha;
        return out;
    }

    const auto norm_factors = factor_integer(alpha.norm(), rho_budget);
    for (const auto& [p, f] : norm_factors) {
        if (p == 2) {
            GaussianPrime pr{GaussianInt(1, 1), 2, SplitType::ramified};
            out.factors.emplace_back(pr, f);  // v_{1+i}(alpha) = v_2(norm)
        } else if (p % 4 == 3) {
            if (f % 2 != 0) throw std::logic_error("factor_ideal: odd inert exponent");
            GaussianPrime pr{GaussianInt(p, mpz_class(0)), p, SplitType::inert};
            out.factors.emplace_back(pr, f / 2);
        } else {
            const mpz_class x = sqrt_minus_one_mod(p);
            GaussianInt pi = canonical_associate(gi_gcd(GaussianInt(p, mpz_class(0)), GaussianInt(x, mpz_class(-1))));
            GaussianInt pibar = canonical_associate(pi.conj());
            if (pibar < pi) std::swap(pi, pibar);
            const unsigned long e1 = prime_valuation(pi, alpha);
            const unsigned long e2 = f - e1;
            GaussianPrime pr1{pi, p, SplitType::split};
            GaussianPrime pr2{pibar, p, SplitType::split};
            if (e1 > 0) out.factors.emplace_back(pr1, e1);
            if (e2 > 0) out.factors.emplace_back(pr2, e2);
        }
    }

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.p != b.first.p) return a.first.p < b.first.p;
        if (a.first.pi.re() != b.first.pi.re()) return a.first.pi.re() < b.first.pi.re();
        return a.first.pi.im() < b.first.pi.im();
    });

    out.unit = div_exact(alpha, out.primary_product());
    if (!out.unit.is_unit()) throw std::logic_error("factor_ideal: unit part is not a unit");
    return out;
}

GaussianInt inverse_mod(const GaussianInt& a, const GaussianInt& m) {
    const auto ext = gi_extended_gcd(a, m);
    if (!ext.g.is_unit()) throw std::domain_error("inverse_mod: argument not invertible");
    // u*a + v*m = g with g a unit: a^{-1} = u / g
    const GaussianInt ginv = ext.g.conj();  // units: g * conj(g) = 1
    return residue_square_reduce(ext.u * ginv, m);
}

GaussianInt crt(const std::vector<std::pair<GaussianInt, GaussianInt>>& residues) {
    if (residues.empty()) throw std::domain_error("crt: empty congruence list");
    for (size_t i = 0; i < residues.size(); ++i) {
        if (residues[i].second.is_zero()) throw std::domain_error("crt: zero modulus");
        for (size_t j = i + 1; j < residues.size(); ++j)
            if (!gi_gcd(residues[i].second, residues[j].second).is_unit())
                throw std::domain_error("crt: moduli not pairwise coprime");
    }

    GaussianInt x = residues[0].first;
    GaussianInt mod = residues[0].second;
    x = residue_square_reduce(x, mod);
    for (size_t i = 1; i < residues.size(); ++i) {
        const GaussianInt& b = residues[i].first;
        const GaussianInt& n = residues[i].second;
        // x' = x + mod * t with t == (b - x)/mod (mod n)
        const GaussianInt t = residue_square_reduce(inverse_mod(mod, n) * (b - x), n);
        x = x + mod * t;
        mod = mod * n;
        x = residue_square_reduce(x, mod);
    }
    return x;
}

std::vector<GaussianPrime> primes_up_to_norm(const mpz_class& bound) {
    std::vector<GaussianPrime> out;
    if (bound < 2) return out;
    for (mpz_class p = 2; p <= bound; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (p == 2) {
            out.push_back({GaussianInt(1, 1), 2, SplitType::ramified});
        } else if (p % 4 == 1) {
            const mpz_class x = sqrt_minus_one_mod(p);
            GaussianInt pi = canonical_associate(gi_gcd(GaussianInt(p, mpz_class(0)), GaussianInt(x, mpz_class(-1))));
            GaussianInt pibar = canonical_associate(pi.conj());
            if (pibar < pi) std::swap(pi, pibar);
            out.push_back({pi, p, SplitType::split});
            out.push_back({pibar, p, SplitType::split});
        } else if (p * p <= bound) {
            out.push_back({GaussianInt(p, mpz_class(0)), p, SplitType::inert});
        }
    }
    std::sort(out.begin(), out.end(), [](const GaussianPrime& a, const GaussianPrime& b) {
        const mpz_class na = a.norm(), nb = b.norm();
        if (na != nb) return na < nb;
        if (a.pi.re() != b.pi.re()) return a.pi.re() < b.pi.re();
        return a.pi.im() < b.pi.im();
    });
    return out;
}

}  // namespace gaussint
