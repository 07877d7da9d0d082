#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gaussint/ideal_arith.hpp"
#include "gaussint/polynomial.hpp"

namespace gaussint {

/// A root of q modulo pi^k together with its Hensel data.
///
/// Lifting operates on the squarefree part q_sf of q: a branch of
/// multiplicity >= 2 has v_pi(q'(s)) growing with the level, which is why
/// deriv_valuation stores t = v_pi(q_sf'(s)) (always finite, equal to
/// v_pi(q'(s)) on simple branches). liftable means level > 2t. A branch
/// descending from an exact Z[i] root carries it in exact_root and lifts as
/// the constant sequence.
struct PAdicRootApprox {
    GaussianPrime prime;
    unsigned long level = 1;
    GaussianInt value;  // reduced into S_{pi^level}
    unsigned long deriv_valuation = 0;
    bool liftable = false;
    unsigned long multiplicity = 1;
    std::optional<GaussianInt> exact_root;
};

/// Exhaustive no-root table for one prime-power modulus: the certificate
/// behind a not-intersective verdict. Re-checkable without recomputation.
struct NoRootCertificate {
    GaussianPrime prime;
    unsigned long level = 1;
    GaussianInt modulus;  // pi^level
    std::vector<GaussianInt> residues_checked;
};

enum class Verdict { intersective, not_intersective, inconclusive };

struct IntersectivityVerdict {
    Verdict verdict = Verdict::inconclusive;
    /// One liftable branch per bad prime (empty when a global root or
    /// q(0) = 0 short-circuits the analysis).
    std::vector<PAdicRootApprox> witnesses;
    std::optional<NoRootCertificate> counterexample;
    std::optional<GaussianInt> global_root;
    /// Good primes were scanned for no-root counterexamples up to this norm.
    mpz_class good_prime_norm_bound = 0;
    std::string inconclusive_reason;
};

/// Search budgets for the decision procedure.
struct EffortBound {
    mpz_class good_prime_norm = 1000;
    unsigned long rho_budget = 50'000'000;
    /// cap on norm(pi^K) for exhaustive/refined root searches
    mpz_class max_power_norm = mpz_class(1) << 62;
};

/// All residues s in S_{pi^k} with pi^k | q(s); deterministic (im, re)-lex
/// order. Exhaustive enumeration at small norms, branch refinement above.
std::vector<GaussianInt> roots_mod(const GIPolynomial& q, const GaussianPrime& prime, unsigned long k);

/// Roots of q modulo an arbitrary nonzero modulus by exhaustive residue
/// enumeration (the independent oracle used by the acceptance sweep).
std::vector<GaussianInt> roots_mod_exhaustive(const GIPolynomial& q, const GaussianInt& modulus);

/// Refine a liftable approximation to target_level (same t, compatible
/// values). Throws std::domain_error on non-liftable input.
PAdicRootApprox hensel_lift(const GIPolynomial& q, const PAdicRootApprox& approx,
                            unsigned long target_level);

/// Decide intersectivity of q:
///  - q(0) = 0 or an exact Z[i] root (complete search in the Cauchy disc)
///    short-circuits to intersective;
///  - bad primes (dividing lead(q_sf) * Res(q_sf, q_sf')) are decided
///    completely at Hensel level K = 2 v_pi(Res) + 1;
///  - remaining primes are scanned for no-root counterexamples up to
///    effort.good_prime_norm (a root mod pi at a good prime lifts with
///    t = 0, so prime powers are covered).
/// inconclusive only when a budget is exhausted.
IntersectivityVerdict decide_intersective(const GIPolynomial& q, const EffortBound& effort = {});

/// Deterministic canonical branch over one prime: first root in the fixed
/// residue-enumeration order at the decision level, with its multiplicity
/// attributed via the squarefree decomposition of q over Q(i).
PAdicRootApprox choose_canonical_root(const GIPolynomial& q, const GaussianPrime& prime,
                                      const EffortBound& effort = {});

/// Generator of lambda_q(a) = prod pi^{m_pi * e_pi} for a = (alpha),
/// canonical associate. Asserts alpha | gamma and
/// norm(gamma) <= norm(alpha)^d.
GaussianInt lambda_q(const GIPolynomial& q, const IdealFactorization& fact,
                     const EffortBound& effort = {});

/// r_a in S_alpha with r_a == s_{pi^e} (mod pi^e) for every prime power in
/// factor(alpha); q(r_a) == 0 (mod alpha) and norm(r_a) <= 4 norm(alpha).
GaussianInt build_r_a(const GIPolynomial& q, const GaussianInt& alpha,
                      const EffortBound& effort = {});

/// The auxiliary construction q_a(x) = q(r_a + alpha x) / gamma.
struct AuxiliaryConstruction {
    GIPolynomial q;
    GaussianInt alpha;
    GaussianInt r_a;
    GaussianInt gamma;
    GIPolynomial q_a;
};

/// Builds the full auxiliary construction and verifies its defining
/// identities exactly: gamma * q_a = q(r_a + alpha x) coefficientwise,
/// deg q_a = deg q, the squared M-bound, and that q_a is not decidably
/// non-intersective. alpha must be a nonzero nonunit.
AuxiliaryConstruction build_q_a(const GIPolynomial& q, const GaussianInt& alpha,
                                const EffortBound& effort = {});

/// Witness for a transfer-check failure.
struct TransferViolation {
    GaussianInt a1, a2, v;
};

/// Lucier transfer: with (A - A) disjoint from I(q) (verified by the caller
/// within range_bound), A' = {z : n + gamma z in A} must satisfy
/// (A' - A') disjoint from I(q_a). Verified exhaustively over every v whose
/// value q_a(v) is reachable by differences of A'. gamma must equal the
/// construction's gamma exactly.
bool lucier_transfer_check(const std::set<GaussianInt>& a_set, const GIPolynomial& q,
                           const GaussianInt& alpha, const GaussianInt& gamma,
                           const GaussianInt& n, const mpz_class& range_bound,
                           std::optional<TransferViolation>* violation = nullptr,
                           const EffortBound& effort = {});

/// Exhaustive search bound for "which z can have norm(q(z)) <= value_norm":
/// every solution satisfies norm(z) <= the returned bound (conservative,
/// from the squared Cauchy data).
mpz_class value_search_norm_bound(const GIPolynomial& q, const mpz_class& value_norm);

}  // namespace gaussint
