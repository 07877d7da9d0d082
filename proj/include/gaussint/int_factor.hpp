#pragma once

#include <gmpxx.h>
#include <map>
#include <stdexcept>

namespace gaussint {

/// Thrown when a factoring/search budget is exhausted; callers surface this
/// as an "inconclusive" verdict instead of guessing.
struct EffortExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin with a fixed base list. Exact for
/// n < 3.3e24; beyond that the fixed 50-base list leaves no known
/// pseudoprimes and keeps results reproducible across runs.
bool is_probable_prime(const mpz_class& n);

/// Exact factorization n = prod p^e, n >= 1: trial division below 10^6,
/// then Pollard-Brent rho with deterministic parameters. rho_budget caps
/// the total iteration count before EffortExceeded.
std::map<mpz_class, unsigned long> factor_integer(const mpz_class& n,
                                                  unsigned long rho_budget = 50'000'000);

/// Some x with x^2 == -1 (mod p), for prime p == 1 (mod 4); the smaller of
/// the two solutions (deterministic).
mpz_class sqrt_minus_one_mod(const mpz_class& p);

}  // namespace gaussint
