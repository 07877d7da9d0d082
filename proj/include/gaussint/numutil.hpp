#pragma once

#include <gmpxx.h>

namespace gaussint {

/// floor(N^(1/k)) for N >= 1, k >= 1; satisfies r^k <= N < (r+1)^k.
mpz_class integer_root_floor(const mpz_class& n, unsigned long k);

/// floor(sqrt(n)), n >= 0.
mpz_class isqrt_floor(const mpz_class& n);

/// ceil(sqrt(n)), n >= 0: the smallest integer c with c^2 >= n.
mpz_class isqrt_ceil(const mpz_class& n);

/// Exact binomial coefficient C(n, k).
mpz_class binomial(unsigned long n, unsigned long k);

/// base^exp for exact big integers.
mpz_class pow_mpz(const mpz_class& base, unsigned long exp);

/// Exact rational power q^exp, exp >= 0.
mpq_class pow_mpq(const mpq_class& q, unsigned long exp);

/// Canonicalized rational num/den (den != 0).
mpq_class make_rational(const mpz_class& num, const mpz_class& den);

}  // namespace gaussint
