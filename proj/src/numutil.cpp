#include "gaussint/numutil.hpp"

#include <stdexcept>

namespace gaussint {

mpz_class integer_root_floor(const mpz_class& n, unsigned long k) {
    if (n < 1) throw std::domain_error("integer_root_floor: N must be >= 1");
    if (k < 1) throw std::domain_error("integer_root_floor: k must be >= 1");
    mpz_class r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

mpz_class isqrt_floor(const mpz_class& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative input");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

mpz_class isqrt_ceil(const mpz_class& n) {
    mpz_class r = isqrt_floor(n);
    if (r * r < n) ++r;
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class pow_mpz(const mpz_class& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

mpq_class pow_mpq(const mpq_class& q, unsigned long exp) {
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), exp);
    mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), exp);
    r.canonicalize();
    return r;
}

mpq_class make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace gaussint
