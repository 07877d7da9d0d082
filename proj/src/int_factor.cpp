#include "gaussint/int_factor.hpp"

#include <vector>

namespace gaussint {

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        const unsigned long limit = 1'000'000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s) {
    mpz_class x = powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

}  // namespace

bool is_probable_prime(const mpz_class& n) {
    if (n < 2) return false;
    static const unsigned long bases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                          43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
                                          103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157,
                                          163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
                                          227, 229};
    for (unsigned long b : bases) {
        if (n == b) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (unsigned long b : bases)
        if (miller_rabin_witness(n, mpz_class(b), d, s)) return false;
    return true;
}

namespace {

// Pollard-Brent with fixed x0 = 2 and c = 1, 2, 3, ... -- deterministic.
mpz_class pollard_brent(const mpz_class& n, unsigned long& budget) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1, q = 1, ys = y;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && d == 1) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    if (budget == 0) throw EffortExceeded("pollard rho budget exhausted");
                    --budget;
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                d = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                if (budget == 0) throw EffortExceeded("pollard rho budget exhausted");
                --budget;
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
        // cycle degenerated for this c; retry with the next increment
    }
}

void factor_rec(const mpz_class& n, std::map<mpz_class, unsigned long>& out, unsigned long& budget) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_brent(n, budget);
    factor_rec(d, out, budget);
    factor_rec(n / d, out, budget);
}

}  // namespace

std::map<mpz_class, unsigned long> factor_integer(const mpz_class& n, unsigned long rho_budget) {
    if (n < 1) throw std::domain_error("factor_integer: input must be >= 1");
    std::map<mpz_class, unsigned long> out;
    mpz_class rest = n;
    for (unsigned long p : small_primes()) {
        if (mpz_class(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++out[mpz_class(p)];
            rest /= p;
        }
    }
    if (rest > 1) {
        if (is_probable_prime(rest))
            ++out[rest];
        else
            factor_rec(rest, out, rho_budget);
    }
    return out;
}

mpz_class sqrt_minus_one_mod(const mpz_class& p) {
    if (p % 4 != 1) throw std::domain_error("sqrt_minus_one_mod: p must be 1 mod 4");
    const mpz_class e = (p - 1) / 4;
    const mpz_class half = (p - 1) / 2;
    // first quadratic non-residue n, then x = n^((p-1)/4)
    for (mpz_class a = 2;; ++a) {
        if (powm(a, half, p) == p - 1) {
            mpz_class x = powm(a, e, p);
            mpz_class y = p - x;
            return x < y ? x : y;
        }
    }
}

}  // namespace gaussint
