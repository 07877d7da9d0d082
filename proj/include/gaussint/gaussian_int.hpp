#pragma once

#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace gaussint {

/// Exact element a + bi of Z[i] with arbitrary-precision coordinates.
///
/// All arithmetic is exact; there is no floating point anywhere in this
/// type. Magnitude comparisons go through norm() = a^2 + b^2, which is the
/// exact integer proxy for |z|^2.
class GaussianInt {
public:
    GaussianInt() : re_(0), im_(0) {}
    GaussianInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianInt(long re, long im) : re_(re), im_(im) {}
    explicit GaussianInt(long re) : re_(re), im_(0) {}

    const mpz_class& re() const { return re_; }
    const mpz_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const { return norm() == 1; }

    /// norm(a+bi) = a^2 + b^2; completely multiplicative, zero iff z = 0.
    mpz_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianInt conj() const { return {re_, -im_}; }

    GaussianInt operator-() const { return {-re_, -im_}; }
    GaussianInt operator+(const GaussianInt& w) const { return {re_ + w.re_, im_ + w.im_}; }
    GaussianInt operator-(const GaussianInt& w) const { return {re_ - w.re_, im_ - w.im_}; }
    GaussianInt operator*(const GaussianInt& w) const {
        return {re_ * w.re_ - im_ * w.im_, re_ * w.im_ + im_ * w.re_};
    }
    GaussianInt operator*(const mpz_class& k) const { return {re_ * k, im_ * k}; }

    GaussianInt& operator+=(const GaussianInt& w) { re_ += w.re_; im_ += w.im_; return *this; }
    GaussianInt& operator-=(const GaussianInt& w) { re_ -= w.re_; im_ -= w.im_; return *this; }
    GaussianInt& operator*=(const GaussianInt& w) { *this = *this * w; return *this; }

    bool operator==(const GaussianInt& w) const { return re_ == w.re_ && im_ == w.im_; }
    bool operator!=(const GaussianInt& w) const { return !(*this == w); }

    /// Lexicographic (im, re) order; matches the row-major box enumeration
    /// order, so sorted containers replay enumeration order.
    bool operator<(const GaussianInt& w) const {
        if (im_ != w.im_) return im_ < w.im_;
        return re_ < w.re_;
    }

    /// Text form "a+bi" / "a-bi"; the imaginary coefficient is always
    /// written explicitly ("1+1i", "0".."0+0i" prints as "0+0i").
    std::string to_string() const;

private:
    mpz_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);

/// Parses "a", "bi", "i", "a+bi", "a-bi" with optional spaces and an
/// optional coefficient on i. Throws std::invalid_argument on bad input.
GaussianInt parse_gaussian(std::string_view text);

/// True iff d divides z exactly in Z[i]. d must be nonzero.
bool divides(const GaussianInt& d, const GaussianInt& z);

/// Exact quotient z / d; throws std::domain_error if d = 0 or if d does not
/// divide z.
GaussianInt div_exact(const GaussianInt& z, const GaussianInt& d);

/// Euclidean division with componentwise round-to-nearest quotient:
/// z = q*d + r with norm(r) <= norm(d)/2. d must be nonzero.
std::pair<GaussianInt, GaussianInt> divmod_rounded(const GaussianInt& z, const GaussianInt& d);

/// The unit u in {1, i, -1, -i} with u*z in the canonical quadrant
/// (re > 0, im >= 0). For z = 0 returns 1.
GaussianInt canonical_unit(const GaussianInt& z);

/// The unique associate of z with re > 0, im >= 0 (0 for z = 0).
GaussianInt canonical_associate(const GaussianInt& z);

/// gcd normalized to its canonical associate. Throws std::domain_error when
/// both inputs are zero.
GaussianInt gi_gcd(const GaussianInt& a, const GaussianInt& b);

/// Extended gcd: returns (g, u, v) with u*a + v*b = g and g the canonical
/// associate gcd. Same domain restriction as gi_gcd.
struct ExtendedGcd {
    GaussianInt g, u, v;
};
ExtendedGcd gi_extended_gcd(const GaussianInt& a, const GaussianInt& b);

/// z^e by repeated squaring (e >= 0).
GaussianInt gi_pow(const GaussianInt& z, unsigned long e);

inline GaussianInt operator*(const mpz_class& k, const GaussianInt& z) { return z * k; }

}  // namespace gaussint
