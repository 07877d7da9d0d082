#include "gaussint/box.hpp"

#include <stdexcept>

namespace gaussint {

Box::Box(long n) : side(n) {
    if (n < 1) throw std::domain_error("Box: side must be >= 1");
}

bool Box::contains(const GaussianInt& z) const {
    return z.re() >= 1 && z.re() <= side && z.im() >= 1 && z.im() <= side;
}

void Box::for_each(const std::function<void(const GaussianInt&)>& fn) const {
    for (long b = 1; b <= side; ++b)
        for (long a = 1; a <= side; ++a) fn(GaussianInt(a, b));
}

std::vector<GaussianInt> Box::elements() const {
    std::vector<GaussianInt> out;
    out.reserve(static_cast<size_t>(side) * side);
    for_each([&](const GaussianInt& z) { out.push_back(z); });
    return out;
}

bool ShiftedBox::contains(const GaussianInt& z) const {
    if (empty()) return false;
    const GaussianInt w = z - offset;
    return w.re() >= 1 && w.re() <= side && w.im() >= 1 && w.im() <= side;
}

void ShiftedBox::for_each(const std::function<void(const GaussianInt&)>& fn) const {
    if (empty()) return;
    for (long b = 1; b <= side; ++b)
        for (long a = 1; a <= side; ++a) fn(GaussianInt(a, b) + offset);
}

std::vector<GaussianInt> ShiftedBox::elements() const {
    std::vector<GaussianInt> out;
    if (empty()) return out;
    out.reserve(static_cast<size_t>(side) * side);
    for_each([&](const GaussianInt& z) { out.push_back(z); });
    return out;
}

ShiftedBox padded_box(long n, const mpz_class& pad) {
    if (pad < 0) throw std::domain_error("padded_box: pad must be >= 0");
    mpz_class wide = mpz_class(n) + 2 * pad;
    if (!wide.fits_slong_p()) throw std::domain_error("padded_box: side too large to enumerate");
    GaussianInt offset{mpz_class(-pad), mpz_class(-pad)};
    return {wide.get_si(), offset};
}

}  // namespace gaussint
