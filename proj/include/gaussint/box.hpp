#pragma once

#include <functional>
#include <vector>

#include "gaussint/gaussian_int.hpp"

namespace gaussint {

/// The box [N] = {a+bi : a,b in [1,N]}, |[N]| = N^2.
///
/// Enumeration order is fixed row-major: im outer, re inner. Everything
/// downstream (residue streams, canonical root picks, partition error sets)
/// relies on this order for reproducibility.
struct Box {
    long side;

    explicit Box(long n);

    bool contains(const GaussianInt& z) const;
    mpz_class size() const { return mpz_class(side) * side; }

    void for_each(const std::function<void(const GaussianInt&)>& fn) const;
    std::vector<GaussianInt> elements() const;
};

/// A translated box offset + [side]; side <= 0 yields the empty set (the
/// caller must check, e.g. for W_N at tiny N).
struct ShiftedBox {
    long side;
    GaussianInt offset;

    ShiftedBox(long n, GaussianInt off) : side(n), offset(std::move(off)) {}

    bool empty() const { return side <= 0; }
    bool contains(const GaussianInt& z) const;
    void for_each(const std::function<void(const GaussianInt&)>& fn) const;
    std::vector<GaussianInt> elements() const;
};

/// [N + 2*pad] - pad*(1+i): the symmetric padding used for T_N, U_N, V_N.
/// Contains [N] and every translate [N] + c with |Re c|, |Im c| <= pad.
ShiftedBox padded_box(long n, const mpz_class& pad);

}  // namespace gaussint
