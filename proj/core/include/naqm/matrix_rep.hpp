#pragma once

// Exact 3x3 matrix representation of the commutative span {1, i3, e3, i0}.
// All entries are Gaussian integers (in fact 0, +/-1, +/-I), so the module
// uses integer arithmetic throughout; the three standard basis vectors are
// simultaneous eigenvectors of the four images.

#include "naqm/algebra.hpp"
#include "naqm/report.hpp"

#include <array>
#include <complex>

namespace naqm::matrix_rep {

/// Exact complex integer a + b*I.
struct GaussianInt {
    int re = 0;
    int im = 0;

    friend constexpr GaussianInt operator+(GaussianInt a, GaussianInt b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr GaussianInt operator*(GaussianInt a, GaussianInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr GaussianInt operator*(int s, GaussianInt a) { return {s * a.re, s * a.im}; }
    friend constexpr bool operator==(GaussianInt, GaussianInt) = default;

    [[nodiscard]] std::complex<double> to_complex() const { return {double(re), double(im)}; }
};

struct RepMatrix {
    std::array<std::array<GaussianInt, 3>, 3> entries{};

    friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
    friend RepMatrix operator*(int sign, const RepMatrix& a);
    friend bool operator==(const RepMatrix&, const RepMatrix&) = default;
};

std::string to_string(const RepMatrix& m);

/// Standard basis column vector with exact entries.
struct GenerationVector {
    std::array<GaussianInt, 3> components{};
    friend bool operator==(const GenerationVector&, const GenerationVector&) = default;
};

/// xi_1, xi_2, xi_3.
GenerationVector generation_vector(int k);

/// Matrix image of a unit in {1, i3, e3, i0}:
///   1  -> identity          i3 -> I*diag(-1, 1, 1)
///   e3 -> diag(1, -1, 1)    i0 -> I*diag(-1, -1, 1)
/// Throws std::domain_error for any other unit.
RepMatrix rep(algebra::BasisUnit unit);

/// rep(a)*rep(b) == sign * rep(unit) with (sign, unit) = basis_product(a,b),
/// for all 16 ordered pairs of the span; exact equality.
verification::VerificationReport homomorphism_check();

struct EigenPair {
    GenerationVector vector;
    GaussianInt value;
};

/// The three (xi_k, lambda_k) pairs of a span unit's image; exact.
std::array<EigenPair, 3> eigen_decomposition(algebra::BasisUnit unit);

}  // namespace naqm::matrix_rep
