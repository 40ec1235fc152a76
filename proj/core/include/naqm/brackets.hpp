#pragma once

// Bracket operations on algebra elements: the binary commutator, the
// associator, and the ternary bracket [a,b,c] = a(bc) - (ca)b that replaces
// the commutator when the ambient algebra is non-associative. Also the
// constructors for the scaled operators h_{m+4}, S_k and L_k used by the
// qubit models.

#include "naqm/algebra.hpp"

namespace naqm::brackets {

using algebra::AlgebraElement;
using algebra::Complex;

/// xy - yx.
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

/// (xy)z - x(yz); identically zero exactly on associative spans.
AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y,
                          const AlgebraElement& z);

/// The ternary bracket a(bc) - (ca)b, trilinear over complex scalars.
/// Defined for arbitrary elements; the product-rule identities it feeds
/// hold only when c ranges over an associative span.
AlgebraElement na_bracket(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c);

/// Which Hamiltonian-factor family the constructors draw from.
enum class ModelId { Quaternionic, Biquaternionic };

/// Reading of the m=0 biquaternionic factor h4. The bracket identities
/// of the extended model require an i4 first slot, so Imaginary4 is the
/// default; Epsilon4 takes the epsilon-family formula literally and is
/// kept for experimentation.
enum class H4Convention { Imaginary4, Epsilon4 };

/// Model constants; hbar_tilde is the provisional Planck-like constant of
/// the non-associative models (distinct from hbar), mu the dipole strength.
struct PhysicalConstants {
    double hbar_tilde = 1.0;
    double mu = 1.0;
};

/// Hamiltonian factor for slot m = 0..3:
///   quaternionic:   i_{m+4} * sqrt(I*hbar_tilde/2)
///   biquaternionic: e_{m+4} * sqrt(I*hbar_tilde/2) for m = 1..3, and the
///                   m = 0 factor per `convention` (default i4-based).
/// sqrt is the principal complex branch. Throws std::out_of_range for m
/// outside 0..3 and std::invalid_argument for hbar_tilde <= 0.
AlgebraElement hamiltonian_factor(ModelId model, int m, const PhysicalConstants& constants,
                                  H4Convention convention = H4Convention::Imaginary4);

/// S_k = i_k * (I*hbar_tilde/2), k = 1..3.
AlgebraElement spin_operator(int k, const PhysicalConstants& constants);

/// L_k = e_k * (I*hbar_tilde/2), k = 1..3.
AlgebraElement l_operator(int k, const PhysicalConstants& constants);

/// Totally antisymmetric symbol on indices 1..3.
constexpr int epsilon3(int m, int n, int k) noexcept {
    if (m == n || n == k || m == k) return 0;
    const bool even = (m == 1 && n == 2 && k == 3) || (m == 2 && n == 3 && k == 1) ||
                      (m == 3 && n == 1 && k == 2);
    return even ? 1 : -1;
}

}  // namespace naqm::brackets
