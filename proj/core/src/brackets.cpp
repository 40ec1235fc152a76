#include "naqm/brackets.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace naqm::brackets {

using algebra::BasisUnit;

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
    return x * y - y * x;
}

AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y,
                          const AlgebraElement& z) {
    return (x * y) * z - x * (y * z);
}

AlgebraElement na_bracket(const AlgebraElement& a, const AlgebraElement& b,
                          const AlgebraElement& c) {
    return a * (b * c) - (c * a) * b;
}

namespace {

Complex factor_scale(const PhysicalConstants& constants) {
    if (!(constants.hbar_tilde > 0.0))
        throw std::invalid_argument("hbar_tilde must be positive");
    // Principal branch of sqrt(I*hbar/2); the identities only ever see its square.
    return std::sqrt(Complex{0.0, constants.hbar_tilde / 2.0});
}

Complex operator_scale(const PhysicalConstants& constants) {
    if (!(constants.hbar_tilde > 0.0))
        throw std::invalid_argument("hbar_tilde must be positive");
    return Complex{0.0, constants.hbar_tilde / 2.0};
}

}  // namespace

AlgebraElement hamiltonian_factor(ModelId model, int m, const PhysicalConstants& constants,
                                  H4Convention convention) {
    if (m < 0 || m > 3) throw std::out_of_range("hamiltonian_factor requires m in 0..3");
    const Complex scale = factor_scale(constants);
    BasisUnit unit;
    if (model == ModelId::Quaternionic) {
        unit = algebra::imaginary_unit(m + 4);
    } else if (m == 0) {
        unit = convention == H4Convention::Epsilon4 ? algebra::epsilon_unit(4)
                                                    : algebra::imaginary_unit(4);
    } else {
        unit = algebra::epsilon_unit(m + 4);
    }
    return AlgebraElement::scaled_unit(scale, unit);
}

AlgebraElement spin_operator(int k, const PhysicalConstants& constants) {
    if (k < 1 || k > 3) throw std::out_of_range("spin_operator requires k in 1..3");
    return AlgebraElement::scaled_unit(operator_scale(constants), algebra::imaginary_unit(k));
}

AlgebraElement l_operator(int k, const PhysicalConstants& constants) {
    if (k < 1 || k > 3) throw std::out_of_range("l_operator requires k in 1..3");
    return AlgebraElement::scaled_unit(operator_scale(constants), algebra::epsilon_unit(k));
}

}  // namespace naqm::brackets
