#pragma once

// Heisenberg-picture time evolution for three toy qubit models:
//   standard:        sdot_k = eps_{ijk} omega_i s_j        (reference rotation)
//   non-associative: sdot_k = -eps_{mnk} omega_m s_n       (opposite handedness)
//   extended:        sdot_k = -n1 eps_{mnk} omega1_m l_n,
//                    ldot_k = +n2 eps_{mnk} omega2_m s_n   (s/l coupled pair)
// Component right-hand sides are cross-checked against the operator-level
// ternary-bracket evaluation, integrated with fixed-step RK4, and compared
// against closed-form solutions.

#include "naqm/algebra.hpp"
#include "naqm/brackets.hpp"
#include "naqm/report.hpp"

#include <array>
#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

namespace naqm::dynamics {

using algebra::Complex;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
    friend constexpr bool operator==(Vec3, Vec3) = default;
};

constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr double norm_sq(Vec3 a) { return dot(a, a); }

/// Spin components of the single-field models.
struct SpinState {
    Vec3 s;
    friend constexpr bool operator==(const SpinState&, const SpinState&) = default;
};

/// Spin-like and l components of the extended (biquaternionic) model.
struct ExtendedState {
    Vec3 s;
    Vec3 l;
    friend constexpr bool operator==(const ExtendedState&, const ExtendedState&) = default;
};

/// External-field configuration. The single-field models read `omega`;
/// the extended model reads omega1/omega2 and the interaction signs n1, n2.
struct FieldConfig {
    Vec3 omega{0.0, 0.0, 1.0};
    Vec3 omega1{0.0, 0.0, 1.0};
    Vec3 omega2{0.0, 0.0, 1.0};
    int n1 = 1;
    int n2 = 1;

    void validate() const {
        if ((n1 != 1 && n1 != -1) || (n2 != 1 && n2 != -1))
            throw std::invalid_argument("interaction signs n1, n2 must be +1 or -1");
    }
};

enum class SpinModel { Standard, NonAssociative };

// -- component right-hand sides ---------------------------------------------

/// sdot = omega x s.
Vec3 standard_qubit_rhs(const SpinState& state, const FieldConfig& field);

/// sdot = -(omega x s); rotation sense opposite to the standard model.
Vec3 na_qubit_rhs(const SpinState& state, const FieldConfig& field);

struct ExtendedDerivative {
    Vec3 ds;
    Vec3 dl;
};

/// sdot = -n1 (omega1 x l), ldot = +n2 (omega2 x s).
ExtendedDerivative extended_rhs(const ExtendedState& state, const FieldConfig& field);

// -- operator-level right-hand sides -----------------------------------------

/// Evaluates the non-associative Heisenberg right-hand side as an algebra
/// element (ternary bracket of the scaled operators) and projects it back
/// onto spin components. Agrees with na_qubit_rhs at hbar_tilde = 1; for
/// other values the result carries an overall hbar_tilde factor. Throws
/// std::runtime_error if the projection residual exceeds the tolerance.
Vec3 operator_rhs(const SpinState& state, const FieldConfig& field,
                  const brackets::PhysicalConstants& constants = {},
                  double tolerance = algebra::kDefaultTolerance);

/// Extended-model analog; agrees with extended_rhs at hbar_tilde = 1.
ExtendedDerivative operator_rhs(const ExtendedState& state, const FieldConfig& field,
                                const brackets::PhysicalConstants& constants = {},
                                double tolerance = algebra::kDefaultTolerance);

// -- integration --------------------------------------------------------------

/// Raised when a trajectory leaves the representable range (expected for
/// the extended model with n1*n2 = +1 at large t).
class BlowUpError : public std::runtime_error {
  public:
    explicit BlowUpError(double time);
    [[nodiscard]] double time() const noexcept { return time_; }

  private:
    double time_;
};

/// Uniform-step time series. states[i] is the state at times[i] = i * dt.
template <typename State>
struct Trajectory {
    double dt = 0.0;
    std::vector<double> times;
    std::vector<State> states;
};

/// Classical fixed-step RK4 from t = 0 to the largest multiple of dt not
/// exceeding t_max. Requires dt > 0 and t_max >= dt; throws BlowUpError if
/// a non-finite component appears.
Trajectory<SpinState> integrate(SpinModel model, const SpinState& initial,
                                const FieldConfig& field, double t_max, double dt);
Trajectory<ExtendedState> integrate(const ExtendedState& initial, const FieldConfig& field,
                                    double t_max, double dt);

/// Largest deviation of |s|^2 from its initial value along a trajectory.
double spin_norm_drift(const Trajectory<SpinState>& trajectory);

/// Largest deviation of |s|^2 - |l|^2 from its initial value; conserved
/// when the two coupling vectors n1*omega1 and n2*omega2 coincide.
double extended_invariant_drift(const Trajectory<ExtendedState>& trajectory);

/// Largest deviation of |s|^2 + |l|^2 from its initial value; this is the
/// conserved quadratic for opposite interaction signs (n1*n2 = -1).
double extended_sum_invariant_drift(const Trajectory<ExtendedState>& trajectory);

/// Trajectory CSV: header "t,s1,s2,s3" (plus ",l1,l2,l3" for the extended
/// model), one row per step, 17 significant digits.
void write_csv(std::ostream& out, const Trajectory<SpinState>& trajectory);
void write_csv(std::ostream& out, const Trajectory<ExtendedState>& trajectory);

// -- closed-form solutions ----------------------------------------------------

/// Rotation about the z axis: exact solution of either single-field model
/// for a field (0,0,omega_z) and arbitrary initial data; s_z is constant.
SpinState analytic_rotation(const SpinState& initial, double omega_z, double t, SpinModel model);

/// Exact (s_x, l_y) pair of the extended model with both fields along z,
/// using the convention sdot_x = omega1 * l_y, ldot_y = n1n2 * omega2 * s_x:
/// hyperbolic for n1n2*omega1*omega2 > 0, oscillatory for < 0, linear at 0.
std::pair<double, double> analytic_extended(double s0x, double l0y, double omega1, double omega2,
                                            int n1n2, double t);

// -- reference qubit ----------------------------------------------------------

/// Two-component spinor; normalization is checked by callers, not enforced.
struct QubitSpinor {
    Complex c_plus;
    Complex c_minus;
};

/// |c+|^2 + |c-|^2.
double spinor_norm_sq(const QubitSpinor& psi);

/// conj(c+) d+ + conj(c-) d-.
Complex spinor_inner(const QubitSpinor& psi, const QubitSpinor& phi);

using Mat2 = std::array<std::array<Complex, 2>, 2>;

/// (1/2)(a0*1 + a1*sigma1 + a2*sigma2 + a3*sigma3); Hermitian by construction.
Mat2 pauli_observable(double a0, double a1, double a2, double a3);

/// Checks [sigma_i, sigma_j] = 2I eps_{ijk} sigma_k and the half-scaled
/// spin version for all 9 ordered pairs, exactly.
verification::VerificationReport pauli_relations_check();

}  // namespace naqm::dynamics
