#include "naqm/dynamics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

namespace naqm::dynamics {

using algebra::AlgebraElement;
using algebra::BasisUnit;

Vec3 standard_qubit_rhs(const SpinState& state, const FieldConfig& field) {
    return cross(field.omega, state.s);
}

Vec3 na_qubit_rhs(const SpinState& state, const FieldConfig& field) {
    return -1.0 * cross(field.omega, state.s);
}

ExtendedDerivative extended_rhs(const ExtendedState& state, const FieldConfig& field) {
    field.validate();
    return {-static_cast<double>(field.n1) * cross(field.omega1, state.l),
            +static_cast<double>(field.n2) * cross(field.omega2, state.s)};
}

namespace {

// Extracts the real component vector of X = sum_k v_k * (I*hbar/2) * unit_k
// and verifies that nothing of X lives outside that span.
Vec3 project_components(const AlgebraElement& x, bool epsilon_units,
                        const brackets::PhysicalConstants& constants, double tolerance) {
    const Complex scale{0.0, constants.hbar_tilde / 2.0};
    Vec3 out;
    AlgebraElement reconstructed;
    for (int k = 1; k <= 3; ++k) {
        const BasisUnit unit =
            epsilon_units ? algebra::epsilon_unit(k) : algebra::imaginary_unit(k);
        const Complex component = x.coeff(unit) / scale;
        if (std::abs(component.imag()) > tolerance)
            throw std::runtime_error("operator projection produced a complex component");
        (k == 1 ? out.x : k == 2 ? out.y : out.z) = component.real();
        reconstructed = reconstructed + AlgebraElement::scaled_unit(component.real() * scale, unit);
    }
    if (algebra::max_abs_diff(x, reconstructed) > tolerance)
        throw std::runtime_error("operator right-hand side leaves the operator span");
    return out;
}

AlgebraElement field_slot(brackets::ModelId model, Vec3 omega, int sign,
                          const brackets::PhysicalConstants& constants) {
    // -n (B.mu) with omega_m = mu * B_m folded into the field vector.
    AlgebraElement slot;
    const double components[3] = {omega.x, omega.y, omega.z};
    for (int m = 1; m <= 3; ++m) {
        slot = slot + Complex{-static_cast<double>(sign) * components[m - 1], 0.0} *
                          brackets::hamiltonian_factor(model, m, constants);
    }
    return slot;
}

}  // namespace

Vec3 operator_rhs(const SpinState& state, const FieldConfig& field,
                  const brackets::PhysicalConstants& constants, double tolerance) {
    const auto model = brackets::ModelId::Quaternionic;
    const AlgebraElement h4 = brackets::hamiltonian_factor(model, 0, constants);
    AlgebraElement spin_vec;
    const double s[3] = {state.s.x, state.s.y, state.s.z};
    for (int n = 1; n <= 3; ++n)
        spin_vec = spin_vec + Complex{s[n - 1], 0.0} * brackets::spin_operator(n, constants);

    const AlgebraElement rhs =
        Complex{0.0, 1.0} * brackets::na_bracket(h4, field_slot(model, field.omega, 1, constants),
                                                 spin_vec);
    return project_components(rhs, /*epsilon_units=*/false, constants, tolerance);
}

ExtendedDerivative operator_rhs(const ExtendedState& state, const FieldConfig& field,
                                const brackets::PhysicalConstants& constants, double tolerance) {
    field.validate();
    const auto model = brackets::ModelId::Biquaternionic;
    const AlgebraElement h4 = brackets::hamiltonian_factor(model, 0, constants);

    AlgebraElement spin_vec;
    AlgebraElement l_vec;
    const double s[3] = {state.s.x, state.s.y, state.s.z};
    const double l[3] = {state.l.x, state.l.y, state.l.z};
    for (int n = 1; n <= 3; ++n) {
        spin_vec = spin_vec + Complex{s[n - 1], 0.0} * brackets::spin_operator(n, constants);
        l_vec = l_vec + Complex{l[n - 1], 0.0} * brackets::l_operator(n, constants);
    }

    // Both equations carry a -I prefactor; with the bracket values of this
    // model that reproduces the component pair (see extended_rhs).
    const Complex minus_i{0.0, -1.0};
    const AlgebraElement ds_element =
        minus_i * brackets::na_bracket(h4, field_slot(model, field.omega1, field.n1, constants),
                                       l_vec);
    const AlgebraElement dl_element =
        minus_i * brackets::na_bracket(h4, field_slot(model, field.omega2, field.n2, constants),
                                       spin_vec);
    return {project_components(ds_element, /*epsilon_units=*/false, constants, tolerance),
            project_components(dl_element, /*epsilon_units=*/true, constants, tolerance)};
}

BlowUpError::BlowUpError(double time)
    : std::runtime_error("trajectory left the representable range at t = " +
                         algebra::format_real(time)),
      time_(time) {}

namespace {

template <std::size_t N, typename Rhs>
std::array<double, N> rk4_step(const Rhs& rhs, const std::array<double, N>& y, double dt) {
    const auto scaled_add = [](const std::array<double, N>& a, double h,
                               const std::array<double, N>& b) {
        std::array<double, N> out;
        for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + h * b[i];
        return out;
    };
    const std::array<double, N> k1 = rhs(y);
    const std::array<double, N> k2 = rhs(scaled_add(y, dt / 2.0, k1));
    const std::array<double, N> k3 = rhs(scaled_add(y, dt / 2.0, k2));
    const std::array<double, N> k4 = rhs(scaled_add(y, dt, k3));
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

template <std::size_t N>
bool finite(const std::array<double, N>& y) {
    for (double v : y)
        if (!std::isfinite(v)) return false;
    return true;
}

void check_step_arguments(double t_max, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(t_max >= dt)) throw std::invalid_argument("t_max must be at least dt");
}

std::size_t step_count(double t_max, double dt) {
    return static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
}

template <std::size_t N, typename State, typename Rhs, typename Pack, typename Unpack>
Trajectory<State> run_rk4(const State& initial, double t_max, double dt, const Rhs& rhs,
                          const Pack& pack, const Unpack& unpack) {
    check_step_arguments(t_max, dt);
    const std::size_t steps = step_count(t_max, dt);
    Trajectory<State> trajectory;
    trajectory.dt = dt;
    trajectory.times.reserve(steps + 1);
    trajectory.states.reserve(steps + 1);

    std::array<double, N> y = pack(initial);
    for (std::size_t i = 0; i <= steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        if (!finite(y)) throw BlowUpError(t);
        trajectory.times.push_back(t);
        trajectory.states.push_back(unpack(y));
        if (i < steps) y = rk4_step<N>(rhs, y, dt);
    }
    return trajectory;
}

}  // namespace

Trajectory<SpinState> integrate(SpinModel model, const SpinState& initial,
                                const FieldConfig& field, double t_max, double dt) {
    field.validate();
    const double sense = model == SpinModel::Standard ? 1.0 : -1.0;
    const Vec3 omega = field.omega;
    const auto rhs = [&](const std::array<double, 3>& y) {
        const Vec3 d = sense * cross(omega, Vec3{y[0], y[1], y[2]});
        return std::array<double, 3>{d.x, d.y, d.z};
    };
    return run_rk4<3, SpinState>(
        initial, t_max, dt, rhs,
        [](const SpinState& st) { return std::array<double, 3>{st.s.x, st.s.y, st.s.z}; },
        [](const std::array<double, 3>& y) { return SpinState{{y[0], y[1], y[2]}}; });
}

Trajectory<ExtendedState> integrate(const ExtendedState& initial, const FieldConfig& field,
                                    double t_max, double dt) {
    field.validate();
    const auto rhs = [&](const std::array<double, 6>& y) {
        const ExtendedDerivative d =
            extended_rhs(ExtendedState{{y[0], y[1], y[2]}, {y[3], y[4], y[5]}}, field);
        return std::array<double, 6>{d.ds.x, d.ds.y, d.ds.z, d.dl.x, d.dl.y, d.dl.z};
    };
    return run_rk4<6, ExtendedState>(
        initial, t_max, dt, rhs,
        [](const ExtendedState& st) {
            return std::array<double, 6>{st.s.x, st.s.y, st.s.z, st.l.x, st.l.y, st.l.z};
        },
        [](const std::array<double, 6>& y) {
            return ExtendedState{{y[0], y[1], y[2]}, {y[3], y[4], y[5]}};
        });
}

double spin_norm_drift(const Trajectory<SpinState>& trajectory) {
    if (trajectory.states.empty()) return 0.0;
    const double reference = norm_sq(trajectory.states.front().s);
    double drift = 0.0;
    for (const SpinState& state : trajectory.states)
        drift = std::max(drift, std::abs(norm_sq(state.s) - reference));
    return drift;
}

namespace {

double quadratic_drift(const Trajectory<ExtendedState>& trajectory, double l_sign) {
    if (trajectory.states.empty()) return 0.0;
    const auto quantity = [l_sign](const ExtendedState& st) {
        return norm_sq(st.s) + l_sign * norm_sq(st.l);
    };
    const double reference = quantity(trajectory.states.front());
    double drift = 0.0;
    for (const ExtendedState& state : trajectory.states)
        drift = std::max(drift, std::abs(quantity(state) - reference));
    return drift;
}

}  // namespace

double extended_invariant_drift(const Trajectory<ExtendedState>& trajectory) {
    return quadratic_drift(trajectory, -1.0);
}

double extended_sum_invariant_drift(const Trajectory<ExtendedState>& trajectory) {
    return quadratic_drift(trajectory, +1.0);
}

namespace {

void append_field(std::string& line, double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    line += ',';
    line += buf;
}

}  // namespace

void write_csv(std::ostream& out, const Trajectory<SpinState>& trajectory) {
    out << "t,s1,s2,s3\n";
    for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", trajectory.times[i]);
        std::string line = buf;
        const Vec3 s = trajectory.states[i].s;
        append_field(line, s.x);
        append_field(line, s.y);
        append_field(line, s.z);
        out << line << '\n';
    }
}

void write_csv(std::ostream& out, const Trajectory<ExtendedState>& trajectory) {
    out << "t,s1,s2,s3,l1,l2,l3\n";
    for (std::size_t i = 0; i < trajectory.states.size(); ++i) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", trajectory.times[i]);
        std::string line = buf;
        const ExtendedState& st = trajectory.states[i];
        append_field(line, st.s.x);
        append_field(line, st.s.y);
        append_field(line, st.s.z);
        append_field(line, st.l.x);
        append_field(line, st.l.y);
        append_field(line, st.l.z);
        out << line << '\n';
    }
}

SpinState analytic_rotation(const SpinState& initial, double omega_z, double t, SpinModel model) {
    const double angle = omega_z * t;
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    const Vec3 s0 = initial.s;
    if (model == SpinModel::NonAssociative)
        return {{s0.x * c + s0.y * sn, -s0.x * sn + s0.y * c, s0.z}};
    return {{s0.x * c - s0.y * sn, s0.x * sn + s0.y * c, s0.z}};
}

std::pair<double, double> analytic_extended(double s0x, double l0y, double omega1, double omega2,
                                            int n1n2, double t) {
    if (n1n2 != 1 && n1n2 != -1) throw std::invalid_argument("n1n2 must be +1 or -1");
    const double q = static_cast<double>(n1n2) * omega1 * omega2;
    if (q > 0.0) {
        const double rate = std::sqrt(q);
        const double ch = std::cosh(rate * t);
        const double sh = std::sinh(rate * t);
        return {s0x * ch + omega1 * l0y / rate * sh,
                l0y * ch + static_cast<double>(n1n2) * omega2 * s0x / rate * sh};
    }
    if (q < 0.0) {
        const double rate = std::sqrt(-q);
        const double c = std::cos(rate * t);
        const double sn = std::sin(rate * t);
        return {s0x * c + omega1 * l0y / rate * sn,
                l0y * c + static_cast<double>(n1n2) * omega2 * s0x / rate * sn};
    }
    return {s0x + omega1 * l0y * t, l0y + static_cast<double>(n1n2) * omega2 * s0x * t};
}

double spinor_norm_sq(const QubitSpinor& psi) {
    return std::norm(psi.c_plus) + std::norm(psi.c_minus);
}

Complex spinor_inner(const QubitSpinor& psi, const QubitSpinor& phi) {
    return std::conj(psi.c_plus) * phi.c_plus + std::conj(psi.c_minus) * phi.c_minus;
}

namespace {

Mat2 mat_add(const Mat2& a, const Mat2& b) {
    Mat2 out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out[r][c] = a[r][c] + b[r][c];
    return out;
}

Mat2 mat_sub(const Mat2& a, const Mat2& b) {
    Mat2 out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out[r][c] = a[r][c] - b[r][c];
    return out;
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    Mat2 out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int k = 0; k < 2; ++k) out[r][c] += a[r][k] * b[k][c];
    return out;
}

Mat2 mat_scale(Complex s, const Mat2& a) {
    Mat2 out{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out[r][c] = s * a[r][c];
    return out;
}

bool mat_equal(const Mat2& a, const Mat2& b) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (a[r][c] != b[r][c]) return false;
    return true;
}

std::string mat_to_string(const Mat2& a) {
    std::string out = "[";
    for (int r = 0; r < 2; ++r) {
        out += "[";
        for (int c = 0; c < 2; ++c) {
            out += algebra::format_complex(a[r][c]);
            if (c == 0) out += ", ";
        }
        out += r == 0 ? "], " : "]";
    }
    return out + "]";
}

const Mat2 kSigma1{{{Complex{0, 0}, Complex{1, 0}}, {Complex{1, 0}, Complex{0, 0}}}};
const Mat2 kSigma2{{{Complex{0, 0}, Complex{0, -1}}, {Complex{0, 1}, Complex{0, 0}}}};
const Mat2 kSigma3{{{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{-1, 0}}}};
const std::array<Mat2, 3> kSigma{kSigma1, kSigma2, kSigma3};

}  // namespace

Mat2 pauli_observable(double a0, double a1, double a2, double a3) {
    return {{{Complex{(a0 + a3) / 2.0, 0.0}, Complex{a1 / 2.0, -a2 / 2.0}},
             {Complex{a1 / 2.0, a2 / 2.0}, Complex{(a0 - a3) / 2.0, 0.0}}}};
}

verification::VerificationReport pauli_relations_check() {
    verification::VerificationReport report;
    report.suite = "pauli-relations";
    const Complex two_i{0.0, 2.0};
    const Complex i{0.0, 1.0};
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            ++report.total_cases;
            Mat2 expected{};
            Mat2 expected_spin{};
            for (int k = 1; k <= 3; ++k) {
                const double eps = brackets::epsilon3(a, b, k);
                expected = mat_add(expected, mat_scale(two_i * eps, kSigma[k - 1]));
                expected_spin =
                    mat_add(expected_spin, mat_scale(i * eps, mat_scale(0.5, kSigma[k - 1])));
            }
            const Mat2 actual =
                mat_sub(mat_mul(kSigma[a - 1], kSigma[b - 1]), mat_mul(kSigma[b - 1], kSigma[a - 1]));
            const Mat2 spin_a = mat_scale(0.5, kSigma[a - 1]);
            const Mat2 spin_b = mat_scale(0.5, kSigma[b - 1]);
            const Mat2 actual_spin = mat_sub(mat_mul(spin_a, spin_b), mat_mul(spin_b, spin_a));
            if (!mat_equal(actual, expected) || !mat_equal(actual_spin, expected_spin)) {
                report.failures.push_back({"(" + std::to_string(a) + "," + std::to_string(b) + ")",
                                           mat_to_string(expected), mat_to_string(actual)});
            }
        }
    }
    report.passed = report.failures.empty();
    return report;
}

}  // namespace naqm::dynamics
