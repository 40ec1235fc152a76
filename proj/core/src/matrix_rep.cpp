#include "naqm/matrix_rep.hpp"

#include <stdexcept>
#include <string>

namespace naqm::matrix_rep {

using algebra::BasisUnit;

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
    RepMatrix out;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            GaussianInt sum;
            for (int k = 0; k < 3; ++k) sum = sum + a.entries[r][k] * b.entries[k][c];
            out.entries[r][c] = sum;
        }
    }
    return out;
}

RepMatrix operator*(int sign, const RepMatrix& a) {
    RepMatrix out;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) out.entries[r][c] = sign * a.entries[r][c];
    return out;
}

namespace {

std::string gaussian_to_string(GaussianInt g) {
    if (g.im == 0) return std::to_string(g.re);
    if (g.re == 0) {
        if (g.im == 1) return "I";
        if (g.im == -1) return "-I";
        return std::to_string(g.im) + "I";
    }
    return std::to_string(g.re) + (g.im < 0 ? "-" : "+") + std::to_string(std::abs(g.im)) + "I";
}

RepMatrix diagonal(GaussianInt d0, GaussianInt d1, GaussianInt d2) {
    RepMatrix m;
    m.entries[0][0] = d0;
    m.entries[1][1] = d1;
    m.entries[2][2] = d2;
    return m;
}

constexpr GaussianInt kOne{1, 0};
constexpr GaussianInt kMinusOne{-1, 0};
constexpr GaussianInt kI{0, 1};
constexpr GaussianInt kMinusI{0, -1};

const std::array<BasisUnit, 4> kSpan = {BasisUnit::One, BasisUnit::I3, BasisUnit::E3,
                                        BasisUnit::I0};

}  // namespace

std::string to_string(const RepMatrix& m) {
    std::string out = "[";
    for (int r = 0; r < 3; ++r) {
        out += "[";
        for (int c = 0; c < 3; ++c) {
            out += gaussian_to_string(m.entries[r][c]);
            if (c < 2) out += ",";
        }
        out += "]";
        if (r < 2) out += ",";
    }
    return out + "]";
}

GenerationVector generation_vector(int k) {
    if (k < 1 || k > 3) throw std::out_of_range("generation index must be in 1..3");
    GenerationVector v;
    v.components[k - 1] = kOne;
    return v;
}

RepMatrix rep(BasisUnit unit) {
    switch (unit) {
        case BasisUnit::One: return diagonal(kOne, kOne, kOne);
        case BasisUnit::I3: return diagonal(kMinusI, kI, kI);
        case BasisUnit::E3: return diagonal(kOne, kMinusOne, kOne);
        case BasisUnit::I0: return diagonal(kMinusI, kMinusI, kI);
        default:
            throw std::domain_error("rep is defined on the span {1, i3, e3, i0} only");
    }
}

verification::VerificationReport homomorphism_check() {
    verification::VerificationReport report;
    report.suite = "matrix-rep-homomorphism";
    for (BasisUnit a : kSpan) {
        for (BasisUnit b : kSpan) {
            ++report.total_cases;
            const algebra::SignedUnit product = algebra::basis_product(a, b);
            const RepMatrix expected = product.sign * rep(product.unit);
            const RepMatrix actual = rep(a) * rep(b);
            if (!(actual == expected)) {
                std::string descriptor = "(";
                descriptor += algebra::unit_token(a);
                descriptor += ",";
                descriptor += algebra::unit_token(b);
                descriptor += ")";
                report.failures.push_back(
                    {std::move(descriptor), to_string(expected), to_string(actual)});
            }
        }
    }
    report.passed = report.failures.empty();
    return report;
}

std::array<EigenPair, 3> eigen_decomposition(BasisUnit unit) {
    const RepMatrix image = rep(unit);  // validates the unit; images are diagonal
    std::array<EigenPair, 3> out;
    for (int k = 1; k <= 3; ++k)
        out[k - 1] = {generation_vector(k), image.entries[k - 1][k - 1]};
    return out;
}

}  // namespace naqm::matrix_rep
