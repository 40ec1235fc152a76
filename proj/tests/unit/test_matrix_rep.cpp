#include "naqm/matrix_rep.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace naqm;
using algebra::BasisUnit;
using matrix_rep::GaussianInt;
using matrix_rep::RepMatrix;

namespace {

RepMatrix diag(GaussianInt a, GaussianInt b, GaussianInt c) {
    RepMatrix m;
    m.entries[0][0] = a;
    m.entries[1][1] = b;
    m.entries[2][2] = c;
    return m;
}

constexpr GaussianInt kOne{1, 0};
constexpr GaussianInt kI{0, 1};
constexpr GaussianInt kMinusOne{-1, 0};
constexpr GaussianInt kMinusI{0, -1};

}  // namespace

TEST_CASE("images of the span units") {
    CHECK(matrix_rep::rep(BasisUnit::One) == diag(kOne, kOne, kOne));
    CHECK(matrix_rep::rep(BasisUnit::I3) == diag(kMinusI, kI, kI));
    CHECK(matrix_rep::rep(BasisUnit::E3) == diag(kOne, kMinusOne, kOne));
    CHECK(matrix_rep::rep(BasisUnit::I0) == diag(kMinusI, kMinusI, kI));
    CHECK_THROWS_AS(matrix_rep::rep(BasisUnit::I1), std::domain_error);
    CHECK_THROWS_AS(matrix_rep::rep(BasisUnit::E5), std::domain_error);
}

TEST_CASE("rep is multiplicative on the span") {
    const auto report = matrix_rep::homomorphism_check();
    CHECK(report.suite == "matrix-rep-homomorphism");
    CHECK(report.total_cases == 16);
    CHECK(report.passed);

    // Two hand-checked pairs.
    CHECK(matrix_rep::rep(BasisUnit::I3) * matrix_rep::rep(BasisUnit::E3) ==
          matrix_rep::rep(BasisUnit::I0));
    CHECK(matrix_rep::rep(BasisUnit::I0) * matrix_rep::rep(BasisUnit::I3) ==
          -1 * matrix_rep::rep(BasisUnit::E3));
}

TEST_CASE("images commute pairwise and square like the units") {
    const BasisUnit span[] = {BasisUnit::One, BasisUnit::I3, BasisUnit::E3, BasisUnit::I0};
    for (BasisUnit a : span)
        for (BasisUnit b : span)
            CHECK(matrix_rep::rep(a) * matrix_rep::rep(b) ==
                  matrix_rep::rep(b) * matrix_rep::rep(a));

    const RepMatrix identity = matrix_rep::rep(BasisUnit::One);
    CHECK(matrix_rep::rep(BasisUnit::I3) * matrix_rep::rep(BasisUnit::I3) == -1 * identity);
    CHECK(matrix_rep::rep(BasisUnit::E3) * matrix_rep::rep(BasisUnit::E3) == identity);
    CHECK(matrix_rep::rep(BasisUnit::I0) * matrix_rep::rep(BasisUnit::I0) == -1 * identity);
}

TEST_CASE("eigen decomposition on the standard basis") {
    const auto pairs = matrix_rep::eigen_decomposition(BasisUnit::I3);
    CHECK(pairs[0].value == kMinusI);
    CHECK(pairs[1].value == kI);
    CHECK(pairs[2].value == kI);
    CHECK(pairs[0].vector == matrix_rep::generation_vector(1));
    CHECK(pairs[2].vector == matrix_rep::generation_vector(3));

    const auto eps = matrix_rep::eigen_decomposition(BasisUnit::E3);
    CHECK(eps[0].value == kOne);
    CHECK(eps[1].value == kMinusOne);
    CHECK(eps[2].value == kOne);

    const auto i0 = matrix_rep::eigen_decomposition(BasisUnit::I0);
    CHECK(i0[0].value == kMinusI);
    CHECK(i0[1].value == kMinusI);
    CHECK(i0[2].value == kI);

    const auto one = matrix_rep::eigen_decomposition(BasisUnit::One);
    for (const auto& pair : one) CHECK(pair.value == kOne);

    // The eigen equation itself, exactly: M * xi_k = lambda_k * xi_k.
    for (BasisUnit u : {BasisUnit::One, BasisUnit::I3, BasisUnit::E3, BasisUnit::I0}) {
        const RepMatrix m = matrix_rep::rep(u);
        for (const auto& [vector, value] : matrix_rep::eigen_decomposition(u)) {
            for (int r = 0; r < 3; ++r) {
                GaussianInt applied;
                for (int c = 0; c < 3; ++c) applied = applied + m.entries[r][c] * vector.components[c];
                CHECK(applied == value * vector.components[r]);
            }
        }
    }
}
