#include "naqm/algebra.hpp"
#include "naqm/verification.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

using namespace naqm;
using algebra::AlgebraElement;
using algebra::BasisUnit;
using algebra::Complex;
using algebra::SignedUnit;
using algebra::UnitSet;

namespace {

AlgebraElement unit(BasisUnit u) { return AlgebraElement::unit(u); }

// Gaussian-integer random elements keep every product exactly representable,
// so the algebraic laws below can be asserted with exact equality.
AlgebraElement random_element(std::mt19937& rng, const UnitSet& span) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    AlgebraElement x;
    for (BasisUnit u : algebra::kAllUnits) {
        if (!span.contains(u)) continue;
        x = x + AlgebraElement::scaled_unit(Complex(coeff(rng), coeff(rng)), u);
    }
    return x;
}

Complex random_dyadic_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> eighths(-16, 16);
    return {eighths(rng) / 8.0, eighths(rng) / 8.0};
}

}  // namespace

TEST_CASE("basis product matches hand-checked table cells") {
    using algebra::basis_product;
    CHECK(basis_product(BasisUnit::I1, BasisUnit::I2) == SignedUnit{1, BasisUnit::I3});
    CHECK(basis_product(BasisUnit::One, BasisUnit::E5) == SignedUnit{1, BasisUnit::E5});
    CHECK(basis_product(BasisUnit::I4, BasisUnit::E7) == SignedUnit{1, BasisUnit::E3});
    CHECK(basis_product(BasisUnit::I0, BasisUnit::I1) == SignedUnit{-1, BasisUnit::E1});
    CHECK(basis_product(BasisUnit::I2, BasisUnit::I1) == SignedUnit{-1, BasisUnit::I3});
    CHECK(basis_product(BasisUnit::E7, BasisUnit::E7) == SignedUnit{1, BasisUnit::One});
    CHECK(basis_product(BasisUnit::I5, BasisUnit::E2) == SignedUnit{-1, BasisUnit::E7});
}

TEST_CASE("unit squares split by family") {
    for (int n = 0; n <= 7; ++n)
        CHECK(algebra::basis_product(algebra::imaginary_unit(n), algebra::imaginary_unit(n)) ==
              SignedUnit{-1, BasisUnit::One});
    for (int n = 1; n <= 7; ++n)
        CHECK(algebra::basis_product(algebra::epsilon_unit(n), algebra::epsilon_unit(n)) ==
              SignedUnit{1, BasisUnit::One});
    CHECK(algebra::basis_product(BasisUnit::One, BasisUnit::One) ==
          SignedUnit{1, BasisUnit::One});
}

TEST_CASE("1 is a two-sided identity") {
    for (BasisUnit u : algebra::kAllUnits) {
        CHECK(algebra::basis_product(BasisUnit::One, u) == SignedUnit{1, u});
        CHECK(algebra::basis_product(u, BasisUnit::One) == SignedUnit{1, u});
    }
}

TEST_CASE("every table row and column is a signed permutation of the units") {
    for (BasisUnit a : algebra::kAllUnits) {
        std::set<BasisUnit> row_units;
        std::set<BasisUnit> col_units;
        for (BasisUnit b : algebra::kAllUnits) {
            row_units.insert(algebra::basis_product(a, b).unit);
            col_units.insert(algebra::basis_product(b, a).unit);
        }
        CHECK(row_units.size() == algebra::kUnitCount);
        CHECK(col_units.size() == algebra::kUnitCount);
    }
}

TEST_CASE("i0 commutes with every unit and generates the e-units") {
    for (BasisUnit u : algebra::kAllUnits) {
        CHECK(algebra::basis_product(BasisUnit::I0, u) == algebra::basis_product(u, BasisUnit::I0));
    }
    // e_k = -i0 * i_k for k = 1..7.
    for (int k = 1; k <= 7; ++k) {
        CHECK(algebra::basis_product(BasisUnit::I0, algebra::imaginary_unit(k)) ==
              SignedUnit{-1, algebra::epsilon_unit(k)});
    }
}

TEST_CASE("canonical index order and tokens") {
    CHECK(algebra::index_of(BasisUnit::One) == 0);
    CHECK(algebra::index_of(BasisUnit::I7) == 7);
    CHECK(algebra::index_of(BasisUnit::I0) == 8);
    CHECK(algebra::index_of(BasisUnit::E1) == 9);
    CHECK(algebra::index_of(BasisUnit::E7) == 15);
    CHECK(algebra::unit_token(BasisUnit::I0) == "i0");
    CHECK(algebra::unit_token(BasisUnit::E4) == "e4");
    BasisUnit u{};
    CHECK(algebra::parse_unit_token("e7", u));
    CHECK(u == BasisUnit::E7);
    CHECK_FALSE(algebra::parse_unit_token("e0", u));
    CHECK_FALSE(algebra::parse_unit_token("i8", u));
    CHECK_THROWS_AS(algebra::unit_from_index(16), std::out_of_range);
    CHECK_THROWS_AS(algebra::imaginary_unit(8), std::out_of_range);
    CHECK_THROWS_AS(algebra::epsilon_unit(0), std::out_of_range);
}

TEST_CASE("element multiplication expands table lookups") {
    const AlgebraElement lhs = (unit(BasisUnit::I1) + unit(BasisUnit::I2)) * unit(BasisUnit::I2);
    const AlgebraElement expected = unit(BasisUnit::I3) - unit(BasisUnit::One);
    CHECK(lhs == expected);

    std::mt19937 rng{7};
    CHECK(AlgebraElement::zero() *
              random_element(rng, algebra::subalgebra_units(algebra::SubalgebraId::Full)) ==
          AlgebraElement::zero());

    const Complex i{0.0, 1.0};
    CHECK((i * unit(BasisUnit::I1)) * unit(BasisUnit::I1) == AlgebraElement::scalar(-i));
}

TEST_CASE("multiply is bilinear for random elements and dyadic scalars") {
    std::mt19937 rng{20240817};
    const UnitSet full = algebra::subalgebra_units(algebra::SubalgebraId::Full);
    for (int trial = 0; trial < 50; ++trial) {
        const AlgebraElement x = random_element(rng, full);
        const AlgebraElement y = random_element(rng, full);
        const AlgebraElement z = random_element(rng, full);
        const Complex a = random_dyadic_scalar(rng);
        const Complex b = random_dyadic_scalar(rng);
        CHECK((a * x + b * y) * z == a * (x * z) + b * (y * z));
        CHECK(z * (a * x + b * y) == a * (z * x) + b * (z * y));
    }
}

TEST_CASE("linear_combine is a componentwise weighted sum") {
    const AlgebraElement i1 = unit(BasisUnit::I1);
    const AlgebraElement e1 = unit(BasisUnit::E1);
    CHECK(algebra::linear_combine({{Complex{2, 0}, i1}, {Complex{-1, 0}, i1}}) == i1);
    CHECK(algebra::linear_combine({{Complex{1, 0}, i1}, {Complex{0, 1}, e1}}) ==
          i1 + Complex{0, 1} * e1);
    CHECK(algebra::linear_combine({}) == AlgebraElement::zero());
}

TEST_CASE("subalgebra unit sets") {
    using algebra::SubalgebraId;
    CHECK(algebra::subalgebra_units(SubalgebraId::CommutativeA) ==
          UnitSet{BasisUnit::One, BasisUnit::I3, BasisUnit::E3, BasisUnit::I0});
    CHECK(algebra::subalgebra_units(SubalgebraId::Quaternion) ==
          UnitSet{BasisUnit::One, BasisUnit::I1, BasisUnit::I2, BasisUnit::I3});
    CHECK(algebra::subalgebra_units(SubalgebraId::Full).size() == 16);
    CHECK(algebra::subalgebra_units(SubalgebraId::Biquaternion).size() == 8);
    CHECK(algebra::subalgebra_units(SubalgebraId::Octonion).size() == 8);
    CHECK_FALSE(algebra::subalgebra_units(SubalgebraId::Octonion).contains(BasisUnit::I0));
}

TEST_CASE("closure holds for the named spans and fails off them") {
    for (algebra::SubalgebraId id : algebra::kAllSubalgebras)
        CHECK(algebra::closure_check(algebra::subalgebra_units(id)));

    CHECK_FALSE(algebra::closure_check(UnitSet{BasisUnit::One, BasisUnit::I1, BasisUnit::I4}));
    CHECK(algebra::closure_check(UnitSet{BasisUnit::One}));
    CHECK_THROWS_AS(algebra::closure_check(UnitSet{BasisUnit::I1}), std::invalid_argument);

    // Appending i0 to the octonion span leaks into the e-units.
    UnitSet with_i0 = algebra::subalgebra_units(algebra::SubalgebraId::Octonion);
    with_i0.insert(BasisUnit::I0);
    CHECK_FALSE(algebra::closure_check(with_i0));
}

TEST_CASE("associativity on the associative spans, exhaustive basis triples") {
    for (algebra::SubalgebraId id :
         {algebra::SubalgebraId::Quaternion, algebra::SubalgebraId::Biquaternion,
          algebra::SubalgebraId::CommutativeA}) {
        const UnitSet span = algebra::subalgebra_units(id);
        const auto members = span.units();
        const std::size_t n = span.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c) {
                    const AlgebraElement x = unit(members[a]);
                    const AlgebraElement y = unit(members[b]);
                    const AlgebraElement z = unit(members[c]);
                    CHECK((x * y) * z == x * (y * z));
                }
    }
}

TEST_CASE("commutativity on the span {1, i3, e3, i0}") {
    const UnitSet span = algebra::subalgebra_units(algebra::SubalgebraId::CommutativeA);
    const auto members = span.units();
    for (std::size_t a = 0; a < span.size(); ++a)
        for (std::size_t b = 0; b < span.size(); ++b)
            CHECK(unit(members[a]) * unit(members[b]) == unit(members[b]) * unit(members[a]));
}

TEST_CASE("alternativity on the octonion span for random elements") {
    std::mt19937 rng{11};
    const UnitSet span = algebra::subalgebra_units(algebra::SubalgebraId::Octonion);
    for (int trial = 0; trial < 50; ++trial) {
        const AlgebraElement x = random_element(rng, span);
        const AlgebraElement y = random_element(rng, span);
        CHECK((x * x) * y == x * (x * y));
        CHECK((y * x) * x == y * (x * x));
    }
}

TEST_CASE("span membership and tolerance comparisons") {
    const AlgebraElement x = unit(BasisUnit::I1) + Complex{0, 2} * unit(BasisUnit::I3);
    CHECK(algebra::in_span(x, algebra::subalgebra_units(algebra::SubalgebraId::Quaternion)));
    CHECK_FALSE(algebra::in_span(x, UnitSet{BasisUnit::One, BasisUnit::I1}));

    const AlgebraElement y = x + AlgebraElement::scaled_unit(Complex{1e-13, 0}, BasisUnit::E5);
    CHECK_FALSE(x == y);
    CHECK(algebra::approx_equal(x, y, 1e-12));
    CHECK(algebra::max_abs_diff(x, y) == doctest::Approx(1e-13));
}

TEST_CASE("canonical element formatting") {
    CHECK(algebra::to_string(AlgebraElement::scaled_unit(-2.0, BasisUnit::I3)) == "-2*i3");
    CHECK(algebra::to_string(AlgebraElement::zero()) == "0");
    CHECK(algebra::to_string(unit(BasisUnit::I1) + Complex{0, 1} * unit(BasisUnit::E1)) ==
          "i1 + (0+1I)*e1");
    CHECK(algebra::to_string(unit(BasisUnit::I3) - unit(BasisUnit::One)) == "-1 + i3");
    CHECK(algebra::to_string(AlgebraElement::scalar(Complex{1.5, -0.5})) == "(1.5-0.5I)");
}

TEST_CASE("csv export shape and fixture fidelity") {
    const std::string csv = algebra::export_table(algebra::TableFormat::Csv);
    CHECK(csv == verification::reference_table_csv());

    std::istringstream stream(csv);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(stream, line)) {
        ++lines;
        CHECK(std::count(line.begin(), line.end(), ',') == 16);
    }
    CHECK(lines == 17);
    CHECK(csv.find("\ne7,") != std::string::npos);
    CHECK(csv.substr(csv.rfind(',') + 1) == "+1\n");  // (e7,e7) cell
}

TEST_CASE("markdown export carries the signed cells") {
    const std::string md = algebra::export_table(algebra::TableFormat::Markdown);
    // Row i2, column i1 holds -i3.
    const std::size_t row = md.find("\n| i2 |");
    REQUIRE(row != std::string::npos);
    const std::size_t line_end = md.find('\n', row + 1);
    const std::string i2_row = md.substr(row + 1, line_end - row - 1);
    std::istringstream fields(i2_row);
    std::string token;
    std::vector<std::string> cells;
    while (std::getline(fields, token, '|')) cells.push_back(token);
    REQUIRE(cells.size() >= 4);
    CHECK(cells[3] == " -i3 ");  // cells[1] label, cells[2] column "1", cells[3] column i1
}
