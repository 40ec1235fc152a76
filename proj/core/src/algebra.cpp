#include "naqm/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace naqm::algebra {

namespace {

// The unit product table, one row per left factor, columns in canonical
// order (1, i1..i7, i0, e1..e7). Each cell is the signed unit a*b.
// Transcribed row by row; a second, independently keyed transcription
// lives in the verification module and is compared cell-for-cell.
constexpr std::array<std::string_view, kUnitCount> kTableRows = {
    /* 1  */ "+1,+i1,+i2,+i3,+i4,+i5,+i6,+i7,+i0,+e1,+e2,+e3,+e4,+e5,+e6,+e7",
    /* i1 */ "+i1,-1,+i3,-i2,+i5,-i4,-i7,+i6,-e1,+i0,+e3,-e2,+e5,-e4,-e7,+e6",
    /* i2 */ "+i2,-i3,-1,+i1,+i6,+i7,-i4,-i5,-e2,-e3,+i0,+e1,+e6,+e7,-e4,-e5",
    /* i3 */ "+i3,+i2,-i1,-1,+i7,-i6,+i5,-i4,-e3,+e2,-e1,+i0,+e7,-e6,+e5,-e4",
    /* i4 */ "+i4,-i5,-i6,-i7,-1,+i1,+i2,+i3,-e4,-e5,-e6,-e7,+i0,+e1,+e2,+e3",
    /* i5 */ "+i5,+i4,-i7,+i6,-i1,-1,-i3,+i2,-e5,+e4,-e7,+e6,-e1,+i0,-e3,+e2",
    /* i6 */ "+i6,+i7,+i4,-i5,-i2,+i3,-1,-i1,-e6,+e7,+e4,-e5,-e2,+e3,+i0,-e1",
    /* i7 */ "+i7,-i6,+i5,+i4,-i3,-i2,+i1,-1,-e7,-e6,+e5,+e4,-e3,-e2,+e1,+i0",
    /* i0 */ "+i0,-e1,-e2,-e3,-e4,-e5,-e6,-e7,-1,+i1,+i2,+i3,+i4,+i5,+i6,+i7",
    /* e1 */ "+e1,+i0,+e3,-e2,+e5,-e4,-e7,+e6,+i1,+1,-i3,+i2,-i5,+i4,+i7,-i6",
    /* e2 */ "+e2,-e3,+i0,+e1,+e6,+e7,-e4,-e5,+i2,+i3,+1,-i1,-i6,-i7,+i4,+i5",
    /* e3 */ "+e3,+e2,-e1,+i0,+e7,-e6,+e5,-e4,+i3,-i2,+i1,+1,-i7,+i6,-i5,+i4",
    /* e4 */ "+e4,-e5,-e6,-e7,+i0,+e1,+e2,+e3,+i4,+i5,+i6,+i7,+1,-i1,-i2,-i3",
    /* e5 */ "+e5,+e4,-e7,+e6,-e1,+i0,-e3,+e2,+i5,-i4,+i7,-i6,+i1,+1,+i3,-i2",
    /* e6 */ "+e6,+e7,+e4,-e5,-e2,+e3,+i0,-e1,+i6,-i7,-i4,+i5,+i2,-i3,+1,+i1",
    /* e7 */ "+e7,-e6,+e5,+e4,-e3,-e2,+e1,+i0,+i7,+i6,-i5,-i4,+i3,+i2,-i1,+1",
};

constexpr std::array<std::string_view, kUnitCount> kUnitTokens = {
    "1", "i1", "i2", "i3", "i4", "i5", "i6", "i7",
    "i0", "e1", "e2", "e3", "e4", "e5", "e6", "e7"};

constexpr int token_to_index(std::string_view token) {
    for (std::size_t k = 0; k < kUnitTokens.size(); ++k) {
        if (kUnitTokens[k] == token) return static_cast<int>(k);
    }
    return -1;
}

// Packed cell: sign * (unit index + 1).
constexpr std::int8_t parse_cell(std::string_view cell) {
    int sign = 1;
    if (cell.starts_with('+')) {
        cell.remove_prefix(1);
    } else if (cell.starts_with('-')) {
        sign = -1;
        cell.remove_prefix(1);
    }
    const int index = token_to_index(cell);
    return static_cast<std::int8_t>(sign * (index + 1));
}

constexpr std::array<std::int8_t, kUnitCount> parse_row(std::string_view row) {
    std::array<std::int8_t, kUnitCount> out{};
    std::size_t cell = 0;
    while (!row.empty()) {
        const std::size_t comma = row.find(',');
        const std::string_view tok = row.substr(0, comma);
        out[cell++] = parse_cell(tok);
        row = (comma == std::string_view::npos) ? std::string_view{} : row.substr(comma + 1);
    }
    return out;
}

constexpr std::array<std::array<std::int8_t, kUnitCount>, kUnitCount> build_table() {
    std::array<std::array<std::int8_t, kUnitCount>, kUnitCount> table{};
    for (std::size_t r = 0; r < kUnitCount; ++r) table[r] = parse_row(kTableRows[r]);
    return table;
}

constexpr auto kPackedTable = build_table();

constexpr std::int8_t packed(BasisUnit a, BasisUnit b) {
    return kPackedTable[index_of(a)][index_of(b)];
}

// Compile-time pins against the source table.
static_assert(packed(BasisUnit::I1, BasisUnit::I2) == +4);    // i1*i2 = +i3
static_assert(packed(BasisUnit::I0, BasisUnit::I1) == -10);   // i0*i1 = -e1
static_assert(packed(BasisUnit::I4, BasisUnit::E7) == +12);   // i4*e7 = +e3
static_assert(packed(BasisUnit::E7, BasisUnit::E7) == +1);    // e7*e7 = +1
static_assert(packed(BasisUnit::I7, BasisUnit::I7) == -1);    // i7*i7 = -1

}  // namespace

const std::array<BasisUnit, kUnitCount> kAllUnits = [] {
    std::array<BasisUnit, kUnitCount> units{};
    for (std::size_t k = 0; k < kUnitCount; ++k) units[k] = static_cast<BasisUnit>(k);
    return units;
}();

BasisUnit unit_from_index(int index) {
    if (index < 0 || index >= static_cast<int>(kUnitCount))
        throw std::out_of_range("basis unit index must be in 0..15");
    return static_cast<BasisUnit>(index);
}

BasisUnit imaginary_unit(int n) {
    if (n < 0 || n > 7) throw std::out_of_range("imaginary unit i_n requires n in 0..7");
    return n == 0 ? BasisUnit::I0 : static_cast<BasisUnit>(n);
}

BasisUnit epsilon_unit(int n) {
    if (n < 1 || n > 7) throw std::out_of_range("epsilon unit e_n requires n in 1..7");
    return static_cast<BasisUnit>(8 + n);
}

std::string_view unit_token(BasisUnit u) noexcept { return kUnitTokens[index_of(u)]; }

bool parse_unit_token(std::string_view token, BasisUnit& out) noexcept {
    const int index = token_to_index(token);
    if (index < 0) return false;
    out = static_cast<BasisUnit>(index);
    return true;
}

SignedUnit basis_product(BasisUnit a, BasisUnit b) noexcept {
    const std::int8_t cell = packed(a, b);
    const int sign = cell < 0 ? -1 : 1;
    const int index = (cell < 0 ? -cell : cell) - 1;
    return SignedUnit{sign, static_cast<BasisUnit>(index)};
}

std::array<BasisUnit, kUnitCount> UnitSet::units() const noexcept {
    std::array<BasisUnit, kUnitCount> out{};
    std::size_t n = 0;
    for (std::size_t k = 0; k < kUnitCount; ++k) {
        if (mask_ & (1u << k)) out[n++] = static_cast<BasisUnit>(k);
    }
    return out;
}

std::string_view subalgebra_name(SubalgebraId id) noexcept {
    switch (id) {
        case SubalgebraId::Quaternion: return "QUATERNION";
        case SubalgebraId::Biquaternion: return "BIQUATERNION";
        case SubalgebraId::Octonion: return "OCTONION";
        case SubalgebraId::CommutativeA: return "COMMUTATIVE_A";
        case SubalgebraId::Full: return "FULL";
    }
    return "?";
}

UnitSet subalgebra_units(SubalgebraId id) noexcept {
    using U = BasisUnit;
    switch (id) {
        case SubalgebraId::Quaternion:
            return UnitSet{U::One, U::I1, U::I2, U::I3};
        case SubalgebraId::Biquaternion:
            return UnitSet{U::One, U::I0, U::I1, U::I2, U::I3, U::E1, U::E2, U::E3};
        case SubalgebraId::Octonion:
            return UnitSet{U::One, U::I1, U::I2, U::I3, U::I4, U::I5, U::I6, U::I7};
        case SubalgebraId::CommutativeA:
            return UnitSet{U::One, U::I3, U::E3, U::I0};
        case SubalgebraId::Full: {
            UnitSet all;
            for (BasisUnit u : kAllUnits) all.insert(u);
            return all;
        }
    }
    return UnitSet{};
}

bool closure_check(const UnitSet& units) {
    if (!units.contains(BasisUnit::One))
        throw std::invalid_argument("closure_check requires a set containing the unit 1");
    const auto members = units.units();
    const std::size_t n = units.size();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!units.contains(basis_product(members[a], members[b]).unit)) return false;
        }
    }
    return true;
}

AlgebraElement AlgebraElement::unit(BasisUnit u) {
    AlgebraElement x;
    x.coeff_[index_of(u)] = Complex{1.0, 0.0};
    return x;
}

AlgebraElement AlgebraElement::scalar(Complex value) {
    AlgebraElement x;
    x.coeff_[0] = value;
    return x;
}

AlgebraElement AlgebraElement::scaled_unit(Complex value, BasisUnit u) {
    AlgebraElement x;
    x.coeff_[index_of(u)] = value;
    return x;
}

AlgebraElement AlgebraElement::with_coeff(BasisUnit u, Complex value) const {
    AlgebraElement x = *this;
    x.coeff_[index_of(u)] = value;
    return x;
}

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (std::size_t k = 0; k < kUnitCount; ++k) out.coeff_[k] = x.coeff_[k] + y.coeff_[k];
    return out;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (std::size_t k = 0; k < kUnitCount; ++k) out.coeff_[k] = x.coeff_[k] - y.coeff_[k];
    return out;
}

AlgebraElement operator-(const AlgebraElement& x) {
    AlgebraElement out;
    for (std::size_t k = 0; k < kUnitCount; ++k) out.coeff_[k] = -x.coeff_[k];
    return out;
}

AlgebraElement operator*(Complex a, const AlgebraElement& x) {
    AlgebraElement out;
    for (std::size_t k = 0; k < kUnitCount; ++k) out.coeff_[k] = a * x.coeff_[k];
    return out;
}

AlgebraElement operator*(const AlgebraElement& x, Complex a) { return a * x; }

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement out;
    for (std::size_t a = 0; a < kUnitCount; ++a) {
        const Complex xa = x.coeff_[a];
        if (xa == Complex{}) continue;
        for (std::size_t b = 0; b < kUnitCount; ++b) {
            const Complex yb = y.coeff_[b];
            if (yb == Complex{}) continue;
            const std::int8_t cell = kPackedTable[a][b];
            const int index = (cell < 0 ? -cell : cell) - 1;
            const Complex term = xa * yb;
            out.coeff_[index] += cell < 0 ? -term : term;
        }
    }
    return out;
}

AlgebraElement linear_combine(std::span<const std::pair<Complex, AlgebraElement>> terms) {
    AlgebraElement out;
    for (const auto& [weight, element] : terms) out = out + weight * element;
    return out;
}

AlgebraElement linear_combine(std::initializer_list<std::pair<Complex, AlgebraElement>> terms) {
    return linear_combine(std::span<const std::pair<Complex, AlgebraElement>>{terms.begin(), terms.size()});
}

double max_abs_diff(const AlgebraElement& x, const AlgebraElement& y) noexcept {
    double worst = 0.0;
    for (std::size_t k = 0; k < kUnitCount; ++k)
        worst = std::max(worst, std::abs(x.coeff(static_cast<int>(k)) - y.coeff(static_cast<int>(k))));
    return worst;
}

bool approx_equal(const AlgebraElement& x, const AlgebraElement& y, double tolerance) noexcept {
    return max_abs_diff(x, y) <= tolerance;
}

bool is_zero(const AlgebraElement& x, double tolerance) noexcept {
    return approx_equal(x, AlgebraElement{}, tolerance);
}

bool in_span(const AlgebraElement& x, const UnitSet& span, double tolerance) noexcept {
    for (std::size_t k = 0; k < kUnitCount; ++k) {
        if (span.contains(static_cast<BasisUnit>(k))) continue;
        if (std::abs(x.coeff(static_cast<int>(k))) > tolerance) return false;
    }
    return true;
}

bool all_finite(const AlgebraElement& x) noexcept {
    for (std::size_t k = 0; k < kUnitCount; ++k) {
        const Complex c = x.coeff(static_cast<int>(k));
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

std::string format_real(double value) {
    if (std::isfinite(value) && value == std::nearbyint(value) && std::abs(value) < 9.007199254740992e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.0f", value);
        return buf;
    }
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

std::string format_complex(Complex value) {
    if (value.imag() == 0.0) return format_real(value.real());
    std::string out = "(";
    out += format_real(value.real());
    out += value.imag() < 0.0 ? "-" : "+";
    out += format_real(std::abs(value.imag()));
    out += "I)";
    return out;
}

std::string to_string(const AlgebraElement& x) {
    std::string out;
    for (std::size_t k = 0; k < kUnitCount; ++k) {
        const Complex c = x.coeff(static_cast<int>(k));
        if (c == Complex{}) continue;
        std::string term;
        if (k == 0) {
            term = format_complex(c);
        } else {
            const std::string unit{unit_token(static_cast<BasisUnit>(k))};
            if (c.imag() == 0.0 && c.real() == 1.0) {
                term = unit;
            } else if (c.imag() == 0.0 && c.real() == -1.0) {
                term = "-" + unit;
            } else {
                term = format_complex(c) + "*" + unit;
            }
        }
        if (out.empty()) {
            out = term;
        } else if (term.starts_with('-')) {
            out += " - ";
            out += term.substr(1);
        } else {
            out += " + ";
            out += term;
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

std::string signed_cell(BasisUnit row, BasisUnit col) {
    const SignedUnit p = basis_product(row, col);
    std::string cell(p.sign < 0 ? "-" : "+");
    cell += unit_token(p.unit);
    return cell;
}

}  // namespace

std::string export_table(TableFormat format) {
    std::string out;
    if (format == TableFormat::Csv) {
        out += "*";
        for (BasisUnit col : kAllUnits) {
            out += ",";
            out += unit_token(col);
        }
        out += "\n";
        for (BasisUnit row : kAllUnits) {
            out += unit_token(row);
            for (BasisUnit col : kAllUnits) {
                out += ",";
                out += signed_cell(row, col);
            }
            out += "\n";
        }
        return out;
    }
    // Markdown pipe table.
    out += "| * |";
    for (BasisUnit col : kAllUnits) {
        out += " ";
        out += unit_token(col);
        out += " |";
    }
    out += "\n|---|";
    for (std::size_t k = 0; k < kUnitCount; ++k) out += "---|";
    out += "\n";
    for (BasisUnit row : kAllUnits) {
        out += "| ";
        out += unit_token(row);
        out += " |";
        for (BasisUnit col : kAllUnits) {
            out += " ";
            out += signed_cell(row, col);
            out += " |";
        }
        out += "\n";
    }
    return out;
}

}  // namespace naqm::algebra
