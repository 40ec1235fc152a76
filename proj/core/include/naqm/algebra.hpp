#pragma once

// Exact arithmetic in the 16-dimensional sedenion algebra spanned by
// {1, i1..i7, i0, e1..e7}. Basis products come from an embedded 16x16
// structure-constant table; every cell is a signed basis unit. Elements
// are complex-coefficient linear combinations of the basis units, with
// the coefficient field's imaginary unit I kept distinct from the basis
// unit i0.

#include <array>
#include <bit>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace naqm::algebra {

using Complex = std::complex<double>;

/// Absolute tolerance used for comparisons of floating-point results.
inline constexpr double kDefaultTolerance = 1e-12;

// ---------------------------------------------------------------------------
// Basis units
// ---------------------------------------------------------------------------

/// The sixteen basis units in canonical (table row) order:
/// 1, i1..i7, i0, e1..e7. The i-units square to -1, the e-units to +1.
enum class BasisUnit : std::uint8_t {
    One = 0,
    I1 = 1,
    I2 = 2,
    I3 = 3,
    I4 = 4,
    I5 = 5,
    I6 = 6,
    I7 = 7,
    I0 = 8,
    E1 = 9,
    E2 = 10,
    E3 = 11,
    E4 = 12,
    E5 = 13,
    E6 = 14,
    E7 = 15,
};

inline constexpr std::size_t kUnitCount = 16;

constexpr int index_of(BasisUnit u) noexcept { return static_cast<int>(u); }

/// Canonical index -> unit. Throws std::out_of_range outside 0..15.
BasisUnit unit_from_index(int index);

/// i_n for n = 0..7. Throws std::out_of_range otherwise.
BasisUnit imaginary_unit(int n);

/// e_n for n = 1..7. Throws std::out_of_range otherwise.
BasisUnit epsilon_unit(int n);

/// ASCII token of a unit: "1", "i0".."i7", "e1".."e7".
std::string_view unit_token(BasisUnit u) noexcept;

/// Inverse of unit_token; returns true and sets `out` on success.
bool parse_unit_token(std::string_view token, BasisUnit& out) noexcept;

/// All sixteen units in canonical order.
extern const std::array<BasisUnit, kUnitCount> kAllUnits;

// ---------------------------------------------------------------------------
// Signed units and the multiplication table
// ---------------------------------------------------------------------------

/// The value of a basis product: a sign in {+1,-1} and a basis unit.
struct SignedUnit {
    int sign;
    BasisUnit unit;

    friend constexpr bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

/// Table lookup for the product of two basis units. Total on all 16x16
/// inputs; every cell of the embedded table is a single signed unit.
SignedUnit basis_product(BasisUnit a, BasisUnit b) noexcept;

// ---------------------------------------------------------------------------
// Unit sets and subalgebras
// ---------------------------------------------------------------------------

/// A set of basis units stored as a 16-bit mask, in canonical index order.
class UnitSet {
  public:
    constexpr UnitSet() = default;
    constexpr UnitSet(std::initializer_list<BasisUnit> units) {
        for (BasisUnit u : units) insert(u);
    }

    constexpr void insert(BasisUnit u) { mask_ |= static_cast<std::uint16_t>(1u << index_of(u)); }
    [[nodiscard]] constexpr bool contains(BasisUnit u) const {
        return (mask_ & (1u << index_of(u))) != 0;
    }
    [[nodiscard]] constexpr std::size_t size() const { return std::popcount(mask_); }
    [[nodiscard]] constexpr std::uint16_t mask() const { return mask_; }

    /// Members in canonical order.
    [[nodiscard]] std::array<BasisUnit, kUnitCount> units() const noexcept;
    [[nodiscard]] std::size_t unit_count() const noexcept { return size(); }

    friend constexpr bool operator==(const UnitSet&, const UnitSet&) = default;

  private:
    std::uint16_t mask_ = 0;
};

/// Named unit spans with closed multiplication.
enum class SubalgebraId {
    Quaternion,     ///< {1, i1, i2, i3}
    Biquaternion,   ///< {1, i0, i1..i3, e1..e3}
    Octonion,       ///< {1, i1..i7}
    CommutativeA,   ///< {1, i3, e3, i0}
    Full,           ///< all sixteen units
};

inline constexpr std::array<SubalgebraId, 5> kAllSubalgebras = {
    SubalgebraId::Quaternion, SubalgebraId::Biquaternion, SubalgebraId::Octonion,
    SubalgebraId::CommutativeA, SubalgebraId::Full};

std::string_view subalgebra_name(SubalgebraId id) noexcept;

/// The basis-unit set spanned by a named subalgebra.
UnitSet subalgebra_units(SubalgebraId id) noexcept;

/// True iff every pairwise basis product of `units` lands back in `units`.
/// The set must contain the unit 1; throws std::invalid_argument otherwise.
bool closure_check(const UnitSet& units);

// ---------------------------------------------------------------------------
// Algebra elements
// ---------------------------------------------------------------------------

/// A complex-coefficient linear combination of the sixteen basis units.
/// Value type; all operations return new elements.
class AlgebraElement {
  public:
    constexpr AlgebraElement() = default;
    explicit AlgebraElement(const std::array<Complex, kUnitCount>& coefficients)
        : coeff_(coefficients) {}

    static AlgebraElement zero() { return AlgebraElement{}; }
    static AlgebraElement unit(BasisUnit u);
    static AlgebraElement scalar(Complex value);
    /// value * unit, e.g. scaled_unit(I, E1) = I*e1.
    static AlgebraElement scaled_unit(Complex value, BasisUnit u);

    [[nodiscard]] const Complex& coeff(BasisUnit u) const { return coeff_[index_of(u)]; }
    [[nodiscard]] const Complex& coeff(int index) const { return coeff_.at(index); }
    [[nodiscard]] const std::array<Complex, kUnitCount>& coefficients() const { return coeff_; }

    [[nodiscard]] AlgebraElement with_coeff(BasisUnit u, Complex value) const;

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator-(const AlgebraElement& x);
    friend AlgebraElement operator*(Complex a, const AlgebraElement& x);
    friend AlgebraElement operator*(const AlgebraElement& x, Complex a);
    /// Bilinear extension of basis_product to whole elements.
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);

    /// Exact componentwise equality.
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  private:
    std::array<Complex, kUnitCount> coeff_{};
};

/// Named form of operator*: the bilinear product of two elements.
inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

/// Componentwise weighted sum of (scalar, element) terms. Empty input is 0.
AlgebraElement linear_combine(std::span<const std::pair<Complex, AlgebraElement>> terms);
AlgebraElement linear_combine(std::initializer_list<std::pair<Complex, AlgebraElement>> terms);

/// Largest absolute coefficient difference between two elements.
double max_abs_diff(const AlgebraElement& x, const AlgebraElement& y) noexcept;

/// Componentwise comparison with absolute tolerance.
bool approx_equal(const AlgebraElement& x, const AlgebraElement& y,
                  double tolerance = kDefaultTolerance) noexcept;

bool is_zero(const AlgebraElement& x, double tolerance = 0.0) noexcept;

/// True iff every coefficient outside `span` is within `tolerance` of zero.
bool in_span(const AlgebraElement& x, const UnitSet& span, double tolerance = 0.0) noexcept;

bool all_finite(const AlgebraElement& x) noexcept;

/// Canonical text form: terms in canonical unit order, zero coefficients
/// omitted, real coefficients bare ("-2*i3"), complex ones parenthesized
/// ("(0+1I)*e1"); the zero element prints "0". Parseable by naqm::expr.
std::string to_string(const AlgebraElement& x);

/// Minimal decimal form of a real scalar: integers without a decimal
/// point, everything else in shortest round-trip form.
std::string format_real(double value);

/// Scalar in the element-coefficient syntax: "2", "-0.5", "(1+2I)".
std::string format_complex(Complex value);

// ---------------------------------------------------------------------------
// Table export
// ---------------------------------------------------------------------------

enum class TableFormat { Csv, Markdown };

/// Renders the full 16x16 signed-unit table. CSV: 17 lines (header row of
/// unit tokens, then one labeled row per unit), cells "+i3" / "-e7" / "+1".
/// Markdown: a pipe table with the same cell tokens.
std::string export_table(TableFormat format);

}  // namespace naqm::algebra
