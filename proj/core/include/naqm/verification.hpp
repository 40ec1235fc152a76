#pragma once

// Mechanical checking of the algebra's identity catalog: table fidelity
// against an independently transcribed fixture, unit squares, subalgebra
// closure, the ternary-bracket identities of both qubit models, the
// product-rule (Leibniz) consistency checks and their expected failure
// outside the associative spans, the scaled-operator identities, and
// commutativity/alternativity scans.

#include "naqm/algebra.hpp"
#include "naqm/brackets.hpp"
#include "naqm/report.hpp"

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace naqm::verification {

enum class SuiteId {
    TableFidelity,
    UnitSquares,
    SubalgebraClosure,
    QuaternionBracket,
    BiquaternionBracket,
    Nontriviality,
    LeibnizQuaternion,
    LeibnizBiquaternion,
    LeibnizFailure,
    ScaledBrackets,
    CommutativityA,
    Alternativity,
};

inline constexpr std::array<SuiteId, 12> kAllSuites = {
    SuiteId::TableFidelity,     SuiteId::UnitSquares,       SuiteId::SubalgebraClosure,
    SuiteId::QuaternionBracket, SuiteId::BiquaternionBracket, SuiteId::Nontriviality,
    SuiteId::LeibnizQuaternion, SuiteId::LeibnizBiquaternion, SuiteId::LeibnizFailure,
    SuiteId::ScaledBrackets,    SuiteId::CommutativityA,    SuiteId::Alternativity,
};

/// Canonical kebab-case name, e.g. "quaternion-bracket".
std::string_view suite_name(SuiteId id) noexcept;

/// Inverse of suite_name.
std::optional<SuiteId> suite_from_name(std::string_view name) noexcept;

/// Runs one suite. Only ScaledBrackets reads `constants`. Failures are
/// data, not errors; case enumeration order is deterministic.
VerificationReport run_suite(SuiteId id,
                             const brackets::PhysicalConstants& constants = {});

/// Runs every suite in kAllSuites order.
std::vector<VerificationReport> run_all(const brackets::PhysicalConstants& constants = {});

/// Alternativity scan of one subalgebra: (xx)y = x(xy) and (yx)x = y(xx)
/// over all ordered basis pairs of the span. For Full the outcome is an
/// empirical measurement of the whole table.
VerificationReport alternativity_report(algebra::SubalgebraId id);

/// The independently transcribed copy of the unit product table, in the
/// exact CSV layout produced by algebra::export_table(TableFormat::Csv).
/// Used by the TableFidelity suite and as the byte-exact export fixture.
std::string_view reference_table_csv() noexcept;

}  // namespace naqm::verification
