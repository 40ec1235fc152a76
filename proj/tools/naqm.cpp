// Command-line front end: identity-suite verification, qubit-model
// simulation to CSV, expression evaluation, and table export.
//
// Exit codes: 0 success, 1 verification failure or runtime blow-up,
// 2 usage error, 3 expression error.

#include "naqm/dynamics.hpp"
#include "naqm/expr.hpp"
#include "naqm/matrix_rep.hpp"
#include "naqm/verification.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace naqm;

constexpr int kExitSuccess = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitRuntimeFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExpression = 3;

dynamics::Vec3 to_vec3(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

std::optional<std::ofstream> open_output(const std::string& path) {
    std::ofstream file(path);
    if (!file) {
        std::cerr << "error: cannot open output path '" << path << "'\n";
        return std::nullopt;
    }
    return file;
}

struct VerifyOptions {
    std::string suite = "all";
    double hbar_tilde = 1.0;
    std::string format = "text";
};

int run_verify(const VerifyOptions& options) {
    const brackets::PhysicalConstants constants{options.hbar_tilde, 1.0};
    std::vector<verification::VerificationReport> reports;
    if (options.suite == "all") {
        reports = verification::run_all(constants);
    } else if (const auto id = verification::suite_from_name(options.suite)) {
        reports.push_back(verification::run_suite(*id, constants));
    } else if (options.suite == "matrix-rep") {
        reports.push_back(matrix_rep::homomorphism_check());
    } else if (options.suite == "pauli-relations") {
        reports.push_back(dynamics::pauli_relations_check());
    } else {
        std::cerr << "error: unknown suite '" << options.suite
                  << "' (try 'all' or one of the names in --help)\n";
        return kExitUsage;
    }

    if (options.format == "json") {
        std::cout << verification::to_json_string(reports) << "\n";
    } else {
        for (const auto& report : reports) std::cout << verification::to_text(report);
    }
    const bool all_passed =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    if (options.format == "text")
        std::cout << (all_passed ? "all requested suites passed\n" : "some suites FAILED\n");
    return all_passed ? kExitSuccess : kExitVerificationFailure;
}

struct SimulateOptions {
    std::string model = "na-qubit";
    std::vector<double> omega{0.0, 0.0, 1.0};
    std::vector<double> omega1{0.0, 0.0, 1.0};
    std::vector<double> omega2{0.0, 0.0, 1.0};
    std::vector<double> s0{1.0, 0.0, 0.0};
    std::vector<double> l0{0.0, 0.0, 0.0};
    int n1 = 1;
    int n2 = 1;
    double t_max = 6.283185307179586;
    double dt = 1e-3;
    std::string output;
};

struct DriftLine {
    const char* label;
    double value;
};

template <typename Trajectory>
int emit_trajectory(const Trajectory& trajectory, const std::string& output,
                    std::initializer_list<DriftLine> drifts) {
    std::ostream* sink = &std::cout;
    std::optional<std::ofstream> file;
    if (!output.empty()) {
        file = open_output(output);
        if (!file) return kExitRuntimeFailure;
        sink = &*file;
    }
    dynamics::write_csv(*sink, trajectory);
    std::ostream& info = output.empty() ? std::cerr : std::cout;
    info << "rows: " << trajectory.states.size() << "\n";
    for (const DriftLine& drift : drifts) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.3g", drift.value);
        info << drift.label << " drift: " << buf << "\n";
    }
    return kExitSuccess;
}

int run_simulate(const SimulateOptions& options) {
    if (options.t_max < options.dt) {
        std::cerr << "error: --t-max must be at least --dt\n";
        return kExitUsage;
    }
    dynamics::FieldConfig field;
    field.omega = to_vec3(options.omega);
    field.omega1 = to_vec3(options.omega1);
    field.omega2 = to_vec3(options.omega2);
    field.n1 = options.n1;
    field.n2 = options.n2;

    try {
        if (options.model == "extended") {
            const dynamics::ExtendedState initial{to_vec3(options.s0), to_vec3(options.l0)};
            const auto trajectory = dynamics::integrate(initial, field, options.t_max, options.dt);
            if (field.n1 * field.n2 < 0) {
                // Opposite signs conserve the sum quadratic; report both.
                return emit_trajectory(
                    trajectory, options.output,
                    {{"|s|^2-|l|^2", dynamics::extended_invariant_drift(trajectory)},
                     {"|s|^2+|l|^2", dynamics::extended_sum_invariant_drift(trajectory)}});
            }
            return emit_trajectory(
                trajectory, options.output,
                {{"|s|^2-|l|^2", dynamics::extended_invariant_drift(trajectory)}});
        }
        const auto model = options.model == "standard" ? dynamics::SpinModel::Standard
                                                       : dynamics::SpinModel::NonAssociative;
        const dynamics::SpinState initial{to_vec3(options.s0)};
        const auto trajectory =
            dynamics::integrate(model, initial, field, options.t_max, options.dt);
        return emit_trajectory(trajectory, options.output,
                               {{"|s|^2", dynamics::spin_norm_drift(trajectory)}});
    } catch (const dynamics::BlowUpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeFailure;
    }
}

int run_eval(const std::string& expression) {
    try {
        const expr::ParseResult result = expr::parse(expression);
        const algebra::AlgebraElement value = expr::evaluate(*result.expr);
        for (const std::string& note : result.notes) std::cerr << note << "\n";
        std::cout << expr::format_element(value) << "\n";
        return kExitSuccess;
    } catch (const expr::LexError& e) {
        std::cerr << "error: " << e.what() << "\n  " << expression << "\n  "
                  << std::string(e.position(), ' ') << "^\n";
    } catch (const expr::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n  " << expression << "\n  "
                  << std::string(e.position(), ' ') << "^\n";
    } catch (const expr::EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitExpression;
}

int run_table(const std::string& format, const std::string& output) {
    const std::string text = algebra::export_table(
        format == "markdown" ? algebra::TableFormat::Markdown : algebra::TableFormat::Csv);
    if (output.empty()) {
        std::cout << text;
        return kExitSuccess;
    }
    auto file = open_output(output);
    if (!file) return kExitRuntimeFailure;
    *file << text;
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sedenion algebra and non-associative qubit dynamics toolkit"};
    app.require_subcommand(1);

    VerifyOptions verify_options;
    CLI::App* verify = app.add_subcommand("verify", "Run identity suites and report pass/fail");
    verify->add_option("--suite", verify_options.suite,
                       "Suite name, 'all', or the extra reports 'matrix-rep'/'pauli-relations'")
        ->capture_default_str();
    verify->add_option("--hbar-tilde", verify_options.hbar_tilde,
                       "Planck-like constant used by the scaled-brackets suite")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--format", verify_options.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    SimulateOptions simulate_options;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Integrate a qubit model and write a trajectory CSV");
    simulate->add_option("--model", simulate_options.model, "Dynamics model")
        ->check(CLI::IsMember({"standard", "na-qubit", "extended"}))
        ->capture_default_str();
    simulate->add_option("--omega", simulate_options.omega, "Field omega (single-field models)")
        ->delimiter(',')
        ->expected(3);
    simulate->add_option("--omega1", simulate_options.omega1, "First field (extended model)")
        ->delimiter(',')
        ->expected(3);
    simulate->add_option("--omega2", simulate_options.omega2, "Second field (extended model)")
        ->delimiter(',')
        ->expected(3);
    simulate->add_option("--s0", simulate_options.s0, "Initial spin components")
        ->delimiter(',')
        ->expected(3);
    simulate->add_option("--l0", simulate_options.l0, "Initial l components (extended model)")
        ->delimiter(',')
        ->expected(3);
    simulate->add_option("--n1", simulate_options.n1, "First interaction sign")
        ->check(CLI::IsMember({-1, 1}));
    simulate->add_option("--n2", simulate_options.n2, "Second interaction sign")
        ->check(CLI::IsMember({-1, 1}));
    simulate->add_option("--t-max", simulate_options.t_max, "End time")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--dt", simulate_options.dt, "Fixed step size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--output", simulate_options.output,
                         "CSV path (stdout when omitted; summary then goes to stderr)");

    std::string expression;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate an algebra expression");
    eval->add_option("expression", expression,
                     "Expression over 1, i0..i7, e1..e7, I, + - *, [a,b,c], comm, assoc")
        ->required();
    eval->footer(
        "Grammar (precedence low to high):\n"
        "  expr        := additive\n"
        "  additive    := multiplicative (('+' | '-') multiplicative)*\n"
        "  multiplicative := unary ('*' unary)*     (explicit '*', left-assoc)\n"
        "  unary       := '-' unary | primary\n"
        "  primary     := NUMBER ['I'] | 'I' | BASIS | '(' expr ')'\n"
        "               | '[' expr ',' expr ',' expr ']'\n"
        "               | 'comm' '(' expr ',' expr ')'\n"
        "               | 'assoc' '(' expr ',' expr ',' expr ')'\n"
        "BASIS is one of i0..i7, e1..e7; a bare 1 is the scalar one. Chains of\n"
        "'*' group left to right and print a reminder note, since grouping\n"
        "changes values in a non-associative algebra.");

    std::string table_format = "csv";
    std::string table_output;
    CLI::App* table = app.add_subcommand("table", "Print the 16x16 unit product table");
    table->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"csv", "markdown"}))
        ->capture_default_str();
    table->add_option("--output", table_output, "Destination path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (verify->parsed()) return run_verify(verify_options);
    if (simulate->parsed()) return run_simulate(simulate_options);
    if (eval->parsed()) return run_eval(expression);
    if (table->parsed()) return run_table(table_format, table_output);
    return kExitUsage;
}
