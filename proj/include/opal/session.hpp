#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "opal/parser.hpp"
#include "opal/series.hpp"

namespace opal {

inline constexpr const char* kEngineName = "opal";
inline constexpr const char* kEngineVersion = "0.1.0";

// A loaded session: the coefficient field, named bindings, the default term
// order, and the command lines of the [run] section. Sessions are loaded
// from the line-oriented session file format (see docs/format.md) and run
// command by command; every command yields one JSON report.
class Session {
public:
    struct Options {
        std::size_t pair_budget = 100000;
        std::optional<std::string> order_override;  // e.g. "dx>dy"
        bool with_timing = true;
    };

    // Parses the [field] section and queues [defs] and [run] lines.
    // Throws on malformed field blocks.
    static Session load(std::string_view text, const Options& options);
    static Session load(std::string_view text) { return load(text, Options{}); }

    const FieldSpecPtr& spec() const { return spec_; }
    const TermOrder& order() const { return order_; }
    const std::vector<std::string>& defs_lines() const { return defs_lines_; }
    const std::vector<std::string>& run_lines() const { return run_lines_; }

    // Executes one command line and returns its report. Errors are captured
    // in the report, not thrown.
    nlohmann::json run_command(const std::string& line);

    // Runs the queued [defs] and [run] sections (or the [defs] section plus
    // one evaluated command) and returns the array of reports.
    nlohmann::json run_all();
    nlohmann::json run_eval(const std::string& command);

    // Worst exit code produced so far: 0 ok, 1 input, 2 operation, 3 budget.
    int exit_code() const { return exit_code_; }

    // Human-readable rendering of a report array.
    static std::string render_text(const nlohmann::json& reports);

private:
    Session() = default;

    nlohmann::json dispatch(const std::string& line);
    OreOperator parse_expr(const std::string& text) const;
    const OreOperator& op_ref(const std::string& name) const;
    LeftIdeal ideal_ref(const std::string& name) const;
    const Chain& chain_ref(const std::string& name) const;
    BuchbergerOptions buchberger_options() const { return {options_.pair_budget}; }

    nlohmann::json op_json(const OreOperator& op) const;
    nlohmann::json basis_json(const GroebnerBasis& basis) const;
    nlohmann::json gauge_json(const Gauge& gauge) const;
    nlohmann::json omega_json(const NumericalPolynomial& omega) const;
    nlohmann::json chain_json(const Chain& chain) const;

    Options options_;
    FieldSpecPtr spec_;
    TermOrder order_ = TermOrder::graded_lex({});
    std::vector<std::string> defs_lines_;
    std::vector<std::string> run_lines_;

    std::map<std::string, OreOperator> operators_;
    std::map<std::string, std::vector<OreOperator>> ideals_;
    std::map<std::string, Chain> chains_;
    int exit_code_ = 0;
};

}  // namespace opal
