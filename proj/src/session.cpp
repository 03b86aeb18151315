#include "opal/session.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>

namespace opal {

using nlohmann::json;

namespace {

std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(trim(text.substr(start)));
            return parts;
        }
        parts.push_back(trim(text.substr(start, pos - start)));
        start = pos + 1;
    }
}

std::vector<std::string> words(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string strip_comment(const std::string& line) {
    std::size_t pos = line.find('#');
    return trim(pos == std::string::npos ? line : line.substr(0, pos));
}

int exit_code_of(const Error& e) { return static_cast<int>(e.error_class()); }

}  // namespace

Session Session::load(std::string_view text, const Options& options) {
    Session session;
    session.options_ = options;

    enum class Part { None, Field, Defs, Run };
    Part part = Part::None;
    std::vector<std::string> field_lines;

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = strip_comment(raw);
        if (line.empty()) continue;
        if (line == "[field]") {
            part = Part::Field;
            continue;
        }
        if (line == "[defs]") {
            part = Part::Defs;
            continue;
        }
        if (line == "[run]") {
            part = Part::Run;
            continue;
        }
        switch (part) {
            case Part::Field: field_lines.push_back(line); break;
            case Part::Defs: session.defs_lines_.push_back(line); break;
            case Part::Run: session.run_lines_.push_back(line); break;
            case Part::None:
                throw ParseError("line outside of any [field]/[defs]/[run] section", 0);
        }
    }

    // First pass over the field block: collect names.
    FieldSpecBuilder builder;
    std::optional<std::string> order_text;
    std::vector<std::pair<std::string, std::string>> generator_tables;
    for (const auto& line : field_lines) {
        auto ws = words(line);
        if (ws.empty()) continue;
        const std::string& keyword = ws[0];
        if (keyword == "derivations") {
            for (std::size_t i = 1; i < ws.size(); ++i) builder.derivation(ws[i]);
        } else if (keyword == "variables") {
            for (std::size_t i = 1; i < ws.size(); ++i) {
                std::size_t colon = ws[i].find(':');
                if (colon == std::string::npos)
                    builder.variable(ws[i]);
                else
                    builder.variable(ws[i].substr(0, colon), ws[i].substr(colon + 1));
            }
        } else if (keyword == "constants" || keyword == "constant") {
            for (std::size_t i = 1; i < ws.size(); ++i) builder.constant(ws[i]);
        } else if (keyword == "generator") {
            std::size_t colon = line.find(':');
            if (colon == std::string::npos)
                throw ParseError("generator line needs 'generator NAME : d = expr, ...'", 0);
            auto head = words(line.substr(0, colon));
            if (head.size() != 2) throw ParseError("generator line needs exactly one name", 0);
            builder.generator(head[1]);
            generator_tables.emplace_back(head[1], trim(line.substr(colon + 1)));
        } else if (keyword == "order") {
            order_text = trim(line.substr(5));
        } else {
            throw ParseError("unknown field keyword '" + keyword + "'", 0);
        }
    }

    // Second pass: table entries may mention any declared symbol.
    auto symbols = builder.symbol_names();
    for (const auto& [gen, table] : generator_tables) {
        for (const auto& entry : split(table, ',')) {
            std::size_t eq = entry.find('=');
            if (eq == std::string::npos)
                throw ParseError("table entry needs 'derivation = expression'", 0);
            std::string deriv = trim(entry.substr(0, eq));
            auto [num, den] = parse_coefficient(entry.substr(eq + 1), symbols);
            builder.table_entry(gen, deriv, std::move(num), std::move(den));
        }
    }
    session.spec_ = builder.build();

    if (options.order_override) order_text = *options.order_override;
    if (order_text) {
        session.order_ = parse_order(*order_text, session.spec_);
    } else {
        std::vector<std::size_t> precedence(session.spec_->num_derivations());
        for (std::size_t i = 0; i < precedence.size(); ++i) precedence[i] = i;
        session.order_ = TermOrder::graded_lex(std::move(precedence));
    }
    return session;
}

OreOperator Session::parse_expr(const std::string& text) const {
    return parse_operator(text, spec_, [this](const std::string& name, OreOperator& out) {
        auto it = operators_.find(name);
        if (it == operators_.end()) return false;
        out = it->second;
        return true;
    });
}

const OreOperator& Session::op_ref(const std::string& name) const {
    auto it = operators_.find(name);
    if (it == operators_.end()) throw UnknownName("operator", name);
    return it->second;
}

LeftIdeal Session::ideal_ref(const std::string& name) const {
    auto it = ideals_.find(name);
    if (it == ideals_.end()) throw UnknownName("ideal", name);
    return LeftIdeal::of(it->second);
}

const Chain& Session::chain_ref(const std::string& name) const {
    auto it = chains_.find(name);
    if (it == chains_.end()) throw UnknownName("chain", name);
    return it->second;
}

json Session::op_json(const OreOperator& op) const { return op.to_string(order_); }

json Session::basis_json(const GroebnerBasis& basis) const {
    json elements = json::array();
    for (const auto& g : basis.elements()) elements.push_back(g.to_string(basis.order()));
    json staircase = json::array();
    for (const auto& e : staircase_of(basis).exponents) staircase.push_back(e);
    return json{{"basis", elements},
                {"order", basis.order().to_string(spec_->derivations())},
                {"staircase", staircase},
                {"unit_ideal", basis.is_unit_ideal()},
                {"zero_ideal", basis.is_zero_ideal()}};
}

json Session::gauge_json(const Gauge& gauge) const {
    return json{{"tau", gauge.tau}, {"a_tau", gauge.a_tau}, {"text", gauge.to_string()}};
}

json Session::omega_json(const NumericalPolynomial& omega) const {
    return json{{"binomial", omega.to_binomial_string()},
                {"monomial", omega.to_monomial_string()},
                {"valid_from", omega.valid_from}};
}

json Session::chain_json(const Chain& chain) const {
    json ideals = json::array();
    for (const auto& basis : chain.ideals()) ideals.push_back(basis_json(basis));
    return json{{"ideals", ideals}};
}

json Session::run_command(const std::string& line) {
    json report;
    report["command"] = line;
    report["engine"] = json{{"name", kEngineName}, {"version", kEngineVersion}};
    auto start = std::chrono::steady_clock::now();
    try {
        report["result"] = dispatch(line);
        report["status"] = "ok";
    } catch (const Error& e) {
        report["status"] = "error";
        report["error"] = json{{"message", e.what()}, {"exit_code", exit_code_of(e)}};
        exit_code_ = std::max(exit_code_, exit_code_of(e));
    }
    if (options_.with_timing) {
        auto elapsed = std::chrono::steady_clock::now() - start;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
    }
    return report;
}

json Session::run_all() {
    json reports = json::array();
    for (const auto& line : defs_lines_) reports.push_back(run_command(line));
    for (const auto& line : run_lines_) reports.push_back(run_command(line));
    return reports;
}

json Session::run_eval(const std::string& command) {
    json reports = json::array();
    for (const auto& line : defs_lines_) reports.push_back(run_command(line));
    reports.push_back(run_command(command));
    return reports;
}

json Session::dispatch(const std::string& raw) {
    std::string line = strip_comment(raw);
    auto ws = words(line);
    if (ws.empty()) throw ParseError("empty command", 0);
    std::string cmd = ws[0];
    std::size_t arg_at = 1;
    if (cmd == "def") {
        if (ws.size() < 2) throw ParseError("def needs 'op' or 'ideal'", 0);
        cmd = ws[1];
        arg_at = 2;
    }

    // name = ... definitions
    if (cmd == "op" || cmd == "ideal" || cmd == "chain") {
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("definition needs '='", 0);
        auto head = words(line.substr(0, eq));
        if (head.size() != arg_at + 1) throw ParseError("definition needs exactly one name", 0);
        const std::string name = head[arg_at];
        std::string rhs = trim(line.substr(eq + 1));

        if (cmd == "op") {
            OreOperator value = parse_expr(rhs);
            operators_.insert_or_assign(name, value);
            return json{{"bound", name}, {"kind", "operator"}, {"operator", op_json(value)}};
        }
        if (cmd == "ideal") {
            std::vector<OreOperator> gens;
            json texts = json::array();
            for (const auto& part : split(rhs, ',')) {
                gens.push_back(parse_expr(part));
                texts.push_back(op_json(gens.back()));
            }
            if (gens.empty()) throw ParseError("ideal needs at least one generator", 0);
            ideals_.insert_or_assign(name, std::move(gens));
            return json{{"bound", name}, {"kind", "ideal"}, {"generators", texts}};
        }
        // chain NAME = factors e1, e2 | chain NAME = ideals I1, I2
        auto mode_end = rhs.find(' ');
        std::string mode = rhs.substr(0, mode_end);
        std::string rest = mode_end == std::string::npos ? "" : trim(rhs.substr(mode_end));
        if (mode == "factors") {
            std::vector<OreOperator> factors;
            for (const auto& part : split(rest, ',')) factors.push_back(parse_expr(part));
            Chain chain = chain_from_right_factorization(factors, order_, buchberger_options());
            json result = chain_json(chain);
            chains_.insert_or_assign(name, std::move(chain));
            result["bound"] = name;
            result["kind"] = "chain";
            return result;
        }
        if (mode == "ideals") {
            std::vector<GroebnerBasis> ideals;
            for (const auto& part : split(rest, ','))
                ideals.push_back(buchberger(ideal_ref(part), order_, buchberger_options()));
            Chain chain = Chain::from_ideals(std::move(ideals), order_, buchberger_options());
            json result = chain_json(chain);
            chains_.insert_or_assign(name, std::move(chain));
            result["bound"] = name;
            result["kind"] = "chain";
            return result;
        }
        throw ParseError("chain needs 'factors' or 'ideals'", 0);
    }

    std::vector<std::string> args(ws.begin() + 1, ws.end());
    std::vector<std::string> bind_names;
    if (auto as = std::find(args.begin(), args.end(), "as"); as != args.end()) {
        bind_names.assign(as + 1, args.end());
        args.erase(as, args.end());
        if (bind_names.empty()) throw ParseError("'as' needs a name", 0);
    }
    auto want_args = [&](std::size_t n, const char* usage) {
        if (args.size() != n) throw ParseError(std::string("usage: ") + usage, 0);
    };
    auto bind_ideal = [&](const GroebnerBasis& basis, json& result) {
        if (bind_names.empty()) return;
        ideals_.insert_or_assign(bind_names[0], basis.is_zero_ideal()
                                                    ? std::vector<OreOperator>{OreOperator::zero(spec_)}
                                                    : basis.elements());
        result["bound"] = bind_names[0];
    };

    if (cmd == "mul") {
        want_args(2, "mul A B [as NAME]");
        OreOperator product = op_ref(args[0]) * op_ref(args[1]);
        json result{{"product", op_json(product)}};
        if (!bind_names.empty()) {
            operators_.insert_or_assign(bind_names[0], product);
            result["bound"] = bind_names[0];
        }
        return result;
    }
    if (cmd == "reduce") {
        if (args.size() < 2) throw ParseError("usage: reduce F G1 [G2 ...]", 0);
        std::vector<OreOperator> divisors;
        for (std::size_t i = 1; i < args.size(); ++i) divisors.push_back(op_ref(args[i]));
        auto res = right_reduce(op_ref(args[0]), divisors, order_);
        json cofactors = json::array();
        for (const auto& c : res.cofactors) cofactors.push_back(op_json(c));
        return json{{"remainder", op_json(res.remainder)}, {"cofactors", cofactors}};
    }
    if (cmd == "gb") {
        want_args(1, "gb I [as NAME]");
        GroebnerBasis basis = buchberger(ideal_ref(args[0]), order_, buchberger_options());
        json result = basis_json(basis);
        bind_ideal(basis, result);
        return result;
    }
    if (cmd == "member") {
        want_args(2, "member F I");
        GroebnerBasis basis = buchberger(ideal_ref(args[1]), order_, buchberger_options());
        return json{{"member", member(op_ref(args[0]), basis)}};
    }
    if (cmd == "sum" || cmd == "intersect") {
        want_args(2, "sum|intersect I J [as NAME]");
        LeftIdeal lhs = ideal_ref(args[0]);
        LeftIdeal rhs = ideal_ref(args[1]);
        GroebnerBasis basis = cmd == "sum"
                                  ? ideal_sum(lhs, rhs, order_, buchberger_options())
                                  : ideal_intersect(lhs, rhs, order_, buchberger_options());
        json result = basis_json(basis);
        bind_ideal(basis, result);
        return result;
    }
    if (cmd == "principal") {
        want_args(1, "principal I");
        GroebnerBasis basis = buchberger(ideal_ref(args[0]), order_, buchberger_options());
        auto gen = principal_generator(basis);
        json result{{"principal", gen.has_value()}};
        if (gen) result["generator"] = op_json(*gen);
        return result;
    }
    if (cmd == "rightfactor") {
        want_args(2, "rightfactor I R");
        return json{
            {"right_factor", check_right_factor(ideal_ref(args[0]), op_ref(args[1]), order_)}};
    }
    if (cmd == "gauge") {
        want_args(1, "gauge I");
        GroebnerBasis basis = buchberger(ideal_ref(args[0]), order_, buchberger_options());
        NumericalPolynomial omega = dimension_polynomial(staircase_of(basis));
        return json{{"gauge", gauge_json(gauge_of(omega))}, {"omega", omega_json(omega)}};
    }
    if (cmd == "dimpoly") {
        want_args(1, "dimpoly I");
        GroebnerBasis basis = buchberger(ideal_ref(args[0]), order_, buchberger_options());
        Staircase staircase = staircase_of(basis);
        NumericalPolynomial omega = dimension_polynomial(staircase);
        json stairs = json::array();
        for (const auto& e : staircase.exponents) stairs.push_back(e);
        return json{{"staircase", stairs},
                    {"omega", omega_json(omega)},
                    {"gauge", gauge_json(gauge_of(omega))}};
    }
    if (cmd == "analyze") {
        want_args(1, "analyze C");
        SeriesReport report = analyze(chain_ref(args[0]), buchberger_options());
        json steps = json::array();
        for (const auto& g : report.step_gauges) steps.push_back(gauge_json(g));
        json quotients = json::array();
        for (const auto& q : report.quotient_gauges) {
            if (q.tau_drop)
                quotients.push_back(json{{"type_drop", true}, {"text", q.to_string()}});
            else
                quotients.push_back(gauge_json(q.gauge));
        }
        return json{{"chain_tau", report.chain_tau},
                    {"step_gauges", steps},
                    {"quotient_gauges", quotients},
                    {"tau_uniform", report.tau_uniform},
                    {"strictly_decreasing", report.strictly_decreasing},
                    {"annotations", report.annotations}};
    }
    if (cmd == "refine") {
        want_args(2, "refine C D [as N1 N2]");
        RefineResult res = refine(chain_ref(args[0]), chain_ref(args[1]), buchberger_options());
        json result{{"left", chain_json(res.left)},
                    {"right", chain_json(res.right)},
                    {"left_pairing", res.left_pairing},
                    {"right_pairing", res.right_pairing},
                    {"absorbed", res.absorbed}};
        if (bind_names.size() >= 1) {
            chains_.insert_or_assign(bind_names[0], res.left);
            result["bound_left"] = bind_names[0];
        }
        if (bind_names.size() >= 2) {
            chains_.insert_or_assign(bind_names[1], res.right);
            result["bound_right"] = bind_names[1];
        }
        return result;
    }
    if (cmd == "compare") {
        want_args(2, "compare C D");
        CompareResult res =
            compare_quotient_gauges(chain_ref(args[0]), chain_ref(args[1]), buchberger_options());
        auto multiset = [&](const std::vector<Gauge>& gs) {
            json arr = json::array();
            for (const auto& g : gs) arr.push_back(gauge_json(g));
            return arr;
        };
        return json{{"verdict", res.verdict == Verdict::Consistent ? "CONSISTENT" : "INCONSISTENT"},
                    {"note", "a necessary condition for the normal-series uniqueness statement; "
                             "no isogeny is constructed"},
                    {"left_multiset", multiset(res.left_multiset)},
                    {"right_multiset", multiset(res.right_multiset)}};
    }
    if (cmd == "verify-factor") {
        if (args.size() < 2) throw ParseError("usage: verify-factor L F1 [F2 ...]", 0);
        std::vector<OreOperator> factors;
        for (std::size_t i = 1; i < args.size(); ++i) factors.push_back(op_ref(args[i]));
        return json{{"equal", verify_factorization(op_ref(args[0]), factors)}};
    }
    if (cmd == "intertwine") {
        want_args(3, "intertwine A P B");
        return json{{"intertwines",
                     verify_intertwine(op_ref(args[0]), op_ref(args[1]), op_ref(args[2]), order_)}};
    }
    throw ParseError("unknown command '" + cmd + "'", 0);
}

std::string Session::render_text(const json& reports) {
    std::ostringstream out;
    for (const auto& report : reports) {
        out << "> " << report["command"].get<std::string>() << "\n";
        if (report["status"] == "error") {
            out << "  error: " << report["error"]["message"].get<std::string>() << "\n";
            continue;
        }
        const json& result = report["result"];
        if (result.is_string()) {
            out << "  " << result.get<std::string>() << "\n";
            continue;
        }
        for (auto it = result.begin(); it != result.end(); ++it)
            out << "  " << it.key() << ": " << it.value().dump() << "\n";
    }
    return out.str();
}

}  // namespace opal
