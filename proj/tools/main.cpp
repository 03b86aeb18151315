#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "opal/session.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact computation with linear partial differential operators"};

    std::string session_path;
    std::string order;
    std::string eval_command;
    std::size_t pair_budget = 100000;
    bool as_json = false;

    app.add_option("--session", session_path, "session file to run")->required();
    app.add_option("--order", order, "default term order, e.g. \"dx>dy\"");
    app.add_option("--pair-budget", pair_budget, "S-pair budget for basis computations");
    app.add_option("--eval", eval_command, "run this single command instead of the [run] section");
    app.add_flag("--json", as_json, "emit the report array as JSON");

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(session_path);
    if (!in) {
        std::cerr << "cannot open session file: " << session_path << "\n";
        return 1;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    try {
        opal::Session::Options options;
        options.pair_budget = pair_budget;
        if (!order.empty()) options.order_override = order;
        opal::Session session = opal::Session::load(buffer.str(), options);
        nlohmann::json reports =
            eval_command.empty() ? session.run_all() : session.run_eval(eval_command);
        if (as_json)
            std::cout << reports.dump(2) << "\n";
        else
            std::cout << opal::Session::render_text(reports);
        return session.exit_code();
    } catch (const opal::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.error_class());
    }
}
