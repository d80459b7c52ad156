#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "reesdeg/script.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "reesdeg: exact degrees of graded rings and Rees algebra equations"};
    std::string input = "-";
    std::string exec;
    bool json = false;
    app.add_option("script", input, "script file ('-' reads standard input)");
    app.add_option("-e,--exec", exec, "run an inline script instead of a file");
    app.add_flag("--json", json, "emit one JSON object per command");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (!exec.empty()) {
        text = exec;
    } else if (input == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        text = os.str();
    } else {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "cannot open " << input << "\n";
            return 2;
        }
        std::ostringstream os;
        os << in.rdbuf();
        text = os.str();
    }

    reesdeg::ScriptResult result = reesdeg::run_script(text);
    std::cout << (json ? reesdeg::render_json(result)
                       : reesdeg::render_text(result));
    return result.ok ? 0 : 1;
}
