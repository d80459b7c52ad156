#pragma once

#include <string>
#include <vector>

#include "reesdeg/rational.hpp"

namespace reesdeg {

/// One report per executed command.
struct Report {
    std::string command;   // command echo
    std::string text;      // stable text rendering
    std::string json;      // one JSON object (includes elapsed_ms)
    bool ok = true;
};

struct ScriptResult {
    std::vector<Report> reports;
    bool ok = true;
};

/// Execute a script: `;`-separated statements over one ring declaration,
/// named bindings and commands (see the CLI documentation).
ScriptResult run_script(const std::string& text);

/// Stable text rendering of a whole run (one line per command).
std::string render_text(const ScriptResult& r);
/// JSON-lines rendering (one object per command).
std::string render_json(const ScriptResult& r);

}  // namespace reesdeg
