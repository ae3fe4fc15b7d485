#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eulersums/report.hpp"

namespace eulersums {

/// Fully resolved settings: defaults, then the config file, then flags.
struct RunConfig {
    int digits = 40;
    long K = 10000;
    int tail_terms = 4;
    double tolerance = 1e-11;
    OutputFormat format = OutputFormat::table;
    /// Identity ids or '*'/'?' patterns; empty selects everything.
    std::vector<std::string> ids;
    /// Extra catalog files merged after the built-in one.
    std::vector<std::filesystem::path> catalogs;
    /// Skip the built-in catalog.
    bool no_builtin = false;
    unsigned threads = 0;

    EvalOptions eval_options() const;
    VerifyOptions verify_options() const;
    /// Single line "digits=40 K=10000 ...", stable key order.
    std::string echo() const;
};

/// Parses `key = value` lines ('#' comments). Throws Error with the line number on a malformed
/// line, unknown key or bad value. Keys: digits, K, tail_terms, tolerance, format, id, catalog,
/// no_builtin, threads. `id` and `catalog` take comma-separated lists.
std::map<std::string, std::string> parse_config_text(const std::string& text, const std::string& origin);
void apply_config(RunConfig& config, const std::map<std::string, std::string>& values);

/// Runs one command line (args exclude the program name). Returns the exit code:
/// 0 success, 1 a must_pass identity (or lemma check) failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eulersums
