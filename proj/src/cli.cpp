#include "eulersums/cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulersums/catalog.hpp"
#include "eulersums/error.hpp"
#include "eulersums/fit.hpp"
#include "eulersums/lemmas.hpp"
#include "eulersums/reduction.hpp"

namespace eulersums {

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        T value{};
        if constexpr (std::is_same_v<T, double>) {
            value = std::stod(text, &used);
        } else {
            value = static_cast<T>(std::stol(text, &used));
        }
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception&) {
        throw Error("invalid value '" + text + "' for " + key);
    }
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw Error("invalid value '" + text + "' for " + key);
}

const std::vector<std::string> kConfigKeys{"digits", "K",       "tail_terms", "tolerance", "format",
                                           "id",     "catalog", "no_builtin", "threads"};

Catalog load_catalogs(const RunConfig& config) {
    Catalog catalog;
    if (!config.no_builtin) {
        catalog = builtin_catalog();
    }
    for (const auto& path : config.catalogs) {
        catalog.merge(load_catalog_file(path));
    }
    return catalog;
}

Catalog select_identities(const Catalog& catalog, const std::vector<std::string>& ids) {
    if (ids.empty()) {
        return catalog;
    }
    for (const auto& id : ids) {
        if (id.find_first_of("*?") == std::string::npos && catalog.find(id) == nullptr) {
            throw Error("unknown identity id '" + id + "'");
        }
    }
    return catalog.select(ids);
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const bool quote = fields[i].find_first_of(",\"") != std::string::npos;
        std::string f = fields[i];
        if (quote) {
            std::string escaped;
            for (char c : f) {
                escaped += c == '"' ? std::string("\"\"") : std::string(1, c);
            }
            f = "\"" + escaped + "\"";
        }
        out += (i ? "," : "") + f;
    }
    return out + "\n";
}

/// Emits one record in the configured format. Keys and values are parallel.
void emit_record(std::ostream& out, OutputFormat format, const std::vector<std::string>& keys,
                 const std::vector<std::string>& values) {
    switch (format) {
    case OutputFormat::json: {
        nlohmann::ordered_json row;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            row[keys[i]] = values[i];
        }
        out << row.dump(2) << "\n";
        break;
    }
    case OutputFormat::csv:
        out << csv_row(keys) << csv_row(values);
        break;
    case OutputFormat::table: {
        std::size_t width = 0;
        for (const auto& k : keys) {
            width = std::max(width, k.size());
        }
        for (std::size_t i = 0; i < keys.size(); ++i) {
            out << keys[i] << std::string(width - keys[i].size(), ' ') << " = " << values[i] << "\n";
        }
        break;
    }
    }
}

void emit_rows(std::ostream& out, OutputFormat format, const std::vector<std::string>& keys,
               const std::vector<std::vector<std::string>>& rows) {
    switch (format) {
    case OutputFormat::json: {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            nlohmann::ordered_json row;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                row[keys[i]] = r[i];
            }
            arr.push_back(std::move(row));
        }
        out << arr.dump(2) << "\n";
        break;
    }
    case OutputFormat::csv:
        out << csv_row(keys);
        for (const auto& r : rows) {
            out << csv_row(r);
        }
        break;
    case OutputFormat::table: {
        std::vector<std::size_t> width(keys.size());
        for (std::size_t c = 0; c < keys.size(); ++c) {
            width[c] = keys[c].size();
            for (const auto& r : rows) {
                width[c] = std::max(width[c], r[c].size());
            }
        }
        auto line = [&](const std::vector<std::string>& r) {
            for (std::size_t c = 0; c < r.size(); ++c) {
                out << r[c];
                if (c + 1 < r.size()) {
                    out << std::string(width[c] - r[c].size() + 2, ' ');
                }
            }
            out << "\n";
        };
        line(keys);
        for (const auto& r : rows) {
            line(r);
        }
        break;
    }
    }
}

struct LemmaCheckSettings {
    long k_min = 1;
    long k_max = 20;
    int n_max = 3;
    int m_max = 4;
    double tolerance = 1e-9;
};

int lemma_check(const RunConfig& config, const LemmaCheckSettings& s, std::ostream& out) {
    if (s.k_min < 1 || s.k_max < s.k_min) {
        throw Error("lemma-check needs 1 <= k-min <= k-max");
    }
    if (s.n_max < 1 || s.m_max < 1) {
        throw Error("lemma-check needs n-max >= 1 and m-max >= 1");
    }
    const EvalOptions opts = config.eval_options();
    const auto constants = ConstantsTable::shared(opts.digits);
    const HighFloat tol(constants->working_precision(), format_tolerance(s.tolerance));

    const SignRuleReport rule_report = resolve_inner_sign_rule(opts, s.m_max, s.k_max, tol);
    const InnerSignRule rule = rule_report.chosen.value_or(InnerSignRule::alternating);

    std::vector<std::vector<std::string>> rows;
    bool ok = rule_report.chosen.has_value();
    auto add = [&](const std::string& lemma, const std::string& params, long k, const LemmaSides& sides) {
        const HighFloat r = sides.residual();
        const bool pass = r < tol;
        ok = ok && pass;
        rows.push_back({lemma, params, std::to_string(k), r.to_string(6), pass ? "pass" : "fail"});
    };
    for (long k = s.k_min; k <= s.k_max; ++k) {
        add("lemma1_f", "-", k, lemma1_f(k, opts));
        add("lemma1_aux", "-", k, lemma1_aux(k, opts));
        for (int n = 1; n <= s.n_max; ++n) {
            add("lemma2_g", "n=" + std::to_string(n), k, lemma2_g(n, k, opts));
        }
        for (int m = 1; m <= s.m_max; ++m) {
            const int n = (m + 1) / 2;
            const Parity parity = m % 2 == 1 ? Parity::odd : Parity::even;
            add("lemma3_f", "m=" + std::to_string(m), k, lemma3_f(n, parity, k, opts, rule));
        }
    }
    emit_rows(out, config.format, {"lemma", "params", "k", "residual", "verdict"}, rows);
    if (config.format == OutputFormat::table) {
        out << "inner sign rule: " << rule_report.summary();
    }
    return ok ? 0 : 1;
}

} // namespace

EvalOptions RunConfig::eval_options() const {
    EvalOptions o;
    o.digits = digits;
    o.K = K;
    o.tail_terms = tail_terms;
    o.validate();
    return o;
}

VerifyOptions RunConfig::verify_options() const {
    VerifyOptions o;
    o.eval = eval_options();
    o.tolerance = tolerance;
    o.threads = threads;
    return o;
}

std::string RunConfig::echo() const {
    std::string out = "digits=" + std::to_string(digits) + " K=" + std::to_string(K) +
                      " tail_terms=" + std::to_string(tail_terms) + " tolerance=" + format_tolerance(tolerance) +
                      " format=" + to_string(format) + " catalog=" + (no_builtin ? "" : "builtin");
    for (const auto& c : catalogs) {
        out += (out.back() == '=' ? "" : ",") + c.string();
    }
    out += " id=";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        out += (i ? "," : "") + ids[i];
    }
    if (ids.empty()) {
        out += "*";
    }
    return out;
}

std::map<std::string, std::string> parse_config_text(const std::string& text, const std::string& origin) {
    std::map<std::string, std::string> values;
    std::stringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        const std::string where = origin + ":" + std::to_string(line_no);
        if (eq == std::string::npos) {
            throw Error(where + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        if (std::find(kConfigKeys.begin(), kConfigKeys.end(), key) == kConfigKeys.end()) {
            throw Error(where + ": unknown key '" + key + "'");
        }
        values[key] = trim(line.substr(eq + 1));
    }
    return values;
}

void apply_config(RunConfig& config, const std::map<std::string, std::string>& values) {
    for (const auto& [key, value] : values) {
        if (key == "digits") {
            config.digits = parse_number<int>(key, value);
        } else if (key == "K") {
            config.K = parse_number<long>(key, value);
        } else if (key == "tail_terms") {
            config.tail_terms = parse_number<int>(key, value);
        } else if (key == "tolerance") {
            config.tolerance = parse_number<double>(key, value);
        } else if (key == "format") {
            config.format = parse_output_format(value);
        } else if (key == "id") {
            config.ids = split_list(value);
        } else if (key == "catalog") {
            config.catalogs.clear();
            for (const auto& c : split_list(value)) {
                config.catalogs.emplace_back(c);
            }
        } else if (key == "no_builtin") {
            config.no_builtin = parse_bool(key, value);
        } else if (key == "threads") {
            config.threads = parse_number<unsigned>(key, value);
        } else {
            throw Error("unknown key '" + key + "'");
        }
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Evaluate and verify odd-type Euler sums.", "eulersums"};
    app.require_subcommand(1);

    std::map<std::string, std::string> flags;
    std::string config_path;
    app.add_option("--config", config_path, "key = value settings file");
    auto flag = [&](const std::string& name, const std::string& key, const std::string& help) {
        app.add_option_function<std::string>(name, [&flags, key](const std::string& v) { flags[key] = v; }, help);
    };
    flag("--digits", "digits", "working precision in decimal digits (default 40)");
    flag("--K", "K", "last directly summed index (default 10000)");
    flag("--tail-terms", "tail_terms", "Euler-Maclaurin corrections (default 4)");
    flag("--tolerance", "tolerance", "absolute verification tolerance (default 1e-11)");
    flag("--format", "format", "table, json or csv");
    flag("--catalog", "catalog", "extra catalog files, comma separated");
    flag("--threads", "threads", "verification threads (default: all cores)");
    std::vector<std::string> id_flags;
    app.add_option("--id", id_flags, "identity ids or patterns (repeatable)");
    bool no_builtin = false;
    app.add_flag("--no-builtin", no_builtin, "skip the built-in catalog");

    auto* verify_cmd = app.add_subcommand("verify", "verify catalog identities");
    std::vector<std::string> verify_ids;
    verify_cmd->add_option("ids", verify_ids, "identity ids or patterns");
    verify_cmd->fallthrough();

    auto* eval_sum_cmd = app.add_subcommand("eval-sum", "evaluate a sum such as \"h1*h2/k^3\"");
    std::string sum_text;
    eval_sum_cmd->add_option("spec", sum_text)->required();
    eval_sum_cmd->fallthrough();

    auto* eval_expr_cmd = app.add_subcommand("eval-expr", "evaluate a zeta expression such as \"7/4*z3\"");
    std::string expr_text;
    eval_expr_cmd->add_option("expr", expr_text)->required();
    eval_expr_cmd->fallthrough();

    auto* reduce_cmd = app.add_subcommand("reduce", "apply a reduction rule");
    std::string rule;
    std::optional<int> m;
    bool substitute = false;
    reduce_cmd->add_option("rule", rule)->required();
    reduce_cmd->add_option("--m", m, "rule parameter");
    reduce_cmd->add_flag("--substitute", substitute, "replace base sums by catalog closed forms");
    reduce_cmd->fallthrough();

    auto* fit_cmd = app.add_subcommand("fit", "recover a rational zeta combination for a sum");
    std::string fit_text;
    FitOptions fit_opts;
    fit_cmd->add_option("spec", fit_text)->required();
    fit_cmd->add_option("--weight", fit_opts.weight, "weight of the basis")->required();
    fit_cmd->add_flag("--ln2", fit_opts.include_ln2, "add lower single zetas and ln2");
    fit_cmd->add_option("--max-den", fit_opts.max_den, "largest coefficient denominator");
    fit_cmd->fallthrough();

    auto* list_cmd = app.add_subcommand("list", "show catalog entries");
    list_cmd->fallthrough();

    auto* lemma_cmd = app.add_subcommand("lemma-check", "truncated-vs-closed residuals of the kernel lemmas");
    LemmaCheckSettings lemma_settings;
    lemma_cmd->add_option("--k-min", lemma_settings.k_min);
    lemma_cmd->add_option("--k-max", lemma_settings.k_max);
    lemma_cmd->add_option("--n-max", lemma_settings.n_max);
    lemma_cmd->add_option("--m-max", lemma_settings.m_max);
    lemma_cmd->add_option("--lemma-tolerance", lemma_settings.tolerance);
    lemma_cmd->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    RunConfig config;
    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) {
                throw Error("cannot open config file " + config_path);
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            apply_config(config, parse_config_text(buffer.str(), config_path));
        }
        apply_config(config, flags);
        if (!id_flags.empty()) {
            config.ids = id_flags;
        }
        if (!verify_ids.empty()) {
            config.ids.insert(config.ids.end(), verify_ids.begin(), verify_ids.end());
        }
        if (no_builtin) {
            config.no_builtin = true;
        }
        config.eval_options();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    (config.format == OutputFormat::table ? out : err) << "# " << config.echo() << "\n";

    try {
        if (verify_cmd->parsed()) {
            const Catalog selected = select_identities(load_catalogs(config), config.ids);
            const auto reports = verify_all(selected, config.verify_options());
            out << emit_report(reports, config.format);
            return summarize(reports).ok() ? 0 : 1;
        }
        if (eval_sum_cmd->parsed()) {
            const SumSpec spec = parse_sum_spec(sum_text);
            const EvalResult r = evaluate_sum(spec, config.eval_options());
            emit_record(out, config.format, {"spec", "value", "err_estimate", "digits", "K"},
                        {spec.to_string(), r.value.to_string(config.digits), r.err_estimate.to_string(3),
                         std::to_string(r.digits_used), std::to_string(r.K_used)});
            return 0;
        }
        if (eval_expr_cmd->parsed()) {
            const ZetaExpr e = parse_zeta_expr(expr_text);
            const auto constants = ConstantsTable::shared(config.digits);
            emit_record(out, config.format, {"expr", "canonical", "value", "digits"},
                        {e.to_string(), canonicalize(e).to_string(),
                         evaluate(e, *constants).to_string(config.digits), std::to_string(config.digits)});
            return 0;
        }
        if (reduce_cmd->parsed()) {
            const Reduction r = reduce(rule, m, config.eval_options(), config.tolerance);
            std::vector<std::string> keys{"rule", "target", "combination", "source"};
            std::vector<std::string> values{r.rule, r.target.to_string(), r.combination.to_string(),
                                            to_string(r.source)};
            if (r.check_residual) {
                keys.push_back("check_residual");
                values.push_back(r.check_residual->to_string(6));
            }
            if (substitute) {
                keys.push_back("closed_form");
                values.push_back(substitute_bases(r.combination, load_catalogs(config)).to_string());
            }
            if (config.format == OutputFormat::table) {
                out << r.to_string() << "\n";
                if (r.check_residual) {
                    out << "check residual " << r.check_residual->to_string(6) << "\n";
                }
                if (substitute) {
                    out << values.back() << "\n";
                }
            } else {
                emit_record(out, config.format, keys, values);
            }
            return 0;
        }
        if (fit_cmd->parsed()) {
            const SumSpec spec = parse_sum_spec(fit_text);
            fit_opts.digits = config.digits;
            const auto fitted = fit_closed_form(spec, fit_opts, config.eval_options());
            const std::string result = fitted ? fitted->to_string() : "no fit";
            if (config.format == OutputFormat::table) {
                out << result << "\n";
            } else {
                emit_record(out, config.format, {"spec", "weight", "ln2", "max_den", "fit"},
                            {spec.to_string(), std::to_string(fit_opts.weight), fit_opts.include_ln2 ? "true" : "false",
                             std::to_string(fit_opts.max_den), result});
            }
            return 0;
        }
        if (list_cmd->parsed()) {
            const Catalog selected = select_identities(load_catalogs(config), config.ids);
            std::vector<std::vector<std::string>> rows;
            for (const auto& e : selected.entries()) {
                rows.push_back({e.id, to_string(e.source), to_string(e.expected), e.lhs.to_string(), e.rhs.to_string()});
            }
            emit_rows(out, config.format, {"id", "source", "expected", "lhs", "rhs"}, rows);
            return 0;
        }
        if (lemma_cmd->parsed()) {
            return lemma_check(config, lemma_settings, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace eulersums
