#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cfkit/errors.hpp"
#include "cfkit/runner.hpp"
#include "cfkit/verify.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

using namespace cfkit;

struct RunConfig : RunSpec {
    std::uint64_t seed = 42;
    std::string format = "json";
    std::string suite = "all";  // verify
    long long trials = -1;      // verify
};

// Every subcommand carries the full flag set so that RunConfig alone
// determines the run.
void add_common_flags(CLI::App* cmd, RunConfig& cfg, std::vector<std::string>& raw_params) {
    cmd->add_option("--realization", cfg.realization, "Scalar field: rational|float|complex|series")
        ->check(CLI::IsMember({"rational", "float", "complex", "series"}));
    cmd->add_option("--precision-bits", cfg.precision_bits,
                    "Working precision for float/complex realizations");
    cmd->add_option("--series-degree", cfg.series_degree,
                    "Truncation degree for the series realization");
    cmd->add_option("--depth", cfg.depth, "Truncation depth N of the fraction");
    cmd->add_option("--phi-depth", cfg.phi_depth, "Extra by-depth layers in the phi suite");
    cmd->add_option("--eps", cfg.eps, "Tolerance for Lentz stopping and verify residuals");
    cmd->add_option("--seed", cfg.seed, "Seed for the randomized verify suites");
    cmd->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--preset", [&cfg](const std::vector<std::string>& v) {
            cfg.source.preset = v.back();
            return true;
        },
        "Coefficient preset: app1|app2|app3-paper|app3-canonical|constant|list");
    cmd->add_option("--a", [&cfg](const std::vector<std::string>& v) {
            cfg.source.a_rule = v.back();
            return true;
        },
        "Expression for a_m over m and parameters");
    cmd->add_option("--b", [&cfg](const std::vector<std::string>& v) {
            cfg.source.b_rule = v.back();
            return true;
        },
        "Expression for b_m over m and parameters");
    cmd->add_option("--coeff-file", [&cfg](const std::vector<std::string>& v) {
            cfg.source.coeff_file = v.back();
            return true;
        },
        "Explicit list file: one 'a_m b_m' pair per line, line = index m");
    cmd->add_option("--param", raw_params, "Parameter binding name=value (repeatable)");
    cmd->add_option("--q", [&cfg](const std::vector<std::string>& v) {
            cfg.source.params.emplace_back("q", v.back());
            return true;
        },
        "Shorthand for --param q=VALUE");
    cmd->add_option("--z", [&cfg](const std::vector<std::string>& v) {
            cfg.source.params.emplace_back("z", v.back());
            return true;
        },
        "Shorthand for --param z=VALUE");
    cmd->add_option("--c", [&cfg](const std::vector<std::string>& v) {
            cfg.source.params.emplace_back("c", v.back());
            return true;
        },
        "Shorthand for --param c=VALUE");
    cmd->add_option("--a0", [&cfg](const std::vector<std::string>& v) {
            cfg.source.a0 = v.back();
            return true;
        },
        "Override value for a_0");
    cmd->add_option("--b0", [&cfg](const std::vector<std::string>& v) {
            cfg.source.b0 = v.back();
            return true;
        },
        "Override value for b_0");
}

void fold_raw_params(RunConfig& cfg, const std::vector<std::string>& raw_params) {
    for (const auto& p : raw_params) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ConfigError("--param expects name=value, got '" + p + "'");
        }
        cfg.source.params.emplace_back(p.substr(0, eq), p.substr(eq + 1));
    }
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["realization"] = cfg.realization;
    if (cfg.realization == "float" || cfg.realization == "complex") {
        j["precision_bits"] = cfg.precision_bits;
    }
    if (cfg.realization == "series") {
        j["series_var"] = "z";
        j["series_degree"] = cfg.series_degree;
    }
    j["depth"] = cfg.depth;
    ordered_json src;
    if (cfg.source.preset) src["preset"] = *cfg.source.preset;
    if (cfg.source.a_rule) src["a"] = *cfg.source.a_rule;
    if (cfg.source.b_rule) src["b"] = *cfg.source.b_rule;
    if (cfg.source.coeff_file) src["coeff_file"] = *cfg.source.coeff_file;
    if (!cfg.source.params.empty()) {
        ordered_json params;
        for (const auto& [k, v] : cfg.source.params) params[k] = v;
        src["params"] = params;
    }
    if (cfg.source.a0) src["a0"] = *cfg.source.a0;
    if (cfg.source.b0) src["b0"] = *cfg.source.b0;
    j["source"] = src;
    return j;
}

int cmd_eval(const RunConfig& cfg) {
    EvalRecord rec = run_eval(cfg);
    if (cfg.format == "csv") {
        std::cout << "method,value,depth,residual\n";
        std::cout << rec.method << "," << rec.value << "," << rec.depth << "," << rec.residual
                  << "\n";
    } else {
        ordered_json j;
        j["method"] = rec.method;
        j["value"] = rec.value;
        j["depth"] = rec.depth;
        j["residual"] = rec.residual;
        if (rec.converged) j["converged"] = *rec.converged;
        std::cout << j.dump(2) << "\n";
    }
    if (rec.converged && !*rec.converged) {
        std::cerr << "error: Lentz iteration did not converge within " << cfg.depth
                  << " iterations\n";
        return 3;
    }
    return 0;
}

int cmd_table(const RunConfig& cfg) {
    std::vector<TableRow> rows = run_table(cfg);
    if (cfg.format == "csv") {
        std::cout << "n,convergent,series_ratio,abs_diff\n";
        for (const auto& r : rows) {
            std::cout << r.n << "," << r.convergent << "," << r.series_ratio << ","
                      << r.abs_diff << "\n";
        }
        return 0;
    }
    ordered_json j;
    j["config"] = config_json(cfg);
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["n"] = r.n;
        row["convergent"] = r.convergent;
        row["series_ratio"] = r.series_ratio;
        row["abs_diff"] = r.abs_diff;
        j["rows"].push_back(row);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

std::string seed_hex(std::uint64_t seed) {
    char buf[19];
    std::snprintf(buf, sizeof(buf), "0x%016llx", static_cast<unsigned long long>(seed));
    return buf;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.trials = cfg.trials;
    opts.eps = cfg.eps;
    opts.phi_depth = cfg.phi_depth;
    auto reports = run_verify_suites(cfg.suite, opts);
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass();
    if (cfg.format == "csv") {
        std::cout << "suite,trials,failures,status\n";
        for (const auto& r : reports) {
            std::cout << r.suite << "," << r.trials << "," << r.failures.size() << ","
                      << (r.pass() ? "pass" : "fail") << "\n";
            for (const auto& f : r.failures) {
                std::cerr << "failure suite=" << r.suite << " seed=" << seed_hex(f.seed)
                          << " inputs=" << f.inputs << " expected=" << f.expected
                          << " actual=" << f.actual << "\n";
            }
        }
    } else {
        ordered_json j;
        j["suites"] = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json s;
            s["suite"] = r.suite;
            s["trials"] = r.trials;
            s["failures"] = ordered_json::array();
            for (const auto& f : r.failures) {
                ordered_json fj;
                fj["seed"] = seed_hex(f.seed);
                fj["inputs"] = f.inputs;
                fj["expected"] = f.expected;
                fj["actual"] = f.actual;
                s["failures"].push_back(fj);
            }
            s["status"] = r.pass() ? "pass" : "fail";
            j["suites"].push_back(s);
        }
        j["status"] = all_pass ? "pass" : "fail";
        std::cout << j.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continued-fraction toolkit: closed-form three-term recurrences, "
                 "convergents, and q-series cross-checks"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::vector<std::string> raw_params;

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate the fraction by one method");
    add_common_flags(eval_cmd, cfg, raw_params);
    eval_cmd->add_option("--method", cfg.method,
                         "backward|lentz|convergent|series-ratio")
        ->check(CLI::IsMember({"backward", "lentz", "convergent", "series-ratio"}));

    CLI::App* table_cmd =
        app.add_subcommand("table", "Emit convergent vs series-ratio rows 0..N");
    add_common_flags(table_cmd, cfg, raw_params);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the randomized verification suites");
    add_common_flags(verify_cmd, cfg, raw_params);
    verify_cmd->add_option("--suite", cfg.suite, "closed-form|phi|bridge|apps|all");
    verify_cmd->add_option("--trials", cfg.trials, "Trial count override");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        fold_raw_params(cfg, raw_params);
        cfkit::set_real_precision_bits(cfg.precision_bits);
        if (eval_cmd->parsed()) return cmd_eval(cfg);
        if (table_cmd->parsed()) return cmd_table(cfg);
        return cmd_verify(cfg);
    } catch (const cfkit::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == cfkit::ErrorKind::Domain ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
