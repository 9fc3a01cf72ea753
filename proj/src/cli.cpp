#include "linkpred/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linkpred/error.hpp"
#include "linkpred/experiment.hpp"
#include "linkpred/trace.hpp"

namespace linkpred {

namespace {

namespace fs = std::filesystem;

struct RunOptions {
    std::string trace_path;
    std::string format = "contacts";
    double window_start = 0.0;
    double window_end = 0.0;
    std::vector<double> period_lengths;
    double theta = 0.2;
    double beta = 0.001;
    std::string knowledge = "full";
    std::string ego_graph = "union";
    std::vector<std::string> metric_names = {"katz", "xe", "se", "xes", "xns1", "xns2", "xns3"};
    std::string normalization = "analytic";
    std::string max_entropy = "log";
    std::vector<std::string> direction_overrides;
    std::optional<int> node_count;
    std::uint64_t seed = 1;
    std::string output_dir;
};

struct GenOptions {
    int nodes = 0;
    int periods = 0;
    double period_length = 300.0;
    int stable_pairs = 0;
    double p_stable = 0.9;
    double flip_prob = 0.05;
    double p_noise = 0.0;
    std::uint64_t seed = 1;
    std::string output;
};

// Flat key=value config support: file entries become "--key value" pairs
// appended to the argument list unless the flag already appears on the
// command line, so explicit flags always win.
std::vector<std::string> apply_flat_config(const std::vector<std::string>& args) {
    std::string config_path;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) {
            config_path = args[k + 1];
        } else if (args[k].rfind("--config=", 0) == 0) {
            config_path = args[k].substr(9);
        }
    }
    if (config_path.empty()) return args;

    std::ifstream in(config_path);
    if (!in) {
        throw ConfigError("cannot read config file " + config_path);
    }
    auto trim = [](std::string s) {
        const std::size_t first = s.find_first_not_of(" \t\r");
        const std::size_t last = s.find_last_not_of(" \t\r");
        return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    };
    std::vector<std::string> merged = args;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        const std::size_t eq = content.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config file line " + std::to_string(line_no) +
                              ": expected key=value");
        }
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("config file line " + std::to_string(line_no) + ": empty key");
        }
        const std::string flag = "--" + key;
        bool given = false;
        for (const std::string& arg : merged) {
            if (arg == flag || arg.rfind(flag + "=", 0) == 0) {
                given = true;
                break;
            }
        }
        if (!given) {
            merged.push_back(flag);
            merged.push_back(value);
        }
    }
    return merged;
}

void write_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
        if (!out) {
            throw DataError("cannot write " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

ExperimentConfig make_experiment_config(const RunOptions& opts) {
    ExperimentConfig config;
    if (!(opts.theta > 0.0 && opts.theta < 1.0)) {
        throw ConfigError("theta must lie strictly between 0 and 1");
    }
    if (!(opts.beta > 0.0)) {
        throw ConfigError("beta must be strictly positive");
    }
    config.theta = opts.theta;
    config.beta = opts.beta;
    if (opts.knowledge == "full") {
        config.knowledge = Knowledge::full;
    } else if (opts.knowledge == "ego1") {
        config.knowledge = Knowledge::ego1;
    } else if (opts.knowledge == "ego2") {
        config.knowledge = Knowledge::ego2;
    } else {
        throw ConfigError("knowledge must be full, ego1 or ego2");
    }
    if (opts.ego_graph == "union") {
        config.ego_graph = EgoGraphMode::union_graph;
    } else if (opts.ego_graph == "per-period") {
        config.ego_graph = EgoGraphMode::per_period;
    } else {
        throw ConfigError("ego-graph must be union or per-period");
    }
    if (opts.normalization == "analytic") {
        config.normalization = NormalizationMode::analytic_max;
    } else if (opts.normalization == "minmax") {
        config.normalization = NormalizationMode::min_max;
    } else {
        throw ConfigError("normalization must be analytic or minmax");
    }
    if (opts.max_entropy == "log") {
        config.max_entropy = MaxEntropyMode::analytic_log;
    } else if (opts.max_entropy == "exact") {
        config.max_entropy = MaxEntropyMode::exact_enumeration;
    } else {
        throw ConfigError("max-entropy must be log or exact");
    }
    for (const std::string& override_spec : opts.direction_overrides) {
        const std::size_t eq = override_spec.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("direction override must look like metric=asc or metric=desc");
        }
        const std::string name = override_spec.substr(0, eq);
        const std::string dir = override_spec.substr(eq + 1);
        if (!metric_from_name(name)) {
            throw ConfigError("direction override names unknown metric " + name);
        }
        if (dir == "asc" || dir == "ascending") {
            config.direction_overrides[name] = Direction::ascending_likelihood;
        } else if (dir == "desc" || dir == "descending") {
            config.direction_overrides[name] = Direction::descending_likelihood;
        } else {
            throw ConfigError("direction must be asc or desc");
        }
    }
    return config;
}

std::vector<Metric> parse_metrics(const std::vector<std::string>& names) {
    std::vector<Metric> metrics;
    for (const std::string& name : names) {
        const auto metric = metric_from_name(name);
        if (!metric) {
            throw ConfigError("unknown metric " + name);
        }
        metrics.push_back(*metric);
    }
    if (metrics.empty()) {
        throw ConfigError("metrics must not be empty");
    }
    return metrics;
}

std::vector<ContactEvent> load_events(const RunOptions& opts) {
    std::ifstream in(opts.trace_path, std::ios::binary);
    if (!in) {
        throw DataError("cannot read trace file " + opts.trace_path);
    }
    if (opts.format == "contacts") {
        return parse_contact_trace(in).events;
    }
    if (opts.format == "associations") {
        return associations_to_contacts(parse_association_trace(in).events);
    }
    throw ConfigError("format must be contacts or associations");
}

int command_run(const RunOptions& opts) {
    const ExperimentConfig config = make_experiment_config(opts);
    const std::vector<Metric> metrics = parse_metrics(opts.metric_names);
    if (opts.period_lengths.empty()) {
        throw ConfigError("at least one period length is required");
    }
    if (opts.output_dir.empty()) {
        throw ConfigError("output-dir is required");
    }
    const std::vector<ContactEvent> events = load_events(opts);

    fs::create_directories(opts.output_dir);
    std::ostringstream summary;
    write_csv_header(summary);
    for (const double period_length : opts.period_lengths) {
        const Scenario scenario = build_scenario(events, opts.window_start, opts.window_end,
                                                 period_length, opts.node_count);
        const std::vector<EvalReport> reports =
            run_experiment(scenario.tracked, scenario.truth, metrics, config);
        std::ostringstream json;
        write_json_reports(json, reports);
        char label_buf[32];
        std::snprintf(label_buf, sizeof(label_buf), "%g", period_length);
        const std::string label = label_buf;
        write_atomic(fs::path(opts.output_dir) / ("reports_t" + label + "s.json"), json.str());
        for (const EvalReport& report : reports) {
            write_csv_row(summary, report, label);
        }
    }
    write_atomic(fs::path(opts.output_dir) / "summary.csv", summary.str());
    return 0;
}

int command_gen(const GenOptions& opts) {
    SyntheticSpec spec;
    spec.node_count = opts.nodes;
    spec.period_count = opts.periods;
    spec.p_stable = opts.p_stable;
    spec.flip_prob = opts.flip_prob;
    spec.p_noise = opts.p_noise;
    spec.stable_pairs = pick_random_pairs(opts.nodes, opts.stable_pairs, opts.seed);
    if (opts.output.empty()) {
        throw ConfigError("output is required");
    }
    const ContactTensor tensor = generate_synthetic(spec, opts.seed);
    const std::vector<ContactEvent> events = tensor_to_events(tensor, opts.period_length);
    std::ostringstream csv;
    write_contact_csv(csv, events, tensor.node_count());
    write_atomic(opts.output, csv.str());
    return 0;
}

} // namespace

int cli_dispatch(int argc, const char* const* argv) {
    CLI::App app{"Temporal link prediction for intermittently connected networks"};
    app.require_subcommand(1);

    RunOptions run_opts;
    std::string config_path;
    CLI::App* run = app.add_subcommand(
        "run", "Discretize a trace, score node pairs and evaluate against the next period");
    run->add_option("--config", config_path, "Flat key=value config file; command-line flags win");
    run->add_option("--trace", run_opts.trace_path, "Trace CSV path")->required();
    run->add_option("--format", run_opts.format, "Trace format: contacts or associations")
        ->capture_default_str();
    run->add_option("--window-start", run_opts.window_start, "Tracked window start (seconds)")
        ->capture_default_str();
    run->add_option("--window-end", run_opts.window_end,
                    "Tracked window end (seconds); the following period is the benchmark")
        ->required();
    run->add_option("--period-lengths", run_opts.period_lengths,
                    "Tracking period lengths in seconds (comma separated)")
        ->required()
        ->delimiter(',');
    run->add_option("--theta", run_opts.theta, "Recency decay parameter in (0,1)")
        ->capture_default_str();
    run->add_option("--beta", run_opts.beta, "Katz path-length damping")->capture_default_str();
    run->add_option("--knowledge", run_opts.knowledge, "full, ego1 or ego2")
        ->capture_default_str();
    run->add_option("--ego-graph", run_opts.ego_graph,
                    "Neighborhoods from the union graph or per-period graphs")
        ->capture_default_str();
    run->add_option("--metrics", run_opts.metric_names,
                    "Metrics: katz,xe,se,xes,xns1,xns2,xns3,cn,aa,jaccard")
        ->delimiter(',');
    run->add_option("--normalization", run_opts.normalization, "analytic or minmax")
        ->capture_default_str();
    run->add_option("--max-entropy", run_opts.max_entropy,
                    "Per-horizon entropy maximum: log or exact")
        ->capture_default_str();
    run->add_option("--direction", run_opts.direction_overrides,
                    "Per-metric ranking override, e.g. xe=desc (repeatable)");
    run->add_option("--nodes", run_opts.node_count,
                    "Explicit node universe size (default: derived from the trace)");
    run->add_option("--seed", run_opts.seed, "Random seed (reserved; runs are deterministic)")
        ->capture_default_str();
    run->add_option("--output-dir", run_opts.output_dir, "Report output directory")->required();

    GenOptions gen_opts;
    CLI::App* gen = app.add_subcommand("gen", "Write a synthetic pairwise contact trace CSV");
    gen->add_option("--nodes", gen_opts.nodes, "Node count")->required();
    gen->add_option("--periods", gen_opts.periods,
                    "Total periods covered by the trace (tracked + benchmark)")
        ->required();
    gen->add_option("--period-length", gen_opts.period_length, "Period length in seconds")
        ->capture_default_str();
    gen->add_option("--stable-pairs", gen_opts.stable_pairs,
                    "Number of randomly chosen persistent pairs")
        ->capture_default_str();
    gen->add_option("--p-stable", gen_opts.p_stable, "Initial on-probability of stable pairs")
        ->capture_default_str();
    gen->add_option("--flip-prob", gen_opts.flip_prob, "Per-period flip probability")
        ->capture_default_str();
    gen->add_option("--p-noise", gen_opts.p_noise, "Per-period background link probability")
        ->capture_default_str();
    gen->add_option("--seed", gen_opts.seed, "Random seed")->capture_default_str();
    gen->add_option("--output", gen_opts.output, "Output CSV path")->required();

    try {
        std::vector<std::string> args;
        for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
        args = apply_flat_config(args);
        std::reverse(args.begin(), args.end()); // CLI11 vector parse order
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help / --version
        }
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (run->parsed()) return command_run(run_opts);
        if (gen->parsed()) return command_gen(gen_opts);
        std::cerr << "error: no subcommand given\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace linkpred
