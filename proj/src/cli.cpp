#include "spanmet/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "spanmet/conditions.hpp"
#include "spanmet/geodesic.hpp"
#include "spanmet/io.hpp"
#include "spanmet/metric.hpp"
#include "spanmet/oracle.hpp"
#include "spanmet/rational.hpp"
#include "spanmet/recognition.hpp"
#include "spanmet/report.hpp"

namespace spanmet {

namespace {

using ordered_json = nlohmann::ordered_json;

int default_jobs() {
    const char* env = std::getenv("SPANMET_JOBS");
    if (!env) return 1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1024) return 1;
    return static_cast<int>(v);
}

Format parse_format(const std::string& name) {
    auto f = format_from_string(name);
    if (!f) throw std::invalid_argument("unknown format '" + name + "'");
    return *f;
}

RawMetricInput read_input(const std::string& path, Format format, std::istream& in) {
    if (path.empty() || path == "-") return parse_metric_input(in, format);
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open '" + path + "'");
    return parse_metric_input(file, format);
}

ordered_json input_digest(const std::vector<std::string>& labels) {
    ordered_json j;
    j["n"] = labels.size();
    j["labels"] = labels;
    return j;
}

ordered_json triplet_json(const FiniteMetricSpace& m,
                          const std::optional<std::array<int, 3>>& t) {
    if (!t) return nullptr;
    return ordered_json::array({m.label((*t)[0]), m.label((*t)[1]), m.label((*t)[2])});
}

// Shared flags for the commands that read a metric.
struct InputArgs {
    std::string path = "-";
    std::string format = "csv";
    int jobs = default_jobs();
    bool verify = false;
    bool timings = false;

    void attach(CLI::App* cmd, bool analysis_flags) {
        cmd->add_option("input", path, "distance matrix file, or - for stdin");
        cmd->add_option("--format", format, "input format: csv, lower, json")
            ->default_str("csv");
        cmd->add_option("--jobs", jobs, "parallel scan width (default $SPANMET_JOBS or 1)");
        if (analysis_flags) {
            cmd->add_flag("--verify", verify, "cross-check against brute-force oracles");
            cmd->add_flag("--timings", timings, "record per-phase wall time in the report");
        }
    }

    // nullopt means the violation document was already emitted (exit 1)
    std::optional<FiniteMetricSpace> load(std::istream& in, std::ostream& out) const {
        RawMetricInput raw = read_input(path, parse_format(format), in);
        auto checked = validate_metric(raw.dist, raw.labels, jobs);
        if (auto* violation = std::get_if<MetricViolation>(&checked)) {
            out << validation_json(raw.labels, *violation);
            return std::nullopt;
        }
        return std::get<FiniteMetricSpace>(std::move(checked));
    }
};

int run_validate(const InputArgs& args, std::istream& in, std::ostream& out) {
    RawMetricInput raw = read_input(args.path, parse_format(args.format), in);
    auto checked = validate_metric(raw.dist, raw.labels, args.jobs);
    if (auto* violation = std::get_if<MetricViolation>(&checked)) {
        out << validation_json(raw.labels, *violation);
        return 1;
    }
    out << validation_json(raw.labels, std::nullopt);
    return 0;
}

int run_analyze(const InputArgs& args, std::istream& in, std::ostream& out) {
    auto m = args.load(in, out);
    if (!m) return 1;
    AnalysisOptions options{args.jobs, args.verify, args.timings};
    AnalysisReport report = run_analysis(*m, options);
    out << report_json(report);
    return report.verdict.is_spanning_tree_metric ? 0 : 1;
}

int run_graph_command(const InputArgs& args, const std::string& out_kind, bool basic_only,
                      std::istream& in, std::ostream& out) {
    if (out_kind != "dot" && out_kind != "json")
        throw std::invalid_argument("unknown --out '" + out_kind + "'");
    auto m = args.load(in, out);
    if (!m) return 1;
    WeightedGraph g = basic_only ? basic_geodesic_graph(*m, args.jobs)
                                 : mst(complete_graph(*m)).tree;
    out << (out_kind == "dot" ? to_dot(g) : graph_json(g));
    return 0;
}

int run_roundabout(const InputArgs& args, std::istream& in, std::ostream& out) {
    auto m = args.load(in, out);
    if (!m) return 1;
    Roundaboutness r = roundaboutness(*m, args.jobs);
    TieBreaking tie = check_tie_breaking(*m);
    ordered_json j;
    j["input"] = input_digest(m->labels());
    ordered_json rho;
    rho["exact"] = rational_string(r.rho);
    rho["decimal"] = r.decimal;
    rho["argmax"] = triplet_json(*m, r.argmax);
    j["rho"] = std::move(rho);
    j["tie_breaking_holds"] = tie.holds;
    out << j.dump(2) << "\n";
    return r.rho == 0 ? 0 : 1;
}

int run_path_check(const InputArgs& args, std::istream& in, std::ostream& out) {
    auto m = args.load(in, out);
    if (!m) return 1;
    ConditionResult three = three_point_condition(*m, args.jobs);
    std::optional<WeightedGraph> path = recognize_path(*m, args.jobs);
    ordered_json j;
    j["input"] = input_digest(m->labels());
    ordered_json tp;
    tp["holds"] = three.holds;
    tp["witness"] = triplet_json(*m, three.witness);
    j["three_point"] = std::move(tp);
    j["is_spanning_path_metric"] = path.has_value();
    if (path) {
        auto edges = ordered_json::array();
        for (const Edge& e : path->edges) {
            ordered_json entry;
            entry["u"] = path->labels[static_cast<size_t>(e.u)];
            entry["v"] = path->labels[static_cast<size_t>(e.v)];
            entry["weight"] = exact_token(e.w);
            edges.push_back(std::move(entry));
        }
        j["path_edges"] = std::move(edges);
    } else {
        j["path_edges"] = nullptr;
    }
    out << j.dump(2) << "\n";
    return path ? 0 : 1;
}

struct GenerateArgs {
    std::string kind = "tree";
    int n = 5;
    std::uint64_t seed = 0;
    int dim = 2;
    std::string noise = "1/100";
    std::string wmin = "1";
    std::string wmax = "1000";
    std::string format = "csv";
};

int run_generate(const GenerateArgs& args, std::ostream& out) {
    GeneratorSpec spec;
    auto kind = generator_kind_from_string(args.kind);
    if (!kind) throw std::invalid_argument("unknown generator kind '" + args.kind + "'");
    spec.kind = *kind;
    spec.n = args.n;
    spec.seed = args.seed;
    spec.dim = args.dim;
    spec.noise = parse_rational(args.noise);
    spec.weight_min = parse_rational(args.wmin);
    spec.weight_max = parse_rational(args.wmax);
    GeneratedMetric made = generate(spec);
    out << serialize_metric(made.space, parse_format(args.format));
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"spanning tree metric analyzer"};
    app.require_subcommand(1);

    InputArgs validate_args;
    InputArgs analyze_args;
    InputArgs mst_args;
    InputArgs basic_args;
    InputArgs roundabout_args;
    InputArgs path_args;
    GenerateArgs gen_args;
    std::string mst_out = "dot";
    std::string basic_out = "dot";

    CLI::App* validate_cmd = app.add_subcommand("validate", "check the metric axioms");
    validate_args.attach(validate_cmd, false);

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full recognition report as JSON");
    analyze_args.attach(analyze_cmd, true);

    CLI::App* mst_cmd = app.add_subcommand("mst", "minimum spanning tree of the complete graph");
    mst_args.attach(mst_cmd, false);
    mst_cmd->add_option("--out", mst_out, "output: dot or json")->default_str("dot");

    CLI::App* basic_cmd = app.add_subcommand("basic-graph", "basic geodesic graph");
    basic_args.attach(basic_cmd, false);
    basic_cmd->add_option("--out", basic_out, "output: dot or json")->default_str("dot");

    CLI::App* roundabout_cmd =
        app.add_subcommand("roundabout", "roundaboutness; exit 0 iff it is zero");
    roundabout_args.attach(roundabout_cmd, false);

    CLI::App* path_cmd =
        app.add_subcommand("path-check", "spanning path recognition; exit 0 iff one exists");
    path_args.attach(path_cmd, false);

    CLI::App* gen_cmd = app.add_subcommand("generate", "emit a seeded random metric");
    gen_cmd->add_option("--kind", gen_args.kind, "tree, euclidean, l1, perturbed-tree")
        ->default_str("tree");
    gen_cmd->add_option("--n", gen_args.n, "point count");
    gen_cmd->add_option("--seed", gen_args.seed, "64-bit seed");
    gen_cmd->add_option("--dim", gen_args.dim, "point cloud dimension");
    gen_cmd->add_option("--noise", gen_args.noise, "perturbation magnitude (rational)");
    gen_cmd->add_option("--wmin", gen_args.wmin, "minimum tree edge weight (rational)");
    gen_cmd->add_option("--wmax", gen_args.wmax, "maximum tree edge weight (rational)");
    gen_cmd->add_option("--format", gen_args.format, "output format: csv, lower, json")
        ->default_str("csv");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate_cmd->parsed()) return run_validate(validate_args, in, out);
        if (analyze_cmd->parsed()) return run_analyze(analyze_args, in, out);
        if (mst_cmd->parsed()) return run_graph_command(mst_args, mst_out, false, in, out);
        if (basic_cmd->parsed()) return run_graph_command(basic_args, basic_out, true, in, out);
        if (roundabout_cmd->parsed()) return run_roundabout(roundabout_args, in, out);
        if (path_cmd->parsed()) return run_path_check(path_args, in, out);
        if (gen_cmd->parsed()) return run_generate(gen_args, out);
        err << "error: no command\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace spanmet
