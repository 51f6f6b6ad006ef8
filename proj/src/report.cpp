#include "spanmet/report.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "spanmet/geodesic.hpp"
#include "spanmet/oracle.hpp"
#include "spanmet/rational.hpp"

namespace spanmet {

namespace {

using ordered_json = nlohmann::ordered_json;

struct PhaseTimer {
    bool enabled;
    std::vector<std::pair<std::string, double>>& sink;

    template <class Fn>
    auto operator()(const char* name, Fn&& fn) {
        auto start = std::chrono::steady_clock::now();
        auto out = fn();
        if (enabled) {
            std::chrono::duration<double, std::milli> took =
                std::chrono::steady_clock::now() - start;
            sink.emplace_back(name, took.count());
        }
        return out;
    }
};

VerifySummary run_verify(const FiniteMetricSpace& m, const AnalysisReport& r, int jobs) {
    VerifySummary s;
    const int n = m.size();

    if (n <= 6) {
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (classify_edge(m, x, y).basic != brute_force_edge_class(m, x, y))
                    throw std::logic_error(
                        "verify: edge classification disagrees with the permutation oracle");
        s.edge_classification = "ok";
    } else {
        s.edge_classification = "skipped (n > 6)";
    }

    if (n <= 8) {
        MstEnumeration all = enumerate_min_spanning_trees(m);
        MstResult kruskal = mst(complete_graph(m));
        if (total_weight(kruskal.tree) != all.min_weight)
            throw std::logic_error("verify: MST weight disagrees with exhaustive enumeration");
        if (r.tie_breaking.holds) {
            std::vector<PointPair> edges;
            for (const Edge& e : kruskal.tree.edges) edges.emplace_back(e.u, e.v);
            if (all.trees.size() != 1 || all.trees.front() != edges)
                throw std::logic_error("verify: minimum spanning tree is not the unique one");
        }
        s.mst_enumeration = "ok";
    } else {
        s.mst_enumeration = "skipped (n > 8)";
    }

    if (!r.verdict.is_spanning_tree_metric || n < 3) {
        s.tsp_mst = "not applicable";
    } else if (n <= 10) {
        Rational tour = brute_force_tsp(m);
        if (tour != 2 * total_weight(*r.verdict.realizing_graph))
            throw std::logic_error("verify: optimal tour is not twice the tree weight");
        s.tsp_mst = "ok";
    } else {
        s.tsp_mst = "skipped (n > 10)";
    }

    WeightedGraph gm = r.verdict.realizing_graph ? *r.verdict.realizing_graph
                                                 : basic_geodesic_graph(m, jobs);
    RationalMatrix sp = apsp(gm);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sp(i, j) != m.d(i, j))
                throw std::logic_error(
                    "verify: shortest paths of the basic graph disagree with the metric");
    s.apsp_realisation = "ok";
    return s;
}

ordered_json rational_json(const Rational& q) {
    ordered_json j;
    j["exact"] = rational_string(q);
    j["decimal"] = decimal_string(q);
    return j;
}

ordered_json triplet_json(const FiniteMetricSpace& m,
                          const std::optional<std::array<int, 3>>& t) {
    if (!t) return nullptr;
    return ordered_json::array({m.label((*t)[0]), m.label((*t)[1]), m.label((*t)[2])});
}

ordered_json condition_json(const FiniteMetricSpace& m, const ConditionResult& c) {
    ordered_json j;
    j["holds"] = c.holds;
    j["witness"] = triplet_json(m, c.witness);
    j["witness_median"] =
        c.certificate ? ordered_json(m.label(*c.certificate)) : ordered_json(nullptr);
    return j;
}

ordered_json edges_json(const WeightedGraph& g) {
    auto arr = ordered_json::array();
    for (const Edge& e : g.edges) {
        ordered_json entry;
        entry["u"] = g.labels[static_cast<size_t>(e.u)];
        entry["v"] = g.labels[static_cast<size_t>(e.v)];
        entry["weight"] = exact_token(e.w);
        arr.push_back(std::move(entry));
    }
    return arr;
}

ordered_json input_json(const std::vector<std::string>& labels) {
    ordered_json j;
    j["n"] = labels.size();
    j["labels"] = labels;
    return j;
}

}  // namespace

AnalysisReport run_analysis(const FiniteMetricSpace& m, const AnalysisOptions& options) {
    AnalysisReport r{m};
    PhaseTimer timed{options.timings, r.timings_ms};
    r.tie_breaking = timed("tie_breaking", [&] { return check_tie_breaking(m); });
    r.fourth_point =
        timed("fourth_point", [&] { return fourth_point_condition(m, options.jobs); });
    r.three_point = timed("three_point", [&] { return three_point_condition(m, options.jobs); });
    if (m.size() >= 2) {
        r.rho = timed("roundaboutness", [&] { return roundaboutness(m, options.jobs); });
        r.deviance = timed("path_deviance", [&] { return path_deviance(m, options.jobs); });
    }
    r.delta = timed("hyperbolicity", [&] { return hyperbolicity(m, options.jobs); });
    r.verdict = timed("recognition", [&] { return recognize(m, options.jobs); });
    r.path = timed("path_recognition", [&] { return recognize_path(m, options.jobs); });
    if (options.verify)
        r.verify = timed("verify", [&] { return run_verify(m, r, options.jobs); });
    return r;
}

std::string report_json(const AnalysisReport& r) {
    const FiniteMetricSpace& m = r.space;
    ordered_json j;
    j["input"] = input_json(m.labels());
    j["metric_valid"] = true;

    ordered_json tb;
    tb["holds"] = r.tie_breaking.holds;
    auto collisions = ordered_json::array();
    for (const auto& [p, q] : r.tie_breaking.colliding_pairs)
        collisions.push_back(ordered_json::array(
            {ordered_json::array({m.label(p.first), m.label(p.second)}),
             ordered_json::array({m.label(q.first), m.label(q.second)})}));
    tb["collisions"] = std::move(collisions);
    j["tie_breaking"] = std::move(tb);

    j["fourth_point"] = condition_json(m, r.fourth_point);
    j["three_point"] = condition_json(m, r.three_point);

    if (r.rho) {
        ordered_json rho = rational_json(r.rho->rho);
        rho["argmax"] = triplet_json(m, r.rho->argmax);
        j["rho"] = std::move(rho);
    } else {
        j["rho"] = nullptr;
    }
    if (r.deviance) {
        ordered_json dev = rational_json(r.deviance->value);
        dev["argmax"] = triplet_json(m, r.deviance->argmax);
        dev["normalized_by_perimeter"] = true;
        j["path_deviance"] = std::move(dev);
    } else {
        j["path_deviance"] = nullptr;
    }
    j["hyperbolicity"] = rational_json(r.delta);

    j["is_spanning_tree_metric"] = r.verdict.is_spanning_tree_metric;
    j["is_spanning_path_metric"] = r.verdict.is_spanning_path_metric;
    j["realizing_edges"] = r.verdict.realizing_graph ? edges_json(*r.verdict.realizing_graph)
                                                     : ordered_json(nullptr);
    j["path_edges"] = r.path ? edges_json(*r.path) : ordered_json(nullptr);

    if (r.verify) {
        ordered_json v;
        v["edge_classification"] = r.verify->edge_classification;
        v["mst_enumeration"] = r.verify->mst_enumeration;
        v["tsp_mst"] = r.verify->tsp_mst;
        v["apsp_realisation"] = r.verify->apsp_realisation;
        j["verify"] = std::move(v);
    }
    if (!r.timings_ms.empty()) {
        ordered_json t;
        for (const auto& [name, ms] : r.timings_ms) t[name] = ms;
        j["timings_ms"] = std::move(t);
    }
    return j.dump(2) + "\n";
}

std::string validation_json(const std::vector<std::string>& labels,
                            const std::optional<MetricViolation>& violation) {
    ordered_json j;
    j["input"] = input_json(labels);
    j["metric_valid"] = !violation.has_value();
    if (violation) {
        ordered_json v;
        v["kind"] = violation_kind_name(violation->kind);
        auto points = ordered_json::array();
        for (int i : violation->indices) points.push_back(labels[static_cast<size_t>(i)]);
        v["points"] = std::move(points);
        v["lhs"] = rational_json(violation->lhs);
        v["rhs"] = rational_json(violation->rhs);
        j["violation"] = std::move(v);
    }
    return j.dump(2) + "\n";
}

}  // namespace spanmet
