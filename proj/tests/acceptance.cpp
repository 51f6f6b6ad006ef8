// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failures. All comparisons are exact unless
// a wall-clock budget is stated next to the check.
#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <spanmet/conditions.hpp>
#include <spanmet/geodesic.hpp>
#include <spanmet/metric.hpp>
#include <spanmet/oracle.hpp>
#include <spanmet/rational.hpp>
#include <spanmet/recognition.hpp>
#include <spanmet/report.hpp>

using namespace spanmet;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int num, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << num << ": " << name;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n" << std::flush;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

FiniteMetricSpace fixture(const std::vector<std::vector<int>>& cells,
                          std::vector<std::string> labels) {
    const int n = static_cast<int>(cells.size());
    RationalMatrix dist(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dist(i, j) = cells[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return require_valid(dist, std::move(labels));
}

FiniteMetricSpace cycle4() {
    return fixture({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}},
                   {"v1", "v2", "v3", "v4"});
}

FiniteMetricSpace uniform_k3() {
    return fixture({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}, {"x", "y", "z"});
}

std::vector<PointPair> edge_pairs(const WeightedGraph& g) {
    std::vector<PointPair> out;
    for (const Edge& e : g.edges) out.emplace_back(e.u, e.v);
    return out;
}

// Shared corpus for the first two criteria: seeded metrics of mixed kinds
// with n in [4, 8], kept only when all pairwise distances are distinct.
struct Instance {
    FiniteMetricSpace space;
    RecognitionVerdict verdict;
};

std::vector<Instance> tie_breaking_corpus(size_t want, double* elapsed) {
    auto start = Clock::now();
    std::vector<Instance> kept;
    const GeneratorSpec::Kind kinds[] = {GeneratorSpec::Kind::Tree, GeneratorSpec::Kind::L1,
                                         GeneratorSpec::Kind::PerturbedTree};
    unsigned seed = 0;
    while (kept.size() < want && seed < 20000) {
        ++seed;
        GeneratorSpec spec;
        spec.kind = kinds[seed % 3];
        spec.n = 4 + static_cast<int>(seed % 5);
        spec.seed = seed;
        auto m = generate(spec).space;
        if (!check_tie_breaking(m).holds) continue;
        auto v = recognize(m);
        kept.push_back({std::move(m), std::move(v)});
    }
    *elapsed = seconds_since(start);
    return kept;
}

void criterion_1_and_2() {
    double elapsed = 0;
    std::vector<Instance> corpus;
    try {
        corpus = tie_breaking_corpus(1000, &elapsed);
    } catch (const std::exception& e) {
        line(1, "fourth-point condition matches tree recognition", false, e.what());
        line(2, "recognized trees equal both oracle spanning trees", false, "no corpus");
        return;
    }

    size_t mismatches = 0;
    for (const Instance& inst : corpus)
        if (inst.verdict.is_spanning_tree_metric != fourth_point_condition(inst.space).holds)
            ++mismatches;
    std::ostringstream d1;
    d1 << corpus.size() << " metrics, " << mismatches << " mismatches, " << elapsed << " s";
    line(1, "fourth-point condition matches tree recognition",
         corpus.size() >= 1000 && mismatches == 0 && elapsed < 60.0, d1.str());

    size_t trees = 0;
    size_t bad = 0;
    try {
        for (const Instance& inst : corpus) {
            if (!inst.verdict.is_spanning_tree_metric) continue;
            ++trees;
            const WeightedGraph& gm = *inst.verdict.realizing_graph;
            if (static_cast<int>(gm.edges.size()) != inst.space.size() - 1) ++bad;
            auto kruskal = mst(complete_graph(inst.space));
            auto enumerated = enumerate_min_spanning_trees(inst.space);
            if (!same_graph(gm, kruskal.tree) || enumerated.trees.size() != 1 ||
                enumerated.trees[0] != edge_pairs(gm) ||
                enumerated.min_weight != total_weight(gm))
                ++bad;
        }
        std::ostringstream d2;
        d2 << trees << " tree metrics, " << bad << " disagreements";
        line(2, "recognized trees equal both oracle spanning trees", trees > 0 && bad == 0,
             d2.str());
    } catch (const std::exception& e) {
        line(2, "recognized trees equal both oracle spanning trees", false, e.what());
    }
}

void criterion_3() {
    auto start = Clock::now();
    size_t bad = 0;
    for (unsigned seed = 1; seed <= 100; ++seed) {
        GeneratorSpec spec;
        spec.kind = GeneratorSpec::Kind::Tree;
        spec.n = 50;
        spec.seed = seed;
        auto g = generate(spec);
        auto v = recognize(g.space);
        if (!v.is_spanning_tree_metric || !v.realizing_graph ||
            !same_graph(*v.realizing_graph, *g.tree))
            ++bad;
        if (roundaboutness(g.space).rho != 0) ++bad;
    }
    double elapsed = seconds_since(start);
    std::ostringstream d;
    d << "100 metrics of 50 points, " << bad << " failures, " << elapsed << " s";
    line(3, "recognition returns the generating tree with zero roundaboutness",
         bad == 0 && elapsed < 30.0, d.str());
}

void criterion_4() {
    bool ok = true;
    std::string detail;

    auto c4 = cycle4();
    auto v4 = recognize(c4);
    if (!fourth_point_condition(c4).holds) ok = false, detail = "4-cycle fourth-point";
    if (!three_point_condition(c4).holds) ok = false, detail = "4-cycle three-point";
    if (check_tie_breaking(c4).holds) ok = false, detail = "4-cycle tie-breaking";
    if (v4.is_spanning_tree_metric || v4.realizing_graph) ok = false, detail = "4-cycle verdict";
    auto g4 = basic_geodesic_graph(c4);
    std::vector<PointPair> ring = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    if (edge_pairs(g4) != ring) ok = false, detail = "4-cycle basic graph";
    if (hyperbolicity(c4) != 1) ok = false, detail = "4-cycle hyperbolicity";

    auto k3 = uniform_k3();
    if (fourth_point_condition(k3).holds) ok = false, detail = "triangle fourth-point";
    if (roundaboutness(k3).rho != Rational(1, 6)) ok = false, detail = "triangle rho";
    if (hyperbolicity(k3) != 0) ok = false, detail = "triangle hyperbolicity";

    line(4, "counterexample fixtures behave exactly", ok, detail);
}

void criterion_5() {
    size_t bad = 0;
    for (unsigned seed = 1; seed <= 50; ++seed) {
        GeneratorSpec spec;
        spec.kind = GeneratorSpec::Kind::Tree;
        spec.n = 3 + static_cast<int>(seed % 7);  // 3 through 9
        spec.seed = seed;
        auto g = generate(spec);
        Rational tour = brute_force_tsp(g.space);
        if (tour != total_weight(*g.tree) * 2) ++bad;
        if (tour != total_weight(mst(complete_graph(g.space)).tree) * 2) ++bad;
    }
    std::ostringstream d;
    d << "50 tree metrics, " << bad << " tour mismatches";
    line(5, "optimal tours cost exactly twice the spanning tree", bad == 0, d.str());
}

void criterion_6() {
    const GeneratorSpec::Kind kinds[] = {GeneratorSpec::Kind::Tree, GeneratorSpec::Kind::L1,
                                         GeneratorSpec::Kind::PerturbedTree,
                                         GeneratorSpec::Kind::Euclidean};
    size_t edges = 0;
    size_t bad = 0;
    for (unsigned seed = 1; seed <= 200; ++seed) {
        GeneratorSpec spec;
        spec.kind = kinds[seed % 4];
        spec.n = 2 + static_cast<int>(seed % 5);  // 2 through 6
        spec.seed = seed;
        auto m = generate(spec).space;
        for (int x = 0; x < m.size(); ++x)
            for (int y = x + 1; y < m.size(); ++y) {
                ++edges;
                if (classify_edge(m, x, y).basic != brute_force_edge_class(m, x, y)) ++bad;
            }
    }
    std::ostringstream d;
    d << "200 metrics, " << edges << " edges, " << bad << " disagreements";
    line(6, "interval test matches the relay-chain oracle on every edge", bad == 0, d.str());
}

// A seeded metric of |X| = n collinear points with distinct gaps, returned
// together with the expected consecutive-point edges of the realisation.
struct PathInstance {
    FiniteMetricSpace space;
    WeightedGraph path;
};

PathInstance make_path_metric(unsigned seed, int n) {
    std::mt19937_64 eng(seed);
    constexpr std::int64_t kGrain = 1'000'000;
    for (;;) {
        // positions along the line, then a shuffled label assignment
        std::vector<Rational> pos;
        Rational at(0);
        for (int i = 1; i < n; ++i) {
            Rational gap(1 + static_cast<long>(eng() % kGrain), kGrain);
            gap.canonicalize();
            at += gap;
            pos.push_back(at);
        }
        pos.insert(pos.begin(), Rational(0));
        std::vector<int> order(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(order[static_cast<size_t>(i)], order[eng() % static_cast<size_t>(i + 1)]);
        // order[k] is the label sitting at the k-th position on the line
        std::vector<Rational> at_label(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) at_label[static_cast<size_t>(order[k])] = pos[static_cast<size_t>(k)];

        RationalMatrix dist(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dist(i, j) = abs(at_label[static_cast<size_t>(i)] - at_label[static_cast<size_t>(j)]);
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
        auto space = require_valid(dist, labels);
        if (!check_tie_breaking(space).holds) continue;  // different gaps may still collide

        WeightedGraph expected;
        expected.labels = labels;
        for (int k = 0; k + 1 < n; ++k) {
            int u = order[static_cast<size_t>(k)];
            int v = order[static_cast<size_t>(k + 1)];
            expected.edges.push_back({std::min(u, v), std::max(u, v),
                                      pos[static_cast<size_t>(k + 1)] - pos[static_cast<size_t>(k)]});
        }
        sort_edges(expected);
        return {std::move(space), std::move(expected)};
    }
}

void criterion_7() {
    size_t bad = 0;
    for (unsigned seed = 1; seed <= 100; ++seed) {
        auto inst = make_path_metric(seed, 30);
        if (!three_point_condition(inst.space).holds) {
            ++bad;
            continue;
        }
        auto path = recognize_path(inst.space);
        if (!path || !same_graph(*path, inst.path)) {
            ++bad;
            continue;
        }
        if (!verify_realisation(*path, inst.space).realises) ++bad;
    }
    std::ostringstream d;
    d << "100 path metrics of 30 points, " << bad << " failures";
    line(7, "collinear metrics are reconstructed as their path", bad == 0, d.str());
}

void criterion_8() {
    bool ok = true;
    std::string detail;
    const Rational factor(7, 3);

    std::vector<FiniteMetricSpace> all = {
        fixture({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}, {"a", "b", "c"}),
        uniform_k3(),
        cycle4(),
        fixture({{0, 3, 5}, {3, 0, 6}, {5, 6, 0}}, {"x", "y", "z"}),
        fixture({{0, 1, 2, 4}, {1, 0, 3, 5}, {2, 3, 0, 6}, {4, 5, 6, 0}}, {"c", "x", "y", "z"}),
    };
    for (size_t idx = 0; idx < all.size() && ok; ++idx) {
        const auto& m = all[idx];
        auto s = m.rescaled(factor);
        auto tag = [&](const char* what) {
            detail = "fixture " + std::to_string(idx) + ": " + what;
            ok = false;
        };

        if (roundaboutness(s).rho != roundaboutness(m).rho) tag("rho value");
        if (roundaboutness(s).argmax != roundaboutness(m).argmax) tag("rho argmax");
        if (path_deviance(s).value != path_deviance(m).value) tag("deviance value");
        if (path_deviance(s).argmax != path_deviance(m).argmax) tag("deviance argmax");

        auto f0 = fourth_point_condition(m);
        auto f1 = fourth_point_condition(s);
        if (f0.holds != f1.holds || f0.witness != f1.witness) tag("fourth-point");
        auto t0 = three_point_condition(m);
        auto t1 = three_point_condition(s);
        if (t0.holds != t1.holds || t0.witness != t1.witness ||
            t0.certificate != t1.certificate)
            tag("three-point");
        if (check_tie_breaking(s).holds != check_tie_breaking(m).holds) tag("tie-breaking");

        auto v0 = recognize(m);
        auto v1 = recognize(s);
        if (v0.is_spanning_tree_metric != v1.is_spanning_tree_metric ||
            v0.is_spanning_path_metric != v1.is_spanning_path_metric)
            tag("verdict");
        if (v0.realizing_graph.has_value() != v1.realizing_graph.has_value()) tag("realisation");
        if (v0.realizing_graph &&
            edge_pairs(*v0.realizing_graph) != edge_pairs(*v1.realizing_graph))
            tag("realisation edges");

        // hyperbolicity carries the unit of distance, so it scales with the
        // metric; zero stays zero, which covers every tree-like fixture
        if (hyperbolicity(s) != hyperbolicity(m) * factor) tag("hyperbolicity transform");
    }
    line(8, "rescaling by 7/3 preserves every scale-free result", ok, detail);
}

void criterion_9() {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::Tree;
    spec.n = 150;
    FiniteMetricSpace* found = nullptr;
    std::optional<FiniteMetricSpace> metric;
    for (unsigned seed = 1; seed <= 20 && !found; ++seed) {
        spec.seed = seed;
        auto m = generate(spec).space;
        if (check_tie_breaking(m).holds) {
            metric.emplace(std::move(m));
            found = &*metric;
        }
    }
    if (!found) {
        line(9, "large-instance condition scans stay inside their budgets", false,
             "no tie-breaking seed in 20 tries");
        return;
    }

    AnalysisOptions options;
    options.jobs = 1;
    options.timings = true;
    auto report = run_analysis(*metric, options);

    double fourth_ms = -1;
    double three_ms = -1;
    double deviance_ms = -1;
    for (const auto& [phase, ms] : report.timings_ms) {
        if (phase == "fourth_point") fourth_ms = ms;
        if (phase == "three_point") three_ms = ms;
        if (phase == "path_deviance") deviance_ms = ms;
    }
    // the three-point scan may stop at its first branching triplet, so the
    // exhaustive cubic sweep (path deviance) is held to the same budget
    bool ok = report.verdict.is_spanning_tree_metric && report.rho && report.rho->rho == 0 &&
              fourth_ms >= 0 && fourth_ms < 120e3 && three_ms >= 0 && three_ms < 5e3 &&
              deviance_ms >= 0 && deviance_ms < 5e3;
    std::ostringstream d;
    d << "150 points, fourth-point scan " << fourth_ms << " ms, three-point scan " << three_ms
      << " ms, full cubic sweep " << deviance_ms << " ms";
    line(9, "large-instance condition scans stay inside their budgets", ok, d.str());
}

}  // namespace

int main() {
    try {
        criterion_1_and_2();
        criterion_3();
        criterion_4();
        criterion_5();
        criterion_6();
        criterion_7();
        criterion_8();
        criterion_9();
    } catch (const std::exception& e) {
        std::cout << "FAIL: unexpected error: " << e.what() << "\n";
        ++failures;
    }
    return failures;
}
