#include "spanmet/recognition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "spanmet/geodesic.hpp"

namespace spanmet {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace

MstResult mst(const WeightedGraph& k) {
    int n = k.size();
    if (n < 1) throw std::invalid_argument("empty graph");
    std::vector<const Edge*> order;
    order.reserve(k.edges.size());
    for (const Edge& e : k.edges) order.push_back(&e);
    std::sort(order.begin(), order.end(), [](const Edge* a, const Edge* b) {
        int c = cmp(a->w, b->w);
        if (c != 0) return c < 0;
        return std::pair(a->u, a->v) < std::pair(b->u, b->v);
    });

    MstResult out;
    out.tree.labels = k.labels;
    UnionFind uf(n);
    for (const Edge* e : order) {
        if (uf.unite(e->u, e->v)) out.tree.edges.push_back(*e);
        if (static_cast<int>(out.tree.edges.size()) == n - 1) break;
    }
    if (static_cast<int>(out.tree.edges.size()) != n - 1)
        throw std::invalid_argument("graph is disconnected; no spanning tree exists");
    sort_edges(out.tree);

    out.unique_certified = true;
    for (size_t i = 0; i + 1 < order.size(); ++i)
        if (order[i]->w == order[i + 1]->w) {
            out.unique_certified = false;
            break;
        }
    return out;
}

RecognitionVerdict recognize(const FiniteMetricSpace& m, int jobs) {
    RecognitionVerdict out;
    WeightedGraph gm = basic_geodesic_graph(m, jobs);
    out.tie_breaking = check_tie_breaking(m).holds;
    out.cross_check.fourth_point = fourth_point_condition(m, jobs).holds;
    out.cross_check.three_point = three_point_condition(m, jobs).holds;

    out.is_spanning_tree_metric = static_cast<int>(gm.edges.size()) == m.size() - 1;

    out.cross_check.theorem1_consistent =
        !out.tie_breaking || out.is_spanning_tree_metric == out.cross_check.fourth_point;
    if (!out.cross_check.theorem1_consistent)
        throw std::logic_error(
            "internal error: tree verdict disagrees with the fourth-point condition "
            "under tie-breaking");

    if (out.is_spanning_tree_metric) {
        MstResult kruskal = mst(complete_graph(m));
        if (!same_graph(gm, kruskal.tree))
            throw std::logic_error(
                "internal error: basic geodesic tree differs from the minimum spanning tree");
        if (!verify_realisation(gm, m).realises)
            throw std::logic_error("internal error: basic geodesic tree fails to realise the metric");
        auto deg = vertex_degrees(gm);
        out.is_spanning_path_metric =
            std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
        out.realizing_graph = std::move(gm);
    }
    return out;
}

std::optional<WeightedGraph> recognize_path(const FiniteMetricSpace& m, int jobs) {
    if (!three_point_condition(m, jobs).holds) return std::nullopt;
    int n = m.size();
    WeightedGraph path;
    path.labels = m.labels();
    if (n >= 2) {
        // farthest pair, lexicographically first among ties
        int s = 0, t = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (m.d(i, j) > m.d(s, t)) {
                    s = i;
                    t = j;
                }
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return m.d(s, a) < m.d(s, b); });
        for (int i = 0; i + 1 < n; ++i) {
            int a = order[static_cast<size_t>(i)];
            int b = order[static_cast<size_t>(i + 1)];
            path.edges.push_back({std::min(a, b), std::max(a, b), m.d(a, b)});
        }
        sort_edges(path);
    }
    RealisationCheck rc = verify_realisation(path, m);
    if (!rc.realises) {
        if (check_tie_breaking(m).holds)
            throw std::logic_error(
                "internal error: three-point condition held under tie-breaking but the "
                "farthest-pair path does not realise the metric");
        return std::nullopt;
    }
    return path;
}

}  // namespace spanmet
