#include "spanmet/geodesic.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "spanmet/parallel.hpp"

namespace spanmet {

EdgeClass classify_edge(const FiniteMetricSpace& m, int x, int y) {
    if (x == y) throw std::invalid_argument("edges join two distinct points");
    EdgeClass out;
    out.edge = {std::min(x, y), std::max(x, y)};
    with_ints(m, [&](const auto& s) {
        for (int z = 0; z < s.n; ++z) {
            if (z == x || z == y) continue;
            if (s(x, z) + s(z, y) == s(x, y)) {
                out.basic = false;
                out.witness = z;
                return 0;
            }
        }
        return 0;
    });
    return out;
}

WeightedGraph basic_geodesic_graph(const FiniteMetricSpace& m, int jobs) {
    int n = m.size();
    WeightedGraph g;
    g.labels = m.labels();
    std::vector<std::vector<Edge>> rows(static_cast<size_t>(n));
    detail::parallel_for_index(n, jobs, [&](int i) {
        for (int j = i + 1; j < n; ++j)
            if (classify_edge(m, i, j).basic) rows[static_cast<size_t>(i)].push_back({i, j, m.d(i, j)});
    });
    for (auto& row : rows)
        for (auto& e : row) g.edges.push_back(std::move(e));
    return g;
}

namespace {

// Single-source exact Dijkstra; distances as rationals. Unreached vertices
// stay disengaged (empty optional).
std::vector<std::optional<Rational>> dijkstra(const WeightedGraph& g, int src) {
    int n = g.size();
    std::vector<std::vector<std::pair<int, const Rational*>>> adj(static_cast<size_t>(n));
    for (const Edge& e : g.edges) {
        adj[static_cast<size_t>(e.u)].emplace_back(e.v, &e.w);
        adj[static_cast<size_t>(e.v)].emplace_back(e.u, &e.w);
    }
    std::vector<std::optional<Rational>> dist(static_cast<size_t>(n));
    using Item = std::pair<Rational, int>;
    auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
    dist[static_cast<size_t>(src)] = Rational(0);
    heap.push({Rational(0), src});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (*dist[static_cast<size_t>(v)] < d) continue;
        for (auto [w, len] : adj[static_cast<size_t>(v)]) {
            Rational cand = d + *len;
            auto& dw = dist[static_cast<size_t>(w)];
            if (!dw || cand < *dw) {
                dw = cand;
                heap.push({std::move(cand), w});
            }
        }
    }
    return dist;
}

}  // namespace

RealisationCheck verify_realisation(const WeightedGraph& g, const FiniteMetricSpace& m) {
    if (g.labels != m.labels())
        throw std::invalid_argument("graph and metric are labelled differently");
    if (!is_connected(g))
        throw std::invalid_argument("graph is disconnected; shortest path metric undefined");
    int n = m.size();
    RealisationCheck out;
    out.realises = true;
    for (int i = 0; i < n && out.realises; ++i) {
        auto row = dijkstra(g, i);
        for (int j = i + 1; j < n; ++j) {
            const Rational& dg = *row[static_cast<size_t>(j)];
            if (dg != m.d(i, j)) {
                out.realises = false;
                out.first_mismatch = {i, j, dg, m.d(i, j)};
                break;
            }
        }
    }
    return out;
}

}  // namespace spanmet
