#include "spanmet/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace spanmet {

void sort_edges(WeightedGraph& g) {
    std::sort(g.edges.begin(), g.edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
}

WeightedGraph complete_graph(const FiniteMetricSpace& m) {
    WeightedGraph g;
    g.labels = m.labels();
    int n = m.size();
    g.edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, m.d(i, j)});
    return g;
}

bool is_connected(const WeightedGraph& g) {
    int n = g.size();
    if (n == 0) return false;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (const Edge& e : g.edges) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(v)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++visited;
                stack.push_back(w);
            }
    }
    return visited == n;
}

std::vector<int> vertex_degrees(const WeightedGraph& g) {
    std::vector<int> deg(static_cast<size_t>(g.size()), 0);
    for (const Edge& e : g.edges) {
        ++deg[static_cast<size_t>(e.u)];
        ++deg[static_cast<size_t>(e.v)];
    }
    return deg;
}

bool is_tree(const WeightedGraph& g) {
    return static_cast<int>(g.edges.size()) == g.size() - 1 && is_connected(g);
}

bool is_path_graph(const WeightedGraph& g) {
    if (!is_tree(g)) return false;
    auto deg = vertex_degrees(g);
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d <= 2; });
}

Rational total_weight(const WeightedGraph& g) {
    Rational sum = 0;
    for (const Edge& e : g.edges) sum += e.w;
    return sum;
}

bool same_graph(const WeightedGraph& a, const WeightedGraph& b) {
    return a.labels == b.labels && a.edges == b.edges;
}

}  // namespace spanmet
