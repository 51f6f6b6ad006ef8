#pragma once

#include <string>
#include <vector>

#include "spanmet/metric.hpp"

namespace spanmet {

struct Edge {
    int u = 0;  // u < v
    int v = 0;
    Rational w;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v && a.w == b.w;
    }
};

// Simple undirected graph with positive edge weights; edges are kept unique
// and sorted lexicographically by (u, v).
struct WeightedGraph {
    std::vector<std::string> labels;
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(labels.size()); }
};

void sort_edges(WeightedGraph& g);

// K_M: the complete graph weighted by the metric.
WeightedGraph complete_graph(const FiniteMetricSpace& m);

bool is_connected(const WeightedGraph& g);
std::vector<int> vertex_degrees(const WeightedGraph& g);
bool is_tree(const WeightedGraph& g);
// A tree whose vertices all have degree <= 2 (single vertices and single
// edges count).
bool is_path_graph(const WeightedGraph& g);
Rational total_weight(const WeightedGraph& g);

// Same labels, same edges, same weights.
bool same_graph(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace spanmet
