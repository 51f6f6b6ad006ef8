#pragma once

#include <optional>
#include <tuple>

#include "spanmet/graph.hpp"
#include "spanmet/metric.hpp"

namespace spanmet {

struct EdgeClass {
    PointPair edge;               // normalized (min, max)
    bool basic = true;
    std::optional<int> witness;   // lowest z != x,y with d(x,z) + d(z,y) = d(x,y)
};

// Basic unless some third point lies on the interval between x and y. A
// longer relay chain through several points always puts its first point on
// that interval, so the single-witness scan is equivalent to chains of any
// length (cross-checked against brute_force_edge_class in the oracle).
EdgeClass classify_edge(const FiniteMetricSpace& m, int x, int y);

// G_M: the subgraph of K_M on the basic edges, weighted by the metric.
WeightedGraph basic_geodesic_graph(const FiniteMetricSpace& m, int jobs = 1);

struct RealisationCheck {
    bool realises = false;
    // (i, j, d_G, d_M) for the lexicographically first differing pair
    std::optional<std::tuple<int, int, Rational, Rational>> first_mismatch;
};

// True iff the shortest path metric of g reproduces m exactly. Throws
// std::invalid_argument when g is disconnected or labelled differently.
RealisationCheck verify_realisation(const WeightedGraph& g, const FiniteMetricSpace& m);

}  // namespace spanmet
