#pragma once

#include <optional>

#include "spanmet/conditions.hpp"
#include "spanmet/graph.hpp"
#include "spanmet/metric.hpp"

namespace spanmet {

struct MstResult {
    WeightedGraph tree;
    // all edge weights pairwise distinct, which certifies uniqueness
    bool unique_certified = false;
};

// Kruskal over edges ordered by (weight, u, v). Throws std::invalid_argument
// on a disconnected input.
MstResult mst(const WeightedGraph& k);

struct CrossCheck {
    bool fourth_point = false;
    bool three_point = false;
    // under tie-breaking, the tree verdict and the fourth-point condition
    // must coincide; vacuously true otherwise
    bool theorem1_consistent = true;
};

struct RecognitionVerdict {
    bool is_spanning_tree_metric = false;
    bool is_spanning_path_metric = false;
    std::optional<WeightedGraph> realizing_graph;  // G_M, when it is a tree
    bool tie_breaking = false;
    CrossCheck cross_check;
};

// Decides membership through the edge count of the basic geodesic graph
// (valid with or without tie-breaking). When tie-breaking holds the verdict
// is cross-checked against the fourth-point condition, and a recognized tree
// is checked to be the MST of K_M and to realise m; any inconsistency is an
// internal error (std::logic_error).
RecognitionVerdict recognize(const FiniteMetricSpace& m, int jobs = 1);

// The spanning path realisation, when one exists: the points ordered by
// distance from the lexicographically smaller endpoint of the farthest pair.
// Returns nothing when the three-point condition fails, or (without
// tie-breaking) when the constructed path does not survive verification.
std::optional<WeightedGraph> recognize_path(const FiniteMetricSpace& m, int jobs = 1);

}  // namespace spanmet
