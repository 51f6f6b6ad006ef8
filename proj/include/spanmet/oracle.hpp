#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanmet/graph.hpp"
#include "spanmet/metric.hpp"

namespace spanmet {

// Exact all-pairs shortest path distances (Floyd-Warshall). Throws
// std::invalid_argument on a disconnected graph.
RationalMatrix apsp(const WeightedGraph& g);

struct MstEnumeration {
    Rational min_weight;
    // every minimum-weight spanning tree as a sorted (u, v) edge list;
    // the list of trees is itself sorted
    std::vector<std::vector<PointPair>> trees;
};

// Exhaustive walk over all n^(n-2) labelled trees via their sequence
// encoding. Throws when n exceeds the cap.
MstEnumeration enumerate_min_spanning_trees(const FiniteMetricSpace& m, int cap = 8);

// Exact optimal tour length over all (n-1)!/2 tours. Requires 3 <= n <= cap.
Rational brute_force_tsp(const FiniteMetricSpace& m, int cap = 10);

// Literal relay-chain definition: true (basic) iff no permutation of any
// non-empty subset of the remaining points telescopes to d(x,y).
bool brute_force_edge_class(const FiniteMetricSpace& m, int x, int y, int cap = 6);

struct GeneratorSpec {
    enum class Kind { Tree, Euclidean, L1, PerturbedTree };

    Kind kind = Kind::Tree;
    int n = 5;
    std::uint64_t seed = 0;
    // tree edge weights are drawn pairwise distinct from this range
    Rational weight_min = Rational(1);
    Rational weight_max = Rational(1000);
    int dim = 2;                         // point-cloud kinds
    Rational noise = Rational(1, 100);   // perturbation magnitude
};

std::optional<GeneratorSpec::Kind> generator_kind_from_string(const std::string& s);

struct GeneratedMetric {
    FiniteMetricSpace space;
    std::optional<WeightedGraph> tree;  // the generator tree, for Kind::Tree
};

// Deterministic for a given spec. Tree metrics come from uniformly random
// labelled trees (sequence encoding) with pairwise distinct rational weights;
// point clouds use exact rational coordinates (Euclidean distances are
// replaced by high-precision rational square-root approximations and the
// result is revalidated exactly); perturbed trees resample bounded noise
// until the axioms hold, with a bounded retry budget (std::runtime_error
// when exhausted).
GeneratedMetric generate(const GeneratorSpec& spec);

}  // namespace spanmet
