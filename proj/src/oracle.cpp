#include "spanmet/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>

#include "spanmet/rational.hpp"

namespace spanmet {

namespace {

Rational ratio(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Decodes a tree sequence (n-2 values in [0, n)) into its n-1 edges,
// normalized and sorted. Bijective with labelled trees on n >= 3 vertices.
void decode_tree_sequence(const std::vector<int>& seq, int n, std::vector<PointPair>& edges) {
    edges.clear();
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<size_t>(s)];
    for (int s : seq) {
        int leaf = 0;
        while (degree[static_cast<size_t>(leaf)] != 1) ++leaf;
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        degree[static_cast<size_t>(leaf)] = 0;
        --degree[static_cast<size_t>(s)];
    }
    int a = -1;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<size_t>(v)] == 1) {
            if (a < 0) {
                a = v;
            } else {
                edges.emplace_back(a, v);
                break;
            }
        }
    std::sort(edges.begin(), edges.end());
}

}  // namespace

RationalMatrix apsp(const WeightedGraph& g) {
    const int n = g.size();
    RationalMatrix dist(n);
    Matrix<char> reach(n);
    for (int i = 0; i < n; ++i) reach(i, i) = 1;
    for (const Edge& e : g.edges) {
        if (e.u < 0 || e.v >= n || e.u >= e.v)
            throw std::invalid_argument("apsp: edge endpoints out of range");
        if (!reach(e.u, e.v) || e.w < dist(e.u, e.v)) {
            dist(e.u, e.v) = e.w;
            dist(e.v, e.u) = e.w;
            reach(e.u, e.v) = reach(e.v, e.u) = 1;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!reach(i, k)) continue;
            for (int j = 0; j < n; ++j) {
                if (!reach(k, j)) continue;
                Rational t = dist(i, k) + dist(k, j);
                if (!reach(i, j) || t < dist(i, j)) {
                    dist(i, j) = std::move(t);
                    reach(i, j) = 1;
                }
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!reach(i, j)) throw std::invalid_argument("apsp: graph is disconnected");
    return dist;
}

MstEnumeration enumerate_min_spanning_trees(const FiniteMetricSpace& m, int cap) {
    const int n = m.size();
    if (n > cap)
        throw std::invalid_argument("enumerate_min_spanning_trees: n exceeds the cap");
    MstEnumeration out;
    out.min_weight = 0;
    if (n == 1) {
        out.trees.push_back({});
        return out;
    }
    if (n == 2) {
        out.min_weight = m.d(0, 1);
        out.trees.push_back({PointPair{0, 1}});
        return out;
    }
    with_ints(m, [&](const auto& w) {
        using Int = std::decay_t<decltype(w(0, 0))>;
        std::vector<int> seq(static_cast<size_t>(n - 2), 0);
        std::vector<PointPair> edges;
        bool have = false;
        Int best = 0;
        for (;;) {
            decode_tree_sequence(seq, n, edges);
            Int total = 0;
            for (const PointPair& e : edges) total += w(e.first, e.second);
            if (!have || total < best) {
                have = true;
                best = std::move(total);
                out.trees.clear();
                out.trees.push_back(edges);
            } else if (total == best) {
                out.trees.push_back(edges);
            }
            size_t pos = 0;
            while (pos < seq.size() && ++seq[pos] == n) seq[pos++] = 0;
            if (pos == seq.size()) break;
        }
        out.min_weight = ratio(to_bigint(best), m.scaled().scale);
        return 0;
    });
    std::sort(out.trees.begin(), out.trees.end());
    return out;
}

Rational brute_force_tsp(const FiniteMetricSpace& m, int cap) {
    const int n = m.size();
    if (n < 3 || n > cap) throw std::invalid_argument("brute_force_tsp: n out of range");
    return with_ints(m, [&](const auto& w) {
        using Int = std::decay_t<decltype(w(0, 0))>;
        std::vector<int> perm(static_cast<size_t>(n - 1));
        std::iota(perm.begin(), perm.end(), 1);
        bool have = false;
        Int best = 0;
        do {
            // each tour and its reflection visit the same edges
            if (perm.front() > perm.back()) continue;
            Int total = w(0, perm.front()) + w(perm.back(), 0);
            for (size_t i = 0; i + 1 < perm.size(); ++i) total += w(perm[i], perm[i + 1]);
            if (!have || total < best) {
                have = true;
                best = std::move(total);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return ratio(to_bigint(best), m.scaled().scale);
    });
}

bool brute_force_edge_class(const FiniteMetricSpace& m, int x, int y, int cap) {
    const int n = m.size();
    if (n > cap) throw std::invalid_argument("brute_force_edge_class: n exceeds the cap");
    if (x < 0 || y < 0 || x >= n || y >= n || x == y)
        throw std::invalid_argument("brute_force_edge_class: bad point pair");
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != x && v != y) rest.push_back(v);
    const int r = static_cast<int>(rest.size());
    return with_ints(m, [&](const auto& w) {
        using Int = std::decay_t<decltype(w(0, 0))>;
        const Int target = w(x, y);
        std::vector<int> chain;
        for (unsigned mask = 1; mask < (1u << r); ++mask) {
            chain.clear();
            for (int i = 0; i < r; ++i)
                if (mask & (1u << i)) chain.push_back(rest[static_cast<size_t>(i)]);
            do {
                Int total = w(x, chain.front()) + w(chain.back(), y);
                for (size_t i = 0; i + 1 < chain.size(); ++i) total += w(chain[i], chain[i + 1]);
                if (total == target) return false;
            } while (std::next_permutation(chain.begin(), chain.end()));
        }
        return true;
    });
}

namespace {

constexpr std::int64_t kGrain = 1'000'000;
constexpr int kRetries = 64;

// Raw engine output reduced by modulo: keeps the stream identical across
// platforms, and the bias at these bounds is irrelevant for test data.
std::uint64_t draw_below(std::mt19937_64& eng, std::uint64_t bound) { return eng() % bound; }

std::vector<PointPair> random_tree_edges(std::mt19937_64& eng, int n) {
    std::vector<PointPair> edges;
    if (n == 2) edges.emplace_back(0, 1);
    if (n < 3) return edges;
    std::vector<int> seq(static_cast<size_t>(n - 2));
    for (int& s : seq) s = static_cast<int>(draw_below(eng, static_cast<std::uint64_t>(n)));
    decode_tree_sequence(seq, n, edges);
    return edges;
}

std::vector<Rational> distinct_weights(std::mt19937_64& eng, int count, const Rational& lo,
                                       const Rational& hi) {
    const Rational span = hi - lo;
    std::set<std::int64_t> taken;
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        auto g = static_cast<std::int64_t>(draw_below(eng, kGrain + 1));
        if (!taken.insert(g).second) continue;
        out.push_back(lo + span * ratio(BigInt(static_cast<long>(g)), BigInt(kGrain)));
    }
    return out;
}

RationalMatrix tree_path_sums(int n, const std::vector<PointPair>& edges,
                              const std::vector<Rational>& weights) {
    std::vector<std::vector<std::pair<int, size_t>>> adj(static_cast<size_t>(n));
    for (size_t e = 0; e < edges.size(); ++e) {
        adj[static_cast<size_t>(edges[e].first)].emplace_back(edges[e].second, e);
        adj[static_cast<size_t>(edges[e].second)].emplace_back(edges[e].first, e);
    }
    RationalMatrix dist(n);
    std::vector<int> stack;
    for (int src = 0; src < n; ++src) {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        seen[static_cast<size_t>(src)] = 1;
        stack.assign(1, src);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, e] : adj[static_cast<size_t>(v)])
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = 1;
                    dist(src, u) = dist(src, v) + weights[e];
                    stack.push_back(u);
                }
        }
    }
    return dist;
}

std::vector<std::string> point_labels(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return labels;
}

// floor(sqrt(s) * 10^24) / 10^24, exact in rational arithmetic; the
// approximated matrix is revalidated, so the floor never leaks an invalid
// metric out of the generator.
Rational sqrt_approx(const Rational& s) {
    const BigInt b = pow10(24);
    BigInt rad = s.get_num() * s.get_den() * b * b;
    return ratio(sqrt(rad), s.get_den() * b);
}

RationalMatrix sample_point_cloud(std::mt19937_64& eng, int n, int dim, bool euclidean) {
    std::vector<std::vector<Rational>> pts(static_cast<size_t>(n));
    for (auto& p : pts) {
        p.reserve(static_cast<size_t>(dim));
        for (int c = 0; c < dim; ++c) {
            auto raw = static_cast<long>(draw_below(eng, kGrain + 1));
            p.push_back(ratio(BigInt(raw), BigInt(1000)));
        }
    }
    RationalMatrix dist(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational acc = 0;
            for (int c = 0; c < dim; ++c) {
                Rational diff = pts[static_cast<size_t>(i)][static_cast<size_t>(c)] -
                                pts[static_cast<size_t>(j)][static_cast<size_t>(c)];
                acc += euclidean ? Rational(diff * diff) : Rational(abs(diff));
            }
            dist(i, j) = euclidean ? sqrt_approx(acc) : acc;
            dist(j, i) = dist(i, j);
        }
    return dist;
}

GeneratedMetric make_tree_metric(std::mt19937_64& eng, const GeneratorSpec& spec) {
    const int n = spec.n;
    std::vector<PointPair> edges = random_tree_edges(eng, n);
    std::vector<Rational> weights =
        distinct_weights(eng, static_cast<int>(edges.size()), spec.weight_min, spec.weight_max);
    RationalMatrix dist = tree_path_sums(n, edges, weights);
    auto checked = validate_metric(dist, point_labels(n));
    if (!std::holds_alternative<FiniteMetricSpace>(checked))
        throw std::logic_error("generate: tree path sums failed to validate");
    WeightedGraph tree;
    tree.labels = point_labels(n);
    for (size_t e = 0; e < edges.size(); ++e)
        tree.edges.push_back({edges[e].first, edges[e].second, weights[e]});
    return {std::get<FiniteMetricSpace>(std::move(checked)), std::move(tree)};
}

}  // namespace

std::optional<GeneratorSpec::Kind> generator_kind_from_string(const std::string& s) {
    using Kind = GeneratorSpec::Kind;
    if (s == "tree") return Kind::Tree;
    if (s == "euclidean") return Kind::Euclidean;
    if (s == "l1") return Kind::L1;
    if (s == "perturbed-tree") return Kind::PerturbedTree;
    return std::nullopt;
}

GeneratedMetric generate(const GeneratorSpec& spec) {
    using Kind = GeneratorSpec::Kind;
    if (spec.n < 1) throw std::invalid_argument("generate: n must be at least 1");
    if (spec.kind == Kind::Tree || spec.kind == Kind::PerturbedTree) {
        if (spec.weight_min <= 0 || spec.weight_max <= spec.weight_min)
            throw std::invalid_argument("generate: need 0 < weight_min < weight_max");
    }
    if (spec.kind == Kind::Euclidean || spec.kind == Kind::L1) {
        if (spec.dim < 1) throw std::invalid_argument("generate: dim must be at least 1");
    }
    if (spec.kind == Kind::PerturbedTree && spec.noise <= 0)
        throw std::invalid_argument("generate: noise must be positive");

    std::mt19937_64 eng(spec.seed);
    const int n = spec.n;

    switch (spec.kind) {
        case Kind::Tree:
            return make_tree_metric(eng, spec);
        case Kind::Euclidean:
        case Kind::L1: {
            // coincident or nearly collinear draws can fail the axioms (the
            // euclidean entries are floored approximations): resample
            for (int attempt = 0; attempt < kRetries; ++attempt) {
                RationalMatrix dist =
                    sample_point_cloud(eng, n, spec.dim, spec.kind == Kind::Euclidean);
                auto checked = validate_metric(dist, point_labels(n));
                if (std::holds_alternative<FiniteMetricSpace>(checked))
                    return {std::get<FiniteMetricSpace>(std::move(checked)), std::nullopt};
            }
            throw std::runtime_error("generate: point cloud retry budget exhausted");
        }
        case Kind::PerturbedTree: {
            GeneratedMetric base = make_tree_metric(eng, spec);
            // additive pair noise in [noise, 2*noise]: the ceiling never
            // exceeds the floors' sum, so the axioms survive every draw
            for (int attempt = 0; attempt < kRetries; ++attempt) {
                RationalMatrix dist = base.space.matrix();
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        auto g = static_cast<long>(draw_below(eng, kGrain + 1));
                        Rational bump =
                            spec.noise * (1 + ratio(BigInt(g), BigInt(kGrain)));
                        dist(i, j) += bump;
                        dist(j, i) = dist(i, j);
                    }
                auto checked = validate_metric(dist, point_labels(n));
                if (std::holds_alternative<FiniteMetricSpace>(checked))
                    return {std::get<FiniteMetricSpace>(std::move(checked)), std::nullopt};
            }
            throw std::runtime_error("generate: perturbation retry budget exhausted");
        }
    }
    throw std::invalid_argument("generate: unknown kind");
}

}  // namespace spanmet
