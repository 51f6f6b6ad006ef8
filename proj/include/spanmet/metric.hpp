#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "spanmet/rational.hpp"

namespace spanmet {

template <class T>
struct Matrix {
    int n = 0;
    std::vector<T> cells;

    Matrix() = default;
    explicit Matrix(int size) : n(size), cells(static_cast<size_t>(size) * size) {}

    T& operator()(int i, int j) { return cells[static_cast<size_t>(i) * n + j]; }
    const T& operator()(int i, int j) const { return cells[static_cast<size_t>(i) * n + j]; }
};

using RationalMatrix = Matrix<Rational>;

// The distance matrix rescaled to integers by the common denominator `scale`.
// `small` is present when every entry fits int64 with enough headroom that
// sums of four entries and __int128 cross-products stay exact.
struct ScaledMetric {
    BigInt scale = 1;
    Matrix<BigInt> big;
    std::optional<Matrix<std::int64_t>> small;
};

ScaledMetric build_scaled(const RationalMatrix& dist);

enum class ViolationKind { Asymmetry, ZeroOffDiagonal, Negative, NonzeroDiagonal, Triangle };

std::string violation_kind_name(ViolationKind k);

// lhs/rhs restate the failed comparison exactly; for Triangle the indices
// (i, j, k) mean d(i,k) <= d(i,j) + d(j,k) was violated.
struct MetricViolation {
    ViolationKind kind;
    std::vector<int> indices;
    Rational lhs;
    Rational rhs;
};

class FiniteMetricSpace {
  public:
    int size() const { return dist_.n; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
    const Rational& d(int i, int j) const { return dist_(i, j); }
    const RationalMatrix& matrix() const { return dist_; }
    const ScaledMetric& scaled() const { return *scaled_; }

    // All distances multiplied by a positive factor; revalidated.
    FiniteMetricSpace rescaled(const Rational& factor) const;

  private:
    FiniteMetricSpace(std::vector<std::string> labels, RationalMatrix dist,
                      std::shared_ptr<const ScaledMetric> scaled)
        : labels_(std::move(labels)), dist_(std::move(dist)), scaled_(std::move(scaled)) {}

    std::vector<std::string> labels_;
    RationalMatrix dist_;
    std::shared_ptr<const ScaledMetric> scaled_;

    friend std::variant<FiniteMetricSpace, MetricViolation> validate_metric(
        const RationalMatrix& dist, const std::vector<std::string>& labels, int jobs);
};

// Checks the metric axioms exactly and returns either the space or the first
// violation in lexicographic index order. Throws std::invalid_argument for
// malformed input (empty, non-square, duplicate labels).
std::variant<FiniteMetricSpace, MetricViolation> validate_metric(
    const RationalMatrix& dist, const std::vector<std::string>& labels, int jobs = 1);

// Convenience for inputs known to be valid; throws std::logic_error otherwise.
FiniteMetricSpace require_valid(const RationalMatrix& dist,
                                const std::vector<std::string>& labels);

using PointPair = std::pair<int, int>;  // i < j

struct TieBreaking {
    bool holds = true;
    // every pair of equal-valued point pairs, sorted lexicographically
    std::vector<std::pair<PointPair, PointPair>> colliding_pairs;
};

TieBreaking check_tie_breaking(const FiniteMetricSpace& m);

using PointSet = std::vector<int>;  // sorted, distinct

// I(x,y) = { i : d(x,y) = d(x,i) + d(i,y) }; requires x != y.
PointSet metric_interval(const FiniteMetricSpace& m, int x, int y);

// Calls fn with the int64 view when available, the big-integer view
// otherwise. fn must be callable on Matrix<int64_t> and Matrix<BigInt>.
template <class Fn>
decltype(auto) with_ints(const FiniteMetricSpace& m, Fn&& fn) {
    const ScaledMetric& s = m.scaled();
    if (s.small) return fn(*s.small);
    return fn(s.big);
}

inline BigInt to_bigint(std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline const BigInt& to_bigint(const BigInt& v) { return v; }

}  // namespace spanmet
