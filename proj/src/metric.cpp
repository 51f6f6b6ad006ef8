#include "spanmet/metric.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <stdexcept>

#include "spanmet/parallel.hpp"

namespace spanmet {

namespace {

constexpr std::int64_t kSmallLimit = std::int64_t{1} << 59;

// Triangle scan on the integer view. Returns the first (i, j, k) in
// lexicographic order with d(i,k) > d(i,j) + d(j,k), restricted to i < k
// (the symmetric tuple (k, j, i) covers the rest).
template <class Int>
std::optional<std::array<int, 3>> first_triangle_violation(const Matrix<Int>& s, int jobs) {
    int n = s.n;
    std::vector<std::optional<std::array<int, 3>>> slot(static_cast<size_t>(n));
    detail::parallel_for_index(n, jobs, [&](int i) {
        auto& found = slot[static_cast<size_t>(i)];
        for (int j = 0; j < n && !found; ++j) {
            if (j == i) continue;
            for (int k = i + 1; k < n; ++k) {
                if (k == j) continue;
                if (s(i, k) > s(i, j) + s(j, k)) {
                    found = std::array<int, 3>{i, j, k};
                    break;
                }
            }
        }
    });
    for (const auto& s_i : slot)
        if (s_i) return s_i;
    return std::nullopt;
}

}  // namespace

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::Asymmetry: return "asymmetry";
        case ViolationKind::ZeroOffDiagonal: return "zero-off-diagonal";
        case ViolationKind::Negative: return "negative";
        case ViolationKind::NonzeroDiagonal: return "nonzero-diagonal";
        case ViolationKind::Triangle: return "triangle";
    }
    return "unknown";
}

ScaledMetric build_scaled(const RationalMatrix& dist) {
    ScaledMetric out;
    int n = dist.n;
    out.big = Matrix<BigInt>(n);
    BigInt d = 1;
    for (const Rational& q : dist.cells) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den().get_mpz_t());
    out.scale = d;
    bool fits = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational& q = dist(i, j);
            BigInt v = q.get_num() * (d / q.get_den());
            if (fits && (!v.fits_slong_p() || v > kSmallLimit || v < -kSmallLimit)) fits = false;
            out.big(i, j) = std::move(v);
        }
    if (fits) {
        Matrix<std::int64_t> small(n);
        for (size_t c = 0; c < out.big.cells.size(); ++c)
            small.cells[c] = static_cast<std::int64_t>(out.big.cells[c].get_si());
        out.small = std::move(small);
    }
    return out;
}

std::variant<FiniteMetricSpace, MetricViolation> validate_metric(
    const RationalMatrix& dist, const std::vector<std::string>& labels, int jobs) {
    int n = dist.n;
    if (n < 1) throw std::invalid_argument("metric space needs at least one point");
    if (dist.cells.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw std::invalid_argument("distance matrix is not square");
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label count does not match matrix size");
    {
        std::set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw std::invalid_argument("duplicate label '" + l + "'");
    }

    // cell-level axioms, row-major over the upper triangle plus the diagonal
    for (int i = 0; i < n; ++i) {
        if (dist(i, i) != 0)
            return MetricViolation{ViolationKind::NonzeroDiagonal, {i}, dist(i, i), Rational(0)};
        for (int j = i + 1; j < n; ++j) {
            if (dist(i, j) != dist(j, i))
                return MetricViolation{ViolationKind::Asymmetry, {i, j}, dist(i, j), dist(j, i)};
            if (dist(i, j) < 0)
                return MetricViolation{ViolationKind::Negative, {i, j}, dist(i, j), Rational(0)};
            if (dist(i, j) == 0)
                return MetricViolation{ViolationKind::ZeroOffDiagonal, {i, j}, dist(i, j), Rational(0)};
        }
    }

    auto scaled = std::make_shared<ScaledMetric>(build_scaled(dist));
    std::optional<std::array<int, 3>> bad;
    if (scaled->small)
        bad = first_triangle_violation(*scaled->small, jobs);
    else
        bad = first_triangle_violation(scaled->big, jobs);
    if (bad) {
        auto [i, j, k] = *bad;
        return MetricViolation{ViolationKind::Triangle, {i, j, k}, dist(i, k),
                               Rational(dist(i, j) + dist(j, k))};
    }
    return FiniteMetricSpace(labels, dist, std::move(scaled));
}

FiniteMetricSpace require_valid(const RationalMatrix& dist,
                                const std::vector<std::string>& labels) {
    auto r = validate_metric(dist, labels);
    if (auto* v = std::get_if<MetricViolation>(&r))
        throw std::logic_error("expected a valid metric, got " + violation_kind_name(v->kind));
    return std::get<FiniteMetricSpace>(std::move(r));
}

FiniteMetricSpace FiniteMetricSpace::rescaled(const Rational& factor) const {
    if (factor <= 0) throw std::invalid_argument("scale factor must be positive");
    RationalMatrix m(size());
    for (size_t c = 0; c < dist_.cells.size(); ++c) m.cells[c] = dist_.cells[c] * factor;
    return require_valid(m, labels_);
}

TieBreaking check_tie_breaking(const FiniteMetricSpace& m) {
    int n = m.size();
    TieBreaking out;
    struct Entry {
        const BigInt* v;
        PointPair p;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    const auto& big = m.scaled().big;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) entries.push_back({&big(i, j), {i, j}});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        int c = cmp(*a.v, *b.v);
        if (c != 0) return c < 0;
        return a.p < b.p;
    });
    for (size_t g = 0; g < entries.size();) {
        size_t h = g + 1;
        while (h < entries.size() && cmp(*entries[h].v, *entries[g].v) == 0) ++h;
        for (size_t a = g; a < h; ++a)
            for (size_t b = a + 1; b < h; ++b)
                out.colliding_pairs.emplace_back(entries[a].p, entries[b].p);
        g = h;
    }
    std::sort(out.colliding_pairs.begin(), out.colliding_pairs.end());
    out.holds = out.colliding_pairs.empty();
    return out;
}

PointSet metric_interval(const FiniteMetricSpace& m, int x, int y) {
    if (x == y) throw std::invalid_argument("metric interval requires two distinct points");
    return with_ints(m, [&](const auto& s) {
        PointSet out;
        for (int i = 0; i < s.n; ++i)
            if (s(x, i) + s(i, y) == s(x, y)) out.push_back(i);
        return out;
    });
}

}  // namespace spanmet
