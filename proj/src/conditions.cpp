#include "spanmet/conditions.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spanmet/parallel.hpp"

namespace spanmet {

namespace {

// sign of a/b - c/d with b, d > 0
int cmp_ratio(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    __int128 lhs = static_cast<__int128>(a) * d;
    __int128 rhs = static_cast<__int128>(c) * b;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

int cmp_ratio(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
    return cmp(BigInt(a * d), BigInt(c * b));
}

template <class Int>
bool has_fourth_point(const Matrix<Int>& s, int x, int y, int z) {
    Int perim = s(x, y) + s(y, z) + s(z, x);
    for (int p = 0; p < s.n; ++p) {
        Int sum = s(x, p) + s(y, p) + s(z, p);
        if (sum + sum == perim) return true;
    }
    return false;
}

// Per-triplet extremum of a ratio num/den over triplets x < y < z, merged in
// x order so the argmax is the lexicographically first attaining triplet.
template <class Int, class Term>
struct RatioMax {
    Int num = 0;
    Int den = 1;  // 0/1 until a triplet is seen
    std::optional<std::array<int, 3>> argmax;

    void offer(Int n, Int d, int x, int y, int z) {
        if (!argmax || cmp_ratio(n, d, num, den) > 0) {
            num = n;
            den = d;
            argmax = std::array<int, 3>{x, y, z};
        }
    }
    void merge(const RatioMax& other) {  // call in slot order
        if (!other.argmax) return;
        if (!argmax || cmp_ratio(other.num, other.den, num, den) > 0) *this = other;
    }
};

struct MinSumTerm {};   // roundaboutness: min_i of distance sums
struct SlackTerm {};    // path deviance: perimeter - 2 * max side

template <class Int, class Term>
RatioMax<Int, Term> scan_triplets(const Matrix<Int>& s, int jobs) {
    int n = s.n;
    std::vector<RatioMax<Int, Term>> slots(static_cast<size_t>(n));
    detail::parallel_for_index(n, jobs, [&](int x) {
        auto& best = slots[static_cast<size_t>(x)];
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                Int perim = s(x, y) + s(y, z) + s(z, x);
                if constexpr (std::is_same_v<Term, MinSumTerm>) {
                    Int low = s(x, 0) + s(y, 0) + s(z, 0);
                    for (int p = 1; p < n; ++p) {
                        Int sum = s(x, p) + s(y, p) + s(z, p);
                        if (sum < low) {
                            low = sum;
                            if (low + low == perim) break;  // cannot go below half
                        }
                    }
                    best.offer(low, perim, x, y, z);
                } else {
                    Int side = std::max({s(x, y), s(y, z), s(z, x)});
                    best.offer(perim - side - side, perim + perim, x, y, z);
                }
            }
    });
    RatioMax<Int, Term> out;
    for (const auto& s_x : slots) out.merge(s_x);
    return out;
}

}  // namespace

std::optional<int> median(const FiniteMetricSpace& m, int x, int y, int z) {
    if (x == y || x == z) return x;
    if (y == z) return y;
    return with_ints(m, [&](const auto& s) -> std::optional<int> {
        auto perim = s(x, y) + s(y, z) + s(z, x);
        for (int p = 0; p < s.n; ++p) {
            auto sum = s(x, p) + s(y, p) + s(z, p);
            if (sum + sum == perim) return p;
        }
        return std::nullopt;
    });
}

ConditionResult fourth_point_condition(const FiniteMetricSpace& m, int jobs) {
    int n = m.size();
    std::vector<std::optional<std::array<int, 3>>> slot(static_cast<size_t>(n));
    with_ints(m, [&](const auto& s) {
        detail::parallel_for_index(n, jobs, [&](int x) {
            auto& found = slot[static_cast<size_t>(x)];
            for (int y = x + 1; y < n && !found; ++y)
                for (int z = y + 1; z < n; ++z)
                    if (!has_fourth_point(s, x, y, z)) {
                        found = std::array<int, 3>{x, y, z};
                        break;
                    }
        });
        return 0;
    });
    for (const auto& w : slot)
        if (w) return {false, w, std::nullopt};
    return {};
}

ConditionResult three_point_condition(const FiniteMetricSpace& m, int jobs) {
    int n = m.size();
    std::vector<std::optional<std::array<int, 3>>> slot(static_cast<size_t>(n));
    with_ints(m, [&](const auto& s) {
        detail::parallel_for_index(n, jobs, [&](int x) {
            auto& found = slot[static_cast<size_t>(x)];
            for (int y = x + 1; y < n && !found; ++y)
                for (int z = y + 1; z < n; ++z) {
                    auto side = std::max({s(x, y), s(y, z), s(z, x)});
                    if (side + side != s(x, y) + s(y, z) + s(z, x)) {
                        found = std::array<int, 3>{x, y, z};
                        break;
                    }
                }
        });
        return 0;
    });
    for (const auto& w : slot)
        if (w) return {false, w, median(m, (*w)[0], (*w)[1], (*w)[2])};
    return {};
}

Roundaboutness roundaboutness(const FiniteMetricSpace& m, int jobs) {
    if (m.size() < 2) throw std::invalid_argument("roundaboutness needs at least two points");
    Roundaboutness out;
    out.rho = 0;
    if (m.size() >= 3) {
        with_ints(m, [&](const auto& s) {
            auto best = scan_triplets<std::decay_t<decltype(s(0, 0))>, MinSumTerm>(s, jobs);
            // rho = num/den - 1/2 = (2 num - den) / (2 den)
            BigInt num = to_bigint(best.num);
            BigInt den = to_bigint(best.den);
            out.rho = Rational(BigInt(2 * num - den), BigInt(2 * den));
            out.rho.canonicalize();
            out.argmax = best.argmax;
            return 0;
        });
    }
    out.decimal = decimal_string(out.rho);
    return out;
}

PathDeviance path_deviance(const FiniteMetricSpace& m, int jobs) {
    if (m.size() < 2) throw std::invalid_argument("path deviance needs at least two points");
    PathDeviance out;
    out.value = 0;
    if (m.size() >= 3) {
        with_ints(m, [&](const auto& s) {
            auto best = scan_triplets<std::decay_t<decltype(s(0, 0))>, SlackTerm>(s, jobs);
            out.value = Rational(to_bigint(best.num), to_bigint(best.den));
            out.value.canonicalize();
            out.argmax = best.argmax;
            return 0;
        });
    }
    out.decimal = decimal_string(out.value);
    return out;
}

Rational hyperbolicity(const FiniteMetricSpace& m, int jobs) {
    int n = m.size();
    if (n < 4) return Rational(0);
    return with_ints(m, [&](const auto& s) {
        using Int = std::decay_t<decltype(s(0, 0))>;
        std::vector<Int> slot(static_cast<size_t>(n), Int(0));
        detail::parallel_for_index(n, jobs, [&](int x) {
            Int best = 0;
            for (int y = x + 1; y < n; ++y)
                for (int z = y + 1; z < n; ++z)
                    for (int w = z + 1; w < n; ++w) {
                        Int s1 = s(x, y) + s(z, w);
                        Int s2 = s(x, z) + s(y, w);
                        Int s3 = s(x, w) + s(y, z);
                        if (s1 < s2) std::swap(s1, s2);
                        if (s1 < s3) std::swap(s1, s3);
                        Int gap = s1 - std::max(s2, s3);
                        if (gap > best) best = gap;
                    }
            slot[static_cast<size_t>(x)] = best;
        });
        Int top = 0;
        for (const Int& v : slot)
            if (v > top) top = v;
        Rational delta(to_bigint(top), BigInt(2 * m.scaled().scale));
        delta.canonicalize();
        return delta;
    });
}

}  // namespace spanmet
