#pragma once

#include <string>
#include <vector>

#include "spanmet/metric.hpp"
#include "spanmet/rational.hpp"

namespace fixtures {

inline spanmet::FiniteMetricSpace space_from(const std::vector<std::vector<const char*>>& cells,
                                             std::vector<std::string> labels = {}) {
    const int n = static_cast<int>(cells.size());
    spanmet::RationalMatrix dist(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            dist(i, j) = spanmet::parse_rational(cells[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    return spanmet::require_valid(dist, labels);
}

// a - b - c with segment lengths 1 and 2
inline spanmet::FiniteMetricSpace path3() {
    return space_from({{"0", "1", "3"}, {"1", "0", "2"}, {"3", "2", "0"}}, {"a", "b", "c"});
}

// all three distances equal to one
inline spanmet::FiniteMetricSpace uniform_k3() {
    return space_from({{"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}}, {"x", "y", "z"});
}

// shortest-path metric of the unit 4-cycle v1 v2 v3 v4
inline spanmet::FiniteMetricSpace cycle4() {
    return space_from({{"0", "1", "2", "1"},
                       {"1", "0", "1", "2"},
                       {"2", "1", "0", "1"},
                       {"1", "2", "1", "0"}},
                      {"v1", "v2", "v3", "v4"});
}

// three leaves with pairwise distances 3, 5, 6 (tripod sums 1+2, 1+4, 2+4)
inline spanmet::FiniteMetricSpace star3() {
    return space_from({{"0", "3", "5"}, {"3", "0", "6"}, {"5", "6", "0"}}, {"x", "y", "z"});
}

// the same tripod with its center as a fourth point: c, x, y, z
inline spanmet::FiniteMetricSpace star4() {
    return space_from({{"0", "1", "2", "4"},
                       {"1", "0", "3", "5"},
                       {"2", "3", "0", "6"},
                       {"4", "5", "6", "0"}},
                      {"c", "x", "y", "z"});
}

}  // namespace fixtures
