#pragma once

#include <array>
#include <optional>

#include "spanmet/metric.hpp"

namespace spanmet {

struct ConditionResult {
    bool holds = true;
    // first violating triplet in lexicographic order, x < y < z
    std::optional<std::array<int, 3>> witness;
    // fourth point of the witness triplet when one exists (three-point
    // violations may still have one; fourth-point violations never do)
    std::optional<int> certificate;
};

// The point p with d(x,p) + d(y,p) + d(z,p) equal to half the perimeter of
// {x,y,z}, if any. Unique when it exists; repeated points are their own
// median.
std::optional<int> median(const FiniteMetricSpace& m, int x, int y, int z);

// Every triplet of distinct points admits a median. O(n^4).
ConditionResult fourth_point_condition(const FiniteMetricSpace& m, int jobs = 1);

// In every triplet the largest side equals half the perimeter. O(n^3).
ConditionResult three_point_condition(const FiniteMetricSpace& m, int jobs = 1);

struct Roundaboutness {
    Rational rho;
    std::optional<std::array<int, 3>> argmax;  // absent when n < 3
    std::string decimal;
};

// rho = max over distinct triplets of
//       (min_i sum of distances from i to the triplet) / perimeter - 1/2.
// Zero exactly when the fourth-point condition holds. Requires n >= 2.
Roundaboutness roundaboutness(const FiniteMetricSpace& m, int jobs = 1);

struct PathDeviance {
    Rational value;
    std::optional<std::array<int, 3>> argmax;
    std::string decimal;
};

// max over distinct triplets of (half perimeter - largest side) / perimeter;
// zero exactly when the three-point condition holds. Requires n >= 2.
PathDeviance path_deviance(const FiniteMetricSpace& m, int jobs = 1);

// Gromov four-point deviation: half the gap between the two largest of the
// three pair-sum matchings, maximized over quadruples.
Rational hyperbolicity(const FiniteMetricSpace& m, int jobs = 1);

}  // namespace spanmet
