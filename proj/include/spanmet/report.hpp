#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanmet/conditions.hpp"
#include "spanmet/graph.hpp"
#include "spanmet/metric.hpp"
#include "spanmet/recognition.hpp"

namespace spanmet {

struct AnalysisOptions {
    int jobs = 1;
    bool verify = false;   // cross-check against the brute-force oracles
    bool timings = false;  // capture per-phase wall time (breaks byte-identity)
};

// Outcome per oracle: "ok", "skipped (n > cap)", or "not applicable".
// A disagreement is an internal error and throws std::logic_error instead.
struct VerifySummary {
    std::string edge_classification;
    std::string mst_enumeration;
    std::string tsp_mst;
    std::string apsp_realisation;
};

struct AnalysisReport {
    FiniteMetricSpace space;
    TieBreaking tie_breaking;
    ConditionResult fourth_point;
    ConditionResult three_point;
    std::optional<Roundaboutness> rho;       // absent for a single point
    std::optional<PathDeviance> deviance;    // absent for a single point
    Rational delta;                          // hyperbolicity
    RecognitionVerdict verdict;
    std::optional<WeightedGraph> path;
    std::optional<VerifySummary> verify;
    std::vector<std::pair<std::string, double>> timings_ms;
};

AnalysisReport run_analysis(const FiniteMetricSpace& m, const AnalysisOptions& options = {});

// The full JSON document for `analyze`; deterministic except for the
// optional timings section.
std::string report_json(const AnalysisReport& report);

// The `validate` document: input digest, verdict, violation details if any.
std::string validation_json(const std::vector<std::string>& labels,
                            const std::optional<MetricViolation>& violation);

}  // namespace spanmet
