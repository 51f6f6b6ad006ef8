#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spanmet/graph.hpp"
#include "spanmet/metric.hpp"

namespace spanmet {

// Wire formats: csv (corner cell, label header, labelled rows), lower
// (PHYLIP-style: label then the strictly lower triangle), json ({labels,
// matrix} with entries as exact numeric strings).
enum class Format { Csv, Lower, Json };

std::optional<Format> format_from_string(const std::string& s);

struct RawMetricInput {
    std::vector<std::string> labels;
    RationalMatrix dist;
};

// Parses into exact rationals. Throws ParseError on malformed input: bad or
// negative tokens, NaN/inf, ragged rows, duplicate labels.
RawMetricInput parse_metric_input(std::istream& in, Format format);

// parse(serialize(m)) == m exactly, for every format. Throws
// std::invalid_argument when a label cannot survive the format's syntax.
std::string serialize_metric(const FiniteMetricSpace& m, Format format);

// DOT rendering with exact weight labels, edge lines sorted.
std::string to_dot(const WeightedGraph& g);

// {labels, edges: [{u, v, weight}]} with exact weight tokens.
std::string graph_json(const WeightedGraph& g);

}  // namespace spanmet
