#include "spanmet/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "spanmet/rational.hpp"

namespace spanmet {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> nonempty_lines(std::istream& in) {
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream stream(content);
    while (std::getline(stream, cur)) {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        if (!trim(cur).empty()) lines.push_back(cur);
    }
    return lines;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

Rational parse_cell(const std::string& token) {
    Rational q = parse_rational(token);
    if (q < 0) throw ParseError("negative distance '" + token + "'");
    return q;
}

void check_labels(const std::vector<std::string>& labels) {
    std::set<std::string> seen;
    for (const std::string& l : labels) {
        if (l.empty()) throw ParseError("empty label");
        if (!seen.insert(l).second) throw ParseError("duplicate label '" + l + "'");
    }
}

RawMetricInput parse_csv(std::istream& in) {
    std::vector<std::string> lines = nonempty_lines(in);
    if (lines.empty()) throw ParseError("empty csv input");
    std::vector<std::string> header = split(lines[0], ',');
    const int n = static_cast<int>(header.size()) - 1;
    if (n < 1) throw ParseError("csv header needs a corner cell and at least one label");
    RawMetricInput out;
    out.labels.assign(header.begin() + 1, header.end());
    check_labels(out.labels);
    if (static_cast<int>(lines.size()) - 1 != n)
        throw ParseError("csv needs exactly " + std::to_string(n) + " data rows, got " +
                         std::to_string(lines.size() - 1));
    out.dist = RationalMatrix(n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::string> row = split(lines[static_cast<size_t>(i) + 1], ',');
        if (static_cast<int>(row.size()) != n + 1)
            throw ParseError("csv row length mismatch at row '" + row[0] + "'");
        if (row[0] != out.labels[static_cast<size_t>(i)])
            throw ParseError("csv row label '" + row[0] + "' does not match header order");
        for (int j = 0; j < n; ++j)
            out.dist(i, j) = parse_cell(row[static_cast<size_t>(j) + 1]);
    }
    return out;
}

RawMetricInput parse_lower(std::istream& in) {
    std::vector<std::string> lines = nonempty_lines(in);
    if (lines.empty()) throw ParseError("empty input");
    const int n = static_cast<int>(lines.size());
    RawMetricInput out;
    out.dist = RationalMatrix(n);
    for (int i = 0; i < n; ++i) {
        std::istringstream row(lines[static_cast<size_t>(i)]);
        std::vector<std::string> tokens{std::istream_iterator<std::string>(row),
                                        std::istream_iterator<std::string>()};
        if (static_cast<int>(tokens.size()) != i + 1)
            throw ParseError("row " + std::to_string(i + 1) + " needs a label and " +
                             std::to_string(i) + " entries");
        out.labels.push_back(tokens[0]);
        for (int j = 0; j < i; ++j) {
            out.dist(i, j) = parse_cell(tokens[static_cast<size_t>(j) + 1]);
            out.dist(j, i) = out.dist(i, j);
        }
    }
    check_labels(out.labels);
    return out;
}

RawMetricInput parse_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("json parse failed: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("matrix"))
        throw ParseError("json input needs 'labels' and 'matrix'");
    const auto& labels = doc["labels"];
    const auto& matrix = doc["matrix"];
    if (!labels.is_array() || !matrix.is_array())
        throw ParseError("'labels' and 'matrix' must be arrays");
    RawMetricInput out;
    for (const auto& l : labels) {
        if (!l.is_string()) throw ParseError("labels must be strings");
        out.labels.push_back(l.get<std::string>());
    }
    check_labels(out.labels);
    const int n = static_cast<int>(out.labels.size());
    if (n < 1) throw ParseError("json input needs at least one label");
    if (static_cast<int>(matrix.size()) != n) throw ParseError("matrix row count mismatch");
    out.dist = RationalMatrix(n);
    for (int i = 0; i < n; ++i) {
        const auto& row = matrix[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("matrix row " + std::to_string(i) + " length mismatch");
        for (int j = 0; j < n; ++j) {
            const auto& cell = row[static_cast<size_t>(j)];
            if (cell.is_string()) {
                out.dist(i, j) = parse_cell(cell.get<std::string>());
            } else if (cell.is_number_integer()) {
                out.dist(i, j) = parse_cell(std::to_string(cell.get<long long>()));
            } else {
                throw ParseError("matrix entries must be exact numeric strings");
            }
        }
    }
    return out;
}

void require_label_fits(const std::string& label, const std::string& forbidden,
                        const char* format) {
    if (label.find_first_of(forbidden) != std::string::npos || trim(label) != label)
        throw std::invalid_argument("label '" + label + "' is not representable in " + format);
}

// Bare DOT identifier or a quoted string.
std::string dot_id(const std::string& label) {
    bool bare = !label.empty() && !std::isdigit(static_cast<unsigned char>(label[0]));
    for (char c : label)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') bare = false;
    if (bare) return label;
    std::string quoted = "\"";
    for (char c : label) {
        if (c == '"' || c == '\\') quoted += '\\';
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

std::optional<Format> format_from_string(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "lower") return Format::Lower;
    if (s == "json") return Format::Json;
    return std::nullopt;
}

RawMetricInput parse_metric_input(std::istream& in, Format format) {
    switch (format) {
        case Format::Csv: return parse_csv(in);
        case Format::Lower: return parse_lower(in);
        case Format::Json: return parse_json(in);
    }
    throw ParseError("unknown format");
}

std::string serialize_metric(const FiniteMetricSpace& m, Format format) {
    const int n = m.size();
    std::string out;
    switch (format) {
        case Format::Csv: {
            out = ".";
            for (int j = 0; j < n; ++j) {
                require_label_fits(m.label(j), ",\n\r", "csv");
                out += "," + m.label(j);
            }
            out += "\n";
            for (int i = 0; i < n; ++i) {
                out += m.label(i);
                for (int j = 0; j < n; ++j) out += "," + exact_token(m.d(i, j));
                out += "\n";
            }
            return out;
        }
        case Format::Lower: {
            for (int i = 0; i < n; ++i) {
                require_label_fits(m.label(i), " \t\n\r", "lower");
                out += m.label(i);
                for (int j = 0; j < i; ++j) out += " " + exact_token(m.d(i, j));
                out += "\n";
            }
            return out;
        }
        case Format::Json: {
            nlohmann::ordered_json doc;
            doc["labels"] = m.labels();
            auto rows = nlohmann::ordered_json::array();
            for (int i = 0; i < n; ++i) {
                auto row = nlohmann::ordered_json::array();
                for (int j = 0; j < n; ++j) row.push_back(exact_token(m.d(i, j)));
                rows.push_back(std::move(row));
            }
            doc["matrix"] = std::move(rows);
            return doc.dump(2) + "\n";
        }
    }
    throw std::invalid_argument("unknown format");
}

std::string to_dot(const WeightedGraph& g) {
    std::vector<int> degree = vertex_degrees(g);
    std::vector<std::string> lines;
    for (int v = 0; v < g.size(); ++v)
        if (degree[static_cast<size_t>(v)] == 0)
            lines.push_back("  " + dot_id(g.labels[static_cast<size_t>(v)]) + ";");
    std::sort(lines.begin(), lines.end());
    std::vector<std::string> edge_lines;
    for (const Edge& e : g.edges)
        edge_lines.push_back("  " + dot_id(g.labels[static_cast<size_t>(e.u)]) + " -- " +
                             dot_id(g.labels[static_cast<size_t>(e.v)]) + " [label=\"" +
                             compact_rational_string(e.w) + "\"];");
    std::sort(edge_lines.begin(), edge_lines.end());
    std::string out = "graph {\n";
    for (const std::string& l : lines) out += l + "\n";
    for (const std::string& l : edge_lines) out += l + "\n";
    return out + "}\n";
}

std::string graph_json(const WeightedGraph& g) {
    nlohmann::ordered_json doc;
    doc["labels"] = g.labels;
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges) {
        nlohmann::ordered_json entry;
        entry["u"] = g.labels[static_cast<size_t>(e.u)];
        entry["v"] = g.labels[static_cast<size_t>(e.v)];
        entry["weight"] = exact_token(e.w);
        edges.push_back(std::move(entry));
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

}  // namespace spanmet
