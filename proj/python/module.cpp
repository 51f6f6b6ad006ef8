#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "spanmet/conditions.hpp"
#include "spanmet/geodesic.hpp"
#include "spanmet/metric.hpp"
#include "spanmet/oracle.hpp"
#include "spanmet/rational.hpp"
#include "spanmet/recognition.hpp"
#include "spanmet/report.hpp"

namespace py = pybind11;

namespace {

using namespace spanmet;

Rational cell_to_rational(const py::handle& h) {
    if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
    if (py::isinstance<py::bool_>(h))
        throw std::invalid_argument("matrix entries must be strings or ints");
    if (py::isinstance<py::int_>(h))
        return parse_rational(py::str(h).cast<std::string>());
    throw std::invalid_argument("matrix entries must be strings or ints (floats are inexact)");
}

RationalMatrix matrix_from_py(const py::sequence& rows) {
    const int n = static_cast<int>(py::len(rows));
    RationalMatrix dist(n);
    for (int i = 0; i < n; ++i) {
        py::sequence row = rows[i].cast<py::sequence>();
        if (static_cast<int>(py::len(row)) != n)
            throw std::invalid_argument("matrix must be square");
        for (int j = 0; j < n; ++j) dist(i, j) = cell_to_rational(row[j]);
    }
    return dist;
}

std::vector<std::string> labels_or_default(const std::optional<std::vector<std::string>>& labels,
                                           int n) {
    if (labels) return *labels;
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
    return out;
}

FiniteMetricSpace make_space(const py::sequence& rows,
                             const std::optional<std::vector<std::string>>& labels) {
    RationalMatrix dist = matrix_from_py(rows);
    auto checked = validate_metric(dist, labels_or_default(labels, dist.n));
    if (auto* violation = std::get_if<MetricViolation>(&checked))
        throw std::invalid_argument("not a metric: " + violation_kind_name(violation->kind));
    return std::get<FiniteMetricSpace>(std::move(checked));
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::null: return py::none();
        case nlohmann::ordered_json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::ordered_json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::ordered_json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::ordered_json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::ordered_json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::ordered_json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::ordered_json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: throw std::logic_error("unexpected json node");
    }
}

py::object json_text_to_py(const std::string& text) {
    return json_to_py(nlohmann::ordered_json::parse(text));
}

py::list edges_py(const WeightedGraph& g) {
    py::list out;
    for (const Edge& e : g.edges) {
        py::dict d;
        d["u"] = e.u;
        d["v"] = e.v;
        d["weight"] = exact_token(e.w);
        out.append(d);
    }
    return out;
}

py::object triplet_py(const std::optional<std::array<int, 3>>& t) {
    if (!t) return py::none();
    return py::make_tuple((*t)[0], (*t)[1], (*t)[2]);
}

py::dict condition_py(const ConditionResult& c) {
    py::dict out;
    out["holds"] = c.holds;
    out["witness"] = triplet_py(c.witness);
    out["witness_median"] = c.certificate ? py::object(py::int_(*c.certificate)) : py::none();
    return out;
}

}  // namespace

PYBIND11_MODULE(spanmet, m) {
    m.doc() = "exact recognition of spanning tree and spanning path metrics";

    m.def(
        "validate",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels) {
            RationalMatrix dist = matrix_from_py(rows);
            std::vector<std::string> names = labels_or_default(labels, dist.n);
            auto checked = validate_metric(dist, names);
            if (auto* violation = std::get_if<MetricViolation>(&checked))
                return json_text_to_py(validation_json(names, *violation));
            return json_text_to_py(validation_json(names, std::nullopt));
        },
        py::arg("matrix"), py::arg("labels") = std::nullopt,
        "Check the metric axioms; returns the validation document as a dict.");

    m.def(
        "analyze",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels,
           int jobs, bool verify, bool timings) {
            FiniteMetricSpace space = make_space(rows, labels);
            AnalysisOptions options{jobs, verify, timings};
            return json_text_to_py(report_json(run_analysis(space, options)));
        },
        py::arg("matrix"), py::arg("labels") = std::nullopt, py::arg("jobs") = 1,
        py::arg("verify") = false, py::arg("timings") = false,
        "Full analysis report as a dict (same document as the CLI).");

    m.def(
        "median",
        [](const py::sequence& rows, int x, int y, int z,
           const std::optional<std::vector<std::string>>& labels) -> std::optional<int> {
            return median(make_space(rows, labels), x, y, z);
        },
        py::arg("matrix"), py::arg("x"), py::arg("y"), py::arg("z"),
        py::arg("labels") = std::nullopt);

    m.def(
        "fourth_point",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels,
           int jobs) { return condition_py(fourth_point_condition(make_space(rows, labels), jobs)); },
        py::arg("matrix"), py::arg("labels") = std::nullopt, py::arg("jobs") = 1);

    m.def(
        "three_point",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels,
           int jobs) { return condition_py(three_point_condition(make_space(rows, labels), jobs)); },
        py::arg("matrix"), py::arg("labels") = std::nullopt, py::arg("jobs") = 1);

    m.def(
        "roundaboutness",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels,
           int jobs) {
            Roundaboutness r = roundaboutness(make_space(rows, labels), jobs);
            py::dict out;
            out["rho"] = rational_string(r.rho);
            out["decimal"] = r.decimal;
            out["argmax"] = triplet_py(r.argmax);
            return out;
        },
        py::arg("matrix"), py::arg("labels") = std::nullopt, py::arg("jobs") = 1);

    m.def(
        "path_deviance",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels,
           int jobs) {
            PathDeviance d = path_deviance(make_space(rows, labels), jobs);
            py::dict out;
            out["value"] = rational_string(d.value);
            out["decimal"] = d.decimal;
            out["argmax"] = triplet_py(d.argmax);
            return out;
        },
        py::arg("matrix"), py::arg("labels") = std::nullopt, py::arg("jobs") = 1);

    m.def(
        "hyperbolicity",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels,
           int jobs) { return rational_string(hyperbolicity(make_space(rows, labels), jobs)); },
        py::arg("matrix"), py::arg("labels") = std::nullopt, py::arg("jobs") = 1);

    m.def(
        "metric_interval",
        [](const py::sequence& rows, int x, int y,
           const std::optional<std::vector<std::string>>& labels) {
            return metric_interval(make_space(rows, labels), x, y);
        },
        py::arg("matrix"), py::arg("x"), py::arg("y"), py::arg("labels") = std::nullopt);

    m.def(
        "classify_edge",
        [](const py::sequence& rows, int x, int y,
           const std::optional<std::vector<std::string>>& labels) {
            EdgeClass c = classify_edge(make_space(rows, labels), x, y);
            py::dict out;
            out["basic"] = c.basic;
            out["witness"] = c.witness ? py::object(py::int_(*c.witness)) : py::none();
            return out;
        },
        py::arg("matrix"), py::arg("x"), py::arg("y"), py::arg("labels") = std::nullopt);

    m.def(
        "basic_geodesic_graph",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels,
           int jobs) { return edges_py(basic_geodesic_graph(make_space(rows, labels), jobs)); },
        py::arg("matrix"), py::arg("labels") = std::nullopt, py::arg("jobs") = 1);

    m.def(
        "mst",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels) {
            MstResult r = mst(complete_graph(make_space(rows, labels)));
            py::dict out;
            out["edges"] = edges_py(r.tree);
            out["unique_certified"] = r.unique_certified;
            return out;
        },
        py::arg("matrix"), py::arg("labels") = std::nullopt);

    m.def(
        "recognize",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels,
           int jobs) {
            RecognitionVerdict v = recognize(make_space(rows, labels), jobs);
            py::dict out;
            out["is_spanning_tree_metric"] = v.is_spanning_tree_metric;
            out["is_spanning_path_metric"] = v.is_spanning_path_metric;
            out["tie_breaking"] = v.tie_breaking;
            out["realizing_edges"] =
                v.realizing_graph ? py::object(edges_py(*v.realizing_graph)) : py::none();
            return out;
        },
        py::arg("matrix"), py::arg("labels") = std::nullopt, py::arg("jobs") = 1);

    m.def(
        "recognize_path",
        [](const py::sequence& rows, const std::optional<std::vector<std::string>>& labels,
           int jobs) -> py::object {
            auto path = recognize_path(make_space(rows, labels), jobs);
            return path ? py::object(edges_py(*path)) : py::none();
        },
        py::arg("matrix"), py::arg("labels") = std::nullopt, py::arg("jobs") = 1);

    m.def(
        "generate",
        [](const std::string& kind, int n, std::uint64_t seed, int dim,
           const std::string& noise, const std::string& wmin, const std::string& wmax) {
            GeneratorSpec spec;
            auto k = generator_kind_from_string(kind);
            if (!k) throw std::invalid_argument("unknown generator kind '" + kind + "'");
            spec.kind = *k;
            spec.n = n;
            spec.seed = seed;
            spec.dim = dim;
            spec.noise = parse_rational(noise);
            spec.weight_min = parse_rational(wmin);
            spec.weight_max = parse_rational(wmax);
            GeneratedMetric made = generate(spec);
            py::dict out;
            out["labels"] = made.space.labels();
            py::list rows;
            for (int i = 0; i < made.space.size(); ++i) {
                py::list row;
                for (int j = 0; j < made.space.size(); ++j)
                    row.append(exact_token(made.space.d(i, j)));
                rows.append(row);
            }
            out["matrix"] = rows;
            out["tree"] = made.tree ? py::object(edges_py(*made.tree)) : py::none();
            return out;
        },
        py::arg("kind") = "tree", py::arg("n") = 5, py::arg("seed") = 0, py::arg("dim") = 2,
        py::arg("noise") = "1/100", py::arg("wmin") = "1", py::arg("wmax") = "1000",
        "Seeded random metric; matrix entries are exact strings.");
}
