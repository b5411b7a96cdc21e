#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "optnet/fillings.hpp"
#include "optnet/geometry.hpp"
#include "optnet/graph.hpp"
#include "optnet/metric_space.hpp"
#include "optnet/ratios.hpp"
#include "optnet/steiner.hpp"

namespace py = pybind11;

namespace {

using namespace optnet;

std::vector<Point2> to_points(const std::vector<std::pair<double, double>>& raw) {
  std::vector<Point2> points;
  points.reserve(raw.size());
  for (auto [x, y] : raw) points.push_back({x, y});
  return points;
}

FiniteMetricSpace to_space(const std::vector<std::vector<double>>& matrix) {
  return make_metric_space_from_doubles(matrix);
}

py::dict network_dict(const PlaneNetwork& network) {
  py::dict out;
  py::list vertices, edges;
  for (int v = 0; v < network.topology.num_vertices; ++v) {
    py::dict vertex;
    vertex["id"] = v;
    vertex["x"] = network.positions[v].x;
    vertex["y"] = network.positions[v].y;
    vertex["kind"] = network.topology.is_boundary(v) ? "terminal" : "steiner";
    vertices.append(vertex);
  }
  for (int e = 0; e < network.topology.num_edges(); ++e) {
    py::dict edge;
    edge["u"] = network.topology.edges[e].first;
    edge["v"] = network.topology.edges[e].second;
    edge["weight"] = network.edge_length(e);
    edges.append(edge);
  }
  out["vertices"] = vertices;
  out["edges"] = edges;
  out["length"] = network.length();
  return out;
}

py::dict tree_dict(const WeightedTree& tree, const Rat& value) {
  py::dict out;
  py::list edges, weights;
  for (auto [u, v] : tree.topology.edges) edges.append(py::make_tuple(u, v));
  for (const Rat& w : tree.weights) weights.append(to_double(w));
  out["num_vertices"] = tree.topology.num_vertices;
  out["boundary"] = tree.topology.boundary;
  out["edges"] = edges;
  out["weights"] = weights;
  out["value"] = to_double(value);
  out["value_exact"] = rat_to_string(value);
  return out;
}

py::object big_to_int(const BigInt& n) {
  std::ostringstream s;
  s << n;
  return py::module_::import("builtins").attr("int")(s.str());
}

}  // namespace

PYBIND11_MODULE(_optnet, m) {
  m.doc() = "optimal networks: spanning trees, Steiner trees, minimal fillings";

  m.def(
      "emst",
      [](const std::vector<std::pair<double, double>>& points) {
        return network_dict(euclidean_mst(to_points(points)).network);
      },
      py::arg("points"), "Euclidean minimal spanning tree of plane points.");

  m.def(
      "smt",
      [](const std::vector<std::pair<double, double>>& points, int nmax) {
        auto result = optnet::smt(to_points(points), nmax);
        py::dict out = network_dict(result.network);
        out["topology_index"] = result.topology_index;
        return out;
      },
      py::arg("points"), py::arg("nmax") = 8, "Steiner minimal tree of plane points.");

  m.def(
      "mf",
      [](const std::vector<std::vector<double>>& matrix, int nmax) {
        auto result = optnet::mf(to_space(matrix), nmax);
        return tree_dict(result.tree, result.value);
      },
      py::arg("matrix"), py::arg("nmax") = 8, "Minimal filling of a finite metric space.");

  m.def(
      "mpf",
      [](const std::vector<std::vector<double>>& matrix, int num_vertices,
         const std::vector<std::pair<int, int>>& edges, bool generalized) {
        auto space = to_space(matrix);
        TreeTopology topology;
        topology.num_vertices = num_vertices;
        topology.edges = edges;
        for (int b = 0; b < space.n; ++b) topology.boundary.push_back(b);
        auto result = optnet::mpf(space, topology, generalized);
        return tree_dict(result.tree, result.value);
      },
      py::arg("matrix"), py::arg("num_vertices"), py::arg("edges"),
      py::arg("generalized") = false,
      "Minimal parametric filling for a fixed tree topology (boundary = first n vertices).");

  m.def(
      "additivity",
      [](const std::vector<std::vector<double>>& matrix) {
        switch (check_four_point(to_space(matrix)).cls) {
          case AdditivityClass::Additive:
            return "additive";
          case AdditivityClass::PseudoAdditive:
            return "pseudo-additive";
          default:
            return "not additive";
        }
      },
      py::arg("matrix"), "Four-point rule classification of a metric space.");

  m.def(
      "kuratowski_embed",
      [](const std::vector<std::vector<double>>& matrix) {
        auto image = optnet::kuratowski_embed(to_space(matrix));
        std::vector<std::vector<double>> out;
        for (const auto& row : image.points) {
          std::vector<double> r;
          for (const Rat& x : row) r.push_back(to_double(x));
          out.push_back(std::move(r));
        }
        return out;
      },
      py::arg("matrix"), "Isometric embedding into the max-norm space (matrix rows).");

  m.def(
      "ratio_report",
      [](const std::vector<std::pair<double, double>>& points) {
        auto report = optnet::ratio_report(to_points(points));
        py::dict out;
        out["mst"] = report.mst;
        out["smt"] = report.smt;
        out["mf"] = report.mf;
        out["sr"] = report.sr;
        out["sgr"] = report.sgr;
        out["ssr"] = report.ssr;
        return out;
      },
      py::arg("points"), "sr/sgr/ssr ratios of a plane configuration.");

  m.def(
      "ratio_search",
      [](const std::string& kind, int n, int trials, std::uint64_t seed) {
        RatioKind rk;
        if (kind == "sr") {
          rk = RatioKind::Sr;
        } else if (kind == "sgr") {
          rk = RatioKind::Sgr;
        } else if (kind == "ssr") {
          rk = RatioKind::Ssr;
        } else {
          throw std::invalid_argument("kind must be 'sr', 'sgr' or 'ssr'");
        }
        auto result = optnet::ratio_search(rk, n, trials, seed);
        py::dict out;
        out["ratio"] = result.ratio;
        out["trial"] = result.trial;
        py::list points;
        for (const auto& p : result.worst.points) points.append(py::make_tuple(p.x, p.y));
        out["points"] = points;
        return out;
      },
      py::arg("kind"), py::arg("n"), py::arg("trials"), py::arg("seed"),
      "Seeded randomized search for the degree-n ratio infimum.");

  m.def(
      "spanning_tree_count",
      [](int num_vertices, const std::vector<std::pair<int, int>>& edges) {
        WeightedGraph graph;
        graph.num_vertices = num_vertices;
        for (auto [u, v] : edges) graph.add_edge(u, v, 1.0);
        return big_to_int(optnet::spanning_tree_count(graph));
      },
      py::arg("num_vertices"), py::arg("edges"),
      "Kirchhoff matrix-tree count of spanning trees (exact).");

  m.def(
      "min_half_perimeter",
      [](const std::vector<std::vector<double>>& matrix) {
        auto result = optnet::min_half_perimeter(to_space(matrix));
        return py::make_tuple(to_double(result.value), result.order);
      },
      py::arg("matrix"), "Minimum tour half-perimeter and the optimal cyclic order.");
}
