#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "optnet/geometry.hpp"
#include "optnet/graph.hpp"
#include "optnet/metric_space.hpp"

namespace optnet {

// Input error with 1-based position information.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line(line),
        column(column) {}
  int line = 0;
  int column = 0;
};

// Distance-matrix CSV: n rows of n comma-separated entries; an optional
// leading header row carries point labels.
FiniteMetricSpace read_distance_matrix_csv(const std::string& path);

// Points: CSV with one "x,y" row per point, or JSON {"points":[[x,y],...]}.
// read_points dispatches on the .json extension.
std::vector<Point2> read_points_csv(const std::string& path);
std::vector<Point2> read_points_json(const std::string& path);
std::vector<Point2> read_points(const std::string& path);

// Tree-topology edge list: first line "n=<vertex count>", then one "u,v"
// line per edge. The first `boundary_size` vertices are the boundary.
TreeTopology read_topology_csv(const std::string& path, int boundary_size);

// Doubles are printed with 12 significant digits everywhere.
std::string format_double(double value);

// Network JSON: {"vertices":[{"id","x","y","kind":"terminal|steiner"}],
// "edges":[{"u","v","weight"}],"length","meta":{...}}.
std::string network_json(const PlaneNetwork& network,
                         const std::vector<std::pair<std::string, std::string>>& meta = {});

// Round-trip reader for emitted network JSON (used for verification).
PlaneNetwork read_network_json(const std::string& path);

// Filling JSON: {"topology":{...},"weights":[...],"value":...,"meta":{...}}.
std::string filling_json(const WeightedTree& tree, const Rat& value,
                         const std::vector<std::pair<std::string, std::string>>& meta = {});

// Deterministic SVG: 1000x1000 viewport, 5% margin, uniform scale, stroke
// width 2, terminals as filled circles, Steiner points as open circles.
std::string network_svg(const PlaneNetwork& network);

}  // namespace optnet
