#pragma once

#include <optional>
#include <vector>

#include "optnet/geometry.hpp"
#include "optnet/graph.hpp"

namespace optnet {

/// Angle tolerance (radians) for local-structure audits.
inline constexpr double kAngleEps = 1e-6;

struct TorricelliResult {
  Point2 point;
  double smt3 = 0.0;
  bool degenerate = false;  // some angle >= 120 degrees; point is that vertex
};

/// Fermat point of a triangle: intersection of the Simpson lines when all
/// angles are below 120 degrees, the obtuse vertex otherwise.
TorricelliResult torricelli_point(Point2 a, Point2 b, Point2 c);

struct MelzakResult {
  PlaneNetwork network;
  double length = 0.0;
  int branches_explored = 0;
};

/// Melzak forward/back trace for one full binary topology. Terminal i of the
/// topology boundary is placed at terminals[i]. Returns the locally minimal
/// network of this type, or nullopt when no branch survives the back trace.
std::optional<MelzakResult> melzak_solve(const TreeTopology& topology,
                                         const std::vector<Point2>& terminals);

struct RelaxOptions {
  double eps_relax = 1e-12;  // length-decrease threshold, relative to diameter
  int max_iterations = 100000;
  // Early abort for topology scans: stop once converged-enough and clearly
  // worse than this bound (ignored when negative).
  double prune_above = -1.0;
  int prune_check_iterations = 200;
};

/// Convex fallback: block-coordinate descent moving every Steiner point to
/// the Fermat point of its neighbors. Covers degenerate types by letting
/// Steiner points collapse onto terminals or each other.
PlaneNetwork relax_topology(const TreeTopology& topology, const std::vector<Point2>& terminals,
                            const RelaxOptions& options = {});

struct SmtResult {
  PlaneNetwork network;
  double length = 0.0;
  int topology_index = -1;  // canonical index of the winning full topology
};

/// Steiner minimal tree over all full binary topologies (guard: n <= nmax).
/// Edges shorter than 1e-9 * diameter are contracted in the output.
SmtResult smt(const std::vector<Point2>& terminals, int nmax = 8);

struct LocalStructureReport {
  double min_angle = 0.0;  // radians, over all pairs of incident edges
  int max_degree = 0;
  std::vector<std::string> violations;
  bool passes() const { return violations.empty(); }
};

/// Audits vertex degrees and inter-edge angles against the local structure
/// of shortest networks (degree <= 3, angles >= 120 degrees, exact 120 at
/// degree-3 vertices, within kAngleEps).
LocalStructureReport check_local_structure(const PlaneNetwork& network);

}  // namespace optnet
