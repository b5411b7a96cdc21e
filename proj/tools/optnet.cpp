#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "optnet/fillings.hpp"
#include "optnet/geometry.hpp"
#include "optnet/io.hpp"
#include "optnet/metric_space.hpp"
#include "optnet/ratios.hpp"
#include "optnet/steiner.hpp"

namespace {

using namespace optnet;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

void emit_network(const PlaneNetwork& network, const std::string& json_path,
                  const std::string& svg_path,
                  const std::vector<std::pair<std::string, std::string>>& meta) {
  if (!json_path.empty()) write_file(json_path, network_json(network, meta) + "\n");
  if (!svg_path.empty()) write_file(svg_path, network_svg(network));
}

// ---- repro: golden checks for the headline numbers ----------------------

struct Check {
  std::string name;
  bool pass = false;
};

FiniteMetricSpace equilateral_space(int n, const Rat& d) {
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, d));
  for (int i = 0; i < n; ++i) m[i][i] = 0;
  return make_metric_space(m);
}

TreeTopology rectangle_diagonal_topology() {
  TreeTopology t;
  t.num_vertices = 6;
  t.boundary = {0, 1, 2, 3};
  t.edges = {{0, 4}, {2, 4}, {1, 5}, {3, 5}, {4, 5}};  // mustaches on the diagonals
  return t;
}

FiniteMetricSpace rectangle_space() {
  // Vertices of a 3x4 rectangle in cyclic order.
  std::vector<std::vector<Rat>> m = {
      {0, 3, 5, 4}, {3, 0, 4, 5}, {5, 4, 0, 3}, {4, 5, 3, 0}};
  return make_metric_space(m);
}

int run_repro() {
  std::vector<Check> checks;
  auto add = [&](const std::string& name, bool pass) { checks.push_back({name, pass}); };
  const double kTol = 1e-9;

  {
    std::vector<Point2> tri = {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}};
    const double mst_len = euclidean_mst(tri).length;
    const double smt_len = smt(tri).length;
    add("triangle mst = 2", std::abs(mst_len - 2.0) < kTol);
    add("triangle smt = sqrt(3)", std::abs(smt_len - std::sqrt(3.0)) < kTol);
    add("triangle mf = 3/2", mf(equilateral_space(3, 1)).value == Rat(3, 2));
    add("triangle sr = sqrt(3)/2", std::abs(smt_len / mst_len - std::sqrt(3.0) / 2.0) < kTol);
  }
  {
    const auto space = rectangle_space();
    const auto topology = rectangle_diagonal_topology();
    add("rectangle mpf = 10", mpf(space, topology, false).value == 10);
    add("rectangle mpf_- = 9", mpf(space, topology, true).value == 9);
    add("rectangle mf = 8", mf(space).value == 8);
    add("rectangle four-point formula = 8", four_point_mf(space).value == 8);
    add("rectangle Eremin tour bound = 9, exact",
        eremin_value(space, topology, 1).lower_bound == 9 &&
            eremin_value(space, topology, 1).exact);
  }
  {
    bool ok = true;
    for (int n = 3; n <= 6; ++n) ok = ok && mf(equilateral_space(n, 1)).value == Rat(n, 2);
    add("equilateral mf = n/2 (n = 3..6)", ok);
    bool sgr_ok = true;
    for (int n = 3; n <= 8; ++n)
      sgr_ok = sgr_ok && sgr_metric(equilateral_space(n, 1)) == Rat(n, 2 * n - 2);
    add("simplex sgr = n/(2n-2) (n = 3..8)", sgr_ok);
  }
  {
    std::vector<std::vector<Rat>> m = {{0, 3, 4}, {3, 0, 5}, {4, 5, 0}};
    const auto space = make_metric_space(m);
    add("(3,4,5) Gromov product at p1 = 1", gromov_product(space, 0, 1, 2) == 1);
    const auto star = star_weights(space);
    add("(3,4,5) star weights 1,2,3",
        star.weights[0] == 1 && star.weights[1] == 2 && star.weights[2] == 3);
    add("(3,4,5) mf = 6", mf(space).value == 6);
  }
  {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
      WeightedGraph g;
      g.num_vertices = n;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j, 1.0);
      BigInt expect = 1;
      for (int e = 0; e < n - 2; ++e) expect *= n;
      ok = ok && spanning_tree_count(g) == expect;
    }
    add("Cayley count n^(n-2) (n = 2..8)", ok);
  }
  {
    // Du-Smith proof configuration for the planar case: regular hexagon of
    // radius sqrt(2) plus its center; mst(P) = 3 * mst(P_i) where P_i is a
    // hexagon edge plus the center.
    const double r = std::sqrt(2.0);
    std::vector<Point2> hex;
    for (int i = 0; i < 6; ++i)
      hex.push_back({r * std::cos(i * M_PI / 3.0), r * std::sin(i * M_PI / 3.0)});
    std::vector<Point2> p = hex;
    p.push_back({0.0, 0.0});
    std::vector<Point2> part = {hex[0], hex[1], {0.0, 0.0}};
    add("Du-Smith hexagon mst(P) = 3 mst(P_i)",
        std::abs(euclidean_mst(p).length - 3.0 * euclidean_mst(part).length) < kTol);
  }

  bool all = true;
  for (const auto& c : checks) {
    std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "\n";
    all = all && c.pass;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? 0 : 1;
}

std::string additivity_name(AdditivityClass cls) {
  switch (cls) {
    case AdditivityClass::Additive:
      return "additive";
    case AdditivityClass::PseudoAdditive:
      return "pseudo-additive";
    case AdditivityClass::Neither:
      return "not additive";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal networks toolbox: spanning trees, Steiner trees, minimal fillings"};
  app.require_subcommand(1);

  std::string points_path, matrix_path, topology_path, network_path;
  std::string json_path, svg_path;
  int nmax = 8, kmax = 2, search_n = 3, trials = 1000;
  std::uint64_t seed = 1;
  std::string kind = "sr";
  bool generalized = false;

  auto* cmd_mst = app.add_subcommand("mst", "Euclidean minimal spanning tree of plane points");
  cmd_mst->add_option("--points", points_path, "points file (csv or json)")->required();
  cmd_mst->add_option("--json", json_path, "write network JSON");
  cmd_mst->add_option("--svg", svg_path, "write SVG");

  auto* cmd_smt = app.add_subcommand("smt", "Steiner minimal tree of plane points");
  cmd_smt->add_option("--points", points_path)->required();
  cmd_smt->add_option("--json", json_path);
  cmd_smt->add_option("--svg", svg_path);
  cmd_smt->add_option("--nmax", nmax, "size guard (default 8)");

  auto* cmd_mf = app.add_subcommand("mf", "minimal filling of a finite metric space");
  cmd_mf->add_option("--matrix", matrix_path, "distance matrix csv")->required();
  cmd_mf->add_option("--json", json_path);
  cmd_mf->add_option("--nmax", nmax);

  auto* cmd_mpf = app.add_subcommand("mpf", "minimal parametric filling for a fixed topology");
  cmd_mpf->add_option("--matrix", matrix_path)->required();
  cmd_mpf->add_option("--topology", topology_path, "edge list csv (first line n=<count>)")
      ->required();
  cmd_mpf->add_flag("--generalized", generalized, "allow negative edge weights (mpf_-)");
  cmd_mpf->add_option("--json", json_path);

  auto* cmd_additive = app.add_subcommand("additive", "four-point additivity check");
  cmd_additive->add_option("--matrix", matrix_path)->required();
  cmd_additive->add_option("--json", json_path);

  auto* cmd_embed = app.add_subcommand("embed", "Kuratowski embedding into max-norm space");
  cmd_embed->add_option("--matrix", matrix_path)->required();
  cmd_embed->add_option("--json", json_path);

  auto* cmd_ratios = app.add_subcommand("ratios", "sr/sgr/ssr report for plane points");
  cmd_ratios->add_option("--points", points_path)->required();
  cmd_ratios->add_option("--json", json_path);

  auto* cmd_search = app.add_subcommand("search", "randomized ratio infimum search");
  cmd_search->add_option("--kind", kind, "sr, sgr or ssr")->required();
  cmd_search->add_option("--n", search_n, "number of points")->required();
  cmd_search->add_option("--trials", trials, "restart budget");
  cmd_search->add_option("--seed", seed, "PRNG seed");
  cmd_search->add_option("--json", json_path);

  auto* cmd_verify = app.add_subcommand("verify", "recompute the length of an emitted network");
  cmd_verify->add_option("--network", network_path, "network json")->required();

  auto* cmd_repro = app.add_subcommand("repro", "reproduce the headline numbers");
  (void)cmd_repro;
  (void)kmax;

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_mst->parsed()) {
      auto points = optnet::read_points(points_path);
      auto result = optnet::euclidean_mst(points);
      emit_network(result.network, json_path, svg_path, {{"kind", "mst"}});
      std::cout << optnet::format_double(result.length) << "\n";
    } else if (cmd_smt->parsed()) {
      auto points = optnet::read_points(points_path);
      auto result = optnet::smt(points, nmax);
      emit_network(result.network, json_path, svg_path, {{"kind", "smt"}});
      std::cout << optnet::format_double(result.length) << "\n";
    } else if (cmd_mf->parsed()) {
      auto space = optnet::read_distance_matrix_csv(matrix_path);
      auto result = optnet::mf(space, nmax);
      if (!json_path.empty())
        write_file(json_path,
                   optnet::filling_json(result.tree, result.value, {{"kind", "mf"}}) + "\n");
      std::cout << optnet::format_double(optnet::to_double(result.value)) << "\n";
    } else if (cmd_mpf->parsed()) {
      auto space = optnet::read_distance_matrix_csv(matrix_path);
      auto topology = optnet::read_topology_csv(topology_path, space.n);
      auto result = optnet::mpf(space, topology, generalized);
      if (!json_path.empty())
        write_file(json_path, optnet::filling_json(result.tree, result.value,
                                                   {{"kind", generalized ? "mpf-" : "mpf"}}) +
                                  "\n");
      std::cout << optnet::format_double(optnet::to_double(result.value)) << "\n";
    } else if (cmd_additive->parsed()) {
      auto space = optnet::read_distance_matrix_csv(matrix_path);
      auto report = optnet::check_four_point(space);
      std::cout << additivity_name(report.cls) << "\n";
      if (report.witness) {
        const auto& w = *report.witness;
        std::cout << "witness: " << w[0] << "," << w[1] << "," << w[2] << "," << w[3] << "\n";
      }
      if (report.additive()) {
        auto tree = optnet::reconstruct_additive_tree(space);
        if (!json_path.empty())
          write_file(json_path, optnet::filling_json(tree, tree.total_weight(),
                                                     {{"kind", "additive-tree"}}) +
                                    "\n");
        std::cout << optnet::format_double(optnet::to_double(tree.total_weight())) << "\n";
      }
    } else if (cmd_embed->parsed()) {
      auto space = optnet::read_distance_matrix_csv(matrix_path);
      auto image = optnet::kuratowski_embed(space);
      std::ostringstream out;
      out << "{\"points\":[";
      for (std::size_t i = 0; i < image.points.size(); ++i) {
        if (i) out << ",";
        out << "[";
        for (std::size_t j = 0; j < image.points[i].size(); ++j) {
          if (j) out << ",";
          out << optnet::format_double(optnet::to_double(image.points[i][j]));
        }
        out << "]";
      }
      out << "]}";
      if (!json_path.empty()) write_file(json_path, out.str() + "\n");
      std::cout << out.str() << "\n";
    } else if (cmd_ratios->parsed()) {
      auto points = optnet::read_points(points_path);
      auto report = optnet::ratio_report(points);
      std::ostringstream out;
      out << "{\"mst\":" << optnet::format_double(report.mst)
          << ",\"smt\":" << optnet::format_double(report.smt)
          << ",\"mf\":" << optnet::format_double(report.mf)
          << ",\"sr\":" << optnet::format_double(report.sr)
          << ",\"sgr\":" << optnet::format_double(report.sgr)
          << ",\"ssr\":" << optnet::format_double(report.ssr) << "}";
      if (!json_path.empty()) write_file(json_path, out.str() + "\n");
      std::cout << out.str() << "\n";
    } else if (cmd_search->parsed()) {
      optnet::RatioKind rk;
      if (kind == "sr") {
        rk = optnet::RatioKind::Sr;
      } else if (kind == "sgr") {
        rk = optnet::RatioKind::Sgr;
      } else if (kind == "ssr") {
        rk = optnet::RatioKind::Ssr;
      } else {
        std::cerr << "error: --kind must be sr, sgr or ssr\n";
        return 1;
      }
      auto result = optnet::ratio_search(rk, search_n, trials, seed);
      std::ostringstream out;
      out << "{\"ratio\":" << optnet::format_double(result.ratio) << ",\"trial\":" << result.trial
          << ",\"points\":[";
      for (std::size_t i = 0; i < result.worst.points.size(); ++i) {
        if (i) out << ",";
        out << "[" << optnet::format_double(result.worst.points[i].x) << ","
            << optnet::format_double(result.worst.points[i].y) << "]";
      }
      out << "]}";
      if (!json_path.empty()) write_file(json_path, out.str() + "\n");
      std::cout << out.str() << "\n";
    } else if (cmd_verify->parsed()) {
      auto network = optnet::read_network_json(network_path);
      std::cout << optnet::format_double(network.length()) << "\n";
    } else if (cmd_repro->parsed()) {
      return run_repro();
    }
  } catch (const optnet::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    return what.find("guard") != std::string::npos ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
