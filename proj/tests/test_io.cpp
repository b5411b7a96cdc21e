#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "optnet/io.hpp"

using namespace optnet;

namespace {

// Writes `content` to a fresh temp file and returns its path.
class TempFile {
 public:
  explicit TempFile(const std::string& content, const std::string& suffix = ".csv") {
    static int counter = 0;
    path_ = "optnet_io_test_" + std::to_string(counter++) + suffix;
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("read_distance_matrix_csv with and without a label header") {
  TempFile plain("0,3,4\n3,0,5\n4,5,0\n");
  auto space = read_distance_matrix_csv(plain.path());
  CHECK(space.n == 3);
  CHECK(space.at(1, 2) == 5);

  TempFile labeled("a,b,c\n0,3,4\n3,0,5\n4,5,0\n");
  auto labeled_space = read_distance_matrix_csv(labeled.path());
  CHECK(labeled_space.n == 3);
  REQUIRE(labeled_space.labels.size() == 3);
  CHECK(labeled_space.labels[2] == "c");

  // Decimal entries are read exactly.
  TempFile decimal("0,1.25\n1.25,0\n");
  CHECK(read_distance_matrix_csv(decimal.path()).at(0, 1) == Rat(5, 4));
}

TEST_CASE("read_distance_matrix_csv reports positions on malformed input") {
  TempFile bad("0,3,4\n3,0,xyz\n4,5,0\n");
  try {
    read_distance_matrix_csv(bad.path());
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 5);  // 1-based character position of "xyz"
  }

  TempFile ragged("0,3\n3,0,1\n");
  CHECK_THROWS_AS(read_distance_matrix_csv(ragged.path()), ParseError);

  TempFile nonmetric("0,1,5\n1,0,1\n5,1,0\n");
  CHECK_THROWS_AS(read_distance_matrix_csv(nonmetric.path()), ParseError);

  CHECK_THROWS_AS(read_distance_matrix_csv("no_such_file.csv"), std::runtime_error);
}

TEST_CASE("point readers: CSV and JSON agree") {
  TempFile csv("0,0\n1,0\n0.5,2.25\n");
  TempFile json("{\"points\": [[0, 0], [1, 0], [0.5, 2.25]]}", ".json");
  auto a = read_points(csv.path());
  auto b = read_points(json.path());
  REQUIRE(a.size() == 3);
  REQUIRE(b.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].y == b[i].y);
  }
  CHECK(a[2].y == 2.25);

  TempFile bad("0,0\noops\n");
  CHECK_THROWS_AS(read_points_csv(bad.path()), ParseError);
  TempFile badjson("{\"points\": [[0]]}", ".json");
  CHECK_THROWS_AS(read_points_json(badjson.path()), std::runtime_error);
}

TEST_CASE("read_topology_csv") {
  TempFile csv("n=4\n0,3\n1,3\n2,3\n");
  auto topology = read_topology_csv(csv.path(), 3);
  CHECK(topology.num_vertices == 4);
  CHECK(topology.num_edges() == 3);
  CHECK(topology.boundary == std::vector<int>{0, 1, 2});
  CHECK(topology.is_tree());

  TempFile cycle("n=3\n0,1\n1,2\n2,0\n");
  CHECK_THROWS(read_topology_csv(cycle.path(), 3));
  TempFile noheader("0,1\n");
  CHECK_THROWS_AS(read_topology_csv(noheader.path(), 2), ParseError);
}

TEST_CASE("format_double pins 12 significant digits") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1.7320508075688772) == "1.73205080757");
  CHECK(format_double(0.25) == "0.25");
}

TEST_CASE("network JSON round trip") {
  PlaneNetwork net;
  net.topology.num_vertices = 4;
  net.topology.boundary = {0, 1, 2};
  net.topology.edges = {{0, 3}, {1, 3}, {2, 3}};
  net.positions = {{0, 0}, {1, 0}, {0.5, 0.8660254037844386}, {0.5, 0.28867513459481287}};

  auto json = network_json(net, {{"kind", "smt"}});
  TempFile file(json, ".json");
  auto back = read_network_json(file.path());
  CHECK(back.topology.num_vertices == 4);
  CHECK(back.topology.boundary == net.topology.boundary);
  CHECK(back.topology.edges == net.topology.edges);
  for (int v = 0; v < 4; ++v) {
    CHECK(back.positions[v].x == doctest::Approx(net.positions[v].x).epsilon(1e-11));
    CHECK(back.positions[v].y == doctest::Approx(net.positions[v].y).epsilon(1e-11));
  }
  // Emission is deterministic.
  CHECK(network_json(net, {{"kind", "smt"}}) == json);
}

TEST_CASE("filling JSON carries exact values") {
  WeightedTree tree;
  tree.topology.num_vertices = 4;
  tree.topology.boundary = {0, 1, 2};
  tree.topology.edges = {{0, 3}, {1, 3}, {2, 3}};
  tree.weights = {Rat(1), Rat(2), Rat(3)};
  auto json = filling_json(tree, Rat(6));
  CHECK(json.find("\"value\"") != std::string::npos);
  CHECK(json.find("6") != std::string::npos);
  CHECK(filling_json(tree, Rat(6)) == json);
}

TEST_CASE("SVG output is deterministic and well-formed") {
  PlaneNetwork net;
  net.topology.num_vertices = 3;
  net.topology.boundary = {0, 1};
  net.topology.edges = {{0, 2}, {1, 2}};
  net.positions = {{0, 0}, {2, 0}, {1, 1}};
  auto svg = network_svg(net);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(network_svg(net) == svg);
}
