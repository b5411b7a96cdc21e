#include "optnet/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace optnet {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

// Column of field `index` within `line` (1-based).
int field_column(const std::string& line, std::size_t index) {
  int column = 1;
  std::size_t seen = 0;
  for (std::size_t i = 0; i < line.size() && seen < index; ++i)
    if (line[i] == ',') {
      ++seen;
      column = static_cast<int>(i) + 2;
    }
  return column;
}

double parse_double_field(const std::string& field, int line, int column) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
    if (used != field.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + field + "'", line, column);
  }
}

Rat parse_rat_field(const std::string& field, int line, int column) {
  std::string trimmed = field;
  trimmed.erase(trimmed.begin(), std::find_if(trimmed.begin(), trimmed.end(), [](unsigned char c) {
                  return !std::isspace(c);
                }));
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
    trimmed.pop_back();
  try {
    return parse_decimal(trimmed);
  } catch (const std::exception&) {
    throw ParseError("expected a number, got '" + field + "'", line, column);
  }
}

int parse_int_field(const std::string& field, int line, int column) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(field, &used, 10);
    while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
    if (used != field.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + field + "'", line, column);
  }
}

bool numeric_field(const std::string& field) {
  try {
    std::size_t used = 0;
    std::stod(field, &used);
    while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
    return used == field.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

FiniteMetricSpace read_distance_matrix_csv(const std::string& path) {
  auto lines = split_lines(read_file(path));
  while (!lines.empty() && blank(lines.back())) lines.pop_back();
  if (lines.empty()) throw ParseError("empty distance matrix", 1, 1);

  int first_row = 0;
  std::vector<std::string> labels;
  auto head = split_csv(lines[0]);
  if (!head.empty() && !numeric_field(head[0])) {
    labels.assign(head.begin(), head.end());
    first_row = 1;
  }
  const int n = static_cast<int>(lines.size()) - first_row;
  if (n < 2) throw ParseError("distance matrix needs at least 2 rows", first_row + 1, 1);
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw ParseError("label row width does not match the matrix", 1, 1);

  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i) {
    const int lineno = first_row + i + 1;
    auto fields = split_csv(lines[first_row + i]);
    if (static_cast<int>(fields.size()) != n)
      throw ParseError("expected " + std::to_string(n) + " entries, got " +
                           std::to_string(fields.size()),
                       lineno, 1);
    for (int j = 0; j < n; ++j)
      d[i][j] = parse_rat_field(fields[j], lineno, field_column(lines[first_row + i], j));
  }
  auto validation = validate_metric(d);
  if (!validation.ok) {
    std::string msg = "not a metric:";
    for (const auto& v : validation.violations) msg += " " + v.describe() + ";";
    throw ParseError(msg, first_row + 1, 1);
  }
  FiniteMetricSpace space = *validation.space;
  space.labels = labels;
  return space;
}

std::vector<Point2> read_points_csv(const std::string& path) {
  auto lines = split_lines(read_file(path));
  std::vector<Point2> points;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    auto fields = split_csv(lines[i]);
    const int lineno = static_cast<int>(i) + 1;
    if (fields.size() != 2)
      throw ParseError("expected 'x,y', got " + std::to_string(fields.size()) + " fields", lineno,
                       1);
    points.push_back({parse_double_field(fields[0], lineno, 1),
                      parse_double_field(fields[1], lineno, field_column(lines[i], 1))});
  }
  if (points.size() < 2) throw ParseError("need at least 2 points", 1, 1);
  return points;
}

std::vector<Point2> read_points_json(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, static_cast<int>(e.byte));
  }
  if (!j.contains("points") || !j["points"].is_array())
    throw ParseError("expected a 'points' array", 1, 1);
  std::vector<Point2> points;
  for (const auto& p : j["points"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw ParseError("each point must be [x, y]", 1, 1);
    points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  if (points.size() < 2) throw ParseError("need at least 2 points", 1, 1);
  return points;
}

std::vector<Point2> read_points(const std::string& path) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") return read_points_json(path);
  return read_points_csv(path);
}

TreeTopology read_topology_csv(const std::string& path, int boundary_size) {
  auto lines = split_lines(read_file(path));
  while (!lines.empty() && blank(lines.back())) lines.pop_back();
  if (lines.empty()) throw ParseError("empty topology file", 1, 1);
  if (lines[0].rfind("n=", 0) != 0) throw ParseError("first line must be 'n=<count>'", 1, 1);
  TreeTopology topology;
  topology.num_vertices = parse_int_field(lines[0].substr(2), 1, 3);
  if (topology.num_vertices < 2 || boundary_size > topology.num_vertices)
    throw ParseError("bad vertex count", 1, 3);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (blank(lines[i])) continue;
    auto fields = split_csv(lines[i]);
    const int lineno = static_cast<int>(i) + 1;
    if (fields.size() != 2) throw ParseError("expected 'u,v'", lineno, 1);
    const int u = parse_int_field(fields[0], lineno, 1);
    const int v = parse_int_field(fields[1], lineno, field_column(lines[i], 1));
    if (u < 0 || v < 0 || u >= topology.num_vertices || v >= topology.num_vertices || u == v)
      throw ParseError("edge endpoints out of range", lineno, 1);
    topology.edges.push_back({u, v});
  }
  for (int b = 0; b < boundary_size; ++b) topology.boundary.push_back(b);
  if (!topology.is_tree()) throw ParseError("edge list is not a tree", 1, 1);
  return topology;
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  // Normalize the zero sign for byte-stable output.
  if (std::string(buf) == "-0") return "0";
  return buf;
}

std::string network_json(const PlaneNetwork& network,
                         const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ostringstream out;
  out << "{\"vertices\":[";
  for (int v = 0; v < network.topology.num_vertices; ++v) {
    if (v) out << ",";
    out << "{\"id\":" << v << ",\"x\":" << format_double(network.positions[v].x)
        << ",\"y\":" << format_double(network.positions[v].y) << ",\"kind\":\""
        << (network.topology.is_boundary(v) ? "terminal" : "steiner") << "\"}";
  }
  out << "],\"edges\":[";
  for (int e = 0; e < network.topology.num_edges(); ++e) {
    if (e) out << ",";
    out << "{\"u\":" << network.topology.edges[e].first
        << ",\"v\":" << network.topology.edges[e].second
        << ",\"weight\":" << format_double(network.edge_length(e)) << "}";
  }
  out << "],\"length\":" << format_double(network.length()) << ",\"meta\":{";
  for (std::size_t i = 0; i < meta.size(); ++i) {
    if (i) out << ",";
    out << "\"" << meta[i].first << "\":\"" << meta[i].second << "\"";
  }
  out << "}}";
  return out.str();
}

PlaneNetwork read_network_json(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 1, static_cast<int>(e.byte));
  }
  PlaneNetwork network;
  if (!j.contains("vertices") || !j.contains("edges"))
    throw ParseError("network JSON needs 'vertices' and 'edges'", 1, 1);
  const auto& verts = j["vertices"];
  network.topology.num_vertices = static_cast<int>(verts.size());
  network.positions.resize(verts.size());
  for (const auto& v : verts) {
    const int id = v.at("id").get<int>();
    if (id < 0 || id >= network.topology.num_vertices)
      throw ParseError("vertex id out of range", 1, 1);
    network.positions[id] = {v.at("x").get<double>(), v.at("y").get<double>()};
    if (v.at("kind").get<std::string>() == "terminal") network.topology.boundary.push_back(id);
  }
  std::sort(network.topology.boundary.begin(), network.topology.boundary.end());
  for (const auto& e : j["edges"])
    network.topology.edges.push_back({e.at("u").get<int>(), e.at("v").get<int>()});
  return network;
}

std::string filling_json(const WeightedTree& tree, const Rat& value,
                         const std::vector<std::pair<std::string, std::string>>& meta) {
  std::ostringstream out;
  out << "{\"topology\":{\"num_vertices\":" << tree.topology.num_vertices << ",\"boundary\":[";
  for (std::size_t i = 0; i < tree.topology.boundary.size(); ++i) {
    if (i) out << ",";
    out << tree.topology.boundary[i];
  }
  out << "],\"edges\":[";
  for (int e = 0; e < tree.topology.num_edges(); ++e) {
    if (e) out << ",";
    out << "[" << tree.topology.edges[e].first << "," << tree.topology.edges[e].second << "]";
  }
  out << "]},\"weights\":[";
  for (std::size_t i = 0; i < tree.weights.size(); ++i) {
    if (i) out << ",";
    out << format_double(to_double(tree.weights[i]));
  }
  out << "],\"value\":" << format_double(to_double(value)) << ",\"meta\":{";
  for (std::size_t i = 0; i < meta.size(); ++i) {
    if (i) out << ",";
    out << "\"" << meta[i].first << "\":\"" << meta[i].second << "\"";
  }
  out << "}}";
  return out.str();
}

std::string network_svg(const PlaneNetwork& network) {
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  bool first = true;
  for (const auto& p : network.positions) {
    if (first) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      first = false;
    } else {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double scale = span > 0.0 ? 900.0 / span : 1.0;
  const double off_x = 50.0 + (900.0 - (max_x - min_x) * scale) / 2.0;
  const double off_y = 50.0 + (900.0 - (max_y - min_y) * scale) / 2.0;
  auto sx = [&](double x) { return off_x + (x - min_x) * scale; };
  auto sy = [&](double y) { return 1000.0 - (off_y + (y - min_y) * scale); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n";
  for (auto [u, v] : network.topology.edges)
    out << "  <line x1=\"" << format_double(sx(network.positions[u].x)) << "\" y1=\""
        << format_double(sy(network.positions[u].y)) << "\" x2=\""
        << format_double(sx(network.positions[v].x)) << "\" y2=\""
        << format_double(sy(network.positions[v].y)) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (int v = 0; v < network.topology.num_vertices; ++v) {
    const bool terminal = network.topology.is_boundary(v);
    out << "  <circle cx=\"" << format_double(sx(network.positions[v].x)) << "\" cy=\""
        << format_double(sy(network.positions[v].y)) << "\" r=\"6\" "
        << (terminal ? "fill=\"black\"" : "fill=\"white\" stroke=\"black\" stroke-width=\"2\"")
        << "/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace optnet
