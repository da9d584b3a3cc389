#include "elr/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "elr/error.hpp"
#include "elr/metrics.hpp"

namespace elr {
namespace {

using json = nlohmann::json;

const char* const kPlane3Families[] = {"nested-triangles", "lower-bound", "balanced-3tree", "plane-3tree"};
const char* const kTwoTreeFamilies[] = {"two-tree", "linear-2tree"};

bool is_plane3_family(const std::string& f) {
  return std::find(std::begin(kPlane3Families), std::end(kPlane3Families), f) != std::end(kPlane3Families);
}
bool is_two_tree_family(const std::string& f) {
  return std::find(std::begin(kTwoTreeFamilies), std::end(kTwoTreeFamilies), f) != std::end(kTwoTreeFamilies);
}

std::vector<Edge> sorted_edges(const Graph& g) {
  auto e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Ten digits are plenty for display.
std::string svgnum(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Field access that reports the path of the missing or mistyped field.
const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw Error("parse-error", "missing field " + where + key);
  return j.at(key);
}

template <class T>
T as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw Error("parse-error", "field " + where + ": " + e.what());
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("parse-error", e.what());
  }
}

void check_schema(const json& j, const char* kind) {
  std::string s = as<std::string>(field(j, "schema", ""), "schema");
  if (s != kind) throw Error("parse-error", "field schema: expected " + std::string(kind) + ", got " + s);
  int v = as<int>(field(j, "version", ""), "version");
  if (v != kSchemaVersion) throw Error("parse-error", "field version: unsupported " + std::to_string(v));
}

}  // namespace

GraphModel model_of(std::string family, const Plane3Tree& t) {
  PlaneGraph pg = t.plane_graph();
  Graph g = pg.graph();
  return {std::move(family), std::move(g), std::move(pg), t, std::nullopt, std::nullopt};
}

GraphModel model_of(std::string family, const TwoTree& t) {
  return {std::move(family), t.graph(), std::nullopt, std::nullopt, t, std::nullopt};
}

GraphModel model_of(const BipartitePlane& b) {
  return {"bipartite-maximal", b.graph.graph(), b.graph, std::nullopt, std::nullopt, b};
}

GraphModel model_of_sparse(const Graph& g) {
  return {"sparse", g, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
}

std::string serialize_graph(const GraphModel& m) {
  json j;
  j["schema"] = "elr-graph";
  j["version"] = kSchemaVersion;
  j["family"] = m.family;
  j["n"] = m.graph.vertex_count();
  json edges = json::array();
  for (const Edge& e : sorted_edges(m.graph)) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  if (m.plane) {
    j["rotation"] = m.plane->rotations();
    j["outer_face"] = m.plane->outer_face();
  }
  json w = json::object();
  if (m.plane3) {
    json ins = json::array();
    for (const Face3& f : m.plane3->insertions()) ins.push_back({f[0], f[1], f[2]});
    w["insertions"] = ins;
  }
  if (m.two_tree) {
    json par = json::array();
    for (auto [p, q] : m.two_tree->parent_pairs()) par.push_back({p, q});
    w["parents"] = par;
  }
  if (m.bipartite) {
    json ops = json::array();
    for (const QuadOp& op : m.bipartite->ops)
      ops.push_back({{"kind", op.kind == QuadOp::Kind::P0 ? "P0" : "P1"}, {"site", op.site}});
    w["ops"] = ops;
  }
  j["witness"] = w;
  return j.dump(2) + "\n";
}

GraphModel parse_graph(std::string_view text) {
  json j = parse_json(text);
  check_schema(j, "elr-graph");
  std::string family = as<std::string>(field(j, "family", ""), "family");
  int n = as<int>(field(j, "n", ""), "n");
  if (n < 0) throw Error("parse-error", "field n: negative");
  auto raw_edges = as<std::vector<std::array<int, 2>>>(field(j, "edges", ""), "edges");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    auto [a, b] = raw_edges[i];
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error("invariant-violation", "field edges[" + std::to_string(i) + "]: vertex id out of range");
    edges.emplace_back(a, b);
  }
  Graph listed(n, edges);
  const json& w = field(j, "witness", "");

  GraphModel m;
  if (is_plane3_family(family)) {
    auto ins = as<std::vector<std::array<int, 3>>>(field(w, "insertions", "witness."), "witness.insertions");
    std::vector<Face3> faces(ins.begin(), ins.end());
    m = model_of(family, Plane3Tree(faces));
  } else if (is_two_tree_family(family)) {
    auto par = as<std::vector<std::pair<int, int>>>(field(w, "parents", "witness."), "witness.parents");
    m = model_of(family, TwoTree(par));
    if (family == "linear-2tree" && !is_linear_2tree(*m.two_tree))
      throw Error("invariant-violation", "field witness.parents: 2-tree is not linear");
  } else if (family == "bipartite-maximal") {
    const json& ops = field(w, "ops", "witness.");
    std::vector<QuadOp> script;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      std::string at = "witness.ops[" + std::to_string(i) + "].";
      std::string kind = as<std::string>(field(ops[i], "kind", at), at + "kind");
      if (kind != "P0" && kind != "P1") throw Error("parse-error", "field " + at + "kind: unknown " + kind);
      script.push_back({kind == "P0" ? QuadOp::Kind::P0 : QuadOp::Kind::P1,
                        as<std::vector<int>>(field(ops[i], "site", at), at + "site")});
    }
    m = model_of(gen_bipartite_maximal(script));
  } else if (family == "sparse") {
    m = model_of_sparse(listed);
  } else {
    throw Error("parse-error", "field family: unknown " + family);
  }

  if (m.graph.vertex_count() != n)
    throw Error("invariant-violation", "field n: witness builds " + std::to_string(m.graph.vertex_count()) +
                                           " vertices");
  if (sorted_edges(m.graph) != sorted_edges(listed))
    throw Error("invariant-violation", "field edges: do not match the witness");
  if (m.plane) {
    auto rot = as<std::vector<std::vector<int>>>(field(j, "rotation", ""), "rotation");
    if (static_cast<int>(rot.size()) != n) throw Error("invariant-violation", "field rotation: wrong length");
    for (int v = 0; v < n; ++v)
      if (!same_cyclic_walk(m.plane->rotation(v), rot[v]))
        throw Error("invariant-violation", "field rotation[" + std::to_string(v) + "]: does not match the witness");
    auto outer = as<std::vector<int>>(field(j, "outer_face", ""), "outer_face");
    if (!same_cyclic_walk(m.plane->outer_face(), outer))
      throw Error("invariant-violation", "field outer_face: does not match the witness");
  }
  return m;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string graph_hash(const GraphModel& m) { return fnv1a_hex(serialize_graph(m)); }

std::string serialize_drawing(const DrawingModel& d) {
  json j;
  j["schema"] = "elr-drawing";
  j["version"] = kSchemaVersion;
  j["graph_hash"] = d.graph_hash;
  json pts = json::array();
  for (const Point& p : d.drawing.points()) pts.push_back({num17(p.x), num17(p.y)});
  j["coordinates"] = pts;
  j["meta"] = {{"algorithm", d.meta.algorithm},
               {"epsilon", num17(d.meta.epsilon)},
               {"bound", num17(d.meta.bound)},
               {"ratio", num17(d.meta.ratio)}};
  return j.dump(2) + "\n";
}

DrawingModel parse_drawing(std::string_view text, const GraphModel* graph) {
  json j = parse_json(text);
  check_schema(j, "elr-drawing");
  auto number = [](const json& v, const std::string& where) {
    std::string s = as<std::string>(v, where);
    char* end = nullptr;
    double x = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0') throw Error("parse-error", "field " + where + ": not a number: " + s);
    return x;
  };
  DrawingModel d;
  d.graph_hash = as<std::string>(field(j, "graph_hash", ""), "graph_hash");
  const json& pts = field(j, "coordinates", "");
  if (!pts.is_array()) throw Error("parse-error", "field coordinates: not an array");
  std::vector<Point> p;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::string at = "coordinates[" + std::to_string(i) + "]";
    if (!pts[i].is_array() || pts[i].size() != 2) throw Error("parse-error", "field " + at + ": expected [x, y]");
    p.push_back({number(pts[i][0], at + "[0]"), number(pts[i][1], at + "[1]")});
  }
  d.drawing = Drawing(std::move(p));
  const json& meta = field(j, "meta", "");
  d.meta.algorithm = as<std::string>(field(meta, "algorithm", "meta."), "meta.algorithm");
  d.meta.epsilon = number(field(meta, "epsilon", "meta."), "meta.epsilon");
  d.meta.bound = number(field(meta, "bound", "meta."), "meta.bound");
  d.meta.ratio = number(field(meta, "ratio", "meta."), "meta.ratio");
  if (graph) {
    if (d.graph_hash != graph_hash(*graph)) throw Error("invariant-violation", "field graph_hash: does not match the graph");
    if (d.drawing.size() != graph->graph.vertex_count())
      throw Error("invariant-violation", "field coordinates: " + std::to_string(d.drawing.size()) + " points for " +
                                             std::to_string(graph->graph.vertex_count()) + " vertices");
  }
  return d;
}

std::string render_svg(const Graph& g, const Drawing& d, const SvgOptions& opt) {
  if (d.size() != g.vertex_count()) throw Error("improper-input", "drawing does not cover the graph");
  if (!verify_proper(g, d).ok) throw Error("improper-input", "drawing is not proper");
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  for (int v = 0; v < d.size(); ++v) {
    Point p = d[v];
    if (v == 0 || p.x < x0) x0 = p.x;
    if (v == 0 || p.x > x1) x1 = p.x;
    if (v == 0 || p.y < y0) y0 = p.y;
    if (v == 0 || p.y > y1) y1 = p.y;
  }
  double span = std::max({x1 - x0, y1 - y0, 1e-9});
  double s = opt.scale;
  double m = 0.05 * span;
  // SVG's y axis points down.
  auto X = [&](double x) { return svgnum(s * (x - x0 + m)); };
  auto Y = [&](double y) { return svgnum(s * (y1 - y + m)); };
  double w = s * (x1 - x0 + 2 * m), h = s * (y1 - y0 + 2 * m);
  double r = 0.01 * s * span;

  std::vector<Edge> hl = opt.highlight;
  std::sort(hl.begin(), hl.end());
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << svgnum(w) << "\" height=\""
      << svgnum(h) << "\" viewBox=\"0 0 " << svgnum(w) << " " << svgnum(h) << "\">\n"
      << "<style>line{stroke:#333;stroke-width:" << svgnum(0.3 * r) << "}line.skeleton{stroke:#c22;stroke-width:"
      << svgnum(0.6 * r) << "}circle{fill:#000}text{font-size:" << svgnum(3 * r) << "px}</style>\n";
  for (const Edge& e : sorted_edges(g)) {
    bool skel = std::binary_search(hl.begin(), hl.end(), e);
    out << "<line" << (skel ? " class=\"skeleton\"" : "") << " x1=\"" << X(d[e.u].x) << "\" y1=\"" << Y(d[e.u].y)
        << "\" x2=\"" << X(d[e.v].x) << "\" y2=\"" << Y(d[e.v].y) << "\"/>\n";
  }
  for (int v = 0; v < d.size(); ++v) {
    out << "<circle cx=\"" << X(d[v].x) << "\" cy=\"" << Y(d[v].y) << "\" r=\"" << svgnum(r) << "\"/>\n";
    if (opt.labels)
      out << "<text x=\"" << X(d[v].x) << "\" y=\"" << Y(d[v].y) << "\" dx=\"" << svgnum(1.5 * r) << "\">" << v
          << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("parse-error", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("parse-error", "cannot write " + path);
  out << text;
  if (!out) throw Error("parse-error", "write failed for " + path);
}

}  // namespace elr
