// Command-line front end: generate graphs, draw them, verify and render.
// Exit codes: 0 ok, 1 verification failed or the drawer gave up, 2 usage,
// parse or input error.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "elr/drawers.hpp"
#include "elr/error.hpp"
#include "elr/generators.hpp"
#include "elr/io.hpp"
#include "elr/metrics.hpp"

namespace {

using namespace elr;
using json = nlohmann::json;

void diagnose(const std::string& code, const std::string& detail) {
  std::cerr << json{{"error", code}, {"detail", detail}}.dump() << "\n";
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_file(path, text);
}

std::string input(const std::string& path) {
  if (path == "-") {
    std::string s((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return s;
  }
  return read_file(path);
}

std::vector<int> random_profile(int n, std::uint64_t seed) {
  if (n < 3) throw Error("invalid-size", "linear 2-tree needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<int> p;
  int left = n - 2;
  while (left > 0) {
    int take = std::uniform_int_distribution<int>(1, std::min(left, 4))(rng);
    p.push_back(take);
    left -= take;
  }
  return p;
}

json report_json(const VerifyReport& r, std::size_t limit = 20) {
  json v = json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < limit; ++i) {
    const Violation& x = r.violations[i];
    json w = json::array();
    for (const Point& p : x.where) w.push_back({p.x, p.y});
    v.push_back({{"kind", x.kind}, {"ids", x.ids}, {"where", w}, {"detail", x.detail}});
  }
  return {{"ok", r.ok},
          {"violation_count", r.violations.size()},
          {"violations", v},
          {"min_len", r.min_len},
          {"max_len", r.max_len},
          {"ratio", r.ratio}};
}

std::vector<Edge> skeleton_edges(const TwoTree& t) {
  Decomposition d = decompose_2tree(t);
  std::vector<Edge> out;
  for (const Edge& e : d.skeleton.graph().edges())
    out.emplace_back(d.skeleton_to_parent[e.u], d.skeleton_to_parent[e.v]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Straight-line drawings with bounded edge-length ratio"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph file");
  std::string family, out_path;
  int k = 3, n = 10, ops = 10;
  std::uint64_t seed = 0;
  gen->add_option("family", family,
                  "nested-triangles | lower-bound | balanced-3tree | two-tree | linear-2tree | bipartite-maximal | sparse")
      ->required();
  gen->add_option("--k", k, "rings or tree depth");
  gen->add_option("--n", n, "vertex count");
  gen->add_option("--ops", ops, "P0/P1 operations");
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", out_path);

  // draw
  auto* draw = app.add_subcommand("draw", "Draw a graph file");
  std::string algorithm, in_path, drawing_path;
  double epsilon = -1;
  draw->add_option("algorithm", algorithm, "plane-3tree | two-tree | bipartite | coloring")->required();
  draw->add_option("-i,--input", in_path)->required();
  draw->add_option("--epsilon", epsilon, "default 0.1 (plane-3tree), 0.05 (bipartite), 0.3 (coloring)");
  draw->add_option("--seed", seed);
  draw->add_option("-o,--output", out_path);

  // verify
  auto* verify = app.add_subcommand("verify", "Certify a drawing or decomposition");
  std::string what;
  bool serial = false, raw = false;
  verify->add_option("what", what, "planar | proper | embedding | decomposition | perimeters")->required();
  verify->add_option("-i,--input", in_path)->required();
  verify->add_option("-d,--drawing", drawing_path);
  verify->add_flag("--serial", serial, "use the serial pair scan");
  verify->add_flag("--raw", raw, "perimeters without normalization");

  // measure
  auto* measure = app.add_subcommand("measure", "Measure a drawing");
  std::string quantity;
  measure->add_option("quantity", quantity, "ratio")->required()->check(CLI::IsMember({"ratio"}));
  measure->add_option("-i,--input", in_path)->required();
  measure->add_option("-d,--drawing", drawing_path)->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Sample the triangle perimeter lemmas");
  std::string lemma;
  long samples = 100000;
  oracle->add_option("lemma", lemma, "lemma2 | lemma3")->required()->check(CLI::IsMember({"lemma2", "lemma3"}));
  oracle->add_option("--samples", samples);
  oracle->add_option("--seed", seed);
  oracle->add_flag("--serial", serial);

  // render
  auto* render = app.add_subcommand("render", "Write an SVG");
  SvgOptions svg;
  bool highlight = false;
  render->add_option("-i,--input", in_path)->required();
  render->add_option("-d,--drawing", drawing_path)->required();
  render->add_option("-o,--output", out_path);
  render->add_option("--scale", svg.scale);
  render->add_flag("--labels", svg.labels);
  render->add_flag("--highlight-skeleton", highlight, "two-tree inputs only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  // Input problems are exit 2; failures of the drawers and verifiers are 1.
  GraphModel model;
  auto load_graph = [&] { model = parse_graph(input(in_path)); };
  auto load_drawing = [&] {
    if (drawing_path.empty()) throw Error("parse-error", "--drawing is required");
    return parse_drawing(input(drawing_path), &model);
  };
  auto need = [&](bool ok, const std::string& what_kind) {
    if (!ok) throw Error("parse-error", "input graph is not " + what_kind + " (family " + model.family + ")");
  };

  try {
    if (*gen) {
      GraphModel m;
      if (family == "nested-triangles")
        m = model_of(family, gen_nested_triangles(k));
      else if (family == "lower-bound")
        m = model_of(family, gen_lower_bound_graph(k));
      else if (family == "balanced-3tree")
        m = model_of(family, gen_balanced_3tree(k, seed));
      else if (family == "two-tree")
        m = model_of(family, gen_random_2tree(n, seed));
      else if (family == "linear-2tree")
        m = model_of(family, gen_linear_2tree(random_profile(n, seed)));
      else if (family == "bipartite-maximal")
        m = model_of(gen_bipartite_random(ops, seed));
      else if (family == "sparse")
        m = model_of_sparse(gen_random_sparse(n, seed));
      else
        throw Error("parse-error", "unknown family " + family);
      emit(out_path, serialize_graph(m));
      return 0;
    }

    if (*oracle) {
      OracleReport r = lemma_oracle(lemma == "lemma2" ? Lemma::two : Lemma::three, samples, seed,
                                    serial ? Exec::serial : Exec::parallel);
      json j = report_json(r.report);
      j["samples"] = r.samples;
      j["rejections"] = r.rejections;
      std::cout << j.dump(2) << "\n";
      return r.report.ok ? 0 : 1;
    }

    load_graph();

    if (*draw) {
      DrawReport rep;
      double eps = epsilon;
      try {
        if (algorithm == "plane-3tree") {
          need(model.plane3.has_value(), "a plane 3-tree");
          if (eps < 0) eps = 0.1;
          rep = draw_plane_3tree(*model.plane3, eps);
        } else if (algorithm == "two-tree") {
          need(model.two_tree.has_value(), "a 2-tree");
          eps = 0;
          rep = draw_2tree(*model.two_tree);
        } else if (algorithm == "bipartite") {
          need(model.bipartite.has_value(), "a maximal bipartite plane graph");
          if (eps < 0) eps = 0.05;
          rep = draw_bipartite_maximal(*model.bipartite, eps);
        } else if (algorithm == "coloring") {
          if (eps < 0) eps = 0.3;
          rep = draw_by_coloring(model.graph, eps, seed);
        } else {
          throw Error("parse-error", "unknown algorithm " + algorithm);
        }
      } catch (const Error& e) {
        if (e.code() == "parse-error" || e.code() == "invalid-epsilon") throw;
        diagnose(e.code(), e.what());
        return 1;
      }
      DrawingModel dm{graph_hash(model), rep.drawing, {algorithm, eps, rep.theoretical_bound, rep.ratio}};
      emit(out_path, serialize_drawing(dm));
      return 0;
    }

    if (*verify) {
      Exec exec = serial ? Exec::serial : Exec::parallel;
      json j;
      bool ok = false;
      if (what == "planar" || what == "proper" || what == "embedding") {
        DrawingModel dm = load_drawing();
        VerifyReport r;
        if (what == "planar")
          r = verify_planar_straightline(model.graph, dm.drawing, exec);
        else if (what == "proper")
          r = verify_proper(model.graph, dm.drawing, exec);
        else {
          need(model.plane.has_value(), "a plane graph");
          r = verify_embedding(*model.plane, dm.drawing);
        }
        j = report_json(r);
        ok = r.ok;
      } else if (what == "decomposition") {
        need(model.two_tree.has_value(), "a 2-tree");
        Decomposition d = decompose_2tree(*model.two_tree);
        VerifyReport r = check_decomposition(*model.two_tree, d);
        ComponentBounds b = component_bounds(*model.two_tree, d);
        j = report_json(r);
        j["bounds"] = {{"n", b.n}, {"x", b.x}, {"y", b.y}, {"z", b.z}};
        ok = r.ok;
      } else if (what == "perimeters") {
        need(model.plane3.has_value(), "a plane 3-tree");
        DrawingModel dm = load_drawing();
        PerimeterTrace t = nested_triangle_perimeters(*model.plane3, dm.drawing, !raw);
        j = {{"ok", t.ok()}, {"perimeters", t.perimeters}, {"gamma", t.gamma}, {"scale", t.scale},
             {"violations", t.violations}};
        ok = t.ok();
      } else {
        throw Error("parse-error", "unknown check " + what);
      }
      std::cout << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }

    if (*measure) {
      DrawingModel dm = load_drawing();
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", edge_length_ratio(model.graph, dm.drawing));
      std::string text = buf;
      if (text.find_first_of(".en") == std::string::npos) text += ".0";
      std::printf("%s\n", text.c_str());
      return 0;
    }

    if (*render) {
      DrawingModel dm = load_drawing();
      if (highlight) {
        need(model.two_tree.has_value(), "a 2-tree");
        svg.highlight = skeleton_edges(*model.two_tree);
      }
      emit(out_path, render_svg(model.graph, dm.drawing, svg));
      return 0;
    }
  } catch (const Error& e) {
    diagnose(e.code(), e.what());
    const std::string& c = e.code();
    bool input_error = c == "parse-error" || c == "invariant-violation" || c == "invalid-op" ||
                       c == "invalid-parents" || c == "order-violation" || c == "invalid-face" ||
                       c == "invalid-size" || c == "invalid-epsilon" || c == "not-linear" ||
                       c == "not-nested-triangles";
    return input_error ? 2 : 1;
  }
  return 2;
}
