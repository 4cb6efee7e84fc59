#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orthantkit/ball.hpp"
#include "orthantkit/cube_checks.hpp"
#include "orthantkit/cube_constructors.hpp"
#include "orthantkit/cube_io.hpp"
#include "orthantkit/error.hpp"
#include "orthantkit/flats.hpp"
#include "orthantkit/graph.hpp"
#include "orthantkit/graph_io.hpp"
#include "orthantkit/homology.hpp"
#include "orthantkit/raag_io.hpp"

using json = nlohmann::json;
using namespace orthantkit;

namespace {

constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kCap = 3 };

struct Options {
  std::string input = "-";
  std::string format = "auto";
  std::optional<int> radius;
  std::size_t cap = raag::kDefaultCap;
  std::optional<int> d;
  bool strict = false;
  std::string dot;
  std::string on = "salvetti";
  std::string sample;
  std::size_t vertex = 0;
  std::string x, y, z;
  std::string flat1, flat2;
};

struct Result {
  json body;
  bool negative = false;
};

graph::SimplicialGraph load_graph(const Options& o) {
  graph::GraphFormat f = graph::GraphFormat::Auto;
  if (o.format == "text") f = graph::GraphFormat::Text;
  if (o.format == "json") f = graph::GraphFormat::Json;
  return graph::parse_graph(graph::read_input(o.input), f);
}

cube::CubeComplex load_complex(const Options& o, json& input) {
  if (o.sample == "hollow-cube") {
    input = {{"sample", o.sample}};
    return cube::samples::hollow_cube();
  }
  if (o.sample == "klein-bottle") {
    input = {{"sample", o.sample}};
    return cube::samples::klein_bottle();
  }
  if (o.on == "complex") {
    input = {{"path", o.input}, {"kind", "complex"}};
    return cube::parse_complex(graph::read_input(o.input));
  }
  auto g = load_graph(o);
  input = {{"path", o.input}, {"graph", graph::to_json(g)}, {"construction", o.on}};
  return o.on == "davis" ? cube::davis_chamber(g) : cube::salvetti(g);
}

void write_dot(const Options& o, const std::string& text) {
  if (o.dot.empty()) return;
  std::ofstream out(o.dot);
  if (!out) throw InputError("cannot write DOT file " + o.dot);
  out << text;
}

json names(const graph::SimplicialGraph& g, graph::VertexSet s) {
  json out = json::array();
  for (auto i : graph::members(s)) out.push_back(g.id(i));
  return out;
}

Result graph_analyze(const Options& o, json& input) {
  auto g = load_graph(o);
  input = {{"path", o.input}, {"graph", graph::to_json(g)}};
  const auto jd = graph::join_decomposition(g);
  json factor_sets = json::array();
  for (auto f : jd.factors) factor_sets.push_back(names(g, f));
  json pd = json::array();
  for (int d = 1; d <= graph::clique_number(g); ++d) {
    auto p = graph::property_pd(g, d);
    pd.push_back({{"d", d},
                  {"holds", p.holds},
                  {"galleryCondition", p.galleryCondition},
                  {"neighborCondition", p.neighborCondition}});
  }
  json octa = {{"present", false}};
  if (auto h = graph::find_top_hyperoctahedron(g)) {
    json pairs = json::array();
    for (auto [a, b] : h->pairs) pairs.push_back({g.id(a), g.id(b)});
    octa = {{"present", true}, {"pairs", pairs}};
  }
  raag::Raag r(g);
  auto cls = flats::g1_classifier(g);
  write_dot(o, graph::to_dot(g));
  return {{{"complement", graph::to_json(graph::complement_graph(g))},
           {"joinDecomposition",
            {{"factors", jd.factors.size()},
             {"factorSets", factor_sets},
             {"cliqueFactor", names(g, jd.cliqueFactor)},
             {"parts", jd.part_count()}}},
           {"flagDimension", graph::clique_number(g) - 1},
           {"propertyPd", pd},
           {"topHyperoctahedron", octa},
           {"g1", flats::to_string(cls.verdict)},
           {"classifier", flats::to_json(r, cls)}},
          false};
}

Result build(const Options& o, json& input, bool davis) {
  Options local = o;
  local.on = davis ? "davis" : "salvetti";
  local.sample.clear();
  auto x = load_complex(local, input);
  return {{{"counts", x.counts()}, {"complex", cube::to_json(x)}}, false};
}

Result check(const Options& o, json& input, bool special) {
  auto x = load_complex(o, input);
  if (!special) {
    auto r = cube::check_npc(x);
    return {cube::to_json(x, r), !r.npc};
  }
  auto r = cube::check_weakly_special(x);
  auto body = cube::to_json(x, r);
  body["hyperplanes"] = cube::to_json(x, cube::hyperplanes(x));
  return {body, !r.weaklySpecial};
}

raag::DevelopedBall develop_ball(const Options& o, const raag::Raag& r, int fallback) {
  return raag::DevelopedBall::develop(r, o.radius.value_or(fallback), o.cap);
}

Result develop(const Options& o, json& input) {
  if (!o.radius) throw InputError("develop requires --radius");
  auto g = load_graph(o);
  input = {{"path", o.input}, {"graph", graph::to_json(g)}};
  auto b = develop_ball(o, raag::Raag(g), *o.radius);
  return {{{"ball", raag::to_json(b)}}, false};
}

raag::Word word_arg(const raag::Raag& r, const std::string& text, const char* name) {
  try {
    return r.canonicalize(r.parse(text));
  } catch (const InputError& e) {
    throw InputError(std::string("--") + name + ": " + e.what());
  }
}

raag::StandardSubcomplex flat_arg(const raag::Raag& r, const std::string& text, const char* name) {
  try {
    return raag::parse_subcomplex(r, text);
  } catch (const InputError& e) {
    throw InputError(std::string("--") + name + ": " + e.what());
  }
}

int needed_radius(std::initializer_list<std::size_t> lengths) {
  std::size_t total = 0;
  for (auto l : lengths) total += l;
  return static_cast<int>(total) + 1;
}

Result median_cmd(const Options& o, json& input) {
  auto g = load_graph(o);
  input = {{"path", o.input}, {"graph", graph::to_json(g)}};
  raag::Raag r(g);
  auto x = word_arg(r, o.x, "x");
  auto y = word_arg(r, o.y, "y");
  auto z = word_arg(r, o.z, "z");
  auto b = develop_ball(o, r, needed_radius({x.size(), y.size(), z.size()}));
  auto m = raag::median(b, x, y, z);
  return {{{"x", r.format(x)},
           {"y", r.format(y)},
           {"z", r.format(z)},
           {"median", r.format(m)},
           {"radius", b.radius()}},
          false};
}

Result gate_cmd(const Options& o, json& input) {
  auto g = load_graph(o);
  input = {{"path", o.input}, {"graph", graph::to_json(g)}};
  raag::Raag r(g);
  auto x = word_arg(r, o.x, "x");
  auto c = flat_arg(r, o.flat1, "flat");
  auto b = develop_ball(o, r, needed_radius({x.size(), c.cosetRep.size()}));
  auto p = raag::gate_projection(b, x, c);
  return {{{"x", r.format(x)},
           {"flat", raag::to_json(r, c)},
           {"gate", r.format(p)},
           {"distance", r.distance(x, p)},
           {"radius", b.radius()}},
          false};
}

Result coarse_cmd(const Options& o, json& input) {
  auto g = load_graph(o);
  input = {{"path", o.input}, {"graph", graph::to_json(g)}};
  raag::Raag r(g);
  auto c1 = flat_arg(r, o.flat1, "flat");
  auto c2 = flat_arg(r, o.flat2, "other");
  auto b = develop_ball(o, r, needed_radius({c1.cosetRep.size(), c2.cosetRep.size()}));
  auto ci = raag::coarse_intersection(b, c1, c2);
  auto walls = raag::check_wall_identity(b, c1, c2, ci);
  auto gates = raag::check_gate_bijection(b, c1, c2, ci);
  return {{{"flat", raag::to_json(r, c1)},
           {"other", raag::to_json(r, c2)},
           {"coarseIntersection", raag::to_json(b, ci)},
           {"wallIdentity",
            {{"holds", walls.holds},
             {"wallsBoth", walls.wallsBoth},
             {"wallsY1", walls.wallsY1},
             {"wallsY2", walls.wallsY2},
             {"failure", walls.failure}}},
           {"gateBijection", {{"holds", gates.holds}, {"checked", gates.checked}, {"failure", gates.failure}}},
           {"radius", b.radius()}},
          !walls.holds || !gates.holds};
}

Result flats_cmd(const Options& o, json& input, const std::string& mode) {
  auto g = load_graph(o);
  input = {{"path", o.input}, {"graph", graph::to_json(g)}};
  raag::Raag r(g);
  const int d = o.d.value_or(1);
  if (mode == "local" || mode == "ball") {
    flats::LocalFlatGraph f;
    if (mode == "local") {
      f = flats::local_flat_graph(g, d);
    } else {
      auto b = develop_ball(o, r, 2);
      f = flats::ball_flat_graph(b, d);
    }
    auto body = flats::to_json(r, f);
    if (mode == "local") body["criterion"] = flats::to_json(flats::gsd_connected(g, d));
    write_dot(o, flats::to_dot(r, f));
    return {body, !f.connected()};
  }
  if (mode == "classify") {
    auto c = flats::g1_classifier(g, o.radius.value_or(flats::kDefaultWitnessRadius));
    return {flats::to_json(r, c), false};
  }
  auto w = flats::join_witness(g, o.radius.value_or(flats::kDefaultWitnessRadius));
  if (!w) return {{{"witness", nullptr}, {"reason", "graph is a join"}}, true};
  return {{{"witness", flats::to_json(r, *w)}}, !w->geodesicVerified};
}

Result homology_cmd(const Options& o, json& input, const std::string& mode) {
  auto x = load_complex(o, input);
  auto c = homology::boundary_matrices(x);
  auto basis = homology::top_cycle_basis(c);
  const int top = c.dimension();
  json out = {{"topDimension", top}, {"cycleSpaceDimension", basis.size()}, {"chainComplex", c.is_chain_complex()}};
  if (mode == "top") {
    json cycles = json::array();
    for (const auto& z : basis) cycles.push_back(homology::chain_json(x, top, z));
    out["basis"] = cycles;
    return {out, basis.empty()};
  }
  if (mode == "support") {
    json supports = json::array();
    for (const auto& z : basis) supports.push_back(homology::to_json(x, homology::support_set(x, c, z)));
    out["supports"] = supports;
    return {out, basis.empty()};
  }
  if (o.vertex >= x.count(0)) throw InputError("--vertex out of range");
  auto link = cube::vertex_link(x, o.vertex);
  json checks = json::array();
  bool pass = true;
  for (const auto& z : basis) {
    auto s = homology::support_set(x, c, z);
    auto ls = homology::link_support_check(x, z, o.vertex);
    auto support = homology::link_of_support(x, link, s);
    auto ap = homology::vertex_antipode_check(link, support);
    json entries = json::array();
    for (const auto& e : ap.entries) {
      entries.push_back({{"vertex", e.vertex}, {"antipode", e.antipode ? json(*e.antipode) : json(nullptr)}});
    }
    checks.push_back({{"cycle", homology::chain_json(x, top, z)},
                      {"linkSupport",
                       {{"holds", ls.holds},
                        {"inducedIsCycle", ls.inducedIsCycle},
                        {"linkOfSupport", ls.linkOfSupport},
                        {"supportOfInduced", ls.supportOfInduced}}},
                      {"antipode", {{"pass", ap.pass}, {"entries", entries}}}});
    pass = pass && ls.holds && ap.pass;
  }
  out["vertex"] = o.vertex;
  out["checks"] = checks;
  return {out, !pass};
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "Input file, '-' for stdin");
}

void add_complex_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--on", o.on, "Complex built from the input")
      ->check(CLI::IsMember({"salvetti", "davis", "complex"}));
  cmd->add_option("--sample", o.sample, "Built-in complex instead of an input")
      ->check(CLI::IsMember({"hollow-cube", "klein-bottle"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cube complexes, right-angled Artin groups and flat graphs"};
  app.set_version_flag("--version", ORTHANTKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--input", o.input, "Input file, '-' for stdin");
  app.add_option("--format", o.format, "Graph input format")->check(CLI::IsMember({"auto", "text", "json"}));
  app.add_option("--radius", o.radius, "Development radius")->check(CLI::NonNegativeNumber);
  app.add_option("--cap", o.cap, "Vertex cap for developments");
  app.add_option("--d", o.d, "Flat intersection dimension")->check(CLI::PositiveNumber);
  app.add_flag("--strict", o.strict, "Exit 1 on a negative result");
  app.add_option("--dot", o.dot, "Write a DOT rendering to this path");

  std::string command;
  std::function<Result(json&)> run;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::function<Result(json&)> body) {
    auto* cmd = parent->add_subcommand(name, help);
    cmd->fallthrough();
    cmd->callback([&command, &run, parent, name, body] {
      command = parent->get_name() + " " + name;
      run = body;
    });
    return cmd;
  };

  auto* graph_cmd = app.add_subcommand("graph", "Graph invariants")->require_subcommand(1);
  graph_cmd->fallthrough();
  add_input(leaf(graph_cmd, "analyze", "Complement, join decomposition, P_d table, classifier",
                 [&](json& in) { return graph_analyze(o, in); }),
            o);

  auto* build_cmd = app.add_subcommand("build", "Construct a cube complex")->require_subcommand(1);
  build_cmd->fallthrough();
  add_input(leaf(build_cmd, "salvetti", "Salvetti complex", [&](json& in) { return build(o, in, false); }), o);
  add_input(leaf(build_cmd, "davis", "Davis chamber", [&](json& in) { return build(o, in, true); }), o);

  auto* check_cmd = app.add_subcommand("check", "Curvature and specialness checks")->require_subcommand(1);
  check_cmd->fallthrough();
  for (auto [name, special] : {std::pair{"npc", false}, std::pair{"weakly-special", true}}) {
    auto* c = leaf(check_cmd, name, "Check a complex", [&o, special](json& in) { return check(o, in, special); });
    add_input(c, o);
    add_complex_source(c, o);
  }

  auto* develop_cmd = app.add_subcommand("develop", "Develop a ball of the universal cover");
  develop_cmd->fallthrough();
  add_input(develop_cmd, o);
  develop_cmd->callback([&] {
    command = "develop";
    run = [&](json& in) { return develop(o, in); };
  });

  auto* median_cmd_app = app.add_subcommand("median", "Median of three vertices");
  median_cmd_app->fallthrough();
  add_input(median_cmd_app, o);
  median_cmd_app->add_option("--x", o.x, "First vertex (word)")->required();
  median_cmd_app->add_option("--y", o.y, "Second vertex (word)")->required();
  median_cmd_app->add_option("--z", o.z, "Third vertex (word)")->required();
  median_cmd_app->callback([&] {
    command = "median";
    run = [&](json& in) { return median_cmd(o, in); };
  });

  auto* gate_app = app.add_subcommand("gate", "Gate projection onto a standard subcomplex");
  gate_app->fallthrough();
  add_input(gate_app, o);
  gate_app->add_option("--x", o.x, "Vertex (word)")->required();
  gate_app->add_option("--flat", o.flat1, "Subcomplex as word@gens")->required();
  gate_app->callback([&] {
    command = "gate";
    run = [&](json& in) { return gate_cmd(o, in); };
  });

  auto* coarse_app = app.add_subcommand("coarse", "Coarse intersection of two standard subcomplexes");
  coarse_app->fallthrough();
  add_input(coarse_app, o);
  coarse_app->add_option("--flat", o.flat1, "First subcomplex as word@gens")->required();
  coarse_app->add_option("--other", o.flat2, "Second subcomplex as word@gens")->required();
  coarse_app->callback([&] {
    command = "coarse";
    run = [&](json& in) { return coarse_cmd(o, in); };
  });

  auto* flats_app = app.add_subcommand("flats", "Graphs of top-dimensional flats")->require_subcommand(1);
  flats_app->fallthrough();
  for (const char* mode : {"local", "ball", "classify", "witness"}) {
    std::string m = mode;
    add_input(leaf(flats_app, m, "Flat graph: " + m, [&o, m](json& in) { return flats_cmd(o, in, m); }), o);
  }

  auto* homology_app = app.add_subcommand("homology", "Top-dimensional Z/2 homology")->require_subcommand(1);
  homology_app->fallthrough();
  for (const char* mode : {"top", "support", "antipode"}) {
    std::string m = mode;
    auto* c = leaf(homology_app, m, "Homology: " + m, [&o, m](json& in) { return homology_cmd(o, in, m); });
    add_input(c, o);
    add_complex_source(c, o);
    if (m == "antipode") c->add_option("--vertex", o.vertex, "Vertex whose link is examined");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  json input;
  try {
    Result r = run(input);
    json report = {{"schemaVersion", kSchemaVersion},
                   {"tool", {{"name", "orthantkit"}, {"version", ORTHANTKIT_VERSION}}},
                   {"command", command},
                   {"input", input},
                   {"result", r.body},
                   {"negative", r.negative}};
    if (o.radius) report["radius"] = *o.radius;
    if (o.d) report["d"] = *o.d;
    std::cout << report.dump(2) << "\n";
    return o.strict && r.negative ? kNegative : kOk;
  } catch (const CapExceeded& e) {
    std::cerr << "orthantkit: resource cap: " << e.what() << "\n";
    return kCap;
  } catch (const InsufficientRadius& e) {
    std::cerr << "orthantkit: resource cap: " << e.what() << " (increase --radius)\n";
    return kCap;
  } catch (const Error& e) {
    std::cerr << "orthantkit: error: " << e.what() << "\n";
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "orthantkit: error: " << e.what() << "\n";
    return kInputError;
  }
}
