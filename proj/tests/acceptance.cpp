#include <algorithm>
#include <chrono>
#include <cmath>
#include <concepts>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graph_zoo.hpp"
#include "oracles.hpp"
#include "orthantkit/ball.hpp"
#include "orthantkit/cube_checks.hpp"
#include "orthantkit/cube_constructors.hpp"
#include "orthantkit/cube_io.hpp"
#include "orthantkit/error.hpp"
#include "orthantkit/flats.hpp"
#include "orthantkit/graph.hpp"
#include "orthantkit/homology.hpp"
#include "orthantkit/raag.hpp"
#include "orthantkit/rays.hpp"

using namespace orthantkit;
using namespace testsupport;
using raag::DevelopedBall;
using raag::Raag;
using raag::Word;

namespace {

constexpr std::uint64_t kRandomSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::size_t failures = 0;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures++ == 0) first_failure = what;
  }
  template <std::invocable F>
  void require(bool ok, F&& what) {
    if (!ok) require(false, std::string(what()));
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> run;
};

std::string describe(const SimplicialGraph& g) {
  std::ostringstream out;
  out << g.size() << " vertices";
  for (auto [i, j] : g.edges()) out << " " << g.id(i) << "-" << g.id(j);
  return out.str();
}

// Distance in X(G) measured by the stack-piling normal form of x^-1 y.
std::size_t piling_distance(const SimplicialGraph& g, const Word& x, const Word& y) {
  Piling p(g);
  p.push(raag::inverse(x));
  p.push(y);
  return p.length();
}

std::vector<raag::StandardSubcomplex> flats_meeting(const DevelopedBall& b) {
  std::set<raag::StandardSubcomplex> out;
  for (auto top : max_cliques_oracle(b.raag().graph())) {
    for (const auto& v : b.vertices()) out.insert(raag::standard_subcomplex(b.raag(), v, top));
  }
  return {out.begin(), out.end()};
}

void check_salvetti(Outcome& o, const SimplicialGraph& g, std::size_t& count) {
  auto x = cube::salvetti(g);
  auto npc = cube::check_npc(x);
  auto ws = cube::check_weakly_special(x);
  o.require(npc.npc, [&] { return "npc fails on " + describe(g); });
  o.require(ws.weaklySpecial, [&] { return "not weakly special: " + describe(g); });
  ++count;
}

void salvetti_specialness(Outcome& o) {
  std::size_t count = 0;
  for (std::size_t n = 4; n <= 5; ++n) {
    for_each_labelled(n, [&](const SimplicialGraph& g) { check_salvetti(o, g, count); });
  }
  std::mt19937_64 rng(kRandomSeed);
  std::uniform_int_distribution<std::size_t> size(6, 8);
  for (int i = 0; i < 200; ++i) check_salvetti(o, random_graph(size(rng), rng), count);
  o.detail << count << " Salvetti complexes, seed " << kRandomSeed;
}

void davis_chambers(Outcome& o) {
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      auto x = cube::davis_chamber(g);
      o.require(cube::check_weakly_special(x).weaklySpecial, [&] { return "not weakly special: " + describe(g); });
      for (int k = 0; k <= x.dimension() || k <= graph::clique_number(g); ++k) {
        const auto expect = clique_count_oracle(g, k) << (n - k);
        const auto actual = k <= x.dimension() ? x.count(k) : 0;
        o.require(actual == expect,
                  [&] { return "count mismatch in dimension " + std::to_string(k) + ": " + describe(g); });
      }
      ++count;
    }
  }
  o.detail << count << " isomorphism classes on <= 8 vertices";
}

void negative_controls(Outcome& o) {
  std::string first_klein, first_hollow;
  for (int run = 0; run < 2; ++run) {
    auto klein = cube::samples::klein_bottle();
    auto kr = cube::check_weakly_special(klein);
    o.require(kr.oneSided.size() == 1, "Klein bottle: expected one one-sided hyperplane");
    auto hollow = cube::samples::hollow_cube();
    auto hr = cube::check_npc(hollow);
    o.require(!hr.npc && hr.witness.has_value(), "hollow cube passes npc or lacks a witness");
    if (hr.witness) o.require(hr.witness->simplex.size() == 3, "hollow cube witness is not a 3-vertex empty simplex");
    auto kj = cube::to_json(klein, kr).dump();
    auto hj = cube::to_json(hollow, hr).dump();
    if (run == 0) {
      first_klein = kj;
      first_hollow = hj;
    } else {
      o.require(kj == first_klein && hj == first_hollow, "reports differ between runs");
    }
  }
  o.detail << "one-sided hyperplane and empty-simplex witness, identical across runs";
}

void pd_bridge(Outcome& o) {
  std::size_t checks = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_labelled(n, [&](const SimplicialGraph& g) {
      for (int d = 1; d <= graph::clique_number(g); ++d) {
        o.require(graph::property_pd(g, d).holds == flats::gsd_connected(g, d).connected,
                  [&] { return "disagreement at d=" + std::to_string(d) + ": " + describe(g); });
        ++checks;
      }
    });
  }
  o.detail << checks << " (graph, d) pairs over all labelled graphs on <= 6 vertices";
}

const std::vector<std::pair<std::string, SimplicialGraph>>& five_graphs() {
  static const std::vector<std::pair<std::string, SimplicialGraph>> gs{
      {"K2", k2()}, {"P3", p3()}, {"C4", c4()}, {"C5", c5()}, {"K2+K2", k2_k2()}};
  return gs;
}

void ball_flat_graphs(Outcome& o) {
  std::size_t compared = 0;
  for (const auto& [name, g] : five_graphs()) {
    auto b = DevelopedBall::develop(Raag(g), 2);
    for (int d = 1; d <= graph::clique_number(g); ++d) {
      auto center = flats::ball_flat_graph(b, d).through(b.raag(), {});
      auto local = flats::local_flat_graph(g, d);
      o.require(center.nodes == local.nodes && center.edges == local.edges,
                name + " d=" + std::to_string(d) + ": flat graphs differ");
      ++compared;
    }
  }
  o.detail << compared << " (graph, d) comparisons at radius 2";
}

void median_gate_walls(Outcome& o) {
  std::size_t triples = 0, pairs = 0, flat_pairs = 0, skipped = 0;
  for (const auto& [name, g] : five_graphs()) {
    Raag r(g);
    auto b = DevelopedBall::develop(r, 2);
    const auto n = b.size();
    std::vector<std::size_t> dist(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) dist[i * n + j] = piling_distance(g, b.vertex(i), b.vertex(j));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        o.require(raag::crossing_walls(b, b.vertex(i), b.vertex(j)).size() == dist[i * n + j],
                  name + ": wall count differs from distance");
        ++pairs;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        for (std::size_t k = j; k < n; ++k) {
          Word m;
          try {
            m = raag::median(b, b.vertex(i), b.vertex(j), b.vertex(k));
          } catch (const InsufficientRadius&) {
            ++skipped;
            continue;
          }
          auto d = [&](std::size_t x, const Word& w) { return piling_distance(g, b.vertex(x), w); };
          auto between = [&](std::size_t x, std::size_t y) { return d(x, m) + d(y, m) == dist[x * n + y]; };
          o.require(between(i, j) && between(j, k) && between(i, k), name + ": median off an interval");
          o.require(raag::median(b, b.vertex(k), b.vertex(i), b.vertex(j)) == m, name + ": median not symmetric");
          o.require(raag::median(b, b.vertex(i), b.vertex(i), b.vertex(k)) == b.vertex(i),
                    name + ": median(x, x, y) != x");
          ++triples;
        }
      }
    }
    auto flats = flats_meeting(b);
    for (const auto& f1 : flats) {
      for (const auto& f2 : flats) {
        raag::CoarseIntersection ci;
        try {
          ci = raag::coarse_intersection(b, f1, f2);
        } catch (const InsufficientRadius&) {
          ++skipped;
          continue;
        }
        auto w = raag::check_wall_identity(b, f1, f2, ci);
        o.require(w.holds, name + ": wall identity: " + w.failure);
        auto gb = raag::check_gate_bijection(b, f1, f2, ci);
        o.require(gb.holds, name + ": gate bijection: " + gb.failure);
        ++flat_pairs;
      }
    }
  }
  o.detail << triples << " median triples, " << pairs << " wall pairs, " << flat_pairs << " flat pairs, " << skipped
           << " out of range";
}

void each_word(std::size_t rank, std::size_t max_len, const std::function<void(const Word&)>& f) {
  Word w;
  std::function<void()> rec = [&]() {
    f(w);
    if (w.size() == max_len) return;
    for (std::uint16_t s = 0; s < rank; ++s) {
      for (bool inv : {false, true}) {
        w.push_back(raag::Letter{s, inv});
        rec();
        w.pop_back();
      }
    }
  };
  rec();
}

void normal_forms(Outcome& o) {
  std::size_t words = 0, graphs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_labelled(n, [&](const SimplicialGraph& g) {
      Raag r(g);
      std::map<Word, std::vector<std::uint8_t>> by_canon;
      std::map<std::vector<std::uint8_t>, Word> by_key;
      each_word(n, 6, [&](const Word& w) {
        auto c = r.canonicalize(w);
        auto k = piling_key(g, w);
        auto [i, fresh] = by_canon.emplace(c, k);
        o.require(i->second == k, [&] { return "equal canonical forms, different oracle classes: " + describe(g); });
        auto [j, fresh2] = by_key.emplace(k, c);
        o.require(j->second == c, [&] { return "same oracle class, different canonical forms: " + describe(g); });
        ++words;
      });
      ++graphs;
    });
  }
  o.detail << words << " words over " << graphs << " labelled graphs";
}

void classifier(Outcome& o) {
  std::size_t graphs = 0, infinite = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      const bool expect = n == 1 || !graph::is_connected(graph::complement_graph(g));
      auto c = flats::g1_classifier(g);
      o.require((c.verdict == flats::G1Class::AtMost2) == expect, [&] { return "wrong verdict: " + describe(g); });
      if (c.verdict == flats::G1Class::Infinite) {
        ++infinite;
        o.require(c.witness.has_value(), [&] { return "Infinite without witness: " + describe(g); });
        if (c.witness) {
          o.require(c.witness->geodesicVerified, [&] { return "witness not geodesic: " + describe(g); });
          Raag r(g);
          o.require(r.canonicalize(c.witness->Wprime).size() == 8 * c.witness->W.size(),
                    [&] { return "canonical length of W' is not 8|W|: " + describe(g); });
        }
      }
      ++graphs;
    }
  }
  o.detail << graphs << " isomorphism classes on <= 7 vertices, " << infinite << " Infinite";
}

void check_l1(Outcome& o, const SimplicialGraph& g, const raag::Orthant& q, const DevelopedBall& b,
              const std::string& what, std::size_t& pairs) {
  for (const auto& p1 : q.points) {
    for (const auto& p2 : q.points) {
      long long l1 = 0;
      for (std::size_t i = 0; i < p1.coords.size(); ++i) l1 += std::llabs(p1.coords[i] - p2.coords[i]);
      o.require(piling_distance(g, b.vertex(p1.vertex), b.vertex(p2.vertex)) == static_cast<std::size_t>(l1),
                what + ": l1 law fails");
      ++pairs;
    }
  }
}

void doubling(Outcome& o) {
  std::size_t pairs = 0, quadrants = 0;
  const auto g = c4();
  Raag r(g);
  auto b = DevelopedBall::develop(r, 4);
  for (auto [s, t] : g.edges()) {
    for (bool si : {false, true}) {
      for (bool ti : {false, true}) {
        const Word ps{raag::Letter{static_cast<std::uint16_t>(s), si}};
        const Word pt{raag::Letter{static_cast<std::uint16_t>(t), ti}};
        const std::string what = "C4 quadrant (" + r.format(ps) + ", " + r.format(pt) + ")";
        auto q = raag::span_orthant({raag::PeriodicRay{{}, {}, ps}, raag::PeriodicRay{{}, {}, pt}}, b);
        check_l1(o, g, q, b, what, pairs);
        for (std::size_t dir = 0; dir < 2; ++dir) check_l1(o, g, raag::double_orthant(q, dir, b), b, what, pairs);
        auto full = raag::double_orthant(raag::double_orthant(q, 0, b), 1, b);
        std::vector<std::size_t> got;
        for (const auto& p : full.points) got.push_back(p.vertex);
        std::sort(got.begin(), got.end());
        auto flat = raag::vertices_in(b, raag::standard_subcomplex(r, {}, graph::bit(s) | graph::bit(t)));
        std::sort(flat.begin(), flat.end());
        o.require(got == flat, what + ": doubled quadrant is not the flat's ball restriction");
        ++quadrants;
      }
    }
  }
  const auto p = p3();
  Raag rp(p);
  auto bp = DevelopedBall::develop(rp, 4);
  auto mixed = raag::span_orthant({raag::PeriodicRay{{}, {}, rp.parse("b")}, raag::PeriodicRay{{}, {}, rp.parse("a c")}}, bp);
  check_l1(o, p, mixed, bp, "P3 quadrant (b, ac)", pairs);
  for (std::size_t dir = 0; dir < 2; ++dir) check_l1(o, p, raag::double_orthant(mixed, dir, bp), bp, "P3 doubled", pairs);
  ++quadrants;
  o.detail << quadrants << " quadrants, " << pairs << " point pairs within radius 4";
}

void homology_suite(Outcome& o) {
  std::size_t complexes = 0, cycles = 0;
  std::vector<cube::CubeComplex> all{cube::samples::hollow_cube(), cube::samples::klein_bottle(),
                                     cube::samples::solid_cube(2), cube::samples::solid_cube(3),
                                     cube::samples::solid_cube(4)};
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      all.push_back(cube::salvetti(g));
      all.push_back(cube::davis_chamber(g));
    }
  }
  for (const auto& x : all) {
    o.require(homology::boundary_matrices(x).is_chain_complex(), "boundary of boundary is nonzero");
    ++complexes;
  }
  auto hollow = cube::samples::hollow_cube();
  auto hc = homology::boundary_matrices(hollow);
  auto basis = homology::top_cycle_basis(hc);
  o.require(basis.size() == 1, "hollow cube top cycle space is not one-dimensional");
  if (basis.size() == 1) {
    auto s = homology::support_set(hollow, hc, basis[0]);
    o.require(s.cells[2].size() == 6, "hollow cube support is not all six squares");
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      auto x = cube::salvetti(g);
      auto c = homology::boundary_matrices(x);
      auto link = cube::vertex_link(x, 0);
      for (const auto& z : homology::top_cycle_basis(c)) {
        o.require(homology::link_support_check(x, z, 0).holds, [&] { return "link support check fails: " + describe(g); });
        auto s = homology::support_set(x, c, z);
        o.require(homology::vertex_antipode_check(link, homology::link_of_support(x, link, s)).pass,
                  [&] { return "antipode check fails: " + describe(g); });
        ++cycles;
      }
    }
  }
  o.detail << complexes << " complexes checked for dd = 0, " << cycles << " Salvetti top cycles";
}

}  // namespace

constexpr double kNoLimit = std::numeric_limits<double>::infinity();

int main() {
  const std::vector<Criterion> criteria{
      {1, "Salvetti complexes are npc and weakly special", 120, salvetti_specialness},
      {2, "Davis chambers are weakly special with clique-formula counts", 60, davis_chambers},
      {3, "Negative controls: Klein bottle and hollow cube", kNoLimit, negative_controls},
      {4, "property_pd agrees with gsd_connected", 60, pd_bridge},
      {5, "Ball flat graph through the center equals the local flat graph", kNoLimit, ball_flat_graphs},
      {6, "Median, wall and gate suite on developed balls", 300, median_gate_walls},
      {7, "Normal forms agree with the piling oracle", kNoLimit, normal_forms},
      {8, "Classifier dichotomy with verified witnesses", 120, classifier},
      {9, "Doubling satisfies the l1 law and rebuilds flats", kNoLimit, doubling},
      {10, "Homology suite", 60, homology_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    const std::string limit =
        std::isinf(c.limit_seconds) ? "no limit" : "limit " + std::to_string(static_cast<int>(c.limit_seconds)) + "s";
    std::printf("%s [%d] %s: %s (%.1fs, %s)", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.str().c_str(), secs,
                limit.c_str());
    if (!o.pass) std::printf("; %zu failures, first: %s", o.failures, o.first_failure.c_str());
    if (!in_time) std::printf("; over time limit");
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
