#include "doctest.h"

#include <set>

#include "graph_zoo.hpp"
#include "oracles.hpp"
#include "orthantkit/error.hpp"
#include "orthantkit/flats.hpp"

using namespace orthantkit;
using namespace orthantkit::flats;
using namespace testsupport;

namespace {

// Edge set of the local flat graph as pairs of cliques.
std::set<std::pair<VertexSet, VertexSet>> clique_edges(const LocalFlatGraph& f) {
  std::set<std::pair<VertexSet, VertexSet>> out;
  for (auto [a, b] : f.edges) {
    auto x = f.nodes[a].subgraph;
    auto y = f.nodes[b].subgraph;
    out.emplace(std::min(x, y), std::max(x, y));
  }
  return out;
}

std::set<std::pair<VertexSet, VertexSet>> oracle_edges(const graph::SimplicialGraph& g, int d) {
  std::set<std::pair<VertexSet, VertexSet>> out;
  auto tops = max_cliques_oracle(g);
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (std::size_t j = i + 1; j < tops.size(); ++j) {
      if (std::popcount(tops[i] & tops[j]) >= d) out.emplace(tops[i], tops[j]);
    }
  }
  return out;
}

std::string walk_names(const graph::SimplicialGraph& g, const std::vector<std::size_t>& walk) {
  std::string s;
  for (auto v : walk) s += g.id(v);
  return s;
}

}  // namespace

TEST_CASE("local_flat_graph examples") {
  auto c = local_flat_graph(c4(), 1);
  CHECK(c.nodes.size() == 4);
  CHECK(c.edges.size() == 4);
  CHECK(c.connected());
  auto k = local_flat_graph(k2_k2(), 1);
  CHECK(k.nodes.size() == 2);
  CHECK(k.edges.empty());
  CHECK_FALSE(k.connected());
  auto o = local_flat_graph(k222(), 2);
  CHECK(o.nodes.size() == 8);
  CHECK(o.edges.size() == 12);
  CHECK(o.connected());
  auto og = o.as_graph(raag::Raag(k222()));
  for (std::size_t v = 0; v < 8; ++v) CHECK(graph::popcount(og.neighbors(v)) == 3);
  CHECK_THROWS_AS(local_flat_graph(c4(), 0), DomainError);
}

TEST_CASE("local_flat_graph matches the intersection oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      const int top = graph::clique_number(g);
      for (int d = 1; d <= top; ++d) {
        auto f = local_flat_graph(g, d);
        CHECK(f.nodes.size() == max_cliques_oracle(g).size());
        CHECK(clique_edges(f) == oracle_edges(g, d));
        for (const auto& node : f.nodes) CHECK(node.cosetRep.empty());
      }
    }
  }
}

TEST_CASE("ball_flat_graph examples") {
  auto c4b = raag::DevelopedBall::develop(raag::Raag(c4()), 2);
  auto f = ball_flat_graph(c4b, 1);
  auto center = f.through(c4b.raag(), {});
  auto local = local_flat_graph(c4(), 1);
  CHECK(center.nodes == local.nodes);
  CHECK(center.edges == local.edges);

  auto k2b = raag::DevelopedBall::develop(raag::Raag(k2()), 2);
  auto one = ball_flat_graph(k2b, 1);
  CHECK(one.nodes.size() == 1);
  CHECK(one.edges.empty());

  auto kkb = raag::DevelopedBall::develop(raag::Raag(k2_k2()), 2);
  auto kk = ball_flat_graph(kkb, 1);
  VertexSet ab = 0b0011;
  std::size_t ab_nodes = 0;
  for (const auto& n : kk.nodes) ab_nodes += n.subgraph == ab;
  CHECK(ab_nodes > 0);
  CHECK(ab_nodes < kk.nodes.size());
  for (auto [a, b] : kk.edges) CHECK(kk.nodes[a].subgraph == kk.nodes[b].subgraph);
}

TEST_CASE("ball_flat_graph through the center reproduces local_flat_graph") {
  for (const auto& g : {k2(), p3(), c4(), c5(), k2_k2(), k3()}) {
    auto b = raag::DevelopedBall::develop(raag::Raag(g), 2);
    for (int d = 1; d <= graph::clique_number(g); ++d) {
      auto center = ball_flat_graph(b, d).through(b.raag(), {});
      auto local = local_flat_graph(g, d);
      CHECK(center.nodes == local.nodes);
      CHECK(center.edges == local.edges);
    }
  }
}

TEST_CASE("gsd_connected examples") {
  CHECK(gsd_connected(c4(), 1).connected);
  auto k = gsd_connected(k2_k2(), 1);
  CHECK_FALSE(k.connected);
  CHECK_FALSE(k.galleryCondition);
  auto s = gsd_connected(single_vertex(), 1);
  CHECK_FALSE(s.connected);
  CHECK_FALSE(s.linkCondition);
  CHECK_THROWS_AS(gsd_connected(c4(), 3), DomainError);
}

TEST_CASE("gsd_connected agrees with property_pd") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_labelled(n, [](const graph::SimplicialGraph& g) {
      for (int d = 1; d <= graph::clique_number(g); ++d) {
        CHECK(gsd_connected(g, d).connected == graph::property_pd(g, d).holds);
      }
    });
  }
}

TEST_CASE("join_witness examples") {
  auto c = join_witness(c5());
  REQUIRE(c.has_value());
  CHECK(c->W.size() == 5);
  CHECK(c->Wprime.size() == 40);
  CHECK(c->geodesicVerified);
  CHECK(c->consecutiveNonCommuting);
  CHECK(c->hamiltonian);
  CHECK(c->separationVerified);
  CHECK_FALSE(join_witness(c4()).has_value());
  auto k = join_witness(k2_k2());
  REQUIRE(k.has_value());
  CHECK(walk_names(k2_k2(), k->walk) == "acbda");
  raag::Raag r(k2_k2());
  std::string eight;
  for (int i = 0; i < 8; ++i) eight += (i ? " " : "") + std::string("a c b d");
  CHECK(r.format(k->Wprime) == r.format(r.parse(eight)));
  CHECK(k->geodesicVerified);
  CHECK_THROWS_AS(join_witness(single_vertex()), DomainError);
}

TEST_CASE("join_witness falls back to a doubling walk") {
  // The complement is the star K1,3, which has no Hamiltonian cycle.
  auto g = make_graph({"a", "b", "c", "d"}, "b-c b-d c-d");
  auto w = join_witness(g);
  REQUIRE(w.has_value());
  CHECK_FALSE(w->hamiltonian);
  CHECK(w->walk.front() == w->walk.back());
  CHECK(w->geodesicVerified);
  CHECK(w->consecutiveNonCommuting);
}

TEST_CASE("witness soundness on small graphs") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      auto w = join_witness(g);
      if (!w) continue;
      CHECK(w->Wprime.size() == 8 * w->W.size());
      CHECK(w->geodesicVerified);
      CHECK(w->consecutiveNonCommuting);
      std::set<std::size_t> visited(w->walk.begin(), w->walk.end());
      CHECK(visited.size() == n);
    }
  }
}

TEST_CASE("g1_classifier examples and dichotomy") {
  CHECK(g1_classifier(c4()).verdict == G1Class::AtMost2);
  auto c = g1_classifier(c5());
  CHECK(c.verdict == G1Class::Infinite);
  CHECK(c.witness.has_value());
  CHECK(g1_classifier(single_vertex()).verdict == G1Class::AtMost2);
  CHECK(g1_classifier(k2()).verdict == G1Class::AtMost2);
  CHECK(g1_classifier(two_points()).verdict == G1Class::Infinite);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      bool expect = n == 1 || !graph::is_connected(graph::complement_graph(g));
      CHECK((g1_classifier(g).verdict == G1Class::AtMost2) == expect);
    }
  }
}

TEST_CASE("flat graph export") {
  raag::Raag r(c4());
  auto f = local_flat_graph(c4(), 1);
  auto doc = to_json(r, f);
  CHECK(doc["nodes"].size() == 4);
  CHECK(doc["connected"] == true);
  auto dot = to_dot(r, f);
  CHECK(dot.find("n0 -- n1") != std::string::npos);
  auto cls = to_json(raag::Raag(c5()), g1_classifier(c5()));
  CHECK(cls["g1"] == "Infinite");
  CHECK(cls["witness"]["lengthWprime"] == 40);
}
