#include "doctest.h"

#include "graph_zoo.hpp"
#include "oracles.hpp"
#include "orthantkit/error.hpp"
#include "orthantkit/graph.hpp"
#include "orthantkit/graph_io.hpp"

using namespace orthantkit;
using namespace orthantkit::graph;
using namespace testsupport;

namespace {

VertexSet set_of(const SimplicialGraph& g, std::initializer_list<const char*> ids) {
  VertexSet s = 0;
  for (auto id : ids) s |= bit(g.index_of(id));
  return s;
}

}  // namespace

TEST_CASE("complement_graph examples") {
  auto c = complement_graph(c4());
  CHECK(c.edge_count() == 2);
  CHECK(c.adjacent(c.index_of("a"), c.index_of("c")));
  CHECK(c.adjacent(c.index_of("b"), c.index_of("d")));
  CHECK(complement_graph(k3()).edge_count() == 0);
  auto c5c = complement_graph(c5());
  CHECK(c5c.edge_count() == 5);
  for (std::size_t v = 0; v < 5; ++v) CHECK(popcount(c5c.neighbors(v)) == 2);
  CHECK(is_connected(c5c));
}

TEST_CASE("complement_graph is an involution") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for_each_labelled(n, [](const SimplicialGraph& g) { CHECK(complement_graph(complement_graph(g)) == g); });
  }
}

TEST_CASE("flag_complex examples") {
  auto f = flag_complex(k3());
  CHECK(f.dimension() == 2);
  CHECK(f.simplices(2).size() == 1);
  CHECK(f.simplex_count() == 7);
  CHECK(flag_complex(c4()).dimension() == 1);
  CHECK(flag_complex(c4()).top_simplices().size() == 4);
  auto oct = flag_complex(k222());
  CHECK(oct.dimension() == 2);
  CHECK(oct.top_simplices().size() == 8);
  CHECK(oct.simplices(1).size() == 12);
  CHECK(oct.simplices(0).size() == 6);
  CHECK(flag_complex(SimplicialGraph{}).dimension() == -1);
  CHECK(flag_complex(SimplicialGraph{}).top_simplices().empty());
}

TEST_CASE("flag_complex clique counts match subset scan") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_labelled(n, [](const SimplicialGraph& g) {
      auto f = flag_complex(g);
      for (int k = 0; k <= f.dimension(); ++k) {
        CHECK(f.simplices(k).size() == clique_count_oracle(g, k + 1));
      }
      CHECK(f.top_simplices() == max_cliques_oracle(g));
    });
  }
}

TEST_CASE("property_pd examples") {
  auto p = property_pd(p3(), 1);
  CHECK(p.holds);
  auto k = property_pd(k2_k2(), 1);
  CHECK_FALSE(k.holds);
  CHECK_FALSE(k.galleryCondition);
  REQUIRE(k.disconnectedPair.has_value());
  CHECK(k.disconnectedPair->first != k.disconnectedPair->second);
  auto s = property_pd(single_vertex(), 1);
  CHECK_FALSE(s.holds);
  CHECK_FALSE(s.neighborCondition);
  REQUIRE(s.failingVertex.has_value());
  CHECK(*s.failingVertex == 0);
  CHECK_THROWS_AS(property_pd(p3(), 0), DomainError);
  CHECK_THROWS_AS(property_pd(p3(), 3), DomainError);
  CHECK(property_pd(k222(), 2).holds);
}

TEST_CASE("property_pd agrees with the brute-force oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_labelled(n, [](const SimplicialGraph& g) {
      const int top = flag_complex(g).dimension() + 1;
      for (int d = 1; d <= top; ++d) CHECK(property_pd(g, d).holds == pd_oracle(g, d));
    });
  }
}

TEST_CASE("property_pd is antitone in d") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      const int top = flag_complex(g).dimension() + 1;
      for (int d = 2; d <= top; ++d) {
        if (property_pd(g, d).holds) CHECK(property_pd(g, d - 1).holds);
      }
    }
  }
}

TEST_CASE("gallery condition equals connectivity of the simplex intersection graph") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      auto f = flag_complex(g);
      for (int d = 1; d <= f.dimension() + 1; ++d) {
        CHECK(property_pd(g, d).galleryCondition == is_connected(simplex_intersection_graph(f, d)));
      }
    }
  }
}

TEST_CASE("find_gallery") {
  auto f = flag_complex(c4());
  auto g = c4();
  auto path = find_gallery(f, set_of(g, {"a", "b"}), set_of(g, {"c", "d"}), 0);
  REQUIRE(path.has_value());
  CHECK(path->valid());
  CHECK(path->simplices.size() == 3);
  CHECK_FALSE(find_gallery(f, set_of(g, {"a", "b"}), set_of(g, {"c", "d"}), 1).has_value());
}

TEST_CASE("join_decomposition examples") {
  auto g = c4();
  auto jd = join_decomposition(g);
  CHECK(jd.cliqueFactor == 0);
  REQUIRE(jd.factors.size() == 2);
  CHECK(jd.factors[0] == set_of(g, {"a", "c"}));
  CHECK(jd.factors[1] == set_of(g, {"b", "d"}));
  auto j5 = join_decomposition(c5());
  CHECK(j5.factors.size() == 1);
  CHECK(j5.cliqueFactor == 0);
  auto j3 = join_decomposition(k3());
  CHECK(j3.factors.empty());
  CHECK(j3.cliqueFactor == k3().all());
  auto j1 = join_decomposition(single_vertex());
  CHECK(j1.cliqueFactor == 1);
  CHECK(j1.part_count() == 1);
}

TEST_CASE("join_decomposition parts and reconstruction") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& g : isomorphism_classes(n)) {
      auto jd = join_decomposition(g);
      CHECK((jd.part_count() >= 2) == !is_connected(complement_graph(g)));
      CHECK(reconstruct_join(g, jd) == g);
      VertexSet covered = jd.cliqueFactor;
      for (auto f : jd.factors) {
        CHECK((covered & f) == 0);
        covered |= f;
        CHECK(popcount(f) >= 2);
        CHECK(is_connected(complement_graph(g.induced(f))));
      }
      CHECK(covered == g.all());
      for (auto v : members(jd.cliqueFactor)) CHECK((g.neighbors(v) | bit(v)) == g.all());
    }
  }
}

TEST_CASE("has_top_hyperoctahedron examples") {
  CHECK(has_top_hyperoctahedron(c4()));
  CHECK_FALSE(has_top_hyperoctahedron(p3()));
  CHECK(has_top_hyperoctahedron(k222()));
  auto h = find_top_hyperoctahedron(k222());
  REQUIRE(h.has_value());
  CHECK(h->pairs.size() == 3);
  CHECK_FALSE(has_top_hyperoctahedron(c5()));
  CHECK_FALSE(has_top_hyperoctahedron(k3()));
}

TEST_CASE("simplex_intersection_graph examples") {
  auto s = simplex_intersection_graph(flag_complex(c4()), 1);
  CHECK(s.size() == 4);
  CHECK(s.edge_count() == 4);
  for (std::size_t v = 0; v < 4; ++v) CHECK(popcount(s.neighbors(v)) == 2);
  auto t = simplex_intersection_graph(flag_complex(k2_k2()), 1);
  CHECK(t.size() == 2);
  CHECK(t.edge_count() == 0);
  auto o = simplex_intersection_graph(flag_complex(k222()), 2);
  CHECK(o.size() == 8);
  CHECK(is_connected(o));
  for (std::size_t v = 0; v < 8; ++v) CHECK(popcount(o.neighbors(v)) == 3);
}

TEST_CASE("graph text input") {
  auto g = parse_graph_text("a b\nb c\n");
  CHECK(g == p3());
  auto h = parse_graph_text("# comment\n\nx\n");
  CHECK(h.size() == 1);
  try {
    parse_graph_text("a a\n");
    FAIL("expected error");
  } catch (const InputError& e) {
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
  }
  try {
    parse_graph_text("a b\nb a\n");
    FAIL("expected error");
  } catch (const InputError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph_text("a b c\n"), InputError);
}

TEST_CASE("graph JSON input") {
  auto g = parse_graph(R"({"vertices":["a","b"],"edges":[["a","b"]]})");
  CHECK(g == k2());
  try {
    parse_graph("{\"vertices\": [\"a\",\n  ]");
    FAIL("expected error");
  } catch (const InputError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","a"]]})"), InputError);
  auto round = parse_graph(to_json(c5()).dump());
  CHECK(round == c5());
}

TEST_CASE("DOT export") {
  auto dot = to_dot(p3());
  CHECK(dot.find("\"a\" -- \"b\"") != std::string::npos);
}
