#include "graph_zoo.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace testsupport {

using orthantkit::graph::VertexSet;

SimplicialGraph make_graph(const std::vector<std::string>& vertices, const std::string& edges) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in(edges);
  std::string tok;
  while (in >> tok) {
    auto dash = tok.find('-');
    pairs.emplace_back(tok.substr(0, dash), tok.substr(dash + 1));
  }
  return SimplicialGraph::from_edges(vertices, pairs);
}

SimplicialGraph single_vertex() { return make_graph({"a"}, ""); }
SimplicialGraph two_points() { return make_graph({"a", "b"}, ""); }
SimplicialGraph k2() { return make_graph({"a", "b"}, "a-b"); }
SimplicialGraph k3() { return make_graph({"a", "b", "c"}, "a-b b-c a-c"); }
SimplicialGraph p3() { return make_graph({"a", "b", "c"}, "a-b b-c"); }
SimplicialGraph c4() { return make_graph({"a", "b", "c", "d"}, "a-b b-c c-d d-a"); }
SimplicialGraph c5() { return make_graph({"a", "b", "c", "d", "e"}, "a-b b-c c-d d-e e-a"); }
SimplicialGraph k2_k2() { return make_graph({"a", "b", "c", "d"}, "a-b c-d"); }
SimplicialGraph k222() {
  return make_graph({"A", "B", "C", "a", "b", "c"},
                    "a-b a-B a-c a-C A-b A-B A-c A-C b-c b-C B-c B-C");
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

SimplicialGraph from_code(std::size_t n, std::uint64_t code) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t bitpos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bitpos) {
      if ((code >> bitpos) & 1u) edges.emplace_back(i, j);
    }
  }
  return SimplicialGraph::from_indices(n, edges);
}

void for_each_labelled(std::size_t n, const std::function<void(const SimplicialGraph&)>& f) {
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t code = 0; code < total; ++code) f(from_code(n, code));
}

namespace {

using Rows = std::vector<std::uint32_t>;
using Partition = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into every cell until stable. Sub-cells
// are ordered by signature, so the result is isomorphism invariant.
void refine(const Rows& adj, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    Partition next;
    for (const auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> split;
      for (int v : cell) {
        std::vector<int> sig;
        for (const auto& other : p) {
          int c = 0;
          for (int u : other) c += (adj[v] >> u) & 1u;
          sig.push_back(c);
        }
        split[sig].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [sig, vs] : split) next.push_back(vs);
    }
    p = std::move(next);
  }
}

std::uint64_t code_of(const Rows& adj, const std::vector<int>& order) {
  std::uint64_t code = 0;
  std::size_t bitpos = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bitpos) {
      if ((adj[order[i]] >> order[j]) & 1u) code |= std::uint64_t{1} << bitpos;
    }
  }
  return code;
}

void search(const Rows& adj, Partition p, std::uint64_t& best, bool& found) {
  refine(adj, p);
  auto it = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
  if (it == p.end()) {
    std::vector<int> order;
    for (const auto& c : p) order.push_back(c[0]);
    auto code = code_of(adj, order);
    if (!found || code > best) best = code;
    found = true;
    return;
  }
  const auto idx = static_cast<std::size_t>(it - p.begin());
  for (int v : p[idx]) {
    Partition q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(idx));
    q.push_back({v});
    std::vector<int> rest;
    for (int u : p[idx]) {
      if (u != v) rest.push_back(u);
    }
    q.push_back(rest);
    q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(idx) + 1, p.end());
    search(adj, q, best, found);
  }
}

}  // namespace

std::uint64_t canonical_code(const SimplicialGraph& g) {
  Rows adj(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) adj[i] = static_cast<std::uint32_t>(g.neighbors(i));
  Partition p(1);
  for (std::size_t i = 0; i < g.size(); ++i) p[0].push_back(static_cast<int>(i));
  if (g.empty()) return 0;
  std::uint64_t best = 0;
  bool found = false;
  search(adj, p, best, found);
  return best;
}

std::vector<SimplicialGraph> isomorphism_classes(std::size_t n) {
  if (n == 0) return {SimplicialGraph{}};
  if (n == 1) return {from_code(1, 0)};
  auto smaller = isomorphism_classes(n - 1);
  std::set<std::uint64_t> seen;
  std::vector<SimplicialGraph> out;
  for (const auto& h : smaller) {
    auto edges = h.edges();
    for (VertexSet s = 0; s < (VertexSet{1} << (n - 1)); ++s) {
      auto e = edges;
      for (auto i : orthantkit::graph::members(s)) e.emplace_back(i, n - 1);
      auto g = SimplicialGraph::from_indices(n, e);
      if (seen.insert(canonical_code(g)).second) out.push_back(g);
    }
  }
  return out;
}

SimplicialGraph random_graph(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> coin(0, 1);
  std::uint64_t code = 0;
  for (std::size_t b = 0; b < pair_count(n); ++b) code |= coin(rng) << b;
  return from_code(n, code);
}

}  // namespace testsupport
