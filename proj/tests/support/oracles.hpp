#pragma once

// Reference implementations used to cross-check the library. None of them
// call the library's normal form, distance, gate or flat-graph code.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "orthantkit/graph.hpp"
#include "orthantkit/raag.hpp"

namespace testsupport {

using orthantkit::graph::SimplicialGraph;
using orthantkit::graph::VertexSet;
using orthantkit::raag::Letter;
using orthantkit::raag::Word;

/// Stack-piling normal form: one stack per generator; a letter lands on its
/// own stack and drops a spacer on every stack of a non-commuting generator,
/// cancelling instead when its inverse is exposed on top.
class Piling {
 public:
  explicit Piling(const SimplicialGraph& g) : g_(&g), stacks_(g.size()) {}

  void push(Letter l);
  void push(const Word& w) {
    for (auto l : w) push(l);
  }
  /// Number of letters (non-spacer entries).
  std::size_t length() const { return length_; }
  /// Generators with a letter anywhere in their stack.
  VertexSet support() const;
  /// Hashable key: stack contents, 0 = spacer, 1 = letter, 2 = inverse.
  std::vector<std::uint8_t> key() const;

 private:
  const SimplicialGraph* g_;
  std::vector<std::vector<std::uint8_t>> stacks_;
  std::size_t length_ = 0;
};

std::vector<std::uint8_t> piling_key(const SimplicialGraph& g, const Word& w);

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint8_t>& k) const noexcept;
};

/// Ball of the Cayley graph found by breadth-first search on piling keys,
/// with all-pairs distances measured inside the ball.
class CayleyBall {
 public:
  CayleyBall(const SimplicialGraph& g, int radius);

  std::size_t size() const { return words_.size(); }
  const Word& word(std::size_t i) const { return words_[i]; }
  std::optional<std::size_t> find(const Word& w) const;
  std::size_t dist(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
  std::size_t depth(std::size_t i) const { return dist(0, i); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }
  /// Vertices x of the ball with h^-1 x in G(gens).
  std::vector<std::size_t> coset_members(const Word& h, VertexSet gens) const;

 private:
  SimplicialGraph g_;
  std::vector<Word> words_;
  std::unordered_map<std::vector<std::uint8_t>, std::size_t, KeyHash> index_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> dist_;
  std::size_t edges_ = 0;
};

/// Property P_d by brute force: BFS over top simplices joined when sharing
/// >= d vertices, plus a neighbour scan per vertex.
bool pd_oracle(const SimplicialGraph& g, int d);

/// Maximum cliques by subset scan.
std::vector<VertexSet> max_cliques_oracle(const SimplicialGraph& g);

/// Number of k-cliques by subset scan.
std::size_t clique_count_oracle(const SimplicialGraph& g, int k);

}  // namespace testsupport
