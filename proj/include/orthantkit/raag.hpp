#pragma once

// Right-angled Artin groups: letters, canonical words, coset and wall
// arithmetic. Group elements are identified with their canonical words; the
// same words name the vertices of the universal cover X(G).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "orthantkit/graph.hpp"

namespace orthantkit::raag {

using graph::VertexSet;

/// A generator or its inverse. Letters order by generator index, then the
/// positive letter before the inverse.
struct Letter {
  std::uint16_t gen = 0;
  bool inverse = false;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return Letter{l.gen, !l.inverse}; }

using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

class Raag {
 public:
  explicit Raag(graph::SimplicialGraph g);

  const graph::SimplicialGraph& graph() const { return graph_; }
  std::size_t rank() const { return graph_.size(); }

  /// Letters that cannot be swapped: same generator, or non-adjacent generators.
  bool dependent(Letter x, Letter y) const { return x.gen == y.gen || !graph_.adjacent(x.gen, y.gen); }
  bool commute(std::size_t s, std::size_t t) const { return s == t || graph_.adjacent(s, t); }

  /// Canonical form: freely reduced modulo commutations, then the
  /// lexicographically least ordering of the resulting trace.
  Word canonicalize(const Word& w) const;
  Word multiply(const Word& x, const Word& y) const { return canonicalize(concat(x, y)); }
  /// Length of x^-1 y, the edge-path distance in X(G).
  std::size_t distance(const Word& x, const Word& y) const { return canonicalize(concat(inverse(x), y)).size(); }
  bool is_canonical(const Word& w) const { return canonicalize(w) == w; }

  /// Lexicographically least ordering of a reduced word's trace.
  Word lex_normal(const Word& reduced) const;

  /// Positions of letters of a reduced word that can be moved to the front
  /// (initial) or to the back (terminal).
  std::vector<std::size_t> initial_positions(const Word& w) const;
  std::vector<std::size_t> terminal_positions(const Word& w) const;
  bool is_initial(const Word& w, Letter l) const;

  /// Splits a reduced word w = p q, p in G(gens) maximal with q having no
  /// initial gens-letter. Returns q in canonical form; p is stored in `peeled`.
  Word peel_initial(const Word& w, VertexSet gens, Word* peeled = nullptr) const;
  /// Splits w = q p with p in G(gens) maximal; returns q.
  Word peel_terminal(const Word& w, VertexSet gens, Word* peeled = nullptr) const;

  /// Shortest element of the coset h G(gens).
  Word min_coset_rep(const Word& h, VertexSet gens) const { return peel_terminal(canonicalize(h), gens); }
  /// Shortest element of the double coset G(left) u G(right).
  Word min_double_coset_rep(const Word& u, VertexSet left, VertexSet right) const;
  bool in_subgroup(const Word& w, VertexSet gens) const;

  /// Letter syntax: tokens separated by blanks or '.', each a generator id
  /// optionally followed by "^k" with a nonzero integer k (e.g. "a^-1",
  /// "b^3"). "e" denotes the identity when no generator is named "e".
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;
  std::string format(Letter l) const;
  /// Generators occurring in a word.
  VertexSet support(const Word& w) const;

  /// Identity word; separate name for readability at call sites.
  static Word identity() { return {}; }

 private:
  graph::SimplicialGraph graph_;
};

/// Star link of a generator: the generators that commute with it, itself excluded.
inline VertexSet link_of(const Raag& r, std::size_t s) { return r.graph().neighbors(s); }

/// Coset h G(subgraph) with the shortest representative.
struct StandardSubcomplex {
  Word cosetRep;
  VertexSet subgraph = 0;

  friend auto operator<=>(const StandardSubcomplex&, const StandardSubcomplex&) = default;
};

StandardSubcomplex standard_subcomplex(const Raag& r, const Word& h, VertexSet subgraph);
bool contains(const Raag& r, const StandardSubcomplex& c, const Word& x);
/// Nearest vertex of C to x (the gate).
Word gate(const Raag& r, const Word& x, const StandardSubcomplex& c);
/// Distance between two standard subcomplexes.
std::size_t subcomplex_distance(const Raag& r, const StandardSubcomplex& a, const StandardSubcomplex& b);
std::string format(const Raag& r, const StandardSubcomplex& c);

/// Hyperplane of X(G): edges labelled gen whose lower endpoint lies in
/// rep G(lk gen), rep being the shortest element of that coset.
struct WallId {
  std::uint16_t gen = 0;
  Word rep;

  friend auto operator<=>(const WallId&, const WallId&) = default;
};

/// Wall dual to the edge from x to x * gen.
WallId wall_of_edge(const Raag& r, const Word& x, std::size_t gen);
/// Wall dual to the edge between x and x * l (either sign).
WallId wall_of_step(const Raag& r, const Word& x, Letter l);
/// True when x lies on the side of the wall containing rep * gen.
bool upper_side(const Raag& r, const WallId& w, const Word& x);
bool separates(const Raag& r, const WallId& w, const Word& x, const Word& y);
/// Whether the wall crosses (is dual to some edge of) C.
bool crosses(const Raag& r, const WallId& w, const StandardSubcomplex& c);
/// Walls crossed by the canonical geodesic from x to y, in path order.
std::vector<WallId> walls_between(const Raag& r, const Word& x, const Word& y);
std::string format(const Raag& r, const WallId& w);

}  // namespace orthantkit::raag
