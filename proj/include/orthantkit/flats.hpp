#pragma once

// Graphs of top-dimensional standard flats, the P_d connectivity criterion,
// join-distance witnesses and the diameter classifier.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orthantkit/ball.hpp"
#include "orthantkit/graph.hpp"
#include "orthantkit/raag.hpp"
#include "vendor_json.hpp"

namespace orthantkit::flats {

using graph::VertexSet;
using raag::StandardSubcomplex;

struct LocalFlatGraph {
  int d = 1;
  std::vector<StandardSubcomplex> nodes;             // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  /// Dimension of the coarse intersection per edge.
  std::vector<int> intersectionDim;
  /// Node pairs left undecided because the ball was too small.
  std::size_t undecided = 0;
  /// Radius of the ball used, or -1 for the combinatorial graph.
  int radius = -1;

  bool connected() const;
  /// Plain graph on node names "rep@{a,b}".
  graph::SimplicialGraph as_graph(const raag::Raag& r) const;
  /// Subgraph on the nodes containing vertex x.
  LocalFlatGraph through(const raag::Raag& r, const raag::Word& x) const;
};

/// Top-dimensional standard flats through the identity, adjacent when their
/// cliques share at least d vertices. Throws DomainError when d < 1 or g has
/// no vertices.
LocalFlatGraph local_flat_graph(const graph::SimplicialGraph& g, int d);

/// Top-dimensional standard flats meeting the ball, adjacent when their
/// coarse intersection has dimension >= d. The dimension is read off the
/// minimizing set Y1 at a vertex whose neighbours all lie in the ball; pairs
/// without such a vertex are counted in `undecided` and get no edge.
LocalFlatGraph ball_flat_graph(const raag::DevelopedBall& b, int d);

struct GsdReport {
  bool connected = false;
  bool galleryCondition = false;
  bool linkCondition = false;
};

/// Connectivity of the d-flat graph via its two graph conditions: maximum
/// cliques are linked through shared d-subsets, and every vertex has >= d
/// neighbours inside one maximum clique. Throws DomainError unless
/// 1 <= d <= clique number.
GsdReport gsd_connected(const graph::SimplicialGraph& g, int d);

inline constexpr int kDefaultWitnessRadius = 2;

struct WitnessReport {
  std::vector<std::size_t> walk;  // closed walk in the complement, first vertex repeated at the end
  raag::Word W;
  raag::Word Wprime;
  bool hamiltonian = false;
  bool geodesicVerified = false;
  /// No two consecutive letters of W' commute, so their walls differ.
  bool consecutiveNonCommuting = false;
  /// Every wall along W' misses both flats and separates them.
  bool separationVerified = false;
  std::vector<std::size_t> nonSeparatingWalls;  // 1-based positions along W'
  /// Radius of the windows around x1 and x2 on which sides were sampled.
  int verificationRadius = 0;
  StandardSubcomplex F1;
  StandardSubcomplex F2;
};

/// Witness that the two flats spanned by one maximum clique at the ends of
/// W' = W^8 are far apart in the 1-flat graph. Returns nullopt when the
/// complement of g is disconnected (g is a join). Throws DomainError when g
/// has fewer than two vertices.
std::optional<WitnessReport> join_witness(const graph::SimplicialGraph& g, int radius = kDefaultWitnessRadius);

enum class G1Class { AtMost2, Infinite };
std::string to_string(G1Class c);

struct Classification {
  G1Class verdict = G1Class::AtMost2;
  std::optional<WitnessReport> witness;
};

/// AtMost2 when g is one vertex or a nontrivial join, Infinite otherwise.
Classification g1_classifier(const graph::SimplicialGraph& g, int radius = kDefaultWitnessRadius);

nlohmann::json to_json(const raag::Raag& r, const LocalFlatGraph& f);
nlohmann::json to_json(const raag::Raag& r, const WitnessReport& w);
nlohmann::json to_json(const raag::Raag& r, const Classification& c);
nlohmann::json to_json(const GsdReport& g);
std::string to_dot(const raag::Raag& r, const LocalFlatGraph& f);

}  // namespace orthantkit::flats
