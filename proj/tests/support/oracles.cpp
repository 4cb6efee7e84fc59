#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace testsupport {

namespace {

constexpr std::uint8_t kSpacer = 0;

std::uint8_t code(Letter l) { return l.inverse ? 2 : 1; }

}  // namespace

void Piling::push(Letter l) {
  auto& own = stacks_[l.gen];
  const auto others = ~g_->neighbors(l.gen) & g_->all() & ~orthantkit::graph::bit(l.gen);
  const std::uint8_t inv = l.inverse ? 1 : 2;
  if (!own.empty() && own.back() == inv) {
    own.pop_back();
    for (auto t : orthantkit::graph::members(others)) stacks_[t].pop_back();
    --length_;
    return;
  }
  own.push_back(code(l));
  for (auto t : orthantkit::graph::members(others)) stacks_[t].push_back(kSpacer);
  ++length_;
}

VertexSet Piling::support() const {
  VertexSet s = 0;
  for (std::size_t i = 0; i < stacks_.size(); ++i) {
    if (std::any_of(stacks_[i].begin(), stacks_[i].end(), [](std::uint8_t c) { return c != kSpacer; })) {
      s |= orthantkit::graph::bit(i);
    }
  }
  return s;
}

std::vector<std::uint8_t> Piling::key() const {
  std::vector<std::uint8_t> k;
  for (const auto& s : stacks_) {
    k.insert(k.end(), s.begin(), s.end());
    k.push_back(3);
  }
  return k;
}

std::vector<std::uint8_t> piling_key(const SimplicialGraph& g, const Word& w) {
  Piling p(g);
  p.push(w);
  return p.key();
}

std::size_t KeyHash::operator()(const std::vector<std::uint8_t>& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto c : k) h = (h ^ c) * 1099511628211ull;
  return h;
}

CayleyBall::CayleyBall(const SimplicialGraph& g, int radius) : g_(g) {
  words_.push_back({});
  index_[piling_key(g, {})] = 0;
  std::vector<int> level{0};
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint16_t s = 0; s < g.size(); ++s) {
      for (bool inv : {false, true}) {
        auto w = words_[i];
        w.push_back(Letter{s, inv});
        auto k = piling_key(g, w);
        auto it = index_.find(k);
        if (it == index_.end()) {
          if (level[i] == radius) continue;
          index_.emplace(k, words_.size());
          words_.push_back(w);
          level.push_back(level[i] + 1);
        }
      }
    }
  }
  const auto n = words_.size();
  adj_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint16_t s = 0; s < g.size(); ++s) {
      for (bool inv : {false, true}) {
        auto w = words_[i];
        w.push_back(Letter{s, inv});
        auto it = index_.find(piling_key(g, w));
        if (it != index_.end()) adj_[i].push_back(it->second);
      }
    }
    std::sort(adj_[i].begin(), adj_[i].end());
    edges_ += adj_[i].size();
  }
  edges_ /= 2;
  dist_.assign(n * n, std::numeric_limits<std::size_t>::max());
  for (std::size_t src = 0; src < n; ++src) {
    std::deque<std::size_t> q{src};
    dist_[src * n + src] = 0;
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      for (auto u : adj_[v]) {
        if (dist_[src * n + u] == std::numeric_limits<std::size_t>::max()) {
          dist_[src * n + u] = dist_[src * n + v] + 1;
          q.push_back(u);
        }
      }
    }
  }
}

std::optional<std::size_t> CayleyBall::find(const Word& w) const {
  auto it = index_.find(piling_key(g_, w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> CayleyBall::coset_members(const Word& h, VertexSet gens) const {
  std::vector<std::size_t> out;
  auto hinv = orthantkit::raag::inverse(h);
  for (std::size_t i = 0; i < size(); ++i) {
    Piling p(g_);
    p.push(hinv);
    p.push(words_[i]);
    if ((p.support() & ~gens) == 0) out.push_back(i);
  }
  return out;
}

std::vector<VertexSet> max_cliques_oracle(const SimplicialGraph& g) {
  std::vector<VertexSet> cliques;
  int best = 0;
  for (VertexSet s = 1; s < (VertexSet{1} << g.size()); ++s) {
    bool clique = true;
    for (auto i : orthantkit::graph::members(s)) {
      for (auto j : orthantkit::graph::members(s)) {
        if (i < j && !g.adjacent(i, j)) clique = false;
      }
    }
    if (!clique) continue;
    int k = std::popcount(s);
    if (k > best) {
      best = k;
      cliques.clear();
    }
    if (k == best) cliques.push_back(s);
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

std::size_t clique_count_oracle(const SimplicialGraph& g, int k) {
  std::size_t n = 0;
  for (VertexSet s = 0; s < (VertexSet{1} << g.size()); ++s) {
    if (std::popcount(s) != k) continue;
    bool clique = true;
    for (auto i : orthantkit::graph::members(s)) {
      for (auto j : orthantkit::graph::members(s)) {
        if (i < j && !g.adjacent(i, j)) clique = false;
      }
    }
    n += clique;
  }
  return n;
}

bool pd_oracle(const SimplicialGraph& g, int d) {
  auto tops = max_cliques_oracle(g);
  if (tops.empty()) return false;
  std::vector<bool> seen(tops.size(), false);
  std::deque<std::size_t> q{0};
  seen[0] = true;
  while (!q.empty()) {
    auto i = q.front();
    q.pop_front();
    for (std::size_t j = 0; j < tops.size(); ++j) {
      if (!seen[j] && std::popcount(tops[i] & tops[j]) >= d) {
        seen[j] = true;
        q.push_back(j);
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    bool ok = false;
    for (auto t : tops) ok = ok || std::popcount(t & g.neighbors(v)) >= d;
    if (!ok) return false;
  }
  return true;
}

}  // namespace testsupport
