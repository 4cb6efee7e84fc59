#include "orthantkit/raag.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "orthantkit/error.hpp"

namespace orthantkit::raag {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.inverse = !l.inverse;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto l : w) {
    h ^= (static_cast<std::size_t>(l.gen) << 1) | static_cast<std::size_t>(l.inverse);
    h *= 0x100000001b3ull;
  }
  return h;
}

Raag::Raag(graph::SimplicialGraph g) : graph_(std::move(g)) {}

Word Raag::canonicalize(const Word& w) const {
  Word r;
  r.reserve(w.size());
  for (auto l : w) {
    if (l.gen >= rank()) throw InputError("unknown generator index " + std::to_string(l.gen));
    bool cancelled = false;
    for (std::size_t i = r.size(); i-- > 0;) {
      if (!dependent(r[i], l)) continue;
      if (r[i] == raag::inverse(l)) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        cancelled = true;
      }
      break;
    }
    if (!cancelled) r.push_back(l);
  }
  return lex_normal(r);
}

Word Raag::lex_normal(const Word& reduced) const {
  const std::size_t n = reduced.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (dependent(reduced[i], reduced[j])) ++indegree[j];
    }
  }
  std::vector<bool> used(n, false);
  Word out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && indegree[i] == 0 && (best == n || reduced[i] < reduced[best])) best = i;
    }
    used[best] = true;
    out.push_back(reduced[best]);
    for (std::size_t j = best + 1; j < n; ++j) {
      if (!used[j] && dependent(reduced[best], reduced[j])) --indegree[j];
    }
  }
  return out;
}

std::vector<std::size_t> Raag::initial_positions(const Word& w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool free = true;
    for (std::size_t j = 0; j < i && free; ++j) free = !dependent(w[j], w[i]);
    if (free) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> Raag::terminal_positions(const Word& w) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool free = true;
    for (std::size_t j = i + 1; j < w.size() && free; ++j) free = !dependent(w[i], w[j]);
    if (free) out.push_back(i);
  }
  return out;
}

bool Raag::is_initial(const Word& w, Letter l) const {
  for (auto i : initial_positions(w)) {
    if (w[i] == l) return true;
  }
  return false;
}

Word Raag::peel_initial(const Word& w, VertexSet gens, Word* peeled) const {
  Word rest = w;
  Word taken;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto i : initial_positions(rest)) {
      if (!graph::contains(gens, rest[i].gen)) continue;
      taken.push_back(rest[i]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  if (peeled) *peeled = lex_normal(taken);
  return lex_normal(rest);
}

Word Raag::peel_terminal(const Word& w, VertexSet gens, Word* peeled) const {
  Word rest = w;
  Word taken;
  for (bool changed = true; changed;) {
    changed = false;
    auto positions = terminal_positions(rest);
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
      if (!graph::contains(gens, rest[*it].gen)) continue;
      taken.insert(taken.begin(), rest[*it]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*it));
      changed = true;
      break;
    }
  }
  if (peeled) *peeled = lex_normal(taken);
  return lex_normal(rest);
}

Word Raag::min_double_coset_rep(const Word& u, VertexSet left, VertexSet right) const {
  Word cur = canonicalize(u);
  for (;;) {
    auto next = peel_terminal(peel_initial(cur, left), right);
    if (next.size() == cur.size()) return next;
    cur = std::move(next);
  }
}

bool Raag::in_subgroup(const Word& w, VertexSet gens) const {
  return std::all_of(w.begin(), w.end(), [&](Letter l) { return graph::contains(gens, l.gen); });
}

namespace {

constexpr long long kMaxExponent = 1000000;

}  // namespace

Word Raag::parse(std::string_view text) const {
  Word out;
  std::size_t i = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '.'; };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    auto start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    std::string token(text.substr(start, i - start));
    std::string name = token;
    long long power = 1;
    auto caret = token.find('^');
    if (caret != std::string::npos) {
      name = token.substr(0, caret);
      auto digits = std::string_view(token).substr(caret + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
        throw InputError("bad exponent in word token '" + token + "'", 1, start + caret + 2);
      }
      if (power == 0 || power > kMaxExponent || power < -kMaxExponent) {
        throw InputError("exponent out of range in word token '" + token + "'", 1, start + caret + 2);
      }
    }
    auto gen = graph_.find(name);
    if (!gen) {
      if (name == "e" && caret == std::string::npos) continue;
      throw InputError("unknown generator '" + name + "'", 1, start + 1);
    }
    Letter l{static_cast<std::uint16_t>(*gen), power < 0};
    for (long long k = 0; k < (power < 0 ? -power : power); ++k) out.push_back(l);
  }
  return out;
}

std::string Raag::format(Letter l) const { return graph_.id(l.gen) + (l.inverse ? "^-1" : ""); }

std::string Raag::format(const Word& w) const {
  if (w.empty()) return graph_.find("e") ? "" : "e";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i) out += ' ';
    out += graph_.id(w[i].gen);
    const auto run = static_cast<long long>(j - i);
    if (run > 1 || w[i].inverse) out += "^" + std::to_string(w[i].inverse ? -run : run);
    i = j;
  }
  return out;
}

VertexSet Raag::support(const Word& w) const {
  VertexSet s = 0;
  for (auto l : w) s |= graph::bit(l.gen);
  return s;
}

StandardSubcomplex standard_subcomplex(const Raag& r, const Word& h, VertexSet subgraph) {
  return StandardSubcomplex{r.min_coset_rep(h, subgraph), subgraph};
}

bool contains(const Raag& r, const StandardSubcomplex& c, const Word& x) {
  return r.in_subgroup(r.canonicalize(concat(inverse(c.cosetRep), x)), c.subgraph);
}

Word gate(const Raag& r, const Word& x, const StandardSubcomplex& c) {
  Word p;
  r.peel_initial(r.canonicalize(concat(inverse(c.cosetRep), x)), c.subgraph, &p);
  return r.multiply(c.cosetRep, p);
}

std::size_t subcomplex_distance(const Raag& r, const StandardSubcomplex& a, const StandardSubcomplex& b) {
  return r.min_double_coset_rep(concat(inverse(a.cosetRep), b.cosetRep), a.subgraph, b.subgraph).size();
}

std::string format(const Raag& r, const StandardSubcomplex& c) {
  return r.format(c.cosetRep) + "@" + r.graph().format_set(c.subgraph);
}

WallId wall_of_edge(const Raag& r, const Word& x, std::size_t gen) {
  return WallId{static_cast<std::uint16_t>(gen), r.min_coset_rep(x, link_of(r, gen))};
}

WallId wall_of_step(const Raag& r, const Word& x, Letter l) {
  if (!l.inverse) return wall_of_edge(r, x, l.gen);
  return wall_of_edge(r, r.multiply(x, Word{l}), l.gen);
}

bool upper_side(const Raag& r, const WallId& w, const Word& x) {
  return r.is_initial(r.canonicalize(concat(inverse(w.rep), x)), Letter{w.gen, false});
}

bool separates(const Raag& r, const WallId& w, const Word& x, const Word& y) {
  return upper_side(r, w, x) != upper_side(r, w, y);
}

bool crosses(const Raag& r, const WallId& w, const StandardSubcomplex& c) {
  if (!graph::contains(c.subgraph, w.gen)) return false;
  return r.min_double_coset_rep(concat(inverse(c.cosetRep), w.rep), c.subgraph, link_of(r, w.gen)).empty();
}

std::vector<WallId> walls_between(const Raag& r, const Word& x, const Word& y) {
  auto u = r.canonicalize(concat(inverse(x), y));
  std::vector<WallId> out;
  Word cur = r.canonicalize(x);
  for (auto l : u) {
    out.push_back(wall_of_step(r, cur, l));
    cur = r.multiply(cur, Word{l});
  }
  return out;
}

std::string format(const Raag& r, const WallId& w) {
  return r.graph().id(w.gen) + "|" + r.format(w.rep);
}

}  // namespace orthantkit::raag
