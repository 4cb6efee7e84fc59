#include "orthantkit/rays.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "orthantkit/error.hpp"

namespace orthantkit::raag {

RayCheck check_ray(const Raag& r, const PeriodicRay& ray, int horizon) {
  RayCheck out;
  out.horizon = horizon;
  if (ray.period.empty()) {
    out.geodesic = out.straight = false;
    out.failure = "empty period";
    return out;
  }
  const auto& p = ray.period;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto a = p[i];
    auto b = p[(i + 1) % p.size()];
    if (a != b && !(r.dependent(a, b) && a != inverse(b))) {
      out.straight = false;
      out.failure = "consecutive period letters " + r.format(a) + ", " + r.format(b) + " span a square";
      break;
    }
  }
  Word w = ray.prefix;
  for (std::size_t k = 1; k <= 2 || w.size() + p.size() <= static_cast<std::size_t>(horizon); ++k) {
    w = concat(w, p);
    if (r.canonicalize(w).size() != w.size()) {
      out.geodesic = false;
      if (out.failure.empty()) out.failure = "prefix * period^" + std::to_string(k) + " is not geodesic";
      break;
    }
  }
  return out;
}

void validate_ray(const Raag& r, const PeriodicRay& ray, int horizon) {
  auto c = check_ray(r, ray, horizon);
  if (!c.ok()) throw DomainError("invalid ray: " + c.failure);
}

Word ray_point(const Raag& r, const PeriodicRay& ray, std::size_t n) {
  Word w = ray.base;
  for (std::size_t i = 0; i < n; ++i) {
    w.push_back(i < ray.prefix.size() ? ray.prefix[i] : ray.period[(i - ray.prefix.size()) % ray.period.size()]);
  }
  return r.canonicalize(w);
}

std::string to_string(AngleClass a) {
  switch (a) {
    case AngleClass::Parallel:
      return "Parallel";
    case AngleClass::RightAngleOrMore:
      return "RightAngleOrMore";
    default:
      return "Undetermined";
  }
}

AngleReport ray_angle_class(const Raag& r, const PeriodicRay& r1, const PeriodicRay& r2, int horizon,
                            std::size_t cap) {
  if (horizon < 2) throw DomainError("angle horizon must be at least 2");
  if (static_cast<std::size_t>(horizon) > cap) {
    throw CapExceeded("horizon " + std::to_string(horizon) + " exceeds the cap of " + std::to_string(cap));
  }
  validate_ray(r, r1, horizon);
  validate_ray(r, r2, horizon);
  const auto h = static_cast<std::size_t>(horizon);
  std::vector<Word> path;
  for (std::size_t i = 0; i <= h; ++i) path.push_back(ray_point(r, r1, i));
  AngleReport out;
  out.horizon = horizon;
  for (std::size_t n = 0; n <= h; ++n) {
    auto y = ray_point(r, r2, n);
    std::size_t best = 0;
    std::size_t best_d = r.distance(y, path[0]);
    for (std::size_t i = 1; i <= h; ++i) {
      auto d = r.distance(y, path[i]);
      if (d < best_d) {
        best = i;
        best_d = d;
      }
    }
    out.gateIndex.push_back(best);
    out.distance.push_back(r.distance(path[n], y));
  }
  const auto mid = h / 2;
  bool distance_stable = true;
  bool gate_stalled = true;
  for (std::size_t n = mid; n <= h; ++n) {
    distance_stable = distance_stable && out.distance[n] == out.distance[mid];
    gate_stalled = gate_stalled && out.gateIndex[n] == out.gateIndex[mid];
  }
  if (gate_stalled && out.gateIndex[h] < mid) {
    out.verdict = AngleClass::RightAngleOrMore;
  } else if (distance_stable && out.gateIndex[h] > out.gateIndex[mid]) {
    out.verdict = AngleClass::Parallel;
  }
  return out;
}

namespace {

Word step(const Word& period, long long m) {
  Word w;
  const auto n = static_cast<long long>(period.size());
  if (m >= 0) {
    for (long long t = 0; t < m; ++t) w.push_back(period[t % n]);
  } else {
    for (long long t = 1; t <= -m; ++t) w.push_back(inverse(period[((-t) % n + n) % n]));
  }
  return w;
}

// Fills o.points with every coordinate vector whose point lies in the ball.
void collect_points(const Raag& r, Orthant& o, const DevelopedBall& b) {
  const auto budget = static_cast<long long>(b.radius() + r.distance(b.center(), o.start));
  o.points.clear();
  std::vector<long long> coords(o.dimension(), 0);
  std::function<void(std::size_t, long long)> rec = [&](std::size_t i, long long left) {
    if (i == o.dimension()) {
      if (auto v = b.find(orthant_point(r, o, coords))) o.points.push_back(Orthant::Point{coords, *v});
      return;
    }
    for (long long m = o.lines[i] ? -left : 0; m <= left; ++m) {
      coords[i] = m;
      rec(i + 1, left - std::llabs(m));
    }
    coords[i] = 0;
  };
  rec(0, budget);
  std::sort(o.points.begin(), o.points.end(),
            [](const Orthant::Point& a, const Orthant::Point& c) { return a.coords < c.coords; });
}

}  // namespace

Word orthant_point(const Raag& r, const Orthant& o, const std::vector<long long>& coords) {
  Word w = o.start;
  for (std::size_t i = 0; i < o.dimension(); ++i) w = concat(w, step(o.periods[i], coords[i]));
  return r.canonicalize(w);
}

bool satisfies_product_law(const Raag& r, const Orthant& o, const DevelopedBall& b, std::string* failure) {
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    for (std::size_t j = i + 1; j < o.points.size(); ++j) {
      long long expected = 0;
      for (std::size_t k = 0; k < o.dimension(); ++k) expected += std::llabs(o.points[i].coords[k] - o.points[j].coords[k]);
      auto actual = r.distance(b.vertex(o.points[i].vertex), b.vertex(o.points[j].vertex));
      if (static_cast<long long>(actual) != expected) {
        if (failure) {
          *failure = "d(" + r.format(b.vertex(o.points[i].vertex)) + ", " + r.format(b.vertex(o.points[j].vertex)) +
                     ") = " + std::to_string(actual) + ", expected " + std::to_string(expected);
        }
        return false;
      }
    }
  }
  return true;
}

Orthant span_orthant(const std::vector<PeriodicRay>& rays, const DevelopedBall& b) {
  const auto& r = b.raag();
  if (rays.empty()) throw SpanObstructed("no rays to span");
  Orthant o;
  o.start = r.canonicalize(concat(rays[0].base, rays[0].prefix));
  for (const auto& ray : rays) {
    validate_ray(r, ray);
    if (r.canonicalize(concat(ray.base, ray.prefix)) != o.start) {
      throw SpanObstructed("rays do not start at a common vertex");
    }
    o.periods.push_back(ray.period);
    o.lines.push_back(false);
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      auto a = rays[i].period.front();
      auto c = rays[j].period.front();
      if (a.gen == c.gen || !r.graph().adjacent(a.gen, c.gen)) {
        throw SpanObstructed("first steps " + r.format(a) + " and " + r.format(c) + " span no square at " +
                             r.format(o.start));
      }
      PeriodicRay ri{o.start, {}, rays[i].period};
      PeriodicRay rj{o.start, {}, rays[j].period};
      auto angle = ray_angle_class(r, ri, rj).verdict;
      if (angle != AngleClass::RightAngleOrMore) {
        throw SpanObstructed("rays " + std::to_string(i) + " and " + std::to_string(j) + " are " + to_string(angle) +
                             ", not at a right angle");
      }
    }
  }
  collect_points(r, o, b);
  std::string why;
  if (!satisfies_product_law(r, o, b, &why)) throw SpanObstructed("hull is not a product orthant: " + why);
  return o;
}

MirrorLine mirror_ray(const Raag& r, const PeriodicRay& ray, int horizon) {
  validate_ray(r, ray, horizon);
  if (static_cast<std::size_t>(horizon) < 2 * ray.period.size()) {
    throw InsufficientRadius("verification horizon " + std::to_string(horizon) + " is shorter than two periods");
  }
  Word w;
  for (std::size_t k = 1; k * ray.period.size() <= static_cast<std::size_t>(horizon); ++k) {
    w = concat(w, ray.period);
    if (r.canonicalize(w).size() != w.size()) {
      throw DomainError("period^" + std::to_string(k) + " is not geodesic");
    }
  }
  return MirrorLine{ray.base, ray.prefix, ray.period, horizon};
}

Orthant double_orthant(const Orthant& o, std::size_t direction, const DevelopedBall& b) {
  const auto& r = b.raag();
  if (direction >= o.dimension()) throw DomainError("orthant has no direction " + std::to_string(direction));
  if (o.lines[direction]) throw DomainError("direction " + std::to_string(direction) + " is already a line");
  mirror_ray(r, PeriodicRay{o.start, {}, o.periods[direction]});
  Orthant out = o;
  out.lines[direction] = true;
  collect_points(r, out, b);
  std::string why;
  if (!satisfies_product_law(r, out, b, &why)) throw SpanObstructed("doubled region is not a half-flat: " + why);
  return out;
}

}  // namespace orthantkit::raag
