#pragma once

// Periodic straight rays in X(G), the orthants they span, mirror lines, and
// the doubling of an orthant into a half-flat.

#include <cstddef>
#include <string>
#include <vector>

#include "orthantkit/ball.hpp"
#include "orthantkit/raag.hpp"

namespace orthantkit::raag {

inline constexpr int kDefaultHorizon = 16;

/// The edge path from base along prefix * period^infinity.
struct PeriodicRay {
  Word base;
  Word prefix;
  Word period;
};

struct RayCheck {
  bool geodesic = true;
  /// Consecutive letters of the period (cyclically) are equal or do not
  /// commute, so incoming and outgoing edges are antipodal in every link.
  bool straight = true;
  int horizon = 0;
  std::string failure;

  bool ok() const { return geodesic && straight; }
};

RayCheck check_ray(const Raag& r, const PeriodicRay& ray, int horizon = kDefaultHorizon);
/// Throws DomainError when check_ray fails.
void validate_ray(const Raag& r, const PeriodicRay& ray, int horizon = kDefaultHorizon);

/// Point at arc length n (in edges) along the ray.
Word ray_point(const Raag& r, const PeriodicRay& ray, std::size_t n);

enum class AngleClass { Parallel, RightAngleOrMore, Undetermined };
std::string to_string(AngleClass a);

struct AngleReport {
  AngleClass verdict = AngleClass::Undetermined;
  int horizon = 0;
  /// Per arc length n: index of the gate of r2(n) on the path r1(0..horizon).
  std::vector<std::size_t> gateIndex;
  /// Per arc length n: d(r1(n), r2(n)).
  std::vector<std::size_t> distance;
};

/// Bounded test of the Tits-angle dichotomy between straight rays. Parallel
/// when the distance d(r1(n), r2(n)) is constant and the gate of r2 on r1
/// keeps advancing over the second half of the horizon; RightAngleOrMore
/// when the gate stalls before the midpoint, leaving walls of r1 uncrossed;
/// Undetermined otherwise. Throws CapExceeded when horizon exceeds cap.
AngleReport ray_angle_class(const Raag& r, const PeriodicRay& r1, const PeriodicRay& r2,
                            int horizon = kDefaultHorizon, std::size_t cap = kDefaultCap);

/// Product region start * prod_i step_i(m_i), where step_i(m) is the first m
/// letters of period_i^infinity for m >= 0 and, along a line, the last -m
/// letters of period_i^-infinity walked backwards for m < 0.
struct Orthant {
  Word start;
  std::vector<Word> periods;
  std::vector<bool> lines;

  struct Point {
    std::vector<long long> coords;
    std::size_t vertex = 0;  // ball index
  };
  std::vector<Point> points;  // sorted by coords

  std::size_t dimension() const { return periods.size(); }
};

Word orthant_point(const Raag& r, const Orthant& o, const std::vector<long long>& coords);

/// Convex hull of straight rays from a common point, restricted to the ball.
/// Requires pairwise RightAngleOrMore rays whose first steps span squares.
/// Throws SpanObstructed when a precondition or the l1 product law fails.
Orthant span_orthant(const std::vector<PeriodicRay>& rays, const DevelopedBall& b);

/// Bi-infinite periodic geodesic through base * prefix.
struct MirrorLine {
  Word base;
  Word prefix;
  Word period;
  int verifiedHorizon = 0;
};

/// Extends the ray backwards by repeating its period. Throws
/// InsufficientRadius when the horizon is shorter than two periods.
MirrorLine mirror_ray(const Raag& r, const PeriodicRay& ray, int horizon = kDefaultHorizon);

/// Replaces the ray in one direction by its mirror line, giving a half-flat.
/// Throws SpanObstructed when the result fails the l1 product law in the ball.
Orthant double_orthant(const Orthant& o, std::size_t direction, const DevelopedBall& b);

/// Whether every pair of points satisfies d = sum |m_i - m'_i|; on failure
/// stores the first offending pair.
bool satisfies_product_law(const Raag& r, const Orthant& o, const DevelopedBall& b, std::string* failure = nullptr);

}  // namespace orthantkit::raag
