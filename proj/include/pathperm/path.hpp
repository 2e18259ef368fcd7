#pragma once

#include <cmath>
#include <variant>
#include <vector>

#include "pathperm/complex.hpp"
#include "pathperm/errors.hpp"

namespace pathperm {

inline constexpr double kJoinTol = 1e-12;

struct LineSeg {
  Cx from;
  Cx to;
};

// Circular arc center + radius, traversed from angle_from to angle_to.
// angle_to > angle_from means counterclockwise; the sweep may exceed 2π.
struct ArcSeg {
  Cx center;
  double radius;
  double angle_from;
  double angle_to;
};

struct PathSegment {
  std::variant<LineSeg, ArcSeg> seg;

  PathSegment(LineSeg l) : seg(l) {}
  PathSegment(ArcSeg a) : seg(a) {
    if (a.radius <= 0) throw std::invalid_argument("arc radius must be positive");
  }

  Cx start() const {
    if (const auto* l = std::get_if<LineSeg>(&seg)) return l->from;
    const auto& a = std::get<ArcSeg>(seg);
    return a.center + std::polar(a.radius, a.angle_from);
  }
  Cx end() const {
    if (const auto* l = std::get_if<LineSeg>(&seg)) return l->to;
    const auto& a = std::get<ArcSeg>(seg);
    return a.center + std::polar(a.radius, a.angle_to);
  }
  double length() const {
    if (const auto* l = std::get_if<LineSeg>(&seg)) return std::abs(l->to - l->from);
    const auto& a = std::get<ArcSeg>(seg);
    return a.radius * std::abs(a.angle_to - a.angle_from);
  }
  // Position at fraction u in [0,1] of the segment.
  Cx at(double u) const {
    if (const auto* l = std::get_if<LineSeg>(&seg)) return l->from + u * (l->to - l->from);
    const auto& a = std::get<ArcSeg>(seg);
    return a.center + std::polar(a.radius, a.angle_from + u * (a.angle_to - a.angle_from));
  }
  PathSegment reversed() const {
    if (const auto* l = std::get_if<LineSeg>(&seg)) return PathSegment(LineSeg{l->to, l->from});
    const auto& a = std::get<ArcSeg>(seg);
    return PathSegment(ArcSeg{a.center, a.radius, a.angle_to, a.angle_from});
  }
};

// Piecewise line/arc path in the parameter plane. Segments must join to
// 1e-12; a closed path additionally returns to its start point.
class ParamPath {
 public:
  ParamPath() = default;

  ParamPath(std::vector<PathSegment> segments, bool closed)
      : segs_(std::move(segments)), closed_(closed) {
    for (size_t k = 0; k + 1 < segs_.size(); ++k)
      if (std::abs(segs_[k].end() - segs_[k + 1].start()) > kJoinTol)
        throw EndpointMismatch("consecutive path segments do not meet");
    if (closed_ && !segs_.empty() &&
        std::abs(segs_.back().end() - segs_.front().start()) > kJoinTol)
      throw NotClosed("closed path does not return to its start point");
  }

  // Stationary loop: a zero-length segment at the given point.
  static ParamPath null_loop(Cx at) {
    return ParamPath({PathSegment(LineSeg{at, at})}, true);
  }

  static ParamPath circle(Cx center, double radius, int turns = 1, double start_angle = 0.0) {
    if (turns == 0) return null_loop(center + std::polar(radius, start_angle));
    return ParamPath(
        {PathSegment(ArcSeg{center, radius, start_angle, start_angle + kTau * turns})}, true);
  }

  bool empty() const { return segs_.empty(); }
  bool closed() const { return closed_; }
  const std::vector<PathSegment>& segments() const { return segs_; }
  Cx start() const { return segs_.empty() ? Cx{0} : segs_.front().start(); }
  Cx end() const { return segs_.empty() ? Cx{0} : segs_.back().end(); }

  double length() const {
    double len = 0;
    for (const auto& s : segs_) len += s.length();
    return len;
  }

 private:
  std::vector<PathSegment> segs_;
  bool closed_ = false;
};

// Loop made of an approach segment, |turns| circles around the target, and
// the return segment. turns > 0 is counterclockwise.
struct Lasso {
  Cx base;
  Cx target;
  double radius;
  int turns;
};

inline ParamPath compile_lasso(const Lasso& l) {
  const double dist = std::abs(l.base - l.target);
  if (!(l.radius > 0)) throw std::invalid_argument("lasso radius must be positive");
  if (l.radius >= dist) throw RadiusTooLarge("lasso radius must be smaller than |base - target|");
  const Cx dir = (l.target - l.base) / dist;
  const Cx entry = l.target - l.radius * dir;
  std::vector<PathSegment> segs;
  segs.emplace_back(LineSeg{l.base, entry});
  if (l.turns != 0) {
    const double phi = std::arg(entry - l.target);
    segs.emplace_back(ArcSeg{l.target, l.radius, phi, phi + kTau * l.turns});
  }
  segs.emplace_back(LineSeg{entry, l.base});
  return ParamPath(std::move(segs), true);
}

inline ParamPath concat(const ParamPath& p, const ParamPath& q) {
  if (p.empty()) return q;
  if (q.empty()) return p;
  if (std::abs(p.end() - q.start()) > kJoinTol)
    throw EndpointMismatch("concat: end of first path differs from start of second");
  std::vector<PathSegment> segs = p.segments();
  segs.insert(segs.end(), q.segments().begin(), q.segments().end());
  const bool closed = std::abs(q.end() - p.start()) <= kJoinTol;
  return ParamPath(std::move(segs), closed);
}

inline ParamPath reverse(const ParamPath& p) {
  std::vector<PathSegment> segs;
  segs.reserve(p.segments().size());
  for (auto it = p.segments().rbegin(); it != p.segments().rend(); ++it)
    segs.push_back(it->reversed());
  return ParamPath(std::move(segs), p.closed());
}

inline ParamPath power(const ParamPath& p, int m) {
  if (!p.closed()) throw NotClosed("power: path must be closed");
  if (m < 1) throw std::invalid_argument("power: exponent must be positive");
  ParamPath out = p;
  for (int k = 1; k < m; ++k) out = concat(out, p);
  return out;
}

// p, then q, then p reversed, then q reversed.
inline ParamPath commutator_path(const ParamPath& p, const ParamPath& q) {
  if (!p.closed() || !q.closed()) throw NotClosed("commutator_path: both paths must be closed");
  if (std::abs(p.start() - q.start()) > kJoinTol)
    throw BaseMismatch("commutator_path: paths must share a base point");
  return concat(concat(p, q), concat(reverse(p), reverse(q)));
}

// Ordered points along the path: all segment endpoints plus enough
// subdivision that consecutive points are at most max_step apart.
inline std::vector<Cx> sample(const ParamPath& p, double max_step) {
  if (!(max_step > 0)) throw std::invalid_argument("sample: max_step must be positive");
  std::vector<Cx> pts;
  if (p.empty()) return pts;
  pts.push_back(p.start());
  for (const auto& s : p.segments()) {
    const int pieces = std::max(1, static_cast<int>(std::ceil(s.length() / max_step)));
    for (int k = 1; k <= pieces; ++k) pts.push_back(s.at(static_cast<double>(k) / pieces));
  }
  return pts;
}

// Total argument increment around w divided by 2π; an integer (up to
// roundoff) for closed paths not passing through w.
inline double winding_number(const ParamPath& p, Cx w) {
  if (p.empty()) return 0.0;
  double min_dist = std::numeric_limits<double>::infinity();
  for (const auto& s : p.segments()) {
    const int probes = 64;
    for (int k = 0; k <= probes; ++k)
      min_dist = std::min(min_dist, std::abs(s.at(static_cast<double>(k) / probes) - w));
  }
  if (!(min_dist > 0)) return std::numeric_limits<double>::quiet_NaN();
  // Step short enough that each increment stays well below π.
  const double step = std::max(min_dist * 0.5, p.length() * 1e-6);
  const auto pts = sample(p, step);
  double total = 0;
  for (size_t k = 0; k + 1 < pts.size(); ++k)
    total += std::arg((pts[k + 1] - w) / (pts[k] - w));
  return total / kTau;
}

}  // namespace pathperm
