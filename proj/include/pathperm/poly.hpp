#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pathperm/complex.hpp"
#include "pathperm/errors.hpp"

namespace pathperm {

// Dense univariate polynomial over C. coeff(k) multiplies x^k. The zero
// polynomial is the empty coefficient sequence; otherwise the leading
// coefficient is nonzero.
class Poly {
 public:
  Poly() = default;

  explicit Poly(std::vector<Cx> coeffs) : c_(std::move(coeffs)) {
    for (Cx v : c_)
      if (!is_finite(v)) throw std::invalid_argument("non-finite polynomial coefficient");
    trim();
  }

  static Poly constant(Cx v) { return Poly(std::vector<Cx>{v}); }

  static Poly monomial(int power, Cx v = 1.0) {
    std::vector<Cx> c(static_cast<size_t>(power) + 1, Cx{0});
    c.back() = v;
    return Poly(std::move(c));
  }

  // Monic polynomial with the given roots.
  static Poly from_roots(const std::vector<Cx>& roots) {
    std::vector<Cx> c{1.0};
    for (Cx r : roots) {
      c.push_back(0.0);
      for (size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
      c[0] *= -r;
    }
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
  const std::vector<Cx>& coeffs() const { return c_; }
  Cx coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : Cx{0};
  }
  Cx leading() const { return c_.empty() ? Cx{0} : c_.back(); }

  Cx eval(Cx z) const {
    Cx acc{0};
    for (size_t k = c_.size(); k-- > 0;) acc = acc * z + c_[k];
    return acc;
  }

  // Horner value together with a running magnitude sum; |p(z)| <= tol * scale
  // is the residual test used by the root finder.
  std::pair<Cx, double> eval_with_scale(Cx z) const {
    Cx acc{0};
    double scale = 0;
    const double az = std::abs(z);
    for (size_t k = c_.size(); k-- > 0;) {
      acc = acc * z + c_[k];
      scale = scale * az + std::abs(c_[k]);
    }
    return {acc, scale};
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly{};
    std::vector<Cx> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    std::vector<Cx> c = c_;
    const Cx lead = c.back();
    for (Cx& v : c) v /= lead;
    return Poly(std::move(c));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Cx> c(std::max(a.c_.size(), b.c_.size()), Cx{0});
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Cx> c(std::max(a.c_.size(), b.c_.size()), Cx{0});
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Cx> c(a.c_.size() + b.c_.size() - 1, Cx{0});
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend Poly operator*(Cx s, const Poly& p) {
    std::vector<Cx> c = p.c_;
    for (Cx& v : c) v *= s;
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& p) { return Cx{-1.0} * p; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  double max_coeff_abs() const {
    double m = 0;
    for (Cx v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  // Drops leading coefficients whose magnitude is below rel * max|c|;
  // interpolation results use this to shed degree-bound padding.
  Poly trimmed(double rel) const {
    const double cut = rel * max_coeff_abs();
    std::vector<Cx> c = c_;
    while (!c.empty() && std::abs(c.back()) <= cut) c.pop_back();
    return Poly(std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Cx{0}) c_.pop_back();
  }

  std::vector<Cx> c_;
};

inline double min_separation(const std::vector<Cx>& roots) {
  if (roots.size() < 2) throw std::invalid_argument("min_separation needs >= 2 points");
  return min_pairwise_distance(roots);
}

namespace detail {
// Deterministic jitter in [0,1); breaks start-configuration symmetry.
inline double lcg_unit(uint32_t k) {
  uint32_t s = 1103515245u * (k + 12345u) + 12345u;
  s = 1103515245u * s + 12345u;
  return static_cast<double>(s >> 8) / static_cast<double>(1u << 24);
}
}  // namespace detail

// Simultaneous all-roots finder (Aberth–Ehrlich). Returns deg(p) roots with
// multiplicity. Deterministic: fixed initial guesses on a circle of radius
// 1 + max|c_k/c_n|, deterministically perturbed. Residual target per point is
// |p(z)| <= tol * sum_k |c_k||z|^k.
inline std::vector<Cx> all_roots(const Poly& p, double tol = 1e-12, int max_iters = 500) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("all_roots: degree must be >= 1");
  if (p.leading() == Cx{0}) throw std::invalid_argument("all_roots: zero leading coefficient");

  const Poly m = p.monic();
  if (n == 1) return {-m.coeff(0)};

  double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(m.coeff(k)));
  radius = 1.0 + radius;

  std::vector<Cx> z(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double theta = kTau * j / n + 0.4 + 0.25 * detail::lcg_unit(static_cast<uint32_t>(j)) / n;
    const double r = radius * (1.0 + 0.05 * detail::lcg_unit(static_cast<uint32_t>(j) + 977u));
    z[static_cast<size_t>(j)] = std::polar(r, theta);
  }

  const Poly dm = m.derivative();
  std::vector<bool> done(static_cast<size_t>(n), false);

  for (int it = 0; it < max_iters; ++it) {
    bool all_done = true;
    for (int i = 0; i < n; ++i) {
      if (done[static_cast<size_t>(i)]) continue;
      const auto [pv, scale] = m.eval_with_scale(z[static_cast<size_t>(i)]);
      if (std::abs(pv) <= tol * std::max(scale, 1e-300)) {
        done[static_cast<size_t>(i)] = true;
        continue;
      }
      all_done = false;
      const Cx dv = dm.eval(z[static_cast<size_t>(i)]);
      Cx newton = (std::abs(dv) > 0) ? pv / dv : Cx{0};
      Cx repulse{0};
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Cx diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
        if (std::abs(diff) < 1e-300) diff = Cx{1e-300, 0};
        repulse += 1.0 / diff;
      }
      const Cx denom = 1.0 - newton * repulse;
      const Cx step = (std::abs(denom) > 1e-300) ? newton / denom : newton;
      z[static_cast<size_t>(i)] -= step;
    }
    if (all_done) return z;
  }
  // Accept whatever converged only if every point meets the residual test.
  for (int i = 0; i < n; ++i) {
    const auto [pv, scale] = m.eval_with_scale(z[static_cast<size_t>(i)]);
    if (std::abs(pv) > tol * std::max(scale, 1e-300))
      throw NonConvergence("all_roots: residual above tolerance after iteration cap");
  }
  return z;
}

}  // namespace pathperm
