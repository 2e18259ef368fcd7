#pragma once

#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathperm {

using Cx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTau = 2.0 * std::numbers::pi;

inline bool is_finite(Cx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline double round_to(double x, double grid) {
  return std::round(x / grid) * grid;
}

// Lexicographic (re, im) order after snapping to a grid; used for canonical
// root numbering so that axis-symmetric root sets sort stably.
inline bool lex_less(Cx a, Cx b, double grid = 1e-9) {
  const double ar = round_to(a.real(), grid), br = round_to(b.real(), grid);
  if (ar != br) return ar < br;
  return round_to(a.imag(), grid) < round_to(b.imag(), grid);
}

inline std::string format_real(double x, int sig = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", sig, x == 0.0 ? 0.0 : x);
  return buf;
}

// "re+imi" text form, 12 significant digits by default.
inline std::string format_complex(Cx z, int sig = 12) {
  const double re = z.real(), im = z.imag();
  if (im == 0.0) return format_real(re, sig);
  if (re == 0.0) {
    if (im == 1.0) return "i";
    if (im == -1.0) return "-i";
    return format_real(im, sig) + "i";
  }
  std::string s = format_real(re, sig);
  if (im > 0 || std::isnan(im)) s += "+";
  if (im == 1.0) return s + "i";
  if (im == -1.0) return s + "-i";
  return s + format_real(im, sig) + "i";
}

// Parses "re", "imi", "re+imi", "i", "-i", "3-4i" and the like.
inline Cx parse_complex(const std::string& text) {
  size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  // one signed term: [sign] (number ['i'] | 'i')
  const auto term = [&](bool& is_imag) -> double {
    skip_ws();
    double sign = 1.0;
    while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -sign;
      ++pos;
      skip_ws();
    }
    is_imag = false;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'I')) {
      ++pos;
      is_imag = true;
      return sign;
    }
    size_t used = 0;
    double v;
    try {
      v = std::stod(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad complex literal: '" + text + "'");
    }
    pos += used;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'I')) {
      ++pos;
      is_imag = true;
    }
    return sign * v;
  };

  double re = 0, im = 0;
  bool any = false;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    bool is_imag = false;
    double v = term(is_imag);
    (is_imag ? im : re) += v;
    any = true;
    skip_ws();
    if (pos < text.size() && text[pos] != '+' && text[pos] != '-')
      throw std::invalid_argument("bad complex literal: '" + text + "'");
  }
  if (!any) throw std::invalid_argument("empty complex literal");
  return {re, im};
}

inline double min_pairwise_distance(const std::vector<Cx>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      best = std::min(best, std::abs(pts[i] - pts[j]));
  return best;
}

}  // namespace pathperm
