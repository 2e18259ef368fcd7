#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "pathperm/errors.hpp"

namespace pathperm {

// Bijection of {0,...,n-1}. images()[i] is the image of i. User-facing cycle
// notation is 1-based, matching the usual (1 2)(3 4 5) style.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[static_cast<size_t>(v)])
        throw std::invalid_argument("permutation images are not a bijection");
      seen[static_cast<size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  static Permutation transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.img_[static_cast<size_t>(a)], p.img_[static_cast<size_t>(b)]);
    return p;
  }

  // Cycles given with 0-based entries.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(n);
    for (const auto& cyc : cycles) {
      for (size_t k = 0; k < cyc.size(); ++k) {
        const int from = cyc[k];
        const int to = cyc[(k + 1) % cyc.size()];
        if (from < 0 || from >= n || to < 0 || to >= n)
          throw std::invalid_argument("cycle entry out of range");
        if (p.img_[static_cast<size_t>(from)] != from)
          throw std::invalid_argument("cycles are not disjoint");
        p.img_[static_cast<size_t>(from)] = to;
      }
    }
    // from_cycles may produce a non-bijection only via overlapping cycles,
    // which the disjointness check above already rejects.
    return Permutation(std::move(p.img_));
  }

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (img_[static_cast<size_t>(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < n(); ++i) inv[static_cast<size_t>(img_[static_cast<size_t>(i)])] = i;
    return Permutation(std::move(inv));
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

// compose(s, t) applies t first, then s: (s∘t)(i) = s(t(i)).
inline Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.n() != t.n()) throw SizeMismatch("compose: mismatched permutation sizes");
  std::vector<int> img(static_cast<size_t>(s.n()));
  for (int i = 0; i < s.n(); ++i) img[static_cast<size_t>(i)] = s(t(i));
  return Permutation(std::move(img));
}

// s∘t∘s⁻¹∘t⁻¹.
inline Permutation commutator(const Permutation& s, const Permutation& t) {
  if (s.n() != t.n()) throw SizeMismatch("commutator: mismatched permutation sizes");
  return compose(compose(s, t), compose(s.inverse(), t.inverse()));
}

// Disjoint cycles of length >= 2, each starting at its smallest element,
// sorted by that element. 0-based entries.
inline std::vector<std::vector<int>> cycle_decomposition(const Permutation& s) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(static_cast<size_t>(s.n()), false);
  for (int start = 0; start < s.n(); ++start) {
    if (seen[static_cast<size_t>(start)] || s(start) == start) continue;
    std::vector<int> cyc;
    for (int i = start; !seen[static_cast<size_t>(i)]; i = s(i)) {
      seen[static_cast<size_t>(i)] = true;
      cyc.push_back(i);
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

// Parity: sign(+1) iff n minus the number of cycles (fixed points included)
// is even.
inline bool is_even(const Permutation& s) {
  int moved_cycles = 0, moved = 0;
  for (const auto& cyc : cycle_decomposition(s)) {
    ++moved_cycles;
    moved += static_cast<int>(cyc.size());
  }
  return (moved - moved_cycles) % 2 == 0;
}

inline int perm_order(const Permutation& s) {
  int ord = 1;
  for (const auto& cyc : cycle_decomposition(s))
    ord = std::lcm(ord, static_cast<int>(cyc.size()));
  return ord;
}

// "(1 2)(3 4 5)" with 1-based elements; identity prints as "()".
inline std::string to_cycle_string(const Permutation& s) {
  const auto cycles = cycle_decomposition(s);
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cyc[k] + 1);
    }
    out += ')';
  }
  return out;
}

inline Permutation parse_cycles(const std::string& text, int n) {
  std::vector<std::vector<int>> cycles;
  size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  if (text.compare(pos, 2, "id") == 0) {
    pos += 2;
    skip_ws();
    if (pos != text.size()) throw ParseError("trailing text after 'id'");
    return Permutation::identity(n);
  }
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      size_t used = 0;
      int v;
      try {
        v = std::stoi(text.substr(pos), &used);
      } catch (const std::exception&) {
        throw ParseError("bad cycle entry in '" + text + "'");
      }
      pos += used;
      if (v < 1 || v > n) throw ParseError("cycle entry out of range 1.." + std::to_string(n));
      cyc.push_back(v - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  try {
    return Permutation::from_cycles(n, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace pathperm
