#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pathperm/errors.hpp"
#include "pathperm/permutation.hpp"

namespace pathperm {

// Finite set of same-size permutations, kept sorted and deduplicated.
class PermSet {
 public:
  explicit PermSet(int n) : n_(n) {}
  PermSet(int n, std::vector<Permutation> elems) : n_(n) {
    for (auto& p : elems) insert(std::move(p));
  }

  int n() const { return n_; }
  size_t size() const { return elems_.size(); }
  bool contains(const Permutation& p) const { return elems_.count(p) > 0; }
  void insert(Permutation p) {
    if (p.n() != n_) throw SizeMismatch("PermSet: element size differs from set size");
    elems_.insert(std::move(p));
  }
  const std::set<Permutation>& elements() const { return elems_; }

  friend bool operator==(const PermSet& a, const PermSet& b) {
    return a.n_ == b.n_ && a.elems_ == b.elems_;
  }

 private:
  int n_;
  std::set<Permutation> elems_;
};

inline constexpr size_t kClosureSizeLimit = 1'000'000;

// Closure of the generators under composition (breadth-first products).
// A finite set of bijections closed under composition is a group, so this is
// the generated group; inverses come along for free.
inline PermSet generate(const PermSet& gens) {
  if (gens.size() == 0) throw std::invalid_argument("generate: empty generator set");
  PermSet group(gens.n());
  std::vector<Permutation> frontier;
  const Permutation id = Permutation::identity(gens.n());
  group.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& f : frontier) {
      for (const auto& g : gens.elements()) {
        Permutation prod = compose(g, f);
        if (!group.contains(prod)) {
          if (group.size() >= kClosureSizeLimit)
            throw SizeLimit("generate: closure exceeds element limit");
          group.insert(prod);
          next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
  }
  return group;
}

// The group generated by all commutators of elements of s. For the groups in
// scope the commutator set itself is already closed, but we take the closure
// regardless so the result is always "all products of commutators".
inline PermSet commutator_closure_step(const PermSet& s) {
  PermSet comms(s.n());
  for (const auto& x : s.elements())
    for (const auto& y : s.elements()) comms.insert(commutator(x, y));
  return generate(comms);
}

// Smallest d <= max_depth with the d-fold commutator closure trivial;
// nullopt when the chain does not reach {id} (it then stabilizes).
inline std::optional<int> derived_depth_to_trivial(const PermSet& s, int max_depth) {
  PermSet cur = s;
  if (cur.size() == 1) return 0;
  for (int d = 1; d <= max_depth; ++d) {
    PermSet next = commutator_closure_step(cur);
    if (next.size() == 1) return d;
    if (next.size() == cur.size()) return std::nullopt;  // stabilized above {id}
    cur = std::move(next);
  }
  return std::nullopt;
}

inline PermSet symmetric_group(int n) {
  PermSet gens(n);
  if (n == 1) {
    gens.insert(Permutation::identity(1));
    return generate(gens);
  }
  for (int k = 1; k < n; ++k) gens.insert(Permutation::transposition(n, 0, k));
  return generate(gens);
}

inline PermSet alternating_group(int n) {
  const PermSet sym = symmetric_group(n);
  PermSet alt(n);
  for (const auto& p : sym.elements())
    if (is_even(p)) alt.insert(p);
  return alt;
}

inline uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<uint64_t>(k);
  return f;
}

// One certificate per even permutation: an explicit product of commutators of
// even permutations equal to it. factors are (x, y) pairs, the product is
// commutator(x1,y1)∘commutator(x2,y2)∘... applied right-to-left.
struct CommutatorCertificate {
  Permutation target;
  std::vector<std::pair<Permutation, Permutation>> factors;
};

inline Permutation certificate_product(const CommutatorCertificate& cert, int n) {
  Permutation acc = Permutation::identity(n);
  for (auto it = cert.factors.rbegin(); it != cert.factors.rend(); ++it)
    acc = compose(commutator(it->first, it->second), acc);
  return acc;
}

inline std::vector<CommutatorCertificate> even_as_commutators_certificate(int n = 5) {
  const PermSet alt = alternating_group(n);

  // All single commutators of even permutations, with a witness pair each.
  std::map<Permutation, std::pair<Permutation, Permutation>> witness;
  for (const auto& x : alt.elements())
    for (const auto& y : alt.elements()) {
      Permutation c = commutator(x, y);
      if (!witness.count(c)) witness.emplace(std::move(c), std::make_pair(x, y));
    }

  // Breadth-first products of commutators until every even permutation has a
  // factorization. For A5 a single commutator already suffices.
  const Permutation id = Permutation::identity(n);
  std::map<Permutation, std::vector<std::pair<Permutation, Permutation>>> found;
  found[id] = {};
  std::vector<Permutation> frontier{id};
  while (found.size() < alt.size() && !frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& f : frontier) {
      for (const auto& [c, xy] : witness) {
        Permutation prod = compose(c, f);
        if (found.count(prod)) continue;
        auto factors = found[f];
        factors.insert(factors.begin(), xy);
        found.emplace(prod, std::move(factors));
        next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }

  std::vector<CommutatorCertificate> out;
  for (const auto& p : alt.elements()) {
    auto it = found.find(p);
    if (it == found.end())
      throw NonConvergence("even permutation with no commutator-product certificate");
    CommutatorCertificate cert{p, it->second};
    if (certificate_product(cert, n) != p)
      throw NonConvergence("certificate verification failed");
    out.push_back(std::move(cert));
  }
  return out;
}

// Coarse classification used in monodromy reports.
inline std::string group_tag(const PermSet& g) {
  const int n = g.n();
  const uint64_t order = g.size();
  if (order == factorial(n)) return "symmetric";
  bool all_even = true;
  for (const auto& p : g.elements())
    if (!is_even(p)) {
      all_even = false;
      break;
    }
  if (n >= 2 && all_even && order == factorial(n) / 2) return "alternating";
  for (const auto& p : g.elements())
    if (static_cast<uint64_t>(perm_order(p)) == order) return "cyclic";
  return "other";
}

}  // namespace pathperm
