#pragma once

// Independent reference computations used to cross-check the library.
// They deliberately take different routes: brute force over subsets and
// partitions, element-by-element sums, floating-point evaluation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "superchar/heilbronn.hpp"

namespace oracle {

using namespace superchar;

inline std::complex<double> numeric(const Cyclotomic& c) {
  std::complex<double> z = 0;
  const double e = c.order();
  for (std::size_t k = 0; k < c.coeffs().size(); ++k)
    z += c.coeffs()[k].get_d() * std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / e);
  return z;
}

/// Closure of a generating set by repeated multiplication.
inline std::vector<int> closure(const FiniteGroup& g, std::vector<int> gens) {
  std::set<int> seen{0};
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int s : gens) {
        const int b = g.mul(a, s);
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Every subset containing 0 that is closed under multiplication (order <= 16).
inline std::set<std::vector<int>> subgroups_by_subsets(const FiniteGroup& g) {
  std::set<std::vector<int>> out;
  const int n = g.order();
  for (long mask = 0; mask < (1L << (n - 1)); ++mask) {
    std::vector<int> s{0};
    for (int i = 1; i < n; ++i)
      if (mask & (1L << (i - 1))) s.push_back(i);
    bool closed = true;
    for (int a : s) {
      for (int b : s)
        if (!std::binary_search(s.begin(), s.end(), g.mul(a, b))) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.insert(s);
  }
  return out;
}

/// Every subgroup generated by at most two elements.
inline std::set<std::vector<int>> two_generated_subgroups(const FiniteGroup& g) {
  std::set<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a)
    for (int b = a; b < g.order(); ++b) out.insert(closure(g, {a, b}));
  return out;
}

inline int derived_subgroup_order(const FiniteGroup& g) {
  std::vector<int> comms;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return static_cast<int>(closure(g, comms).size());
}

/// Degree multisets consistent with: [G:G'] linear characters, one row per
/// class, every degree dividing |G|, and sum of squares |G|.
inline std::vector<std::vector<int>> degree_solutions(const FiniteGroup& g) {
  const int n = g.order();
  const int r = static_cast<int>(g.class_count());
  const int linear = n / derived_subgroup_order(g);
  std::vector<int> divisors;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(linear, 1);
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (static_cast<int>(cur.size()) == r) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < divisors.size(); ++i) {
      const int d = divisors[i];
      if (d * d > left) break;
      cur.push_back(d);
      rec(i, left - d * d);
      cur.pop_back();
    }
  };
  if (linear <= r) rec(0, n - linear);
  return out;
}

/// Row and column orthogonality evaluated in floating point.
inline bool numeric_orthogonality(const CharacterTable& t, double tol = 1e-9) {
  const auto& g = *t.group();
  const auto& cc = t.classes();
  const std::size_t r = cc.count();
  if (t.size() != r) return false;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      std::complex<double> s = 0;
      for (int x = 0; x < g.order(); ++x) s += numeric(t.row(i).at_element(x)) * std::conj(numeric(t.row(j).at_element(x)));
      s /= g.order();
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > tol) return false;
    }
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      std::complex<double> s = 0;
      for (std::size_t i = 0; i < r; ++i) s += numeric(t.row(i)[a]) * std::conj(numeric(t.row(i)[b]));
      const double want = a == b ? static_cast<double>(g.order()) / cc.size_of(a) : 0.0;
      if (std::abs(s - want) > tol) return false;
    }
  return true;
}

/// Ind f(g) = (1/|H|) sum over x in G with x g x^-1 in H of f(x g x^-1).
inline std::vector<Cyclotomic> induce_elementwise(const ClassFunction& f, const Subgroup& h) {
  const auto& g = *h.parent();
  std::vector<Cyclotomic> out(g.order());
  for (int y = 0; y < g.order(); ++y) {
    Cyclotomic s;
    for (int x = 0; x < g.order(); ++x) {
      const int c = g.conjugate(y, x);
      if (h.contains(c)) s += f.at_element(h.to_local(c));
    }
    out[y] = scale(BigRational(1, h.order()), s);
  }
  return out;
}

/// All set partitions of {0..n-1}.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      rec(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

/// Number of pairs (X, K), X a partition of Irr(G) and K a partition of the
/// group's elements, meeting the three defining conditions. No pruning.
inline int count_theories_naive(const CharacterTable& t) {
  const auto& g = *t.group();
  const auto irr_parts = set_partitions(static_cast<int>(t.size()));
  const auto el_parts = set_partitions(g.order());
  int count = 0;
  for (const auto& xs : irr_parts) {
    std::vector<std::vector<Cyclotomic>> sig;
    for (const auto& x : xs) {
      std::vector<Cyclotomic> v(g.order());
      for (int e = 0; e < g.order(); ++e)
        for (int i : x) v[e] += Cyclotomic(BigRational(t.degree(i))) * t.row(i).at_element(e);
      sig.push_back(std::move(v));
    }
    for (const auto& ks : el_parts) {
      if (ks.size() != xs.size()) continue;
      bool ok = true;
      for (const auto& k : ks)
        if (std::find(k.begin(), k.end(), 0) != k.end() && k.size() != 1) ok = false;
      for (std::size_t a = 0; a < sig.size() && ok; ++a)
        for (const auto& k : ks) {
          for (int e : k)
            if (sig[a][e] != sig[a][k.front()]) {
              ok = false;
              break;
            }
          if (!ok) break;
        }
      if (ok) ++count;
    }
  }
  return count;
}

inline Cyclotomic random_cyclotomic(std::mt19937_64& rng, int order, int range = 3) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 3);
  Cyclotomic z;
  for (int k = 0; k < std::max(1, euler_phi(order)); ++k)
    z += scale(BigRational(num(rng), den(rng)), Cyclotomic::zeta(order, k));
  return z;
}

inline SuperclassFunction random_superclass_function(std::mt19937_64& rng, const TheoryPtr& th) {
  std::vector<Cyclotomic> vals;
  for (std::size_t k = 0; k < th->block_count(); ++k) vals.push_back(random_cyclotomic(rng, th->group()->exponent()));
  return superclass_function(th, vals);
}

inline std::vector<BigInt> random_base(std::mt19937_64& rng, std::size_t blocks, long lo = -5, long hi = 5) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<BigInt> b;
  for (std::size_t i = 0; i < blocks; ++i) b.emplace_back(d(rng));
  return b;
}

}  // namespace oracle
