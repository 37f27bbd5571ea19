// Burnside-Dixon character tables over a prime field.
//
// The central characters omega_chi(K_i) = |C_i| chi(g_i) / chi(1) form the
// common eigenvectors of the matrices (M_i)_{jk} = a(i, j, k). Over GF(p) with
// p = 1 (mod e) every eigenvalue is rational, so the commuting family splits
// F_p^r into r lines. Degrees follow from column orthogonality and values are
// lifted to Q(zeta_e) by recovering eigenvalue multiplicities from power maps.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "superchar/char_table.hpp"

namespace superchar {

namespace {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

struct Field {
  long p;
  long add(long a, long b) const { long s = a + b; return s >= p ? s - p : s; }
  long sub(long a, long b) const { long s = a - b; return s < 0 ? s + p : s; }
  long mul(long a, long b) const { return static_cast<long>((static_cast<__int128>(a) * b) % p); }
  long pow(long a, long e) const {
    long r = 1;
    a %= p;
    if (a < 0) a += p;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  long inv(long a) const { return pow(a, p - 2); }
  long from(long a) const { long r = a % p; return r < 0 ? r + p : r; }
};

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long primitive_root(const Field& f) {
  const long p = f.p;
  std::vector<long> factors;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : factors)
      if (f.pow(g, (p - 1) / q) == 1) { ok = false; break; }
    if (ok) return g;
  }
  return 1;  // p = 2
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, const Field& f) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = rows;
    for (std::size_t i = row; i < rows; ++i)
      if (m[i][col] != 0) { sel = i; break; }
    if (sel == rows) continue;
    std::swap(m[row], m[sel]);
    const long inv = f.inv(m[row][col]);
    for (std::size_t j = col; j < cols; ++j) m[row][j] = f.mul(m[row][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const long factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[row][j]));
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

/// Basis of {x : m x = 0}.
Mat nullspace(Mat m, std::size_t cols, const Field& f) {
  auto pivots = rref(m, f);
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  Mat basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.sub(0, m[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial (low degree first) via Hessenberg reduction.
Vec charpoly(Mat h, const Field& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const long pinv = f.inv(h[m][m - 1]);
    for (std::size_t j = m + 1; j < n; ++j) {
      const long u = f.mul(h[j][m - 1], pinv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[j][c] = f.sub(h[j][c], f.mul(u, h[m][c]));
      for (std::size_t r = 0; r < n; ++r) h[r][m] = f.add(h[r][m], f.mul(u, h[r][j]));
    }
  }
  // p_k is the characteristic polynomial of the leading k x k block
  std::vector<Vec> poly(n + 1);
  poly[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    Vec next(k + 1, 0);
    const Vec& prev = poly[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], prev[d]);
      next[d] = f.sub(next[d], f.mul(h[k - 1][k - 1], prev[d]));
    }
    long t = 1;
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h[k - i][k - i - 1]);
      const long coef = f.mul(t, h[k - i - 1][k - 1]);
      const Vec& lower = poly[k - i - 1];
      for (std::size_t d = 0; d < lower.size(); ++d) next[d] = f.sub(next[d], f.mul(coef, lower[d]));
    }
    poly[k] = std::move(next);
  }
  return poly[n];
}

long eval(const Vec& poly, long x, const Field& f) {
  long r = 0;
  for (std::size_t i = poly.size(); i-- > 0;) r = f.add(f.mul(r, x), poly[i]);
  return r;
}

struct Subspace {
  Mat basis;  // rows, in reduced echelon form
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(Mat rows, const Field& f) {
  Subspace s;
  s.pivots = rref(rows, f);
  s.basis = std::move(rows);
  return s;
}

/// Eigenspaces of the matrix `a` restricted to the invariant subspace `w`.
std::vector<Subspace> split(const Mat& a, const Subspace& w, const Field& f) {
  const std::size_t d = w.basis.size(), r = a.size();
  // restricted matrix X with A b_t = sum_s X[s][t] b_s, read off pivot entries
  Mat x(d, Vec(d, 0));
  for (std::size_t t = 0; t < d; ++t) {
    Vec ab(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      long s = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (w.basis[t][k] != 0) s = f.add(s, f.mul(a[i][k], w.basis[t][k]));
      ab[i] = s;
    }
    for (std::size_t s = 0; s < d; ++s) x[s][t] = ab[w.pivots[s]];
  }
  const Vec cp = charpoly(x, f);
  std::vector<Subspace> out;
  std::size_t total = 0;
  for (long lambda = 0; lambda < f.p; ++lambda) {
    if (eval(cp, lambda, f) != 0) continue;
    Mat shifted = x;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = f.sub(shifted[i][i], lambda);
    Mat null = nullspace(shifted, d, f);
    if (null.empty()) continue;
    Mat rows;
    for (const auto& y : null) {
      Vec v(r, 0);
      for (std::size_t t = 0; t < d; ++t)
        if (y[t] != 0)
          for (std::size_t k = 0; k < r; ++k) v[k] = f.add(v[k], f.mul(y[t], w.basis[t][k]));
      rows.push_back(std::move(v));
    }
    total += rows.size();
    out.push_back(make_subspace(std::move(rows), f));
  }
  if (total != d) throw Error(ErrorCode::EigensplitFailure, "class algebra element is not diagonalizable over GF(" + std::to_string(f.p) + ")");
  return out;
}

}  // namespace

long select_dixon_prime(const FiniteGroup& g) {
  const long n = g.order();
  const long e = g.exponent();
  const long lower = std::max(2 * static_cast<long>(std::floor(std::sqrt(static_cast<double>(n)))) + 1, e + 1);
  long p = lower + ((1 - lower) % e + e) % e;  // first value >= lower that is 1 mod e
  while (!(is_prime(p) && p * p > 4 * n)) p += e;
  return p;
}

void check_dixon_prime(const FiniteGroup& g, long p) {
  const long n = g.order();
  if (!is_prime(p)) throw Error(ErrorCode::PrimeRejected, std::to_string(p) + " is not prime");
  if ((p - 1) % g.exponent() != 0)
    throw Error(ErrorCode::PrimeRejected, std::to_string(p) + " is not 1 mod the exponent " + std::to_string(g.exponent()));
  if (p * p <= 4 * n)
    throw Error(ErrorCode::PrimeRejected, std::to_string(p) + " is not above 2*sqrt(|G|)");
}

TablePtr dixon_character_table(const GroupPtr& gp, const DixonOptions& options) {
  const FiniteGroup& g = *gp;
  const long p = options.prime ? *options.prime : select_dixon_prime(g);
  check_dixon_prime(g, p);
  const Field f{p};
  const auto& cc = g.classes();
  const std::size_t r = cc.count();
  const ClassMultCoeffs coeffs(g);

  std::vector<Mat> mats(r, Mat(r, Vec(r, 0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) mats[i][j][k] = f.from(coeffs(i, j, k));

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> coin(0, p - 1);

  Mat identity(r, Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i) identity[i][i] = 1;
  std::vector<Subspace> pending{make_subspace(identity, f)};
  std::vector<Vec> lines;
  while (!pending.empty()) {
    Subspace w = std::move(pending.back());
    pending.pop_back();
    if (w.basis.size() == 1) {
      lines.push_back(w.basis[0]);
      continue;
    }
    bool split_done = false;
    for (int attempt = 0; attempt < options.retry_budget && !split_done; ++attempt) {
      Mat a(r, Vec(r, 0));
      for (std::size_t i = 1; i < r; ++i) {
        const long c = coin(rng);
        if (c == 0) continue;
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t k = 0; k < r; ++k) a[j][k] = f.add(a[j][k], f.mul(c, mats[i][j][k]));
      }
      auto parts = split(a, w, f);
      if (parts.size() > 1) {
        for (auto& part : parts) pending.push_back(std::move(part));
        split_done = true;
      }
    }
    if (!split_done)
      throw Error(ErrorCode::EigensplitFailure,
                  "retry budget exhausted splitting a " + std::to_string(w.basis.size()) +
                      "-dimensional eigenspace (seed " + std::to_string(options.seed) + ")",
                  std::to_string(options.seed));
  }
  if (lines.size() != r) throw Error(ErrorCode::EigensplitFailure, "wrong number of eigenlines");

  const long e = g.exponent();
  const long z = f.pow(primitive_root(f), (p - 1) / e);
  std::vector<long> class_size_inv(r);
  for (std::size_t i = 0; i < r; ++i) class_size_inv[i] = f.inv(cc.size_of(i));

  // power maps: class of g_i^l
  std::vector<std::vector<int>> power_class(r);
  for (std::size_t i = 0; i < r; ++i) {
    const int rep = cc.representative(i);
    const int o = g.element_order(rep);
    int x = 0;
    for (int l = 0; l < o; ++l) {
      power_class[i].push_back(g.class_of(x));
      x = g.mul(x, rep);
    }
  }

  std::vector<ClassFunction> rows;
  for (const auto& line : lines) {
    if (line[0] == 0) throw Error(ErrorCode::EigensplitFailure, "eigenvector vanishes at the identity class");
    const long norm = f.inv(line[0]);
    Vec omega(r);
    for (std::size_t i = 0; i < r; ++i) omega[i] = f.mul(line[i], norm);

    long s = 0;
    for (std::size_t i = 0; i < r; ++i)
      s = f.add(s, f.mul(f.mul(omega[i], omega[g.inverse_class(i)]), class_size_inv[i]));
    const long d2 = f.mul(f.from(g.order()), f.inv(s));
    long degree = 0;
    for (long d = 1; d * d <= g.order(); ++d)
      if (f.mul(d, d) == d2 && g.order() % d == 0) { degree = d; break; }
    if (degree == 0) throw Error(ErrorCode::EigensplitFailure, "no admissible degree for an eigenvector");

    Vec chi(r);
    for (std::size_t i = 0; i < r; ++i) chi[i] = f.mul(f.mul(omega[i], degree), class_size_inv[i]);

    std::vector<Cyclotomic> values;
    values.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      const long o = static_cast<long>(power_class[i].size());
      const long zo = f.pow(z, e / o);
      const long oinv = f.inv(o);
      Cyclotomic value;
      long total = 0;
      for (long k = 0; k < o; ++k) {
        long m = 0;
        const long step = f.pow(zo, (o - k) % o);  // zeta_o^{-k}
        long w = 1;
        for (long l = 0; l < o; ++l) {
          m = f.add(m, f.mul(chi[power_class[i][l]], w));
          w = f.mul(w, step);
        }
        m = f.mul(m, oinv);
        if (m > degree) throw Error(ErrorCode::EigensplitFailure, "eigenvalue multiplicity exceeds the degree");
        total += m;
        if (m != 0) value += scale(BigRational(m), Cyclotomic::zeta(static_cast<int>(e), k * (e / o)));
      }
      if (total != degree) throw Error(ErrorCode::EigensplitFailure, "eigenvalue multiplicities do not sum to the degree");
      values.push_back(value.order() == e ? value : value.lifted(static_cast<int>(e)));
    }
    rows.emplace_back(gp, std::move(values));
  }

  auto table = table_from_rows(gp, canonical_rows(std::move(rows)));
  const Report rep = verify_orthogonality(*table);
  if (!rep.passed)
    throw Error(ErrorCode::EigensplitFailure, "computed table fails orthogonality at " + rep.violations.front().location);
  return table;
}

}  // namespace superchar
