#include "superchar/cyclotomic.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace superchar {

namespace {

constexpr long kCoeffBound = 1L << 40;

/// Powers x^k mod Phi_e for 0 <= k < e. Since x^e = 1 in the quotient this
/// is every power we ever need.
struct Reduction {
  int order = 1;
  int phi = 1;
  IntPolynomial poly;
  std::vector<std::vector<long>> powers;
};

IntPolynomial divide_exact(IntPolynomial num, const IntPolynomial& den) {
  // den is monic
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("divide_exact: degree");
  IntPolynomial quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

std::mutex cache_mutex;
std::map<int, IntPolynomial> poly_cache;
std::map<int, Reduction> reduction_cache;

IntPolynomial cyclotomic_polynomial_locked(int e) {
  auto it = poly_cache.find(e);
  if (it != poly_cache.end()) return it->second;
  IntPolynomial p(static_cast<std::size_t>(e) + 1, 0);
  p[0] = -1;
  p[e] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) p = divide_exact(p, cyclotomic_polynomial_locked(d));
  poly_cache.emplace(e, p);
  return p;
}

const Reduction& reduction(int e) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = reduction_cache.find(e);
  if (it != reduction_cache.end()) return it->second;

  Reduction r;
  r.order = e;
  r.poly = cyclotomic_polynomial_locked(e);
  r.phi = static_cast<int>(r.poly.size()) - 1;
  r.powers.reserve(e);
  std::vector<long> cur(r.phi, 0);
  cur[0] = 1;
  for (int k = 0; k < e; ++k) {
    r.powers.push_back(cur);
    // multiply by x
    long top = cur[r.phi - 1];
    for (int i = r.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < r.phi; ++i) {
        cur[i] -= top * r.poly[i];
        if (std::labs(cur[i]) > kCoeffBound)
          throw std::overflow_error("cyclotomic reduction coefficients too large");
      }
  }
  return reduction_cache.emplace(e, std::move(r)).first->second;
}

void add_scaled_power(std::vector<BigRational>& acc, const BigRational& c,
                      const std::vector<long>& power) {
  for (std::size_t i = 0; i < power.size(); ++i)
    if (power[i] != 0) acc[i] += c * power[i];
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic_polynomial(int e) {
  if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cyclotomic_polynomial_locked(e);
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_(1) {}

Cyclotomic::Cyclotomic(long value) : order_(1), coeffs_{BigRational(value)} {}

Cyclotomic::Cyclotomic(const BigRational& value) : order_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int order, std::vector<BigRational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::zeta(int e, long k) {
  if (e < 1) throw std::invalid_argument("zeta: order must be positive");
  const Reduction& r = reduction(e);
  long idx = k % e;
  if (idx < 0) idx += e;
  std::vector<BigRational> c(r.phi);
  add_scaled_power(c, BigRational(1), r.powers[idx]);
  return Cyclotomic(e, std::move(c));
}

Cyclotomic Cyclotomic::lifted(int target) const {
  if (target == order_) return *this;
  if (target < 1 || target % order_ != 0)
    throw std::invalid_argument("lifted: target order must be a multiple of the current order");
  const Reduction& r = reduction(target);
  const int step = target / order_;
  std::vector<BigRational> c(r.phi);
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) add_scaled_power(c, coeffs_[j], r.powers[j * step]);
  return Cyclotomic(target, std::move(c));
}

std::optional<Cyclotomic> Cyclotomic::restricted(int target) const {
  if (target < 1 || order_ % target != 0)
    throw std::invalid_argument("restricted: target order must divide the current order");
  if (target == order_) return *this;
  const Reduction& big = reduction(order_);
  const Reduction& small = reduction(target);
  const int step = order_ / target;
  const int rows = big.phi;
  const int cols = small.phi;

  // Augmented system: columns are the images of zeta_target^j.
  std::vector<std::vector<BigRational>> m(rows, std::vector<BigRational>(cols + 1));
  for (int j = 0; j < cols; ++j) {
    const auto& p = big.powers[static_cast<std::size_t>(j) * step];
    for (int i = 0; i < rows; ++i) m[i][j] = p[i];
  }
  for (int i = 0; i < rows; ++i) m[i][cols] = coeffs_[i];

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(m[row], m[sel]);
    BigRational inv = 1 / m[row][col];
    for (int j = col; j <= cols; ++j) m[row][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      BigRational f = m[i][col];
      for (int j = col; j <= cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;

  std::vector<BigRational> c(cols);
  for (int i = 0; i < row; ++i) c[pivot_col[i]] = m[i][cols];
  return Cyclotomic(target, std::move(c));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (order_ <= 2) return *this;
  const Reduction& r = reduction(order_);
  std::vector<BigRational> c(r.phi);
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) add_scaled_power(c, coeffs_[j], r.powers[(order_ - j) % order_]);
  return Cyclotomic(order_, std::move(c));
}

std::optional<BigRational> Cyclotomic::as_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return std::nullopt;
  return coeffs_[0];
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_nonnegative_integer() const {
  auto q = as_rational();
  return q && q->get_den() == 1 && *q >= 0;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  if (order_ != other.order_) {
    const int l = std::lcm(order_, other.order_);
    *this = lifted(l);
    return *this += other.lifted(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  if (order_ != other.order_) {
    const int l = std::lcm(order_, other.order_);
    *this = lifted(l);
    return *this -= other.lifted(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  if (order_ != other.order_) {
    const int l = std::lcm(order_, other.order_);
    *this = lifted(l);
    return *this *= other.lifted(l);
  }
  const Reduction& r = reduction(order_);
  const std::size_t n = coeffs_.size();
  std::vector<BigRational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  std::vector<BigRational> c(n);
  for (std::size_t k = 0; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    if (k < n)
      c[k] += prod[k];
    else
      add_scaled_power(c, prod[k], r.powers[k % order_]);
  }
  coeffs_ = std::move(c);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const int l = std::lcm(a.order_, b.order_);
  return a.lifted(l).coeffs_ == b.lifted(l).coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ != b.order_) {
    const int l = std::lcm(a.order_, b.order_);
    return a.lifted(l) <=> b.lifted(l);
  }
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int c = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const BigRational& c = coeffs_[j];
    if (c == 0) continue;
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'z' << order_;
    if (j > 1) out << '^' << j;
  }
  if (first) return "0";
  return out.str();
}

Cyclotomic scale(const BigRational& q, const Cyclotomic& a) {
  return Cyclotomic(q) * a;
}

}  // namespace superchar
