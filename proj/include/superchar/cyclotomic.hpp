#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace superchar {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Integer polynomial, coefficient of x^i at index i.
using IntPolynomial = std::vector<long>;

int euler_phi(int n);

/// Phi_e, obtained by dividing x^e - 1 by Phi_d for every proper divisor d.
IntPolynomial cyclotomic_polynomial(int e);

/// Element of Q(zeta_e) stored as its unique representative of degree
/// < phi(e) modulo Phi_e. Values of different orders are lifted to the lcm
/// order before any binary operation; results keep the lifted order.
class Cyclotomic {
 public:
  Cyclotomic();
  Cyclotomic(long value);  // NOLINT: implicit on purpose, integers embed
  Cyclotomic(const BigRational& value);  // NOLINT

  /// zeta_e^k.
  static Cyclotomic zeta(int e, long k);

  int order() const noexcept { return order_; }
  const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }

  /// Same value written in Q(zeta_target); `order()` must divide `target`.
  Cyclotomic lifted(int target) const;

  /// Same value written in Q(zeta_target) if it lies in that subfield.
  /// `target` must divide `order()`.
  std::optional<Cyclotomic> restricted(int target) const;

  /// Galois action zeta -> zeta^-1, i.e. complex conjugation.
  Cyclotomic conjugate() const;

  std::optional<BigRational> as_rational() const;
  bool is_zero() const;
  bool is_nonnegative_integer() const;

  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Lexicographic on coefficient vectors at the lcm order.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  /// Exact text such as "1 + z5^2 - 3/2*z5^3".
  std::string to_string() const;

 private:
  Cyclotomic(int order, std::vector<BigRational> coeffs);

  int order_;
  std::vector<BigRational> coeffs_;
};

Cyclotomic scale(const BigRational& q, const Cyclotomic& a);

inline Cyclotomic zeta(int e, long k) { return Cyclotomic::zeta(e, k); }

}  // namespace superchar
