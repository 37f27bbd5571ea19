#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superchar/cyclotomic.hpp"
#include "superchar/group.hpp"

namespace superchar {

/// Function on a group that is constant on conjugacy classes; one value per
/// class in the group's canonical class order.
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclotomic> values);
  static ClassFunction constant(GroupPtr group, const Cyclotomic& value);
  static ClassFunction zero(GroupPtr group) { return constant(std::move(group), 0L); }

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const Cyclotomic& operator[](std::size_t cls) const { return values_[cls]; }
  Cyclotomic& operator[](std::size_t cls) { return values_[cls]; }
  const Cyclotomic& at_element(int g) const { return values_[group_->class_of(g)]; }

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Cyclotomic& scalar);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(const Cyclotomic& s, ClassFunction a) { return a *= s; }

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

  std::string to_string() const;

 private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

class CharacterTable;
using TablePtr = std::shared_ptr<const CharacterTable>;

/// Irreducible characters of a group. Rows are in canonical order: the
/// trivial character first, then by (degree, lexicographic values).
class CharacterTable {
 public:
  CharacterTable(GroupPtr group, std::vector<ClassFunction> rows);

  const GroupPtr& group() const noexcept { return group_; }
  const ConjugacyClasses& classes() const noexcept { return group_->classes(); }
  std::size_t size() const noexcept { return rows_.size(); }
  const ClassFunction& row(std::size_t i) const { return rows_[i]; }
  const std::vector<ClassFunction>& rows() const noexcept { return rows_; }
  const BigInt& degree(std::size_t i) const { return degrees_[i]; }
  bool is_linear(std::size_t i) const { return degrees_[i] == 1; }

  /// Stable 64-bit FNV-1a digest of the class data and all values, as hex.
  std::string fingerprint() const;

 private:
  GroupPtr group_;
  std::vector<ClassFunction> rows_;
  std::vector<BigInt> degrees_;
};

/// a(i, j, k) = #{(x, y) in C_i x C_j : xy = z} for the representative z of C_k.
class ClassMultCoeffs {
 public:
  explicit ClassMultCoeffs(const FiniteGroup& g);
  long operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * r_ + j) * r_ + k];
  }
  std::size_t classes() const noexcept { return r_; }

 private:
  std::size_t r_;
  std::vector<long> data_;
};

inline ClassMultCoeffs class_mult_coeffs(const FiniteGroup& g) { return ClassMultCoeffs(g); }

struct DixonOptions {
  std::optional<long> prime;
  std::uint64_t seed = 0;
  int retry_budget = 64;
};

/// Smallest prime p = 1 (mod exponent) with p > 2 sqrt(|G|).
long select_dixon_prime(const FiniteGroup& g);
/// Throws PrimeRejected when p is unusable for g.
void check_dixon_prime(const FiniteGroup& g, long p);

/// Exact character table by Burnside-Dixon: simultaneous eigenvectors of the
/// class multiplication matrices over GF(p), lifted to Q(zeta_e).
TablePtr dixon_character_table(const GroupPtr& g, const DixonOptions& options = {});

/// Sorts rows into canonical order.
std::vector<ClassFunction> canonical_rows(std::vector<ClassFunction> rows);

/// Wraps rows without verification (for negative tests and supplied tables).
TablePtr table_from_rows(GroupPtr g, std::vector<ClassFunction> rows);

/// Accepts a supplied table only if verify_orthogonality passes; rows are
/// canonicalized. Throws NotACharacter with the first violation otherwise.
TablePtr accept_table(GroupPtr g, std::vector<ClassFunction> rows);

Report verify_orthogonality(const CharacterTable& t);

/// <f, h> = (1/|G|) sum_g f(g) conj(h(g)).
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h);

ClassFunction restrict(const ClassFunction& f, const Embedding& e);
ClassFunction restrict(const ClassFunction& f, const Subgroup& h);

/// Ind f(g) = |G| / (|H| |Cl(g)|) * sum over x in Cl(g) ∩ H of f(x).
ClassFunction induce(const ClassFunction& f, const Embedding& e);
ClassFunction induce(const ClassFunction& f, const Subgroup& h);

ClassFunction trivial_character(const GroupPtr& g);
ClassFunction regular_character(const GroupPtr& g);

std::vector<Cyclotomic> decompose(const ClassFunction& f, const CharacterTable& t);
/// Multiplicities as integers; throws NotACharacter if any is not a
/// nonnegative integer.
std::vector<BigInt> character_multiplicities(const ClassFunction& f, const CharacterTable& t);
bool has_only_linear_constituents(const ClassFunction& f, const CharacterTable& t);

}  // namespace superchar
