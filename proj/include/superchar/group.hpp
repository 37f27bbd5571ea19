#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "superchar/error.hpp"

namespace superchar {

/// Desk-scale caps. These are configuration; the CLI lets the environment
/// and flags override them.
struct GroupLimits {
  int max_order = 200;
  int max_closure = 5000;
  int max_subgroups = 5000;
};

/// Orbits of the conjugation action, ordered by (size, smallest element).
/// Class 0 is always {identity}.
struct ConjugacyClasses {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;

  std::size_t count() const noexcept { return classes.size(); }
  int size_of(std::size_t c) const { return static_cast<int>(classes[c].size()); }
  int representative(std::size_t c) const { return classes[c].front(); }
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group on elements 0..n-1 given by its multiplication table.
/// Element 0 is the identity. Immutable once built.
class FiniteGroup {
 public:
  int order() const noexcept { return order_; }
  int identity() const noexcept { return 0; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int exponent() const noexcept { return exponent_; }
  const std::string& name() const noexcept { return name_; }

  int element_order(int g) const { return element_orders_[g]; }
  int power(int g, long k) const;
  int conjugate(int g, int by) const { return mul(mul(by, g), inv(by)); }

  const ConjugacyClasses& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.count(); }
  int class_of(int g) const { return classes_.class_of[g]; }
  /// Class containing the inverses of the elements of class c.
  int inverse_class(std::size_t c) const { return class_of(inv(classes_.representative(c))); }
  int centralizer_order(int g) const;

  std::vector<std::vector<int>> cayley_table() const;

 private:
  FiniteGroup(std::string name, int order, std::vector<int> table);
  void derive();

  std::string name_;
  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_orders_;
  int exponent_ = 1;
  ConjugacyClasses classes_;

  friend GroupPtr group_from_cayley(const std::vector<std::vector<int>>&, std::string);
  friend GroupPtr make_group_unchecked(std::string, int, std::vector<int>);
};

/// Validates the table (identity at 0, Latin rows, inverses, associativity).
GroupPtr group_from_cayley(const std::vector<std::vector<int>>& table, std::string name);

/// Builds the Cayley table of the group generated by permutations of
/// {0..degree-1}. Elements are numbered in breadth-first discovery order,
/// applying the lexicographically sorted generators; the identity is 0.
/// Products compose right to left: (a*b)(i) = a(b(i)).
GroupPtr group_from_permutations(int degree, std::vector<std::vector<int>> generators,
                                 std::string name, int cap = 5000);

/// Internal: wraps a table already known to satisfy the group axioms.
GroupPtr make_group_unchecked(std::string name, int order, std::vector<int> table);

const ConjugacyClasses& conjugacy_classes(const FiniteGroup& g);
int element_order(const FiniteGroup& g, int element);
int centralizer_order(const FiniteGroup& g, int element);

/// Inclusion of a group into a larger one, as an element map.
struct Embedding {
  GroupPtr sub;
  GroupPtr super;
  std::vector<int> map;
};

/// Subgroup of a parent group together with the group it induces on its
/// own 0-based indices (sorted parent order, so local 0 is the identity).
/// The whole group is represented with `local() == parent()`.
class Subgroup {
 public:
  const GroupPtr& parent() const noexcept { return parent_; }
  const GroupPtr& local() const noexcept { return local_; }
  const std::vector<int>& elements() const noexcept { return elements_; }
  int order() const noexcept { return static_cast<int>(elements_.size()); }
  bool contains(int parent_element) const { return to_local_[parent_element] >= 0; }
  int to_local(int parent_element) const { return to_local_[parent_element]; }
  bool is_whole() const noexcept { return local_ == parent_; }
  Embedding embedding() const { return {local_, parent_, elements_}; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  Subgroup() = default;

  GroupPtr parent_;
  GroupPtr local_;
  std::vector<int> elements_;
  std::vector<int> to_local_;

  friend Subgroup make_subgroup(const GroupPtr&, std::vector<int>);
  friend Subgroup make_subgroup_unchecked(const GroupPtr&, std::vector<int>);
};

/// Throws NotASubgroup unless `elements` is closed and contains 0.
Subgroup make_subgroup(const GroupPtr& parent, std::vector<int> elements);
Subgroup make_subgroup_unchecked(const GroupPtr& parent, std::vector<int> elements);
Subgroup whole_group(const GroupPtr& g);

/// Every subgroup, via cyclic seeds and layered generator addition, in
/// canonical order (order, sorted element list).
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, const GroupLimits& limits = {});

bool is_subgroup_chain(const Subgroup& smaller, const Subgroup& larger);

/// Embedding of the local group of `smaller` into the local group of
/// `larger`; both must share a parent. Throws NotASubgroup otherwise.
Embedding embedding_between(const Subgroup& smaller, const Subgroup& larger);

/// Subgroup generated by the given elements.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators);

/// Copy of g with elements renamed by `perm` (perm[0] must be 0).
GroupPtr relabeled(const FiniteGroup& g, const std::vector<int>& perm, std::string name);

}  // namespace superchar
