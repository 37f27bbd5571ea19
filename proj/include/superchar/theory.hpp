#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superchar/char_table.hpp"

namespace superchar {

using Partition = std::vector<std::vector<int>>;

class SupercharacterTheory;
using TheoryPtr = std::shared_ptr<const SupercharacterTheory>;

/// A pair (X, K): X partitions the irreducible characters, K partitions the
/// group into superclasses (stored as unions of conjugacy classes) with {1}
/// a superclass, |X| = |K|, and every sigma_X = sum_{psi in X} psi(1) psi
/// constant on every superclass. Blocks are numbered by their smallest
/// member: X0 holds the trivial character, K0 = {1}.
class SupercharacterTheory {
 public:
  const TablePtr& table() const noexcept { return table_; }
  const GroupPtr& group() const noexcept { return table_->group(); }

  std::size_t block_count() const noexcept { return irr_blocks_.size(); }
  const Partition& irr_partition() const noexcept { return irr_blocks_; }
  /// Superclasses as lists of conjugacy-class indices.
  const Partition& class_partition() const noexcept { return class_blocks_; }
  const std::vector<int>& superclass_elements(std::size_t k) const { return superclass_elements_[k]; }
  int superclass_size(std::size_t k) const { return static_cast<int>(superclass_elements_[k].size()); }
  int superclass_of(int element) const { return block_of_class_[group()->class_of(element)]; }
  int superclass_of_class(std::size_t cls) const { return block_of_class_[cls]; }

  const ClassFunction& sigma(std::size_t x) const { return sigma_[x]; }
  /// sigma_X(1) = sum of squared degrees in X.
  const BigInt& sigma_degree(std::size_t x) const { return sigma_degree_[x]; }

  bool is_classical() const noexcept { return irr_blocks_.size() == table_->size(); }

  /// First superclass on which f is not constant, if any.
  std::optional<std::size_t> nonconstant_superclass(const ClassFunction& f) const;

  friend bool operator==(const SupercharacterTheory& a, const SupercharacterTheory& b) {
    return a.table_ == b.table_ && a.irr_blocks_ == b.irr_blocks_ && a.class_blocks_ == b.class_blocks_;
  }

 private:
  SupercharacterTheory() = default;

  TablePtr table_;
  Partition irr_blocks_;
  Partition class_blocks_;
  std::vector<std::vector<int>> superclass_elements_;
  std::vector<int> block_of_class_;
  std::vector<ClassFunction> sigma_;
  std::vector<BigInt> sigma_degree_;

  friend TheoryPtr build_theory(const TablePtr&, Partition, Partition);
};

/// Result of checking a candidate (X, K). `condition` names the first failed
/// requirement: "identity", "block-count" or "constancy".
struct TheoryCheck {
  bool ok = true;
  std::string condition;
  std::string witness;
};

/// Throws NotAPartition when the inputs are not partitions of the right sets.
TheoryCheck check_theory(const TablePtr& t, const Partition& irr_partition, const Partition& class_partition);

/// class_partition lists conjugacy-class indices per block.
TheoryPtr make_theory(const TablePtr& t, Partition irr_partition, Partition class_partition);

/// Raw element partition. The three defining conditions are checked on
/// elements; the union-of-classes property is then asserted as a consequence.
TheoryPtr make_theory_from_elements(const TablePtr& t, Partition irr_partition, Partition element_partition);

/// Internal: no validation beyond partition shape. Used after a check passed.
TheoryPtr build_theory(const TablePtr& t, Partition irr_partition, Partition class_partition);

TheoryPtr classical_theory(const TablePtr& t);
TheoryPtr maximal_theory(const TablePtr& t);

/// Every supercharacter theory. Superclass partitions are enumerated over
/// conjugacy classes with {1} kept alone; for each, the only admissible X
/// groups irreducibles whose central characters agree on every superclass
/// sum. Output: classical first, then by decreasing block count and
/// lexicographic class partition.
std::vector<TheoryPtr> enumerate_theories(const TablePtr& t, int max_classes = 12);

struct Compatibility {
  bool compatible = true;
  /// Element of the smaller group (its local index) whose superclass escapes.
  std::optional<int> witness;
};

Compatibility is_compatible(const SupercharacterTheory& small, const SupercharacterTheory& large,
                            const Embedding& e);

/// Class function constant on the superclasses of its theory.
class SuperclassFunction {
 public:
  SuperclassFunction(TheoryPtr theory, ClassFunction values);

  const TheoryPtr& theory() const noexcept { return theory_; }
  const ClassFunction& values() const noexcept { return values_; }
  const Cyclotomic& on_superclass(std::size_t k) const {
    return values_[theory_->class_partition()[k].front()];
  }

 private:
  TheoryPtr theory_;
  ClassFunction values_;
};

/// Sind Phi(g) = |G| / (|H| |SCl(g)|) * sum_{x in SCl(g)} Phi0(x),
/// where Phi0 extends Phi by zero outside H.
SuperclassFunction superinduce(const SuperclassFunction& phi, const TheoryPtr& large, const Embedding& e);

/// sum_X <Phi, sigma_X|_H> / <sigma_X, sigma_X> * sigma_X.
SuperclassFunction superinduce_via_reciprocity(const SuperclassFunction& phi, const TheoryPtr& large,
                                               const Embedding& e);

SuperclassFunction srestrict(const SuperclassFunction& theta, const TheoryPtr& small, const Embedding& e);

/// Builds a superclass function from one value per superclass.
SuperclassFunction superclass_function(const TheoryPtr& theory, const std::vector<Cyclotomic>& per_superclass);

/// A supercharacter theory for each subgroup in a set that contains the top
/// group, pairwise compatible along every inclusion.
class CompatibleFamily {
 public:
  const GroupPtr& top() const noexcept { return top_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& subgroup(std::size_t i) const { return subgroups_[i]; }
  const TheoryPtr& theory(std::size_t i) const { return theories_[i]; }
  std::size_t top_index() const noexcept { return top_index_; }
  const TheoryPtr& top_theory() const { return theories_[top_index_]; }

  std::optional<std::size_t> index_of(const std::vector<int>& elements) const;
  /// Throws SubgroupNotInFamily.
  std::size_t require(const Subgroup& h) const;

 private:
  CompatibleFamily() = default;
  GroupPtr top_;
  std::vector<Subgroup> subgroups_;
  std::vector<TheoryPtr> theories_;
  std::size_t top_index_ = 0;

  friend std::shared_ptr<const CompatibleFamily> make_family(const GroupPtr&, std::vector<Subgroup>,
                                                             std::vector<TheoryPtr>);
};
using FamilyPtr = std::shared_ptr<const CompatibleFamily>;

using TheoryChooser = std::function<TheoryPtr(const Subgroup&, const TablePtr&)>;

TheoryChooser all_classical();
TheoryChooser all_maximal();
/// Maximal theory on the whole group, classical on every proper subgroup.
TheoryChooser maximal_top_classical_below();

/// Throws IncompatibleFamily naming the first failing pair and its witness.
FamilyPtr make_family(const GroupPtr& g, std::vector<Subgroup> subgroups, std::vector<TheoryPtr> theories);
FamilyPtr make_family(const GroupPtr& g, std::vector<Subgroup> subgroups, const TheoryChooser& chooser,
                      const DixonOptions& dixon = {});

}  // namespace superchar
