#include "superchar/theory.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace superchar {

namespace {

std::string block_text(std::vector<int> block) {
  std::sort(block.begin(), block.end());
  std::ostringstream s;
  s << "{";
  for (std::size_t i = 0; i < block.size(); ++i) s << (i ? "," : "") << block[i];
  s << "}";
  return s.str();
}

void require_partition(const Partition& p, int universe, const char* what) {
  std::vector<char> seen(universe, 0);
  int covered = 0;
  for (const auto& block : p) {
    if (block.empty()) throw Error(ErrorCode::NotAPartition, std::string(what) + " partition has an empty block");
    for (int x : block) {
      if (x < 0 || x >= universe)
        throw Error(ErrorCode::NotAPartition, std::string(what) + " index " + std::to_string(x) + " out of range",
                    std::to_string(x));
      if (seen[x]++)
        throw Error(ErrorCode::NotAPartition, std::string(what) + " index " + std::to_string(x) + " appears twice",
                    std::to_string(x));
      ++covered;
    }
  }
  if (covered != universe) {
    int missing = 0;
    while (seen[missing]) ++missing;
    throw Error(ErrorCode::NotAPartition, std::string(what) + " index " + std::to_string(missing) + " is not covered",
                std::to_string(missing));
  }
}

Partition canonical(Partition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return p;
}

ClassFunction sigma_of(const CharacterTable& t, const std::vector<int>& block) {
  auto s = ClassFunction::zero(t.group());
  for (int i : block) s += Cyclotomic(BigRational(t.degree(i))) * t.row(i);
  return s;
}

}  // namespace

std::optional<std::size_t> SupercharacterTheory::nonconstant_superclass(const ClassFunction& f) const {
  if (f.group() != group()) throw Error(ErrorCode::GroupMismatch, "function lives on another group");
  for (std::size_t k = 0; k < class_blocks_.size(); ++k) {
    const auto& block = class_blocks_[k];
    for (std::size_t i = 1; i < block.size(); ++i)
      if (f[block[i]] != f[block[0]]) return k;
  }
  return std::nullopt;
}

TheoryCheck check_theory(const TablePtr& t, const Partition& irr, const Partition& cls) {
  require_partition(irr, static_cast<int>(t->size()), "irreducible");
  require_partition(cls, static_cast<int>(t->classes().count()), "class");
  TheoryCheck out;
  for (const auto& block : cls)
    if (std::find(block.begin(), block.end(), 0) != block.end() && block.size() != 1) {
      out.ok = false;
      out.condition = "identity";
      out.witness = "K-block " + block_text(block) + " contains the identity class together with other classes";
      return out;
    }
  if (irr.size() != cls.size()) {
    out.ok = false;
    out.condition = "block-count";
    out.witness = std::to_string(irr.size()) + " X-blocks but " + std::to_string(cls.size()) + " K-blocks";
    return out;
  }
  for (const auto& xb : irr) {
    const ClassFunction s = sigma_of(*t, xb);
    for (const auto& kb : cls)
      for (std::size_t i = 1; i < kb.size(); ++i)
        if (s[kb[i]] != s[kb[0]]) {
          out.ok = false;
          out.condition = "constancy";
          out.witness = "sigma of X-block " + block_text(xb) + " not constant on K-block " + block_text(kb);
          return out;
        }
  }
  return out;
}

TheoryPtr build_theory(const TablePtr& t, Partition irr, Partition cls) {
  std::shared_ptr<SupercharacterTheory> th(new SupercharacterTheory());
  th->table_ = t;
  th->irr_blocks_ = canonical(std::move(irr));
  th->class_blocks_ = canonical(std::move(cls));
  const auto& cc = t->classes();
  th->block_of_class_.assign(cc.count(), -1);
  for (std::size_t k = 0; k < th->class_blocks_.size(); ++k) {
    std::vector<int> els;
    for (int c : th->class_blocks_[k]) {
      th->block_of_class_[c] = static_cast<int>(k);
      els.insert(els.end(), cc.classes[c].begin(), cc.classes[c].end());
    }
    std::sort(els.begin(), els.end());
    th->superclass_elements_.push_back(std::move(els));
  }
  for (const auto& xb : th->irr_blocks_) {
    th->sigma_.push_back(sigma_of(*t, xb));
    BigInt d = 0;
    for (int i : xb) d += t->degree(i) * t->degree(i);
    th->sigma_degree_.push_back(d);
  }
  return th;
}

TheoryPtr make_theory(const TablePtr& t, Partition irr, Partition cls) {
  const TheoryCheck check = check_theory(t, irr, cls);
  if (!check.ok)
    throw Error(ErrorCode::NotASupercharacterTheory, check.condition + ": " + check.witness, check.witness);
  return build_theory(t, std::move(irr), std::move(cls));
}

TheoryPtr make_theory_from_elements(const TablePtr& t, Partition irr, Partition elements) {
  const auto& g = *t->group();
  require_partition(irr, static_cast<int>(t->size()), "irreducible");
  require_partition(elements, g.order(), "element");
  for (const auto& block : elements)
    if (std::find(block.begin(), block.end(), 0) != block.end() && block.size() != 1)
      throw Error(ErrorCode::NotASupercharacterTheory,
                  "identity: K-block " + block_text(block) + " contains the identity with other elements",
                  block_text(block));
  if (irr.size() != elements.size())
    throw Error(ErrorCode::NotASupercharacterTheory,
                "block-count: " + std::to_string(irr.size()) + " X-blocks but " + std::to_string(elements.size()) +
                    " K-blocks");
  for (const auto& xb : irr) {
    const ClassFunction s = sigma_of(*t, xb);
    for (const auto& kb : elements)
      for (std::size_t i = 1; i < kb.size(); ++i)
        if (s.at_element(kb[i]) != s.at_element(kb[0])) {
          const std::string w = "sigma of X-block " + block_text(xb) + " not constant on element block " + block_text(kb);
          throw Error(ErrorCode::NotASupercharacterTheory, "constancy: " + w, w);
        }
  }
  // Every superclass of a supercharacter theory is a union of conjugacy classes.
  Partition cls;
  std::vector<int> block_of(g.order());
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (int x : elements[k]) block_of[x] = static_cast<int>(k);
  for (const auto& block : elements) {
    std::vector<int> classes;
    for (int x : block) {
      const int c = g.class_of(x);
      for (int y : g.classes().classes[c])
        if (block_of[y] != block_of[x])
          throw std::logic_error("superclass " + block_text(block) + " is not a union of conjugacy classes");
      classes.push_back(c);
    }
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    cls.push_back(std::move(classes));
  }
  return build_theory(t, std::move(irr), std::move(cls));
}

TheoryPtr classical_theory(const TablePtr& t) {
  Partition irr, cls;
  for (std::size_t i = 0; i < t->size(); ++i) irr.push_back({static_cast<int>(i)});
  for (std::size_t c = 0; c < t->classes().count(); ++c) cls.push_back({static_cast<int>(c)});
  return make_theory(t, std::move(irr), std::move(cls));
}

TheoryPtr maximal_theory(const TablePtr& t) {
  const int r = static_cast<int>(t->classes().count());
  if (r == 1) return classical_theory(t);
  Partition irr{{0}, {}}, cls{{0}, {}};
  for (int i = 1; i < r; ++i) {
    irr[1].push_back(i);
    cls[1].push_back(i);
  }
  return make_theory(t, std::move(irr), std::move(cls));
}

std::vector<TheoryPtr> enumerate_theories(const TablePtr& t, int max_classes) {
  const auto& g = *t->group();
  const auto& cc = t->classes();
  const int r = static_cast<int>(cc.count());
  if (r > max_classes)
    throw Error(ErrorCode::OrderCapExceeded,
                std::to_string(r) + " conjugacy classes exceed the enumeration cap " + std::to_string(max_classes));

  // central character values omega_chi(C_c) = |C_c| chi(g_c) / chi(1)
  std::vector<std::vector<Cyclotomic>> omega(r);
  for (int i = 0; i < r; ++i)
    for (int c = 0; c < r; ++c)
      omega[i].push_back(scale(BigRational(BigInt(cc.size_of(c)), t->degree(i)), t->row(i)[c]));

  std::vector<TheoryPtr> out;
  std::vector<int> label(r, 0);  // restricted growth string over classes 1..r-1
  int blocks = 0;

  auto consider = [&]() {
    Partition cls{{0}};
    for (int c = 1; c < r; ++c) {
      if (label[c] + 1 >= static_cast<int>(cls.size())) cls.resize(label[c] + 2);
      cls[label[c] + 1].push_back(c);
    }
    std::map<std::vector<Cyclotomic>, std::vector<int>> groups;
    for (int i = 0; i < r; ++i) {
      std::vector<Cyclotomic> key;
      key.reserve(cls.size());
      for (const auto& kb : cls) {
        Cyclotomic s;
        for (int c : kb) s += omega[i][c];
        key.push_back(std::move(s));
      }
      groups[std::move(key)].push_back(i);
    }
    if (groups.size() != cls.size()) return;
    Partition irr;
    for (auto& [key, members] : groups) irr.push_back(members);
    if (check_theory(t, irr, cls).ok) out.push_back(build_theory(t, std::move(irr), std::move(cls)));
  };

  if (r == 1) {
    consider();
  } else {
    // iterate restricted growth strings label[1..r-1]
    std::function<void(int, int)> rec = [&](int pos, int used) {
      if (pos == r) {
        blocks = used;
        consider();
        return;
      }
      for (int l = 0; l <= used && l < r; ++l) {
        label[pos] = l;
        rec(pos + 1, std::max(used, l + 1));
      }
    };
    rec(1, 0);
  }
  (void)blocks;
  (void)g;

  std::sort(out.begin(), out.end(), [](const TheoryPtr& a, const TheoryPtr& b) {
    if (a->block_count() != b->block_count()) return a->block_count() > b->block_count();
    return a->class_partition() < b->class_partition();
  });
  return out;
}

Compatibility is_compatible(const SupercharacterTheory& small, const SupercharacterTheory& large, const Embedding& e) {
  if (small.group() != e.sub || large.group() != e.super)
    throw Error(ErrorCode::GroupMismatch, "theories do not match the embedding");
  for (std::size_t k = 0; k < small.class_partition().size(); ++k) {
    const auto& els = small.superclass_elements(k);
    const int target = large.superclass_of(e.map[els.front()]);
    for (int x : els)
      if (large.superclass_of(e.map[x]) != target) return {false, x};
  }
  return {};
}

SuperclassFunction::SuperclassFunction(TheoryPtr theory, ClassFunction values)
    : theory_(std::move(theory)), values_(std::move(values)) {
  if (values_.group() != theory_->group())
    throw Error(ErrorCode::GroupMismatch, "superclass function and theory live on different groups");
  if (auto k = theory_->nonconstant_superclass(values_))
    throw Error(ErrorCode::NotASuperclassFunction, "not constant on superclass K" + std::to_string(*k),
                "K" + std::to_string(*k));
}

SuperclassFunction superclass_function(const TheoryPtr& theory, const std::vector<Cyclotomic>& per_superclass) {
  if (per_superclass.size() != theory->block_count())
    throw Error(ErrorCode::InvalidInput, "need one value per superclass");
  std::vector<Cyclotomic> vals(theory->group()->class_count());
  for (std::size_t c = 0; c < vals.size(); ++c) vals[c] = per_superclass[theory->superclass_of_class(c)];
  return SuperclassFunction(theory, ClassFunction(theory->group(), std::move(vals)));
}

namespace {

void require_compatible(const SupercharacterTheory& small, const SupercharacterTheory& large, const Embedding& e) {
  const auto c = is_compatible(small, large, e);
  if (!c.compatible)
    throw Error(ErrorCode::IncompatibleTheories,
                "superclass of element " + std::to_string(*c.witness) + " is not inside one superclass of the larger group",
                std::to_string(*c.witness));
}

}  // namespace

SuperclassFunction superinduce(const SuperclassFunction& phi, const TheoryPtr& large, const Embedding& e) {
  const auto& small = *phi.theory();
  require_compatible(small, *large, e);
  const auto& g = *e.super;
  const int hn = e.sub->order();
  std::vector<Cyclotomic> sums(large->block_count());
  for (int x = 0; x < hn; ++x) {
    const Cyclotomic& v = phi.values().at_element(x);
    if (!v.is_zero()) sums[large->superclass_of(e.map[x])] += v;
  }
  for (std::size_t k = 0; k < sums.size(); ++k)
    if (!sums[k].is_zero())
      sums[k] = scale(BigRational(g.order(), static_cast<long>(hn) * large->superclass_size(k)), sums[k]);
  return superclass_function(large, sums);
}

SuperclassFunction superinduce_via_reciprocity(const SuperclassFunction& phi, const TheoryPtr& large,
                                               const Embedding& e) {
  require_compatible(*phi.theory(), *large, e);
  auto acc = ClassFunction::zero(large->group());
  for (std::size_t x = 0; x < large->block_count(); ++x) {
    const ClassFunction& s = large->sigma(x);
    const Cyclotomic num = inner_product(phi.values(), restrict(s, e));
    if (num.is_zero()) continue;
    const Cyclotomic den = inner_product(s, s);
    acc += (num * Cyclotomic(1 / *den.as_rational())) * s;
  }
  return SuperclassFunction(large, std::move(acc));
}

SuperclassFunction srestrict(const SuperclassFunction& theta, const TheoryPtr& small, const Embedding& e) {
  require_compatible(*small, *theta.theory(), e);
  return SuperclassFunction(small, restrict(theta.values(), e));
}

std::optional<std::size_t> CompatibleFamily::index_of(const std::vector<int>& elements) const {
  std::vector<int> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (subgroups_[i].elements() == sorted) return i;
  return std::nullopt;
}

std::size_t CompatibleFamily::require(const Subgroup& h) const {
  if (h.parent() != top_) throw Error(ErrorCode::SubgroupNotInFamily, "subgroup of a different group");
  if (auto i = index_of(h.elements())) return *i;
  throw Error(ErrorCode::SubgroupNotInFamily, "subgroup of order " + std::to_string(h.order()) + " is not in the family",
              block_text(h.elements()));
}

TheoryChooser all_classical() {
  return [](const Subgroup&, const TablePtr& t) { return classical_theory(t); };
}

TheoryChooser all_maximal() {
  return [](const Subgroup&, const TablePtr& t) { return maximal_theory(t); };
}

TheoryChooser maximal_top_classical_below() {
  return [](const Subgroup& h, const TablePtr& t) { return h.is_whole() ? maximal_theory(t) : classical_theory(t); };
}

FamilyPtr make_family(const GroupPtr& g, std::vector<Subgroup> subgroups, std::vector<TheoryPtr> theories) {
  if (subgroups.size() != theories.size())
    throw Error(ErrorCode::InvalidInput, "need one theory per subgroup");
  std::vector<std::size_t> order(subgroups.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ea = subgroups[a].elements();
    const auto& eb = subgroups[b].elements();
    if (ea.size() != eb.size()) return ea.size() < eb.size();
    return ea < eb;
  });

  std::shared_ptr<CompatibleFamily> fam(new CompatibleFamily());
  fam->top_ = g;
  bool has_top = false;
  for (std::size_t idx : order) {
    const Subgroup& h = subgroups[idx];
    if (h.parent() != g) throw Error(ErrorCode::GroupMismatch, "family subgroup has a different parent group");
    if (theories[idx]->group() != h.local())
      throw Error(ErrorCode::GroupMismatch, "family theory does not belong to its subgroup");
    if (!fam->subgroups_.empty() && fam->subgroups_.back() == h)
      throw Error(ErrorCode::InvalidInput, "subgroup listed twice in family");
    if (h.is_whole()) {
      has_top = true;
      fam->top_index_ = fam->subgroups_.size();
    }
    fam->subgroups_.push_back(h);
    fam->theories_.push_back(theories[idx]);
  }
  if (!has_top) throw Error(ErrorCode::InvalidInput, "family must contain the whole group");

  for (std::size_t i = 0; i < fam->size(); ++i)
    for (std::size_t j = 0; j < fam->size(); ++j) {
      if (i == j) continue;
      const Subgroup& a = fam->subgroups_[i];
      const Subgroup& b = fam->subgroups_[j];
      if (a.order() >= b.order() || !is_subgroup_chain(a, b)) continue;
      const Embedding e = embedding_between(a, b);
      const auto c = is_compatible(*fam->theories_[i], *fam->theories_[j], e);
      if (!c.compatible) {
        const int parent_element = a.elements()[*c.witness];
        throw Error(ErrorCode::IncompatibleFamily,
                    "theories on " + block_text(a.elements()) + " and " + block_text(b.elements()) +
                        " are incompatible at element " + std::to_string(parent_element),
                    std::to_string(parent_element));
      }
    }
  return fam;
}

FamilyPtr make_family(const GroupPtr& g, std::vector<Subgroup> subgroups, const TheoryChooser& chooser,
                      const DixonOptions& dixon) {
  std::vector<TheoryPtr> theories;
  theories.reserve(subgroups.size());
  for (const auto& h : subgroups) theories.push_back(chooser(h, dixon_character_table(h.local(), dixon)));
  return make_family(g, std::move(subgroups), std::move(theories));
}

}  // namespace superchar
