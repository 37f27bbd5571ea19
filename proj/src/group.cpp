#include "superchar/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace superchar {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::IdentityNotZero: return "IdentityNotZero";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::PrimeRejected: return "PrimeRejected";
    case ErrorCode::EigensplitFailure: return "EigensplitFailure";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NotACharacter: return "NotACharacter";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::NotASupercharacterTheory: return "NotASupercharacterTheory";
    case ErrorCode::IncompatibleTheories: return "IncompatibleTheories";
    case ErrorCode::IncompatibleFamily: return "IncompatibleFamily";
    case ErrorCode::SubgroupNotInFamily: return "SubgroupNotInFamily";
    case ErrorCode::NotASuperclassFunction: return "NotASuperclassFunction";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {}

void FiniteGroup::derive() {
  const int n = order_;
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }

  element_orders_.assign(n, 1);
  exponent_ = 1;
  for (int g = 0; g < n; ++g) {
    int k = 1;
    for (int x = g; x != 0; x = mul(x, g)) ++k;
    element_orders_[g] = k;
    exponent_ = std::lcm(exponent_, element_orders_[g]);
  }

  std::vector<int> class_of(n, -1);
  std::vector<std::vector<int>> classes;
  for (int g = 0; g < n; ++g) {
    if (class_of[g] >= 0) continue;
    std::set<int> orbit;
    for (int h = 0; h < n; ++h) orbit.insert(conjugate(g, h));
    const int id = static_cast<int>(classes.size());
    for (int x : orbit) class_of[x] = id;
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c]) class_of[x] = static_cast<int>(c);
  classes_.classes = std::move(classes);
  classes_.class_of = std::move(class_of);
}

int FiniteGroup::power(int g, long k) const {
  const int o = element_order(g);
  long m = k % o;
  if (m < 0) m += o;
  int x = 0;
  for (long i = 0; i < m; ++i) x = mul(x, g);
  return x;
}

int FiniteGroup::centralizer_order(int g) const {
  int count = 0;
  for (int h = 0; h < order_; ++h)
    if (mul(h, g) == mul(g, h)) ++count;
  if (count * classes_.size_of(class_of(g)) != order_)
    throw std::logic_error("centralizer order times class size differs from group order");
  return count;
}

std::vector<std::vector<int>> FiniteGroup::cayley_table() const {
  std::vector<std::vector<int>> t(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

GroupPtr make_group_unchecked(std::string name, int order, std::vector<int> table) {
  std::shared_ptr<FiniteGroup> g(new FiniteGroup(std::move(name), order, std::move(table)));
  g->derive();
  return g;
}

GroupPtr group_from_cayley(const std::vector<std::vector<int>>& table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty table");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw Error(ErrorCode::NotAGroup, "row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n)
        throw Error(ErrorCode::NotAGroup,
                    "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      flat.push_back(v);
    }
  }
  auto at = [&](int a, int b) { return flat[static_cast<std::size_t>(a) * n + b]; };
  for (int x = 0; x < n; ++x)
    if (at(0, x) != x || at(x, 0) != x)
      throw Error(ErrorCode::IdentityNotZero, "element 0 is not a two-sided identity",
                  std::to_string(x));
  for (int a = 0; a < n; ++a) {
    std::vector<char> row_seen(n, 0), col_seen(n, 0);
    for (int b = 0; b < n; ++b) {
      if (row_seen[at(a, b)]++)
        throw Error(ErrorCode::NotAGroup, "row " + std::to_string(a) + " repeats an entry");
      if (col_seen[at(b, a)]++)
        throw Error(ErrorCode::NotAGroup, "column " + std::to_string(a) + " repeats an entry");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = at(a, b);
      for (int c = 0; c < n; ++c)
        if (at(ab, c) != at(a, at(b, c))) {
          std::ostringstream w;
          w << "(" << a << "," << b << "," << c << ")";
          throw Error(ErrorCode::NotAGroup, "associativity fails at " + w.str(), w.str());
        }
    }
  return make_group_unchecked(std::move(name), n, std::move(flat));
}

GroupPtr group_from_permutations(int degree, std::vector<std::vector<int>> generators,
                                 std::string name, int cap) {
  if (degree < 1) throw Error(ErrorCode::NotAGroup, "degree must be positive");
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const auto& s = generators[k];
    std::vector<char> seen(degree, 0);
    bool ok = static_cast<int>(s.size()) == degree;
    for (int i = 0; ok && i < degree; ++i) {
      if (s[i] < 0 || s[i] >= degree || seen[s[i]]++) ok = false;
    }
    if (!ok)
      throw Error(ErrorCode::NotAGroup,
                  "generator " + std::to_string(k) + " is not a permutation of 0.." +
                      std::to_string(degree - 1));
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  using Perm = std::vector<int>;
  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::vector<Perm> elements{identity};
  std::map<Perm, int> index{{identity, 0}};
  std::vector<int> parent{-1}, via{-1};
  const std::size_t ngen = generators.size();
  std::vector<std::vector<int>> right(1, std::vector<int>(ngen, -1));

  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (std::size_t s = 0; s < ngen; ++s) {
      Perm y(degree);
      const Perm& x = elements[head];
      for (int i = 0; i < degree; ++i) y[i] = x[generators[s][i]];
      auto [it, inserted] = index.emplace(y, static_cast<int>(elements.size()));
      if (inserted) {
        if (static_cast<int>(elements.size()) >= cap)
          throw Error(ErrorCode::OrderCapExceeded,
                      "closure exceeds " + std::to_string(cap) + " elements");
        elements.push_back(std::move(y));
        parent.push_back(static_cast<int>(head));
        via.push_back(static_cast<int>(s));
        right.emplace_back(ngen, -1);
      }
      right[head][s] = it->second;
    }
  }

  const int n = static_cast<int>(elements.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    flat[static_cast<std::size_t>(a) * n] = a;
    // elements are discovered after their parents, so parent(b) < b
    for (int b = 1; b < n; ++b)
      flat[static_cast<std::size_t>(a) * n + b] =
          right[flat[static_cast<std::size_t>(a) * n + parent[b]]][via[b]];
  }
  return make_group_unchecked(std::move(name), n, std::move(flat));
}

const ConjugacyClasses& conjugacy_classes(const FiniteGroup& g) { return g.classes(); }
int element_order(const FiniteGroup& g, int element) { return g.element_order(element); }
int centralizer_order(const FiniteGroup& g, int element) { return g.centralizer_order(element); }

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> out{0};
  in[0] = 1;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int s : generators) {
      const int y = g.mul(out[head], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup make_subgroup_unchecked(const GroupPtr& parent, std::vector<int> elements) {
  Subgroup h;
  h.parent_ = parent;
  h.elements_ = std::move(elements);
  h.to_local_.assign(parent->order(), -1);
  for (std::size_t i = 0; i < h.elements_.size(); ++i)
    h.to_local_[h.elements_[i]] = static_cast<int>(i);
  if (static_cast<int>(h.elements_.size()) == parent->order()) {
    h.local_ = parent;
    return h;
  }
  const int m = static_cast<int>(h.elements_.size());
  std::vector<int> flat(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      flat[static_cast<std::size_t>(a) * m + b] =
          h.to_local_[parent->mul(h.elements_[a], h.elements_[b])];
  std::string name = parent->name() + "[" + std::to_string(m) + "]";
  h.local_ = make_group_unchecked(std::move(name), m, std::move(flat));
  return h;
}

Subgroup make_subgroup(const GroupPtr& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int n = parent->order();
  if (elements.empty() || elements.front() != 0)
    throw Error(ErrorCode::NotASubgroup, "subset does not contain the identity");
  if (elements.back() >= n || elements.front() < 0)
    throw Error(ErrorCode::NotASubgroup, "element index out of range");
  std::vector<char> in(n, 0);
  for (int x : elements) in[x] = 1;
  for (int a : elements) {
    if (!in[parent->inv(a)])
      throw Error(ErrorCode::NotASubgroup, "not closed under inverses", std::to_string(a));
    for (int b : elements)
      if (!in[parent->mul(a, b)])
        throw Error(ErrorCode::NotASubgroup, "not closed under multiplication",
                    std::to_string(a) + "*" + std::to_string(b));
  }
  if (n % static_cast<int>(elements.size()) != 0)
    throw std::logic_error("Lagrange check failed for a closed subset");
  return make_subgroup_unchecked(parent, std::move(elements));
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup_unchecked(g, std::move(all));
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& g, const GroupLimits& limits) {
  const int n = g->order();
  if (n > limits.max_order)
    throw Error(ErrorCode::OrderCapExceeded,
                "group order " + std::to_string(n) + " exceeds cap " +
                    std::to_string(limits.max_order));

  struct Found {
    std::vector<bool> mask;
    std::vector<int> gens;
  };
  std::set<std::vector<bool>> seen;
  std::vector<Found> all;
  auto to_mask = [n](const std::vector<int>& els) {
    std::vector<bool> m(n, false);
    for (int x : els) m[x] = true;
    return m;
  };
  auto record = [&](std::vector<int> els, std::vector<int> gens, std::vector<std::size_t>& layer) {
    auto mask = to_mask(els);
    if (!seen.insert(mask).second) return;
    if (static_cast<int>(all.size()) >= limits.max_subgroups)
      throw Error(ErrorCode::OrderCapExceeded,
                  "subgroup count exceeds cap " + std::to_string(limits.max_subgroups));
    layer.push_back(all.size());
    all.push_back({std::move(mask), std::move(gens)});
  };

  std::vector<std::size_t> layer;
  for (int x = 0; x < n; ++x) {
    std::vector<int> gens;
    if (x != 0) gens.push_back(x);
    record(generated_subgroup(*g, gens), gens, layer);
  }
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : layer) {
      const std::vector<bool> base = all[idx].mask;
      const std::vector<int> base_gens = all[idx].gens;
      std::vector<bool> done = base;
      std::vector<int> base_elems;
      for (int x = 0; x < n; ++x)
        if (base[x]) base_elems.push_back(x);
      for (int x = 0; x < n; ++x) {
        if (done[x]) continue;
        // <S, s*x> = <S, x> for s in S, so one coset member suffices
        for (int s : base_elems) done[g->mul(s, x)] = true;
        auto gens = base_gens;
        gens.push_back(x);
        record(generated_subgroup(*g, gens), gens, next);
      }
    }
    layer = std::move(next);
  }

  std::vector<std::vector<int>> element_sets;
  element_sets.reserve(all.size());
  for (const auto& f : all) {
    std::vector<int> els;
    for (int x = 0; x < n; ++x)
      if (f.mask[x]) els.push_back(x);
    element_sets.push_back(std::move(els));
  }
  std::sort(element_sets.begin(), element_sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<Subgroup> out;
  out.reserve(element_sets.size());
  for (auto& els : element_sets) out.push_back(make_subgroup_unchecked(g, std::move(els)));
  return out;
}

bool is_subgroup_chain(const Subgroup& smaller, const Subgroup& larger) {
  if (smaller.parent() != larger.parent()) return false;
  return std::includes(larger.elements().begin(), larger.elements().end(),
                       smaller.elements().begin(), smaller.elements().end());
}

Embedding embedding_between(const Subgroup& smaller, const Subgroup& larger) {
  if (!is_subgroup_chain(smaller, larger))
    throw Error(ErrorCode::NotASubgroup, "first subgroup is not contained in the second");
  Embedding e{smaller.local(), larger.local(), {}};
  e.map.reserve(smaller.elements().size());
  for (int x : smaller.elements()) e.map.push_back(larger.to_local(x));
  return e;
}

GroupPtr relabeled(const FiniteGroup& g, const std::vector<int>& perm, std::string name) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n || perm[0] != 0)
    throw std::invalid_argument("relabeled: permutation must fix 0");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<std::size_t>(perm[a]) * n + perm[b]] = perm[g.mul(a, b)];
  return make_group_unchecked(std::move(name), n, std::move(flat));
}

}  // namespace superchar
