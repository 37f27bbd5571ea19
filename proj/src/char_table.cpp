#include "superchar/char_table.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace superchar {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->class_count())
    throw Error(ErrorCode::InvalidInput, "class function needs one value per conjugacy class");
}

ClassFunction ClassFunction::constant(GroupPtr group, const Cyclotomic& value) {
  const std::size_t r = group->class_count();
  return ClassFunction(std::move(group), std::vector<Cyclotomic>(r, value));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (group_ != other.group_) throw Error(ErrorCode::GroupMismatch, "adding class functions of different groups");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (group_ != other.group_) throw Error(ErrorCode::GroupMismatch, "subtracting class functions of different groups");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Cyclotomic& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

std::string ClassFunction::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += values_[i].to_string();
  }
  return out + ")";
}

namespace {

BigInt degree_of(const ClassFunction& row) {
  auto q = row[0].as_rational();
  if (q && q->get_den() == 1) return q->get_num();
  return 0;
}

bool is_trivial_row(const ClassFunction& row) {
  return std::all_of(row.values().begin(), row.values().end(),
                     [](const Cyclotomic& v) { return v == Cyclotomic(1L); });
}

}  // namespace

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> rows)
    : group_(std::move(group)), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.group() != group_) throw Error(ErrorCode::GroupMismatch, "table row belongs to another group");
    degrees_.push_back(degree_of(r));
  }
}

std::string CharacterTable::fingerprint() const {
  std::ostringstream s;
  const auto& cc = classes();
  s << "order=" << group_->order() << ";";
  for (std::size_t c = 0; c < cc.count(); ++c)
    s << cc.representative(c) << ":" << cc.size_of(c) << ";";
  for (const auto& r : rows_) {
    s << "|";
    for (const auto& v : r.values()) {
      s << v.order() << "[";
      for (const auto& q : v.coeffs()) s << q.get_str() << ",";
      s << "]";
    }
  }
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s.str()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ClassMultCoeffs::ClassMultCoeffs(const FiniteGroup& g) : r_(g.class_count()), data_(r_ * r_ * r_, 0) {
  const auto& cc = g.classes();
  for (std::size_t k = 0; k < r_; ++k) {
    const int z = cc.representative(k);
    for (int x = 0; x < g.order(); ++x) {
      const int y = g.mul(g.inv(x), z);
      ++data_[(static_cast<std::size_t>(g.class_of(x)) * r_ + g.class_of(y)) * r_ + k];
    }
  }
}

std::vector<ClassFunction> canonical_rows(std::vector<ClassFunction> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ClassFunction& a, const ClassFunction& b) {
    const bool ta = is_trivial_row(a), tb = is_trivial_row(b);
    if (ta != tb) return ta;
    const BigInt da = degree_of(a), db = degree_of(b);
    if (da != db) return da < db;
    return a.values() < b.values();
  });
  return rows;
}

TablePtr table_from_rows(GroupPtr g, std::vector<ClassFunction> rows) {
  return std::make_shared<const CharacterTable>(std::move(g), std::move(rows));
}

TablePtr accept_table(GroupPtr g, std::vector<ClassFunction> rows) {
  auto t = table_from_rows(g, canonical_rows(std::move(rows)));
  Report rep = verify_orthogonality(*t);
  if (!rep.passed) {
    const auto& v = rep.violations.front();
    throw Error(ErrorCode::NotACharacter, "supplied table fails orthogonality at " + v.location + ": " + v.detail,
                v.location);
  }
  return t;
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& h) {
  if (f.group() != h.group()) throw Error(ErrorCode::GroupMismatch, "inner product of functions on different groups");
  const auto& g = *f.group();
  Cyclotomic sum;
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (f[c].is_zero() || h[c].is_zero()) continue;
    sum += Cyclotomic(static_cast<long>(g.classes().size_of(c))) * f[c] * h[c].conjugate();
  }
  return scale(BigRational(1, g.order()), sum);
}

Report verify_orthogonality(const CharacterTable& t) {
  Report rep;
  rep.check = "orthogonality";
  const auto& g = *t.group();
  const auto& cc = t.classes();
  const std::size_t r = cc.count();
  if (t.size() != r) {
    rep.fail("table", std::to_string(t.size()) + " rows for " + std::to_string(r) + " classes");
    return rep;
  }
  if (r == 0 || !is_trivial_row(t.row(0))) rep.fail("row 0", "first row is not the trivial character");

  BigInt sum_sq = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (t.degree(i) <= 0)
      rep.fail("row " + std::to_string(i), "value at identity " + t.row(i)[0].to_string() + " is not a positive integer");
    sum_sq += t.degree(i) * t.degree(i);
  }
  if (sum_sq != g.order())
    rep.fail("degrees", "sum of squared degrees " + sum_sq.get_str() + " differs from |G| = " + std::to_string(g.order()));

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      const Cyclotomic ip = inner_product(t.row(i), t.row(j));
      const Cyclotomic want = i == j ? 1L : 0L;
      if (ip != want)
        rep.fail("rows " + std::to_string(i) + "," + std::to_string(j), "<chi_i, chi_j> = " + ip.to_string());
    }

  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a; b < r; ++b) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < r; ++i) sum += t.row(i)[a] * t.row(i)[b].conjugate();
      const Cyclotomic want = a == b ? Cyclotomic(static_cast<long>(g.order() / cc.size_of(a))) : Cyclotomic(0L);
      if (sum != want)
        rep.fail("columns " + std::to_string(a) + "," + std::to_string(b),
                 "column sum " + sum.to_string() + ", expected " + want.to_string());
    }
  if (rep.passed) rep.note("row and column orthogonality hold exactly");
  return rep;
}

ClassFunction restrict(const ClassFunction& f, const Embedding& e) {
  if (f.group() != e.super) throw Error(ErrorCode::GroupMismatch, "restricting a function of another group");
  const auto& h = *e.sub;
  std::vector<Cyclotomic> vals;
  vals.reserve(h.class_count());
  for (std::size_t c = 0; c < h.class_count(); ++c)
    vals.push_back(f.at_element(e.map[h.classes().representative(c)]));
  return ClassFunction(e.sub, std::move(vals));
}

ClassFunction restrict(const ClassFunction& f, const Subgroup& h) { return restrict(f, h.embedding()); }

ClassFunction induce(const ClassFunction& f, const Embedding& e) {
  if (f.group() != e.sub) throw Error(ErrorCode::GroupMismatch, "inducing a function of another group");
  const auto& g = *e.super;
  const int hn = e.sub->order();
  std::vector<Cyclotomic> sums(g.class_count());
  for (int a = 0; a < hn; ++a) {
    const Cyclotomic& v = f.at_element(a);
    if (!v.is_zero()) sums[g.class_of(e.map[a])] += v;
  }
  for (std::size_t c = 0; c < sums.size(); ++c)
    if (!sums[c].is_zero())
      sums[c] = scale(BigRational(g.order(), static_cast<long>(hn) * g.classes().size_of(c)), sums[c]);
  return ClassFunction(e.super, std::move(sums));
}

ClassFunction induce(const ClassFunction& f, const Subgroup& h) { return induce(f, h.embedding()); }

ClassFunction trivial_character(const GroupPtr& g) { return ClassFunction::constant(g, 1L); }

ClassFunction regular_character(const GroupPtr& g) {
  auto f = ClassFunction::zero(g);
  f[0] = Cyclotomic(static_cast<long>(g->order()));
  return f;
}

std::vector<Cyclotomic> decompose(const ClassFunction& f, const CharacterTable& t) {
  std::vector<Cyclotomic> m;
  m.reserve(t.size());
  for (const auto& row : t.rows()) m.push_back(inner_product(f, row));
  return m;
}

std::vector<BigInt> character_multiplicities(const ClassFunction& f, const CharacterTable& t) {
  std::vector<BigInt> out;
  const auto m = decompose(f, t);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_nonnegative_integer())
      throw Error(ErrorCode::NotACharacter,
                  "multiplicity of irreducible " + std::to_string(i) + " is " + m[i].to_string(),
                  std::to_string(i));
    out.push_back(m[i].as_rational()->get_num());
  }
  return out;
}

bool has_only_linear_constituents(const ClassFunction& f, const CharacterTable& t) {
  const auto m = decompose(f, t);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].is_zero()) continue;
    if (!m[i].is_nonnegative_integer() || !t.is_linear(i)) return false;
  }
  return true;
}

}  // namespace superchar
