#include "superchar/heilbronn.hpp"

#include <stdexcept>

namespace superchar {

namespace {

SuperclassFunction build_theta(const TheoryPtr& top, const std::vector<BigInt>& base) {
  auto acc = ClassFunction::zero(top->group());
  for (std::size_t x = 0; x < top->block_count(); ++x) {
    if (base[x] == 0) continue;
    acc += Cyclotomic(BigRational(base[x], top->sigma_degree(x))) * top->sigma(x);
  }
  return SuperclassFunction(top, std::move(acc));
}

NValue wrap(Cyclotomic v) {
  NValue out;
  out.rational = v.as_rational();
  out.integral = out.rational && out.rational->get_den() == 1;
  out.value = std::move(v);
  return out;
}

std::string block_name(const std::vector<int>& elements) {
  std::string s = "{";
  for (std::size_t i = 0; i < elements.size(); ++i) s += (i ? "," : "") + std::to_string(elements[i]);
  return s + "}";
}

}  // namespace

NSystem::NSystem(FamilyPtr family, std::vector<BigInt> base)
    : family_(std::move(family)),
      base_(std::move(base)),
      theta_top_(family_->top_theory(), ClassFunction::zero(family_->top())) {
  if (base_.size() != family_->top_theory()->block_count())
    throw Error(ErrorCode::InvalidInput, "base has " + std::to_string(base_.size()) + " values for " +
                                             std::to_string(family_->top_theory()->block_count()) + " blocks");
  theta_top_ = build_theta(family_->top_theory(), base_);
}

NValue n_value(const NSystem& n, std::size_t i, const ClassFunction& phi) {
  const auto& fam = *n.family();
  const Subgroup& h = fam.subgroup(i);
  const SuperclassFunction f(fam.theory(i), phi);
  const Embedding e = h.embedding();
  const Cyclotomic direct = inner_product(restrict(n.theta_top().values(), e), phi);
  const SuperclassFunction sind = superinduce(f, fam.top_theory(), e);
  const Cyclotomic via = inner_product(n.theta_top().values(), sind.values());
  if (direct != via)
    throw std::logic_error("n-value routes disagree on " + block_name(h.elements()) + ": " + direct.to_string() +
                           " vs " + via.to_string());
  return wrap(direct);
}

NValue n_value(const NSystem& n, const Subgroup& h, const ClassFunction& phi) {
  const std::size_t i = n.family()->require(h);
  const GroupPtr& local = n.family()->subgroup(i).local();
  if (phi.group() == local) return n_value(n, i, phi);
  if (phi.group() != h.local()) throw Error(ErrorCode::GroupMismatch, "function does not live on the subgroup");
  return n_value(n, i, ClassFunction(local, phi.values()));
}

NValue n_top(const NSystem& n, const ClassFunction& f) {
  return wrap(inner_product(n.theta_top().values(), f));
}

SuperclassFunction theta(const NSystem& n, const Subgroup& sub) {
  const std::size_t i = n.family()->require(sub);
  const Subgroup& h = n.family()->subgroup(i);
  const auto& th = n.family()->theory(i);
  auto acc = ClassFunction::zero(th->group());
  for (std::size_t y = 0; y < th->block_count(); ++y) {
    const NValue v = n_value(n, i, th->sigma(y));
    if (v.value.is_zero()) continue;
    acc += scale(BigRational(1, th->sigma_degree(y)), v.value) * th->sigma(y);
  }
  SuperclassFunction out(th, std::move(acc));
  if (!(out.values() == theta_via_superinduction(n, h).values()))
    throw std::logic_error("theta formulas disagree on " + block_name(h.elements()));
  return out;
}

SuperclassFunction theta_via_superinduction(const NSystem& n, const Subgroup& sub) {
  const std::size_t i = n.family()->require(sub);
  const auto& fam = *n.family();
  const Subgroup& h = fam.subgroup(i);
  const auto& th = fam.theory(i);
  const Embedding e = h.embedding();
  auto acc = ClassFunction::zero(th->group());
  for (std::size_t y = 0; y < th->block_count(); ++y) {
    const auto sind = superinduce(SuperclassFunction(th, th->sigma(y)), fam.top_theory(), e);
    const Cyclotomic v = n_top(n, sind.values()).value;
    if (v.is_zero()) continue;
    acc += scale(BigRational(1, th->sigma_degree(y)), v) * th->sigma(y);
  }
  return SuperclassFunction(th, std::move(acc));
}

Report check_ach3(const NSystem& n) {
  Report rep;
  rep.check = "ach3";
  const auto& fam = *n.family();
  int checked = 0;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const auto& th = fam.theory(i);
    for (std::size_t y = 0; y < th->block_count(); ++y) {
      const NValue v = n_value(n, i, th->sigma(y));
      const std::string where = "H=" + block_name(fam.subgroup(i).elements()) + " X" + std::to_string(y);
      if (!v.integral) rep.warnings.push_back(where + ": n = " + v.value.to_string() + " is not an integer");
      if (!has_only_linear_constituents(th->sigma(y), *th->table())) continue;
      ++checked;
      if (!v.rational || *v.rational < 0) rep.fail(where, "n = " + v.value.to_string() + " at a linear supercharacter");
    }
  }
  rep.note(std::to_string(checked) + " linear supercharacters checked");
  return rep;
}

Report verify_artin_takagi(const NSystem& n) {
  Report rep;
  rep.check = "artin-takagi";
  const auto& top = n.family()->top_theory();
  const NValue reg = n_top(n, regular_character(top->group()));
  Cyclotomic sum, weighted;
  for (std::size_t x = 0; x < top->block_count(); ++x) {
    const NValue nx = n_top(n, top->sigma(x));
    if (nx.value != Cyclotomic(BigRational(n.base()[x])))
      rep.fail("X" + std::to_string(x), "recovered n(G, sigma) = " + nx.value.to_string() + ", base " +
                                             n.base()[x].get_str());
    sum += nx.value;
    const Cyclotomic norm = inner_product(top->sigma(x), top->sigma(x));
    if (norm != Cyclotomic(BigRational(top->sigma_degree(x))))
      rep.fail("X" + std::to_string(x), "<sigma, sigma> = " + norm.to_string() + " differs from sigma(1)");
    weighted += scale(BigRational(1, top->sigma_degree(x)), nx.value * norm);
  }
  rep.note("n(G, Reg) = " + reg.value.to_string());
  rep.note("sum of n(G, sigma_X) = " + sum.to_string());
  rep.note("weighted sum = " + weighted.to_string());
  if (reg.value != sum) rep.fail("first equality", reg.value.to_string() + " != " + sum.to_string());
  if (sum != weighted) rep.fail("second equality", sum.to_string() + " != " + weighted.to_string());
  return rep;
}

Report verify_heilbronn_stark(const NSystem& n, const Subgroup& sub) {
  Report rep;
  rep.check = "heilbronn-stark";
  const std::size_t i = n.family()->require(sub);
  const Subgroup& h = n.family()->subgroup(i);
  const auto& th = n.family()->theory(i);
  const SuperclassFunction lhs = srestrict(n.theta_top(), th, h.embedding());
  const SuperclassFunction rhs = theta(n, h);
  for (std::size_t c = 0; c < th->group()->class_count(); ++c)
    if (lhs.values()[c] != rhs.values()[c])
      rep.fail("class " + std::to_string(c), "Theta_G|_H = " + lhs.values()[c].to_string() + ", Theta_H = " +
                                                 rhs.values()[c].to_string());
  rep.note("Theta_G|_H = " + lhs.values().to_string());
  rep.note("Theta_H = " + rhs.values().to_string());
  return rep;
}

}  // namespace superchar
