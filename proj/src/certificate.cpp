#include "superchar/heilbronn.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace superchar {

namespace {

std::string set_text(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::size_t family_slot(const CompatibleFamily& fam, const Subgroup& h, const std::string& what) {
  if (h.parent() != fam.top())
    throw Error(ErrorCode::InvalidCertificate, what + " is a subgroup of another group", what);
  auto i = fam.index_of(h.elements());
  if (!i) throw Error(ErrorCode::InvalidCertificate, what + " " + set_text(h.elements()) + " is not in the family", what);
  return *i;
}

}  // namespace

ClassFunction term_character(const CompatibleFamily& family, const CertificateTerm& term) {
  const std::size_t i = family_slot(family, term.subgroup, "term subgroup");
  const auto& th = family.theory(i);
  auto acc = ClassFunction::zero(th->group());
  for (int y : term.sigma_blocks) {
    if (y < 0 || static_cast<std::size_t>(y) >= th->block_count())
      throw Error(ErrorCode::InvalidCertificate, "block X" + std::to_string(y) + " does not exist on " +
                                                     set_text(term.subgroup.elements()),
                  "X" + std::to_string(y));
    acc += th->sigma(y);
  }
  return acc;
}

void validate_certificate(const CompatibleFamily& fam, const DecompositionCertificate& cert) {
  const std::size_t hi = family_slot(fam, cert.h, "H");
  const auto& top = fam.top_theory();
  auto rhs = trivial_character(fam.top());
  for (std::size_t k = 0; k < cert.terms.size(); ++k) {
    const auto& term = cert.terms[k];
    if (term.sigma_blocks.empty())
      throw Error(ErrorCode::InvalidCertificate, "term " + std::to_string(k) + " is empty", "term " + std::to_string(k));
    const std::size_t i = family_slot(fam, term.subgroup, "term " + std::to_string(k));
    const ClassFunction sigma = term_character(fam, term);
    if (!has_only_linear_constituents(sigma, *fam.theory(i)->table()))
      throw Error(ErrorCode::InvalidCertificate,
                  "term " + std::to_string(k) + " on " + set_text(term.subgroup.elements()) +
                      " has a non-linear constituent",
                  "term " + std::to_string(k));
    rhs += superinduce(SuperclassFunction(fam.theory(i), sigma), top, fam.subgroup(i).embedding()).values();
  }
  const Subgroup& h = fam.subgroup(hi);
  const auto lhs = superinduce(SuperclassFunction(fam.theory(hi), trivial_character(h.local())), top, h.embedding());
  if (!(lhs.values() == rhs))
    throw Error(ErrorCode::InvalidCertificate,
                "Sind 1_H = " + lhs.values().to_string() + " but 1_G + sum of terms = " + rhs.to_string(), "identity");
}

UvdwReport verify_uvdw(const NSystem& n, const DecompositionCertificate& cert) {
  const auto& fam = *n.family();
  validate_certificate(fam, cert);
  UvdwReport rep;
  rep.check = "uvdw";
  rep.note("certificate identity holds with " + std::to_string(cert.terms.size()) + " terms");

  const auto& top = fam.top_theory();
  const std::size_t hi = fam.require(cert.h);
  const Subgroup& h = fam.subgroup(hi);
  const auto one_h = trivial_character(h.local());
  rep.n_h = n_value(n, hi, one_h);
  rep.n_g = n_top(n, trivial_character(fam.top()));

  const NValue lhs1 = n_top(n, superinduce(SuperclassFunction(fam.theory(hi), one_h), top, h.embedding()).values());
  Cyclotomic rhs1 = rep.n_g.value, rhs2 = rep.n_g.value;
  rep.ach3_holds = true;
  for (std::size_t k = 0; k < cert.terms.size(); ++k) {
    const auto& term = cert.terms[k];
    const std::size_t i = fam.require(term.subgroup);
    const auto& th = fam.theory(i);
    const ClassFunction sigma = term_character(fam, term);
    rhs1 += n_top(n, superinduce(SuperclassFunction(th, sigma), top, fam.subgroup(i).embedding()).values()).value;
    rhs2 += n_value(n, i, sigma).value;
    for (int y : term.sigma_blocks) {
      const NValue v = n_value(n, i, th->sigma(y));
      if (!v.rational || *v.rational < 0) {
        rep.ach3_holds = false;
        rep.warnings.push_back("n(" + set_text(term.subgroup.elements()) + ", X" + std::to_string(y) +
                               ") = " + v.value.to_string() + " violates nonnegativity");
      }
    }
  }
  rep.note("Eq1: n(G, Sind 1_H) = " + lhs1.value.to_string() + ", n(G,1_G) + sum n(G, Sind sigma_i) = " +
           rhs1.to_string());
  if (lhs1.value != rhs1) rep.fail("Eq1", lhs1.value.to_string() + " != " + rhs1.to_string());
  rep.note("Eq2: n(H,1_H) = " + rep.n_h.value.to_string() + ", n(G,1_G) + sum n(H_i, sigma_i) = " + rhs2.to_string());
  if (rep.n_h.value != rhs2) rep.fail("Eq2", rep.n_h.value.to_string() + " != " + rhs2.to_string());

  if (rep.ach3_holds) {
    rep.inequality_asserted = true;
    const bool ok = rep.n_h.rational && rep.n_g.rational && *rep.n_h.rational >= *rep.n_g.rational;
    rep.note("inequality: n(H,1_H) = " + rep.n_h.value.to_string() + " >= n(G,1_G) = " + rep.n_g.value.to_string());
    if (!ok) rep.fail("inequality", rep.n_h.value.to_string() + " < " + rep.n_g.value.to_string());
  } else {
    rep.note("inequality not asserted: nonnegativity fails on some term");
  }
  return rep;
}

UvdwSearch find_uvdw_certificate(const CompatibleFamily& fam, const Subgroup& sub, long budget) {
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (!fam.theory(i)->is_classical())
      throw Error(ErrorCode::InvalidInput, "certificate search needs classical theories throughout the family");
  const std::size_t hi = fam.require(sub);
  const Subgroup& h = fam.subgroup(hi);
  const auto& top = fam.top_theory();
  const auto& table = *top->table();

  const auto sind_one = superinduce(SuperclassFunction(fam.theory(hi), trivial_character(h.local())), top,
                                    h.embedding());
  const auto target_fn = sind_one.values() - trivial_character(fam.top());
  std::vector<BigInt> big_target = character_multiplicities(target_fn, table);
  std::vector<long> target;
  for (const auto& m : big_target) target.push_back(m.get_si());

  struct Candidate {
    std::size_t slot;
    int block;
    std::vector<long> mult;
  };
  std::vector<std::size_t> slots(fam.size());
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
  std::stable_sort(slots.begin(), slots.end(),
                   [&](std::size_t a, std::size_t b) { return fam.subgroup(a).order() > fam.subgroup(b).order(); });
  std::vector<Candidate> cands;
  for (std::size_t i : slots) {
    const auto& th = fam.theory(i);
    for (std::size_t y = 0; y < th->block_count(); ++y) {
      if (!th->table()->is_linear(th->irr_partition()[y].front())) continue;
      const auto ind = superinduce(SuperclassFunction(th, th->sigma(y)), top, fam.subgroup(i).embedding());
      Candidate c{i, static_cast<int>(y), {}};
      for (const auto& m : character_multiplicities(ind.values(), table)) c.mult.push_back(m.get_si());
      cands.push_back(std::move(c));
    }
  }

  UvdwSearch out;
  std::vector<std::size_t> chosen;
  std::vector<long> remaining = target;
  std::function<bool()> dfs = [&]() -> bool {
    if (out.nodes >= budget) {
      out.budget_exhausted = true;
      return false;
    }
    ++out.nodes;
    auto first = std::find_if(remaining.begin(), remaining.end(), [](long v) { return v > 0; });
    if (first == remaining.end()) return true;
    const std::size_t j = first - remaining.begin();
    for (std::size_t c = 0; c < cands.size(); ++c) {
      const auto& m = cands[c].mult;
      if (m[j] <= 0) continue;
      bool fits = true;
      for (std::size_t k = 0; k < m.size() && fits; ++k) fits = m[k] <= remaining[k];
      if (!fits) continue;
      for (std::size_t k = 0; k < m.size(); ++k) remaining[k] -= m[k];
      chosen.push_back(c);
      if (dfs()) return true;
      chosen.pop_back();
      for (std::size_t k = 0; k < m.size(); ++k) remaining[k] += m[k];
      if (out.budget_exhausted) return false;
    }
    return false;
  };
  if (!dfs()) return out;

  std::map<std::size_t, std::vector<int>> grouped;
  for (std::size_t c : chosen) grouped[cands[c].slot].push_back(cands[c].block);
  DecompositionCertificate cert{h, {}};
  for (std::size_t i : slots) {
    auto it = grouped.find(i);
    if (it == grouped.end()) continue;
    std::sort(it->second.begin(), it->second.end());
    cert.terms.push_back({fam.subgroup(i), it->second});
  }
  validate_certificate(fam, cert);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace superchar
