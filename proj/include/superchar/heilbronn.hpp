#pragma once

#include <optional>
#include <vector>

#include "superchar/theory.hpp"

namespace superchar {

/// Integer values n(G, sigma_X) on the blocks of the top theory, extended to
/// every subgroup of the family through superinduction:
///   n(H, Phi) = <Theta_G, Sind Phi> = <Theta_G|_H, Phi>.
class NSystem {
 public:
  NSystem(FamilyPtr family, std::vector<BigInt> base);

  const FamilyPtr& family() const noexcept { return family_; }
  const std::vector<BigInt>& base() const noexcept { return base_; }
  /// Theta_G = sum_X n(G, sigma_X) / sigma_X(1) * sigma_X.
  const SuperclassFunction& theta_top() const noexcept { return theta_top_; }

 private:
  FamilyPtr family_;
  std::vector<BigInt> base_;
  SuperclassFunction theta_top_;
};

struct NValue {
  Cyclotomic value;
  std::optional<BigRational> rational;
  bool integral = false;
};

/// Phi is a class function on the local group of h, constant on the
/// superclasses of the family theory there. Both routes are evaluated and
/// must agree.
NValue n_value(const NSystem& n, const Subgroup& h, const ClassFunction& phi);
NValue n_value(const NSystem& n, std::size_t family_index, const ClassFunction& phi);

/// n(G, f) for any class function f on the top group.
NValue n_top(const NSystem& n, const ClassFunction& f);

/// Theta_H = sum_Y n(H, sigma_Y) / sigma_Y(1) * sigma_Y.
SuperclassFunction theta(const NSystem& n, const Subgroup& h);
/// Same sum with n(G, Sind sigma_Y) in place of n(H, sigma_Y).
SuperclassFunction theta_via_superinduction(const NSystem& n, const Subgroup& h);

/// n(H, sigma_Y) >= 0 for every block Y whose supercharacter has only linear
/// constituents, over every subgroup of the family. Non-integer values at
/// supercharacters are warnings.
Report check_ach3(const NSystem& n);

/// n(G, Reg) = sum_X n(G, sigma_X) = sum_X n(G, sigma_X) <sigma_X, sigma_X> / sigma_X(1).
Report verify_artin_takagi(const NSystem& n);

/// Theta_G restricted to H equals Theta_H pointwise.
Report verify_heilbronn_stark(const NSystem& n, const Subgroup& h);

/// sigma_i on H_i is the sum of the family supercharacters listed in
/// `sigma_blocks` (repeats allowed).
struct CertificateTerm {
  Subgroup subgroup;
  std::vector<int> sigma_blocks;
};

/// Sind 1_H = 1_G + sum_i Sind sigma_i with every sigma_i a sum of linear
/// characters.
struct DecompositionCertificate {
  Subgroup h;
  std::vector<CertificateTerm> terms;
};

ClassFunction term_character(const CompatibleFamily& family, const CertificateTerm& term);

/// Throws InvalidCertificate when a term has a non-linear constituent, names
/// an unknown subgroup or block, or the defining identity fails.
void validate_certificate(const CompatibleFamily& family, const DecompositionCertificate& cert);

struct UvdwReport : Report {
  NValue n_h;      // n(H, 1_H)
  NValue n_g;      // n(G, 1_G)
  bool ach3_holds = false;
  bool inequality_asserted = false;
};

/// Checks both expansions exactly, then the inequality n(H,1_H) >= n(G,1_G)
/// when n(H_i, sigma_i) >= 0 for every term.
UvdwReport verify_uvdw(const NSystem& n, const DecompositionCertificate& cert);

struct UvdwSearch {
  std::optional<DecompositionCertificate> certificate;
  bool budget_exhausted = false;
  long nodes = 0;
};

/// Depth-first search over inductions of linear characters of the family's
/// subgroups (classical theories required). `budget` bounds visited nodes.
UvdwSearch find_uvdw_certificate(const CompatibleFamily& family, const Subgroup& h, long budget = 100000);

}  // namespace superchar
