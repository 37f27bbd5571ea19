// Acceptance run: one PASS/FAIL line per criterion. All value checks are
// exact; the only tolerances are the wall-clock limits below and the
// floating-point cross-check of orthogonality.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "superchar/builtin_groups.hpp"

using namespace superchar;

namespace {

constexpr double kTablesSeconds = 30.0;         // criterion 1, total
constexpr double kEnumerationSeconds = 60.0;    // criterion 2, per group
constexpr double kTheoremSeconds = 300.0;       // criterion 6, total
constexpr double kNumericTolerance = 1e-9;      // floating orthogonality oracle
constexpr int kReciprocityTrials = 100;         // criterion 3, per pair
constexpr int kTheoremBases = 50;               // criteria 6 and 7
constexpr long kBaseLo = -5, kBaseHi = 5;
constexpr long kAch3SamplingCap = 200000;       // criterion 7 rejection sampling

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::vector<long> sorted_degrees(const CharacterTable& t) {
  std::vector<long> d;
  for (std::size_t i = 0; i < t.size(); ++i) d.push_back(t.degree(i).get_si());
  std::sort(d.begin(), d.end());
  return d;
}

void criterion1(Outcome& o) {
  const auto t0 = Clock::now();
  std::vector<std::string> groups;
  for (int n = 2; n <= 12; ++n) groups.push_back("c" + std::to_string(n));
  for (const char* s : {"s3", "s4", "a4", "d4", "q8"}) groups.emplace_back(s);
  for (const auto& spec : groups) {
    auto g = builtin_group(spec);
    auto t = dixon_character_table(g);
    o.require(verify_orthogonality(*t).passed, spec + " orthogonality");
    o.require(oracle::numeric_orthogonality(*t, kNumericTolerance), spec + " floating orthogonality");
    BigInt sq = 0;
    for (std::size_t i = 0; i < t->size(); ++i) sq += t->degree(i) * t->degree(i);
    o.require(sq == g->order(), spec + " sum of squared degrees");
    const auto sols = oracle::degree_solutions(*g);
    o.require(sols.size() == 1, spec + " oracle has a unique degree solution");
    if (sols.size() == 1) {
      std::vector<long> want(sols[0].begin(), sols[0].end());
      o.require(sorted_degrees(*t) == want, spec + " degree multiset");
    }
  }
  const double secs = since(t0);
  o.require(secs < kTablesSeconds, "runtime");
  o.detail << groups.size() << " groups in " << secs << " s, limit " << kTablesSeconds << " s";
}

void criterion2(Outcome& o) {
  const std::vector<std::pair<std::string, int>> fixed = {{"c2", 1}, {"c3", 2}, {"c5", 3}};
  double worst = 0;
  for (const auto& [spec, want] : fixed) {
    const auto t0 = Clock::now();
    const auto n = enumerate_theories(dixon_character_table(builtin_group(spec))).size();
    worst = std::max(worst, since(t0));
    o.require(static_cast<int>(n) == want, spec + " count " + std::to_string(n));
    o.detail << spec << "=" << n << " ";
  }
  for (const char* spec : {"c4", "s3", "d4"}) {
    const auto t0 = Clock::now();
    auto t = dixon_character_table(builtin_group(spec));
    const auto n = enumerate_theories(t).size();
    const int naive = oracle::count_theories_naive(*t);
    const double secs = since(t0);
    worst = std::max(worst, secs);
    o.require(static_cast<int>(n) == naive, std::string(spec) + " disagrees with the naive count");
    o.require(secs < kEnumerationSeconds, std::string(spec) + " runtime");
    o.detail << spec << "=" << n << "/" << naive << " ";
  }
  o.detail << "slowest " << worst << " s, limit " << kEnumerationSeconds << " s per group";
}

struct PairCase {
  TheoryPtr small, large;
  Embedding e;
};

std::vector<PairCase> reciprocity_cases() {
  std::vector<PairCase> out;
  auto add = [&](const GroupPtr& g, bool classical) {
    const auto subs = enumerate_subgroups(g);
    std::vector<TheoryPtr> th;
    for (const auto& h : subs) {
      auto t = dixon_character_table(h.local());
      th.push_back(classical ? classical_theory(t) : maximal_theory(t));
    }
    for (std::size_t a = 0; a < subs.size(); ++a)
      for (std::size_t b = 0; b < subs.size(); ++b)
        if (is_subgroup_chain(subs[a], subs[b])) out.push_back({th[a], th[b], embedding_between(subs[a], subs[b])});
  };
  add(symmetric_group(4), true);
  add(symmetric_group(3), false);
  return out;
}

void criterion3and4(Outcome& o3, Outcome& o4) {
  std::mt19937_64 rng(2024);
  const auto cases = reciprocity_cases();
  long trials = 0, incompatible = 0;
  for (const auto& c : cases) {
    if (!is_compatible(*c.small, *c.large, c.e).compatible) {
      ++incompatible;
      continue;
    }
    for (int k = 0; k < kReciprocityTrials; ++k) {
      const auto phi = oracle::random_superclass_function(rng, c.small);
      const auto theta = oracle::random_superclass_function(rng, c.large);
      const auto s = superinduce(phi, c.large, c.e);
      o3.require(inner_product(s.values(), theta.values()) ==
                     inner_product(phi.values(), srestrict(theta, c.small, c.e).values()),
                 "reciprocity on a pair");
      o4.require(superinduce_via_reciprocity(phi, c.large, c.e).values() == s.values(), "reconstruction on a pair");
      ++trials;
    }
  }
  o3.require(incompatible == 0, "a classical or maximal pair was incompatible");
  o3.detail << cases.size() << " pairs, " << trials << " random (Phi, theta) pairs";
  o4.detail << trials << " superinductions compared";
}

void criterion5(Outcome& o) {
  auto g = symmetric_group(4);
  auto cg = classical_theory(dixon_character_table(g));
  const auto subs = enumerate_subgroups(g);
  int checked = 0;
  for (const auto& h : subs) {
    auto ch = classical_theory(dixon_character_table(h.local()));
    for (const auto& chi : ch->table()->rows()) {
      const auto s = superinduce(SuperclassFunction(ch, chi), cg, h.embedding());
      const auto ref = oracle::induce_elementwise(chi, h);
      bool same = true;
      for (int x = 0; x < g->order(); ++x) same = same && s.values().at_element(x) == ref[x];
      o.require(same, "subgroup of order " + std::to_string(h.order()));
      ++checked;
    }
  }
  o.require(subs.size() == 30, "S4 subgroup count");
  o.detail << subs.size() << " subgroups, " << checked << " irreducible characters";
}

void criterion6(Outcome& o) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(606);
  struct Fam {
    const char* label;
    GroupPtr g;
    TheoryChooser chooser;
  };
  const std::vector<Fam> fams = {{"S3 classical", symmetric_group(3), all_classical()},
                                 {"S3 maximal", symmetric_group(3), all_maximal()},
                                 {"S4 classical", symmetric_group(4), all_classical()}};
  long hs = 0;
  for (const auto& f : fams) {
    auto fam = make_family(f.g, enumerate_subgroups(f.g), f.chooser);
    for (int trial = 0; trial < kTheoremBases; ++trial) {
      const NSystem n(fam, oracle::random_base(rng, fam->top_theory()->block_count(), kBaseLo, kBaseHi));
      o.require(verify_artin_takagi(n).passed, std::string(f.label) + " Artin-Takagi");
      for (std::size_t i = 0; i < fam->size(); ++i) {
        o.require(verify_heilbronn_stark(n, fam->subgroup(i)).passed, std::string(f.label) + " Heilbronn-Stark");
        ++hs;
      }
    }
  }
  const double secs = since(t0);
  o.require(secs < kTheoremSeconds, "runtime");
  o.detail << 3 * kTheoremBases << " bases, " << hs << " restriction checks in " << secs << " s, limit "
           << kTheoremSeconds << " s";
}

void criterion7(Outcome& o) {
  std::mt19937_64 rng(707);
  for (const auto& g : {symmetric_group(3), symmetric_group(4)}) {
    auto fam = make_family(g, enumerate_subgroups(g), all_classical());
    std::vector<DecompositionCertificate> certs;
    for (std::size_t i = 0; i < fam->size(); ++i) {
      const auto found = find_uvdw_certificate(*fam, fam->subgroup(i));
      o.require(found.certificate.has_value(), g->name() + " certificate search, subgroup of order " +
                                                   std::to_string(fam->subgroup(i).order()));
      if (found.certificate) certs.push_back(*found.certificate);
    }
    int accepted = 0;
    long drawn = 0;
    long verified = 0;
    while (accepted < kTheoremBases && drawn < kAch3SamplingCap) {
      ++drawn;
      const NSystem n(fam, oracle::random_base(rng, fam->top_theory()->block_count(), kBaseLo, kBaseHi));
      if (!check_ach3(n).passed) continue;
      ++accepted;
      for (const auto& c : certs) {
        const UvdwReport r = verify_uvdw(n, c);
        o.require(r.passed, g->name() + " verify_uvdw");
        o.require(r.inequality_asserted, g->name() + " inequality not asserted although nonnegativity holds");
        ++verified;
      }
    }
    o.require(accepted == kTheoremBases, g->name() + " could not sample enough admissible bases");
    o.detail << g->name() << ": " << certs.size() << " certificates, " << accepted << " admissible bases of " << drawn
             << " drawn, " << verified << " verifications" << (g->order() == 6 ? "; " : "");
  }
}

void criterion8(Outcome& o) {
  constexpr int kSamplesPerChain = 20;
  std::mt19937_64 rng(808);
  auto g = symmetric_group(4);
  const auto subs = enumerate_subgroups(g);
  std::vector<std::vector<TheoryPtr>> theories;
  for (const auto& h : subs) theories.push_back(enumerate_theories(dixon_character_table(h.local())));
  auto compatible = [&](std::size_t a, const TheoryPtr& ta, std::size_t b, const TheoryPtr& tb) {
    return is_compatible(*ta, *tb, embedding_between(subs[a], subs[b])).compatible;
  };
  long chains = 0, classical_premises = 0, sampled = 0, sampled_premises = 0;
  for (std::size_t a = 0; a < subs.size(); ++a)
    for (std::size_t b = 0; b < subs.size(); ++b)
      for (std::size_t c = 0; c < subs.size(); ++c) {
        if (!is_subgroup_chain(subs[a], subs[b]) || !is_subgroup_chain(subs[b], subs[c])) continue;
        ++chains;
        // classical theories throughout
        const auto &ca = theories[a].front(), &cb = theories[b].front(), &cc = theories[c].front();
        if (compatible(a, ca, b, cb) && compatible(b, cb, c, cc)) {
          ++classical_premises;
          o.require(compatible(a, ca, c, cc), "classical chain without direct compatibility");
        }
        // arbitrary theories drawn from the full enumeration of each subgroup
        for (int k = 0; k < kSamplesPerChain; ++k) {
          auto pick = [&](std::size_t i) { return theories[i][rng() % theories[i].size()]; };
          const auto ta = pick(a), tb = pick(b), tc = pick(c);
          ++sampled;
          if (!(compatible(a, ta, b, tb) && compatible(b, tb, c, tc))) continue;
          ++sampled_premises;
          o.require(compatible(a, ta, c, tc), "sampled chain without direct compatibility");
        }
      }
  o.detail << chains << " chains, " << classical_premises << " classical with pairwise compatibility, " << sampled
           << " sampled theory triples of which " << sampled_premises << " pairwise compatible";
}

void criterion9(Outcome& o) {
  // constructed rejection 1: mixed block on C3
  auto c3 = dixon_character_table(cyclic_group(3));
  try {
    make_theory(c3, {{0, 2}, {1}}, {{0}, {1, 2}});
    o.require(false, "bad partition accepted");
  } catch (const Error& e) {
    o.require(e.code() == ErrorCode::NotASupercharacterTheory, "bad partition error code");
    o.require(e.witness() == "sigma of X-block {0,2} not constant on K-block {1,2}", "bad partition witness");
    o.detail << "partition: \"" << e.witness() << "\"; ";
  }
  // constructed rejection 2: one value of the S3 table moved by 1
  auto s3 = symmetric_group(3);
  auto rows = dixon_character_table(s3)->rows();
  rows[2][1] += Cyclotomic(1L);
  const Report r = verify_orthogonality(*table_from_rows(s3, rows));
  o.require(!r.passed && !r.violations.empty(), "perturbed table passed");
  if (!r.violations.empty()) {
    const auto& loc = r.violations.front().location;
    o.require(loc.rfind("rows ", 0) == 0 || loc.rfind("columns ", 0) == 0 || loc == "degrees",
              "perturbed table location shape");
    o.detail << "table: violation at \"" << loc << "\"; ";
  }
  try {
    accept_table(s3, rows);
    o.require(false, "perturbed table accepted");
  } catch (const Error& e) {
    o.require(e.code() == ErrorCode::NotACharacter, "perturbed table error code");
  }
  // constructed rejection 3: a degree-2 constituent in a certificate term
  auto fam = make_family(s3, enumerate_subgroups(s3), all_classical());
  Subgroup a3 = fam->subgroup(0);
  for (std::size_t i = 0; i < fam->size(); ++i)
    if (fam->subgroup(i).order() == 3) a3 = fam->subgroup(i);
  try {
    validate_certificate(*fam, DecompositionCertificate{a3, {{fam->subgroup(fam->top_index()), {2}}}});
    o.require(false, "non-linear certificate accepted");
  } catch (const Error& e) {
    o.require(e.code() == ErrorCode::InvalidCertificate, "certificate error code");
    o.require(e.witness() == "term 0", "certificate witness");
    o.detail << "certificate: \"" << e.witness() << "\"";
  }
}

void report(int id, const char* title, const std::function<void(Outcome&)>& run, int& failures) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    run(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  if (!o.pass) ++failures;
  std::printf("criterion %d [%s]: %s (%s) [%.2f s]\n", id, title, o.pass ? "PASS" : "FAIL", o.detail.str().c_str(),
              since(t0));
  std::fflush(stdout);
}

}  // namespace

int main() {
  int failures = 0;
  report(1, "character tables", criterion1, failures);
  report(2, "theory enumeration", criterion2, failures);
  Outcome o3, o4;
  const auto t0 = Clock::now();
  try {
    criterion3and4(o3, o4);
  } catch (const std::exception& e) {
    o3.require(false, std::string("exception: ") + e.what());
    o4.require(false, std::string("exception: ") + e.what());
  }
  const double secs = since(t0);
  failures += !o3.pass + !o4.pass;
  std::printf("criterion 3 [super Frobenius reciprocity]: %s (%s) [%.2f s]\n", o3.pass ? "PASS" : "FAIL",
              o3.detail.str().c_str(), secs);
  std::printf("criterion 4 [superinduction uniqueness]: %s (%s) [shared run]\n", o4.pass ? "PASS" : "FAIL",
              o4.detail.str().c_str());
  report(5, "classical superinduction is induction", criterion5, failures);
  report(6, "Artin-Takagi and Heilbronn-Stark", criterion6, failures);
  report(7, "Uchida-van der Waall certificates", criterion7, failures);
  report(8, "compatibility transitivity", criterion8, failures);
  report(9, "rejection paths", criterion9, failures);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
