// superchar: command-line front end.
//
// Exit status: 0 success, 1 a check failed (witness printed), 2 usage or
// input validation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "superchar/builtin_groups.hpp"
#include "superchar/io.hpp"

using namespace superchar;

namespace {

struct Options {
  std::string group_file;
  std::string builtin;
  std::string table_file;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
  long prime = 0;
  int max_order = 0;
  int max_classes = 12;
  long budget = 100000;
  std::string subgroup;
  std::string theory_file;
  std::string theory_h = "classical";
  std::string theory_g = "classical";
  std::string function_file;
  std::string family = "classical";
  std::string base;
  std::string nsys_file;
  std::string theorem;
  std::string certificate_file;
  bool list_subgroups = false;
};

/// A check that ran and came out false.
struct CheckFailed {
  std::string text;
  Json witness;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int max_order(const Options& o) {
  if (o.max_order > 0) return o.max_order;
  if (const char* env = std::getenv("SUPERCHAR_MAX_ORDER")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("SUPERCHAR_MAX_ORDER must be a positive integer, got '") + env + "'");
  }
  return GroupLimits{}.max_order;
}

DixonOptions dixon(const Options& o) {
  DixonOptions d;
  d.seed = o.seed;
  if (o.prime > 0) d.prime = o.prime;
  return d;
}

GroupPtr load_group(const Options& o) {
  if (!o.group_file.empty() && !o.builtin.empty()) throw UsageError("give either --group or --builtin, not both");
  if (!o.builtin.empty()) return builtin_group(o.builtin, max_order(o));
  if (o.group_file.empty()) throw UsageError("a group is required (--group FILE or --builtin SPEC)");
  return group_from_json(read_json_file(o.group_file), max_order(o));
}

TablePtr load_table(const Options& o, const GroupPtr& g) {
  if (!o.table_file.empty()) return table_from_json(read_json_file(o.table_file), g);
  return dixon_character_table(g, dixon(o));
}

GroupLimits limits(const Options& o) {
  GroupLimits l;
  l.max_order = max_order(o);
  return l;
}

std::string set_text(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::vector<int> parse_int_list(std::string s) {
  for (char& c : s)
    if (c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream in(s);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + s);
    }
  }
  return out;
}

std::map<int, int> order_histogram(const FiniteGroup& g) {
  std::map<int, int> h;
  for (int x = 0; x < g.order(); ++x) ++h[g.element_order(x)];
  return h;
}

/// Subgroup specifiers: G, 1, #k (canonical index), an element list,
/// order=N, or a builtin name such as A3 matched by order and element orders.
Subgroup resolve_subgroup(const std::string& spec, const GroupPtr& g, const Options& o) {
  if (spec.empty() || spec == "G") return whole_group(g);
  if (spec == "1") return make_subgroup(g, {0});
  if (spec[0] == '[' || std::isdigit(static_cast<unsigned char>(spec[0])))
    return make_subgroup(g, parse_int_list(spec));
  const auto subs = enumerate_subgroups(g, limits(o));
  if (spec[0] == '#') {
    const auto k = parse_int_list(spec.substr(1));
    if (k.size() != 1 || k[0] < 0 || k[0] >= static_cast<int>(subs.size()))
      throw UsageError("subgroup index out of range: " + spec);
    return subs[k[0]];
  }
  std::vector<Subgroup> hits;
  if (spec.rfind("order=", 0) == 0) {
    const auto n = parse_int_list(spec.substr(6));
    if (n.size() != 1) throw UsageError("bad subgroup spec " + spec);
    for (const auto& h : subs)
      if (h.order() == n[0]) hits.push_back(h);
  } else {
    const GroupPtr model = builtin_group(spec, max_order(o));
    const auto want = order_histogram(*model);
    for (const auto& h : subs)
      if (h.order() == model->order() && order_histogram(*h.local()) == want) hits.push_back(h);
  }
  if (hits.empty()) throw UsageError("no subgroup matches " + spec);
  if (hits.size() > 1)
    throw UsageError(std::to_string(hits.size()) + " subgroups match " + spec + "; give the elements or #index");
  return hits.front();
}

TheoryPtr theory_by_name(const std::string& name, const TablePtr& t) {
  if (name == "classical") return classical_theory(t);
  if (name == "maximal") return maximal_theory(t);
  return theory_from_json(read_json_file(name), t);
}

FamilyPtr load_family(const Options& o, const GroupPtr& g) {
  if (o.family == "classical" || o.family == "maximal" || o.family == "mixed") {
    const TheoryChooser chooser = o.family == "classical" ? all_classical()
                                  : o.family == "maximal" ? all_maximal()
                                                          : maximal_top_classical_below();
    return make_family(g, enumerate_subgroups(g, limits(o)), chooser, dixon(o));
  }
  return family_from_json(read_json_file(o.family), g, dixon(o));
}

std::vector<BigInt> parse_base(const std::string& s, std::size_t blocks) {
  std::vector<BigInt> out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    BigInt v;
    if (tok.empty() || v.set_str(tok, 10) != 0) throw UsageError("bad base value '" + tok + "'");
    out.push_back(v);
  }
  if (out.size() != blocks)
    throw UsageError("--base has " + std::to_string(out.size()) + " values, the top theory has " +
                     std::to_string(blocks) + " blocks");
  return out;
}

NSystem load_nsystem(Options& o, const GroupPtr& g) {
  if (!o.nsys_file.empty()) {
    const Json j = read_json_file(o.nsys_file);
    if (j.contains("family_ref") && o.family == "classical") o.family = j["family_ref"].get<std::string>();
    auto fam = load_family(o, g);
    const auto& top = fam->top_theory();
    if (j.contains("table_fingerprint") && j["table_fingerprint"] != top->table()->fingerprint())
      throw Error(ErrorCode::InvalidInput, "n-system table fingerprint does not match the computed table");
    auto base = base_from_json(j, top->block_count());
    return NSystem(fam, std::move(base));
  }
  auto fam = load_family(o, g);
  const std::size_t blocks = fam->top_theory()->block_count();
  if (o.base.empty()) throw UsageError("an n-system needs --base or --nsys");
  return NSystem(fam, parse_base(o.base, blocks));
}

// ---------------------------------------------------------------- output

void write_out(const Options& o, const Json& j) {
  if (o.out.empty()) return;
  std::ofstream f(o.out);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + o.out);
  f << j.dump(2) << "\n";
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string report_text(const Report& r) {
  std::ostringstream s;
  s << r.check << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& st : r.steps) s << "  " << st << "\n";
  for (const auto& w : r.warnings) s << "  warning: " << w << "\n";
  for (const auto& v : r.violations) s << "  violation at " << v.location << ": " << v.detail << "\n";
  return s.str();
}

int finish_report(const Options& o, const Report& r, Json extra = Json::object()) {
  Json j = report_to_json(r);
  for (auto& [k, v] : extra.items()) j[k] = v;
  j = Json{{"schema", "report/v1"}, {"report", j}};
  write_out(o, j);
  if (!r.passed) {
    Json w = Json::array();
    for (const auto& v : r.violations) w.push_back(Json{{"location", v.location}, {"detail", v.detail}});
    throw CheckFailed{report_text(r), Json{{"check", r.check}, {"violations", w}}};
  }
  emit(o, j, report_text(r));
  return 0;
}

std::string table_text(const CharacterTable& t) {
  std::ostringstream s;
  const auto& cc = t.classes();
  s << "group " << t.group()->name() << " order " << t.group()->order() << " exponent " << t.group()->exponent()
    << "\n";
  s << "classes:";
  for (std::size_t c = 0; c < cc.count(); ++c) s << " K" << c << "[rep " << cc.representative(c) << ", size "
                                                 << cc.size_of(c) << "]";
  s << "\n";
  for (std::size_t i = 0; i < t.size(); ++i) s << "chi" << i << " " << t.row(i).to_string() << "\n";
  s << "fingerprint " << t.fingerprint() << "\n";
  return s.str();
}

std::string theory_text(const SupercharacterTheory& t, std::size_t index) {
  std::ostringstream s;
  s << "theory " << index << (t.is_classical() ? " (classical)" : "") << ": " << t.block_count() << " blocks\n";
  s << "  X:";
  for (const auto& b : t.irr_partition()) s << " " << set_text(b);
  s << "\n  K (classes):";
  for (const auto& b : t.class_partition()) s << " " << set_text(b);
  s << "\n";
  return s.str();
}

// -------------------------------------------------------------- commands

int cmd_group_check(Options& o) {
  GroupPtr g;
  try {
    g = load_group(o);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAGroup && e.code() != ErrorCode::IdentityNotZero) throw;
    throw CheckFailed{std::string(e.what()) + "\n",
                      Json{{"error", std::string(error_name(e.code()))}, {"witness", e.witness()}}};
  }
  const Json j{{"schema", "groupcheck/v1"}, {"name", g->name()}, {"order", g->order()}, {"valid", true}};
  write_out(o, group_to_json(*g));
  emit(o, j, "group " + g->name() + " is valid, order " + std::to_string(g->order()) + "\n");
  return 0;
}

int cmd_group_info(Options& o) {
  const GroupPtr g = load_group(o);
  const auto& cc = g->classes();
  Json classes = Json::array();
  std::ostringstream s;
  s << "group " << g->name() << "\norder " << g->order() << "\nexponent " << g->exponent() << "\nclasses "
    << cc.count() << "\n";
  for (std::size_t c = 0; c < cc.count(); ++c) {
    classes.push_back(Json{{"rep", cc.representative(c)},
                           {"size", cc.size_of(c)},
                           {"element_order", g->element_order(cc.representative(c))}});
    s << "  K" << c << " rep " << cc.representative(c) << " size " << cc.size_of(c) << " element order "
      << g->element_order(cc.representative(c)) << "\n";
  }
  Json j{{"schema", "groupinfo/v1"}, {"name", g->name()}, {"order", g->order()}, {"exponent", g->exponent()},
         {"classes", classes}};
  const auto subs = enumerate_subgroups(g, limits(o));
  j["subgroup_count"] = subs.size();
  s << "subgroups " << subs.size() << "\n";
  if (o.list_subgroups) {
    Json list = Json::array();
    for (std::size_t i = 0; i < subs.size(); ++i) {
      list.push_back(subs[i].elements());
      s << "  #" << i << " order " << subs[i].order() << " " << set_text(subs[i].elements()) << "\n";
    }
    j["subgroups"] = list;
  }
  write_out(o, j);
  emit(o, j, s.str());
  return 0;
}

int cmd_table_compute(Options& o) {
  const GroupPtr g = load_group(o);
  const TablePtr t = load_table(o, g);
  const Json j = table_to_json(*t);
  write_out(o, j);
  emit(o, j, table_text(*t));
  return 0;
}

int cmd_table_verify(Options& o) {
  const GroupPtr g = load_group(o);
  if (o.table_file.empty()) throw UsageError("table verify needs --table FILE");
  const auto rows = table_rows_from_json(read_json_file(o.table_file), g);
  const TablePtr t = table_from_rows(g, rows);
  return finish_report(o, verify_orthogonality(*t));
}

int cmd_sct_verify(Options& o) {
  const GroupPtr g = load_group(o);
  const TablePtr t = load_table(o, g);
  if (o.theory_file.empty()) throw UsageError("sct verify needs --theory FILE");
  const Json j = read_json_file(o.theory_file);
  try {
    const TheoryPtr th = theory_from_json(j, t);
    const Json out = theory_to_json(*th);
    write_out(o, out);
    emit(o, Json{{"schema", "sctcheck/v1"}, {"valid", true}, {"theory", out}},
         "valid supercharacter theory\n" + theory_text(*th, 0));
    return 0;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotASupercharacterTheory) throw;
    const std::string msg = e.what();
    const auto colon = msg.find(": ");
    const auto colon2 = msg.find(": ", colon + 2);
    const std::string condition = msg.substr(colon + 2, colon2 - colon - 2);
    throw CheckFailed{"not a supercharacter theory (" + condition + "): " + e.witness() + "\n",
                      Json{{"condition", condition}, {"witness", e.witness()}}};
  }
}

int cmd_sct_enumerate(Options& o) {
  const GroupPtr g = load_group(o);
  const TablePtr t = load_table(o, g);
  const auto all = enumerate_theories(t, o.max_classes);
  Json list = Json::array();
  std::ostringstream s;
  s << all.size() << " supercharacter theories of " << g->name() << "\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    list.push_back(theory_to_json(*all[i]));
    s << theory_text(*all[i], i);
  }
  const Json j{{"schema", "sctlist/v1"}, {"group", g->name()}, {"count", all.size()}, {"theories", list}};
  write_out(o, j);
  emit(o, j, s.str());
  return 0;
}

int cmd_sct_compat(Options& o) {
  const GroupPtr g = load_group(o);
  const Subgroup h = resolve_subgroup(o.subgroup, g, o);
  const TheoryPtr tg = theory_by_name(o.theory_g, load_table(o, g));
  const TheoryPtr th = theory_by_name(o.theory_h, dixon_character_table(h.local(), dixon(o)));
  const auto c = is_compatible(*th, *tg, h.embedding());
  if (!c.compatible) {
    const int x = h.elements()[*c.witness];
    throw CheckFailed{"incompatible: the H-superclass of element " + std::to_string(x) +
                          " is not inside one G-superclass\n",
                      Json{{"element", x}}};
  }
  const Json j{{"schema", "compat/v1"}, {"subgroup", h.elements()}, {"compatible", true}};
  emit(o, j, "compatible\n");
  return 0;
}

int cmd_sind(Options& o) {
  const GroupPtr g = load_group(o);
  const Subgroup h = resolve_subgroup(o.subgroup, g, o);
  const TheoryPtr tg = theory_by_name(o.theory_g, load_table(o, g));
  const TheoryPtr th = theory_by_name(o.theory_h, dixon_character_table(h.local(), dixon(o)));
  ClassFunction phi = o.function_file.empty() ? trivial_character(h.local())
                                              : class_function_from_json(read_json_file(o.function_file), h.local());
  const SuperclassFunction f(th, phi);
  const auto a = superinduce(f, tg, h.embedding());
  const auto b = superinduce_via_reciprocity(f, tg, h.embedding());
  if (!(a.values() == b.values()))
    throw CheckFailed{"superinduction formulas disagree\n",
                      Json{{"formula", a.values().to_string()}, {"reciprocity", b.values().to_string()}}};
  const Json j = class_function_to_json(a.values());
  write_out(o, j);
  emit(o, j, "Sind = " + a.values().to_string() + "\n");
  return 0;
}

int cmd_family_check(Options& o) {
  const GroupPtr g = load_group(o);
  FamilyPtr fam;
  try {
    fam = load_family(o, g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IncompatibleFamily) throw;
    throw CheckFailed{std::string(e.what()) + "\n", Json{{"element", e.witness()}}};
  }
  const Json j = family_to_json(*fam);
  write_out(o, j);
  emit(o, Json{{"schema", "familycheck/v1"}, {"valid", true}, {"subgroups", fam->size()}},
       "compatible family on " + std::to_string(fam->size()) + " subgroups\n");
  return 0;
}

int cmd_nsys_build(Options& o) {
  const GroupPtr g = load_group(o);
  const NSystem n = load_nsystem(o, g);
  const Json j = nsys_to_json(n, o.family);
  write_out(o, j);
  emit(o, j, "n-system on " + g->name() + ", Theta_G = " + n.theta_top().values().to_string() + "\n");
  return 0;
}

int cmd_nsys_theta(Options& o) {
  const GroupPtr g = load_group(o);
  const NSystem n = load_nsystem(o, g);
  const Subgroup h = resolve_subgroup(o.subgroup, g, o);
  const auto t = theta(n, h);
  Json j = class_function_to_json(t.values());
  j["subgroup"] = h.elements();
  write_out(o, j);
  emit(o, j, "Theta_H on " + set_text(h.elements()) + " = " + t.values().to_string() + "\n");
  return 0;
}

Json nvalue_json(const NValue& v) { return cyclotomic_to_json(v.value); }

int cmd_nsys_verify(Options& o) {
  const GroupPtr g = load_group(o);
  const NSystem n = load_nsystem(o, g);
  if (o.theorem == "artin-takagi") return finish_report(o, verify_artin_takagi(n));
  if (o.theorem == "ach3") return finish_report(o, check_ach3(n));
  if (o.theorem == "heilbronn-stark") {
    if (!o.subgroup.empty()) return finish_report(o, verify_heilbronn_stark(n, resolve_subgroup(o.subgroup, g, o)));
    Report all;
    all.check = "heilbronn-stark";
    const auto& fam = *n.family();
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const Report r = verify_heilbronn_stark(n, fam.subgroup(i));
      const std::string where = set_text(fam.subgroup(i).elements());
      for (const auto& v : r.violations) all.fail("H=" + where + " " + v.location, v.detail);
    }
    all.note(std::to_string(fam.size()) + " subgroups checked");
    return finish_report(o, all);
  }
  if (o.theorem == "uvdw") {
    DecompositionCertificate cert{whole_group(g), {}};
    if (!o.certificate_file.empty()) {
      cert = certificate_from_json(read_json_file(o.certificate_file), g);
    } else {
      const Subgroup h = resolve_subgroup(o.subgroup, g, o);
      auto found = find_uvdw_certificate(*n.family(), h, o.budget);
      if (!found.certificate)
        throw CheckFailed{std::string("no certificate found") + (found.budget_exhausted ? " (budget exhausted)" : "") +
                              "\n",
                          Json{{"budget_exhausted", found.budget_exhausted}, {"nodes", found.nodes}}};
      cert = *found.certificate;
    }
    try {
      const UvdwReport r = verify_uvdw(n, cert);
      return finish_report(o, r,
                           Json{{"n_H", nvalue_json(r.n_h)},
                                {"n_G", nvalue_json(r.n_g)},
                                {"ach3_holds", r.ach3_holds},
                                {"inequality_asserted", r.inequality_asserted}});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidCertificate) throw;
      throw CheckFailed{std::string(e.what()) + "\n", Json{{"invalid_certificate", e.witness()}}};
    }
  }
  throw UsageError("--theorem must be artin-takagi, heilbronn-stark, uvdw or ach3");
}

int cmd_uvdw_find(Options& o) {
  const GroupPtr g = load_group(o);
  const FamilyPtr fam = load_family(o, g);
  const Subgroup h = resolve_subgroup(o.subgroup, g, o);
  const auto found = find_uvdw_certificate(*fam, h, o.budget);
  if (!found.certificate)
    throw CheckFailed{std::string("no certificate found") + (found.budget_exhausted ? " (budget exhausted)" : "") +
                          " after " + std::to_string(found.nodes) + " nodes\n",
                      Json{{"budget_exhausted", found.budget_exhausted}, {"nodes", found.nodes}}};
  const Json j = certificate_to_json(*found.certificate);
  write_out(o, j);
  std::ostringstream s;
  s << "certificate for H = " << set_text(h.elements()) << " (" << found.nodes << " nodes)\n";
  for (const auto& t : found.certificate->terms)
    s << "  H_i = " << set_text(t.subgroup.elements()) << " sigma blocks " << set_text(t.sigma_blocks) << "\n";
  emit(o, j, s.str());
  return 0;
}

void add_group_opts(CLI::App* c, Options& o) {
  c->add_option("--group", o.group_file, "group file (group/v1)");
  c->add_option("--builtin", o.builtin, "builtin group: cN, sN, aN, dN, qN");
  c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  c->add_option("--out", o.out, "write the structured result to this file");
  c->add_option("--max-order", o.max_order, "group order cap (default 200 or SUPERCHAR_MAX_ORDER)");
}

void add_table_opts(CLI::App* c, Options& o) {
  c->add_option("--seed", o.seed, "seed for eigenspace splitting");
  c->add_option("--prime", o.prime, "Dixon prime override");
  c->add_option("--table", o.table_file, "character table file (chartable/v1) instead of computing one");
}

void add_nsys_opts(CLI::App* c, Options& o) {
  c->add_option("--family", o.family, "classical, maximal, mixed or a family file");
  c->add_option("--base", o.base, "comma-separated n(G, sigma_X) for X0, X1, ...");
  c->add_option("--nsys", o.nsys_file, "n-system file (nsys/v1)");
  c->add_option("--subgroup", o.subgroup, "subgroup: G, 1, #k, element list, order=N or a name like A3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supercharacter theories, superinduction and n-systems on finite groups"};
  app.require_subcommand(1);
  Options o;
  std::function<int(Options&)> action;
  auto leaf = [&](CLI::App* parent, const char* name, const char* help, int (*fn)(Options&)) {
    auto* c = parent->add_subcommand(name, help);
    c->callback([&action, fn] { action = fn; });
    return c;
  };

  auto* group = app.add_subcommand("group", "group files")->require_subcommand(1);
  auto* gcheck = leaf(group, "check", "validate a group", cmd_group_check);
  add_group_opts(gcheck, o);
  auto* ginfo = leaf(group, "info", "order, exponent, classes and subgroups", cmd_group_info);
  add_group_opts(ginfo, o);
  ginfo->add_flag("--subgroups", o.list_subgroups, "list every subgroup");

  auto* table = app.add_subcommand("table", "character tables")->require_subcommand(1);
  auto* tcomp = leaf(table, "compute", "compute the character table", cmd_table_compute);
  add_group_opts(tcomp, o);
  add_table_opts(tcomp, o);
  auto* tver = leaf(table, "verify", "check orthogonality of a table file", cmd_table_verify);
  add_group_opts(tver, o);
  tver->add_option("--table", o.table_file, "character table file")->required();

  auto* sct = app.add_subcommand("sct", "supercharacter theories")->require_subcommand(1);
  auto* sver = leaf(sct, "verify", "check a theory file", cmd_sct_verify);
  add_group_opts(sver, o);
  add_table_opts(sver, o);
  sver->add_option("--theory", o.theory_file, "theory file (sct/v1)")->required();
  auto* senum = leaf(sct, "enumerate", "list every supercharacter theory", cmd_sct_enumerate);
  add_group_opts(senum, o);
  add_table_opts(senum, o);
  senum->add_option("--max-classes", o.max_classes, "class count cap");
  auto* scompat = leaf(sct, "compat", "compatibility of theories on H and G", cmd_sct_compat);
  add_group_opts(scompat, o);
  add_table_opts(scompat, o);
  scompat->add_option("--subgroup", o.subgroup, "subgroup H")->required();
  scompat->add_option("--theory-h", o.theory_h, "classical, maximal or a theory file");
  scompat->add_option("--theory-g", o.theory_g, "classical, maximal or a theory file");

  auto* sind = leaf(&app, "sind", "superinduce a superclass function", cmd_sind);
  add_group_opts(sind, o);
  add_table_opts(sind, o);
  sind->add_option("--subgroup", o.subgroup, "subgroup H")->required();
  sind->add_option("--theory-h", o.theory_h, "classical, maximal or a theory file");
  sind->add_option("--theory-g", o.theory_g, "classical, maximal or a theory file");
  sind->add_option("--function", o.function_file, "class function on H (classfn/v1); default 1_H");

  auto* family = app.add_subcommand("family", "compatible families")->require_subcommand(1);
  auto* fcheck = leaf(family, "check", "validate a family", cmd_family_check);
  add_group_opts(fcheck, o);
  add_table_opts(fcheck, o);
  fcheck->add_option("--family", o.family, "classical, maximal, mixed or a family file");

  auto* nsys = app.add_subcommand("nsys", "n-systems")->require_subcommand(1);
  auto* nbuild = leaf(nsys, "build", "build an n-system file", cmd_nsys_build);
  add_group_opts(nbuild, o);
  add_table_opts(nbuild, o);
  add_nsys_opts(nbuild, o);
  auto* ntheta = leaf(nsys, "theta", "Theta_H for a subgroup", cmd_nsys_theta);
  add_group_opts(ntheta, o);
  add_table_opts(ntheta, o);
  add_nsys_opts(ntheta, o);
  auto* nver = leaf(nsys, "verify", "run a theorem verifier", cmd_nsys_verify);
  add_group_opts(nver, o);
  add_table_opts(nver, o);
  add_nsys_opts(nver, o);
  nver->add_option("--theorem", o.theorem, "artin-takagi, heilbronn-stark, uvdw or ach3")->required();
  nver->add_option("--certificate", o.certificate_file, "certificate file (uvdw/v1)");
  nver->add_option("--budget", o.budget, "search budget when no certificate is given");

  auto* uvdw = app.add_subcommand("uvdw", "decomposition certificates")->require_subcommand(1);
  auto* ufind = leaf(uvdw, "find", "search for a certificate", cmd_uvdw_find);
  add_group_opts(ufind, o);
  add_table_opts(ufind, o);
  ufind->add_option("--family", o.family, "classical or a family file");
  ufind->add_option("--subgroup", o.subgroup, "subgroup H")->required();
  ufind->add_option("--budget", o.budget, "node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action(o);
  } catch (const CheckFailed& f) {
    if (o.format == "json")
      std::cout << Json{{"schema", "failure/v1"}, {"witness", f.witness}}.dump(2) << "\n";
    else
      std::cout << "FAIL: " << f.text;
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) std::cerr << " [witness " << e.witness() << "]";
    std::cerr << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
