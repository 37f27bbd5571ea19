#include "superchar/io.hpp"

#include <fstream>

namespace superchar {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

void expect_schema(const Json& j, const char* schema) {
  if (!j.is_object()) bad(std::string("expected a JSON object for ") + schema);
  if (j.contains("schema") && j["schema"] != schema)
    bad(std::string("schema is ") + j["schema"].dump() + ", expected \"" + schema + "\"");
}

const Json& field(const Json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j[key];
}

Json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.dump());
    return v;
  }
  bad("not an integer: " + j.dump());
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) bad("partition must be a list of lists");
  Partition p;
  for (const auto& block : j) {
    if (!block.is_array()) bad("partition block must be a list");
    std::vector<int> b;
    for (const auto& x : block) {
      if (!x.is_number_integer()) bad("partition entry must be an integer");
      b.push_back(x.get<int>());
    }
    p.push_back(std::move(b));
  }
  return p;
}

std::vector<int> ints(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be a list of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad(std::string(what) + " must be a list of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(Json::array({big_to_json(q.get_num()), big_to_json(q.get_den())}));
  return Json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_number_integer()) return Cyclotomic(j.get<long>());
  if (!j.is_object()) bad("cyclotomic value must be an integer or {\"order\", \"coeffs\"}");
  const int e = field(j, "order").get<int>();
  if (e < 1) bad("cyclotomic order must be positive");
  const auto& cs = field(j, "coeffs");
  if (!cs.is_array()) bad("coeffs must be a list");
  Cyclotomic out;
  long k = 0;
  for (const auto& pair : cs) {
    BigRational q;
    if (pair.is_array() && pair.size() == 2) {
      const BigInt den = big_from_json(pair[1]);
      if (den == 0) bad("zero denominator");
      q = BigRational(big_from_json(pair[0]), den);
      q.canonicalize();
    } else {
      q = BigRational(big_from_json(pair));
    }
    if (q != 0) out += scale(q, Cyclotomic::zeta(e, k));
    ++k;
  }
  if (k > euler_phi(e)) bad("too many coefficients for order " + std::to_string(e));
  return out.order() == e ? out : out.lifted(e);
}

Json group_to_json(const FiniteGroup& g) {
  return Json{{"schema", "group/v1"}, {"name", g.name()}, {"cayley", g.cayley_table()}};
}

GroupPtr group_from_json(const Json& j, int max_order) {
  expect_schema(j, "group/v1");
  const std::string name = j.value("name", std::string("G"));
  GroupPtr g;
  if (j.contains("cayley")) {
    const auto& t = j["cayley"];
    if (!t.is_array()) bad("cayley must be a square table");
    if (static_cast<int>(t.size()) > max_order)
      throw Error(ErrorCode::OrderCapExceeded,
                  "order " + std::to_string(t.size()) + " exceeds the cap " + std::to_string(max_order));
    std::vector<std::vector<int>> rows;
    for (const auto& r : t) rows.push_back(ints(r, "cayley row"));
    g = group_from_cayley(rows, name);
  } else if (j.contains("degree")) {
    const int degree = field(j, "degree").get<int>();
    std::vector<std::vector<int>> gens;
    if (j.contains("generators"))
      for (const auto& p : j["generators"]) gens.push_back(ints(p, "generator"));
    g = group_from_permutations(degree, std::move(gens), name, std::max(max_order, 1));
  } else {
    bad("group needs \"cayley\" or \"degree\"");
  }
  if (g->order() > max_order)
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(g->order()) + " exceeds the cap " + std::to_string(max_order));
  return g;
}

Json table_to_json(const CharacterTable& t) {
  const auto& cc = t.classes();
  Json reps = Json::array(), sizes = Json::array(), rows = Json::array();
  for (std::size_t c = 0; c < cc.count(); ++c) {
    reps.push_back(cc.representative(c));
    sizes.push_back(cc.size_of(c));
  }
  for (const auto& r : t.rows()) {
    Json row = Json::array();
    for (const auto& v : r.values()) row.push_back(cyclotomic_to_json(v));
    rows.push_back(std::move(row));
  }
  return Json{{"schema", "chartable/v1"}, {"group", t.group()->name()}, {"fingerprint", t.fingerprint()},
              {"class_reps", reps},       {"class_sizes", sizes},         {"rows", rows}};
}

std::vector<ClassFunction> table_rows_from_json(const Json& j, const GroupPtr& g) {
  expect_schema(j, "chartable/v1");
  const auto& cc = g->classes();
  const auto reps = ints(field(j, "class_reps"), "class_reps");
  const auto sizes = ints(field(j, "class_sizes"), "class_sizes");
  if (reps.size() != cc.count() || sizes.size() != cc.count())
    bad("table lists " + std::to_string(reps.size()) + " classes, group has " + std::to_string(cc.count()));
  for (std::size_t c = 0; c < cc.count(); ++c) {
    if (reps[c] < 0 || reps[c] >= g->order() || g->class_of(reps[c]) != static_cast<int>(c))
      bad("class_reps[" + std::to_string(c) + "] is not in conjugacy class " + std::to_string(c));
    if (sizes[c] != cc.size_of(c)) bad("class_sizes[" + std::to_string(c) + "] is wrong");
  }
  std::vector<ClassFunction> rows;
  for (const auto& r : field(j, "rows")) {
    std::vector<Cyclotomic> vals;
    for (const auto& v : r) vals.push_back(cyclotomic_from_json(v));
    if (vals.size() != cc.count()) bad("table row has the wrong length");
    rows.emplace_back(g, std::move(vals));
  }
  return rows;
}

TablePtr table_from_json(const Json& j, const GroupPtr& g) { return accept_table(g, table_rows_from_json(j, g)); }

Json theory_to_json(const SupercharacterTheory& t) {
  return Json{{"schema", "sct/v1"},
              {"group", t.group()->name()},
              {"table_fingerprint", t.table()->fingerprint()},
              {"irr_partition", t.irr_partition()},
              {"class_partition", t.class_partition()}};
}

TheoryPtr theory_from_json(const Json& j, const TablePtr& t) {
  expect_schema(j, "sct/v1");
  if (j.contains("table_fingerprint") && j["table_fingerprint"] != t->fingerprint())
    bad("table fingerprint " + j["table_fingerprint"].dump() + " does not match " + t->fingerprint());
  auto irr = partition_from_json(field(j, "irr_partition"));
  if (j.contains("element_partition"))
    return make_theory_from_elements(t, std::move(irr), partition_from_json(j["element_partition"]));
  return make_theory(t, std::move(irr), partition_from_json(field(j, "class_partition")));
}

Json family_to_json(const CompatibleFamily& f) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& th = *f.theory(i);
    entries.push_back(Json{{"subgroup", f.subgroup(i).elements()},
                           {"theory", Json{{"irr_partition", th.irr_partition()},
                                           {"class_partition", th.class_partition()}}}});
  }
  return Json{{"schema", "family/v1"}, {"group", f.top()->name()}, {"entries", entries}};
}

FamilyPtr family_from_json(const Json& j, const GroupPtr& g, const DixonOptions& dixon) {
  expect_schema(j, "family/v1");
  std::vector<Subgroup> subs;
  std::vector<TheoryPtr> theories;
  for (const auto& e : field(j, "entries")) {
    Subgroup h = make_subgroup(g, ints(field(e, "subgroup"), "subgroup"));
    auto table = dixon_character_table(h.local(), dixon);
    const auto& spec = field(e, "theory");
    TheoryPtr th;
    if (spec == "classical")
      th = classical_theory(table);
    else if (spec == "maximal")
      th = maximal_theory(table);
    else if (spec.is_object())
      th = make_theory(table, partition_from_json(field(spec, "irr_partition")),
                       partition_from_json(field(spec, "class_partition")));
    else
      bad("theory must be \"classical\", \"maximal\" or an object with partitions");
    subs.push_back(std::move(h));
    theories.push_back(std::move(th));
  }
  return make_family(g, std::move(subs), std::move(theories));
}

Json nsys_to_json(const NSystem& n, const std::string& family_ref) {
  Json base = Json::object();
  for (std::size_t x = 0; x < n.base().size(); ++x) base["X" + std::to_string(x)] = big_to_json(n.base()[x]);
  return Json{{"schema", "nsys/v1"},
              {"group", n.family()->top()->name()},
              {"table_fingerprint", n.family()->top_theory()->table()->fingerprint()},
              {"family_ref", family_ref},
              {"base", base}};
}

std::vector<BigInt> base_from_json(const Json& j, std::size_t blocks) {
  const Json& b = j.contains("base") ? j["base"] : j;
  if (!b.is_object()) bad("base must be an object {\"X0\": int, ...}");
  std::vector<BigInt> out(blocks, 0);
  for (const auto& [key, value] : b.items()) {
    if (key.size() < 2 || key[0] != 'X') bad("base key " + key + " is not a block id");
    std::size_t x = 0;
    try {
      x = std::stoul(key.substr(1));
    } catch (const std::exception&) {
      bad("base key " + key + " is not a block id");
    }
    if (x >= blocks) bad("base key " + key + " exceeds the block count " + std::to_string(blocks));
    out[x] = big_from_json(value);
  }
  return out;
}

Json certificate_to_json(const DecompositionCertificate& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms) terms.push_back(Json{{"Hi", t.subgroup.elements()}, {"sigma_blocks", t.sigma_blocks}});
  return Json{{"schema", "uvdw/v1"}, {"H", c.h.elements()}, {"terms", terms}};
}

DecompositionCertificate certificate_from_json(const Json& j, const GroupPtr& g) {
  expect_schema(j, "uvdw/v1");
  DecompositionCertificate c{make_subgroup(g, ints(field(j, "H"), "H")), {}};
  for (const auto& t : field(j, "terms"))
    c.terms.push_back({make_subgroup(g, ints(field(t, "Hi"), "Hi")), ints(field(t, "sigma_blocks"), "sigma_blocks")});
  return c;
}

Json class_function_to_json(const ClassFunction& f) {
  Json vals = Json::array();
  for (const auto& v : f.values()) vals.push_back(cyclotomic_to_json(v));
  return Json{{"schema", "classfn/v1"}, {"group", f.group()->name()}, {"values", vals}};
}

ClassFunction class_function_from_json(const Json& j, const GroupPtr& g) {
  expect_schema(j, "classfn/v1");
  std::vector<Cyclotomic> vals;
  for (const auto& v : field(j, "values")) vals.push_back(cyclotomic_from_json(v));
  if (vals.size() != g->class_count())
    bad("class function has " + std::to_string(vals.size()) + " values for " + std::to_string(g->class_count()) +
        " classes");
  return ClassFunction(g, std::move(vals));
}

Json report_to_json(const Report& r) {
  Json viol = Json::array();
  for (const auto& v : r.violations) viol.push_back(Json{{"location", v.location}, {"detail", v.detail}});
  return Json{{"check", r.check}, {"passed", r.passed}, {"steps", r.steps}, {"violations", viol},
              {"warnings", r.warnings}};
}

}  // namespace superchar
