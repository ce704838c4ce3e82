#include "apolar/serialize.hpp"

#include "apolar/error.hpp"

namespace apolar {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError(0, "JSON schema: " + what);
}

long as_count(const Json& j, const std::string& what) {
  require(j.is_number_integer(), what + " must be an integer");
  const long v = j.get<long>();
  require(v >= 0, what + " must be nonnegative");
  return v;
}

}  // namespace

Json betti_to_json(const BettiTable& b, int s) {
  Json entries = Json::array();
  for (const auto& [ij, v] : b.entries()) entries.push_back({ij.first, ij.second, v});
  return Json{{"n", b.nvars()}, {"s", s}, {"entries", entries}};
}

BettiTable betti_from_json(const Json& j, int* s) {
  require(j.is_object(), "Betti table must be an object");
  require(j.contains("n") && j.contains("s") && j.contains("entries"),
          "Betti table needs n, s and entries");
  const long n = as_count(j.at("n"), "n");
  const long socle = as_count(j.at("s"), "s");
  require(j.at("entries").is_array(), "entries must be an array");
  BettiTable b(static_cast<int>(n));
  for (const auto& e : j.at("entries")) {
    require(e.is_array() && e.size() == 3, "each entry is [i, j, b]");
    const long i = as_count(e[0], "i");
    const long jj = as_count(e[1], "j");
    const long v = as_count(e[2], "b");
    require(i <= n, "homological degree exceeds n");
    require(b.get(static_cast<int>(i), static_cast<int>(jj)) == 0, "duplicate entry");
    b.set(static_cast<int>(i), static_cast<int>(jj), v);
  }
  if (s) *s = static_cast<int>(socle);
  return b;
}

Json to_json(const HVector& h) { return Json(h.values); }

HVector hvector_from_json(const Json& j) {
  require(j.is_array(), "H-vector must be an array");
  HVector h;
  for (const auto& v : j) h.values.push_back(as_count(v, "H-vector entry"));
  return h;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  require(j.is_array(), "partition must be an array");
  std::vector<long> parts;
  for (const auto& v : j) {
    parts.push_back(as_count(v, "partition part"));
    require(parts.back() > 0, "partition parts must be positive");
  }
  return Partition(std::move(parts));
}

Json to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  require(j.is_string(), "rational must be a string");
  Rational q;
  const auto text = j.get<std::string>();
  require(q.set_str(text, 10) == 0, "bad rational '" + text + "'");
  require(q.get_den() != 0, "zero denominator");
  q.canonicalize();
  return q;
}

Json to_json(const LinearForm& l) {
  Json out = Json::array();
  for (const auto& q : l.coefficients) out.push_back(to_json(q));
  return out;
}

LinearForm linear_form_from_json(const Json& j) {
  require(j.is_array(), "linear form must be an array");
  LinearForm l;
  for (const auto& v : j) l.coefficients.push_back(rational_from_json(v));
  return l;
}

Json to_json(const CIReport& r) {
  Json cases = Json::array();
  for (std::size_t k = 0; k < r.degrees.size(); ++k) {
    cases.push_back({{"degrees", r.degrees[k].degrees},
                     {"hvector", to_json(r.hvectors[k])},
                     {"betti", betti_to_json(r.tables[k], r.s)}});
  }
  return Json{{"n", r.n}, {"s", r.s}, {"complete_intersections", cases}};
}

Json to_json(const EquigeneratedReport& r) {
  Json sols = Json::array();
  for (std::size_t k = 0; k < r.quadric_solutions.size(); ++k) {
    const auto& x = r.quadric_solutions[k];
    Json sol{{"k", x[0]}, {"a", x[1]}, {"b", x[2]}, {"e", x[3]}};
    sol["excluded"] = !r.quadric_exclusions[k].empty();
    if (!r.quadric_exclusions[k].empty()) sol["reason"] = r.quadric_exclusions[k];
    sols.push_back(sol);
  }
  Json quadric{{"unknowns", r.unknowns}, {"solutions", sols}};
  if (r.excluded_ci) {
    quadric["excluded_ci"] = {{"degrees", r.excluded_ci->degrees},
                              {"socle_degree", r.excluded_ci->socle_degree()},
                              {"betti", betti_to_json(*r.excluded_ci_table,
                                                      r.excluded_ci->socle_degree())}};
  }
  Json cubic{{"d", r.d}, {"e", r.e}, {"hvector", to_json(r.hvector)}};
  cubic["betti"] = r.table ? betti_to_json(*r.table, 5) : Json(nullptr);
  return Json{{"n", 4}, {"s", 5}, {"bound", r.bound}, {"quadric", quadric}, {"cubic", cubic}};
}

Json to_json(const K4Report& r) {
  Json log = Json::array();
  for (const auto& entry : r.log) {
    const auto& info = k4_constraints()[static_cast<std::size_t>(entry.constraint)];
    Json item{{"constraint", info.name},
              {"statement", info.statement},
              {"enabled", entry.enabled},
              {"eliminated", entry.eliminated}};
    item["first"] = entry.first ? Json(std::vector<long>{entry.first->b, entry.first->c,
                                                         entry.first->d, entry.first->e,
                                                         entry.first->f})
                                : Json(nullptr);
    log.push_back(item);
  }
  Json survivors = Json::array();
  for (const auto& t : r.survivors) survivors.push_back({t.b, t.c, t.d, t.e, t.f});
  Json out{{"hvector", {1, 4, 4, 4, 4, 1}},
           {"unknowns", {"b", "c", "d", "e", "f"}},
           {"bound", r.bound},
           {"examined", r.examined},
           {"log", log},
           {"survivors", survivors}};
  if (r.survivors.size() == 1) out["betti"] = betti_to_json(k4_table(r.survivors.front()), 5);
  return out;
}

Json to_json(const TablesReport& r, const std::vector<ConjecturedTable>& tables) {
  const int s = static_cast<int>(r.expected.size()) - 1;
  Json items = Json::array();
  for (std::size_t k = 0; k < r.checks.size(); ++k) {
    const auto& c = r.checks[k];
    items.push_back({{"label", c.label},
                     {"symmetric", c.symmetric},
                     {"hvector", c.hvector ? to_json(*c.hvector) : Json(nullptr)},
                     {"hilbert_consistent", c.hilbert_consistent},
                     {"betti", betti_to_json(tables[k].table, s)}});
  }
  Json hasse = Json::array();
  for (const auto& [a, b] : r.hasse) hasse.push_back({r.checks[a].label, r.checks[b].label});
  return Json{{"expected_hvector", to_json(r.expected)},
              {"tables", items},
              {"poset",
               {{"reflexive", r.reflexive},
                {"antisymmetric", r.antisymmetric},
                {"transitive", r.transitive},
                {"covering_relations", hasse}}}};
}

}  // namespace apolar
