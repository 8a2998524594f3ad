#include "a2d/report.hpp"

#include <sstream>

namespace a2d {

namespace {

// Row-major flat 0/1 array; the shape comes from the surrounding object.
Json matrix_json(const BitMatrix& a) { return Json(a.to_bits()); }

BitMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows * cols) throw InputError("json: bit array has the wrong length");
  std::vector<int> bits;
  for (const Json& v : j) {
    const int bit = v.get<int>();
    if (bit != 0 && bit != 1) throw InputError("json: bit array entries must be 0 or 1");
    bits.push_back(bit);
  }
  return BitMatrix::from_bits(rows, cols, bits);
}

std::string matrix_text(const BitMatrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ",";
      s += a.get(i, j) ? '1' : '0';
    }
    s += "]";
  }
  return s + "]";
}

std::string form_text(const NormalForm& nf) {
  if (nf.trivial == 0 && nf.free == 0) return "0";
  std::string s;
  if (nf.trivial) s += nf.trivial == 1 ? "T" : "T^" + std::to_string(nf.trivial);
  if (nf.free) {
    if (!s.empty()) s += " ⊕ ";
    s += nf.free == 1 ? "F" : "F^" + std::to_string(nf.free);
  }
  return s;
}

std::string morphism_text(const Morphism& g) {
  return form_text(normal_form(g.src())) + " → " + form_text(normal_form(g.dst())) + " " + matrix_text(g.matrix());
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key, T (*parse)(const Json&)) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return parse(j[key]);
}

Json bounds_json(const TransferBounds& b) { return Json{{"steps", b.steps}, {"max_dim", b.max_dim}}; }

TransferBounds bounds_from_json(const Json& j) {
  return {j.at("steps").get<std::size_t>(), j.at("max_dim").get<std::size_t>()};
}

Json witness_json(const Witness& w) {
  Json morphisms = Json::array();
  for (const auto& [name, g] : w.morphisms) morphisms.push_back(Json{{"name", name}, {"morphism", to_json(g)}});
  return Json{{"description", w.description}, {"morphisms", morphisms}};
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.description = j.at("description").get<std::string>();
  for (const Json& m : j.at("morphisms")) {
    w.morphisms.emplace_back(m.at("name").get<std::string>(), morphism_from_json(m.at("morphism")));
  }
  return w;
}

std::string transfer_line(const std::string& name, const TransferResult& r) {
  std::ostringstream s;
  s << "| " << name << " | " << (r.exists ? "exists" : "obstructed") << " | " << r.bounds.steps << " | "
    << r.bounds.max_dim << " | " << r.generators << " | " << r.generated << " |\n";
  return s.str();
}

}  // namespace

Format format_from_string(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "markdown") return Format::Markdown;
  throw InputError("unknown format '" + name + "'");
}

CatalogSummary summarize(const Catalog& cat) {
  CatalogSummary s;
  s.max_dim = cat.max_dim();
  s.role = cat.role();
  s.morphism_count = cat.morphism_count();
  for (std::size_t i = 0; i < cat.object_count(); ++i) s.objects.push_back(cat.normal_form_of(i));
  return s;
}

CofReport cof_report(const Catalog& cat, const std::string& primary, std::size_t llp_dim, std::size_t steps,
                     std::size_t gen_dim) {
  if (cat.role() != Role::Torsor) throw InputError("cof: cofibrations are decided on comodules");
  const std::vector<CofMethod> methods{ClosedForm{}, LlpBounded{llp_dim}, GenerationBounded{steps, gen_dim}};
  CofReport r;
  r.max_dim = cat.max_dim();
  std::size_t p = methods.size();
  for (std::size_t k = 0; k < methods.size(); ++k) {
    r.methods.push_back(method_name(methods[k]));
    if (r.methods.back() == primary) p = k;
  }
  if (p == methods.size()) throw InputError("cof: unknown method '" + primary + "'");
  r.method = primary;
  r.cofibrations.assign(methods.size(), 0);
  r.agree.assign(methods.size(), std::vector<std::uint64_t>(methods.size(), 0));
  r.per_pair.assign(cat.object_count(), std::vector<std::uint64_t>(cat.object_count(), 0));
  CofibrationOracle oracle;
  cat.visit([&](const MorphismId& id, const Morphism& g) {
    ++r.morphisms;
    std::vector<bool> v;
    for (const auto& m : methods) v.push_back(oracle.decide(g, m).verdict);
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (v[a]) ++r.cofibrations[a];
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (v[a] == v[b]) ++r.agree[a][b];
      }
    }
    if (v[p]) {
      ++r.per_pair[id.src][id.dst];
      if (oracle.is_single_pushout(g, std::max(gen_dim, cat.max_dim()))) {
        ++r.single_pushouts;
      } else if (!r.beyond_single_pushout) {
        r.beyond_single_pushout = g;
      }
    }
    if (!r.disagreement && !(v[0] == v[1] && v[1] == v[2])) r.disagreement = g;
    return true;
  });
  return r;
}

Json to_json(const Comodule& m) {
  return Json{{"role", std::string(to_string(m.role()))}, {"dim", m.dim()}, {"d", matrix_json(m.d())}};
}

Json to_json(const Morphism& g) {
  return Json{{"src", to_json(g.src())}, {"dst", to_json(g.dst())}, {"A", matrix_json(g.matrix())}};
}

Comodule comodule_from_json(const Json& j) {
  const std::size_t n = j.at("dim").get<std::size_t>();
  const Role role = j.contains("role") ? role_from_string(j["role"].get<std::string>()) : Role::Torsor;
  return Comodule(n, matrix_from_json(j.at("d"), n, n), role);
}

Morphism morphism_from_json(const Json& j) {
  Comodule src = comodule_from_json(j.at("src"));
  Comodule dst = comodule_from_json(j.at("dst"));
  BitMatrix a = matrix_from_json(j.at("A"), dst.dim(), src.dim());
  return Morphism(std::move(src), std::move(dst), std::move(a));
}

Json to_json(const TransferResult& r) {
  Json j{{"exists", r.exists}, {"bounds", bounds_json(r.bounds)}};
  if (r.exists) j["structure_name"] = r.structure_name;
  if (r.obstruction) j["obstruction"] = to_json(*r.obstruction);
  j["generators"] = r.generators;
  j["generated"] = r.generated;
  return j;
}

TransferResult transfer_result_from_json(const Json& j) {
  TransferResult r;
  r.exists = j.at("exists").get<bool>();
  r.bounds = bounds_from_json(j.at("bounds"));
  if (j.contains("structure_name")) r.structure_name = j["structure_name"].get<std::string>();
  r.obstruction = optional_from<Morphism>(j, "obstruction", &morphism_from_json);
  r.generators = j.at("generators").get<std::uint64_t>();
  r.generated = j.at("generated").get<std::uint64_t>();
  return r;
}

Json to_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"axiom", c.axiom}, {"status", c.passed ? "pass" : "fail"}, {"bound", c.bound}, {"cases", c.cases}};
    if (c.witness) entry["witness"] = witness_json(*c.witness);
    checks.push_back(std::move(entry));
  }
  return Json{{"structure", r.structure},
              {"role", std::string(to_string(r.role))},
              {"bound", r.bound},
              {"all_passed", r.all_passed()},
              {"checks", checks}};
}

AxiomReport axiom_report_from_json(const Json& j) {
  AxiomReport r;
  r.structure = j.at("structure").get<std::string>();
  r.role = role_from_string(j.at("role").get<std::string>());
  r.bound = j.at("bound").get<std::size_t>();
  for (const Json& c : j.at("checks")) {
    AxiomCheck check;
    check.axiom = c.at("axiom").get<std::string>();
    const std::string status = c.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw InputError("json: axiom status must be pass or fail");
    check.passed = status == "pass";
    check.bound = c.at("bound").get<std::size_t>();
    check.cases = c.at("cases").get<std::uint64_t>();
    check.witness = optional_from<Witness>(c, "witness", &witness_from_json);
    r.checks.push_back(std::move(check));
  }
  return r;
}

Json to_json(const CatalogSummary& s) {
  Json objects = Json::array();
  for (const auto& nf : s.objects) {
    objects.push_back(Json{{"trivial", nf.trivial}, {"free", nf.free}, {"dim", nf.trivial + 2 * nf.free}});
  }
  return Json{{"max_dim", s.max_dim},
              {"role", std::string(to_string(s.role))},
              {"object_count", s.objects.size()},
              {"morphism_count", s.morphism_count},
              {"objects", objects}};
}

CatalogSummary catalog_summary_from_json(const Json& j) {
  CatalogSummary s;
  s.max_dim = j.at("max_dim").get<std::size_t>();
  s.role = role_from_string(j.at("role").get<std::string>());
  s.morphism_count = j.at("morphism_count").get<std::uint64_t>();
  for (const Json& o : j.at("objects")) {
    s.objects.push_back({o.at("trivial").get<std::size_t>(), o.at("free").get<std::size_t>()});
  }
  return s;
}

Json to_json(const CofReport& r) {
  return Json{{"max_dim", r.max_dim},
              {"method", r.method},
              {"methods", r.methods},
              {"morphisms", r.morphisms},
              {"cofibrations", r.cofibrations},
              {"agreement", r.agree},
              {"cofibrations_per_pair", r.per_pair},
              {"all_agree", r.all_agree()},
              {"disagreement", r.disagreement ? to_json(*r.disagreement) : Json(nullptr)},
              {"single_pushouts", r.single_pushouts},
              {"beyond_single_pushout",
               r.beyond_single_pushout ? to_json(*r.beyond_single_pushout) : Json(nullptr)}};
}

CofReport cof_report_from_json(const Json& j) {
  CofReport r;
  r.max_dim = j.at("max_dim").get<std::size_t>();
  r.method = j.at("method").get<std::string>();
  r.methods = j.at("methods").get<std::vector<std::string>>();
  r.morphisms = j.at("morphisms").get<std::uint64_t>();
  r.cofibrations = j.at("cofibrations").get<std::vector<std::uint64_t>>();
  r.agree = j.at("agreement").get<std::vector<std::vector<std::uint64_t>>>();
  r.per_pair = j.at("cofibrations_per_pair").get<std::vector<std::vector<std::uint64_t>>>();
  r.disagreement = optional_from<Morphism>(j, "disagreement", &morphism_from_json);
  r.single_pushouts = j.at("single_pushouts").get<std::uint64_t>();
  r.beyond_single_pushout = optional_from<Morphism>(j, "beyond_single_pushout", &morphism_from_json);
  return r;
}

Json to_json(const DescentReport& r) {
  const auto& a = r.a_neq_b;
  const auto& j = r.j_defined_equal;
  return Json{
      {"catalog_bound", r.catalog_bound},
      {"comparison_bound", r.comparison_bound},
      {"transfer_bounds", bounds_json(r.transfer_bounds)},
      {"structures", Json{{"first", r.first}, {"second", r.second}}},
      {"a_neq_b", Json{{"verdict", a.verdict},
                       {"predicate", a.predicate},
                       {"witness", a.witness ? to_json(*a.witness) : Json(nullptr)},
                       {"witness_in_first", a.witness_in_first},
                       {"witness_in_second", a.witness_in_second},
                       {"witness_invertible", a.witness_invertible}}},
      {"i_defined", Json{{"a", to_json(r.i_defined.a)}, {"b", to_json(r.i_defined.b)}}},
      {"i_equal", r.i_equal},
      {"i_discrete", r.i_discrete},
      {"j_defined_equal", Json{{"j1", to_json(j.j1)},
                               {"j2", to_json(j.j2)},
                               {"units_agree", j.units_agree},
                               {"equal", j.equal},
                               {"discrete", j.discrete}}},
      {"conclusion", r.conclusion},
  };
}

DescentReport descent_report_from_json(const Json& j) {
  DescentReport r;
  r.catalog_bound = j.at("catalog_bound").get<std::size_t>();
  r.comparison_bound = j.at("comparison_bound").get<std::size_t>();
  r.transfer_bounds = bounds_from_json(j.at("transfer_bounds"));
  r.first = j.at("structures").at("first").get<std::string>();
  r.second = j.at("structures").at("second").get<std::string>();
  const Json& a = j.at("a_neq_b");
  r.a_neq_b.verdict = a.at("verdict").get<bool>();
  r.a_neq_b.predicate = a.at("predicate").get<std::string>();
  r.a_neq_b.witness = optional_from<Morphism>(a, "witness", &morphism_from_json);
  r.a_neq_b.witness_in_first = a.at("witness_in_first").get<bool>();
  r.a_neq_b.witness_in_second = a.at("witness_in_second").get<bool>();
  r.a_neq_b.witness_invertible = a.at("witness_invertible").get<bool>();
  r.i_defined.a = transfer_result_from_json(j.at("i_defined").at("a"));
  r.i_defined.b = transfer_result_from_json(j.at("i_defined").at("b"));
  r.i_equal = j.at("i_equal").get<bool>();
  r.i_discrete = j.at("i_discrete").get<bool>();
  const Json& jj = j.at("j_defined_equal");
  r.j_defined_equal.j1 = transfer_result_from_json(jj.at("j1"));
  r.j_defined_equal.j2 = transfer_result_from_json(jj.at("j2"));
  r.j_defined_equal.units_agree = jj.at("units_agree").get<bool>();
  r.j_defined_equal.equal = jj.at("equal").get<bool>();
  r.j_defined_equal.discrete = jj.at("discrete").get<bool>();
  r.conclusion = j.at("conclusion").get<std::string>();
  return r;
}

std::string render(const CatalogSummary& s, Format format) {
  if (format == Format::Json) return dump(to_json(s));
  std::ostringstream o;
  o << "# Catalog (" << to_string(s.role) << ", dim ≤ " << s.max_dim << ")\n\n";
  o << s.objects.size() << " objects, " << s.morphism_count << " morphisms\n\n";
  o << "| # | normal form | dim |\n|---|---|---|\n";
  for (std::size_t i = 0; i < s.objects.size(); ++i) {
    o << "| " << i << " | " << form_text(s.objects[i]) << " | " << s.objects[i].trivial + 2 * s.objects[i].free
      << " |\n";
  }
  return o.str();
}

std::string render(const AxiomReport& r, Format format) {
  if (format == Format::Json) return dump(to_json(r));
  std::ostringstream o;
  o << "# Axioms for " << r.structure << " (" << to_string(r.role) << ", dim ≤ " << r.bound << ")\n\n";
  o << "| axiom | verdict | cases |\n|---|---|---|\n";
  for (const auto& c : r.checks) o << "| " << c.axiom << " | " << (c.passed ? "pass" : "FAIL") << " | " << c.cases << " |\n";
  for (const auto& c : r.checks) {
    if (!c.witness) continue;
    o << "\n" << c.axiom << ": " << c.witness->description << "\n";
    for (const auto& [name, g] : c.witness->morphisms) o << "- " << name << ": " << morphism_text(g) << "\n";
  }
  return o.str();
}

std::string render(const CofReport& r, Format format) {
  if (format == Format::Json) return dump(to_json(r));
  std::ostringstream o;
  o << "# Cofibrations on catalog(" << r.max_dim << "), " << r.morphisms << " morphisms\n\n";
  o << "| method | cofibrations |\n|---|---|\n";
  for (std::size_t k = 0; k < r.methods.size(); ++k) o << "| " << r.methods[k] << " | " << r.cofibrations[k] << " |\n";
  o << "\nAgreement\n\n|   |";
  for (const auto& m : r.methods) o << " " << m << " |";
  o << "\n|---|";
  for (std::size_t k = 0; k < r.methods.size(); ++k) o << "---|";
  o << "\n";
  for (std::size_t a = 0; a < r.methods.size(); ++a) {
    o << "| " << r.methods[a] << " |";
    for (std::size_t b = 0; b < r.methods.size(); ++b) o << " " << r.agree[a][b] << " |";
    o << "\n";
  }
  if (r.disagreement) o << "\nDisagreement: " << morphism_text(*r.disagreement) << "\n";
  o << "\nCofibrations by " << r.method << " that are a single pushout of a map between x-trivial objects: "
    << r.single_pushouts;
  if (r.beyond_single_pushout) o << "; first that is not: " << morphism_text(*r.beyond_single_pushout);
  o << "\n";
  return o.str();
}

std::string render(const DescentReport& r, Format format) {
  if (format == Format::Json) return dump(to_json(r));
  std::ostringstream o;
  o << "# Descent check, catalog bound " << r.catalog_bound << " (cover and overlap sites: " << r.comparison_bound
    << ")\n\n";
  o << "| claim | verdict |\n|---|---|\n";
  o << "| " << r.first << " ≠ " << r.second << " | " << yes_no(r.a_neq_b.verdict) << " |\n";
  o << "| i(" << r.first << ") defined | " << yes_no(r.i_defined.a.exists) << " |\n";
  o << "| i(" << r.second << ") defined | " << yes_no(r.i_defined.b.exists) << " |\n";
  o << "| i(" << r.first << ") = i(" << r.second << ") | " << yes_no(r.i_equal) << " |\n";
  o << "| both discrete on vector spaces | " << yes_no(r.i_discrete) << " |\n";
  o << "| j1, j2 defined | " << yes_no(r.j_defined_equal.j1.exists && r.j_defined_equal.j2.exists) << " |\n";
  o << "| j1 = j2 | " << yes_no(r.j_defined_equal.equal) << " |\n";
  o << "| discrete on modules | " << yes_no(r.j_defined_equal.discrete) << " |\n";
  if (r.a_neq_b.witness) {
    o << "\nWitness (" << r.a_neq_b.predicate << "): " << morphism_text(*r.a_neq_b.witness) << "\n";
  }
  o << "\n| transfer | verdict | steps | dim | generators | composites |\n|---|---|---|---|---|---|\n";
  o << transfer_line("i(" + r.first + ")", r.i_defined.a) << transfer_line("i(" + r.second + ")", r.i_defined.b)
    << transfer_line("j1", r.j_defined_equal.j1) << transfer_line("j2", r.j_defined_equal.j2);
  for (const auto* t : {&r.i_defined.a, &r.i_defined.b, &r.j_defined_equal.j1, &r.j_defined_equal.j2}) {
    if (t->obstruction) o << "\nObstruction: " << morphism_text(*t->obstruction) << "\n";
  }
  o << "\n**" << r.conclusion << "**\n";
  return o.str();
}

}  // namespace a2d
