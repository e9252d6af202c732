#include "eta/json_io.hpp"

#include <fstream>
#include <sstream>

#include "eta/builtins.hpp"
#include "eta/coset_enum.hpp"
#include "eta/error.hpp"
#include "eta/presentation.hpp"

namespace eta {

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    const auto pos = what.find("parse error");
    throw ParseError("malformed JSON (" + (pos == std::string::npos ? what : what.substr(pos)) + ")", line, column);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

void check_schema(const Json& spec) {
  if (spec.is_object() && spec.contains("schema") && spec["schema"] != kSchemaVersion) {
    throw ParseError("unsupported schema version " + spec["schema"].dump());
  }
}

template <class T>
T field(const Json& spec, const char* key) {
  if (!spec.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return spec[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

FiniteGroup group_from_presentation(const std::string& text, const std::string& name, std::size_t max_cosets) {
  const Presentation p = parse_presentation(text);
  const CosetTable table = todd_coxeter(p, {}, max_cosets);
  if (!table.complete()) {
    throw CapacityError("presentation did not enumerate within " + std::to_string(max_cosets) + " cosets",
                        table.cosets_defined());
  }
  const RegularRepresentation rep = regular_representation(table);
  return FiniteGroup::from_perm_group(name, rep.group);
}

FiniteGroup group_from_json(const Json& spec, std::size_t max_cosets) {
  if (spec.is_string()) return builtin_group(spec.get<std::string>());
  if (!spec.is_object()) throw ParseError("group spec must be an object or a builtin name");
  check_schema(spec);
  const std::string name = spec.contains("name") ? field<std::string>(spec, "name") : "G";
  if (spec.contains("builtin")) return builtin_group(field<std::string>(spec, "builtin"));
  if (spec.contains("table")) {
    auto table = field<std::vector<std::vector<Element>>>(spec, "table");
    std::vector<std::string> names;
    if (spec.contains("elements")) {
      names = field<std::vector<std::string>>(spec, "elements");
    } else {
      for (std::size_t i = 0; i < table.size(); ++i) names.push_back(std::to_string(i));
    }
    return FiniteGroup(name, std::move(names), std::move(table));
  }
  if (spec.contains("generators")) {
    const auto degree = field<std::size_t>(spec, "degree");
    std::vector<Perm> gens;
    for (const auto& images : field<std::vector<std::vector<Point>>>(spec, "generators")) {
      if (images.size() != degree) throw ParseError("generator length differs from degree");
      gens.emplace_back(images);
    }
    return FiniteGroup::from_perm_group(name, PermGroup(degree, std::move(gens)));
  }
  if (spec.contains("presentation")) {
    return group_from_presentation(field<std::string>(spec, "presentation"), name, max_cosets);
  }
  throw ParseError("group spec needs one of builtin, table, generators, presentation");
}

ActionPair pair_from_json(const Json& spec, std::size_t max_cosets) {
  if (!spec.is_object()) throw ParseError("pair spec must be an object");
  check_schema(spec);
  if (!spec.contains("G") || !spec.contains("H")) throw ParseError("pair spec needs G and H");
  const FiniteGroup G = group_from_json(spec["G"], max_cosets);
  const FiniteGroup H = group_from_json(spec["H"], max_cosets);
  ActionPair pair;
  if (spec.contains("actions")) {
    const auto kind = field<std::string>(spec, "actions");
    if (kind == "trivial") {
      pair = trivial_pair(G, H);
    } else if (kind == "conjugation") {
      if (!(G.table_rows() == H.table_rows())) throw InvalidAction("conjugation actions need G = H");
      pair = conjugation_pair(G);
      pair.H = H;
    } else {
      throw ParseError("unknown actions kind '" + kind + "'");
    }
  } else {
    pair = {"", G, H, ActionTable::from_rows(field<std::vector<std::vector<Element>>>(spec, "H_on_G")),
            ActionTable::from_rows(field<std::vector<std::vector<Element>>>(spec, "G_on_H"))};
  }
  pair.name = spec.contains("name") ? field<std::string>(spec, "name") : G.name() + "," + H.name();
  return pair;
}

std::vector<Instance> corpus_from_json(const Json& spec, std::size_t max_cosets) {
  check_schema(spec);
  if (!spec.is_object() || !spec.contains("instances") || !spec["instances"].is_array()) {
    throw ParseError("corpus needs an 'instances' array");
  }
  std::vector<Instance> out;
  for (const Json& item : spec["instances"]) {
    if (item.contains("nu")) {
      const FiniteGroup G = group_from_json(item["nu"], max_cosets);
      Instance inst{"nu(" + G.name() + ")", conjugation_pair(G), true, false};
      if (item.contains("name")) inst.name = item["name"].get<std::string>();
      out.push_back(std::move(inst));
    } else if (item.contains("pair")) {
      ActionPair p = pair_from_json(item["pair"], max_cosets);
      Instance inst{p.name, p, false, item.value("expect_incompatible", false)};
      out.push_back(std::move(inst));
    } else {
      throw ParseError("corpus instance needs 'nu' or 'pair'");
    }
  }
  return out;
}

Json group_to_json(const FiniteGroup& G) {
  Json j;
  j["name"] = G.name();
  j["elements"] = G.element_names();
  j["table"] = G.table_rows();
  return j;
}

Json pair_to_json(const ActionPair& pair) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["name"] = pair.name;
  j["G"] = group_to_json(pair.G);
  j["H"] = group_to_json(pair.H);
  j["H_on_G"] = pair.on_G.rows();
  j["G_on_H"] = pair.on_H.rows();
  return j;
}

Json group_summary_json(const FiniteGroup& G) {
  Json j;
  j["name"] = G.name();
  j["order"] = G.order();
  return j;
}

Json pair_summary_json(const ActionPair& pair) {
  Json j;
  j["name"] = pair.name;
  j["G"] = group_summary_json(pair.G);
  j["H"] = group_summary_json(pair.H);
  j["actions"] = both_actions_trivial(pair) ? "trivial" : "given";
  return j;
}

Json check_report_json(const CheckReport& report) {
  Json j = Json::object();
  for (const Check& c : report.checks) {
    Json e;
    e["passed"] = c.passed;
    if (!c.detail.empty()) e["detail"] = c.detail;
    j[c.name] = e;
  }
  return j;
}

Json invariants_json(const AbelianInvariants& a) { return Json(a.factors()); }

Json tensor_report(const EtaGroup& E) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "tensor";
  j["input"] = pair_summary_json(E.pair());
  j["compatible"] = true;
  j["eta_order"] = E.order();
  j["tensor_order"] = E.tensor_subgroup().order();
  const bool abelian = derived_subgroup(E.tensor_subgroup()).is_trivial();
  j["tensor_abelian"] = abelian;
  j[abelian ? "tensor_invariants" : "tensor_abelianization"] = invariants_json(abelian_invariants_of(E.tensor_subgroup()));
  const std::vector<Element> all_G = E.pair().G.all_elements(), all_H = E.pair().H.all_elements();
  j["tensor_set_size"] = tensor_set(E, all_G, all_H).size();
  j["cosets_defined"] = E.cosets_defined();
  if (both_actions_trivial(E.pair())) {
    j["trivial_action_baseline"] = invariants_json(trivial_action_baseline(E.pair().G, E.pair().H));
  }
  const CheckReport dec = check_decomposition(E);
  j["decomposition"] = check_report_json(dec);
  j["all_passed"] = dec.passed();
  return j;
}

Json nu_report(const NuGroup& N) {
  const EtaGroup& E = N.eta();
  const PermGroup& T = E.tensor_subgroup();
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = "nu";
  j["input"] = group_summary_json(N.group());
  j["nu_order"] = E.order();
  j["tensor_square_order"] = T.order();
  const bool abelian = derived_subgroup(T).is_trivial();
  j["tensor_square_abelian"] = abelian;
  j[abelian ? "tensor_square_invariants" : "tensor_square_abelianization"] = invariants_json(abelian_invariants_of(T));
  j["delta_order"] = N.delta().order();
  j["delta_invariants"] = invariants_json(abelian_invariants_of(N.delta()));
  j["mu_order"] = N.mu().order();
  j["derived_order"] = N.derived_elements().size();
  const PiReport pi = periodicity_and_pi(N);
  j["pi"] = {{"G", pi.pi_G}, {"tensor_square", pi.pi_tensor}, {"delta", pi.pi_delta}};
  j["abelianization"] = invariants_json(pi.abelianization);
  j["delta_abelianization_formula"] = invariants_json(pi.delta_formula);
  j["cosets_defined"] = E.cosets_defined();
  const CheckReport dec = check_decomposition(E);
  const CheckReport der = check_nu_derived_decomposition(N);
  Json checks;
  checks["decomposition"] = check_report_json(dec);
  checks["quotient"] = check_report_json(N.construction_checks());
  checks["derived"] = check_report_json(der);
  checks["pi"] = check_report_json(pi.checks);
  j["checks"] = checks;
  j["all_passed"] = dec.passed() && der.passed() && N.construction_checks().passed() && pi.checks.passed();
  return j;
}

}  // namespace eta
