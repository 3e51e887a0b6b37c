#include "serev/json_io.hpp"

#include <algorithm>
#include <map>

#include "serev/errors.hpp"
#include "serev/parser.hpp"
#include "serev/semantics.hpp"
#include "serev/selection.hpp"

namespace serev {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing JSON member '") + key + "'");
  return j.at(key);
}

Json pair_json(const Alphabet& a, SEInterpretation p) {
  return Json{{"here", atoms_json(a, p.here)}, {"there", atoms_json(a, p.there)}};
}

SEInterpretation pair_from_json(const Json& j, const Alphabet& a) {
  SEInterpretation p{atoms_from_json(member(j, "here"), a), atoms_from_json(member(j, "there"), a)};
  if (!p.valid()) throw Error("SE interpretation with here not contained in there");
  return p;
}

std::vector<std::uint32_t> rank_table(const Json& ranks, const Alphabet& a) {
  if (!ranks.is_object()) throw Error("'ranks' must be an object");
  const std::size_t count = interpretation_count(a.size());
  std::vector<std::optional<std::uint32_t>> given(count);
  std::uint32_t top = 0;
  for (const auto& [key, value] : ranks.items()) {
    const Interpretation i = a.parse_set(key);
    if (!value.is_number_unsigned()) throw Error("rank of " + key + " is not a non-negative integer");
    given[i.bits] = value.get<std::uint32_t>();
    top = std::max(top, *given[i.bits]);
  }
  std::vector<std::uint32_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = given[i].value_or(top + 1);
  return out;
}

PropOperator named_prop_operator(const std::string& name) {
  if (name == "dalal") return PropOperator::dalal();
  if (name == "drastic") return PropOperator::drastic();
  throw Error("unknown propositional operator '" + name + "'");
}

SelectionFunction named_selection(const std::string& name) {
  if (name == "skeptical") return SelectionFunction::skeptical();
  if (name == "brave") return SelectionFunction::brave();
  throw Error("unknown selection function '" + name + "'");
}

}  // namespace

Json atoms_json(const Alphabet& a, AtomSet set) {
  Json out = Json::array();
  for (auto& n : a.names_of(set)) out.push_back(n);
  return out;
}

AtomSet atoms_from_json(const Json& j, const Alphabet& a) {
  if (!j.is_array()) throw Error("atom list must be an array");
  std::vector<std::string> names;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error("atom names must be strings");
    names.push_back(e.get<std::string>());
  }
  return a.atoms(names);
}

Json to_json(const SESet& s, const Alphabet& a) {
  if (s.width() != a.size()) throw AlphabetMismatch("SE set width differs from the alphabet size");
  Json atoms = Json::array();
  for (auto& n : a.names()) atoms.push_back(n);
  Json pairs = Json::array();
  s.for_each([&](SEInterpretation p) { pairs.push_back(pair_json(a, p)); });
  const SEProperties f = s.properties();
  return Json{{"atoms", atoms},
              {"pairs", pairs},
              {"flags", {{"well_defined", f.well_defined}, {"complete", f.complete}, {"hi_closed", f.hi_closed}}}};
}

SESet se_set_from_json(const Json& j, const Alphabet& a) {
  SESet out(a.size());
  for (const auto& p : member(j, "pairs")) out.insert(pair_from_json(p, a));
  return out;
}

Json to_json(const ModelSet& m, const Alphabet& a) {
  if (m.width() != a.size()) throw AlphabetMismatch("model set width differs from the alphabet size");
  Json atoms = Json::array();
  for (auto& n : a.names()) atoms.push_back(n);
  Json models = Json::array();
  m.for_each([&](Interpretation i) { models.push_back(atoms_json(a, i)); });
  return Json{{"atoms", atoms}, {"models", models}};
}

ModelSet model_set_from_json(const Json& j, const Alphabet& a) {
  const Json& list = j.is_array() ? j : member(j, "models");
  ModelSet out(a.size());
  for (const auto& m : list) out.insert(atoms_from_json(m, a));
  return out;
}

Json to_json(const std::vector<PostulateReport>& reports, const Alphabet& a) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json row{{"postulate", r.id}, {"pass", r.pass}, {"cases", r.cases}};
    if (r.km_witness) {
      row["witness"] = {{"phi", to_json(r.km_witness->phi, a)["models"]},
                        {"psi1", to_json(r.km_witness->psi1, a)["models"]},
                        {"psi2", to_json(r.km_witness->psi2, a)["models"]}};
    } else if (r.ra_witness) {
      Json w = Json::object();
      const bool triple = r.id == "RA5" || r.id == "RA6";
      auto add = [&](const char* key, const SESet& s) {
        w[key] = {{"pairs", to_json(s, a)["pairs"]}, {"program", render_program(synthesize(s, a))}};
      };
      add("p", r.ra_witness->p);
      add("q", r.ra_witness->q);
      if (triple) add("r", r.ra_witness->r);
      row["witness"] = w;
    }
    out.push_back(row);
  }
  return out;
}

PropOperator faithful_from_json(const Json& j, const Alphabet& a, std::string name) {
  const std::size_t n = a.size();
  std::map<ModelSet, TotalPreorder> table;
  auto add = [&](const Json& entry) {
    ModelSet phi = model_set_from_json(member(entry, "phi_models"), a);
    TotalPreorder order(n, rank_table(member(entry, "ranks"), a));
    check_faithful(order, phi);
    table.insert_or_assign(std::move(phi), std::move(order));
  };
  std::string fallback = "dalal";
  if (j.is_object() && j.contains("assignments")) {
    for (const auto& e : j.at("assignments")) add(e);
    if (j.contains("fallback")) fallback = j.at("fallback").get<std::string>();
  } else if (j.is_array()) {
    for (const auto& e : j) add(e);
  } else {
    add(j);
  }
  PropOperator base = named_prop_operator(fallback);
  return PropOperator::faithful(std::move(name), [table = std::move(table), base](const ModelSet& phi) {
    if (auto it = table.find(phi); it != table.end()) return it->second;
    return base.preorder(phi);
  });
}

PartedAssignment prop_based_assignment(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw Error("expected <selection>:<operator>, got '" + spec + "'");
  return PartedAssignment::from_prop_based(named_prop_operator(spec.substr(colon + 1)),
                                           named_selection(spec.substr(0, colon)));
}

PartedAssignment parted_from_json(const Json& j, const Alphabet& a, std::string name) {
  const std::size_t n = a.size();
  std::map<ModelSet, TotalPreorder> preorders;
  std::map<SESet, std::map<std::uint32_t, ModelSet>> heres;
  if (j.contains("preorders")) {
    for (const auto& e : j.at("preorders")) {
      preorders.insert_or_assign(model_set_from_json(member(e, "models"), a),
                                 TotalPreorder(n, rank_table(member(e, "ranks"), a)));
    }
  }
  if (j.contains("here")) {
    for (const auto& e : j.at("here")) {
      SESet se(n);
      for (const auto& p : member(e, "se")) se.insert(pair_from_json(p, a));
      auto& rows = heres[se];
      for (const auto& [key, value] : member(e, "sets").items()) {
        rows.insert_or_assign(a.parse_set(key).bits, model_set_from_json(value, a));
      }
    }
  }
  PartedAssignment base = prop_based_assignment(j.value("fallback", std::string("skeptical:dalal")));
  return PartedAssignment(
      std::move(name),
      [preorders, base](const ModelSet& models) {
        if (auto it = preorders.find(models); it != preorders.end()) return it->second;
        return base.preorder(models);
      },
      [heres, base](const SESet& se, Interpretation y) {
        if (auto it = heres.find(se); it != heres.end()) {
          if (auto row = it->second.find(y.bits); row != it->second.end()) return row->second;
        }
        return base.here(se, y);
      });
}

}  // namespace serev
