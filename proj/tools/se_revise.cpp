// se-revise: command-line front end for the serev library.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "serev/errors.hpp"
#include "serev/json_io.hpp"
#include "serev/lp_revision.hpp"
#include "serev/parser.hpp"
#include "serev/semantics.hpp"
#include "serev/verify.hpp"

using namespace serev;

namespace {

struct Input {
  std::string label;
  std::string text;
  bool formula = false;
  bool json = false;
};

struct Options {
  std::vector<std::string> files;
  std::vector<std::string> programs;
  std::vector<std::string> formulas;
  std::string atoms;
  std::string op;
  std::string show = "se-models";
  std::string cls;
  bool json = false;
  bool exhaustive = false;
  bool km = false;
  bool ra = false;
  std::uint64_t seed = 0;
  std::size_t count = 10000;
  unsigned threads = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Input> gather_inputs(const Options& o) {
  std::vector<Input> out;
  for (auto& f : o.files) {
    out.push_back({f, read_file(f), ends_with(f, ".fml"), ends_with(f, ".json")});
  }
  for (auto& p : o.programs) out.push_back({"-e", p, false, false});
  for (auto& f : o.formulas) out.push_back({"-F", f, true, false});
  return out;
}

std::vector<std::string> split_atoms(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return out;
}

Alphabet build_alphabet(const Options& o, const std::vector<Input>& inputs) {
  std::vector<std::string> seen;
  for (auto& in : inputs) {
    if (in.json) continue;
    auto atoms = in.formula ? formula_atoms(in.text) : program_atoms(in.text);
    seen.insert(seen.end(), atoms.begin(), atoms.end());
  }
  if (o.atoms.empty()) return Alphabet(seen);
  Alphabet given(split_atoms(o.atoms));
  for (auto& a : seen) {
    if (!given.index_of(a)) throw AlphabetMismatch("atom '" + a + "' is not in --atoms");
  }
  return given;
}

Program program_of(const Input& in, const Alphabet& a) {
  if (in.formula || in.json) throw UsageError(in.label + ": expected a program");
  try {
    return parse_program(in.text, a);
  } catch (const ParseError& e) {
    throw ParseError(in.label + ": " + e.what(), e.line(), e.column());
  }
}

ModelSet formula_of(const Input& in, const Alphabet& a) {
  if (!in.formula) throw UsageError(in.label + ": expected a formula");
  return parse_formula(in.text, a);
}

std::string pair_text(SEInterpretation p, const Alphabet& a) {
  return "(" + a.format(p.here) + ", " + a.format(p.there) + ")";
}

void print_models(std::ostream& out, const ModelSet& m, const Alphabet& a, bool json) {
  if (json) {
    out << to_json(m, a).dump(2) << "\n";
    return;
  }
  m.for_each([&](Interpretation i) { out << a.format(i) << "\n"; });
}

void print_se(std::ostream& out, const SESet& s, const Alphabet& a, bool json) {
  if (json) {
    out << to_json(s, a).dump(2) << "\n";
    return;
  }
  s.for_each([&](SEInterpretation p) { out << pair_text(p, a) << "\n"; });
}

void print_program(std::ostream& out, const Program& p, bool json) {
  if (json) {
    out << Json{{"class", std::string(to_string(p.class_tag()))}, {"program", render_program(p)}}.dump(2) << "\n";
    return;
  }
  const std::string text = render_program(p);
  out << text << (text.empty() ? "" : "\n");
}

void show(std::ostream& out, const SESet& s, const Alphabet& a, const Options& o) {
  if (o.show == "se-models") {
    print_se(out, s, a, o.json);
  } else if (o.show == "answer-sets") {
    print_models(out, answer_sets_from_se(s), a, o.json);
  } else if (o.show == "program") {
    print_program(out, synthesize(s, a), o.json);
  } else {
    throw UsageError("unknown --show lens '" + o.show + "'");
  }
}

std::optional<PropOperator> prop_operator(const std::string& spec, const Alphabet& a) {
  if (spec == "drastic") return PropOperator::drastic();
  if (spec == "dalal") return PropOperator::dalal();
  if (ends_with(spec, ".json")) return faithful_from_json(Json::parse(read_file(spec)), a, spec);
  return std::nullopt;
}

PartedAssignment assignment_of(const std::string& spec, const Alphabet& a) {
  if (ends_with(spec, ".json")) return parted_from_json(Json::parse(read_file(spec)), a, spec);
  return prop_based_assignment(spec);
}

LPOperator lp_operator(const std::string& spec, const Alphabet& a) {
  if (spec.empty()) throw UsageError("--op is required");
  if (spec == "drastic-lp") return LPOperator::drastic_lp();
  if (spec == "cardinality") return LPOperator::cardinality();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("unknown operator '" + spec + "'");
  const std::string head = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (head == "parted") return LPOperator::parted(assignment_of(rest, a));
  if (head == "dlp") return LPOperator::dlp(assignment_of(rest, a));
  if (head == "nlp") return LPOperator::nlp(assignment_of(rest, a));
  if (head == "skeptical" || head == "brave") {
    auto circ = prop_operator(rest, a);
    if (!circ) throw UsageError("unknown propositional operator '" + rest + "'");
    return LPOperator::prop_based(*circ, head == "skeptical" ? SelectionFunction::skeptical()
                                                             : SelectionFunction::brave());
  }
  throw UsageError("unknown operator '" + spec + "'");
}

void need(const std::vector<Input>& inputs, std::size_t n, const std::string& cmd) {
  if (inputs.size() != n) {
    throw UsageError(cmd + " takes " + std::to_string(n) + " input" + (n == 1 ? "" : "s") + ", got " +
                     std::to_string(inputs.size()));
  }
}

int cmd_models(const Options& o, std::ostream& out) {
  auto inputs = gather_inputs(o);
  need(inputs, 1, "models");
  Alphabet a = build_alphabet(o, inputs);
  if (inputs[0].formula) {
    ModelSet m = formula_of(inputs[0], a);
    if (o.json) print_models(out, m, a, true);
    else out << render_dnf(m, a) << "\n";
  } else {
    print_models(out, classical_models(program_of(inputs[0], a)), a, o.json);
  }
  return 0;
}

int cmd_answer_sets(const Options& o, std::ostream& out) {
  auto inputs = gather_inputs(o);
  need(inputs, 1, "answer-sets");
  Alphabet a = build_alphabet(o, inputs);
  print_models(out, answer_sets(program_of(inputs[0], a)), a, o.json);
  return 0;
}

int cmd_se_models(const Options& o, std::ostream& out) {
  auto inputs = gather_inputs(o);
  need(inputs, 1, "se-models");
  Alphabet a = build_alphabet(o, inputs);
  print_se(out, se_models(program_of(inputs[0], a)), a, o.json);
  return 0;
}

int cmd_expand(const Options& o, std::ostream& out) {
  auto inputs = gather_inputs(o);
  need(inputs, 2, "expand");
  Alphabet a = build_alphabet(o, inputs);
  show(out, se_models(expand(program_of(inputs[0], a), program_of(inputs[1], a))), a, o);
  return 0;
}

int cmd_revise(const Options& o, std::ostream& out) {
  auto inputs = gather_inputs(o);
  need(inputs, 2, "revise");
  Alphabet a = build_alphabet(o, inputs);
  if (inputs[0].formula && inputs[1].formula) {
    auto circ = prop_operator(o.op, a);
    if (!circ) throw UsageError("formulas need a propositional operator (drastic, dalal or a .json rank table)");
    ModelSet m = revise(*circ, formula_of(inputs[0], a), formula_of(inputs[1], a));
    if (o.json) print_models(out, m, a, true);
    else out << render_dnf(m, a) << "\n";
    return 0;
  }
  LPOperator op = lp_operator(o.op, a);
  Program p = program_of(inputs[0], a);
  Program q = program_of(inputs[1], a);
  show(out, op.apply(se_models(p), se_models(q)), a, o);
  return 0;
}

void print_reports(std::ostream& out, const std::vector<PostulateReport>& reports, const Alphabet& a,
                   bool json) {
  if (json) {
    out << to_json(reports, a).dump(2) << "\n";
    return;
  }
  out << "postulate  result  cases\n";
  for (auto& r : reports) {
    std::string id = r.id;
    id.resize(std::max<std::size_t>(id.size(), 9), ' ');
    out << id << "  " << (r.pass ? "pass" : "FAIL") << "    " << r.cases << "\n";
    if (r.km_witness) {
      out << "  phi  = " << render_dnf(r.km_witness->phi, a) << "\n";
      out << "  psi1 = " << render_dnf(r.km_witness->psi1, a) << "\n";
      out << "  psi2 = " << render_dnf(r.km_witness->psi2, a) << "\n";
    }
    if (r.ra_witness) {
      auto dump = [&](const char* label, const SESet& s) {
        std::string text = render_program(synthesize(s, a));
        std::replace(text.begin(), text.end(), '\n', ' ');
        out << "  " << label << " = " << (text.empty() ? "(empty program)" : text) << "\n";
      };
      dump("P", r.ra_witness->p);
      dump("Q", r.ra_witness->q);
      if (r.id == "RA5" || r.id == "RA6") dump("R", r.ra_witness->r);
    }
  }
}

int cmd_check(const Options& o, std::ostream& out) {
  if (o.km == o.ra) throw UsageError("check needs exactly one of --km or --ra");
  if (o.atoms.empty()) throw UsageError("check needs --atoms");
  Alphabet a(split_atoms(o.atoms));
  CheckMode mode = o.exhaustive ? CheckMode::all() : CheckMode::seeded(o.seed, o.count);
  mode.threads = o.threads;
  if (o.exhaustive && a.size() > 2) throw UsageError("--exhaustive supports at most 2 atoms");
  std::vector<PostulateReport> reports;
  if (o.km) {
    auto circ = prop_operator(o.op, a);
    if (!circ) throw UsageError("--km needs a propositional operator (drastic, dalal or a .json rank table)");
    reports = check_km(*circ, a.size(), mode);
  } else {
    reports = check_ra(lp_operator(o.op, a), a.size(), mode);
  }
  print_reports(out, reports, a, o.json);
  return all_pass(reports) ? 0 : 1;
}

int cmd_extract(const Options& o, std::ostream& out) {
  auto inputs = gather_inputs(o);
  need(inputs, 1, "extract");
  Alphabet a = build_alphabet(o, inputs);
  LPOperator op = lp_operator(o.op, a);
  SESet p = se_models(program_of(inputs[0], a));
  PartedAssignment asg = extract_assignment(op, a.size());
  asg.check(p);
  TotalPreorder order = asg.preorder(p.there_worlds()).normalized();
  const std::size_t count = interpretation_count(a.size());
  if (o.json) {
    Json ranks = Json::object();
    Json heres = Json::object();
    for (std::uint32_t y = 0; y < count; ++y) {
      ranks[a.format(Interpretation{y})] = order.rank(Interpretation{y});
      heres[a.format(Interpretation{y})] = to_json(asg.here(p, Interpretation{y}), a)["models"];
    }
    out << Json{{"ranks", ranks}, {"here", heres}}.dump(2) << "\n";
    return 0;
  }
  for (std::uint32_t y = 0; y < count; ++y) {
    Interpretation yi{y};
    out << a.format(yi) << "  rank " << order.rank(yi) << "  here";
    asg.here(p, yi).for_each([&](Interpretation x) { out << " " << a.format(x); });
    out << "\n";
  }
  return 0;
}

int cmd_synthesize(const Options& o, std::ostream& out) {
  auto inputs = gather_inputs(o);
  need(inputs, 1, "synthesize");
  if (!inputs[0].json) {
    Alphabet a = build_alphabet(o, inputs);
    SESet s = se_models(program_of(inputs[0], a));
    Program p = o.cls.empty() ? synthesize(s, a) : synthesize(s, parse_program_class(o.cls), a);
    print_program(out, p, o.json);
    return 0;
  }
  Json j = Json::parse(inputs[0].text);
  std::vector<std::string> names;
  for (auto& n : j.at("atoms")) names.push_back(n.get<std::string>());
  if (!o.atoms.empty()) {
    Alphabet given(split_atoms(o.atoms));
    for (auto& n : names) {
      if (!given.index_of(n)) throw AlphabetMismatch("atom '" + n + "' is not in --atoms");
    }
    names.assign(given.names().begin(), given.names().end());
  }
  Alphabet a(names);
  SESet s = se_set_from_json(j, a);
  Program p = o.cls.empty() ? synthesize(s, a) : synthesize(s, parse_program_class(o.cls), a);
  print_program(out, p, o.json);
  return 0;
}

int cmd_compare(const Options& o, std::ostream& out) {
  auto inputs = gather_inputs(o);
  need(inputs, 2, "compare");
  Alphabet a = build_alphabet(o, inputs);
  Program p = program_of(inputs[0], a);
  Program q = program_of(inputs[1], a);
  const bool eq = strong_equiv(p, q);
  const bool pq = se_subset(p, q);
  const bool qp = se_subset(q, p);
  if (o.json) {
    out << Json{{"strongly_equivalent", eq}, {"se_subset", pq}, {"se_superset", qp}}.dump(2) << "\n";
  } else {
    out << "strongly equivalent: " << (eq ? "yes" : "no") << "\n";
    out << "SE(P) subset of SE(Q): " << (pq ? "yes" : "no") << "\n";
    out << "SE(Q) subset of SE(P): " << (qp ? "yes" : "no") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Revision of logic programs under SE-model semantics"};
  app.require_subcommand(1, 1);
  Options o;

  auto inputs = [&](CLI::App* sub) {
    sub->add_option("inputs", o.files, "input files (.lp program, .fml formula, .json SE set)");
    sub->add_option("-e", o.programs, "inline program text (after files)");
    sub->add_option("-F", o.formulas, "inline formula text (after files and programs)");
    sub->add_option("--atoms", o.atoms, "alphabet, comma separated");
    sub->add_flag("--json", o.json, "JSON output");
  };
  auto lens = [&](CLI::App* sub) {
    sub->add_option("--show", o.show, "se-models, answer-sets or program")
        ->check(CLI::IsMember({"se-models", "answer-sets", "program"}));
  };

  std::map<std::string, std::function<int(const Options&, std::ostream&)>> handlers{
      {"models", cmd_models},   {"answer-sets", cmd_answer_sets}, {"se-models", cmd_se_models},
      {"expand", cmd_expand},   {"revise", cmd_revise},           {"check", cmd_check},
      {"extract", cmd_extract}, {"synthesize", cmd_synthesize},   {"compare", cmd_compare}};

  inputs(app.add_subcommand("models", "classical models of a program or formula"));
  inputs(app.add_subcommand("answer-sets", "answer sets of a program"));
  inputs(app.add_subcommand("se-models", "SE models of a program"));
  auto* expand_cmd = app.add_subcommand("expand", "expansion P + Q");
  inputs(expand_cmd);
  lens(expand_cmd);
  auto* revise_cmd = app.add_subcommand("revise", "revise P by Q");
  inputs(revise_cmd);
  lens(revise_cmd);
  revise_cmd->add_option("--op", o.op, "operator")->required();
  auto* check_cmd = app.add_subcommand("check", "verify the postulates of an operator");
  check_cmd->add_option("--op", o.op, "operator")->required();
  check_cmd->add_option("--atoms", o.atoms, "alphabet, comma separated")->required();
  check_cmd->add_flag("--km", o.km, "propositional postulates R1-R6");
  check_cmd->add_flag("--ra", o.ra, "program postulates RA1-RA6");
  check_cmd->add_flag("--exhaustive", o.exhaustive, "all inputs (at most 2 atoms)");
  check_cmd->add_option("--seed", o.seed, "seed for sampled inputs");
  check_cmd->add_option("--count", o.count, "number of sampled cases");
  check_cmd->add_option("--threads", o.threads, "worker threads (0: all cores)");
  check_cmd->add_flag("--json", o.json, "JSON output");
  auto* extract_cmd = app.add_subcommand("extract", "assignment of an operator at a program");
  inputs(extract_cmd);
  extract_cmd->add_option("--op", o.op, "operator")->required();
  auto* synth_cmd = app.add_subcommand("synthesize", "program for an SE set");
  inputs(synth_cmd);
  synth_cmd->add_option("--class", o.cls, "nlp, dlp or glp (default: most specific)");
  inputs(app.add_subcommand("compare", "strong equivalence of two programs"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    std::ostringstream out;
    const int code = handlers.at(name)(o, out);
    std::cout << out.str();
    return code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "se-revise: invalid JSON: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "se-revise: " << e.what() << "\n";
  }
  return 2;
}
