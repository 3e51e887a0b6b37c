// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion; with
// arguments, runs only the named criteria (e.g. `acceptance AC2 AC5`).
// Exit status is nonzero when any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "serev/lp_revision.hpp"
#include "serev/parser.hpp"
#include "serev/sampling.hpp"
#include "serev/semantics.hpp"
#include "serev/verify.hpp"

using namespace serev;

namespace {

constexpr AtomSet E{0}, P{1}, Q{2}, PQ{3}, R{4}, PR{5}, QR{6}, PQR{7};

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) detail << what;
    pass = pass && cond;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Alphabet pq() { return Alphabet({"p", "q"}); }
Alphabet pqr() { return Alphabet({"p", "q", "r"}); }

std::string show(const SESet& s, const Alphabet& a) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](SEInterpretation p) {
    out += (first ? "(" : ", (") + a.format(p.here) + "," + a.format(p.there) + ")";
    first = false;
  });
  return out + "}";
}

std::string show(const ModelSet& m, const Alphabet& a) {
  std::string out = "{";
  bool first = true;
  m.for_each([&](Interpretation i) {
    out += (first ? "" : ", ") + a.format(i);
    first = false;
  });
  return out + "}";
}

// Six operators named for the exhaustive and seeded postulate runs.
std::vector<LPOperator> postulate_operators() {
  return {LPOperator::drastic_lp(),
          LPOperator::cardinality(),
          LPOperator::prop_based(PropOperator::drastic(), SelectionFunction::skeptical()),
          LPOperator::prop_based(PropOperator::dalal(), SelectionFunction::skeptical()),
          LPOperator::prop_based(PropOperator::drastic(), SelectionFunction::brave()),
          LPOperator::prop_based(PropOperator::dalal(), SelectionFunction::brave())};
}

std::vector<LPOperator> shipped_operators() {
  auto ops = postulate_operators();
  const PartedAssignment sk = PartedAssignment::from_prop_based(PropOperator::dalal(), SelectionFunction::skeptical());
  ops.push_back(LPOperator::parted(fixture::tied_pq_assignment()));
  ops.push_back(LPOperator::dlp(sk));
  ops.push_back(LPOperator::nlp(sk));
  return ops;
}

void ac1(Outcome& o) {
  const auto start = Clock::now();
  Alphabet a = pq();
  Program p = parse_program("p :- not q.\n:- p, q.", a);
  o.require(classical_models(p) == ModelSet(2, {P, Q}), "mod(P) is " + show(classical_models(p), a));
  const Program r0 = reduct(p, E);
  const Program rq = reduct(p, Q);
  o.require(r0.same_rules(parse_program("p :- true.\nfalse :- p, q.", a)), "reduct at {} is\n" + render_program(r0));
  o.require(reduct(p, P).same_rules(r0), "reduct at {p} differs from the one at {}");
  o.require(rq.same_rules(parse_program("false :- p, q.", a)), "reduct at {q} is\n" + render_program(rq));
  o.require(reduct(p, PQ).same_rules(rq), "reduct at {p,q} differs from the one at {q}");
  o.require(classical_models(r0) == ModelSet(2, {P}), "mod of reduct at {} is " + show(classical_models(r0), a));
  o.require(classical_models(rq) == ModelSet(2, {E, P, Q}), "mod of reduct at {q} is " + show(classical_models(rq), a));
  o.require(answer_sets(p) == ModelSet(2, {P}), "AS(P) is " + show(answer_sets(p), a));
  o.require(se_models(p) == SESet(2, {{P, P}, {E, Q}, {Q, Q}}), "SE(P) is " + show(se_models(p), a));
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
}

void ac2(Outcome& o) {
  Alphabet a = pq();
  Program p = parse_program("p :- not q.\n:- p, q.", a);
  Program p1 = parse_program("p :- not q.", a);
  Program p2 = parse_program("p :- not q.\np ; q.", a);
  const SESet want1(2, {{P, P}, {E, Q}, {Q, Q}, {E, PQ}, {P, PQ}, {Q, PQ}, {PQ, PQ}});
  const SESet want2(2, {{P, P}, {P, PQ}, {Q, PQ}, {PQ, PQ}});
  o.require(se_models(p1) == want1, "SE(P1) is " + show(se_models(p1), a) + "; ");
  o.require(se_models(p2) == want2, "SE(P2) is " + show(se_models(p2), a) + ", expected " + show(want2, a) + "; ");
  for (const Program* prog : {&p, &p1, &p2}) {
    o.require(answer_sets(*prog) == ModelSet(2, {P}),
              "AS of\n" + render_program(*prog) + "\nis " + show(answer_sets(*prog), a));
  }
}

void ac3(Outcome& o) {
  Alphabet a = pq();
  Program e = expand(parse_program("p :- not q.\n:- p, q.", a), parse_program("q.", a));
  o.require(se_models(e) == SESet(2, {{Q, Q}}), "SE(P+Q) is " + show(se_models(e), a));
  o.require(strong_equiv(e, parse_program("q :- true.\nfalse :- p.", a)), "P+Q is not strongly equivalent");
}

void ac4(Outcome& o) {
  Alphabet a = pqr();
  const ModelSet phi = parse_formula("p & q & ~r", a);
  const ModelSet psi = parse_formula("r", a);
  const ModelSet drastic = revise(PropOperator::drastic(), phi, psi);
  const ModelSet dalal = revise(PropOperator::dalal(), phi, psi);
  o.require(drastic == psi, "drastic gives " + show(drastic, a));
  o.require(dalal == ModelSet(3, {PQR}), "Dalal gives " + show(dalal, a));
}

void ac5(Outcome& o) {
  Alphabet a = pq();
  const PartedAssignment tied = fixture::tied_pq_assignment();
  const SESet p = se_models(parse_program("p :- not q.\n:- p, q.", a));
  const SESet q1 = se_models(parse_program("q :- not p.", a));
  const SESet q2 = se_models(parse_program(":- p, not q.\n:- q, not p.\np ; not p.\nq ; not q.", a));
  const SESet r1 = parted_revise(tied, p, q1);
  const SESet r2 = parted_revise(tied, p, q2);
  o.require(r1 == SESet(2, {{P, P}, {Q, Q}}), "SE(P*Q1) is " + show(r1, a) + "; ");
  o.require(r2 == SESet(2, {{PQ, PQ}}), "SE(P*Q2) is " + show(r2, a));
}

void ac6(Outcome& o) {
  Alphabet a = pqr();
  const SESet p = se_models(parse_program("p.\nq.\n:- r.", a));
  const SESet q = se_models(parse_program(":- p, q, not r.", a));
  const ModelSet sk =
      answer_sets_from_se(LPOperator::prop_based(PropOperator::drastic(), SelectionFunction::skeptical()).apply(p, q));
  const ModelSet br =
      answer_sets_from_se(LPOperator::prop_based(PropOperator::drastic(), SelectionFunction::brave()).apply(p, q));
  o.require(sk == ModelSet(3, {E}), "skeptical answer sets " + show(sk, a) + "; ");
  o.require(br == ModelSet(3, {E, P, Q, R, PR, QR, PQR}), "brave answer sets " + show(br, a));
}

void ac7(Outcome& o) {
  Alphabet a = pq();
  const SESet p = se_models(parse_program(":- not p, not q.\n:- q, not p.\n:- p, q.", a));
  const SESet q = se_models(parse_program("q.", a));
  const SESet out = LPOperator::prop_based(PropOperator::drastic(), SelectionFunction::brave()).apply(p, q);
  o.require(out == SESet(2, {{Q, Q}, {PQ, PQ}}), "SE is " + show(out, a) + "; ");
  o.require(!out.complete(), "result is complete");
}

void ac8(Outcome& o) {
  auto start = Clock::now();
  for (auto& op : postulate_operators()) {
    auto reports = check_ra(op, 2, CheckMode::all());
    for (auto& r : reports) o.require(r.pass, op.name() + " fails " + r.id + " exhaustively; ");
    o.require(reports.size() == 6 && reports[0].cases == 162u * 162u && reports[5].cases == 162u * 162u * 162u,
              op.name() + " did not cover all cases; ");
  }
  const double exhaustive = seconds_since(start);
  start = Clock::now();
  for (auto& op : postulate_operators()) {
    auto reports = check_ra(op, 3, CheckMode::seeded(2024, 10000));
    for (auto& r : reports) o.require(r.pass, op.name() + " fails " + r.id + " on seeded n=3; ");
  }
  const double seeded = seconds_since(start);
  o.require(exhaustive < 600.0, "exhaustive run took " + std::to_string(exhaustive) + " s; ");
  o.require(seeded < 300.0, "seeded run took " + std::to_string(seeded) + " s");
  if (o.pass) o.detail << "exhaustive " << exhaustive << " s, seeded " << seeded << " s";
}

void ac9(Outcome& o) {
  Alphabet a = pq();
  for (ProgramClass c : {ProgramClass::glp, ProgramClass::dlp, ProgramClass::nlp}) {
    const auto sets = enumerate_sets(2, c);
    if (c == ProgramClass::glp) o.require(sets.size() == 162, "GLP set count is " + std::to_string(sets.size()) + "; ");
    for (auto& s : sets) {
      const Program prog = synthesize(s, c, a);
      o.require(se_models(prog) == s && prog.class_tag() <= c, "synthesis round trip fails on " + show(s, a) + "; ");
    }
  }
  for (auto& op : shipped_operators()) {
    const PartedAssignment extracted = extract_assignment(op, 2);
    const auto sets = enumerate_sets(2, op.class_domain());
    for (auto& p : sets) {
      for (auto& q : sets) {
        if (parted_revise(extracted, p, q) != op.apply(p, q)) {
          o.require(false, "extraction of " + op.name() + " differs on P=" + show(p, a) + " Q=" + show(q, a) + "; ");
          break;
        }
      }
    }
  }
}

void ac10(Outcome& o) {
  std::size_t mismatches = 0;
  std::size_t checked = 0;
  for (std::size_t n : {1u, 2u, 3u}) {
    const auto sets = enumerate_model_sets(n);
    for (auto& phi : sets) {
      for (auto& psi : sets) {
        ++checked;
        if (oracle::list(revise(PropOperator::dalal(), phi, psi)) != oracle::dalal(oracle::list(phi), oracle::list(psi)))
          ++mismatches;
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail << checked << " pairs, all n<=3 pairs exhaustively";
}

// Random valid selection table; with `within`, each entry is a subset of it.
std::vector<ModelSet> random_table(std::mt19937_64& rng, std::size_t n, const std::vector<ModelSet>* within) {
  std::vector<ModelSet> table;
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    ModelSet s(n);
    s.insert(AtomSet{y});
    for_each_subset(AtomSet{y}, [&](AtomSet x) {
      if ((!within || (*within)[y].contains(x)) && (rng() & 1u)) s.insert(x);
    });
    table.push_back(s);
  }
  return table;
}

void ac11(Outcome& o) {
  const PropOperator circs[] = {PropOperator::drastic(), PropOperator::dalal()};
  const auto glp2 = enumerate_sets(2, ProgramClass::glp);
  const auto fs = all_selection_functions(2);
  const auto as = [](const SESet& s) { return answer_sets_from_se(s); };

  // along the lattice, exhaustive at n=2
  for (const PropOperator& circ : circs) {
    std::vector<std::vector<ModelSet>> results;
    for (auto& f : fs) {
      LPOperator op = LPOperator::prop_based(circ, f);
      std::vector<ModelSet> row;
      for (auto& p : glp2) {
        for (auto& q : glp2) row.push_back(as(op.apply(p, q)));
      }
      results.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (!lattice_leq(fs[i], fs[j], 2)) continue;
        for (std::size_t c = 0; c < results[i].size(); ++c) {
          if (!results[i][c].subset_of(results[j][c])) {
            o.require(false, "lattice inclusion fails for " + fs[i].name() + " below " + fs[j].name() + "; ");
            break;
          }
        }
      }
    }
  }
  // skeptical and brave, exhaustive at n=2
  for (const PropOperator& circ : circs) {
    LPOperator sk = LPOperator::prop_based(circ, SelectionFunction::skeptical());
    LPOperator br = LPOperator::prop_based(circ, SelectionFunction::brave());
    for (auto& p : glp2) {
      for (auto& q : glp2) {
        if (!(p & q).empty()) continue;
        o.require(as(sk.apply(p, q)).subset_of(as(q)), "skeptical inclusion fails at n=2; ");
        o.require(as(br.apply(p, q)) == circ.revise(p.there_worlds(), q.there_worlds()), "brave identity fails at n=2; ");
      }
    }
  }
  // 10^3 seeded samples at n=3 for each of the three properties
  std::mt19937_64 rng(77);
  const auto sets = sample_sets(3, ProgramClass::glp, 78, 2000);
  for (std::size_t i = 0; i < 1000; ++i) {
    const SESet& p = sets[2 * i];
    const SESet& q = sets[2 * i + 1];
    const PropOperator& circ = circs[i % 2];
    const auto t1 = random_table(rng, 3, nullptr);
    const auto t2 = random_table(rng, 3, &t1);
    const SelectionFunction f1 = SelectionFunction::from_table("f1", 3, t1);
    const SelectionFunction f2 = SelectionFunction::from_table("f2", 3, t2);
    o.require(as(LPOperator::prop_based(circ, f1).apply(p, q)).subset_of(as(LPOperator::prop_based(circ, f2).apply(p, q))),
              "lattice inclusion fails at n=3 sample " + std::to_string(i) + "; ");
    const SESet sk = LPOperator::prop_based(circ, SelectionFunction::skeptical()).apply(p, q);
    const SESet br = LPOperator::prop_based(circ, SelectionFunction::brave()).apply(p, q);
    if ((p & q).empty()) {
      o.require(as(sk).subset_of(as(q)), "skeptical inclusion fails at n=3 sample " + std::to_string(i) + "; ");
      o.require(as(br) == circ.revise(p.there_worlds(), q.there_worlds()),
                "brave identity fails at n=3 sample " + std::to_string(i) + "; ");
    }
  }
  // class preservation for skeptical operators over all n=2 NLP/DLP pairs
  for (const PropOperator& circ : circs) {
    LPOperator sk = LPOperator::prop_based(circ, SelectionFunction::skeptical());
    for (ProgramClass c : {ProgramClass::nlp, ProgramClass::dlp}) {
      const auto cls = enumerate_sets(2, c);
      for (auto& p : cls) {
        for (auto& q : cls) {
          const SESet out = sk.apply(p, q);
          o.require(c == ProgramClass::nlp ? out.hi_closed() : out.complete(), sk.name() + " leaves the class; ");
        }
      }
    }
  }
}

void ac12(Outcome& o) {
  const PartedAssignment tied = fixture::tied_pq_assignment();
  const SESet p = se_models(parse_program("p :- not q.\n:- p, q.", pq()));
  const auto glp2 = enumerate_sets(2, ProgramClass::glp);
  std::vector<CompliantPreorder> distinct;
  for (auto& c : compliant_variants(tied, p)) {
    if (compliant_violation(c, p) || !sigma_related(c, tied, p) || compliant_mismatch(c, tied, p, glp2)) continue;
    bool fresh = true;
    for (auto& d : distinct) fresh = fresh && !d.same_order(c);
    if (fresh) distinct.push_back(c);
  }
  bool same_min = true;
  for (auto& c : distinct) {
    for (auto& q : glp2) same_min = same_min && c.min(q) == distinct.front().min(q);
  }
  o.require(distinct.size() >= 3, std::to_string(distinct.size()) + " distinct compliant preorders; ");
  o.require(same_min, "min-sets differ");
  if (o.pass) o.detail << distinct.size() << " distinct preorders, identical min-sets over " << glp2.size() << " sets";
}

struct Criterion {
  const char* id;
  const char* title;
  void (*run)(Outcome&);
};

const Criterion criteria[] = {
    {"AC1", "example program: models, reducts, answer sets, SE models", ac1},
    {"AC2", "SE models and answer sets of the two comparison programs", ac2},
    {"AC3", "expansion example", ac3},
    {"AC4", "drastic and Dalal revision example", ac4},
    {"AC5", "parted assignment revision example", ac5},
    {"AC6", "skeptical and brave answer sets, three atoms", ac6},
    {"AC7", "brave revision leaves the disjunctive class", ac7},
    {"AC8", "RA1-RA6 exhaustive at two atoms and seeded at three", ac8},
    {"AC9", "synthesis and extraction round trips", ac9},
    {"AC10", "Dalal against brute-force minimum Hamming distance", ac10},
    {"AC11", "answer-set properties of propositional-based operators", ac11},
    {"AC12", "distinct compliant preorders with identical revisions", ac12},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> only(argv + 1, argv + argc);
  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    const auto start = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %-4s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, seconds_since(start));
    const std::string detail = o.detail.str();
    if (!detail.empty()) std::printf("       %s\n", detail.c_str());
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
