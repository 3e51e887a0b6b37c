#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "serev/errors.hpp"
#include "serev/lp_revision.hpp"
#include "serev/parser.hpp"
#include "serev/sampling.hpp"
#include "serev/semantics.hpp"

using namespace serev;

namespace {

constexpr AtomSet E{0}, P{1}, Q{2}, PQ{3}, R{4}, PR{5}, QR{6}, PQR{7};

SEInterpretation se(AtomSet x, AtomSet y) { return {x, y}; }

Alphabet pq() { return Alphabet({"p", "q"}); }
Alphabet pqr() { return Alphabet({"p", "q", "r"}); }

SESet se_of(const char* text, const Alphabet& a) { return se_models(parse_program(text, a)); }

using fixture::tied_pq_assignment;

ModelSet as_of(const SESet& s) { return answer_sets_from_se(s); }

const std::vector<SESet>& glp2() {
  static const std::vector<SESet> sets = enumerate_sets(2, ProgramClass::glp);
  return sets;
}

std::vector<LPOperator> prop_based_family(const PropOperator& circ) {
  std::vector<LPOperator> out;
  for (auto& f : all_selection_functions(2)) out.push_back(LPOperator::prop_based(circ, f));
  return out;
}

// Random valid selection function over `n` atoms; `within`, when given, is
// narrowed per Y so that the result is above it in the lattice.
std::vector<ModelSet> random_table(std::mt19937_64& rng, std::size_t n, const std::vector<ModelSet>* within) {
  std::vector<ModelSet> table;
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    ModelSet s(n);
    s.insert(AtomSet{y});
    for_each_subset(AtomSet{y}, [&](AtomSet x) {
      const bool allowed = !within || (*within)[y].contains(x);
      if (allowed && (rng() & 1u)) s.insert(x);
    });
    table.push_back(s);
  }
  return table;
}

}  // namespace

TEST(LpRevision, ExpansionExamples) {
  Alphabet a = pq();
  Program p = parse_program("p :- not q.\n:- p, q.", a);
  Program q = parse_program("q.", a);
  Program e = expand(p, q);
  EXPECT_EQ(se_models(e), SESet(2, {se(Q, Q)}));
  EXPECT_TRUE(strong_equiv(e, parse_program("q.\n:- p.", a)));
  EXPECT_TRUE(strong_equiv(expand(p, p), p));
  EXPECT_TRUE(se_models(expand(p, synthesize(SESet(2), a))).empty());
  EXPECT_THROW(expand(p, parse_program("r.")), AlphabetMismatch);
}

TEST(LpRevision, DrasticExamples) {
  Alphabet a = pq();
  SESet p = se_of("p :- not q.\n:- p, q.", a);
  SESet q = se_of("q.", a);
  EXPECT_EQ(drastic_lp_revise(p, q), p & q);
  SESet p2 = se_of("p.", a);
  SESet q2 = se_of(":- p.", a);
  EXPECT_EQ(drastic_lp_revise(p2, q2), q2);
}

TEST(LpRevision, DrasticEqualsSkepticalDrasticOnAllPairs) {
  LPOperator sk = LPOperator::prop_based(PropOperator::drastic(), SelectionFunction::skeptical());
  for (auto& p : glp2()) {
    for (auto& q : glp2()) ASSERT_EQ(drastic_lp_revise(p, q), sk.apply(p, q));
  }
}

TEST(LpRevision, PartedAssignmentExample) {
  Alphabet a = pq();
  PartedAssignment tied = tied_pq_assignment();
  SESet p = se_of("p :- not q.\n:- p, q.", a);
  EXPECT_FALSE(tied.find_violation(p).has_value());
  SESet q1 = se_of("q :- not p.", a);
  EXPECT_EQ(q1, SESet(2, {se(E, P), se(P, P), se(Q, Q), se(E, PQ), se(P, PQ), se(Q, PQ), se(PQ, PQ)}));
  SESet q2 = se_of(":- p, not q.\n:- q, not p.\np ; not p.\nq ; not q.", a);
  SESet r1 = parted_revise(tied, p, q1);
  EXPECT_EQ(r1, SESet(2, {se(P, P), se(Q, Q)}));
  EXPECT_EQ(r1, se_of("p :- not q.\nq :- not p.\n:- p, q.", a));
  SESet r2 = parted_revise(tied, p, q2);
  EXPECT_EQ(r2, SESet(2, {se(PQ, PQ)}));
  EXPECT_EQ(r2, se_of("p.\nq.", a));
  LPOperator op = LPOperator::parted(tied);
  EXPECT_TRUE(strong_equiv(op.revise(parse_program("p :- not q.\n:- p, q.", a), parse_program("q :- not p.", a)),
                           parse_program("p :- not q.\nq :- not p.\n:- p, q.", a)));
}

TEST(LpRevision, PartedRevisionOfConsistentPairsIsExpansion) {
  LPOperator op = LPOperator::parted(tied_pq_assignment());
  for (auto& p : glp2()) {
    for (auto& q : glp2()) {
      if (!(p & q).empty()) ASSERT_EQ(op.apply(p, q), p & q);
    }
  }
}

TEST(LpRevision, AssignmentViolationsNameTheCondition) {
  SESet p(2, {se(P, P), se(E, Q), se(Q, Q)});
  auto expect = [&](PartedAssignment a, const char* cond) {
    try {
      parted_revise(a, p, SESet::all(2));
      ADD_FAILURE() << "no violation for " << cond;
    } catch (const AssignmentViolation& e) {
      EXPECT_EQ(e.condition(), cond);
    }
  };
  auto skeptical_here = [](const SESet& s, Interpretation y) {
    ModelSet out(s.width());
    for_each_subset(y, [&](AtomSet x) { out.insert(x); });
    if (s.contains({y, y})) return s.heres_of(y);
    return out;
  };
  expect(PartedAssignment("flat", [](const ModelSet&) { return TotalPreorder(2, {2, 0, 1, 2}); }, skeptical_here), "(1)");
  expect(PartedAssignment("low", [](const ModelSet&) { return TotalPreorder(2, {0, 0, 0, 1}); }, skeptical_here), "(2)");
  auto order = [](const ModelSet&) { return TotalPreorder(2, {1, 0, 0, 1}); };
  expect(PartedAssignment("a", order, [](const SESet&, Interpretation) { return ModelSet(2); }), "(a)");
  expect(PartedAssignment("b", order, [](const SESet&, Interpretation y) { return ModelSet(2, {y, PQ}); }), "(b)");
  expect(PartedAssignment("c", order, [](const SESet&, Interpretation y) { return ModelSet(2, {y}); }), "(c)");
  expect(PartedAssignment("d", order, [](const SESet&, Interpretation y) {
           ModelSet out(2);
           for_each_subset(y, [&](AtomSet x) { out.insert(x); });
           return out;
         }),
         "(d)");
}

TEST(LpRevision, SkepticalAndBraveExample) {
  Alphabet a = pqr();
  SESet p = se_of("p.\nq.\n:- r.", a);
  SESet q = se_of(":- p, q, not r.", a);
  EXPECT_EQ(as_of(p), ModelSet(3, {PQ}));
  EXPECT_EQ(as_of(q), ModelSet(3, {E}));
  LPOperator sk = LPOperator::prop_based(PropOperator::drastic(), SelectionFunction::skeptical());
  LPOperator br = LPOperator::prop_based(PropOperator::drastic(), SelectionFunction::brave());
  EXPECT_EQ(as_of(sk.apply(p, q)), ModelSet(3, {E}));
  EXPECT_EQ(as_of(br.apply(p, q)), ModelSet(3, {E, P, Q, R, PR, QR, PQR}));
  Program pp = parse_program("p.\nq.\n:- r.", a);
  Program qq = parse_program(":- p, q, not r.", a);
  EXPECT_TRUE(mc_se(sk, pp, qq, se(E, E)));
  EXPECT_FALSE(mc_se(sk, pp, qq, se(PQ, PQ)));
}

TEST(LpRevision, BraveIsNotClassPreserving) {
  Alphabet a = pq();
  SESet p = se_of(":- not p, not q.\n:- q, not p.\n:- p, q.", a);
  SESet q = se_of("q.", a);
  EXPECT_EQ(p, SESet(2, {se(E, P), se(P, P)}));
  EXPECT_EQ(q, SESet(2, {se(Q, Q), se(Q, PQ), se(PQ, PQ)}));
  LPOperator br = LPOperator::prop_based(PropOperator::drastic(), SelectionFunction::brave());
  SESet out = br.apply(p, q);
  EXPECT_EQ(out, SESet(2, {se(Q, Q), se(PQ, PQ)}));
  EXPECT_FALSE(out.complete());
  EXPECT_EQ(br.revise(parse_program(":- not p, not q.\n:- q, not p.\n:- p, q.", a), parse_program("q.", a)).class_tag(),
            ProgramClass::glp);
  EXPECT_FALSE(mc_se(br, parse_program(":- not p, not q.\n:- q, not p.\n:- p, q.", a), parse_program("q.", a), se(Q, PQ)));
  PartedAssignment brave = PartedAssignment::from_prop_based(PropOperator::drastic(), SelectionFunction::brave());
  try {
    class_revise(brave, p, q, ProgramClass::dlp);
    FAIL();
  } catch (const AssignmentViolation& e) {
    EXPECT_EQ(e.condition(), "(f)");
  }
  EXPECT_THROW(LPOperator::dlp(brave).apply(p, q), AssignmentViolation);
}

TEST(LpRevision, ClassRevisionChecksInputs) {
  PartedAssignment sk = PartedAssignment::from_prop_based(PropOperator::dalal(), SelectionFunction::skeptical());
  SESet glp(2, {se(E, E), se(PQ, PQ)});
  SESet nlp(2, {se(Q, Q)});
  EXPECT_THROW(class_revise(sk, glp, nlp, ProgramClass::dlp), PreconditionViolation);
  EXPECT_THROW(class_revise(sk, nlp, glp, ProgramClass::nlp), PreconditionViolation);
  SESet dlp(2, {se(P, P), se(P, PQ), se(Q, PQ), se(PQ, PQ)});
  EXPECT_NO_THROW(class_revise(sk, dlp, nlp, ProgramClass::dlp));
  EXPECT_THROW(class_revise(sk, dlp, nlp, ProgramClass::nlp), PreconditionViolation);
  EXPECT_EQ(class_revise(sk, dlp, dlp, ProgramClass::dlp), dlp);
}

TEST(LpRevision, CardinalityMatchesOracleOnAllPairs) {
  for (auto& p : glp2()) {
    auto pv = p.members();
    for (auto& q : glp2()) {
      ASSERT_EQ(cardinality_revise(p, q).members(), oracle::cardinality(pv, q.members(), 2));
    }
  }
}

TEST(LpRevision, CardinalityMatchesOracleOnSampledPairs) {
  for (std::size_t n : {3u, 4u}) {
    auto sets = sample_sets(n, ProgramClass::glp, 23, 400);
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
      ASSERT_EQ(cardinality_revise(sets[i], sets[i + 1]).members(),
                oracle::cardinality(sets[i].members(), sets[i + 1].members(), n));
    }
  }
}

TEST(LpRevision, CardinalityOnSkepticalExample) {
  Alphabet a = pqr();
  SESet p = se_of("p.\nq.\n:- r.", a);
  SESet q = se_of(":- p, q, not r.", a);
  SESet out = cardinality_revise(p, q);
  EXPECT_EQ(out.members(), oracle::cardinality(p.members(), q.members(), 3));
  EXPECT_EQ(out.there_worlds(), ModelSet(3, {P, Q, PQR}));
  for (auto& pp : glp2()) {
    for (auto& qq : glp2()) {
      if (!(pp & qq).empty()) ASSERT_EQ(cardinality_revise(pp, qq), pp & qq);
    }
  }
}

TEST(LpRevision, InvalidSelectionFunctionIsRejected) {
  SelectionFunction empty("empty", [](Interpretation, std::size_t w) { return ModelSet(w); });
  EXPECT_TRUE(empty.violation(2).has_value());
  LPOperator op = LPOperator::prop_based(PropOperator::dalal(), empty);
  try {
    op.apply(SESet(2, {se(P, P)}), SESet(2, {se(Q, Q)}));
    FAIL();
  } catch (const AssignmentViolation& e) {
    EXPECT_NE(std::string(e.what()).find("Y={}"), std::string::npos);
  }
  LPOperator raw = LPOperator::prop_based_unchecked(PropOperator::dalal(), empty);
  EXPECT_TRUE(raw.apply(SESet(2, {se(P, P)}), SESet(2, {se(Q, Q)})).empty());
}

TEST(LpRevision, OperatorNamesAndDomains) {
  EXPECT_EQ(LPOperator::drastic_lp().name(), "drastic-lp");
  EXPECT_EQ(LPOperator::prop_based(PropOperator::dalal(), SelectionFunction::skeptical()).name(), "skeptical:dalal");
  EXPECT_EQ(LPOperator::cardinality().class_domain(), ProgramClass::glp);
  PartedAssignment sk = PartedAssignment::from_prop_based(PropOperator::dalal(), SelectionFunction::skeptical());
  EXPECT_EQ(LPOperator::dlp(sk).class_domain(), ProgramClass::dlp);
  EXPECT_EQ(LPOperator::nlp(sk).class_domain(), ProgramClass::nlp);
  EXPECT_THROW(LPOperator::cardinality().revise(parse_program("p."), parse_program("q.")), AlphabetMismatch);
}

TEST(LpRevision, SelectionLattice) {
  auto sk = SelectionFunction::skeptical();
  auto br = SelectionFunction::brave();
  EXPECT_TRUE(lattice_leq(sk, br, 2));
  EXPECT_FALSE(lattice_leq(br, sk, 2));
  EXPECT_TRUE(lattice_leq(br, br, 2));
  EXPECT_TRUE(lattice_leq(br, sk, 0));
  auto all = all_selection_functions(2);
  EXPECT_EQ(all.size(), 32u);
  for (auto& f : all) {
    EXPECT_FALSE(f.violation(2).has_value());
    EXPECT_TRUE(lattice_leq(sk, f, 2));
    EXPECT_TRUE(lattice_leq(f, br, 2));
  }
}

// Answer sets grow along the lattice: f1 ⊑ f2 gives AS(P ⋆1 Q) ⊆ AS(P ⋆2 Q).
TEST(LpRevision, AnswerSetsAreMonotoneAlongTheLatticeExhaustively) {
  auto fs = all_selection_functions(2);
  for (const PropOperator& circ : {PropOperator::drastic(), PropOperator::dalal()}) {
    auto ops = prop_based_family(circ);
    // answer sets per (operator, pair) as 4-bit masks
    std::vector<std::vector<std::uint8_t>> as(ops.size());
    for (std::size_t k = 0; k < ops.size(); ++k) {
      for (auto& p : glp2()) {
        for (auto& q : glp2()) {
          as[k].push_back(static_cast<std::uint8_t>(as_of(ops[k].apply(p, q)).bits().to_ulong()));
        }
      }
    }
    std::size_t ordered = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (!lattice_leq(fs[i], fs[j], 2)) continue;
        ++ordered;
        for (std::size_t c = 0; c < as[i].size(); ++c) ASSERT_EQ(as[i][c] & ~as[j][c], 0) << i << " " << j;
      }
    }
    EXPECT_EQ(ordered, 1u * 3u * 3u * 27u);
  }
}

TEST(LpRevision, AnswerSetsAreMonotoneAlongTheLatticeOnSampledPairs) {
  std::mt19937_64 rng(31);
  auto sets = sample_sets(3, ProgramClass::glp, 41, 1001);
  for (int trial = 0; trial < 20; ++trial) {
    auto t1 = random_table(rng, 3, nullptr);
    auto t2 = random_table(rng, 3, &t1);
    SelectionFunction f1 = SelectionFunction::from_table("f1", 3, t1);
    SelectionFunction f2 = SelectionFunction::from_table("f2", 3, t2);
    ASSERT_TRUE(lattice_leq(f1, f2, 3));
    for (const PropOperator& circ : {PropOperator::drastic(), PropOperator::dalal()}) {
      LPOperator o1 = LPOperator::prop_based(circ, f1);
      LPOperator o2 = LPOperator::prop_based(circ, f2);
      for (std::size_t i = 0; i + 1 < sets.size(); i += 20) {
        EXPECT_TRUE(as_of(o1.apply(sets[i], sets[i + 1])).subset_of(as_of(o2.apply(sets[i], sets[i + 1]))));
      }
    }
  }
}

TEST(LpRevision, SkepticalAnswerSetsStayWithinTheNewProgram) {
  for (const PropOperator& circ : {PropOperator::drastic(), PropOperator::dalal()}) {
    LPOperator sk = LPOperator::prop_based(circ, SelectionFunction::skeptical());
    for (auto& p : glp2()) {
      for (auto& q : glp2()) {
        if ((p & q).empty()) ASSERT_TRUE(as_of(sk.apply(p, q)).subset_of(as_of(q)));
      }
    }
    auto sets = sample_sets(3, ProgramClass::glp, 43, 1001);
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
      if ((sets[i] & sets[i + 1]).empty()) {
        EXPECT_TRUE(as_of(sk.apply(sets[i], sets[i + 1])).subset_of(as_of(sets[i + 1])));
      }
    }
  }
}

TEST(LpRevision, BraveAnswerSetsArePropositionalRevision) {
  for (const PropOperator& circ : {PropOperator::drastic(), PropOperator::dalal()}) {
    LPOperator br = LPOperator::prop_based(circ, SelectionFunction::brave());
    for (auto& p : glp2()) {
      for (auto& q : glp2()) {
        if ((p & q).empty()) ASSERT_EQ(as_of(br.apply(p, q)), circ.revise(p.there_worlds(), q.there_worlds()));
      }
    }
    auto sets = sample_sets(3, ProgramClass::glp, 47, 1001);
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
      if ((sets[i] & sets[i + 1]).empty()) {
        EXPECT_EQ(as_of(br.apply(sets[i], sets[i + 1])), circ.revise(sets[i].there_worlds(), sets[i + 1].there_worlds()));
      }
    }
  }
}

TEST(LpRevision, SkepticalOperatorsPreserveClassesExhaustively) {
  for (const PropOperator& circ : {PropOperator::drastic(), PropOperator::dalal()}) {
    LPOperator sk = LPOperator::prop_based(circ, SelectionFunction::skeptical());
    PartedAssignment a = PartedAssignment::from_prop_based(circ, SelectionFunction::skeptical());
    for (ProgramClass c : {ProgramClass::nlp, ProgramClass::dlp}) {
      auto sets = enumerate_sets(2, c);
      for (auto& p : sets) {
        for (auto& q : sets) {
          SESet out = sk.apply(p, q);
          ASSERT_TRUE(c == ProgramClass::nlp ? out.hi_closed() : out.complete());
          ASSERT_EQ(class_revise(a, p, q, c), out);
        }
      }
    }
  }
}
