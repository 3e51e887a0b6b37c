#include "serev/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "serev/errors.hpp"
#include "serev/parser.hpp"
#include "serev/sampling.hpp"
#include "serev/semantics.hpp"

namespace serev {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

const std::vector<std::string> kKmIds = {"R1", "R2", "R3", "R4", "R5", "R6"};
const std::vector<std::string> kRaIds = {"RA1", "RA2", "RA3", "RA4", "RA5", "RA6", "WD"};

unsigned worker_count(const CheckMode& mode) {
  unsigned t = mode.threads != 0 ? mode.threads : std::thread::hardware_concurrency();
  return std::max(1u, t);
}

// Evaluates eval(case, pending, violated) over [0, total) on contiguous
// ranges. `pending[k]` tells the callback whether postulate k still needs
// evaluating in this range; it sets `violated[k]`. Returns, per postulate,
// the smallest violating case index (kNone if none), which does not depend
// on the number of workers.
template <typename Eval>
std::vector<std::size_t> scan(std::size_t total, std::size_t ids, unsigned threads, Eval eval) {
  std::vector<std::size_t> best(ids, kNone);
  std::mutex mutex;
  std::exception_ptr error;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));
  std::vector<std::atomic<std::size_t>> global(ids);
  for (auto& g : global) g.store(kNone);
  auto work = [&](std::size_t begin, std::size_t end) {
    try {
      std::vector<std::size_t> local(ids, kNone);
      std::vector<char> pending(ids), violated(ids);
      for (std::size_t i = begin; i < end; ++i) {
        bool any = false;
        for (std::size_t k = 0; k < ids; ++k) {
          pending[k] = local[k] == kNone && global[k].load(std::memory_order_relaxed) > i;
          violated[k] = 0;
          any = any || pending[k];
        }
        if (!any) break;
        eval(i, pending, violated);
        for (std::size_t k = 0; k < ids; ++k) {
          if (pending[k] && violated[k]) {
            local[k] = i;
            std::size_t cur = global[k].load();
            while (i < cur && !global[k].compare_exchange_weak(cur, i)) {
            }
          }
        }
      }
      std::lock_guard lock(mutex);
      for (std::size_t k = 0; k < ids; ++k) best[k] = std::min(best[k], local[k]);
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (threads <= 1) {
    work(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::size_t begin = std::min(total, t * chunk);
      std::size_t end = std::min(total, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return best;
}

template <typename F>
void parallel_for(std::size_t total, unsigned threads, F f) {
  scan(total, 1, threads, [&](std::size_t i, std::vector<char>&, std::vector<char>&) { f(i); });
}

Alphabet placeholder_alphabet(std::size_t width) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < width; ++i) names.push_back("x" + std::to_string(i));
  return Alphabet(names);
}

ModelSet copy_of(const ModelSet& m) { return ModelSet(m.width(), m.members()); }

SESet in_class(const SESet& s, ProgramClass c) {
  switch (c) {
    case ProgramClass::glp: return s;
    case ProgramClass::dlp: return closure(s, ClosureTarget::complete);
    case ProgramClass::nlp: return closure(s, ClosureTarget::hi_closed);
  }
  return s;
}

// Syntactic variant of the canonical program for `s`.
SESet through_variant(const SESet& s, ProgramClass c, const Alphabet& alphabet) {
  return se_models(with_tautology(synthesize(s, c, alphabet)));
}

bool ra4_violated(const LPOperator& op, const SESet& p, const SESet& q, const SESet& result) {
  const Alphabet alphabet = placeholder_alphabet(q.width());
  const ProgramClass c = op.class_domain();
  SESet p2 = through_variant(p, c, alphabet);
  SESet q2 = through_variant(q, c, alphabet);
  return op.apply(p2, q2) != result;
}

std::vector<PostulateReport> make_reports(const std::vector<std::string>& ids, const std::vector<std::size_t>& counts) {
  std::vector<PostulateReport> out;
  for (std::size_t k = 0; k < ids.size(); ++k) out.push_back(PostulateReport{ids[k], true, counts[k], {}, {}});
  return out;
}

std::uint64_t pack(const SESet& s) { return s.bits().to_ulong(); }

}  // namespace

bool km_violated(const std::string& id, const PropOperator& op, const KmCase& c) {
  const ModelSet rev = op.revise(c.phi, c.psi1);
  if (id == "R1") return !rev.subset_of(c.psi1);
  if (id == "R2") {
    ModelSet both = c.phi & c.psi1;
    return !both.empty() && rev != both;
  }
  if (id == "R3") return !c.psi1.empty() && rev.empty();
  if (id == "R4") return op.revise(copy_of(c.phi), copy_of(c.psi1)) != rev;
  const ModelSet lhs = rev & c.psi2;
  const ModelSet rhs = op.revise(c.phi, c.psi1 & c.psi2);
  if (id == "R5") return !lhs.subset_of(rhs);
  if (id == "R6") return !lhs.empty() && !rhs.subset_of(lhs);
  throw Error("unknown postulate " + id);
}

bool ra_violated(const std::string& id, const LPOperator& op, const RaCase& c) {
  const SESet rev = op.apply(c.p, c.q);
  if (id == "WD") return !rev.well_defined();
  if (id == "RA1") return !rev.subset_of(c.q);
  if (id == "RA2") {
    SESet both = c.p & c.q;
    return !both.empty() && rev != both;
  }
  if (id == "RA3") return !c.q.empty() && rev.empty();
  if (id == "RA4") return ra4_violated(op, c.p, c.q, rev);
  const SESet lhs = rev & c.r;
  const SESet rhs = op.apply(c.p, c.q & c.r);
  if (id == "RA5") return !lhs.subset_of(rhs);
  if (id == "RA6") return !lhs.empty() && !rhs.subset_of(lhs);
  throw Error("unknown postulate " + id);
}

bool replay(const PropOperator& op, const PostulateReport& r) {
  return !r.pass && r.km_witness && km_violated(r.id, op, *r.km_witness);
}

bool replay(const LPOperator& op, const PostulateReport& r) {
  return !r.pass && r.ra_witness && ra_violated(r.id, op, *r.ra_witness);
}

bool all_pass(const std::vector<PostulateReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

std::vector<PostulateReport> check_km(const PropOperator& op, std::size_t width, CheckMode mode) {
  const unsigned threads = worker_count(mode);
  if (mode.exhaustive) {
    if (width > 2) throw Error("exhaustive KM checks support at most 2 atoms");
    const auto sets = enumerate_model_sets(width);
    const std::size_t n = sets.size();
    std::vector<ModelSet> table(n * n);
    parallel_for(n * n, threads, [&](std::size_t i) { table[i] = op.revise(sets[i / n], sets[i % n]); });
    // Model sets are enumerated by mask, so ψ1 ∧ ψ2 is found by its mask.
    auto index = [&](const ModelSet& m) { return static_cast<std::size_t>(m.bits().to_ulong()); };
    auto pairs = scan(n * n, 4, threads, [&](std::size_t i, std::vector<char>& pending, std::vector<char>& bad) {
      const ModelSet& phi = sets[i / n];
      const ModelSet& psi = sets[i % n];
      const ModelSet& rev = table[i];
      if (pending[0]) bad[0] = !rev.subset_of(psi);
      if (pending[1]) {
        ModelSet both = phi & psi;
        bad[1] = !both.empty() && rev != both;
      }
      if (pending[2]) bad[2] = !psi.empty() && rev.empty();
      if (pending[3]) bad[3] = op.revise(copy_of(phi), copy_of(psi)) != rev;
    });
    auto triples = scan(n * n * n, 2, threads, [&](std::size_t i, std::vector<char>& pending, std::vector<char>& bad) {
      const std::size_t f = i / (n * n), a = (i / n) % n, b = i % n;
      const ModelSet lhs = table[f * n + a] & sets[b];
      const ModelSet& rhs = table[f * n + index(sets[a] & sets[b])];
      if (pending[0]) bad[0] = !lhs.subset_of(rhs);
      if (pending[1]) bad[1] = !lhs.empty() && !rhs.subset_of(lhs);
    });
    auto reports = make_reports(kKmIds, {n * n, n * n, n * n, n * n, n * n * n, n * n * n});
    for (std::size_t k = 0; k < 6; ++k) {
      std::size_t at = k < 4 ? pairs[k] : triples[k - 4];
      if (at == kNone) continue;
      reports[k].pass = false;
      if (k < 4) {
        reports[k].km_witness = KmCase{sets[at / n], sets[at % n], ModelSet::all(width)};
      } else {
        reports[k].km_witness = KmCase{sets[at / (n * n)], sets[(at / n) % n], sets[at % n]};
      }
    }
    return reports;
  }
  const auto draws = sample_model_sets(width, mode.seed, 3 * mode.count);
  auto found = scan(mode.count, 6, threads, [&](std::size_t i, std::vector<char>& pending, std::vector<char>& bad) {
    KmCase c{draws[3 * i], draws[3 * i + 1], draws[3 * i + 2]};
    for (std::size_t k = 0; k < 6; ++k) {
      if (pending[k]) bad[k] = km_violated(kKmIds[k], op, c);
    }
  });
  auto reports = make_reports(kKmIds, std::vector<std::size_t>(6, mode.count));
  for (std::size_t k = 0; k < 6; ++k) {
    if (found[k] == kNone) continue;
    reports[k].pass = false;
    const std::size_t i = found[k];
    reports[k].km_witness = KmCase{draws[3 * i], draws[3 * i + 1], draws[3 * i + 2]};
  }
  return reports;
}

std::vector<PostulateReport> check_ra(const LPOperator& op, std::size_t width, CheckMode mode) {
  const unsigned threads = worker_count(mode);
  const ProgramClass c = op.class_domain();
  const Alphabet alphabet = placeholder_alphabet(width);
  std::vector<PostulateReport> reports;
  if (mode.exhaustive) {
    if (width > 2) throw Error("exhaustive RA checks support at most 2 atoms");
    std::vector<SESet> sets = enumerate_sets(width, c);
    const std::size_t n = sets.size();
    parallel_for(n, threads, [&](std::size_t i) { sets[i] = se_models(synthesize(sets[i], c, alphabet)); });
    std::vector<SESet> table(n * n);
    parallel_for(n * n, threads, [&](std::size_t i) { table[i] = op.apply(sets[i / n], sets[i % n]); });
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(pack(sets[i]), i);
    std::vector<std::uint64_t> packed_sets(n), packed_table(n * n);
    for (std::size_t i = 0; i < n; ++i) packed_sets[i] = pack(sets[i]);
    for (std::size_t i = 0; i < n * n; ++i) packed_table[i] = pack(table[i]);
    std::vector<std::size_t> meet(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = index.find(packed_sets[a] & packed_sets[b]);
        if (it == index.end()) throw Error("class not closed under intersection");
        meet[a * n + b] = it->second;
      }
    }
    auto pairs = scan(n * n, 5, threads, [&](std::size_t i, std::vector<char>& pending, std::vector<char>& bad) {
      const SESet& p = sets[i / n];
      const SESet& q = sets[i % n];
      const SESet& rev = table[i];
      if (pending[0]) bad[0] = !rev.subset_of(q);
      if (pending[1]) {
        SESet both = p & q;
        bad[1] = !both.empty() && rev != both;
      }
      if (pending[2]) bad[2] = !q.empty() && rev.empty();
      if (pending[3]) bad[3] = ra4_violated(op, p, q, rev);
      if (pending[4]) bad[4] = !rev.well_defined();
    });
    auto triples = scan(n * n * n, 2, threads, [&](std::size_t i, std::vector<char>& pending, std::vector<char>& bad) {
      const std::size_t p = i / (n * n), q = (i / n) % n, r = i % n;
      const std::uint64_t lhs = packed_table[p * n + q] & packed_sets[r];
      const std::uint64_t rhs = packed_table[p * n + meet[q * n + r]];
      if (pending[0]) bad[0] = (lhs & ~rhs) != 0;
      if (pending[1]) bad[1] = lhs != 0 && (rhs & ~lhs) != 0;
    });
    const std::size_t n2 = n * n, n3 = n * n * n;
    reports = make_reports(kRaIds, {n2, n2, n2, n2, n3, n3, n2});
    for (std::size_t k = 0; k < 7; ++k) {
      std::size_t at = k < 4 ? pairs[k] : k < 6 ? triples[k - 4] : pairs[4];
      if (at == kNone) continue;
      reports[k].pass = false;
      if (k < 4 || k == 6) {
        reports[k].ra_witness = RaCase{sets[at / n], sets[at % n], SESet::all(width)};
      } else {
        reports[k].ra_witness = RaCase{sets[at / n2], sets[(at / n) % n], sets[at % n]};
      }
    }
  } else {
    const auto draws = sample_sets(width, c, mode.seed, 3 * mode.count);
    std::vector<SESet> inputs(draws.size());
    parallel_for(draws.size(), threads,
                 [&](std::size_t i) { inputs[i] = se_models(synthesize(draws[i], c, alphabet)); });
    auto found = scan(mode.count, 7, threads, [&](std::size_t i, std::vector<char>& pending, std::vector<char>& bad) {
      RaCase rc{inputs[3 * i], inputs[3 * i + 1], inputs[3 * i + 2]};
      for (std::size_t k = 0; k < 7; ++k) {
        if (pending[k]) bad[k] = ra_violated(kRaIds[k], op, rc);
      }
    });
    reports = make_reports(kRaIds, std::vector<std::size_t>(7, mode.count));
    for (std::size_t k = 0; k < 7; ++k) {
      if (found[k] == kNone) continue;
      reports[k].pass = false;
      const std::size_t i = found[k];
      reports[k].ra_witness = RaCase{inputs[3 * i], inputs[3 * i + 1], inputs[3 * i + 2]};
    }
  }
  if (reports.back().pass) reports.pop_back();
  return reports;
}

PartedAssignment extract_assignment(const LPOperator& op, std::size_t width) {
  const ProgramClass c = op.class_domain();
  auto preorder = [op, width, c](const ModelSet& models) {
    if (models.width() != width) throw AlphabetMismatch("model set width differs from the extraction width");
    const SESet p = in_class(SESet::diagonal(models), c);
    const std::size_t n = interpretation_count(width);
    std::vector<char> leq(n * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        SESet q(width, {SEInterpretation{Interpretation{a}, Interpretation{a}},
                        SEInterpretation{Interpretation{b}, Interpretation{b}}});
        leq[a * n + b] = op.apply(p, in_class(q, c)).contains({Interpretation{a}, Interpretation{a}});
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!leq[a * n + b] && !leq[b * n + a]) {
          throw AssignmentViolation("total", "extracted relation is not total");
        }
        for (std::size_t d = 0; d < n; ++d) {
          if (leq[a * n + b] && leq[b * n + d] && !leq[a * n + d]) {
            throw AssignmentViolation("transitive", "extracted relation is not transitive");
          }
        }
      }
    }
    std::vector<std::uint32_t> ranks(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (leq[b * n + a] && !leq[a * n + b]) ++ranks[a];
      }
    }
    return TotalPreorder(width, std::move(ranks)).normalized();
  };
  auto here = [op](const SESet& p, Interpretation y) {
    ModelSet out(p.width());
    for_each_subset(y, [&](AtomSet x) {
      SESet q(p.width(), {SEInterpretation{x, y}, SEInterpretation{y, y}});
      if (op.apply(p, q).contains({x, y})) out.insert(x);
    });
    return out;
  };
  return PartedAssignment("extracted:" + op.name(), preorder, here);
}

CompliantPreorder::CompliantPreorder(std::size_t width, std::vector<std::uint32_t> ranks)
    : width_(width), ranks_(std::move(ranks)) {
  if (ranks_.size() != se_offsets(width).back()) throw Error("compliant preorder needs one rank per SE interpretation");
}

SESet CompliantPreorder::min(const SESet& s) const {
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  s.for_each([&](SEInterpretation p) { best = std::min(best, rank(p)); });
  SESet out(width_);
  s.for_each([&](SEInterpretation p) {
    if (rank(p) == best) out.insert(p);
  });
  return out;
}

bool CompliantPreorder::same_order(const CompliantPreorder& other) const {
  if (width_ != other.width_) return false;
  const std::size_t n = ranks_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((ranks_[i] <= ranks_[j]) != (other.ranks_[i] <= other.ranks_[j])) return false;
    }
  }
  return true;
}

namespace {

std::vector<CompliantPreorder> build_compliant(const PartedAssignment& a, const SESet& p) {
  a.check(p);
  const std::size_t width = p.width();
  const TotalPreorder order = a.preorder(p.there_worlds()).normalized();
  const std::uint32_t top = order.max_rank();
  const std::size_t size = se_offsets(width).back();
  // Base, then irrelevant pairs just above (Y, Y), two levels above it, and
  // above everything ordered by Y.
  std::vector<std::vector<std::uint32_t>> ranks(4, std::vector<std::uint32_t>(size));
  for (std::uint32_t bits = 0; bits < interpretation_count(width); ++bits) {
    Interpretation y{bits};
    const std::uint32_t r = order.rank(y);
    const ModelSet chosen = a.here(p, y);
    for_each_subset(y, [&](AtomSet x) {
      const std::size_t i = se_index(width, {x, y});
      if (chosen.contains(x)) {
        ranks[0][i] = r;
        for (std::size_t v = 1; v < 4; ++v) ranks[v][i] = 2 * r;
      } else {
        ranks[0][i] = top + 1;
        ranks[1][i] = 2 * r + 1;
        ranks[2][i] = 2 * r + 3;
        ranks[3][i] = 2 * top + 2 + r;
      }
    });
  }
  std::vector<CompliantPreorder> out;
  for (auto& v : ranks) out.emplace_back(width, std::move(v));
  return out;
}

}  // namespace

CompliantPreorder compliant_from_parted(const PartedAssignment& a, const SESet& p) {
  return build_compliant(a, p).front();
}

std::vector<CompliantPreorder> compliant_variants(const PartedAssignment& a, const SESet& p) {
  return build_compliant(a, p);
}

std::optional<std::string> compliant_violation(const CompliantPreorder& c, const SESet& p) {
  const std::size_t width = p.width();
  std::optional<std::uint32_t> level;
  std::optional<std::string> bad;
  p.for_each([&](SEInterpretation s) {
    if (!level) level = c.rank(s);
    if (!bad && c.rank(s) != *level) bad = "(1)";
  });
  if (bad) return bad;
  for (std::uint32_t bits = 0; bits < interpretation_count(width); ++bits) {
    Interpretation y{bits};
    for_each_subset(y, [&](AtomSet x) {
      if (bad) return;
      if (level && !p.contains({x, y}) && c.rank({x, y}) <= *level) bad = "(2)";
      else if (c.rank({y, y}) > c.rank({x, y})) bad = "(4)";
    });
  }
  return bad;
}

bool sigma_related(const CompliantPreorder& c, const PartedAssignment& a, const SESet& p) {
  const std::size_t width = p.width();
  const TotalPreorder order = a.preorder(p.there_worlds());
  const std::size_t n = interpretation_count(width);
  for (std::uint32_t y = 0; y < n; ++y) {
    Interpretation iy{y};
    for (std::uint32_t y2 = 0; y2 < n; ++y2) {
      Interpretation iy2{y2};
      if ((c.rank({iy, iy}) <= c.rank({iy2, iy2})) != order.leq(iy, iy2)) return false;
    }
    const ModelSet chosen = a.here(p, iy);
    bool ok = true;
    for_each_subset(iy, [&](AtomSet x) {
      if ((c.rank({x, iy}) <= c.rank({iy, iy})) != chosen.contains(x)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<std::size_t> compliant_mismatch(const CompliantPreorder& c, const PartedAssignment& a,
                                              const SESet& p, const std::vector<SESet>& qs) {
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (c.min(qs[i]) != parted_revise(a, p, qs[i])) return i;
  }
  return std::nullopt;
}

namespace {

// Q = {(X, Y), (Y, Y)} and P = diagonal of every interpretation but Y.
ProgramPair single_world_pair(std::size_t width, Interpretation x, Interpretation y) {
  ModelSet others = ModelSet::all(width);
  others.erase(y);
  return ProgramPair{SESet::diagonal(others), SESet(width, {SEInterpretation{x, y}, SEInterpretation{y, y}})};
}

// First (X, Y), X ⊊ Y, with X ∈ keep(Y) and X ∉ drop(Y).
template <typename Keep, typename Drop>
std::optional<ProgramPair> first_separating(std::size_t width, Keep keep, Drop drop) {
  for (std::uint32_t bits = 0; bits < interpretation_count(width); ++bits) {
    Interpretation y{bits};
    const ModelSet k = keep(y);
    const ModelSet d = drop(y);
    std::optional<ProgramPair> found;
    for_each_subset(y, [&](AtomSet x) {
      if (!found && x != y && k.contains(x) && !d.contains(x)) found = single_world_pair(width, x, y);
    });
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ProgramPair> distinguishing_pair(const LPOperator& a, const LPOperator& b, std::size_t width) {
  if (a.selection() && b.selection()) {
    const SelectionFunction& fa = *a.selection();
    const SelectionFunction& fb = *b.selection();
    auto eval_a = [&](Interpretation y) { return fa.eval(y, width); };
    auto eval_b = [&](Interpretation y) { return fb.eval(y, width); };
    if (auto w = first_separating(width, eval_a, eval_b)) return w;
    if (auto w = first_separating(width, eval_b, eval_a)) return w;
    const PropOperator& ca = *a.prop_operator();
    const PropOperator& cb = *b.prop_operator();
    const auto sets = enumerate_model_sets(std::min<std::size_t>(width, 3));
    if (width <= 3) {
      for (const auto& phi : sets) {
        for (const auto& psi : sets) {
          if ((phi & psi).empty() && ca.revise(phi, psi) != cb.revise(phi, psi)) {
            return ProgramPair{SESet::diagonal(phi), SESet::diagonal(psi)};
          }
        }
      }
    }
    return std::nullopt;
  }
  if (width > 2) throw Error("generic operator comparison supports at most 2 atoms");
  const auto sets = enumerate_sets(width, ProgramClass::glp);
  for (const auto& p : sets) {
    for (const auto& q : sets) {
      if (a.apply(p, q) != b.apply(p, q)) return ProgramPair{p, q};
    }
  }
  return std::nullopt;
}

std::optional<ProgramPair> lattice_witness(const SelectionFunction& f1, const SelectionFunction& f2,
                                           std::size_t width) {
  return first_separating(
      width, [&](Interpretation y) { return f2.eval(y, width); }, [&](Interpretation y) { return f1.eval(y, width); });
}

std::optional<ProgramPair> skeptical_witness(const SelectionFunction& f, std::size_t width) {
  const SelectionFunction all = SelectionFunction::skeptical();
  return first_separating(
      width, [&](Interpretation y) { return all.eval(y, width); }, [&](Interpretation y) { return f.eval(y, width); });
}

}  // namespace serev
