// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance run: one line per criterion, PASS or FAIL, plus a short summary.
// Every job is run twice and its report compared byte for byte.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commlab/ceq.hpp"
#include "commlab/commutator.hpp"
#include "commlab/congruence.hpp"
#include "commlab/constructions.hpp"
#include "commlab/int_lattice.hpp"
#include "commlab/linear.hpp"
#include "commlab/malcev.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace commlab;
using testing::corpus;
using testing::corpus_names;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;  // one line
  std::string report;   // full deterministic transcript
};

class Job {
 public:
  void fail(const std::string& why) {
    if (out_.pass) first_failure_ = why;
    out_.pass = false;
    log("FAIL " + why);
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  void log(const std::string& line) { transcript_ << line << '\n'; }
  Outcome finish(std::string summary) {
    out_.summary = out_.pass ? std::move(summary) : first_failure_;
    out_.report = transcript_.str();
    return out_;
  }

 private:
  Outcome out_;
  std::string first_failure_;
  std::ostringstream transcript_;
};

std::string yes(bool b) { return b ? "yes" : "no"; }
std::string verdict(Verdict v) {
  return v == Verdict::Yes ? "yes" : v == Verdict::No ? "no" : "unknown";
}

std::vector<std::string> semilattices() {
  return {"s2", "c3", "c4", "free2", "diamond", "claw", "tree"};
}

std::vector<std::string> groups() {
  std::vector<std::string> out = {"z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8",
                                  "z2xz2", "z4xz2", "z2xz2xz2", "s3", "d4", "q8"};
  return out;
}

std::string pair_label(const std::string& name, const Partition& a, const Partition& b) {
  return name + " alpha=" + a.to_string() + " beta=" + b.to_string();
}

// 1. tc <= sym <= lin <= meet on sampled binary tables and the corpus.
Outcome chain_job() {
  Job job;
  std::vector<Algebra> algebras;
  std::mt19937_64 rng(20260101);
  std::set<std::uint64_t> codes;
  while (codes.size() < 1000) codes.insert(rng() % 19683);
  for (auto code : codes) algebras.push_back(oracle::binary_algebra(3, code));
  for (const auto& name : corpus_names()) algebras.push_back(corpus(name));
  std::size_t pairs = 0;
  for (const auto& alg : algebras) {
    const ConLattice lat = congruence_lattice(alg);
    std::ostringstream line;
    line << alg.name() << ":";
    for (const auto& a : lat.elements()) {
      for (const auto& b : lat.elements()) {
        CommutatorChain c = commutator_chain(alg, a, b);
        ++pairs;
        line << ' ' << c.tc.to_string() << '/' << c.sym.to_string() << '/' << c.lin.to_string();
        job.expect(c.tc.leq(c.sym) && c.sym.leq(c.lin) && c.lin.leq(meet(a, b)),
                   "chain broken on " + pair_label(alg.name(), a, b));
      }
    }
    job.log(line.str());
  }
  return job.finish(std::to_string(algebras.size()) + " algebras, " + std::to_string(pairs) +
                    " pairs");
}

// 2. Groups: all three commutators agree with the subgroup commutator.
Outcome group_job() {
  Job job;
  std::size_t pairs = 0;
  for (const auto& name : groups()) {
    Algebra g = corpus(name);
    const ConLattice lat = congruence_lattice(g);
    for (const auto& a : lat.elements()) {
      for (const auto& b : lat.elements()) {
        CommutatorChain c = commutator_chain(g, a, b);
        Partition expected = oracle::group_commutator(g, a, b);
        ++pairs;
        job.log(pair_label(name, a, b) + " -> " + expected.to_string());
        job.expect(c.tc == expected && c.sym == expected && c.lin == expected,
                   "group commutator mismatch on " + pair_label(name, a, b));
      }
    }
  }
  return job.finish(std::to_string(groups().size()) + " groups, " + std::to_string(pairs) +
                    " pairs");
}

// 3. Semilattices are neutral: every commutator is the meet.
Outcome semilattice_job() {
  Job job;
  std::size_t pairs = 0;
  for (const char* name : {"s2", "c3", "c4", "free2"}) {
    Algebra s = corpus(name);
    const ConLattice lat = congruence_lattice(s);
    for (const auto& a : lat.elements()) {
      for (const auto& b : lat.elements()) {
        CommutatorChain c = commutator_chain(s, a, b);
        Partition m = meet(a, b);
        ++pairs;
        job.log(pair_label(name, a, b) + " -> " + c.tc.to_string());
        job.expect(c.tc == m && c.sym == m && c.lin == m,
                   "not neutral on " + pair_label(name, a, b));
      }
    }
  }
  return job.finish("4 semilattices, " + std::to_string(pairs) + " pairs");
}

// 4. Affine reducts are abelian, quasi-affine and affine.
Outcome affine_job() {
  Job job;
  for (const char* name : {"aff_z2", "aff_z3", "aff_z4", "aff_z2xz2"}) {
    Algebra a = corpus(name);
    Classification c = classify(a);
    Partition one = Partition::total(a.size());
    Partition lin = lin_commutator(a, one, one);
    job.log(std::string(name) + " abelian=" + yes(c.abelian) + " quasi-affine=" +
            yes(c.quasi_affine) + " affine=" + verdict(c.affine) + " lin=" + lin.to_string() +
            (c.malcev_term ? " term=" + c.malcev_term->to_string() : ""));
    job.expect(c.abelian && c.quasi_affine && c.affine == Verdict::Yes && lin.is_equality(),
               std::string("misclassified ") + name);
  }
  return job.finish("4 reducts classified abelian, quasi-affine, affine");
}

// 5. Witnesses re-sum, re-verify and pass the labelling checks.
Outcome witness_job() {
  Job job;
  struct Case {
    Algebra alg;
    Partition alpha, beta;
    Elem u, v;
  };
  std::vector<Case> pool;
  std::mt19937_64 rng(5150);
  std::vector<Algebra> algebras;
  for (const auto& name : testing::small_corpus_names(6)) algebras.push_back(corpus(name));
  for (int i = 0; i < 40; ++i) {
    algebras.push_back(oracle::random_algebra(rng, 2 + rng() % 3, {2}, "rand" + std::to_string(i)));
  }
  for (const auto& alg : algebras) {
    const ConLattice lat = congruence_lattice(alg);
    for (const auto& a : lat.elements()) {
      for (const auto& b : lat.elements()) {
        Partition lin = lin_commutator(alg, a, b);
        for (Elem u = 0; u < alg.size(); ++u) {
          for (Elem v = 0; v < alg.size(); ++v) {
            if (u != v && lin.related(u, v)) pool.push_back({alg, a, b, u, v});
          }
        }
      }
    }
  }
  if (pool.size() < 100) job.fail("only " + std::to_string(pool.size()) + " candidate pairs");
  std::size_t total_quads = 0;
  for (int k = 0; k < 100 && !pool.empty(); ++k) {
    const Case& c = pool[rng() % pool.size()];
    const std::size_t n = c.alg.size();
    const std::string label = pair_label(c.alg.name(), c.alpha, c.beta) + " pair " +
                              std::to_string(c.u) + "," + std::to_string(c.v);
    MatrixSet ms = alpha_beta_matrices(c.alg, c.alpha, c.beta);
    LinWitness w = lin_witness(c.alg, ms, c.u, c.v);
    total_quads += w.quads.size();
    // Re-sum a - b - c + d by hand.
    std::vector<long long> sum(n, 0);
    for (const Quad& q : w.quads) {
      sum[q.a] += 1;
      sum[q.b] -= 1;
      sum[q.c] -= 1;
      sum[q.d] += 1;
    }
    std::vector<long long> target(n, 0);
    target[c.v] += 1;
    target[c.u] -= 1;
    job.expect(sum == target, "witness does not telescope: " + label);
    // Membership against the independent closure.
    auto reference = oracle::matrices(c.alg, c.alpha, c.beta);
    for (const Quad& q : w.quads) {
      job.expect(reference.count({q.a, q.b, q.c, q.d}) == 1,
                 "quad " + to_string(q) + " not a matrix: " + label);
    }
    LabellingWitness lw = labelling_witness(w);
    auto problem = check_labelling_witness(ms, lw);
    job.expect(!problem, "labelling rejected (" + problem.value_or("") + "): " + label);
    LabellingWitness back = parse_labelling_witness(format_labelling_witness(lw));
    job.expect(!check_labelling_witness(ms, back), "labelling does not round-trip: " + label);
    job.log(label + " quads=" + std::to_string(w.quads.size()));
  }
  return job.finish("100 witnesses from " + std::to_string(pool.size()) + " candidates, " +
                    std::to_string(total_quads) + " matrices");
}

// 6. Lattice membership against the bounded exhaustive oracle.
Outcome hnf_job() {
  Job job;
  std::mt19937_64 rng(606);
  auto entry = [&] { return static_cast<std::int64_t>(rng() % 7) - 3; };
  std::size_t yes = 0, no = 0, unknown = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t count = 1 + rng() % 5;
    std::vector<oracle::IntVec> gens(count, oracle::IntVec(5));
    IntLattice lattice(5);
    for (auto& g : gens) {
      for (auto& x : g) x = entry();
      lattice.add(IntVector(g.begin(), g.end()));
    }
    // Half the targets are small combinations, the rest arbitrary.
    oracle::IntVec target(5, 0);
    if (round % 2 == 0) {
      for (const auto& g : gens) {
        const std::int64_t c = static_cast<std::int64_t>(rng() % 5) - 2;
        for (std::size_t i = 0; i < 5; ++i) target[i] += c * g[i];
      }
    } else {
      for (auto& x : target) x = entry();
    }
    const bool member = lattice.contains(IntVector(target.begin(), target.end()));
    const auto verdict = oracle::bounded_membership(gens, target, 6);
    std::ostringstream line;
    line << "lattice " << round << " member=" << member << " oracle="
         << (verdict == oracle::Membership::Yes  ? "yes"
             : verdict == oracle::Membership::No ? "no"
                                                 : "unknown");
    job.log(line.str());
    switch (verdict) {
      case oracle::Membership::Yes:
        ++yes;
        job.expect(member, "lattice " + std::to_string(round) + ": oracle found a combination");
        break;
      case oracle::Membership::No:
        ++no;
        job.expect(!member, "lattice " + std::to_string(round) + ": oracle proved non-membership");
        break;
      case oracle::Membership::Unknown:
        ++unknown;
        break;
    }
  }
  return job.finish("200 lattices: " + std::to_string(yes) + " in, " + std::to_string(no) +
                    " out, " + std::to_string(unknown) + " inconclusive");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// 7. The synthesized inclusion holds on semilattices and fails on the bare
// four-element set at exactly (a, b).
Outcome inclusion_job() {
  Job job;
  InclusionData data = parse_inclusion_data(slurp(testing::data_dir() / "commutative.incl"));
  job.expect(data.n == 2, "expected two rows of data");
  ceq::Statement s = synthesize_congruence_inclusion(data);
  job.log(ceq::to_string(s));
  for (const auto& name : semilattices()) {
    Algebra a = corpus(name);
    auto check = ceq::check_universal(a, s, congruence_lattice(a));
    job.log(name + " holds=" + (check.holds ? "yes" : "no") + " assignments=" +
            std::to_string(check.assignments));
    job.expect(check.holds, "inclusion fails on " + name);
  }
  InclusionCounterexample cx = inclusion_counterexample(data);
  job.expect(cx.set.size() == 4 && cx.set.num_ops() == 0, "counterexample is not a bare 4-set");
  ceq::BinRel lhs = ceq::evaluate(cx.set, s.family, *s.lhs, cx.env);
  ceq::BinRel rhs = ceq::evaluate(cx.set, s.family, *s.rhs, cx.env);
  std::vector<std::pair<Elem, Elem>> excess;
  for (Elem x = 0; x < 4; ++x) {
    for (Elem y = 0; y < 4; ++y) {
      if (lhs.related(x, y) && !rhs.related(x, y)) excess.emplace_back(x, y);
    }
  }
  std::ostringstream line;
  line << "counterexample rhs=" << cx.rhs.to_string() << " excess=";
  for (auto [x, y] : excess) line << '(' << x << ',' << y << ')';
  job.log(line.str());
  job.expect(cx.violated(), "counterexample does not violate the inclusion");
  job.expect(excess == std::vector<std::pair<Elem, Elem>>{{cx.a, cx.b}},
             "violation is not exactly the pair (a,b)");
  return job.finish("holds on " + std::to_string(semilattices().size()) +
                    " semilattices; fails only at (a,b) on the 4-element set");
}

// 8. Square criterion: all three meets zero and sym zero imply lin zero.
Outcome square_job() {
  Job job;
  std::size_t tested = 0, predicted = 0;
  for (const auto& name : corpus_names()) {
    Algebra alg = corpus(name);
    const ConLattice lat = congruence_lattice(alg);
    for (const auto& a : lat.elements()) {
      for (const auto& b : lat.elements()) {
        if (!sym_commutator(alg, a, b).is_equality()) continue;
        ++tested;
        SquareCriterion sc = square_criterion(alg, a, b);
        Partition lin = lin_commutator(alg, a, b);
        job.log(pair_label(name, a, b) + " zero=" +
                (sc.all_zero() ? std::string("yes") : std::string("no")) +
                " lin=" + lin.to_string());
        if (sc.predicts_linear_zero()) {
          ++predicted;
          job.expect(lin.is_equality(), "criterion predicted zero but lin is " + lin.to_string() +
                                            " on " + pair_label(name, a, b));
        }
      }
    }
  }
  return job.finish(std::to_string(tested) + " pairs with sym zero, " +
                    std::to_string(predicted) + " predicted lin zero, no counterexample");
}

// 9. A Taylor term forces sym = lin.
Outcome taylor_job() {
  Job job;
  std::size_t with_term = 0, inconclusive = 0;
  for (const auto& name : corpus_names()) {
    Algebra alg = corpus(name);
    TaylorSearch t = find_taylor_term(alg, 3, ClosureOptions{200'000});
    job.log(name + " taylor=" +
            (t.certificate ? t.certificate->term->to_string() : std::string("none")) +
            (t.budget_note ? " (" + *t.budget_note + ")" : ""));
    if (t.budget_note) ++inconclusive;
    if (!t.certificate) continue;
    ++with_term;
    const ConLattice lat = congruence_lattice(alg);
    for (const auto& a : lat.elements()) {
      for (const auto& b : lat.elements()) {
        CommutatorChain c = commutator_chain(alg, a, b);
        job.expect(c.sym == c.lin, "sym != lin on " + pair_label(name, a, b));
      }
    }
  }
  return job.finish(std::to_string(with_term) + " corpus algebras with a term, sym = lin on all; " +
                    std::to_string(inconclusive) + " searches stopped by the budget");
}

// 10. A gap between sym and lin survives in the quotient by sym.
Outcome quotient_job() {
  Job job;
  std::vector<Algebra> algebras;
  for (const auto& name : corpus_names()) algebras.push_back(corpus(name));
  std::mt19937_64 rng(1010);
  for (int i = 0; i < 200; ++i) {
    algebras.push_back(oracle::random_algebra(rng, 3 + rng() % 2, {2}, "rand" + std::to_string(i)));
  }
  std::size_t pairs = 0, gaps = 0;
  for (const auto& alg : algebras) {
    const ConLattice lat = congruence_lattice(alg);
    for (const auto& a : lat.elements()) {
      for (const auto& b : lat.elements()) {
        ++pairs;
        CommutatorChain c = commutator_chain(alg, a, b);
        if (!c.gap()) continue;
        ++gaps;
        Quotient q = quotient_algebra(alg, c.sym);
        Partition qa = image_partition(q, a), qb = image_partition(q, b);
        Partition qs = sym_commutator(q.algebra, qa, qb);
        Partition ql = lin_commutator(q.algebra, qa, qb);
        job.log(pair_label(alg.name(), a, b) + " sym=" + c.sym.to_string() + " lin=" +
                c.lin.to_string() + " image lin=" + ql.to_string());
        job.expect(qs.is_equality() && !ql.is_equality(),
                   "gap lost in the quotient on " + pair_label(alg.name(), a, b));
      }
    }
  }
  return job.finish(std::to_string(pairs) + " pairs searched, " + std::to_string(gaps) +
                    " gaps, all preserved in the quotient");
}

// 11. Weak difference terms.
Outcome wdiff_job() {
  Job job;
  for (const char* name : {"z4", "set2", "s2"}) {
    Algebra alg = corpus(name);
    DifferenceSearch d = find_difference_term(alg);
    job.log(std::string(name) + " term=" + (d.term ? d.term->to_string() : "none") +
            " candidates=" + std::to_string(d.candidates));
    const bool want = std::string(name) != "set2";
    job.expect(static_cast<bool>(d.term) == want,
               std::string(name) + (want ? ": no term found" : ": unexpected term"));
    if (d.term) {
      DifferenceChecker checker(alg);
      job.expect(!checker.weak(d.table), std::string(name) + ": term fails the check");
    }
  }
  return job.finish("z4 and s2 have a weak difference term, set2 has none");
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> job;
  };
  const std::vector<Criterion> criteria = {
      {1, "commutator chain", chain_job},
      {2, "group oracle", group_job},
      {3, "semilattice neutrality", semilattice_job},
      {4, "affine reducts", affine_job},
      {5, "witness soundness", witness_job},
      {6, "lattice membership", hnf_job},
      {7, "inclusion synthesis", inclusion_job},
      {8, "square criterion", square_job},
      {9, "taylor term gives sym = lin", taylor_job},
      {10, "quotient keeps the gap", quotient_job},
      {11, "weak difference term", wdiff_job},
  };

  bool all = true;
  bool deterministic = true;
  std::size_t report_bytes = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome first, second;
    try {
      first = c.job();
      second = c.job();
    } catch (const std::exception& e) {
      first.pass = false;
      first.summary = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (first.pass && first.report != second.report) deterministic = false;
    report_bytes += first.report.size();
    all = all && first.pass;
    std::printf("criterion %2d %-30s %s  %s (%.1fs)\n", c.number, c.name,
                first.pass ? "PASS" : "FAIL", first.summary.c_str(), seconds);
    std::fflush(stdout);
  }
  all = all && deterministic;
  std::printf("criterion 12 %-30s %s  %s\n", "determinism", deterministic ? "PASS" : "FAIL",
              deterministic ? ("every job repeated with identical reports (" +
                               std::to_string(report_bytes) + " bytes)")
                                  .c_str()
                            : "a job produced different reports on a second run");
  return all ? 0 : 1;
}
