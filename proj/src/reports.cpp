// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/report.hpp"

#include <map>
#include <set>

#include "commlab/commutator.hpp"
#include "commlab/constructions.hpp"
#include "commlab/error.hpp"

namespace commlab {

void Report::add(std::string key, std::string value) {
  lines_.push_back({std::move(key), std::move(value), false});
}

void Report::raw(std::string line) { lines_.push_back({{}, std::move(line), true}); }

std::string Report::render(bool porcelain) const {
  std::string out;
  for (const auto& line : lines_) {
    if (!line.raw) out += line.key + (porcelain ? "\t" : ": ");
    out += line.value;
    out += "\n";
  }
  return out;
}

std::optional<std::string> Report::get(std::string_view key) const {
  for (const auto& line : lines_) {
    if (!line.raw && line.key == key) return line.value;
  }
  return std::nullopt;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Partition parse_congruence(const Algebra& alg, std::string_view text, std::string_view what) {
  Partition p;
  try {
    p = Partition::parse(text, alg.size());
  } catch (const Error& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
  if (auto bad = compatibility_violation(alg, p)) {
    throw ValidationError(std::string(what) + " " + p.to_string() +
                          " is not a congruence (operation " + alg.op(bad->op).name +
                          " separates " + std::to_string(bad->x) + " and " +
                          std::to_string(bad->y) + ")");
  }
  return p;
}

std::string format_pair_partition(const Partition& p,
                                  const std::vector<std::pair<Elem, Elem>>& pairs) {
  std::string out;
  bool first_block = true;
  for (const auto& block : p.blocks()) {
    if (!first_block) out += "|";
    first_block = false;
    bool first = true;
    for (Elem i : block) {
      if (!first) out += " ";
      first = false;
      out += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
  }
  return out;
}

std::string format_term(const TermPtr& t) {
  if (!t) return "(none)";
  constexpr std::size_t kLimit = 4000;
  std::size_t size = t->tree_size();
  if (size > kLimit) return "(term with " + std::to_string(size) + " nodes, not printed)";
  return t->to_string();
}

CommutatorKind parse_commutator_kind(std::string_view text) {
  if (text == "tc") return CommutatorKind::TC;
  if (text == "sym") return CommutatorKind::Sym;
  if (text == "lin") return CommutatorKind::Lin;
  throw ValidationError("unknown commutator kind '" + std::string(text) +
                        "' (expected tc, sym or lin)");
}

namespace {

void add_matrix(Report& r, const std::string& key, const Algebra& alg, const MatrixSet& ms,
                std::size_t index, const Quad& shown) {
  r.add(key, to_string(shown));
  MatrixDerivation d = ms.derivation(alg, index);
  r.add(key + " term", format_term(d.term));
  std::string rows, cols;
  for (std::size_t i = 0; i < d.row_pairs.size(); ++i) {
    rows += (i ? ", x" : "x") + std::to_string(i) + "=" + std::to_string(d.row_pairs[i].first) +
            "/" + std::to_string(d.row_pairs[i].second);
  }
  for (std::size_t j = 0; j < d.column_pairs.size(); ++j) {
    std::size_t v = d.row_pairs.size() + j;
    cols += (j ? ", x" : "x") + std::to_string(v) + "=" +
            std::to_string(d.column_pairs[j].first) + "/" +
            std::to_string(d.column_pairs[j].second);
  }
  r.add(key + " alpha-substitution", rows.empty() ? "(none)" : rows);
  r.add(key + " beta-substitution", cols.empty() ? "(none)" : cols);
}

void add_lin_witness(Report& r, const Algebra& alg, const MatrixSet& ms, const LinWitness& w) {
  r.add("witness-pair", std::to_string(w.u) + " " + std::to_string(w.v));
  r.add("witness-matrices", std::to_string(w.quads.size()));
  std::set<std::size_t> described;
  for (std::size_t i = 0; i < w.quads.size(); ++i) {
    const std::string key = "matrix " + std::to_string(i);
    if (described.insert(w.indices[i]).second) {
      add_matrix(r, key, alg, ms, w.indices[i], w.quads[i]);
    } else {
      r.add(key, to_string(w.quads[i]));
    }
  }
  r.add("witness-note", "valid but not necessarily minimal");
}

}  // namespace

Report con_report(const Algebra& alg, const ReportOptions& opt) {
  ConLattice lat = congruence_lattice(alg, opt.lattice_budget);
  Report r;
  r.add("algebra", alg.name());
  r.add("size", std::to_string(alg.size()));
  r.add("congruences", std::to_string(lat.size()));
  for (std::size_t i = 0; i < lat.size(); ++i) {
    r.add("con " + std::to_string(i), lat.at(i).to_string());
  }
  for (std::size_t i = 0; i < lat.size(); ++i) {
    std::string covers;
    for (std::size_t j : lat.covers(i)) covers += (covers.empty() ? "" : " ") + std::to_string(j);
    r.add("covers " + std::to_string(i), covers.empty() ? "(none)" : covers);
  }
  auto sd = meet_semidistributivity_violation(lat);
  r.add("meet-semidistributive", yes_no(!sd));
  if (sd) {
    r.add("sd-violation", "alpha=" + std::to_string(sd->alpha) + " beta=" +
                              std::to_string(sd->beta) + " gamma=" + std::to_string(sd->gamma));
  }
  return r;
}

Partition commutator_of_kind(const Algebra& alg, const Partition& alpha, const Partition& beta,
                             CommutatorKind kind, const ReportOptions& opt) {
  MatrixSet ms = alpha_beta_matrices(alg, alpha, beta, opt.closure);
  switch (kind) {
    case CommutatorKind::TC:
      return tc_commutator(alg, ms);
    case CommutatorKind::Sym:
      return sym_commutator(alg, ms);
    case CommutatorKind::Lin:
      return lin_commutator(alg, ms);
  }
  throw InternalError("unknown commutator kind");
}

Report chain_report(const Algebra& alg, const Partition& alpha, const Partition& beta,
                    const ReportOptions& opt) {
  CommutatorChain c = commutator_chain(alg, alpha, beta, opt.closure);
  Report r;
  r.add("algebra", alg.name());
  r.add("alpha", alpha.to_string());
  r.add("beta", beta.to_string());
  r.add("tc", c.tc.to_string());
  r.add("sym", c.sym.to_string());
  r.add("lin", c.lin.to_string());
  r.add("meet", c.meet.to_string());
  r.add("tc <= sym", yes_no(c.tc.leq(c.sym)));
  r.add("sym <= lin", yes_no(c.sym.leq(c.lin)));
  r.add("lin <= meet", yes_no(c.lin.leq(c.meet)));
  r.add("chain", c.chain_holds() ? "holds" : "VIOLATED");
  r.add("gap", c.gap() ? "yes (sym strictly below lin)" : "no");
  return r;
}

Report witness_report(const Algebra& alg, const Partition& alpha, const Partition& beta, Elem u,
                      Elem v, bool verify, const ReportOptions& opt) {
  MatrixSet ms = alpha_beta_matrices(alg, alpha, beta, opt.closure);
  LinWitness w = lin_witness(alg, ms, u, v, opt.witness_budget);
  LabellingWitness lw = labelling_witness(w);
  const std::string text = format_labelling_witness(lw);

  Report r;
  r.add("algebra", alg.name());
  r.add("alpha", alpha.to_string());
  r.add("beta", beta.to_string());
  add_lin_witness(r, alg, ms, w);
  r.add("labelling-copies", std::to_string(lw.copies()));
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    r.raw(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (verify) {
    // Replay every check from the printed form, not the in-memory objects.
    LabellingWitness reread = parse_labelling_witness(text);
    LinWitness from_text{reread.u, reread.v, {}, {}};
    for (const Quad& t : reread.twisted) from_text.quads.push_back({t.a, t.d, t.c, t.b});
    auto lin_problem = check_lin_witness(ms, alg.size(), from_text);
    auto lab_problem = check_labelling_witness(ms, reread);
    r.add("verify-matrices", lin_problem ? "FAILED: " + *lin_problem : "passed");
    r.add("verify-labelling", lab_problem ? "FAILED: " + *lab_problem : "passed");
    if (lin_problem || lab_problem) throw InternalError("witness failed verification");
  }
  return r;
}

Report classify_report(const Algebra& alg, const ReportOptions& opt) {
  Classification c = classify(alg, opt.closure);
  Report r;
  r.add("algebra", alg.name());
  r.add("abelian", yes_no(c.abelian));
  r.add("quasi-affine", yes_no(c.quasi_affine));
  r.add("affine", c.affine == Verdict::Yes ? "yes" : c.affine == Verdict::No ? "no" : "unknown");
  r.add("affine-meaning", "abelian and some ternary term operation is a Mal'cev operation");
  if (c.malcev_term) r.add("malcev-term", format_term(c.malcev_term));
  if (c.affine == Verdict::No && c.abelian) r.add("malcev-term", "none among ternary term operations");
  if (!c.note.empty()) r.add("affine-note", c.note);
  if (c.tc_violation) {
    MatrixSet ms = alpha_beta_matrices(alg, Partition::total(alg.size()),
                                       Partition::total(alg.size()), opt.closure);
    add_matrix(r, "non-abelian-matrix", alg, ms, c.tc_violation->index, c.tc_violation->quad);
  }
  if (c.lin_witness) {
    MatrixSet ms = alpha_beta_matrices(alg, Partition::total(alg.size()),
                                       Partition::total(alg.size()), opt.closure);
    add_lin_witness(r, alg, ms, *c.lin_witness);
  }
  ComplementCheck cc = complement_check(alg);
  r.add("diagonal-complement", yes_no(cc.complements()));
  if (c.abelian && cc.complements()) {
    r.add("diagonal-complement-implies", std::string("quasi-affine (") +
                                             (c.quasi_affine ? "consistent" : "INCONSISTENT") +
                                             ")");
  }
  return r;
}

Report delta_report(const Algebra& alg, const Partition& delta, const Partition* alpha,
                    const Partition* beta, const ReportOptions& opt) {
  SquareContext ctx = square_context(alg, delta);
  Partition largest = delta_delta(ctx);
  Report r;
  r.add("algebra", alg.name());
  r.add("delta", delta.to_string());
  r.add("square-size", std::to_string(ctx.square.pairs.size()));
  r.add("Delta", format_pair_partition(largest, ctx.square.pairs));
  r.add("Delta-blocks", std::to_string(largest.num_blocks()));
  r.add("diagonal-is-union-of-classes", yes_no(largest.leq(ctx.diagonal_split())));
  if (delta.is_total()) {
    ComplementCheck cc = complement_check(alg);
    r.add("Delta ^ eta0 = 0", yes_no(cc.meet_eta0_zero));
    r.add("Delta ^ eta1 = 0", yes_no(cc.meet_eta1_zero));
    r.add("Delta v eta0 = 1", yes_no(cc.join_eta0_total));
    r.add("Delta v eta1 = 1", yes_no(cc.join_eta1_total));
    r.add("complements-kernels", yes_no(cc.complements()));
  }
  if (alpha && beta) {
    SquareCriterion sc = square_criterion(alg, *alpha, *beta, opt.closure);
    r.add("alpha", alpha->to_string());
    r.add("beta", beta->to_string());
    static const char* names[3] = {"alpha/beta", "beta/alpha", "meet/meet"};
    for (std::size_t k = 0; k < 3; ++k) {
      const auto& c = sc.cases[k];
      r.add(std::string("case ") + names[k],
            "gamma=" + c.gamma.to_string() + " delta=" + c.delta.to_string() +
                " gamma0^eta1^Delta=" + (c.zero ? "0" : "nonzero"));
    }
    r.add("all-meets-zero", yes_no(sc.all_zero()));
    r.add("sym", sc.sym.to_string());
    if (!sc.sym.is_equality()) {
      r.add("criterion", "inapplicable (sym commutator is not 0)");
    } else if (!sc.all_zero()) {
      r.add("criterion", "inapplicable (some meet is not 0)");
    } else {
      Partition lin = lin_commutator(alg, *alpha, *beta, opt.closure);
      r.add("criterion", "applicable: predicts lin = 0");
      r.add("lin", lin.to_string());
      r.add("consistent", yes_no(lin.is_equality()));
      if (!lin.is_equality()) throw InternalError("square criterion contradicts the lattice method");
    }
  }
  return r;
}

namespace {

std::string pattern_call(std::string_view pattern) {
  std::string out = "f(";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i) out += ",";
    out += pattern[i];
  }
  return out + ")";
}

}  // namespace

Report taylor_report(const Algebra& alg, std::size_t max_arity, std::size_t alphabet,
                     const ReportOptions& opt) {
  TaylorSearch s = find_taylor_term(alg, max_arity, opt.closure);
  Report r;
  r.add("algebra", alg.name());
  r.add("searched-arities", s.searched_to < 2 ? "(none)" : "2.." + std::to_string(s.searched_to));
  if (s.budget_note) r.add("budget", *s.budget_note);
  if (!s.certificate) {
    r.add("found", s.budget_note ? "unknown" : "no");
    return r;
  }
  const TaylorCertificate& cert = *s.certificate;
  r.add("found", "yes");
  r.add("arity", std::to_string(cert.arity));
  r.add("term", format_term(cert.term));
  for (std::size_t i = 0; i < cert.rows.size(); ++i) {
    r.add("row " + std::to_string(i + 1),
          pattern_call(cert.rows[i].first) + " = " + pattern_call(cert.rows[i].second));
  }
  auto problem = check_taylor_certificate(alg, cert);
  r.add("verified", problem ? "FAILED: " + *problem : "yes");
  r.add("scope", "identities hold in the algebra, hence in the variety it generates");
  SeparationReport sep = check_separating_identities(alg, cert.table, cert.arity, alphabet);
  r.add("separating-identities", (sep.holds() ? "yes" : "no") + std::string(" (alphabet ") +
                                     std::to_string(alphabet) + ")");
  for (const auto& e : sep.entries) {
    std::string k = "{";
    for (std::size_t i = 0; i < e.positions.size(); ++i) {
      k += (i ? "," : "") + std::to_string(e.positions[i] + 1);
    }
    k += "}";
    r.add("K " + k, e.identity ? pattern_call(e.identity->first) + " = " +
                                     pattern_call(e.identity->second)
                               : "none at alphabet " + std::to_string(alphabet));
  }
  return r;
}

Report wdiff_report(const Algebra& alg, const ReportOptions& opt) {
  DifferenceSearch s = find_difference_term(alg, false, opt.closure);
  Report r;
  r.add("algebra", alg.name());
  r.add("candidates-examined", std::to_string(s.candidates));
  if (!s.term) {
    r.add("weak-difference-term", "none");
  } else {
    r.add("weak-difference-term", format_term(s.term));
    DifferenceChecker checker(alg, opt.closure, opt.lattice_budget);
    r.add("difference-term", yes_no(!checker.exact(s.table)));
  }
  r.add("scope", "this algebra only, not every algebra in its variety");
  return r;
}

Report ceq_report(const Algebra& alg, const ceq::Statement& s, const ReportOptions& opt,
                  bool* holds) {
  ConLattice lat = congruence_lattice(alg, opt.lattice_budget);
  ceq::StatementCheck check = ceq::check_universal(alg, s, lat, opt.ceq_budget);
  if (holds) *holds = check.holds;
  Report r;
  r.add("algebra", alg.name());
  r.add("statement", ceq::to_string(*s.lhs, s.family) +
                         (s.relation == ceq::Relation::Inclusion ? " <= " : " = ") +
                         ceq::to_string(*s.rhs, s.family));
  std::string vars;
  for (const auto& v : s.variables()) vars += (vars.empty() ? "" : ", ") + v;
  r.add("variables", vars.empty() ? "(none)" : vars);
  r.add("congruences", std::to_string(lat.size()));
  r.add("assignments-checked", std::to_string(check.assignments));
  r.add("result", check.holds ? "holds" : "fails");
  if (check.counterexample) {
    const auto& cx = *check.counterexample;
    for (const auto& [name, index] : cx.assignment) {
      r.add("assign " + name, lat.at(index).to_string());
    }
    r.add("pair", "(" + std::to_string(cx.x) + "," + std::to_string(cx.y) + ") " +
                      (cx.in_lhs ? "in left side, not in right side"
                                 : "in right side, not in left side"));
  }
  if (check.nonequivalence_join) {
    r.add("join-extension",
          "used: a join was applied to a relation that is not an equivalence "
          "(taken as the equivalence generated by the union)");
  }
  r.add("scope", "congruences of this algebra only");
  return r;
}

Report synth_report(const InclusionData& data, bool counterexample) {
  ceq::Statement s = synthesize_congruence_inclusion(data);
  Report r;
  r.add("arity", std::to_string(data.n));
  for (std::size_t i = 0; i < data.n; ++i) {
    r.add("row " + std::to_string(i + 1),
          pattern_call(data.left[i]) + " = " + pattern_call(data.right[i]));
  }
  std::string vars;
  for (const auto& v : s.variables()) vars += (vars.empty() ? "" : ", ") + v;
  r.add("vars", vars);
  r.add("inclusion", ceq::to_string(*s.lhs, s.family) + " <= " + ceq::to_string(*s.rhs, s.family));
  if (counterexample) {
    InclusionCounterexample cx = inclusion_counterexample(data);
    std::string universe = "a=0 b=1";
    for (std::size_t i = 0; i < data.n; ++i) {
      universe += " u" + std::to_string(i + 1) + "=" + std::to_string(i + 2);
    }
    r.add("universe", universe);
    for (const auto& name : s.variables()) r.add("assign " + name, cx.env.at(name).to_string());
    r.add("pair", "(" + std::to_string(cx.a) + "," + std::to_string(cx.b) + ")");
    r.add("in-lhs", yes_no(cx.in_lhs));
    r.add("in-rhs", yes_no(cx.in_rhs));
    r.add("rhs", cx.rhs.to_string());
    r.add("violated", yes_no(cx.violated()));
  }
  return r;
}

}  // namespace commlab
