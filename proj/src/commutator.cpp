// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/commutator.hpp"

#include <map>

#include "commlab/congruence.hpp"
#include "commlab/error.hpp"

namespace commlab {

std::string to_string(const Quad& q) {
  return "[" + std::to_string(q.a) + " " + std::to_string(q.b) + "; " + std::to_string(q.c) +
         " " + std::to_string(q.d) + "]";
}

MatrixSet::MatrixSet(Partition alpha, Partition beta, Subuniverse quads,
                     std::vector<std::pair<Elem, Elem>> generator_pairs, std::size_t num_alpha)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      quads_(std::move(quads)),
      generator_pairs_(std::move(generator_pairs)),
      num_alpha_(num_alpha) {}

Quad MatrixSet::quad(std::size_t i) const {
  auto t = quads_.element(i);
  return {t[0], t[1], t[2], t[3]};
}

std::optional<std::size_t> MatrixSet::find(const Quad& q) const {
  auto t = q.tuple();
  return quads_.find(t);
}

namespace {

// Copy of `t` with variable i replaced by variable map[i]. Shared nodes stay
// shared.
TermPtr rename_variables(const TermPtr& t, const std::vector<std::size_t>& map,
                         std::map<const Term*, TermPtr>& memo) {
  if (auto it = memo.find(t.get()); it != memo.end()) return it->second;
  TermPtr out;
  if (t->is_variable()) {
    out = Term::variable(map.at(t->var()));
  } else {
    std::vector<TermPtr> args;
    args.reserve(t->args().size());
    for (const auto& a : t->args()) args.push_back(rename_variables(a, map, memo));
    out = Term::apply(t->op(), std::move(args));
  }
  memo.emplace(t.get(), out);
  return out;
}

void collect_variables(const TermPtr& t, std::vector<bool>& seen,
                       std::map<const Term*, bool>& visited) {
  if (!visited.emplace(t.get(), true).second) return;
  if (t->is_variable()) {
    seen.at(t->var()) = true;
    return;
  }
  for (const auto& a : t->args()) collect_variables(a, seen, visited);
}

}  // namespace

MatrixDerivation MatrixSet::derivation(const Algebra& alg, std::size_t i) const {
  TermPtr raw = quads_.term(alg, i);
  std::vector<bool> used(generator_pairs_.size(), false);
  std::map<const Term*, bool> visited;
  collect_variables(raw, used, visited);

  MatrixDerivation out;
  std::vector<std::size_t> map(generator_pairs_.size(), 0);
  std::size_t rows = 0;
  for (std::size_t g = 0; g < num_alpha_; ++g) {
    if (!used[g]) continue;
    map[g] = rows++;
    out.row_pairs.push_back(generator_pairs_[g]);
  }
  std::size_t cols = 0;
  for (std::size_t g = num_alpha_; g < generator_pairs_.size(); ++g) {
    if (!used[g]) continue;
    map[g] = rows + cols++;
    out.column_pairs.push_back(generator_pairs_[g]);
  }
  std::map<const Term*, TermPtr> memo;
  out.term = rename_variables(raw, map, memo);
  return out;
}

MatrixSet alpha_beta_matrices(const Algebra& alg, const Partition& alpha, const Partition& beta,
                              ClosureOptions options) {
  if (alpha.size() != alg.size() || beta.size() != alg.size()) {
    throw ValidationError("congruence size does not match algebra");
  }
  std::vector<std::pair<Elem, Elem>> pairs = alpha.pairs();
  const std::size_t num_alpha = pairs.size();
  for (auto p : beta.pairs()) pairs.push_back(p);

  std::vector<std::vector<Elem>> gens;
  gens.reserve(pairs.size());
  for (std::size_t g = 0; g < pairs.size(); ++g) {
    auto [x, y] = pairs[g];
    if (g < num_alpha) {
      gens.push_back({x, x, y, y});
    } else {
      gens.push_back({x, y, x, y});
    }
  }
  Subuniverse quads = generate_subpower(alg, 4, gens, options);
  return MatrixSet(alpha, beta, std::move(quads), std::move(pairs), num_alpha);
}

Quad evaluate_derivation(const Algebra& alg, const MatrixDerivation& d) {
  const std::size_t rows = d.row_pairs.size();
  const std::size_t cols = d.column_pairs.size();
  std::vector<Elem> args(rows + cols);
  auto value = [&](bool bottom, bool right) {
    for (std::size_t i = 0; i < rows; ++i) {
      args[i] = bottom ? d.row_pairs[i].second : d.row_pairs[i].first;
    }
    for (std::size_t j = 0; j < cols; ++j) {
      args[rows + j] = right ? d.column_pairs[j].second : d.column_pairs[j].first;
    }
    return eval_term(alg, *d.term, args);
  };
  return {value(false, false), value(false, true), value(true, false), value(true, true)};
}

std::optional<CentralityViolation> centrality_violation(const MatrixSet& ms,
                                                        const Partition& delta, bool transposed) {
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Quad q = ms.quad(i);
    if (transposed) q = q.transpose();
    if (delta.related(q.a, q.b) && !delta.related(q.c, q.d)) {
      return CentralityViolation{i, q, transposed};
    }
  }
  return std::nullopt;
}

namespace {

// Least delta such that every matrix (of ms, and of its transposes when
// `both`) with a delta-related top row has a delta-related bottom row.
Partition least_centralizing(const Algebra& alg, const MatrixSet& ms, bool both) {
  Partition delta = Partition::equality(alg.size());
  while (true) {
    std::vector<std::pair<Elem, Elem>> pairs = delta.spanning_pairs();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      Quad q = ms.quad(i);
      if (q.c != q.d && delta.related(q.a, q.b)) pairs.emplace_back(q.c, q.d);
      if (both && q.b != q.d && delta.related(q.a, q.c)) pairs.emplace_back(q.b, q.d);
    }
    Partition next = generate_congruence(alg, pairs);
    if (next == delta) return delta;
    delta = std::move(next);
  }
}

}  // namespace

Partition tc_commutator(const Algebra& alg, const MatrixSet& ms) {
  return least_centralizing(alg, ms, false);
}

Partition tc_commutator(const Algebra& alg, const Partition& alpha, const Partition& beta,
                        ClosureOptions options) {
  return tc_commutator(alg, alpha_beta_matrices(alg, alpha, beta, options));
}

Partition sym_commutator(const Algebra& alg, const MatrixSet& ms) {
  return least_centralizing(alg, ms, true);
}

Partition sym_commutator(const Algebra& alg, const Partition& alpha, const Partition& beta,
                         ClosureOptions options) {
  return sym_commutator(alg, alpha_beta_matrices(alg, alpha, beta, options));
}

Partition SquareContext::lift(const Partition& gamma, int coordinate) const {
  std::vector<std::size_t> labels(square.pairs.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    Elem x = coordinate == 0 ? square.pairs[i].first : square.pairs[i].second;
    labels[i] = gamma.block_of(x);
  }
  return Partition(labels);
}

Partition SquareContext::diagonal_split() const {
  std::vector<std::size_t> labels(square.pairs.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    labels[i] = square.pairs[i].first == square.pairs[i].second ? 0 : 1;
  }
  return Partition(labels);
}

SquareContext square_context(const Algebra& alg, const Partition& delta) {
  SquareContext ctx;
  ctx.delta = delta;
  ctx.square = diagonal_square(alg, delta);
  Partition equality = Partition::equality(alg.size());
  ctx.eta0 = ctx.lift(equality, 0);
  ctx.eta1 = ctx.lift(equality, 1);
  return ctx;
}

Partition delta_delta(const SquareContext& ctx) {
  return largest_congruence_below(ctx.square.algebra, ctx.diagonal_split());
}

Partition delta_delta(const Algebra& alg, const Partition& delta) {
  return delta_delta(square_context(alg, delta));
}

SquareCriterion square_criterion(const Algebra& alg, const Partition& alpha,
                                 const Partition& beta, ClosureOptions options) {
  SquareCriterion out;
  Partition both = meet(alpha, beta);
  const std::array<std::pair<const Partition*, const Partition*>, 3> cases = {
      std::pair{&alpha, &beta}, std::pair{&beta, &alpha}, std::pair{&both, &both}};
  for (std::size_t k = 0; k < 3; ++k) {
    const Partition& gamma = *cases[k].first;
    const Partition& delta = *cases[k].second;
    SquareContext ctx = square_context(alg, delta);
    auto& c = out.cases[k];
    c.gamma = gamma;
    c.delta = delta;
    c.largest = delta_delta(ctx);
    c.meet = meet(meet(ctx.lift(gamma, 0), ctx.eta1), c.largest);
    c.zero = c.meet.is_equality();
  }
  out.sym = sym_commutator(alg, alpha, beta, options);
  return out;
}

ComplementCheck complement_check(const Algebra& alg) {
  SquareContext ctx = square_context(alg, Partition::total(alg.size()));
  ComplementCheck out;
  out.largest = delta_delta(ctx);
  const Algebra& sq = ctx.square.algebra;
  out.meet_eta0_zero = meet(out.largest, ctx.eta0).is_equality();
  out.meet_eta1_zero = meet(out.largest, ctx.eta1).is_equality();
  out.join_eta0_total = congruence_join(sq, out.largest, ctx.eta0).is_total();
  out.join_eta1_total = congruence_join(sq, out.largest, ctx.eta1).is_total();
  return out;
}

}  // namespace commlab
