// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commlab/algebra.hpp"
#include "commlab/constructions.hpp"
#include "commlab/partition.hpp"
#include "commlab/subpower.hpp"

namespace commlab {

/// The 2x2 matrix [a b; c d], stored row by row.
struct Quad {
  Elem a = 0, b = 0, c = 0, d = 0;

  std::array<Elem, 4> tuple() const { return {a, b, c, d}; }
  /// [b a; d c]
  Quad swap_columns() const { return {b, a, d, c}; }
  /// [c d; a b]
  Quad swap_rows() const { return {c, d, a, b}; }
  /// [a c; b d]
  Quad transpose() const { return {a, c, b, d}; }
  bool is_constant() const { return a == b && b == c && c == d; }

  friend bool operator==(const Quad&, const Quad&) = default;
  friend auto operator<=>(const Quad&, const Quad&) = default;
};

/// `[a b; c d]`
std::string to_string(const Quad& q);

/// A term t(x, y) together with the arguments that produce a matrix:
/// [t(p, q) t(p, q'); t(p', q) t(p', q')]. The first row_pairs.size()
/// variables of `term` are the row variables x (substituted p, then p'), the
/// remaining ones the column variables y (substituted q, then q').
struct MatrixDerivation {
  TermPtr term;
  std::vector<std::pair<Elem, Elem>> row_pairs;     // alpha-related (p, p')
  std::vector<std::pair<Elem, Elem>> column_pairs;  // beta-related (q, q')
};

/// The alpha,beta-matrices of an algebra: the subalgebra of A^4 generated by
/// (p, p, p', p') for p alpha p' and (q, q', q, q') for q beta q'.
class MatrixSet {
 public:
  MatrixSet() = default;
  MatrixSet(Partition alpha, Partition beta, Subuniverse quads,
            std::vector<std::pair<Elem, Elem>> generator_pairs, std::size_t num_alpha);

  const Partition& alpha() const noexcept { return alpha_; }
  const Partition& beta() const noexcept { return beta_; }
  std::size_t size() const noexcept { return quads_.size(); }
  Quad quad(std::size_t i) const;
  std::optional<std::size_t> find(const Quad& q) const;
  bool contains(const Quad& q) const { return find(q).has_value(); }
  const Subuniverse& subuniverse() const noexcept { return quads_; }

  /// Reconstructs a term and substitution producing quad `i`. Only the
  /// generators actually used appear, renumbered in order of index.
  MatrixDerivation derivation(const Algebra& alg, std::size_t i) const;

 private:
  Partition alpha_;
  Partition beta_;
  Subuniverse quads_;
  std::vector<std::pair<Elem, Elem>> generator_pairs_;
  std::size_t num_alpha_ = 0;
};

MatrixSet alpha_beta_matrices(const Algebra& alg, const Partition& alpha, const Partition& beta,
                              ClosureOptions options = {});

/// Evaluates a MatrixDerivation back into the matrix it describes.
Quad evaluate_derivation(const Algebra& alg, const MatrixDerivation& d);

/// A matrix whose top row is delta-related but whose bottom row is not.
struct CentralityViolation {
  std::size_t index = 0;  // in the MatrixSet
  Quad quad;              // as a matrix of the tested centrality relation
  bool transposed = false;
};

/// C(alpha, beta; delta) on ms = M(alpha, beta). With `transposed`, tests
/// C(beta, alpha; delta) using the transposes of the matrices instead.
std::optional<CentralityViolation> centrality_violation(const MatrixSet& ms,
                                                        const Partition& delta,
                                                        bool transposed = false);
inline bool centralizes(const MatrixSet& ms, const Partition& delta) {
  return !centrality_violation(ms, delta);
}

/// The least delta with C(alpha, beta; delta).
Partition tc_commutator(const Algebra& alg, const MatrixSet& ms);
Partition tc_commutator(const Algebra& alg, const Partition& alpha, const Partition& beta,
                        ClosureOptions options = {});

/// The least delta with both C(alpha, beta; delta) and C(beta, alpha; delta).
Partition sym_commutator(const Algebra& alg, const MatrixSet& ms);
Partition sym_commutator(const Algebra& alg, const Partition& alpha, const Partition& beta,
                         ClosureOptions options = {});

/// A x_delta A with its two projection kernels.
struct SquareContext {
  Partition delta;
  DiagonalSquare square;
  Partition eta0;
  Partition eta1;

  /// Preimage of gamma under the projection onto `coordinate` (0 or 1).
  Partition lift(const Partition& gamma, int coordinate) const;
  /// Equivalence with two blocks: diagonal pairs, and all other pairs.
  Partition diagonal_split() const;
};

SquareContext square_context(const Algebra& alg, const Partition& delta);

/// Largest congruence of A x_delta A having the diagonal as a union of classes.
Partition delta_delta(const SquareContext& ctx);
Partition delta_delta(const Algebra& alg, const Partition& delta);

/// gamma_0 ^ eta_1 ^ Delta_delta for (gamma, delta) in (alpha, beta),
/// (beta, alpha), (alpha ^ beta, alpha ^ beta).
struct SquareCriterion {
  struct Case {
    Partition gamma;
    Partition delta;
    Partition largest;  // Delta_delta, on the square
    Partition meet;     // gamma_0 ^ eta_1 ^ Delta_delta
    bool zero = false;
  };
  std::array<Case, 3> cases;
  Partition sym;  // [alpha, beta]_s
  bool all_zero() const { return cases[0].zero && cases[1].zero && cases[2].zero; }
  /// All three meets vanish and [alpha, beta]_s = 0; then [alpha, beta]_l = 0.
  bool predicts_linear_zero() const { return all_zero() && sym.is_equality(); }
};

SquareCriterion square_criterion(const Algebra& alg, const Partition& alpha,
                                 const Partition& beta, ClosureOptions options = {});

/// Whether Delta_1 is a complement of both projection kernels in Con(A^2).
struct ComplementCheck {
  Partition largest;  // Delta_1
  bool meet_eta0_zero = false;
  bool meet_eta1_zero = false;
  bool join_eta0_total = false;
  bool join_eta1_total = false;
  bool complements() const {
    return meet_eta0_zero && meet_eta1_zero && join_eta0_total && join_eta1_total;
  }
};

ComplementCheck complement_check(const Algebra& alg);

}  // namespace commlab
