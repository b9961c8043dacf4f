// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commlab/algebra.hpp"
#include "commlab/commutator.hpp"
#include "commlab/int_lattice.hpp"
#include "commlab/partition.hpp"

namespace commlab {

/// e_a - e_b - e_c + e_d in Z^n.
IntVector quad_vector(const Quad& q, std::size_t n);

/// Integer span of the vectors of all matrices in ms. Zero vectors are skipped
/// and repeated vectors added once, in matrix discovery order.
/// With `generator_quads`, records for each lattice generator the index of the
/// matrix it came from.
IntLattice matrix_lattice(const MatrixSet& ms, std::size_t n, bool track_coefficients = false,
                          std::vector<std::size_t>* generator_quads = nullptr);

/// The pairs (u, v) with e_v - e_u in the matrix lattice. The result is checked
/// to be a congruence; InternalError otherwise.
Partition lin_commutator(const Algebra& alg, const MatrixSet& ms);
Partition lin_commutator(const Algebra& alg, const Partition& alpha, const Partition& beta,
                         ClosureOptions options = {});

inline constexpr std::size_t kDefaultWitnessBudget = 1'000'000;

/// Matrices of M(alpha, beta), each taken with coefficient +1, whose vectors
/// sum to e_v - e_u. Not necessarily minimal.
struct LinWitness {
  Elem u = 0;
  Elem v = 0;
  std::vector<Quad> quads;
  std::vector<std::size_t> indices;  // positions in the MatrixSet
};

/// Throws NotInCommutator if (u, v) is not in [alpha, beta]_l, and
/// BudgetExceeded if the witness would have more than `max_quads` matrices.
LinWitness lin_witness(const Algebra& alg, const MatrixSet& ms, Elem u, Elem v,
                       std::size_t max_quads = kDefaultWitnessBudget);

/// First failed check, or nullopt when every matrix is in ms and the vectors
/// sum exactly to e_v - e_u.
std::optional<std::string> check_lin_witness(const MatrixSet& ms, std::size_t n,
                                             const LinWitness& w);

/// Copies of the four-vertex graph labelled by twisted matrices [a d; c b].
/// Copy i has top vertices 2i (label a) and 2i+1 (label d), bottom vertices 2i
/// (label c) and 2i+1 (label b). Its alpha-edges join c-a and b-d, its
/// beta-edges b-a and c-d. `match[t]` is the bottom vertex matched to top
/// vertex t; the edge from `top_e` to match[top_e] is the distinguished edge.
struct LabellingWitness {
  bool reflexive = false;  // u = v: no copies at all
  Elem u = 0;
  Elem v = 0;
  std::vector<Quad> twisted;  // as [a d; c b]
  std::vector<std::size_t> match;
  std::size_t top_e = 0;

  std::size_t copies() const { return twisted.size(); }
  Elem top_label(std::size_t t) const;
  Elem bottom_label(std::size_t b) const;
};

LabellingWitness labelling_witness(const LinWitness& w);

/// First failed restricted-labelling condition, or nullopt.
std::optional<std::string> check_labelling_witness(const MatrixSet& ms,
                                                   const LabellingWitness& lw);

/// Text form: one block per copy (`copy i`, `twisted [a d; c b]`, the match
/// lines of its top vertices), then `distinguished e: top#k(v) -> bottom#l(u)`.
std::string format_labelling_witness(const LabellingWitness& lw);
LabellingWitness parse_labelling_witness(std::string_view text);

/// [alpha, beta], [alpha, beta]_s, [alpha, beta]_l and alpha ^ beta.
struct CommutatorChain {
  Partition tc;
  Partition sym;
  Partition lin;
  Partition meet;
  bool chain_holds() const {
    return tc.leq(sym) && sym.leq(lin) && lin.leq(meet);
  }
  /// [alpha, beta]_s strictly below [alpha, beta]_l.
  bool gap() const { return sym != lin; }
};

CommutatorChain commutator_chain(const Algebra& alg, const Partition& alpha,
                                 const Partition& beta, ClosureOptions options = {});

enum class Verdict { No, Yes, Unknown };

struct Classification {
  bool abelian = false;
  bool quasi_affine = false;
  Verdict affine = Verdict::No;
  /// When not abelian: a matrix of M(1,1) violating C(1,1;0).
  std::optional<CentralityViolation> tc_violation;
  std::optional<MatrixDerivation> tc_violation_derivation;
  /// When not quasi-affine: a witness that [1,1]_l relates two elements.
  std::optional<LinWitness> lin_witness;
  /// When affine: a Mal'cev term operation.
  TermPtr malcev_term;
  std::string note;  // e.g. the budget that made `affine` unknown
};

/// abelian: [1,1] = 0. quasi-affine: [1,1]_l = 0. affine: abelian and some
/// ternary term operation m satisfies m(x,y,y) = x = m(y,y,x).
Classification classify(const Algebra& alg, ClosureOptions options = {});

}  // namespace commlab
