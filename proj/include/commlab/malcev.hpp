// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commlab/algebra.hpp"
#include "commlab/ceq.hpp"
#include "commlab/congruence.hpp"
#include "commlab/partition.hpp"
#include "commlab/subpower.hpp"

namespace commlab {

/// A ternary term operation m with m(x,y,y) = x = m(y,y,x), first in the
/// discovery order of the free term operations; nullptr if there is none.
TermPtr find_malcev_term(const Algebra& alg, ClosureOptions options = {});
bool is_malcev_table(const std::vector<Elem>& table, std::size_t n);

/// Idempotent n-ary term operation f with, for each position i, an identity
/// f(p_i) = f(q_i) over the variables {x, y} where p_i has x and q_i has y at
/// position i. Patterns are strings over "xy".
struct TaylorCertificate {
  std::size_t arity = 0;
  std::size_t index = 0;  // in free_term_operations(alg, arity)
  TermPtr term;
  std::vector<Elem> table;
  std::vector<std::pair<std::string, std::string>> rows;
};

struct TaylorSearch {
  std::optional<TaylorCertificate> certificate;
  /// Arities 2..searched_to were searched completely.
  std::size_t searched_to = 1;
  /// Set when the free algebra of the next arity exceeded its budget.
  std::optional<std::string> budget_note;
};

/// Searches arities 2..max_arity in order, term operations in discovery
/// order, patterns lexicographically with x before y.
TaylorSearch find_taylor_term(const Algebra& alg, std::size_t max_arity,
                              ClosureOptions options = {});

/// Evaluates `pattern` (a string over `alphabet`) as arguments of the table.
/// `assignment` gives the values of the letters.
Elem eval_pattern(const std::vector<Elem>& table, std::size_t n, std::string_view pattern,
                  std::string_view alphabet, const std::vector<Elem>& assignment);

/// Exhaustive re-check of a certificate: f idempotent, and every row an
/// identity with x at position i on the left and y on the right.
std::optional<std::string> check_taylor_certificate(const Algebra& alg,
                                                    const TaylorCertificate& cert);

/// For each nonempty set K of positions, an identity f(p) = f(q) whose
/// restrictions to K use different sets of variables, searched over patterns
/// in an alphabet of `alphabet_size` letters. A negative answer is relative to
/// that alphabet size.
struct SeparationReport {
  struct Entry {
    std::vector<std::size_t> positions;  // K, 0-based
    std::optional<std::pair<std::string, std::string>> identity;
  };
  std::size_t alphabet_size = 2;
  std::vector<Entry> entries;  // K in order of bitmask
  bool holds() const;
};

inline constexpr std::size_t kMaxAlphabet = 6;
inline constexpr std::string_view kPatternLetters = "xyzuvw";

SeparationReport check_separating_identities(const Algebra& alg, const std::vector<Elem>& table,
                                             std::size_t arity, std::size_t alphabet_size = 2);

/// (a, b) in theta where a ternary operation d breaks d(b,b,a) [theta,theta] a
/// (left side) or a [theta,theta] d(a,b,b) (right side).
struct DifferenceViolation {
  std::size_t theta = 0;  // lattice index
  Elem a = 0;
  Elem b = 0;
  bool left = true;
  Elem value = 0;  // d(b,b,a) or d(a,b,b)
};

/// Checks ternary operations against every congruence, with the commutators
/// [theta,theta] computed once.
class DifferenceChecker {
 public:
  explicit DifferenceChecker(const Algebra& alg, ClosureOptions options = {},
                             std::size_t lattice_budget = kDefaultLatticeBudget);

  const ConLattice& lattice() const noexcept { return lattice_; }
  const Partition& self_commutator(std::size_t theta) const { return self_.at(theta); }

  /// d(b,b,a) [theta,theta] a [theta,theta] d(a,b,b).
  std::optional<DifferenceViolation> weak(const std::vector<Elem>& table) const;
  /// d(b,b,a) = a [theta,theta] d(a,b,b).
  std::optional<DifferenceViolation> exact(const std::vector<Elem>& table) const;

 private:
  std::optional<DifferenceViolation> check(const std::vector<Elem>& table, bool exact) const;

  std::size_t n_;
  ConLattice lattice_;
  std::vector<Partition> self_;
};

struct DifferenceSearch {
  TermPtr term;  // nullptr when not found
  std::size_t index = 0;
  std::vector<Elem> table;
  std::size_t candidates = 0;  // term operations examined
};

/// First ternary term operation passing the weak (or, with `exact`, the
/// strict) difference check. This certifies the condition for `alg` only.
DifferenceSearch find_difference_term(const Algebra& alg, bool exact = false,
                                      ClosureOptions options = {});

/// Index sets read off n two-variable identities f(p_i) = f(q_i): position k
/// is in L_i when p_i has x there (otherwise in L'_i), and in R_i when q_i has
/// x there (otherwise in R'_i).
struct InclusionData {
  std::size_t n = 0;
  std::vector<std::string> left;   // p_i over "xy"
  std::vector<std::string> right;  // q_i over "xy"

  bool in_left(std::size_t i, std::size_t k) const { return left[i][k] == 'x'; }
  bool in_right(std::size_t i, std::size_t k) const { return right[i][k] == 'x'; }
};

/// `arity n` followed by n lines `row <p> = <q>`; `#` comments.
InclusionData parse_inclusion_data(std::string_view text);
std::string format_inclusion_data(const InclusionData& data);
/// Throws ValidationError unless every pattern has length n over {x, y} and
/// row i has x at position i on the left and y on the right.
void validate_inclusion_data(const InclusionData& data);
InclusionData inclusion_data(const TaylorCertificate& cert);

/// Variable names used by the synthesized inclusion: a1..an and b1..bn.
std::string alpha_name(std::size_t i);
std::string beta_name(std::size_t i);

/// meet_i (a_i o b_i) <= (join_i a_i ^ meet_i (g \/ t_i)) \/ (join_i b_i ^ meet_i (g \/ t_i))
/// with g = meet_i (a_i \/ b_i) and
/// t_i = (join_{L_i} a_k \/ join_{L'_i} b_k) ^ (join_{R_i} a_k \/ join_{R'_i} b_k).
ceq::Statement synthesize_congruence_inclusion(const InclusionData& data);

/// The operation-free set {a, b, u_1, ..., u_n} (a = 0, b = 1, u_i = i + 1)
/// with a_i = Cg(a, u_i) and b_i = Cg(b, u_i).
struct InclusionCounterexample {
  Algebra set;
  ceq::Env env;
  Elem a = 0;
  Elem b = 1;
  bool in_lhs = false;
  bool in_rhs = false;
  /// The right-hand side as a partition; {a} and {b} are singleton blocks.
  Partition rhs;
  bool violated() const { return in_lhs && !in_rhs; }
};

InclusionCounterexample inclusion_counterexample(const InclusionData& data);

}  // namespace commlab
