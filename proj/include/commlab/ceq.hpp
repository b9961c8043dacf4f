// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "commlab/algebra.hpp"
#include "commlab/congruence.hpp"
#include "commlab/partition.hpp"

// Congruence equations and inclusions over join, meet and relational product.
//
//   family b_,c_ of (a,b,c)      optional; this binding is the default
//   vars a, b, c                 optional; restricts the variables
//   a ^ (b o c) <= b_3
//
// Precedence: o binds tighter than ^ (also written /\), which binds tighter
// than \/. All three are left-associative. b_k and c_k are the iterated
// terms b_0 = c_0 = 0, b_(k+1) = b \/ (a ^ c_k), c_(k+1) = c \/ (a ^ b_k).
namespace commlab::ceq {

enum class Op { Var, Join, Meet, Compose, Family, Commutator };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  Op op = Op::Var;
  std::string name;       // Var
  std::size_t index = 0;  // Family: the k of b_k / c_k
  int family = 0;         // Family: 0 for the b-family, 1 for the c-family
  ExprPtr lhs;
  ExprPtr rhs;

  friend bool operator==(const Expr& x, const Expr& y);
};

ExprPtr var(std::string name);
ExprPtr join(ExprPtr x, ExprPtr y);
ExprPtr meet(ExprPtr x, ExprPtr y);
ExprPtr compose(ExprPtr x, ExprPtr y);
ExprPtr family(int which, std::size_t k);
ExprPtr commutator(ExprPtr x, ExprPtr y);
/// Left-nested join / meet of a nonempty list.
ExprPtr join_all(const std::vector<ExprPtr>& xs);
ExprPtr meet_all(const std::vector<ExprPtr>& xs);

struct FamilyBinding {
  std::string first_prefix = "b_";
  std::string second_prefix = "c_";
  std::string alpha = "a";
  std::string beta = "b";
  std::string gamma = "c";

  friend bool operator==(const FamilyBinding&, const FamilyBinding&) = default;
};

enum class Relation { Inclusion, Equation };

struct Statement {
  std::optional<std::vector<std::string>> declared_vars;
  bool family_declared = false;
  FamilyBinding family;
  Relation relation = Relation::Inclusion;
  ExprPtr lhs;
  ExprPtr rhs;

  /// Variables in enumeration order: the declared ones, or else in order of
  /// first occurrence (a family atom contributes its base variables).
  std::vector<std::string> variables() const;
  bool uses_commutator() const;

  friend bool operator==(const Statement& x, const Statement& y);
};

struct ParseOptions {
  /// Accept the commutator atom [x,y].
  bool commutators = false;
};

Statement parse_statement(std::string_view text, ParseOptions options = {});

std::string to_string(const Expr& e, const FamilyBinding& family = {});
/// Headers (when declared) followed by the statement, one per line.
std::string to_string(const Statement& s);

/// A binary relation on {0, ..., n-1} as a boolean matrix.
class BinRel {
 public:
  BinRel() = default;
  explicit BinRel(std::size_t n) : rows_(n, boost::dynamic_bitset<>(n)) {}
  static BinRel identity(std::size_t n);
  static BinRel from_partition(const Partition& p);

  std::size_t size() const noexcept { return rows_.size(); }
  bool related(Elem x, Elem y) const { return rows_[x][y]; }
  void set(Elem x, Elem y) { rows_[x].set(y); }

  bool is_equivalence() const;
  bool subset_of(const BinRel& other) const;
  /// Requires is_equivalence().
  Partition to_partition() const;

  friend BinRel operator&(const BinRel& x, const BinRel& y);
  /// Relational product: x (r o s) z iff x r y s z for some y.
  friend BinRel compose(const BinRel& r, const BinRel& s);
  /// Equivalence relation generated by the union.
  friend BinRel join(const BinRel& r, const BinRel& s);
  friend bool operator==(const BinRel&, const BinRel&) = default;

 private:
  std::vector<boost::dynamic_bitset<>> rows_;
};

using Env = std::map<std::string, Partition>;

struct EvalFlags {
  /// Set when a join was applied to a relation that is not an equivalence.
  bool nonequivalence_join = false;
};

/// Value of `e` with variables interpreted by `env`. Commutator atoms are
/// term-condition commutators in `alg`. Throws ValidationError on an
/// unassigned variable.
BinRel evaluate(const Algebra& alg, const FamilyBinding& family, const Expr& e, const Env& env,
                EvalFlags* flags = nullptr);

struct Counterexample {
  std::vector<std::pair<std::string, std::size_t>> assignment;  // lattice indices
  Elem x = 0;
  Elem y = 0;
  bool in_lhs = true;  // (x, y) is in the left side but not the right
};

struct StatementCheck {
  bool holds = true;
  std::optional<Counterexample> counterexample;
  std::size_t assignments = 0;  // checked before stopping
  bool nonequivalence_join = false;
};

/// Does the pair relation lhs <= rhs (or lhs = rhs) hold for `env`? Returns
/// the first offending pair in lexicographic order.
std::optional<std::pair<Elem, Elem>> first_failure(const BinRel& lhs, const BinRel& rhs,
                                                   Relation relation, bool* in_lhs = nullptr);

inline constexpr std::size_t kDefaultCeqBudget = 10'000'000;

/// Checks the statement for every assignment of congruences of `alg` to its
/// variables, enumerated in lattice index order with the first variable most
/// significant. Throws BudgetExceeded when assignments times expression size
/// exceeds `budget`.
StatementCheck check_universal(const Algebra& alg, const Statement& s, const ConLattice& lat,
                               std::size_t budget = kDefaultCeqBudget);

}  // namespace commlab::ceq
