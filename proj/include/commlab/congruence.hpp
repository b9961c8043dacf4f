// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commlab/algebra.hpp"
#include "commlab/partition.hpp"

namespace commlab {

inline constexpr std::size_t kDefaultLatticeBudget = 100'000;

/// Least congruence containing `pairs`. Pairs are merged with union-find and
/// every merged pair is pushed through all basic translations (an operation
/// with all but one argument held constant) until nothing new merges.
Partition generate_congruence(const Algebra& alg,
                              const std::vector<std::pair<Elem, Elem>>& pairs);

/// Join in Con(A): the congruence generated by the union.
Partition congruence_join(const Algebra& alg, const Partition& a, const Partition& b);

/// A pair (x, y) related by a partition whose images under some operation,
/// with the other arguments fixed to `context`, are not related.
struct CompatibilityViolation {
  std::size_t op = 0;
  std::size_t position = 0;
  std::vector<Elem> context;
  Elem x = 0;
  Elem y = 0;
};

std::optional<CompatibilityViolation> compatibility_violation(const Algebra& alg,
                                                              const Partition& theta);
inline bool is_congruence(const Algebra& alg, const Partition& theta) {
  return theta.size() == alg.size() && !compatibility_violation(alg, theta);
}

/// Greatest congruence contained in the equivalence relation `bound`,
/// computed as a greatest fixpoint: a pair survives a round iff it is related
/// and every basic translation maps it to a related pair.
Partition largest_congruence_below(const Algebra& alg, const Partition& bound);

/// The congruence lattice of a finite algebra with its operation tables.
///
/// Elements are sorted by number of blocks (descending) and then by canonical
/// form, so index 0 is the equality relation and the last index is the total
/// relation.
class ConLattice {
 public:
  ConLattice() = default;
  ConLattice(std::vector<Partition> elements, std::vector<std::size_t> join,
             std::vector<std::size_t> meet);

  std::size_t size() const noexcept { return elements_.size(); }
  const Partition& at(std::size_t i) const { return elements_.at(i); }
  const std::vector<Partition>& elements() const noexcept { return elements_; }
  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return elements_.size() - 1; }

  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  bool leq(std::size_t a, std::size_t b) const { return meet(a, b) == a; }

  std::optional<std::size_t> index_of(const Partition& p) const;
  /// Indices of the upper covers of `i`.
  const std::vector<std::size_t>& covers(std::size_t i) const { return covers_.at(i); }

 private:
  std::vector<Partition> elements_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::vector<std::vector<std::size_t>> covers_;
  std::map<Partition, std::size_t> index_;
};

/// Every congruence, obtained by closing the principal congruences Cg(a, b)
/// under joins. Throws BudgetExceeded when more than `budget` congruences are
/// found.
ConLattice congruence_lattice(const Algebra& alg, std::size_t budget = kDefaultLatticeBudget);

/// Brute-force alternative: enumerate every partition of the universe and keep
/// the compatible ones. Sorted like ConLattice. Intended for n <= 6 or so.
std::vector<Partition> all_congruences_brute_force(const Algebra& alg);

struct SemidistributivityViolation {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;
};

/// First triple (in index order) with a^b = a^c but a^b != a^(b v c), if any.
std::optional<SemidistributivityViolation> meet_semidistributivity_violation(
    const ConLattice& lat);
inline bool is_meet_semidistributive(const ConLattice& lat) {
  return !meet_semidistributivity_violation(lat);
}

}  // namespace commlab
