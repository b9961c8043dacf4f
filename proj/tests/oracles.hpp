// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Slow, independent reference implementations used only by the tests. They
// share the Algebra and Partition value types with the library but none of
// its algorithms.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "commlab/algebra.hpp"
#include "commlab/partition.hpp"

namespace oracle {

using commlab::Algebra;
using commlab::Elem;
using commlab::Partition;
using Tuple = std::vector<Elem>;

// Naive fixpoint: apply every operation to every argument list drawn from the
// current set until nothing new appears.
std::set<Tuple> closure(const Algebra& alg, std::size_t k, const std::vector<Tuple>& gens);

// Term operations of arity m built syntactically: projections and constants,
// then every operation applied to terms of the previous depth, up to `depth`
// levels or until nothing new appears.
std::set<Tuple> syntactic_term_operations(const Algebra& alg, std::size_t m,
                                          std::size_t depth = 64);

// Every partition of {0..n-1}, built by recursive block assignment.
std::vector<Partition> all_partitions(std::size_t n);

// Compatibility tested on all pairs of related argument tuples.
bool compatible(const Algebra& alg, const Partition& p);
std::vector<Partition> congruences(const Algebra& alg);
Partition intersect_all(const std::vector<Partition>& ps, std::size_t n);

// M(alpha, beta) as a set of (a, b, c, d).
std::set<Tuple> matrices(const Algebra& alg, const Partition& alpha, const Partition& beta);
// C(alpha, beta; delta) straight from the definition.
bool centralizes(const std::set<Tuple>& m, const Partition& delta, bool transposed = false);
// Least congruence delta satisfying the term condition(s), as the
// intersection of all congruences that do.
Partition tc_commutator(const Algebra& alg, const Partition& alpha, const Partition& beta);
Partition sym_commutator(const Algebra& alg, const Partition& alpha, const Partition& beta);

// A homomorphism Z^n -> Z/m (m >= 2) or Z (m == 0) given by weights; it
// certifies that a vector lies outside a lattice when it kills every
// generator but not the vector.
struct Functional {
  std::int64_t modulus = 0;
  std::vector<std::int64_t> weights;
};
using IntVec = std::vector<std::int64_t>;
std::optional<Functional> separating_functional(const std::vector<IntVec>& gens,
                                                const IntVec& target, std::int64_t max_modulus,
                                                std::int64_t max_weight);

enum class Membership { Yes, No, Unknown };
// Exhaustive search over coefficient vectors in [-bound, bound]^gens, then a
// rational-rank test and a search for separating functionals. Unknown when
// neither finds anything.
Membership bounded_membership(const std::vector<IntVec>& gens, const IntVec& target,
                              std::int64_t bound);
// Rank of an integer matrix over the rationals (fraction-free elimination).
std::size_t rational_rank(std::vector<IntVec> rows);

// Group-theoretic commutator of the normal subgroups that are the identity
// classes of alpha and beta, returned as its coset partition. The algebra
// must be a group given by one binary operation.
Partition group_commutator(const Algebra& group, const Partition& alpha, const Partition& beta);

// Random algebra with the given operation arities, from a seeded generator.
Algebra random_algebra(std::mt19937_64& rng, std::size_t n, const std::vector<std::size_t>& arities,
                       const std::string& name = "random");
// Algebra number `code` among all binary operations on n elements (tables in
// lexicographic order, table entry 0 least significant digit).
Algebra binary_algebra(std::size_t n, std::uint64_t code);

}  // namespace oracle
