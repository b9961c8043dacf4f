// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "commlab/algebra.hpp"

namespace commlab {

inline constexpr std::size_t kDefaultClosureBudget = 5'000'000;

struct ClosureOptions {
  /// Maximum number of tuples in the closure; exceeding it throws BudgetExceeded.
  std::size_t budget = kDefaultClosureBudget;
};

/// How an element of a subuniverse was first obtained.
struct Derivation {
  static constexpr std::size_t kGenerator = static_cast<std::size_t>(-1);

  /// Index of the operation, or kGenerator.
  std::size_t op = kGenerator;
  /// For a generator: its position in the generator list supplied to the
  /// closure. Otherwise the indices of the argument elements.
  std::vector<std::size_t> args;

  bool is_generator() const noexcept { return op == kGenerator; }
};

/// A subuniverse of A^k together with one derivation per element.
///
/// Elements are ordered by discovery: the generators in the given order
/// (duplicates dropped), then the values of constants, then for k = 0, 1, ...
/// the new tuples obtained by applying some operation to an argument list
/// drawn from elements 0..k with element k among them, each such batch sorted
/// lexicographically. The recorded derivation of a new tuple is the first one
/// met while enumerating operations in order and argument lists in
/// lexicographic order.
class Subuniverse {
 public:
  Subuniverse() = default;

  std::size_t exponent() const noexcept { return exponent_; }
  std::size_t size() const noexcept { return derivations_.size(); }
  std::size_t num_generators() const noexcept { return num_generators_; }

  std::span<const Elem> element(std::size_t i) const {
    return {storage_.data() + i * exponent_, exponent_};
  }
  const Derivation& derivation(std::size_t i) const { return derivations_.at(i); }

  std::optional<std::size_t> find(std::span<const Elem> tuple) const;
  bool contains(std::span<const Elem> tuple) const { return find(tuple).has_value(); }

  /// Term whose coordinatewise value on the generators is element `i`.
  /// Variable j stands for generator j of the supplied list. Shared subterms
  /// are shared nodes.
  TermPtr term(const Algebra& alg, std::size_t i) const;

 private:
  friend class SubpowerBuilder;

  std::size_t exponent_ = 0;
  std::size_t num_generators_ = 0;
  std::vector<Elem> storage_;
  std::vector<Derivation> derivations_;
  // Open-addressing hash table of element indices; kEmpty marks a free slot.
  static constexpr std::uint32_t kEmpty = 0xffffffffu;
  std::vector<std::uint32_t> slots_;
};

/// Least subset of A^k containing `gens` and closed under every operation of
/// `alg` applied coordinatewise.
Subuniverse generate_subpower(const Algebra& alg, std::size_t k,
                              std::span<const std::vector<Elem>> gens,
                              ClosureOptions options = {});

/// The m-ary term operations of `alg`: the subuniverse of A^(n^m) generated by
/// the m projections. Each element is an operation table indexed like
/// Operation::table, and its term uses variables x0..x(m-1).
Subuniverse free_term_operations(const Algebra& alg, std::size_t m,
                                 ClosureOptions options = {});

/// Table of the i-th projection of arity m over an n-element set.
std::vector<Elem> projection_table(std::size_t n, std::size_t m, std::size_t i);

}  // namespace commlab
