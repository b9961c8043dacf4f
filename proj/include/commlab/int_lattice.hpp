// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace commlab {

using BigInt = boost::multiprecision::cpp_int;
using IntVector = std::vector<BigInt>;
/// Sparse integer combination of generators: generator index -> coefficient.
using Combination = std::map<std::size_t, BigInt>;

/// A subgroup of Z^dim given by generators, kept as a basis in Hermite normal
/// form: rows in increasing order of pivot column, positive pivots, and every
/// entry above a pivot reduced into [0, pivot).
///
/// With coefficient tracking on, each basis row remembers how it is written as
/// an integer combination of the generators, so membership can be certified.
class IntLattice {
 public:
  explicit IntLattice(std::size_t dim, bool track_coefficients = false);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t num_generators() const noexcept { return num_generators_; }
  bool tracks_coefficients() const noexcept { return track_; }

  /// Adds a generator; its index is the number of generators added before.
  void add(const IntVector& v);
  /// Puts the basis in reduced form. Called by the queries; idempotent.
  void reduce();

  const IntVector& row(std::size_t i) const { return rows_.at(i).v; }
  std::size_t pivot(std::size_t i) const { return rows_.at(i).pivot; }

  bool contains(const IntVector& target) const;
  /// A combination of generators summing to `target`, or nullopt if `target`
  /// is not in the lattice. Requires coefficient tracking.
  std::optional<Combination> solve(const IntVector& target) const;

  std::string to_string() const;

 private:
  struct Row {
    IntVector v;
    std::size_t pivot = 0;
    Combination coef;
  };

  std::optional<Combination> reduce_target(IntVector t, bool want_coefficients) const;

  std::size_t dim_;
  bool track_;
  bool reduced_ = true;
  std::size_t num_generators_ = 0;
  std::vector<Row> rows_;  // sorted by pivot
};

}  // namespace commlab
