// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commlab/algebra.hpp"

namespace commlab {

/// An equivalence relation on {0, ..., n-1} in canonical form: block ids are
/// numbered in increasing order of the least element of each block, so equal
/// relations have identical representations.
class Partition {
 public:
  Partition() = default;
  /// Any labelling of the elements; two elements share a block iff their
  /// labels are equal.
  explicit Partition(const std::vector<std::size_t>& labels);

  static Partition equality(std::size_t n);
  static Partition total(std::size_t n);
  /// Equivalence relation generated by `pairs`.
  static Partition from_pairs(std::size_t n,
                              const std::vector<std::pair<Elem, Elem>>& pairs);

  /// Parses `0 1|2`: blocks separated by `|`, elements by whitespace. Elements
  /// not mentioned are singletons.
  static Partition parse(std::string_view text, std::size_t n);

  std::size_t size() const noexcept { return block_.size(); }
  std::size_t num_blocks() const noexcept { return num_blocks_; }
  std::size_t block_of(Elem x) const { return block_[x]; }
  const std::vector<std::size_t>& labels() const noexcept { return block_; }
  bool related(Elem x, Elem y) const { return block_[x] == block_[y]; }

  bool is_equality() const noexcept { return num_blocks_ == block_.size(); }
  bool is_total() const noexcept { return num_blocks_ <= 1; }

  /// Blocks in canonical order, each sorted ascending.
  std::vector<std::vector<Elem>> blocks() const;
  /// Every related ordered pair (x, y), including x == y, in lexicographic order.
  std::vector<std::pair<Elem, Elem>> pairs() const;
  /// The pairs (least element of block, x) for every non-least x; generates
  /// the relation as an equivalence.
  std::vector<std::pair<Elem, Elem>> spanning_pairs() const;

  /// Refinement order: true iff this relation is contained in `other`.
  bool leq(const Partition& other) const;

  /// `0 1|2` with every block printed, singletons included.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.block_ <=> b.block_;
  }

 private:
  std::vector<std::size_t> block_;
  std::size_t num_blocks_ = 0;
};

/// Intersection of two equivalence relations.
Partition meet(const Partition& a, const Partition& b);
/// Transitive closure of the union of two equivalence relations.
Partition join_equivalence(const Partition& a, const Partition& b);

}  // namespace commlab
