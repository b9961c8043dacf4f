// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "commlab/algebra.hpp"
#include "commlab/partition.hpp"

namespace commlab {

struct Quotient {
  Algebra algebra;
  /// block[x] is the element of the quotient containing x.
  std::vector<Elem> block;
};

/// A / theta. Blocks are numbered like the canonical labels of theta. Throws
/// ValidationError naming the offending operation and tuple if theta is not a
/// congruence.
Quotient quotient_algebra(const Algebra& alg, const Partition& theta);

/// Image of a partition of A under the quotient map (the partition of A/theta
/// whose blocks are the images of the blocks of `p`, closed up to an
/// equivalence).
Partition image_partition(const Quotient& q, const Partition& p);

struct DiagonalSquare {
  Algebra algebra;
  /// Element i of the square is the pair pairs[i]; pairs are the delta-related
  /// pairs (x, y) in row-major order.
  std::vector<std::pair<Elem, Elem>> pairs;
  /// index[x * n + y] is the element for (x, y), or kNone.
  std::vector<Elem> index;

  static constexpr Elem kNone = static_cast<Elem>(-1);
  Elem at(Elem x, Elem y, std::size_t n) const { return index[x * n + y]; }
};

/// The subalgebra of A x A with universe delta.
DiagonalSquare diagonal_square(const Algebra& alg, const Partition& delta);

}  // namespace commlab
