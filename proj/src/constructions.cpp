// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/constructions.hpp"

#include <sstream>

#include "commlab/congruence.hpp"
#include "commlab/error.hpp"
#include "union_find.hpp"

namespace commlab {

namespace {

std::string describe(const Algebra& alg, const CompatibilityViolation& v) {
  const Operation& op = alg.op(v.op);
  std::ostringstream out;
  out << "operation " << op.name << " is not compatible: argument " << v.position
      << " varied over " << v.x << " ~ " << v.y << " with the others fixed to (";
  for (std::size_t i = 0; i < v.context.size(); ++i) out << (i ? "," : "") << v.context[i];
  out << ")";
  return out.str();
}

void require_congruence(const Algebra& alg, const Partition& theta, const char* what) {
  if (theta.size() != alg.size()) {
    throw ValidationError(std::string(what) + " has size " + std::to_string(theta.size()) +
                          ", algebra has size " + std::to_string(alg.size()));
  }
  if (auto v = compatibility_violation(alg, theta)) {
    throw ValidationError(std::string(what) + " is not a congruence: " + describe(alg, *v));
  }
}

}  // namespace

Quotient quotient_algebra(const Algebra& alg, const Partition& theta) {
  require_congruence(alg, theta, "partition");
  const std::size_t n = alg.size();
  const std::size_t m = theta.num_blocks();
  std::vector<Elem> rep(m);
  for (Elem x = n; x-- > 0;) rep[theta.block_of(x)] = x;  // least element of each block

  Quotient q;
  q.block.resize(n);
  for (Elem x = 0; x < n; ++x) q.block[x] = static_cast<Elem>(theta.block_of(x));

  std::vector<Operation> ops;
  for (const auto& op : alg.ops()) {
    Operation out{op.name, op.arity, std::vector<Elem>(checked_power(m, op.arity))};
    std::vector<Elem> args(op.arity);
    for (std::size_t r = 0; r < out.table.size(); ++r) {
      std::size_t rest = r;
      for (std::size_t i = op.arity; i-- > 0;) {
        args[i] = rep[rest % m];
        rest /= m;
      }
      out.table[r] = q.block[op.table[table_index(args, n)]];
    }
    ops.push_back(std::move(out));
  }
  q.algebra = Algebra(alg.name() + ".quotient", m, std::move(ops));
  return q;
}

Partition image_partition(const Quotient& q, const Partition& p) {
  detail::UnionFind uf(q.algebra.size());
  for (auto [x, y] : p.spanning_pairs()) uf.unite(q.block[x], q.block[y]);
  return uf.partition();
}

DiagonalSquare diagonal_square(const Algebra& alg, const Partition& delta) {
  require_congruence(alg, delta, "delta");
  const std::size_t n = alg.size();
  DiagonalSquare sq;
  sq.index.assign(n * n, DiagonalSquare::kNone);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!delta.related(x, y)) continue;
      sq.index[x * n + y] = static_cast<Elem>(sq.pairs.size());
      sq.pairs.emplace_back(x, y);
    }
  }
  const std::size_t m = sq.pairs.size();
  std::vector<Operation> ops;
  for (const auto& op : alg.ops()) {
    Operation out{op.name, op.arity, std::vector<Elem>(checked_power(m, op.arity))};
    std::vector<Elem> left(op.arity), right(op.arity);
    for (std::size_t r = 0; r < out.table.size(); ++r) {
      std::size_t rest = r;
      for (std::size_t i = op.arity; i-- > 0;) {
        left[i] = sq.pairs[rest % m].first;
        right[i] = sq.pairs[rest % m].second;
        rest /= m;
      }
      Elem value = sq.at(alg.apply(&op - alg.ops().data(), left),
                         alg.apply(&op - alg.ops().data(), right), n);
      if (value == DiagonalSquare::kNone) throw InternalError("square is not closed");
      out.table[r] = value;
    }
    ops.push_back(std::move(out));
  }
  sq.algebra = Algebra(alg.name() + "-square", m, std::move(ops));
  return sq;
}

}  // namespace commlab
