// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "commlab/algebra.hpp"

namespace commlab::detail {

/// A basic translation x -> f(c_1, ..., x, ..., c_r). Its value at x is
/// table[base + x * stride].
struct Translation {
  const std::vector<Elem>* table = nullptr;
  std::size_t op = 0;
  std::size_t position = 0;
  std::size_t base = 0;
  std::size_t stride = 0;

  Elem operator()(Elem x) const { return (*table)[base + x * stride]; }
};

/// All basic translations of `alg`, in order of operation, position and
/// context (lexicographic).
inline std::vector<Translation> basic_translations(const Algebra& alg) {
  std::vector<Translation> out;
  const std::size_t n = alg.size();
  for (std::size_t op = 0; op < alg.num_ops(); ++op) {
    const Operation& o = alg.op(op);
    for (std::size_t p = 0; p < o.arity; ++p) {
      std::size_t stride = 1;
      for (std::size_t i = p + 1; i < o.arity; ++i) stride *= n;
      for (std::size_t base = 0; base < o.table.size(); ++base) {
        if ((base / stride) % n != 0) continue;
        out.push_back({&o.table, op, p, base, stride});
      }
    }
  }
  return out;
}

/// The constant arguments of a translation, in positional order, with the
/// moving position omitted.
inline std::vector<Elem> translation_context(const Algebra& alg, const Translation& t) {
  const std::size_t n = alg.size();
  const std::size_t arity = alg.op(t.op).arity;
  std::vector<Elem> digits(arity);
  std::size_t rest = t.base;
  for (std::size_t i = arity; i-- > 0;) {
    digits[i] = static_cast<Elem>(rest % n);
    rest /= n;
  }
  std::vector<Elem> context;
  for (std::size_t i = 0; i < arity; ++i) {
    if (i != t.position) context.push_back(digits[i]);
  }
  return context;
}

}  // namespace commlab::detail
