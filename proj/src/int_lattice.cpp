// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/int_lattice.hpp"

#include <algorithm>
#include <sstream>

#include "commlab/error.hpp"

namespace commlab {

namespace {

// out = x * a + y * b, dropping zeros.
Combination combine(const BigInt& x, const Combination& a, const BigInt& y,
                    const Combination& b) {
  Combination out;
  if (!x.is_zero()) {
    for (const auto& [k, c] : a) out[k] += x * c;
  }
  if (!y.is_zero()) {
    for (const auto& [k, c] : b) out[k] += y * c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

void axpy(IntVector& y, const BigInt& a, const IntVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

// Floor division for a positive divisor.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a.sign() < 0 && q * b != a) --q;
  return q;
}

// g = gcd(a, b) >= 0 with s*a + t*b = g.
void extended_gcd(const BigInt& a, const BigInt& b, BigInt& g, BigInt& s, BigInt& t) {
  BigInt old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (!r.is_zero()) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r.sign() < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  s = old_s;
  t = old_t;
}

}  // namespace

IntLattice::IntLattice(std::size_t dim, bool track_coefficients)
    : dim_(dim), track_(track_coefficients) {}

void IntLattice::add(const IntVector& v) {
  if (v.size() != dim_) throw ValidationError("lattice vector has the wrong dimension");
  Row cur{v, 0, {}};
  if (track_) cur.coef[num_generators_] = 1;
  ++num_generators_;

  std::size_t r = 0;
  while (true) {
    auto nz = std::find_if(cur.v.begin(), cur.v.end(), [](const BigInt& x) { return !x.is_zero(); });
    if (nz == cur.v.end()) return;  // dependent on the basis
    const std::size_t p = static_cast<std::size_t>(nz - cur.v.begin());
    while (r < rows_.size() && rows_[r].pivot < p) ++r;
    if (r == rows_.size() || rows_[r].pivot != p) {
      cur.pivot = p;
      if (cur.v[p].sign() < 0) {
        for (auto& x : cur.v) x = -x;
        for (auto& [k, c] : cur.coef) c = -c;
      }
      rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(r), std::move(cur));
      reduced_ = false;
      return;
    }
    // Unimodular step on (row, cur) that clears cur's entry at the pivot.
    Row& row = rows_[r];
    BigInt g, s, t;
    extended_gcd(row.v[p], cur.v[p], g, s, t);
    BigInt x = row.v[p] / g;
    BigInt y = cur.v[p] / g;
    IntVector new_row(dim_), new_cur(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      new_row[i] = s * row.v[i] + t * cur.v[i];
      new_cur[i] = x * cur.v[i] - y * row.v[i];
    }
    if (track_) {
      Combination new_row_coef = combine(s, row.coef, t, cur.coef);
      cur.coef = combine(x, cur.coef, -y, row.coef);
      row.coef = std::move(new_row_coef);
    }
    row.v = std::move(new_row);
    cur.v = std::move(new_cur);
    reduced_ = false;
  }
}

void IntLattice::reduce() {
  if (reduced_) return;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& ri = rows_[i];
    for (std::size_t k = 0; k < i; ++k) {
      Row& rk = rows_[k];
      BigInt q = floor_div(rk.v[ri.pivot], ri.v[ri.pivot]);
      if (q.is_zero()) continue;
      axpy(rk.v, -q, ri.v);
      if (track_) rk.coef = combine(1, rk.coef, -q, ri.coef);
    }
  }
  reduced_ = true;
}

std::optional<Combination> IntLattice::reduce_target(IntVector t, bool want_coefficients) const {
  if (t.size() != dim_) throw ValidationError("lattice vector has the wrong dimension");
  Combination coef;
  for (const Row& row : rows_) {
    const BigInt& entry = t[row.pivot];
    if (entry.is_zero()) continue;
    if (entry % row.v[row.pivot] != 0) return std::nullopt;
    BigInt q = entry / row.v[row.pivot];
    axpy(t, -q, row.v);
    if (want_coefficients) coef = combine(1, coef, q, row.coef);
  }
  for (const auto& x : t) {
    if (!x.is_zero()) return std::nullopt;
  }
  return coef;
}

bool IntLattice::contains(const IntVector& target) const {
  return reduce_target(target, false).has_value();
}

std::optional<Combination> IntLattice::solve(const IntVector& target) const {
  if (!track_) throw ValidationError("lattice was built without coefficient tracking");
  return reduce_target(target, true);
}

std::string IntLattice::to_string() const {
  std::ostringstream out;
  for (const Row& row : rows_) {
    for (std::size_t i = 0; i < dim_; ++i) out << (i ? " " : "") << row.v[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace commlab
