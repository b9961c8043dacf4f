// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/subpower.hpp"

#include <algorithm>
#include <map>
#include <new>

#include "commlab/error.hpp"

namespace commlab {

namespace {

std::uint64_t hash_tuple(std::span<const Elem> tuple) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ tuple.size();
  for (Elem e : tuple) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return h ^ (h >> 33);
}

}  // namespace

std::optional<std::size_t> Subuniverse::find(std::span<const Elem> tuple) const {
  if (tuple.size() != exponent_ || slots_.empty()) return std::nullopt;
  std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash_tuple(tuple) & mask;; s = (s + 1) & mask) {
    std::uint32_t idx = slots_[s];
    if (idx == kEmpty) return std::nullopt;
    auto candidate = element(idx);
    if (std::equal(candidate.begin(), candidate.end(), tuple.begin())) return idx;
  }
}

TermPtr Subuniverse::term(const Algebra& alg, std::size_t i) const {
  std::vector<TermPtr> cache(size());
  std::vector<std::size_t> stack{i};
  while (!stack.empty()) {
    std::size_t cur = stack.back();
    if (cache[cur]) {
      stack.pop_back();
      continue;
    }
    const Derivation& d = derivations_[cur];
    if (d.is_generator()) {
      cache[cur] = Term::variable(d.args.front());
      stack.pop_back();
      continue;
    }
    bool ready = true;
    for (std::size_t a : d.args) {
      if (!cache[a]) {
        stack.push_back(a);
        ready = false;
      }
    }
    if (!ready) continue;
    std::vector<TermPtr> args;
    args.reserve(d.args.size());
    for (std::size_t a : d.args) args.push_back(cache[a]);
    cache[cur] = Term::apply(alg.op(d.op).name, std::move(args));
    stack.pop_back();
  }
  return cache[i];
}

class SubpowerBuilder {
 public:
  SubpowerBuilder(const Algebra& alg, std::size_t k, std::size_t budget)
      : alg_(alg), budget_(budget) {
    sub_.exponent_ = k;
    sub_.slots_.assign(64, Subuniverse::kEmpty);
  }

  Subuniverse build(std::span<const std::vector<Elem>> gens) {
    const std::size_t k = sub_.exponent_;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].size() != k) {
        throw ValidationError("generator " + std::to_string(g) + " has length " +
                              std::to_string(gens[g].size()) + ", expected " +
                              std::to_string(k));
      }
      for (Elem e : gens[g]) {
        if (e >= alg_.size()) throw ValidationError("generator entry out of range");
      }
      if (!sub_.contains(gens[g])) {
        check_budget(1);
        append(gens[g], Derivation{Derivation::kGenerator, {g}});
      }
    }
    sub_.num_generators_ = sub_.size();

    Batch constants;
    for (std::size_t op = 0; op < alg_.num_ops(); ++op) {
      if (alg_.op(op).arity != 0) continue;
      std::vector<Elem> tuple(k, alg_.op(op).table.front());
      if (!sub_.contains(tuple)) constants.emplace(std::move(tuple), Derivation{op, {}});
    }
    flush(constants);

    std::vector<Elem> result(k);
    for (std::size_t cur = 0; cur < sub_.size(); ++cur) {
      Batch batch;
      for (std::size_t op = 0; op < alg_.num_ops(); ++op) {
        std::size_t arity = alg_.op(op).arity;
        if (arity == 0) continue;
        for_each_argument_list(arity, cur, [&](const std::vector<std::size_t>& args) {
          apply(op, args, result);
          if (sub_.contains(result)) return;
          auto it = batch.find(result);
          if (it == batch.end()) {
            check_budget(batch.size() + 1);
            batch.emplace(result, Derivation{op, args});
          } else if (std::tie(op, args) < std::tie(it->second.op, it->second.args)) {
            it->second = Derivation{op, args};
          }
        });
      }
      flush(batch);
    }
    return std::move(sub_);
  }

 private:
  using Batch = std::map<std::vector<Elem>, Derivation>;

  void check_budget(std::size_t pending) const {
    if (sub_.size() + pending > budget_) {
      throw BudgetExceeded("subpower closure exceeded its element budget", budget_,
                           sub_.size() + pending - 1);
    }
  }

  // Argument lists over elements 0..cur that contain cur, grouped by the
  // position of the first occurrence of cur.
  template <class F>
  void for_each_argument_list(std::size_t arity, std::size_t cur, F&& visit) const {
    std::vector<std::size_t> args(arity);
    for (std::size_t first = 0; first < arity; ++first) {
      if (first > 0 && cur == 0) break;
      std::fill(args.begin(), args.end(), 0);
      args[first] = cur;
      while (true) {
        visit(args);
        bool wrapped = true;
        for (std::size_t i = arity; i-- > 0;) {
          if (i == first) continue;
          std::size_t limit = i < first ? cur : cur + 1;
          if (++args[i] < limit) {
            wrapped = false;
            break;
          }
          args[i] = 0;
        }
        if (wrapped) break;
      }
    }
  }

  void apply(std::size_t op, const std::vector<std::size_t>& args, std::vector<Elem>& out) const {
    const auto& table = alg_.op(op).table;
    const std::size_t n = alg_.size();
    const std::size_t k = sub_.exponent_;
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t index = 0;
      for (std::size_t a : args) index = index * n + sub_.storage_[a * k + j];
      out[j] = table[index];
    }
  }

  void flush(Batch& batch) {
    for (auto& [tuple, derivation] : batch) append(tuple, std::move(derivation));
    batch.clear();
  }

  void append(std::span<const Elem> tuple, Derivation derivation) {
    std::size_t index = sub_.size();
    sub_.storage_.insert(sub_.storage_.end(), tuple.begin(), tuple.end());
    sub_.derivations_.push_back(std::move(derivation));
    if (2 * (index + 1) > sub_.slots_.size()) {
      rehash(sub_.slots_.size() * 2);
    } else {
      insert_slot(index);
    }
  }

  void insert_slot(std::size_t index) {
    std::size_t mask = sub_.slots_.size() - 1;
    std::size_t s = hash_tuple(sub_.element(index)) & mask;
    while (sub_.slots_[s] != Subuniverse::kEmpty) s = (s + 1) & mask;
    sub_.slots_[s] = static_cast<std::uint32_t>(index);
  }

  void rehash(std::size_t capacity) {
    sub_.slots_.assign(capacity, Subuniverse::kEmpty);
    for (std::size_t i = 0; i < sub_.size(); ++i) insert_slot(i);
  }

  const Algebra& alg_;
  std::size_t budget_;
  Subuniverse sub_;
};

Subuniverse generate_subpower(const Algebra& alg, std::size_t k,
                              std::span<const std::vector<Elem>> gens,
                              ClosureOptions options) {
  try {
    return SubpowerBuilder(alg, k, options.budget).build(gens);
  } catch (const std::bad_alloc&) {
    // Wide tuples can exhaust memory well before the element budget.
    throw BudgetExceeded("subpower closure ran out of memory", options.budget, 0);
  }
}

std::vector<Elem> projection_table(std::size_t n, std::size_t m, std::size_t i) {
  std::size_t rows = checked_power(n, m);
  std::size_t stride = checked_power(n, m - 1 - i);
  std::vector<Elem> table(rows);
  for (std::size_t r = 0; r < rows; ++r) table[r] = static_cast<Elem>((r / stride) % n);
  return table;
}

Subuniverse free_term_operations(const Algebra& alg, std::size_t m, ClosureOptions options) {
  if (m == 0) throw ValidationError("term operations need arity at least 1");
  std::vector<std::vector<Elem>> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(projection_table(alg.size(), m, i));
  return generate_subpower(alg, checked_power(alg.size(), m), gens, options);
}

}  // namespace commlab
