// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "commlab/error.hpp"
#include "translations.hpp"
#include "union_find.hpp"

namespace commlab {

Partition generate_congruence(const Algebra& alg,
                              const std::vector<std::pair<Elem, Elem>>& pairs) {
  const std::size_t n = alg.size();
  detail::UnionFind uf(n);
  std::vector<std::pair<Elem, Elem>> work;
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw ValidationError("pair element out of range");
    if (uf.unite(a, b)) work.emplace_back(a, b);
  }
  if (work.empty()) return uf.partition();
  const auto translations = detail::basic_translations(alg);
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (const auto& t : translations) {
      Elem fa = t(a);
      Elem fb = t(b);
      if (uf.unite(fa, fb)) work.emplace_back(fa, fb);
    }
  }
  return uf.partition();
}

Partition congruence_join(const Algebra& alg, const Partition& a, const Partition& b) {
  auto pairs = a.spanning_pairs();
  auto more = b.spanning_pairs();
  pairs.insert(pairs.end(), more.begin(), more.end());
  return generate_congruence(alg, pairs);
}

std::optional<CompatibilityViolation> compatibility_violation(const Algebra& alg,
                                                              const Partition& theta) {
  if (theta.size() != alg.size()) throw ValidationError("partition size does not match algebra");
  const auto pairs = theta.spanning_pairs();
  for (const auto& t : detail::basic_translations(alg)) {
    for (auto [x, y] : pairs) {
      if (!theta.related(t(x), t(y))) {
        return CompatibilityViolation{t.op, t.position, detail::translation_context(alg, t), x,
                                      y};
      }
    }
  }
  return std::nullopt;
}

Partition largest_congruence_below(const Algebra& alg, const Partition& bound) {
  if (bound.size() != alg.size()) throw ValidationError("partition size does not match algebra");
  const std::size_t n = alg.size();
  const auto translations = detail::basic_translations(alg);
  Partition current = bound;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> classes;
    std::vector<std::size_t> labels(n);
    std::vector<std::size_t> signature(translations.size() + 1);
    for (Elem x = 0; x < n; ++x) {
      signature[0] = current.block_of(x);
      for (std::size_t i = 0; i < translations.size(); ++i) {
        signature[i + 1] = current.block_of(translations[i](x));
      }
      labels[x] = classes.emplace(signature, classes.size()).first->second;
    }
    Partition next(labels);
    if (next.num_blocks() == current.num_blocks()) return next;
    current = std::move(next);
  }
}

ConLattice::ConLattice(std::vector<Partition> elements, std::vector<std::size_t> join,
                       std::vector<std::size_t> meet)
    : elements_(std::move(elements)), join_(std::move(join)), meet_(std::move(meet)) {
  const std::size_t l = elements_.size();
  for (std::size_t i = 0; i < l; ++i) index_.emplace(elements_[i], i);
  covers_.resize(l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool minimal = true;
      for (std::size_t k = 0; k < l && minimal; ++k) {
        if (k != i && k != j && leq(i, k) && leq(k, j)) minimal = false;
      }
      if (minimal) covers_[i].push_back(j);
    }
  }
}

std::optional<std::size_t> ConLattice::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

bool lattice_order(const Partition& a, const Partition& b) {
  if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
  return a < b;
}

}  // namespace

ConLattice congruence_lattice(const Algebra& alg, std::size_t budget) {
  const std::size_t n = alg.size();
  std::vector<Partition> principal;
  {
    std::set<Partition> seen;
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = a + 1; b < n; ++b) {
        Partition p = generate_congruence(alg, {{a, b}});
        if (seen.insert(p).second) principal.push_back(std::move(p));
      }
    }
  }

  std::set<Partition> found;
  std::deque<Partition> queue;
  auto add = [&](Partition p) {
    if (found.count(p)) return;
    if (found.size() >= budget) {
      throw BudgetExceeded("congruence lattice exceeded its size budget", budget, found.size());
    }
    found.insert(p);
    queue.push_back(std::move(p));
  };
  add(Partition::equality(n));
  for (const auto& p : principal) add(p);
  while (!queue.empty()) {
    Partition cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& p : principal) {
      if (p.leq(cur)) continue;
      add(congruence_join(alg, cur, p));
    }
  }

  std::vector<Partition> elements(found.begin(), found.end());
  std::sort(elements.begin(), elements.end(), lattice_order);
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

  const std::size_t l = elements.size();
  std::vector<std::size_t> join(l * l);
  std::vector<std::size_t> meet_table(l * l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i; j < l; ++j) {
      auto jn = index.find(congruence_join(alg, elements[i], elements[j]));
      auto mt = index.find(meet(elements[i], elements[j]));
      if (jn == index.end() || mt == index.end()) {
        throw InternalError("congruence lattice is not closed under join and meet");
      }
      join[i * l + j] = join[j * l + i] = jn->second;
      meet_table[i * l + j] = meet_table[j * l + i] = mt->second;
    }
  }
  return ConLattice(std::move(elements), std::move(join), std::move(meet_table));
}

namespace {

// Compatibility straight from the definition: related argument tuples give
// related values.
bool compatible_by_definition(const Algebra& alg, const Partition& theta) {
  const std::size_t n = alg.size();
  for (const auto& op : alg.ops()) {
    const std::size_t rows = op.table.size();
    std::vector<Elem> a(op.arity), b(op.arity);
    for (std::size_t ra = 0; ra < rows; ++ra) {
      std::size_t rest = ra;
      for (std::size_t i = op.arity; i-- > 0;) {
        a[i] = static_cast<Elem>(rest % n);
        rest /= n;
      }
      for (std::size_t rb = 0; rb < rows; ++rb) {
        rest = rb;
        bool related = true;
        for (std::size_t i = op.arity; i-- > 0;) {
          b[i] = static_cast<Elem>(rest % n);
          rest /= n;
          if (!theta.related(a[i], b[i])) related = false;
        }
        if (related && !theta.related(op.table[ra], op.table[rb])) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Partition> all_congruences_brute_force(const Algebra& alg) {
  const std::size_t n = alg.size();
  std::vector<Partition> out;
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);
  while (true) {
    Partition p(rgs);
    if (compatible_by_definition(alg, p)) out.push_back(p);
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= prefix_max[i - 1]) break;
    }
    if (i == 0 || i == static_cast<std::size_t>(-1)) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
  }
  std::sort(out.begin(), out.end(), lattice_order);
  return out;
}

std::optional<SemidistributivityViolation> meet_semidistributivity_violation(
    const ConLattice& lat) {
  for (std::size_t a = 0; a < lat.size(); ++a) {
    for (std::size_t b = 0; b < lat.size(); ++b) {
      for (std::size_t c = 0; c < lat.size(); ++c) {
        std::size_t ab = lat.meet(a, b);
        if (ab != lat.meet(a, c)) continue;
        if (ab != lat.meet(a, lat.join(b, c))) return SemidistributivityViolation{a, b, c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace commlab
