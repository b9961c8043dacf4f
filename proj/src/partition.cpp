// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/partition.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

#include "commlab/error.hpp"
#include "union_find.hpp"

namespace commlab {

Partition::Partition(const std::vector<std::size_t>& labels) {
  block_.resize(labels.size());
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = renumber.emplace(labels[i], renumber.size());
    block_[i] = it->second;
  }
  num_blocks_ = renumber.size();
}

Partition Partition::equality(std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return Partition(labels);
}

Partition Partition::total(std::size_t n) {
  return Partition(std::vector<std::size_t>(n, 0));
}

Partition Partition::from_pairs(std::size_t n,
                                const std::vector<std::pair<Elem, Elem>>& pairs) {
  detail::UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  return uf.partition();
}

Partition Partition::parse(std::string_view text, std::size_t n) {
  std::vector<std::size_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  std::vector<bool> seen(n, false);
  std::size_t block = n;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size() || text[pos] == '|') {
      ++block;
      ++pos;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      throw ParseError(std::string("unexpected character '") + text[pos] + "' in partition",
                       1, pos + 1);
    }
    std::size_t value = 0;
    std::from_chars(text.data() + start, text.data() + pos, value);
    if (value >= n) {
      throw ParseError("element " + std::to_string(value) + " out of range 0.." +
                           std::to_string(n - 1),
                       1, start + 1);
    }
    if (seen[value]) {
      throw ParseError("element " + std::to_string(value) + " listed twice", 1, start + 1);
    }
    seen[value] = true;
    labels[value] = block;
  }
  return Partition(labels);
}

std::vector<std::vector<Elem>> Partition::blocks() const {
  std::vector<std::vector<Elem>> out(num_blocks_);
  for (std::size_t i = 0; i < block_.size(); ++i) out[block_[i]].push_back(static_cast<Elem>(i));
  return out;
}

std::vector<std::pair<Elem, Elem>> Partition::pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < block_.size(); ++x) {
    for (Elem y = 0; y < block_.size(); ++y) {
      if (block_[x] == block_[y]) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> Partition::spanning_pairs() const {
  std::vector<Elem> least(num_blocks_, 0);
  std::vector<bool> found(num_blocks_, false);
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < block_.size(); ++x) {
    std::size_t b = block_[x];
    if (!found[b]) {
      found[b] = true;
      least[b] = x;
    } else {
      out.emplace_back(least[b], x);
    }
  }
  return out;
}

bool Partition::leq(const Partition& other) const {
  if (other.size() != size()) return false;
  // Each block of this partition must map into a single block of `other`.
  std::vector<std::size_t> image(num_blocks_, other.size());
  for (std::size_t i = 0; i < block_.size(); ++i) {
    std::size_t& target = image[block_[i]];
    if (target == other.size()) {
      target = other.block_[i];
    } else if (target != other.block_[i]) {
      return false;
    }
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b > 0) out += "|";
    for (std::size_t i = 0; i < bs[b].size(); ++i) {
      if (i > 0) out += " ";
      out += std::to_string(bs[b][i]);
    }
  }
  return out;
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw ValidationError("partition sizes differ");
  std::vector<std::size_t> labels(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    labels[i] = a.block_of(static_cast<Elem>(i)) * b.num_blocks() +
                b.block_of(static_cast<Elem>(i));
  }
  return Partition(labels);
}

Partition join_equivalence(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw ValidationError("partition sizes differ");
  detail::UnionFind uf(a.size());
  for (auto [x, y] : a.spanning_pairs()) uf.unite(x, y);
  for (auto [x, y] : b.spanning_pairs()) uf.unite(x, y);
  return uf.partition();
}

}  // namespace commlab
