// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace commlab {

/// Elements of a finite universe are 0-based integers.
using Elem = std::uint32_t;

/// Largest table an operation may have (n^arity entries).
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

/// A basic operation given by its full table. Entry `i` is the value at the
/// argument tuple whose base-n expansion (first argument most significant)
/// equals `i`.
struct Operation {
  std::string name;
  std::size_t arity = 0;
  std::vector<Elem> table;

  bool operator==(const Operation&) const = default;
};

/// Position of `args` in an operation table over an n-element universe.
std::size_t table_index(std::span<const Elem> args, std::size_t n);

/// n^k, throwing ValidationError when it exceeds kMaxTableSize.
std::size_t checked_power(std::size_t n, std::size_t k);

/// A finite algebra on {0, ..., size-1}. Immutable once constructed; the
/// constructor validates every table.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::string name, std::size_t size, std::vector<Operation> ops);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t num_ops() const noexcept { return ops_.size(); }
  const std::vector<Operation>& ops() const noexcept { return ops_; }
  const Operation& op(std::size_t i) const { return ops_.at(i); }
  std::optional<std::size_t> find_op(std::string_view name) const;

  Elem apply(std::size_t op, std::span<const Elem> args) const {
    return ops_[op].table[table_index(args, size_)];
  }

  bool operator==(const Algebra&) const = default;

 private:
  std::string name_;
  std::size_t size_ = 0;
  std::vector<Operation> ops_;
};

/// Reads the `.alg` text format:
///
///   algebra <name>
///   size <n>
///   op <name> <arity>
///   <n^arity values>
///
/// Values may be laid out freely across lines; `#` starts a comment.
Algebra parse_algebra(std::string_view text);
std::string format_algebra(const Algebra& alg);
Algebra load_algebra(const std::filesystem::path& path);

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Syntax tree of a term. Nodes may be shared, so a term is in general a DAG;
/// evaluation memoizes on node identity.
class Term {
 public:
  static TermPtr variable(std::size_t index);
  static TermPtr apply(std::string op, std::vector<TermPtr> args);

  bool is_variable() const noexcept { return op_.empty(); }
  std::size_t var() const noexcept { return var_; }
  const std::string& op() const noexcept { return op_; }
  const std::vector<TermPtr>& args() const noexcept { return args_; }

  /// One more than the largest variable index occurring in the term.
  std::size_t arity() const;
  /// Number of nodes of the fully expanded tree, saturating at SIZE_MAX.
  std::size_t tree_size() const;
  std::string to_string() const;

 private:
  Term() = default;

  std::size_t var_ = 0;
  std::string op_;
  std::vector<TermPtr> args_;
};

/// Parses `x0`, `f(x0,g(x1))` and the like. Constants are written `c()` or `c`
/// when `c` is not of the form x<digits>.
TermPtr parse_term(std::string_view text);

/// Value of the term operation at `args`. Throws ValidationError on an unknown
/// operation, an arity mismatch, or a variable not covered by `args`.
Elem eval_term(const Algebra& alg, const Term& term, std::span<const Elem> args);

/// The full table of the m-ary term operation induced by `term`.
std::vector<Elem> term_table(const Algebra& alg, const Term& term, std::size_t m);

}  // namespace commlab
