// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commlab/algebra.hpp"
#include "commlab/ceq.hpp"
#include "commlab/congruence.hpp"
#include "commlab/linear.hpp"
#include "commlab/malcev.hpp"
#include "commlab/partition.hpp"
#include "commlab/subpower.hpp"

namespace commlab {

/// Line-oriented report: `key: value`, or `key<TAB>value` in porcelain mode.
/// Raw lines are emitted verbatim in both modes.
class Report {
 public:
  void add(std::string key, std::string value);
  void raw(std::string line);
  std::string render(bool porcelain = false) const;

  /// Value of the first line with this key.
  std::optional<std::string> get(std::string_view key) const;

 private:
  struct Line {
    std::string key;
    std::string value;
    bool raw = false;
  };
  std::vector<Line> lines_;
};

struct ReportOptions {
  ClosureOptions closure;
  std::size_t lattice_budget = kDefaultLatticeBudget;
  std::size_t ceq_budget = ceq::kDefaultCeqBudget;
  std::size_t witness_budget = kDefaultWitnessBudget;
};

/// Parses a partition and checks it is a congruence of `alg`.
Partition parse_congruence(const Algebra& alg, std::string_view text, std::string_view what);

/// `yes` / `no`
std::string yes_no(bool b);
/// Blocks of a partition of A x_delta A, elements written as (x,y).
std::string format_pair_partition(const Partition& p,
                                  const std::vector<std::pair<Elem, Elem>>& pairs);
/// Term text, or a size note for huge terms.
std::string format_term(const TermPtr& t);

enum class CommutatorKind { TC, Sym, Lin };
CommutatorKind parse_commutator_kind(std::string_view text);

Report con_report(const Algebra& alg, const ReportOptions& opt);
Partition commutator_of_kind(const Algebra& alg, const Partition& alpha, const Partition& beta,
                             CommutatorKind kind, const ReportOptions& opt);
Report chain_report(const Algebra& alg, const Partition& alpha, const Partition& beta,
                    const ReportOptions& opt);
/// Throws NotInCommutator when (u, v) is not in [alpha, beta]_l.
Report witness_report(const Algebra& alg, const Partition& alpha, const Partition& beta, Elem u,
                      Elem v, bool verify, const ReportOptions& opt);
Report classify_report(const Algebra& alg, const ReportOptions& opt);
Report delta_report(const Algebra& alg, const Partition& delta, const Partition* alpha,
                    const Partition* beta, const ReportOptions& opt);
Report taylor_report(const Algebra& alg, std::size_t max_arity, std::size_t alphabet,
                     const ReportOptions& opt);
Report wdiff_report(const Algebra& alg, const ReportOptions& opt);
Report ceq_report(const Algebra& alg, const ceq::Statement& s, const ReportOptions& opt,
                  bool* holds);
Report synth_report(const InclusionData& data, bool counterexample);

}  // namespace commlab
