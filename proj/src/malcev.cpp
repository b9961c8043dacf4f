// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/malcev.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "commlab/commutator.hpp"
#include "commlab/error.hpp"

namespace commlab {

bool is_malcev_table(const std::vector<Elem>& table, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table[(x * n + y) * n + y] != x || table[(y * n + y) * n + x] != x) return false;
    }
  }
  return true;
}

TermPtr find_malcev_term(const Algebra& alg, ClosureOptions options) {
  Subuniverse f = free_term_operations(alg, 3, options);
  const std::size_t n = alg.size();
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto t = f.element(i);
    if (is_malcev_table(std::vector<Elem>(t.begin(), t.end()), n)) return f.term(alg, i);
  }
  return nullptr;
}

Elem eval_pattern(const std::vector<Elem>& table, std::size_t n, std::string_view pattern,
                  std::string_view alphabet, const std::vector<Elem>& assignment) {
  std::size_t index = 0;
  for (char c : pattern) {
    std::size_t letter = alphabet.find(c);
    if (letter == std::string_view::npos || letter >= assignment.size()) {
      throw ValidationError(std::string("pattern letter '") + c + "' not in the alphabet");
    }
    index = index * n + assignment[letter];
  }
  return table.at(index);
}

namespace {

bool is_idempotent(const std::vector<Elem>& table, std::size_t n, std::size_t arity) {
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < arity; ++k) index = index * n + x;
    if (table[index] != x) return false;
  }
  return true;
}

// All words of length `arity` over the first `letters` letters, in
// lexicographic order.
std::vector<std::string> all_patterns(std::size_t arity, std::size_t letters) {
  std::vector<std::string> out;
  std::string word(arity, kPatternLetters[0]);
  std::vector<std::size_t> digits(arity, 0);
  while (true) {
    for (std::size_t k = 0; k < arity; ++k) word[k] = kPatternLetters[digits[k]];
    out.push_back(word);
    std::size_t k = arity;
    while (k > 0 && ++digits[k - 1] == letters) digits[--k] = 0;
    if (k == 0) return out;
  }
}

// Values of the table at each pattern for every assignment of the letters,
// the assignments in lexicographic order.
std::vector<std::vector<Elem>> pattern_values(const std::vector<Elem>& table, std::size_t n,
                                              const std::vector<std::string>& patterns,
                                              std::size_t letters) {
  std::size_t assignments = checked_power(n, letters);
  std::vector<std::vector<Elem>> out(patterns.size(), std::vector<Elem>(assignments));
  std::vector<Elem> assignment(letters);
  const std::string_view alphabet = kPatternLetters.substr(0, letters);
  for (std::size_t r = 0; r < assignments; ++r) {
    std::size_t rest = r;
    for (std::size_t k = letters; k-- > 0;) {
      assignment[k] = static_cast<Elem>(rest % n);
      rest /= n;
    }
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      out[p][r] = eval_pattern(table, n, patterns[p], alphabet, assignment);
    }
  }
  return out;
}

}  // namespace

TaylorSearch find_taylor_term(const Algebra& alg, std::size_t max_arity, ClosureOptions options) {
  if (max_arity < 2) throw ValidationError("maximum arity must be at least 2");
  const std::size_t n = alg.size();
  TaylorSearch out;
  for (std::size_t m = 2; m <= max_arity; ++m) {
    Subuniverse f;
    try {
      f = free_term_operations(alg, m, options);
    } catch (const BudgetExceeded& e) {
      out.budget_note = std::string("arity ") + std::to_string(m) + ": " + e.what();
      return out;
    }
    const auto patterns = all_patterns(m, 2);
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto span = f.element(i);
      std::vector<Elem> table(span.begin(), span.end());
      if (!is_idempotent(table, n, m)) continue;
      const auto values = pattern_values(table, n, patterns, 2);
      std::vector<std::pair<std::string, std::string>> rows;
      for (std::size_t pos = 0; pos < m; ++pos) {
        bool found = false;
        for (std::size_t p = 0; p < patterns.size() && !found; ++p) {
          if (patterns[p][pos] != 'x') continue;
          for (std::size_t q = 0; q < patterns.size(); ++q) {
            if (patterns[q][pos] != 'y' || values[p] != values[q]) continue;
            rows.emplace_back(patterns[p], patterns[q]);
            found = true;
            break;
          }
        }
        if (!found) break;
      }
      if (rows.size() == m) {
        out.certificate = TaylorCertificate{m, i, f.term(alg, i), std::move(table), std::move(rows)};
        out.searched_to = m;
        return out;
      }
    }
    out.searched_to = m;
  }
  return out;
}

std::optional<std::string> check_taylor_certificate(const Algebra& alg,
                                                    const TaylorCertificate& cert) {
  const std::size_t n = alg.size();
  const std::size_t m = cert.arity;
  if (cert.term && term_table(alg, *cert.term, m) != cert.table) {
    return "term does not induce the recorded table";
  }
  if (cert.table.size() != checked_power(n, m)) return "table has the wrong size";
  if (!is_idempotent(cert.table, n, m)) return "operation is not idempotent";
  if (cert.rows.size() != m) return "need one identity per position";
  std::vector<Elem> assignment(2);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& [p, q] = cert.rows[i];
    if (p.size() != m || q.size() != m) return "row " + std::to_string(i) + " has the wrong length";
    if (p[i] != 'x' || q[i] != 'y') {
      return "row " + std::to_string(i) + " does not have x and y at position " +
             std::to_string(i);
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        assignment = {x, y};
        if (eval_pattern(cert.table, n, p, "xy", assignment) !=
            eval_pattern(cert.table, n, q, "xy", assignment)) {
          return "row " + std::to_string(i) + " fails at x=" + std::to_string(x) +
                 ", y=" + std::to_string(y);
        }
      }
    }
  }
  return std::nullopt;
}

bool SeparationReport::holds() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.identity.has_value(); });
}

SeparationReport check_separating_identities(const Algebra& alg, const std::vector<Elem>& table,
                                             std::size_t arity, std::size_t alphabet_size) {
  const std::size_t n = alg.size();
  if (arity == 0 || arity > 16) throw ValidationError("arity must be between 1 and 16");
  if (alphabet_size < 1 || alphabet_size > kMaxAlphabet) {
    throw ValidationError("alphabet size must be between 1 and " + std::to_string(kMaxAlphabet));
  }
  if (table.size() != checked_power(n, arity)) throw ValidationError("table has the wrong size");
  checked_power(alphabet_size, arity);

  const auto patterns = all_patterns(arity, alphabet_size);
  const auto values = pattern_values(table, n, patterns, alphabet_size);
  // Patterns grouped by the function they induce; each group in order.
  std::map<std::vector<Elem>, std::vector<std::size_t>> groups;
  for (std::size_t p = 0; p < patterns.size(); ++p) groups[values[p]].push_back(p);
  std::vector<std::size_t> group_of(patterns.size());
  std::vector<const std::vector<std::size_t>*> group_list;
  for (const auto& [vals, members] : groups) {
    for (std::size_t p : members) group_of[p] = group_list.size();
    group_list.push_back(&members);
  }

  auto letters = [&](std::size_t p, unsigned k_mask) {
    unsigned used = 0;
    for (std::size_t k = 0; k < arity; ++k) {
      if (k_mask >> k & 1u) used |= 1u << kPatternLetters.find(patterns[p][k]);
    }
    return used;
  };

  SeparationReport out;
  out.alphabet_size = alphabet_size;
  for (unsigned k_mask = 1; k_mask < (1u << arity); ++k_mask) {
    SeparationReport::Entry entry;
    for (std::size_t k = 0; k < arity; ++k) {
      if (k_mask >> k & 1u) entry.positions.push_back(k);
    }
    for (std::size_t p = 0; p < patterns.size() && !entry.identity; ++p) {
      unsigned lp = letters(p, k_mask);
      for (std::size_t q : *group_list[group_of[p]]) {
        if (q <= p) continue;
        if (letters(q, k_mask) != lp) {
          entry.identity = std::pair{patterns[p], patterns[q]};
          break;
        }
      }
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

DifferenceChecker::DifferenceChecker(const Algebra& alg, ClosureOptions options,
                                     std::size_t lattice_budget)
    : n_(alg.size()), lattice_(congruence_lattice(alg, lattice_budget)) {
  for (const auto& theta : lattice_.elements()) {
    self_.push_back(tc_commutator(alg, theta, theta, options));
  }
}

std::optional<DifferenceViolation> DifferenceChecker::check(const std::vector<Elem>& table,
                                                            bool exact) const {
  const std::size_t n = n_;
  if (table.size() != n * n * n) throw ValidationError("expected a ternary operation table");
  for (std::size_t t = 0; t < lattice_.size(); ++t) {
    const Partition& theta = lattice_.at(t);
    const Partition& comm = self_[t];
    for (auto [a, b] : theta.pairs()) {
      Elem left = table[(b * n + b) * n + a];
      if (exact ? left != a : !comm.related(left, a)) {
        return DifferenceViolation{t, a, b, true, left};
      }
      Elem right = table[(a * n + b) * n + b];
      if (!comm.related(a, right)) return DifferenceViolation{t, a, b, false, right};
    }
  }
  return std::nullopt;
}

std::optional<DifferenceViolation> DifferenceChecker::weak(const std::vector<Elem>& table) const {
  return check(table, false);
}

std::optional<DifferenceViolation> DifferenceChecker::exact(const std::vector<Elem>& table) const {
  return check(table, true);
}

DifferenceSearch find_difference_term(const Algebra& alg, bool exact, ClosureOptions options) {
  DifferenceChecker checker(alg, options);
  Subuniverse f = free_term_operations(alg, 3, options);
  DifferenceSearch out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto span = f.element(i);
    std::vector<Elem> table(span.begin(), span.end());
    ++out.candidates;
    auto bad = exact ? checker.exact(table) : checker.weak(table);
    if (!bad) {
      out.term = f.term(alg, i);
      out.index = i;
      out.table = std::move(table);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Congruence inclusion from two-variable identities

void validate_inclusion_data(const InclusionData& data) {
  // One row would read f(x) = f(y), which only trivial varieties satisfy; the
  // counterexample also needs two rows to separate a and b from every u_i.
  if (data.n < 2) throw ValidationError("inclusion data needs at least two rows");
  if (data.left.size() != data.n || data.right.size() != data.n) {
    throw ValidationError("inclusion data needs exactly " + std::to_string(data.n) + " rows");
  }
  for (std::size_t i = 0; i < data.n; ++i) {
    for (const std::string* p : {&data.left[i], &data.right[i]}) {
      if (p->size() != data.n) {
        throw ValidationError("row " + std::to_string(i + 1) + ": pattern '" + *p +
                              "' does not have length " + std::to_string(data.n));
      }
      if (p->find_first_not_of("xy") != std::string::npos) {
        throw ValidationError("row " + std::to_string(i + 1) + ": patterns use only x and y");
      }
    }
    if (data.left[i][i] != 'x' || data.right[i][i] != 'y') {
      throw ValidationError("row " + std::to_string(i + 1) + ": position " + std::to_string(i + 1) +
                            " must be x on the left and y on the right");
    }
  }
}

InclusionData parse_inclusion_data(std::string_view text) {
  InclusionData data;
  bool have_arity = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword == "arity") {
      if (have_arity) throw ParseError("duplicate arity line", line_no);
      long long n = 0;
      if (!(words >> n) || n <= 0 || n > 16) throw ParseError("expected an arity from 1 to 16", line_no);
      data.n = static_cast<std::size_t>(n);
      have_arity = true;
    } else if (keyword == "row") {
      if (!have_arity) throw ParseError("row before the arity line", line_no);
      std::string p, eq, q;
      if (!(words >> p >> eq >> q) || eq != "=") {
        throw ParseError("expected 'row <pattern> = <pattern>'", line_no);
      }
      data.left.push_back(p);
      data.right.push_back(q);
    } else {
      throw ParseError("unknown keyword '" + keyword + "'", line_no);
    }
    std::string extra;
    if (words >> extra) throw ParseError("unexpected trailing text", line_no);
  }
  if (!have_arity) throw ParseError("missing arity line", line_no);
  validate_inclusion_data(data);
  return data;
}

std::string format_inclusion_data(const InclusionData& data) {
  std::string out = "arity " + std::to_string(data.n) + "\n";
  for (std::size_t i = 0; i < data.left.size(); ++i) {
    out += "row " + data.left[i] + " = " + data.right[i] + "\n";
  }
  return out;
}

InclusionData inclusion_data(const TaylorCertificate& cert) {
  InclusionData data;
  data.n = cert.arity;
  for (const auto& [p, q] : cert.rows) {
    data.left.push_back(p);
    data.right.push_back(q);
  }
  validate_inclusion_data(data);
  return data;
}

std::string alpha_name(std::size_t i) { return "a" + std::to_string(i + 1); }
std::string beta_name(std::size_t i) { return "b" + std::to_string(i + 1); }

ceq::Statement synthesize_congruence_inclusion(const InclusionData& data) {
  validate_inclusion_data(data);
  using namespace ceq;
  const std::size_t n = data.n;
  std::vector<ExprPtr> a, b;
  for (std::size_t i = 0; i < n; ++i) {
    a.push_back(var(alpha_name(i)));
    b.push_back(var(beta_name(i)));
  }
  // Join of a_k over positions where `pattern` has x and b_k where it has y.
  auto side = [&](const std::string& pattern) {
    std::vector<ExprPtr> parts;
    for (std::size_t k = 0; k < n; ++k) {
      if (pattern[k] == 'x') parts.push_back(a[k]);
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (pattern[k] == 'y') parts.push_back(b[k]);
    }
    return join_all(parts);
  };

  std::vector<ExprPtr> products, sums, bounds;
  for (std::size_t i = 0; i < n; ++i) {
    products.push_back(compose(a[i], b[i]));
    sums.push_back(join(a[i], b[i]));
  }
  ExprPtr gamma = meet_all(sums);
  for (std::size_t i = 0; i < n; ++i) {
    ExprPtr theta = meet(side(data.left[i]), side(data.right[i]));
    bounds.push_back(join(gamma, theta));
  }
  ExprPtr bound = meet_all(bounds);

  Statement s;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(alpha_name(i));
  for (std::size_t i = 0; i < n; ++i) names.push_back(beta_name(i));
  s.declared_vars = names;
  s.relation = Relation::Inclusion;
  s.lhs = meet_all(products);
  s.rhs = join(meet(join_all(a), bound), meet(join_all(b), bound));
  return s;
}

InclusionCounterexample inclusion_counterexample(const InclusionData& data) {
  validate_inclusion_data(data);
  const std::size_t n = data.n;
  InclusionCounterexample out;
  out.set = Algebra("inclusion-counterexample", n + 2, {});
  for (std::size_t i = 0; i < n; ++i) {
    const Elem u = static_cast<Elem>(i + 2);
    out.env[alpha_name(i)] = Partition::from_pairs(n + 2, {{out.a, u}});
    out.env[beta_name(i)] = Partition::from_pairs(n + 2, {{out.b, u}});
  }
  ceq::Statement s = synthesize_congruence_inclusion(data);
  ceq::BinRel lhs = ceq::evaluate(out.set, s.family, *s.lhs, out.env);
  ceq::BinRel rhs = ceq::evaluate(out.set, s.family, *s.rhs, out.env);
  out.in_lhs = lhs.related(out.a, out.b);
  out.in_rhs = rhs.related(out.a, out.b);
  out.rhs = rhs.to_partition();
  return out;
}

}  // namespace commlab
