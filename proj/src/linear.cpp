// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/linear.hpp"

#include <map>
#include <set>
#include <sstream>

#include "commlab/congruence.hpp"
#include "commlab/error.hpp"
#include "commlab/malcev.hpp"

namespace commlab {

IntVector quad_vector(const Quad& q, std::size_t n) {
  IntVector v(n);
  v[q.a] += 1;
  v[q.b] -= 1;
  v[q.c] -= 1;
  v[q.d] += 1;
  return v;
}

namespace {

IntVector unit_difference(Elem u, Elem v, std::size_t n) {
  IntVector t(n);
  t[v] += 1;
  t[u] -= 1;
  return t;
}

}  // namespace

IntLattice matrix_lattice(const MatrixSet& ms, std::size_t n, bool track_coefficients,
                          std::vector<std::size_t>* generator_quads) {
  IntLattice lattice(n, track_coefficients);
  std::set<std::vector<int>> seen;
  std::vector<int> key(n);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Quad q = ms.quad(i);
    std::fill(key.begin(), key.end(), 0);
    key[q.a] += 1;
    key[q.b] -= 1;
    key[q.c] -= 1;
    key[q.d] += 1;
    if (std::all_of(key.begin(), key.end(), [](int x) { return x == 0; })) continue;
    if (!seen.insert(key).second) continue;
    lattice.add(quad_vector(q, n));
    if (generator_quads) generator_quads->push_back(i);
  }
  lattice.reduce();
  return lattice;
}

Partition lin_commutator(const Algebra& alg, const MatrixSet& ms) {
  const std::size_t n = alg.size();
  IntLattice lattice = matrix_lattice(ms, n);
  std::vector<std::size_t> labels(n);
  std::vector<Elem> reps;
  for (Elem v = 0; v < n; ++v) {
    labels[v] = v;
    for (Elem u : reps) {
      if (lattice.contains(unit_difference(u, v, n))) {
        labels[v] = u;
        break;
      }
    }
    if (labels[v] == v) reps.push_back(v);
  }
  Partition out(labels);
  // The lattice is a group, so the relation is an equivalence; being a
  // congruence is the nontrivial part.
  if (auto bad = compatibility_violation(alg, out)) {
    throw InternalError("linear commutator " + out.to_string() +
                        " is not compatible with operation " + alg.op(bad->op).name);
  }
  return out;
}

Partition lin_commutator(const Algebra& alg, const Partition& alpha, const Partition& beta,
                         ClosureOptions options) {
  return lin_commutator(alg, alpha_beta_matrices(alg, alpha, beta, options));
}

LinWitness lin_witness(const Algebra& alg, const MatrixSet& ms, Elem u, Elem v,
                       std::size_t max_quads) {
  const std::size_t n = alg.size();
  if (u >= n || v >= n) throw ValidationError("pair element out of range");
  LinWitness w{u, v, {}, {}};
  if (u == v) return w;

  const IntVector target = unit_difference(u, v, n);
  // A single matrix with the right vector is the common case.
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Quad q = ms.quad(i);
    if (quad_vector(q, n) == target) {
      if (max_quads < 1) throw BudgetExceeded("linear witness has too many matrices", max_quads, 1);
      w.quads.push_back(q);
      w.indices.push_back(i);
      return w;
    }
  }

  std::vector<std::size_t> generator_quads;
  IntLattice lattice = matrix_lattice(ms, n, true, &generator_quads);
  auto combination = lattice.solve(target);
  if (!combination) {
    throw NotInCommutator("(" + std::to_string(u) + "," + std::to_string(v) +
                          ") is not in the linear commutator");
  }
  BigInt total = 0;
  for (const auto& [g, c] : *combination) total += abs(c);
  if (total > max_quads) {
    throw BudgetExceeded("linear witness has too many matrices", max_quads,
                         total.convert_to<std::size_t>());
  }
  for (const auto& [g, c] : *combination) {
    Quad q = ms.quad(generator_quads.at(g));
    std::size_t index = generator_quads[g];
    if (c.sign() < 0) {
      q = q.swap_columns();
      auto found = ms.find(q);
      if (!found) throw InternalError("matrix set is not closed under swapping columns");
      index = *found;
    }
    const auto copies = static_cast<std::size_t>(abs(c));
    for (std::size_t k = 0; k < copies; ++k) {
      w.quads.push_back(q);
      w.indices.push_back(index);
    }
  }
  if (auto problem = check_lin_witness(ms, n, w)) throw InternalError(*problem);
  return w;
}

std::optional<std::string> check_lin_witness(const MatrixSet& ms, std::size_t n,
                                             const LinWitness& w) {
  if (w.u >= n || w.v >= n) return "pair element out of range";
  std::vector<long long> sum(n, 0);
  for (std::size_t i = 0; i < w.quads.size(); ++i) {
    const Quad& q = w.quads[i];
    if (q.a >= n || q.b >= n || q.c >= n || q.d >= n) {
      return "matrix " + std::to_string(i) + " has an entry out of range";
    }
    if (!ms.contains(q)) return "matrix " + std::to_string(i) + " " + to_string(q) + " is not in M(alpha,beta)";
    sum[q.a] += 1;
    sum[q.b] -= 1;
    sum[q.c] -= 1;
    sum[q.d] += 1;
  }
  sum[w.v] -= 1;
  sum[w.u] += 1;
  for (std::size_t x = 0; x < n; ++x) {
    if (sum[x] != 0) return "matrix vectors do not sum to e_v - e_u at coordinate " + std::to_string(x);
  }
  return std::nullopt;
}

Elem LabellingWitness::top_label(std::size_t t) const {
  const Quad& q = twisted.at(t / 2);
  return t % 2 == 0 ? q.a : q.b;
}

Elem LabellingWitness::bottom_label(std::size_t b) const {
  const Quad& q = twisted.at(b / 2);
  return b % 2 == 0 ? q.c : q.d;
}

LabellingWitness labelling_witness(const LinWitness& w) {
  LabellingWitness lw;
  lw.u = w.u;
  lw.v = w.v;
  if (w.quads.empty()) {
    if (w.u != w.v) throw InternalError("empty witness for a pair of distinct elements");
    lw.reflexive = true;
    return lw;
  }
  for (const Quad& q : w.quads) lw.twisted.push_back({q.a, q.d, q.c, q.b});

  const std::size_t vertices = 2 * lw.copies();
  std::map<Elem, std::set<std::size_t>> free_bottoms;
  for (std::size_t b = 0; b < vertices; ++b) free_bottoms[lw.bottom_label(b)].insert(b);

  // Two passes: each top vertex first takes a bottom vertex of its own copy,
  // then the leftovers take the smallest free index with the same label.
  // A copy that telescopes on its own therefore stays self-contained.
  lw.match.assign(vertices, 0);
  std::vector<bool> done(vertices, false);
  for (std::size_t t = 0; t < vertices; ++t) {
    auto it = free_bottoms.find(lw.top_label(t));
    if (it == free_bottoms.end()) continue;
    auto pick = it->second.lower_bound(t / 2 * 2);
    if (pick == it->second.end() || *pick / 2 != t / 2) continue;
    lw.match[t] = *pick;
    it->second.erase(pick);
    done[t] = true;
  }
  std::vector<std::size_t> unmatched;
  for (std::size_t t = 0; t < vertices; ++t) {
    if (done[t]) continue;
    auto it = free_bottoms.find(lw.top_label(t));
    if (it == free_bottoms.end() || it->second.empty()) {
      unmatched.push_back(t);
      continue;
    }
    lw.match[t] = *it->second.begin();
    it->second.erase(it->second.begin());
  }
  std::vector<std::size_t> left;
  for (auto& [label, pool] : free_bottoms) left.insert(left.end(), pool.begin(), pool.end());
  if (unmatched.size() != 1 || left.size() != 1) {
    throw InternalError("labels of the witness do not telescope to e_v - e_u");
  }
  lw.top_e = unmatched.front();
  lw.match[lw.top_e] = left.front();
  if (lw.top_label(lw.top_e) != w.v || lw.bottom_label(left.front()) != w.u) {
    throw InternalError("distinguished edge has the wrong labels");
  }
  return lw;
}

std::optional<std::string> check_labelling_witness(const MatrixSet& ms,
                                                   const LabellingWitness& lw) {
  if (lw.reflexive) {
    if (!lw.twisted.empty()) return "reflexive marker with copies attached";
    if (lw.u != lw.v) return "reflexive marker for distinct elements";
    return std::nullopt;
  }
  const std::size_t copies = lw.copies();
  if (copies == 0) return "no copies of the graph";
  const Partition& alpha = ms.alpha();
  const Partition& beta = ms.beta();
  for (std::size_t i = 0; i < copies; ++i) {
    const Quad& t = lw.twisted[i];
    const std::size_t n = alpha.size();
    if (t.a >= n || t.b >= n || t.c >= n || t.d >= n) return "copy " + std::to_string(i) + " label out of range";
    Quad q{t.a, t.d, t.c, t.b};
    if (!ms.contains(q)) {
      return "copy " + std::to_string(i) + ": untwisted matrix " + to_string(q) +
             " is not in M(alpha,beta)";
    }
    if (!alpha.related(q.c, q.a) || !alpha.related(q.b, q.d)) {
      return "copy " + std::to_string(i) + ": alpha-edge joins unrelated labels";
    }
    if (!beta.related(q.b, q.a) || !beta.related(q.c, q.d)) {
      return "copy " + std::to_string(i) + ": beta-edge joins unrelated labels";
    }
  }
  const std::size_t vertices = 2 * copies;
  if (lw.match.size() != vertices) return "matching does not cover every top vertex";
  std::vector<bool> hit(vertices, false);
  for (std::size_t t = 0; t < vertices; ++t) {
    std::size_t b = lw.match[t];
    if (b >= vertices || hit[b]) return "matching is not a bijection";
    hit[b] = true;
  }
  if (lw.top_e >= vertices) return "distinguished edge out of range";
  for (std::size_t t = 0; t < vertices; ++t) {
    if (t == lw.top_e) continue;
    if (lw.top_label(t) != lw.bottom_label(lw.match[t])) {
      return "edge top#" + std::to_string(t) + " -> bottom#" + std::to_string(lw.match[t]) +
             " has different head and tail labels";
    }
  }
  if (lw.top_label(lw.top_e) != lw.v || lw.bottom_label(lw.match[lw.top_e]) != lw.u) {
    return "distinguished edge is not labelled v -> u";
  }
  return std::nullopt;
}

std::string format_labelling_witness(const LabellingWitness& lw) {
  std::ostringstream out;
  if (lw.reflexive) {
    out << "reflexive: " << lw.u << " = " << lw.v << "\n";
    return out.str();
  }
  for (std::size_t i = 0; i < lw.copies(); ++i) {
    out << "copy " << i << "\n";
    out << "twisted " << to_string(lw.twisted[i]) << "\n";
    for (std::size_t t = 2 * i; t < 2 * i + 2; ++t) {
      if (t == lw.top_e) continue;
      out << "match top#" << t << " -> bottom#" << lw.match[t] << "\n";
    }
  }
  out << "distinguished e: top#" << lw.top_e << "(" << lw.top_label(lw.top_e) << ") -> bottom#"
      << lw.match[lw.top_e] << "(" << lw.bottom_label(lw.match[lw.top_e]) << ")\n";
  return out.str();
}

namespace {

// Minimal scanner over one line of the witness text.
class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  void expect(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }
  std::size_t number() {
    skip_space();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 0xffffffffu) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }
  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, pos_ + 1);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

LabellingWitness parse_labelling_witness(std::string_view text) {
  LabellingWitness lw;
  std::vector<std::pair<std::size_t, std::size_t>> matches;
  bool have_e = false;
  std::size_t bottom_e = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    LineScanner s(line, line_no);
    if (line.empty()) continue;
    if (line.starts_with("reflexive:")) {
      s.expect("reflexive:");
      lw.u = static_cast<Elem>(s.number());
      s.expect("=");
      lw.v = static_cast<Elem>(s.number());
      s.finish();
      lw.reflexive = true;
    } else if (line.starts_with("copy")) {
      s.expect("copy");
      if (s.number() != lw.copies()) s.fail("copies must be numbered consecutively from 0");
      s.finish();
    } else if (line.starts_with("twisted")) {
      s.expect("twisted");
      s.expect("[");
      Quad q;
      q.a = static_cast<Elem>(s.number());
      q.b = static_cast<Elem>(s.number());
      s.expect(";");
      q.c = static_cast<Elem>(s.number());
      q.d = static_cast<Elem>(s.number());
      s.expect("]");
      s.finish();
      lw.twisted.push_back(q);
    } else if (line.starts_with("match")) {
      s.expect("match");
      s.expect("top#");
      std::size_t t = s.number();
      s.expect("->");
      s.expect("bottom#");
      std::size_t b = s.number();
      s.finish();
      matches.emplace_back(t, b);
    } else if (line.starts_with("distinguished")) {
      s.expect("distinguished");
      s.expect("e:");
      s.expect("top#");
      lw.top_e = s.number();
      s.expect("(");
      lw.v = static_cast<Elem>(s.number());
      s.expect(")");
      s.expect("->");
      s.expect("bottom#");
      bottom_e = s.number();
      s.expect("(");
      lw.u = static_cast<Elem>(s.number());
      s.expect(")");
      s.finish();
      have_e = true;
    } else {
      s.fail("unrecognized line");
    }
  }
  if (lw.reflexive) return lw;
  if (!have_e) throw ParseError("missing distinguished edge", line_no);
  const std::size_t vertices = 2 * lw.copies();
  lw.match.assign(vertices, vertices);  // out of range marks "unset"
  matches.emplace_back(lw.top_e, bottom_e);
  for (auto [t, b] : matches) {
    if (t >= vertices) throw ParseError("top vertex out of range", line_no);
    if (lw.match[t] != vertices) throw ParseError("top vertex matched twice", line_no);
    lw.match[t] = b;
  }
  return lw;
}

CommutatorChain commutator_chain(const Algebra& alg, const Partition& alpha,
                                 const Partition& beta, ClosureOptions options) {
  MatrixSet ms = alpha_beta_matrices(alg, alpha, beta, options);
  return {tc_commutator(alg, ms), sym_commutator(alg, ms), lin_commutator(alg, ms),
          meet(alpha, beta)};
}

Classification classify(const Algebra& alg, ClosureOptions options) {
  Classification out;
  const std::size_t n = alg.size();
  Partition total = Partition::total(n);
  Partition zero = Partition::equality(n);
  MatrixSet ms = alpha_beta_matrices(alg, total, total, options);

  out.abelian = tc_commutator(alg, ms).is_equality();
  if (!out.abelian) {
    out.tc_violation = centrality_violation(ms, zero);
    if (!out.tc_violation) throw InternalError("non-abelian algebra without a violating matrix");
    out.tc_violation_derivation = ms.derivation(alg, out.tc_violation->index);
  }

  Partition lin = lin_commutator(alg, ms);
  out.quasi_affine = lin.is_equality();
  if (!out.quasi_affine) {
    for (Elem v = 0; v < n && !out.lin_witness; ++v) {
      Elem u = static_cast<Elem>(lin.blocks()[lin.block_of(v)].front());
      if (u != v) out.lin_witness = lin_witness(alg, ms, u, v);
    }
  }

  if (!out.abelian) {
    out.affine = Verdict::No;
  } else {
    try {
      out.malcev_term = find_malcev_term(alg, options);
      out.affine = out.malcev_term ? Verdict::Yes : Verdict::No;
    } catch (const BudgetExceeded& e) {
      out.affine = Verdict::Unknown;
      out.note = e.what();
    }
  }
  return out;
}

}  // namespace commlab
