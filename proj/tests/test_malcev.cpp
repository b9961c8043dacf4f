// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "commlab/ceq.hpp"
#include "commlab/commutator.hpp"
#include "commlab/error.hpp"
#include "commlab/malcev.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace commlab;
using testing::corpus;

namespace {

std::vector<Elem> table_of(const Algebra& a, const std::string& term, std::size_t m) {
  return term_table(a, *parse_term(term), m);
}

std::vector<Elem> projection(std::size_t n, std::size_t m, std::size_t i) {
  return projection_table(n, m, i);
}

// Value of an m-ary table at pattern p (letters 0..s-1) under assignment.
Elem at(const std::vector<Elem>& t, std::size_t n, const std::vector<std::size_t>& p,
        const std::vector<Elem>& assignment) {
  std::size_t r = 0;
  for (std::size_t letter : p) r = r * n + assignment[letter];
  return t[r];
}

// All patterns over s letters of length m.
std::vector<std::vector<std::size_t>> patterns(std::size_t s, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= s;
  for (std::size_t c = 0; c < total; ++c) {
    std::vector<std::size_t> p(m);
    std::size_t rest = c;
    for (std::size_t i = m; i-- > 0;) {
      p[i] = rest % s;
      rest /= s;
    }
    out.push_back(p);
  }
  return out;
}

bool identity_holds(const std::vector<Elem>& t, std::size_t n, std::size_t s,
                    const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
  for (const auto& assignment : patterns(n, s)) {
    std::vector<Elem> as(assignment.begin(), assignment.end());
    if (at(t, n, p, as) != at(t, n, q, as)) return false;
  }
  return true;
}

bool idempotent(const std::vector<Elem>& t, std::size_t n, std::size_t m) {
  for (Elem x = 0; x < n; ++x) {
    if (at(t, n, std::vector<std::size_t>(m, 0), {x}) != x) return false;
  }
  return true;
}

// Has an idempotent table of arity m with a two-variable row for every position.
bool taylor_oracle(const std::set<oracle::Tuple>& ops, std::size_t n, std::size_t m) {
  auto pats = patterns(2, m);
  for (const auto& t : ops) {
    if (!idempotent(t, n, m)) continue;
    bool all = true;
    for (std::size_t i = 0; i < m && all; ++i) {
      bool row = false;
      for (const auto& p : pats) {
        if (p[i] != 0 || row) continue;
        for (const auto& q : pats) {
          if (q[i] == 1 && identity_holds(t, n, 2, p, q)) {
            row = true;
            break;
          }
        }
      }
      all = row;
    }
    if (all) return true;
  }
  return false;
}

// For each nonempty K (bitmask order): is there a valid identity over s
// letters whose K-restricted letter sets differ?
std::vector<bool> separation_oracle(const std::vector<Elem>& t, std::size_t n, std::size_t m,
                                    std::size_t s) {
  auto pats = patterns(s, m);
  std::vector<std::pair<std::size_t, std::size_t>> valid;
  for (std::size_t i = 0; i < pats.size(); ++i) {
    for (std::size_t j = 0; j < pats.size(); ++j) {
      if (identity_holds(t, n, s, pats[i], pats[j])) valid.emplace_back(i, j);
    }
  }
  std::vector<bool> out;
  for (std::size_t k = 1; k < (std::size_t{1} << m); ++k) {
    bool found = false;
    for (auto [i, j] : valid) {
      std::set<std::size_t> l, r;
      for (std::size_t pos = 0; pos < m; ++pos) {
        if (k >> pos & 1) {
          l.insert(pats[i][pos]);
          r.insert(pats[j][pos]);
        }
      }
      if (l != r) {
        found = true;
        break;
      }
    }
    out.push_back(found);
  }
  return out;
}

// d(b,b,a) [t,t] a [t,t] d(a,b,b) for every congruence t and (a,b) in t,
// with everything computed by the oracles.
bool weak_difference_oracle(const Algebra& a, const std::vector<Elem>& d, bool exact) {
  const std::size_t n = a.size();
  for (const auto& theta : oracle::congruences(a)) {
    Partition c = oracle::tc_commutator(a, theta, theta);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (!theta.related(x, y)) continue;
        Elem left = d[(y * n + y) * n + x];
        Elem right = d[(x * n + y) * n + y];
        if (exact ? left != x : !c.related(left, x)) return false;
        if (!c.related(x, right)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Mal'cev terms") {
  Algebra z2 = corpus("z2");
  TermPtr m = find_malcev_term(z2);
  REQUIRE(m);
  auto t = term_table(z2, *m, 3);
  CHECK(is_malcev_table(t, 2));
  CHECK(t == table_of(z2, "add(add(x0,x1),x2)", 3));
  CHECK(!find_malcev_term(corpus("s2")));
  CHECK(!find_malcev_term(corpus("set2")));
  CHECK(is_malcev_table(table_of(corpus("aff_z4"), "m(x0,x1,x2)", 3), 4));
  CHECK(!is_malcev_table(projection(2, 3, 0), 2));
}

TEST_CASE("idempotent terms with two-variable identities") {
  TaylorSearch s2 = find_taylor_term(corpus("s2"), 3);
  REQUIRE(s2.certificate);
  CHECK(s2.certificate->arity == 2);
  CHECK(s2.certificate->term->to_string() == "min(x0,x1)");
  using Rows = std::vector<std::pair<std::string, std::string>>;
  CHECK(s2.certificate->rows == Rows{{"xy", "yx"}, {"yx", "xy"}});

  TaylorSearch z2 = find_taylor_term(corpus("z2"), 3);
  REQUIRE(z2.certificate);
  CHECK(z2.certificate->arity <= 3);
  CHECK(!check_taylor_certificate(corpus("z2"), *z2.certificate));

  TaylorSearch set2 = find_taylor_term(corpus("set2"), 4);
  CHECK(!set2.certificate);
  CHECK(set2.searched_to == 4);

  TaylorSearch limited = find_taylor_term(corpus("z4"), 3, ClosureOptions{40});
  CHECK(!limited.certificate);
  CHECK(limited.budget_note);
  CHECK(limited.searched_to == 2);
}

TEST_CASE("certificates re-verify and tampering is caught") {
  for (const auto& name : testing::small_corpus_names(4)) {
    CAPTURE(name);
    Algebra a = corpus(name);
    TaylorSearch s = find_taylor_term(a, 3);
    if (!s.certificate) continue;
    CHECK(!check_taylor_certificate(a, *s.certificate));
    CHECK(idempotent(s.certificate->table, a.size(), s.certificate->arity));
    TaylorCertificate bad = *s.certificate;
    bad.rows[0].second = bad.rows[0].first;
    CHECK(check_taylor_certificate(a, bad));
  }
}

TEST_CASE("term search agrees with syntactic enumeration") {
  for (std::uint64_t code = 0; code < 16; ++code) {
    Algebra a = oracle::binary_algebra(2, code);
    CAPTURE(code);
    for (std::size_t m = 2; m <= 3; ++m) {
      bool expected = false;
      for (std::size_t k = 2; k <= m; ++k) {
        expected = expected || taylor_oracle(oracle::syntactic_term_operations(a, k), 2, k);
      }
      CHECK(find_taylor_term(a, m).certificate.has_value() == expected);
    }
  }
  for (const char* name : {"s2", "c3", "free2", "z3", "set3", "mod_z3_mid", "aff_z3"}) {
    CAPTURE(name);
    Algebra a = corpus(name);
    CHECK(find_taylor_term(a, 2).certificate.has_value() ==
          taylor_oracle(oracle::syntactic_term_operations(a, 2), a.size(), 2));
  }
}

TEST_CASE("separating identities") {
  Algebra s2 = corpus("s2");
  SeparationReport meet = check_separating_identities(s2, s2.op(0).table, 2, 2);
  CHECK(!meet.holds());
  REQUIRE(meet.entries.size() == 3);
  CHECK(meet.entries[2].positions == std::vector<std::size_t>{0, 1});
  CHECK(!meet.entries[2].identity);

  Algebra z2 = corpus("z2");
  auto sum = table_of(z2, "add(add(x0,x1),x2)", 3);
  SeparationReport affine = check_separating_identities(z2, sum, 3, 2);
  CHECK(affine.holds());

  SeparationReport proj = check_separating_identities(z2, projection(2, 3, 0), 3, 2);
  CHECK(!proj.holds());
  CHECK(!proj.entries[0].identity);  // K = {1}

  // Per-K answers match an exhaustive oracle, including larger alphabets.
  std::mt19937_64 rng(23);
  for (int round = 0; round < 12; ++round) {
    Algebra a = oracle::random_algebra(rng, 2, {2});
    auto ops = free_term_operations(a, 2);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      std::vector<Elem> t(ops.element(i).begin(), ops.element(i).end());
      for (std::size_t s = 1; s <= 3; ++s) {
        SeparationReport r = check_separating_identities(a, t, 2, s);
        auto expected = separation_oracle(t, 2, 2, s);
        REQUIRE(r.entries.size() == expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) {
          CHECK(r.entries[k].identity.has_value() == expected[k]);
          if (r.entries[k].identity) {
            // The reported identity is valid.
            const auto& [p, q] = *r.entries[k].identity;
            std::vector<std::size_t> pp, qq;
            for (char c : p) pp.push_back(kPatternLetters.find(c));
            for (char c : q) qq.push_back(kPatternLetters.find(c));
            CHECK(identity_holds(t, 2, s, pp, qq));
          }
        }
      }
    }
  }
}

TEST_CASE("weak difference and difference checks") {
  Algebra z4 = corpus("z4");
  auto minus = table_of(z4, "add(add(x0,add(x1,add(x1,x1))),x2)", 3);
  DifferenceChecker c4(z4);
  CHECK(!c4.weak(minus));
  CHECK(!c4.exact(minus));
  auto v = c4.weak(projection(4, 3, 0));
  REQUIRE(v);
  // The reported violation is genuine.
  const Partition& theta = c4.lattice().at(v->theta);
  CHECK(theta.related(v->a, v->b));
  const Partition& comm = c4.self_commutator(v->theta);
  CHECK(comm == oracle::tc_commutator(z4, theta, theta));
  Elem expected_value = v->left ? v->b : v->a;  // first projection
  CHECK(v->value == expected_value);
  CHECK(!comm.related(v->value, v->a));

  Algebra s2 = corpus("s2");
  DifferenceChecker cs(s2);
  CHECK(!cs.weak(projection(2, 3, 2)));
  CHECK(!cs.exact(projection(2, 3, 2)));
  auto e = cs.exact(projection(2, 3, 0));
  REQUIRE(e);
  CHECK(e->left);
}

TEST_CASE("difference term search") {
  Algebra z4 = corpus("z4");
  DifferenceSearch z = find_difference_term(z4);
  REQUIRE(z.term);
  CHECK(weak_difference_oracle(z4, z.table, false));
  CHECK(term_table(z4, *z.term, 3) == z.table);

  DifferenceSearch set = find_difference_term(corpus("set2"));
  CHECK(!set.term);
  CHECK(set.candidates == 3);

  Algebra s2 = corpus("s2");
  DifferenceSearch s = find_difference_term(s2);
  REQUIRE(s.term);
  CHECK(weak_difference_oracle(s2, s.table, false));
  DifferenceSearch strict = find_difference_term(s2, true);
  REQUIRE(strict.term);
  CHECK(weak_difference_oracle(s2, strict.table, true));

  for (const auto& name : testing::small_corpus_names(3)) {
    CAPTURE(name);
    Algebra a = corpus(name);
    for (bool exact : {false, true}) {
      DifferenceSearch d = find_difference_term(a, exact);
      if (d.term) {
        CHECK(weak_difference_oracle(a, d.table, exact));
      } else {
        // Nothing among the ternary term operations passes.
        for (const auto& t : oracle::syntactic_term_operations(a, 3)) {
          CHECK(!weak_difference_oracle(a, t, exact));
        }
      }
    }
  }
}

TEST_CASE("inclusion data") {
  InclusionData d = parse_inclusion_data("arity 2\nrow xy = yx # commutative\nrow yx = xy\n");
  CHECK(d.n == 2);
  CHECK(d.in_left(0, 0));
  CHECK(!d.in_left(0, 1));
  CHECK(parse_inclusion_data(format_inclusion_data(d)).left == d.left);
  CHECK_THROWS_AS(parse_inclusion_data("arity 2\nrow yx = yx\nrow yx = xy\n"), ValidationError);
  CHECK_THROWS_AS(parse_inclusion_data("arity 2\nrow xy = yx\n"), ValidationError);
  CHECK_THROWS_AS(parse_inclusion_data("row xy = yx\n"), ParseError);
  CHECK_THROWS_AS(parse_inclusion_data("arity 1\nrow x = z\n"), ValidationError);
}

TEST_CASE("the commutative inclusion has the expected shape") {
  InclusionData d = parse_inclusion_data("arity 2\nrow xy = yx\nrow yx = xy\n");
  ceq::Statement s = synthesize_congruence_inclusion(d);
  using namespace ceq;
  auto a1 = var("a1"), a2 = var("a2"), b1 = var("b1"), b2 = var("b2");
  auto gamma = meet(join(a1, b1), join(a2, b2));
  auto theta1 = meet(join(a1, b2), join(a2, b1));
  auto theta2 = meet(join(a2, b1), join(a1, b2));
  auto side = meet(join(gamma, theta1), join(gamma, theta2));
  CHECK(*s.lhs == *meet(compose(a1, b1), compose(a2, b2)));
  CHECK(*s.rhs == *join(meet(join(a1, a2), side), meet(join(b1, b2), side)));
  CHECK(s.relation == Relation::Inclusion);
  CHECK(s.variables() == std::vector<std::string>{"a1", "a2", "b1", "b2"});

  // Both theta terms denote the same relation.
  Algebra set3 = corpus("set3");
  ConLattice lat = congruence_lattice(set3);
  for (const auto& p : lat.elements()) {
    for (const auto& q : lat.elements()) {
      Env env{{"a1", p}, {"a2", q}, {"b1", q}, {"b2", p}};
      CHECK(evaluate(set3, {}, *theta1, env) == evaluate(set3, {}, *theta2, env));
    }
  }

  ceq::Statement back = parse_statement(to_string(s));
  CHECK(back == s);
}

TEST_CASE("the inclusion holds on semilattices and fails on the bare set") {
  InclusionData d = parse_inclusion_data("arity 2\nrow xy = yx\nrow yx = xy\n");
  ceq::Statement s = synthesize_congruence_inclusion(d);
  for (const char* name : {"s2", "c3", "c4", "free2", "diamond", "claw", "tree"}) {
    CAPTURE(name);
    Algebra a = corpus(name);
    CHECK(ceq::check_universal(a, s, congruence_lattice(a)).holds);
  }
  InclusionCounterexample cx = inclusion_counterexample(d);
  CHECK(cx.set.size() == 4);
  CHECK(cx.set.num_ops() == 0);
  CHECK(cx.violated());
  CHECK(cx.in_lhs);
  CHECK(!cx.rhs.related(0, 1));
  CHECK(cx.rhs.blocks()[cx.rhs.block_of(0)].size() == 1);
  CHECK(cx.rhs.blocks()[cx.rhs.block_of(1)].size() == 1);
  CHECK(cx.env.at("a1") == Partition::parse("0 2", 4));
  CHECK(cx.env.at("b2") == Partition::parse("1 3", 4));
  // The universal check finds a failure on the same structure.
  Algebra bare = corpus("inclusion4");
  CHECK(!ceq::check_universal(bare, s, congruence_lattice(bare)).holds);
}

TEST_CASE("every valid data set yields a violated inclusion") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 25; ++round) {
    InclusionData d;
    d.n = 2 + rng() % 3;
    for (std::size_t i = 0; i < d.n; ++i) {
      std::string p(d.n, 'x'), q(d.n, 'x');
      for (std::size_t k = 0; k < d.n; ++k) {
        p[k] = rng() % 2 ? 'x' : 'y';
        q[k] = rng() % 2 ? 'x' : 'y';
      }
      p[i] = 'x';
      q[i] = 'y';
      d.left.push_back(p);
      d.right.push_back(q);
    }
    InclusionCounterexample cx = inclusion_counterexample(d);
    CHECK(cx.violated());
    CHECK(cx.set.size() == d.n + 2);
    CHECK(cx.rhs.blocks()[cx.rhs.block_of(0)].size() == 1);
    CHECK(cx.rhs.blocks()[cx.rhs.block_of(1)].size() == 1);
  }
  CHECK_THROWS_AS(parse_inclusion_data("arity 1\nrow x = y\n"), ValidationError);
  TaylorSearch z2 = find_taylor_term(corpus("z2"), 3);
  REQUIRE(z2.certificate);
  CHECK(inclusion_counterexample(inclusion_data(*z2.certificate)).violated());
}
