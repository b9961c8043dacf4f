// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "commlab/ceq.hpp"
#include "commlab/commutator.hpp"
#include "commlab/congruence.hpp"
#include "commlab/error.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace commlab;
using namespace commlab::ceq;
using testing::corpus;
using testing::P;

TEST_CASE("statements parse into the expected trees") {
  Statement s = parse_statement("a ^ (b o c) <= b_3");
  CHECK(s.relation == Relation::Inclusion);
  CHECK(*s.lhs == *meet(var("a"), compose(var("b"), var("c"))));
  CHECK(*s.rhs == *family(0, 3));
  CHECK(s.variables() == std::vector<std::string>{"a", "b", "c"});

  Statement c = parse_statement("[a,b] = a ^ b", ParseOptions{true});
  CHECK(c.relation == Relation::Equation);
  CHECK(*c.lhs == *commutator(var("a"), var("b")));
  CHECK(*c.rhs == *meet(var("a"), var("b")));
  CHECK(c.uses_commutator());

  // Precedence and associativity: o over ^ over \/, all to the left.
  Statement p = parse_statement("a \\/ b ^ c o d o e <= a /\\ b /\\ c");
  CHECK(*p.lhs == *join(var("a"), meet(var("b"), compose(compose(var("c"), var("d")), var("e")))));
  CHECK(*p.rhs == *meet(meet(var("a"), var("b")), var("c")));
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_statement("a ^");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("at position 3") != std::string::npos);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS(parse_statement("[a,b] = a ^ b"), ParseError);
  CHECK_THROWS_AS(parse_statement("vars a, b\na ^ c <= a"), ParseError);
  CHECK_THROWS_AS(parse_statement("a <= (b"), ParseError);
  CHECK_THROWS_AS(parse_statement("a b <= a"), ParseError);
  CHECK_THROWS_AS(parse_statement("a ^ b"), ParseError);
  CHECK_THROWS_AS(parse_statement(""), ParseError);
}

TEST_CASE("printing and re-parsing is the identity") {
  for (const char* text : {"a ^ (b o c) <= b_3",
                           "a ^ (b o c) <= (a ^ b_3) o c o b o (a ^ c_3)",
                           "(a \\/ b) ^ c = a o (b o c)",
                           "family x_,y_ of (p,q,r)\np ^ (q o r) <= x_2",
                           "vars a, b, c\na o b <= b o a",
                           "a /\\ b <= a"}) {
    CAPTURE(text);
    Statement s = parse_statement(text);
    std::string printed = to_string(s);
    CHECK(parse_statement(printed) == s);
    CHECK(to_string(parse_statement(printed)) == printed);
  }
  CHECK(to_string(parse_statement("a  ^(b o   c)<=b_3")) == "a ^ (b o c) <= b_3");
  CHECK(to_string(parse_statement("a /\\ b <= a")) == "a ^ b <= a");
  Statement fam = parse_statement("family x_,y_ of (p,q,r)\np ^ (q o r) <= x_2");
  CHECK(fam.family.alpha == "p");
  CHECK(fam.family.first_prefix == "x_");
  CHECK(fam.variables() == std::vector<std::string>{"p", "q", "r"});
}

TEST_CASE("relations evaluate by their definitions") {
  Algebra c3 = corpus("c3");
  Env env{{"a", P(c3, "0 1|2")}, {"b", P(c3, "0|1 2")}, {"c", P(c3, "0 1 2")}};
  BinRel ab = evaluate(c3, {}, *compose(var("a"), var("b")), env);
  CHECK(ab.related(0, 2));
  CHECK(!ab.related(2, 0));
  CHECK(!ab.is_equivalence());
  BinRel b1 = evaluate(c3, {}, *family(0, 1), env);
  CHECK(b1 == BinRel::from_partition(env.at("b")));
  BinRel c0 = evaluate(c3, {}, *family(1, 0), env);
  CHECK(c0 == BinRel::identity(3));
  CHECK_THROWS_AS(evaluate(c3, {}, *var("z"), env), ValidationError);
  // b_2 = b \/ (a ^ c_1), c_1 = c.
  BinRel b2 = evaluate(c3, {}, *family(0, 2), env);
  CHECK(b2.to_partition() == join_equivalence(env.at("b"), meet(env.at("a"), env.at("c"))));
}

TEST_CASE("connectives on congruences") {
  std::mt19937_64 rng(31);
  for (const char* name : {"c3", "c4", "z4", "s3", "set4", "tree"}) {
    CAPTURE(name);
    Algebra a = corpus(name);
    ConLattice lat = congruence_lattice(a);
    for (int round = 0; round < 40; ++round) {
      std::size_t i = rng() % lat.size(), j = rng() % lat.size(), k = rng() % lat.size();
      Env env{{"a", lat.at(i)}, {"b", lat.at(j)}, {"c", lat.at(k)}};
      auto ev = [&](const char* text) {
        Statement s = parse_statement(std::string(text) + " <= a");
        return evaluate(a, s.family, *s.lhs, env);
      };
      CHECK(ev("a \\/ b").to_partition() == lat.at(lat.join(i, j)));
      CHECK(ev("a ^ b").to_partition() == lat.at(lat.meet(i, j)));
      CHECK(ev("(a o b) o c") == ev("a o (b o c)"));
      CHECK(ev("a ^ b") == ev("b ^ a"));
      CHECK(ev("a \\/ b") == ev("b \\/ a"));
      CHECK(ev("(a ^ b) ^ c") == ev("a ^ (b ^ c)"));
      CHECK(ev("(a \\/ b) \\/ c") == ev("a \\/ (b \\/ c)"));
      CHECK(ev("a ^ a") == ev("a"));
      CHECK(ev("a \\/ a") == ev("a"));
      CHECK(ev("a").subset_of(ev("a o b")));
      CHECK(ev("b").subset_of(ev("a o b")));
      CHECK(ev("a o b").subset_of(ev("a \\/ b")));
    }
  }
}

TEST_CASE("joins of relations that are not equivalences are flagged") {
  Algebra set3 = corpus("set3");
  Env env{{"a", P(set3, "0 1")}, {"b", P(set3, "1 2")}, {"c", P(set3, "")}};
  EvalFlags flags;
  BinRel r = evaluate(set3, {}, *join(compose(var("a"), var("b")), var("c")), env, &flags);
  CHECK(flags.nonequivalence_join);
  CHECK(r.is_equivalence());
  CHECK(r.to_partition().is_total());
  EvalFlags clean;
  evaluate(set3, {}, *join(var("a"), var("b")), env, &clean);
  CHECK(!clean.nonequivalence_join);

  Statement s = parse_statement("(a o b) \\/ (a ^ b) <= a \\/ b");
  StatementCheck check = check_universal(set3, s, congruence_lattice(set3));
  CHECK(check.holds);
  CHECK(check.nonequivalence_join);
}

TEST_CASE("commutator atoms use the term-condition commutator") {
  Algebra s3 = corpus("s3");
  ConLattice lat = congruence_lattice(s3);
  Statement s = parse_statement("[a,b] <= a ^ b", ParseOptions{true});
  for (const auto& x : lat.elements()) {
    for (const auto& y : lat.elements()) {
      Env env{{"a", x}, {"b", y}};
      CHECK(evaluate(s3, {}, *s.lhs, env).to_partition() == tc_commutator(s3, x, y));
    }
  }
  CHECK(check_universal(s3, s, lat).holds);
}

TEST_CASE("universal checks") {
  Algebra z4 = corpus("z4");
  Statement weak = parse_statement("a ^ (b o c) <= (a ^ b_3) o c o b o (a ^ c_3)");
  StatementCheck z = check_universal(z4, weak, congruence_lattice(z4));
  CHECK(z.holds);
  CHECK(z.assignments == 27);

  Algebra s2 = corpus("s2");
  StatementCheck sd = check_universal(s2, parse_statement("a ^ (b o c) <= b_2"),
                                      congruence_lattice(s2));
  CHECK(sd.holds);
  CHECK(sd.assignments == 8);

  // Permutability fails on a bare set; the first failure is reported.
  Algebra set3 = corpus("set3");
  ConLattice lat = congruence_lattice(set3);
  StatementCheck perm = check_universal(set3, parse_statement("a o b <= b o a"), lat);
  REQUIRE(!perm.holds);
  REQUIRE(perm.counterexample);
  const auto& cx = *perm.counterexample;
  Env env;
  for (const auto& [name, index] : cx.assignment) env[name] = lat.at(index);
  BinRel l = evaluate(set3, {}, *compose(var("a"), var("b")), env);
  BinRel r = evaluate(set3, {}, *compose(var("b"), var("a")), env);
  CHECK(l.related(cx.x, cx.y));
  CHECK(!r.related(cx.x, cx.y));
  // Nothing earlier in enumeration order fails.
  std::size_t first = cx.assignment[0].second * lat.size() + cx.assignment[1].second;
  for (std::size_t idx = 0; idx < first; ++idx) {
    Env e{{"a", lat.at(idx / lat.size())}, {"b", lat.at(idx % lat.size())}};
    CHECK(evaluate(set3, {}, *compose(var("a"), var("b")), e)
              .subset_of(evaluate(set3, {}, *compose(var("b"), var("a")), e)));
  }

  // Equations fail in either direction.
  StatementCheck eq = check_universal(set3, parse_statement("a o b = a"), lat);
  CHECK(!eq.holds);

  CHECK_THROWS_AS(check_universal(corpus("set4"), parse_statement("a ^ b ^ c ^ d <= a"),
                                  congruence_lattice(corpus("set4")), 1000),
                  BudgetExceeded);
}

TEST_CASE("neutral semilattices have meet-semidistributive congruence lattices") {
  for (const char* name : {"s2", "c3", "c4", "free2", "diamond", "claw", "tree"}) {
    CAPTURE(name);
    Algebra a = corpus(name);
    ConLattice lat = congruence_lattice(a);
    CHECK(is_meet_semidistributive(lat));
    CHECK(check_universal(a, parse_statement("[a,b] = a ^ b", ParseOptions{true}), lat).holds);
    // The iterated bound holds from some index on.
    bool some = false;
    for (std::size_t n = 1; n <= 6 && !some; ++n) {
      some = check_universal(a, parse_statement("a ^ (b o c) <= b_" + std::to_string(n)), lat).holds;
    }
    CHECK(some);
  }
  Algebra s2 = corpus("s2");
  CHECK(check_universal(s2, parse_statement("a ^ (b o c) <= b_2"), congruence_lattice(s2)).holds);
  CHECK(!check_universal(s2, parse_statement("a ^ (b o c) <= b_1"), congruence_lattice(s2)).holds);
  // A single algebra's lattice can be semidistributive without neutrality.
  Algebra z2 = corpus("z2");
  ConLattice lz = congruence_lattice(z2);
  CHECK(is_meet_semidistributive(lz));
  CHECK(!check_universal(z2, parse_statement("[a,b] = a ^ b", ParseOptions{true}), lz).holds);
}
