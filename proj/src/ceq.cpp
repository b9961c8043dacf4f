// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/ceq.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "commlab/commutator.hpp"
#include "commlab/error.hpp"
#include "union_find.hpp"

namespace commlab::ceq {

bool operator==(const Expr& x, const Expr& y) {
  if (x.op != y.op) return false;
  switch (x.op) {
    case Op::Var:
      return x.name == y.name;
    case Op::Family:
      return x.family == y.family && x.index == y.index;
    default:
      return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
  }
}

bool operator==(const Statement& x, const Statement& y) {
  return x.declared_vars == y.declared_vars && x.family_declared == y.family_declared &&
         x.family == y.family && x.relation == y.relation && *x.lhs == *y.lhs &&
         *x.rhs == *y.rhs;
}

namespace {

ExprPtr binary(Op op, ExprPtr x, ExprPtr y) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->lhs = std::move(x);
  e->rhs = std::move(y);
  return e;
}

}  // namespace

ExprPtr var(std::string name) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Var;
  e->name = std::move(name);
  return e;
}
ExprPtr join(ExprPtr x, ExprPtr y) { return binary(Op::Join, std::move(x), std::move(y)); }
ExprPtr meet(ExprPtr x, ExprPtr y) { return binary(Op::Meet, std::move(x), std::move(y)); }
ExprPtr compose(ExprPtr x, ExprPtr y) { return binary(Op::Compose, std::move(x), std::move(y)); }
ExprPtr commutator(ExprPtr x, ExprPtr y) {
  return binary(Op::Commutator, std::move(x), std::move(y));
}
ExprPtr family(int which, std::size_t k) {
  auto e = std::make_shared<Expr>();
  e->op = Op::Family;
  e->family = which;
  e->index = k;
  return e;
}

ExprPtr join_all(const std::vector<ExprPtr>& xs) {
  if (xs.empty()) throw ValidationError("empty join");
  ExprPtr out = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) out = join(out, xs[i]);
  return out;
}

ExprPtr meet_all(const std::vector<ExprPtr>& xs) {
  if (xs.empty()) throw ValidationError("empty meet");
  ExprPtr out = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) out = meet(out, xs[i]);
  return out;
}

namespace {

void collect_variables(const Expr& e, const FamilyBinding& fam, std::vector<std::string>& out,
                       std::set<std::string>& seen) {
  auto add = [&](const std::string& name) {
    if (seen.insert(name).second) out.push_back(name);
  };
  switch (e.op) {
    case Op::Var:
      add(e.name);
      break;
    case Op::Family:
      add(fam.alpha);
      add(fam.beta);
      add(fam.gamma);
      break;
    default:
      collect_variables(*e.lhs, fam, out, seen);
      collect_variables(*e.rhs, fam, out, seen);
  }
}

bool has_commutator(const Expr& e) {
  if (e.op == Op::Commutator) return true;
  if (e.op == Op::Var || e.op == Op::Family) return false;
  return has_commutator(*e.lhs) || has_commutator(*e.rhs);
}

std::size_t expr_size(const Expr& e) {
  if (e.op == Op::Var) return 1;
  if (e.op == Op::Family) return 2 * e.index + 1;
  return 1 + expr_size(*e.lhs) + expr_size(*e.rhs);
}

}  // namespace

std::vector<std::string> Statement::variables() const {
  if (declared_vars) return *declared_vars;
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_variables(*lhs, family, out, seen);
  collect_variables(*rhs, family, out, seen);
  return out;
}

bool Statement::uses_commutator() const { return has_commutator(*lhs) || has_commutator(*rhs); }

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, Family, Join, Meet, Compose, LParen, RParen, LBracket, RBracket, Comma,
                 Leq, Eq, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t index = 0;  // Family
  int family = 0;
  std::size_t line = 1;
  std::size_t column = 0;  // 0-based
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

[[noreturn]] void fail_at(const std::string& message, std::size_t line, std::size_t column) {
  throw ParseError(message + " at position " + std::to_string(column), line, column + 1);
}

class Lexer {
 public:
  Lexer(std::string_view line, std::size_t line_no, const FamilyBinding& fam)
      : text_(line), line_(line_no), fam_(fam) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Token t;
      t.line = line_;
      t.column = pos_;
      if (pos_ >= text_.size() || text_[pos_] == '#') {
        t.kind = Tok::End;
        t.column = std::min(pos_, trimmed_end());
        out.push_back(t);
        return out;
      }
      char c = text_[pos_];
      auto two = text_.substr(pos_, 2);
      if (two == "\\/") {
        t.kind = Tok::Join;
        pos_ += 2;
      } else if (two == "/\\") {
        t.kind = Tok::Meet;
        pos_ += 2;
      } else if (two == "<=") {
        t.kind = Tok::Leq;
        pos_ += 2;
      } else if (c == '^') {
        t.kind = Tok::Meet;
        ++pos_;
      } else if (c == '=') {
        t.kind = Tok::Eq;
        ++pos_;
      } else if (c == '(') {
        t.kind = Tok::LParen;
        ++pos_;
      } else if (c == ')') {
        t.kind = Tok::RParen;
        ++pos_;
      } else if (c == '[') {
        t.kind = Tok::LBracket;
        ++pos_;
      } else if (c == ']') {
        t.kind = Tok::RBracket;
        ++pos_;
      } else if (c == ',') {
        t.kind = Tok::Comma;
        ++pos_;
      } else if (is_ident_start(c)) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
        t.text = std::string(text_.substr(start, pos_ - start));
        classify(t);
      } else {
        fail_at(std::string("unexpected character '") + c + "'", line_, pos_);
      }
      out.push_back(t);
    }
  }

 private:
  std::size_t trimmed_end() const {
    std::size_t end = text_.find('#');
    if (end == std::string_view::npos) end = text_.size();
    while (end > 0 && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    return end;
  }

  void classify(Token& t) const {
    if (t.text == "o") {
      t.kind = Tok::Compose;
      return;
    }
    t.kind = Tok::Ident;
    for (int which = 0; which < 2; ++which) {
      const std::string& prefix = which == 0 ? fam_.first_prefix : fam_.second_prefix;
      if (t.text.size() <= prefix.size() || t.text.compare(0, prefix.size(), prefix) != 0) continue;
      std::string_view digits = std::string_view(t.text).substr(prefix.size());
      if (!std::all_of(digits.begin(), digits.end(),
                       [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
        continue;
      }
      if (digits.size() > 6) fail_at("family index too large", line_, t.column);
      t.kind = Tok::Family;
      t.family = which;
      t.index = std::stoul(std::string(digits));
      return;
    }
  }

  std::string_view text_;
  std::size_t line_;
  const FamilyBinding& fam_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, ParseOptions options,
         const std::optional<std::vector<std::string>>& declared)
      : toks_(std::move(tokens)), options_(options), declared_(declared) {}

  Statement statement() {
    Statement s;
    s.lhs = expr();
    if (peek().kind == Tok::Leq) {
      s.relation = Relation::Inclusion;
    } else if (peek().kind == Tok::Eq) {
      s.relation = Relation::Equation;
    } else {
      fail("expected '<=' or '='");
    }
    ++pos_;
    s.rhs = expr();
    if (peek().kind != Tok::End) fail("unexpected token after the statement");
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    fail_at(t.kind == Tok::End ? message + " (unexpected end of input)" : message, t.line,
            t.column);
  }

  ExprPtr expr() {
    ExprPtr e = meet_expr();
    while (peek().kind == Tok::Join) {
      ++pos_;
      e = join(e, meet_expr());
    }
    return e;
  }

  ExprPtr meet_expr() {
    ExprPtr e = compose_expr();
    while (peek().kind == Tok::Meet) {
      ++pos_;
      e = meet(e, compose_expr());
    }
    return e;
  }

  ExprPtr compose_expr() {
    ExprPtr e = atom();
    while (peek().kind == Tok::Compose) {
      ++pos_;
      e = compose(e, atom());
    }
    return e;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        if (declared_ &&
            std::find(declared_->begin(), declared_->end(), t.text) == declared_->end()) {
          fail("undeclared variable '" + t.text + "'");
        }
        ++pos_;
        return var(t.text);
      }
      case Tok::Family:
        ++pos_;
        return family(t.family, t.index);
      case Tok::LParen: {
        ++pos_;
        ExprPtr e = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        ++pos_;
        return e;
      }
      case Tok::LBracket: {
        if (!options_.commutators) fail("commutator atoms are not enabled");
        ++pos_;
        ExprPtr x = expr();
        if (peek().kind != Tok::Comma) fail("expected ','");
        ++pos_;
        ExprPtr y = expr();
        if (peek().kind != Tok::RBracket) fail("expected ']'");
        ++pos_;
        return commutator(x, y);
      }
      default:
        fail("expected a variable, family atom or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions options_;
  const std::optional<std::vector<std::string>>& declared_;
};

bool is_plain_identifier(std::string_view s) {
  return !s.empty() && is_ident_start(s.front()) &&
         std::all_of(s.begin(), s.end(), is_ident_char) && s != "o";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_names(std::string_view list, std::size_t line, std::size_t col) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = list.find(',', start);
    std::string_view item = trim(list.substr(start, comma == std::string_view::npos
                                                        ? std::string_view::npos
                                                        : comma - start));
    if (!is_plain_identifier(item)) fail_at("expected an identifier in the list", line, col);
    out.emplace_back(item);
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

// family b_,c_ of (a,b,c)
FamilyBinding parse_family_header(std::string_view rest, std::size_t line) {
  FamilyBinding fam;
  std::size_t of = rest.find(" of ");
  if (of == std::string_view::npos) fail_at("family header needs 'of'", line, 0);
  auto prefixes = split_names(rest.substr(0, of), line, 0);
  if (prefixes.size() != 2) fail_at("family header needs two prefixes", line, 0);
  for (const auto& p : prefixes) {
    if (p.back() != '_') fail_at("family prefixes must end in '_'", line, 0);
  }
  if (prefixes[0] == prefixes[1]) fail_at("family prefixes must differ", line, 0);
  std::string_view bases = trim(rest.substr(of + 4));
  if (bases.size() < 2 || bases.front() != '(' || bases.back() != ')') {
    fail_at("family header needs '(alpha,beta,gamma)'", line, 0);
  }
  auto names = split_names(bases.substr(1, bases.size() - 2), line, 0);
  if (names.size() != 3) fail_at("family header needs three base variables", line, 0);
  fam.first_prefix = prefixes[0];
  fam.second_prefix = prefixes[1];
  fam.alpha = names[0];
  fam.beta = names[1];
  fam.gamma = names[2];
  return fam;
}

}  // namespace

Statement parse_statement(std::string_view text, ParseOptions options) {
  Statement header;
  std::vector<Token> tokens;
  std::size_t line_no = 0;
  std::size_t last_line = 1;
  bool have_statement = false;
  std::vector<std::pair<std::string, std::size_t>> body;  // statement lines
  while (!text.empty() || line_no == 0) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    std::string_view content = trim(line.substr(0, line.find('#')));
    if (content.empty()) {
      if (text.empty()) break;
      continue;
    }
    last_line = line_no;
    if (!have_statement && content.starts_with("family ")) {
      if (header.family_declared) fail_at("duplicate family header", line_no, 0);
      header.family_declared = true;
      header.family = parse_family_header(content.substr(7), line_no);
    } else if (!have_statement && content.starts_with("vars ")) {
      if (header.declared_vars) fail_at("duplicate vars header", line_no, 0);
      header.declared_vars = split_names(content.substr(5), line_no, 0);
    } else {
      have_statement = true;
      body.emplace_back(std::string(line), line_no);
    }
    if (text.empty()) break;
  }
  if (body.empty()) throw ParseError("missing statement", last_line);
  if (header.declared_vars && header.family_declared) {
    for (const auto* base : {&header.family.alpha, &header.family.beta, &header.family.gamma}) {
      const auto& vars = *header.declared_vars;
      if (std::find(vars.begin(), vars.end(), *base) == vars.end()) {
        fail_at("family base variable '" + *base + "' is not declared", last_line, 0);
      }
    }
  }
  for (const auto& [line, number] : body) {
    auto toks = Lexer(line, number, header.family).run();
    toks.pop_back();  // End of this line
    tokens.insert(tokens.end(), toks.begin(), toks.end());
  }
  Token end;
  end.kind = Tok::End;
  end.line = body.back().second;
  {
    std::string_view last = body.back().first;
    std::size_t e = last.find('#');
    if (e == std::string_view::npos) e = last.size();
    while (e > 0 && std::isspace(static_cast<unsigned char>(last[e - 1]))) --e;
    end.column = e;
  }
  tokens.push_back(end);

  Statement s = Parser(std::move(tokens), options, header.declared_vars).statement();
  s.declared_vars = header.declared_vars;
  s.family_declared = header.family_declared;
  s.family = header.family;
  return s;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

const char* symbol(Op op) {
  switch (op) {
    case Op::Join:
      return "\\/";
    case Op::Meet:
      return "^";
    case Op::Compose:
      return "o";
    default:
      return "?";
  }
}

void print(const Expr& e, const FamilyBinding& fam, const Expr* parent, bool right,
           std::string& out) {
  switch (e.op) {
    case Op::Var:
      out += e.name;
      return;
    case Op::Family:
      out += (e.family == 0 ? fam.first_prefix : fam.second_prefix) + std::to_string(e.index);
      return;
    case Op::Commutator:
      out += "[";
      print(*e.lhs, fam, nullptr, false, out);
      out += ",";
      print(*e.rhs, fam, nullptr, false, out);
      out += "]";
      return;
    default:
      break;
  }
  const bool parens = parent && (parent->op != e.op || right);
  if (parens) out += "(";
  print(*e.lhs, fam, &e, false, out);
  out += " ";
  out += symbol(e.op);
  out += " ";
  print(*e.rhs, fam, &e, true, out);
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const Expr& e, const FamilyBinding& family) {
  std::string out;
  print(e, family, nullptr, false, out);
  return out;
}

std::string to_string(const Statement& s) {
  std::string out;
  if (s.family_declared) {
    out += "family " + s.family.first_prefix + "," + s.family.second_prefix + " of (" +
           s.family.alpha + "," + s.family.beta + "," + s.family.gamma + ")\n";
  }
  if (s.declared_vars) {
    out += "vars ";
    for (std::size_t i = 0; i < s.declared_vars->size(); ++i) {
      out += (i ? ", " : "") + (*s.declared_vars)[i];
    }
    out += "\n";
  }
  out += to_string(*s.lhs, s.family);
  out += s.relation == Relation::Inclusion ? " <= " : " = ";
  out += to_string(*s.rhs, s.family);
  return out;
}

// ---------------------------------------------------------------------------
// Relations

BinRel BinRel::identity(std::size_t n) {
  BinRel r(n);
  for (std::size_t x = 0; x < n; ++x) r.rows_[x].set(x);
  return r;
}

BinRel BinRel::from_partition(const Partition& p) {
  const std::size_t n = p.size();
  BinRel r(n);
  for (const auto& block : p.blocks()) {
    boost::dynamic_bitset<> row(n);
    for (Elem x : block) row.set(x);
    for (Elem x : block) r.rows_[x] = row;
  }
  return r;
}

bool BinRel::is_equivalence() const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!rows_[x][x]) return false;
    // Reflexive + every related row equal <=> equivalence.
    for (std::size_t y = rows_[x].find_first(); y != boost::dynamic_bitset<>::npos;
         y = rows_[x].find_next(y)) {
      if (rows_[y] != rows_[x]) return false;
    }
  }
  return true;
}

bool BinRel::subset_of(const BinRel& other) const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (!rows_[x].is_subset_of(other.rows_[x])) return false;
  }
  return true;
}

Partition BinRel::to_partition() const {
  if (!is_equivalence()) throw ValidationError("relation is not an equivalence");
  std::vector<std::size_t> labels(size());
  for (std::size_t x = 0; x < size(); ++x) labels[x] = rows_[x].find_first();
  return Partition(labels);
}

BinRel operator&(const BinRel& x, const BinRel& y) {
  BinRel out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.rows_[i] = x.rows_[i] & y.rows_[i];
  return out;
}

BinRel compose(const BinRel& r, const BinRel& s) {
  BinRel out(r.size());
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = r.rows_[x].find_first(); y != boost::dynamic_bitset<>::npos;
         y = r.rows_[x].find_next(y)) {
      out.rows_[x] |= s.rows_[y];
    }
  }
  return out;
}

BinRel join(const BinRel& r, const BinRel& s) {
  const std::size_t n = r.size();
  detail::UnionFind uf(n);
  for (const BinRel* rel : {&r, &s}) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = rel->rows_[x].find_first(); y != boost::dynamic_bitset<>::npos;
           y = rel->rows_[x].find_next(y)) {
        uf.unite(x, y);
      }
    }
  }
  return BinRel::from_partition(uf.partition());
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

class Evaluator {
 public:
  Evaluator(const Algebra& alg, const FamilyBinding& fam, const Env& env, EvalFlags* flags)
      : alg_(alg), fam_(fam), env_(env), flags_(flags) {}

  BinRel eval(const Expr& e) {
    switch (e.op) {
      case Op::Var:
        return BinRel::from_partition(lookup(e.name));
      case Op::Meet:
        return eval(*e.lhs) & eval(*e.rhs);
      case Op::Compose:
        return compose(eval(*e.lhs), eval(*e.rhs));
      case Op::Join: {
        BinRel x = eval(*e.lhs);
        BinRel y = eval(*e.rhs);
        if (flags_ && (!x.is_equivalence() || !y.is_equivalence())) {
          flags_->nonequivalence_join = true;
        }
        return join(x, y);
      }
      case Op::Family:
        return BinRel::from_partition(family_value(e.family, e.index));
      case Op::Commutator: {
        BinRel x = eval(*e.lhs);
        BinRel y = eval(*e.rhs);
        if (!x.is_equivalence() || !y.is_equivalence()) {
          throw ValidationError("commutator arguments must be congruences");
        }
        Partition px = x.to_partition();
        Partition py = y.to_partition();
        if (!is_congruence(alg_, px) || !is_congruence(alg_, py)) {
          throw ValidationError("commutator arguments must be congruences");
        }
        return BinRel::from_partition(tc_commutator(alg_, px, py));
      }
    }
    throw InternalError("unknown expression node");
  }

 private:
  const Partition& lookup(const std::string& name) const {
    auto it = env_.find(name);
    if (it == env_.end()) throw ValidationError("variable '" + name + "' is not assigned");
    if (it->second.size() != alg_.size()) {
      throw ValidationError("variable '" + name + "' has the wrong size");
    }
    return it->second;
  }

  // Partitions throughout: every value in the recursion is a congruence, and
  // the join of congruences is the transitive closure of their union.
  Partition family_value(int which, std::size_t k) {
    const Partition& alpha = lookup(fam_.alpha);
    const Partition& beta = lookup(fam_.beta);
    const Partition& gamma = lookup(fam_.gamma);
    Partition b = Partition::equality(alg_.size());
    Partition c = b;
    for (std::size_t i = 0; i < k; ++i) {
      Partition nb = join_equivalence(beta, commlab::meet(alpha, c));
      Partition nc = join_equivalence(gamma, commlab::meet(alpha, b));
      if (nb == b && nc == c) break;
      b = std::move(nb);
      c = std::move(nc);
    }
    return which == 0 ? b : c;
  }

  const Algebra& alg_;
  const FamilyBinding& fam_;
  const Env& env_;
  EvalFlags* flags_;
};

}  // namespace

BinRel evaluate(const Algebra& alg, const FamilyBinding& family, const Expr& e, const Env& env,
                EvalFlags* flags) {
  return Evaluator(alg, family, env, flags).eval(e);
}

std::optional<std::pair<Elem, Elem>> first_failure(const BinRel& lhs, const BinRel& rhs,
                                                   Relation relation, bool* in_lhs) {
  const std::size_t n = lhs.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      const bool l = lhs.related(x, y);
      const bool r = rhs.related(x, y);
      if (l && !r) {
        if (in_lhs) *in_lhs = true;
        return std::pair{x, y};
      }
      if (relation == Relation::Equation && r && !l) {
        if (in_lhs) *in_lhs = false;
        return std::pair{x, y};
      }
    }
  }
  return std::nullopt;
}

StatementCheck check_universal(const Algebra& alg, const Statement& s, const ConLattice& lat,
                               std::size_t budget) {
  const auto vars = s.variables();
  const std::size_t l = lat.size();
  const std::size_t cost_per = expr_size(*s.lhs) + expr_size(*s.rhs);
  std::size_t assignments = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (assignments > budget / std::max<std::size_t>(l, 1)) {
      throw BudgetExceeded("congruence equation check has too many assignments", budget,
                           assignments);
    }
    assignments *= l;
  }
  if (assignments > budget / std::max<std::size_t>(cost_per, 1)) {
    throw BudgetExceeded("congruence equation check exceeds its work budget", budget,
                         assignments * cost_per);
  }

  StatementCheck out;
  std::vector<std::size_t> idx(vars.size(), 0);
  Env env;
  for (const auto& v : vars) env[v] = lat.at(0);
  EvalFlags flags;
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = lat.at(idx[i]);
    Evaluator ev(alg, s.family, env, &flags);
    BinRel lhs = ev.eval(*s.lhs);
    BinRel rhs = ev.eval(*s.rhs);
    ++out.assignments;
    bool in_lhs = true;
    if (auto bad = first_failure(lhs, rhs, s.relation, &in_lhs)) {
      out.holds = false;
      Counterexample cx;
      for (std::size_t i = 0; i < vars.size(); ++i) cx.assignment.emplace_back(vars[i], idx[i]);
      cx.x = bad->first;
      cx.y = bad->second;
      cx.in_lhs = in_lhs;
      out.counterexample = std::move(cx);
      break;
    }
    // Odometer, first variable most significant.
    std::size_t i = vars.size();
    while (i > 0 && ++idx[i - 1] == l) idx[--i] = 0;
    if (i == 0) break;
  }
  out.nonequivalence_join = flags.nonequivalence_join;
  return out;
}

}  // namespace commlab::ceq
