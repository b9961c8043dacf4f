// Copyright (C) 2026 The commlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "commlab/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include "commlab/error.hpp"

namespace commlab {

std::size_t table_index(std::span<const Elem> args, std::size_t n) {
  std::size_t index = 0;
  for (Elem a : args) index = index * n + a;
  return index;
}

std::size_t checked_power(std::size_t n, std::size_t k) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && result > kMaxTableSize / n) {
      throw ValidationError("table of size " + std::to_string(n) + "^" +
                            std::to_string(k) + " is too large");
    }
    result *= n;
  }
  return result;
}

namespace {

bool is_name(std::string_view s, std::string_view extra) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && s.front() != '_') return false;
  return std::all_of(s.begin(), s.end(), [extra](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           extra.find(c) != std::string_view::npos;
  });
}

bool is_identifier(std::string_view s) { return is_name(s, ""); }

}  // namespace

Algebra::Algebra(std::string name, std::size_t size, std::vector<Operation> ops)
    : name_(std::move(name)), size_(size), ops_(std::move(ops)) {
  if (size_ == 0) throw ValidationError("algebra '" + name_ + "' has empty universe");
  std::set<std::string, std::less<>> names;
  for (const auto& op : ops_) {
    if (!is_identifier(op.name)) throw ValidationError("invalid operation name '" + op.name + "'");
    if (!names.insert(op.name).second) {
      throw ValidationError("duplicate operation name '" + op.name + "'");
    }
    std::size_t expected = checked_power(size_, op.arity);
    if (op.table.size() != expected) {
      throw ValidationError("operation " + op.name + ": table length " +
                            std::to_string(op.table.size()) + " != " +
                            std::to_string(expected));
    }
    for (Elem v : op.table) {
      if (v >= size_) {
        throw ValidationError("operation " + op.name + ": value " + std::to_string(v) +
                              " out of range 0.." + std::to_string(size_ - 1));
      }
    }
  }
}

std::optional<std::size_t> Algebra::find_op(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) return i;
  }
  return std::nullopt;
}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t pos = 0;
  std::size_t line_start = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '\n') {
      ++line;
      ++pos;
      line_start = pos;
    } else if (c == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else {
      std::size_t start = pos;
      while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
             text[pos] != '#') {
        ++pos;
      }
      tokens.push_back({std::string(text.substr(start, pos - start)), line,
                        start - line_start + 1});
    }
  }
  return tokens;
}

std::optional<std::size_t> to_number(const std::string& s) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

class AlgebraReader {
 public:
  explicit AlgebraReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Algebra read() {
    expect_keyword("algebra");
    const Token& name = next("algebra name");
    if (!is_name(name.text, "-.")) fail("invalid algebra name '" + name.text + "'", name);
    expect_keyword("size");
    std::size_t n = expect_number("universe size");
    if (n == 0) fail("universe size must be positive", tokens_[pos_ - 1]);

    std::vector<Operation> ops;
    std::set<std::string> names;
    while (pos_ < tokens_.size()) {
      const Token& kw = tokens_[pos_];
      if (kw.text != "op") fail("expected 'op', found '" + kw.text + "'", kw);
      ++pos_;
      const Token& op_name = next("operation name");
      if (!is_identifier(op_name.text)) {
        fail("invalid operation name '" + op_name.text + "'", op_name);
      }
      if (!names.insert(op_name.text).second) {
        fail("duplicate operation name '" + op_name.text + "'", op_name);
      }
      std::size_t arity = expect_number("arity");
      std::size_t expected = 0;
      try {
        expected = checked_power(n, arity);
      } catch (const ValidationError& e) {
        fail(e.what(), op_name);
      }
      Operation op{op_name.text, arity, {}};
      op.table.reserve(expected);
      while (pos_ < tokens_.size() && tokens_[pos_].text != "op") {
        const Token& tok = tokens_[pos_];
        auto value = to_number(tok.text);
        if (!value) fail("expected a table value, found '" + tok.text + "'", tok);
        if (*value >= n) {
          fail("value " + tok.text + " out of range 0.." + std::to_string(n - 1), tok);
        }
        op.table.push_back(static_cast<Elem>(*value));
        ++pos_;
      }
      if (op.table.size() != expected) {
        fail("operation " + op.name + ": table length " + std::to_string(op.table.size()) +
                 " != " + std::to_string(expected),
             op_name);
      }
      ops.push_back(std::move(op));
    }
    return Algebra(name.text, n, std::move(ops));
  }

 private:
  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw ParseError(message, at.line, at.column);
  }

  [[noreturn]] void fail_eof(const std::string& what) const {
    std::size_t line = tokens_.empty() ? 1 : tokens_.back().line;
    throw ParseError("unexpected end of input, expected " + what, line);
  }

  const Token& next(const std::string& what) {
    if (pos_ >= tokens_.size()) fail_eof(what);
    return tokens_[pos_++];
  }

  void expect_keyword(const std::string& keyword) {
    const Token& tok = next("'" + keyword + "'");
    if (tok.text != keyword) fail("expected '" + keyword + "', found '" + tok.text + "'", tok);
  }

  std::size_t expect_number(const std::string& what) {
    const Token& tok = next(what);
    auto value = to_number(tok.text);
    if (!value) fail("expected " + what + ", found '" + tok.text + "'", tok);
    return *value;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Algebra parse_algebra(std::string_view text) {
  return AlgebraReader(tokenize(text)).read();
}

std::string format_algebra(const Algebra& alg) {
  std::ostringstream out;
  out << "algebra " << alg.name() << "\n";
  out << "size " << alg.size() << "\n";
  for (const auto& op : alg.ops()) {
    out << "op " << op.name << " " << op.arity << "\n";
    std::size_t row = op.arity == 0 ? 1 : alg.size();
    for (std::size_t i = 0; i < op.table.size(); ++i) {
      out << op.table[i] << ((i + 1) % row == 0 ? "\n" : " ");
    }
  }
  return out.str();
}

Algebra load_algebra(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

TermPtr Term::variable(std::size_t index) {
  auto t = std::shared_ptr<Term>(new Term());
  t->var_ = index;
  return t;
}

TermPtr Term::apply(std::string op, std::vector<TermPtr> args) {
  if (op.empty()) throw ValidationError("operation name must not be empty");
  auto t = std::shared_ptr<Term>(new Term());
  t->op_ = std::move(op);
  t->args_ = std::move(args);
  return t;
}

namespace {

template <class F>
auto memoized(const Term& root, F&& combine) {
  using R = decltype(combine(root, std::vector<int>{}));
  std::unordered_map<const Term*, R> memo;
  auto visit = [&](auto&& self, const Term& t) -> R {
    if (auto it = memo.find(&t); it != memo.end()) return it->second;
    std::vector<R> children;
    children.reserve(t.args().size());
    for (const auto& a : t.args()) children.push_back(self(self, *a));
    R r = combine(t, children);
    memo.emplace(&t, r);
    return r;
  };
  return visit(visit, root);
}

}  // namespace

std::size_t Term::arity() const {
  return memoized(*this, [](const Term& t, const auto& children) -> std::size_t {
    if (t.is_variable()) return t.var() + 1;
    std::size_t m = 0;
    for (auto c : children) m = std::max<std::size_t>(m, c);
    return m;
  });
}

std::size_t Term::tree_size() const {
  constexpr std::size_t cap = std::numeric_limits<std::size_t>::max();
  return memoized(*this, [](const Term&, const auto& children) -> std::size_t {
    std::size_t total = 1;
    for (std::size_t c : children) total = (c > cap - total) ? cap : total + c;
    return total;
  });
}

std::string Term::to_string() const {
  if (is_variable()) return "x" + std::to_string(var_);
  std::string out = op_ + "(";
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (i > 0) out += ",";
    out += args_[i]->to_string();
  }
  return out + ")";
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  TermPtr parse() {
    TermPtr t = term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      auto c = static_cast<unsigned char>(text_[pos_]);
      if (!std::isalnum(c) && c != '_') break;
      ++pos_;
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  TermPtr term() {
    std::string name = identifier();
    skip_space();
    bool has_parens = pos_ < text_.size() && text_[pos_] == '(';
    if (!has_parens && name.size() > 1 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return Term::variable(*to_number(name.substr(1)));
    }
    std::vector<TermPtr> args;
    if (has_parens) {
      ++pos_;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') {
        ++pos_;
      } else {
        while (true) {
          args.push_back(term());
          skip_space();
          if (pos_ >= text_.size()) fail("unterminated argument list");
          if (text_[pos_] == ',') {
            ++pos_;
          } else if (text_[pos_] == ')') {
            ++pos_;
            break;
          } else {
            fail("expected ',' or ')'");
          }
        }
      }
    }
    return Term::apply(std::move(name), std::move(args));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text) { return TermParser(text).parse(); }

Elem eval_term(const Algebra& alg, const Term& term, std::span<const Elem> args) {
  std::unordered_map<const Term*, Elem> memo;
  std::vector<Elem> buffer;
  auto visit = [&](auto&& self, const Term& t) -> Elem {
    if (t.is_variable()) {
      if (t.var() >= args.size()) {
        throw ValidationError("variable x" + std::to_string(t.var()) +
                              " has no assigned value");
      }
      if (args[t.var()] >= alg.size()) throw ValidationError("argument out of range");
      return args[t.var()];
    }
    if (auto it = memo.find(&t); it != memo.end()) return it->second;
    auto op = alg.find_op(t.op());
    if (!op) throw ValidationError("unknown operation '" + t.op() + "'");
    if (alg.op(*op).arity != t.args().size()) {
      throw ValidationError("operation " + t.op() + " expects " +
                            std::to_string(alg.op(*op).arity) + " arguments, got " +
                            std::to_string(t.args().size()));
    }
    std::vector<Elem> values;
    values.reserve(t.args().size());
    for (const auto& a : t.args()) values.push_back(self(self, *a));
    Elem r = alg.apply(*op, values);
    memo.emplace(&t, r);
    return r;
  };
  return visit(visit, term);
}

std::vector<Elem> term_table(const Algebra& alg, const Term& term, std::size_t m) {
  std::size_t rows = checked_power(alg.size(), m);
  std::vector<Elem> table(rows);
  std::vector<Elem> args(m, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    table[r] = eval_term(alg, term, args);
    for (std::size_t i = m; i-- > 0;) {
      if (++args[i] < alg.size()) break;
      args[i] = 0;
    }
  }
  return table;
}

}  // namespace commlab
