#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "syzlab/dsl.hpp"
#include "syzlab/field.hpp"
#include "syzlab/monomial.hpp"

namespace syzlab::dsl {

std::string format_span(const Span& s) {
  return "line " + std::to_string(s.line) + ", column " + std::to_string(s.column);
}

namespace {

std::string with_expected(const std::string& message, const std::vector<std::string>& expected) {
  if (expected.empty()) return message;
  std::string out = message + " (expected ";
  if (expected.size() > 1) out += "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += ", ";
    out += expected[i];
  }
  return out + ")";
}

}  // namespace

ParseError::ParseError(Span span, const std::string& message, std::vector<std::string> expected)
    : UsageError(format_span(span) + ": " + with_expected(message, expected)),
      span_(span),
      expected_(std::move(expected)) {}

bool Expr::operator==(const Expr& o) const {
  return kind == o.kind && text == o.text && args == o.args && twists == o.twists && identifiers == o.identifiers;
}

bool Stmt::operator==(const Stmt& o) const {
  return kind == o.kind && name == o.name && prime == o.prime && variables == o.variables &&
         relations == o.relations && value == o.value;
}

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Span pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
    } else if (std::string_view("()[],;=+-*^/").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), pos});
      advance(1);
    } else {
      throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

const std::set<std::string> kReserved = {"ring", "ideal", "module", "let", "coker", "twists", "GF"};
const std::set<std::string> kFunctions = {
    "resolve", "syzygy", "transpose", "twist", "sum", "quotient", "free",  "depth",       "betti",
    "tor",     "ext",    "eta",       "audit", "probe_rigidity", "verify_splitting", "hilbert", "dim",
    "length",  "periodicity", "complexity"};
const std::set<std::string> kSymbols = {"k", "lemma42", "cor44", "prop28"};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  SessionAST session() {
    SessionAST ast;
    while (peek().kind != Tok::End) ast.statements.push_back(statement());
    return ast;
  }

 private:
  // ---- token helpers ----
  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at(const std::string& p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool at_word(const std::string& w) const { return peek().kind == Tok::Ident && peek().text == w; }
  const Token& take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().span, "unexpected " + describe(peek()), std::move(expected));
  }
  // End of a comma-separated list.
  void close_list(const std::string& p) {
    if (!at(p)) fail({"','", "'" + p + "'"});
    take();
  }

  const Token& expect(const std::string& p) {
    if (!at(p)) fail({"'" + p + "'"});
    return take();
  }
  void expect_word(const std::string& w) {
    if (!at_word(w)) fail({"'" + w + "'"});
    take();
  }
  const Token& identifier() {
    if (peek().kind != Tok::Ident || kReserved.count(peek().text) != 0) fail({"identifier"});
    return take();
  }
  int integer() {
    bool neg = false;
    if (at("-")) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::Int) fail({"integer"});
    const Token& t = take();
    if (t.text.size() > 9) throw ParseError(t.span, "integer " + t.text + " is too large");
    int v = std::stoi(t.text);
    return neg ? -v : v;
  }

  // ---- statements ----
  Stmt statement() {
    Stmt s;
    s.span = peek().span;
    if (at_word("ring")) {
      take();
      ring_decl(s);
    } else if (at_word("ideal") || at_word("module") || at_word("let")) {
      std::string word = take().text;
      s.kind = word == "ideal" ? StmtKind::Ideal : word == "module" ? StmtKind::Module : StmtKind::Let;
      s.name = identifier().text;
      expect("=");
      require_ring(s.span);
      s.value = expr();
      check(s.value);
      if (s.kind == StmtKind::Ideal && s.value.kind != ExprKind::IdealLit) {
        throw ParseError(s.value.span, "ideal declarations take a generator list (f, g, ...)");
      }
      bindings_[s.name] = *active_;
    } else if (peek().kind == Tok::Ident && peek(1).kind == Tok::Punct && peek(1).text == "(") {
      s.kind = StmtKind::Command;
      require_ring(s.span);
      s.value = expr();
      check(s.value);
    } else {
      fail({"'ring'", "'ideal'", "'module'", "'let'", "command"});
    }
    expect(";");
    return s;
  }

  void ring_decl(Stmt& s) {
    s.kind = StmtKind::Ring;
    s.name = identifier().text;
    expect("=");
    expect_word("GF");
    expect("(");
    if (peek().kind != Tok::Int) fail({"integer"});
    const Token& p = take();
    if (p.text.size() > 10 || std::stoull(p.text) > 0x7fffffffULL) {
      throw ParseError(p.span, p.text + " is too large for a field characteristic");
    }
    if (!is_prime(std::stoull(p.text))) throw ParseError(p.span, p.text + " is not prime");
    s.prime = static_cast<std::uint32_t>(std::stoul(p.text));
    expect(")");
    expect("[");
    for (;;) {
      const Token& v = identifier();
      if (std::find(s.variables.begin(), s.variables.end(), v.text) != s.variables.end()) {
        throw ParseError(v.span, "variable " + v.text + " declared twice");
      }
      s.variables.push_back(v.text);
      if (!at(",")) break;
      take();
    }
    if (s.variables.size() > kMaxVariables) {
      throw ParseError(s.span, "at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    expect("]");
    active_ = s.name;
    ring_vars_[s.name] = s.variables;
    bindings_[s.name] = s.name;
    if (at("/")) {
      take();
      expect("(");
      for (;;) {
        s.relations.push_back(poly());
        check(s.relations.back());
        if (!at(",")) break;
        take();
      }
      expect(")");
    }
  }

  void require_ring(const Span& span) const {
    if (!active_) throw ParseError(span, "no active ring");
  }

  // ---- expressions ----
  Expr expr() {
    Span span = peek().span;
    if (at_word("coker")) {
      take();
      Expr e;
      e.kind = ExprKind::Coker;
      e.span = span;
      if (!at("[")) fail({"matrix"});
      e.args.push_back(list());
      if (at_word("twists")) {
        take();
        expect("[");
        std::vector<int> tw;
        for (;;) {
          tw.push_back(integer());
          if (!at(",")) break;
          take();
        }
        expect("]");
        e.twists = tw;
      }
      return e;
    }
    if (at("[")) return list();
    if (at("(")) {
      Expr lit = ideal_literal();
      if (lit.args.size() == 1 && (at("^") || at("*") || at("+") || at("-"))) {
        // (f) followed by an operator is a polynomial, not an ideal.
        Expr atom = lit.args[0];
        atom.text = "(" + atom.text + ")";
        atom.span = span;
        return poly_from(atom);
      }
      return lit;
    }
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::Punct && peek(1).text == "(" &&
        kReserved.count(peek().text) == 0) {
      Expr e;
      e.kind = ExprKind::Call;
      e.span = span;
      e.text = take().text;
      take();
      if (!at(")")) {
        for (;;) {
          e.args.push_back(expr());
          if (!at(",")) break;
          take();
        }
      }
      close_list(")");
      return e;
    }
    if (peek().kind == Tok::Ident || peek().kind == Tok::Int || at("-")) return poly();
    fail({"expression"});
  }

  Expr list() {
    Expr e;
    e.kind = ExprKind::List;
    e.span = expect("[").span;
    if (!at("]")) {
      for (;;) {
        e.args.push_back(expr());
        if (!at(",")) break;
        take();
      }
    }
    close_list("]");
    return e;
  }

  Expr ideal_literal() {
    Expr e;
    e.kind = ExprKind::IdealLit;
    e.span = expect("(").span;
    for (;;) {
      e.args.push_back(poly());
      if (!at(",")) break;
      take();
    }
    close_list(")");
    return e;
  }

  // poly := ["-"] term (("+" | "-") term)*
  Expr poly() {
    Expr e;
    e.kind = ExprKind::Poly;
    e.span = peek().span;
    if (at("-")) {
      take();
      e.text = "-";
    }
    e.text += term(e);
    return poly_rest(e);
  }

  Expr poly_from(Expr atom) {
    // atom is a parenthesized polynomial that may be raised or multiplied
    std::string t = atom.text;
    if (at("^")) {
      take();
      t += "^" + exponent();
    }
    while (at("*")) {
      take();
      t += "*" + factor(atom);
    }
    atom.text = t;
    return poly_rest(atom);
  }

  Expr poly_rest(Expr e) {
    while (at("+") || at("-")) {
      e.text += take().text;
      e.text += term(e);
    }
    return e;
  }

  std::string term(Expr& e) {
    std::string t = factor(e);
    while (at("*")) {
      take();
      t += "*" + factor(e);
    }
    return t;
  }

  std::string factor(Expr& e) {
    std::string t;
    if (peek().kind == Tok::Ident) {
      const Token& v = take();
      if (kReserved.count(v.text) != 0) throw ParseError(v.span, "unexpected '" + v.text + "'");
      if (std::find(e.identifiers.begin(), e.identifiers.end(), v.text) == e.identifiers.end()) {
        e.identifiers.push_back(v.text);
      }
      spans_[v.text] = v.span;
      t = v.text;
    } else if (peek().kind == Tok::Int) {
      t = take().text;
    } else if (at("(")) {
      take();
      Expr inner = poly();
      for (const auto& id : inner.identifiers) {
        if (std::find(e.identifiers.begin(), e.identifiers.end(), id) == e.identifiers.end()) {
          e.identifiers.push_back(id);
        }
      }
      expect(")");
      t = "(" + inner.text + ")";
    } else {
      fail({"variable", "integer", "'('"});
    }
    if (at("^")) {
      take();
      t += "^" + exponent();
    }
    return t;
  }

  std::string exponent() {
    if (peek().kind != Tok::Int) fail({"integer exponent"});
    return take().text;
  }

  // ---- scoping ----
  void check(const Expr& e) const {
    switch (e.kind) {
      case ExprKind::Poly: check_poly(e); break;
      case ExprKind::Call:
        if (kFunctions.count(e.text) == 0) throw ParseError(e.span, "unknown command '" + e.text + "'");
        for (const auto& a : e.args) check(a);
        break;
      default:
        for (const auto& a : e.args) check(a);
        break;
    }
  }

  void check_poly(const Expr& e) const {
    const auto& vars = ring_vars_.at(*active_);
    auto is_var = [&](const std::string& v) { return std::find(vars.begin(), vars.end(), v) != vars.end(); };
    if (e.is_identifier()) {
      const std::string& id = e.text;
      if (is_var(id)) return;
      if (auto it = bindings_.find(id); it != bindings_.end()) {
        if (ring_vars_.count(id) != 0 && id != *active_) {
          throw ParseError(e.span, "ring " + id + " is not the active ring " + *active_);
        }
        if (it->second != *active_) {
          throw ParseError(e.span, id + " belongs to ring " + it->second + ", not the active ring " + *active_);
        }
        return;
      }
      if (kSymbols.count(id) != 0) return;
      throw ParseError(e.span, "undeclared identifier '" + id + "'");
    }
    for (const auto& id : e.identifiers) {
      if (!is_var(id)) {
        auto it = spans_.find(id);
        throw ParseError(it != spans_.end() ? it->second : e.span,
                         "'" + id + "' is not a variable of ring " + *active_);
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<std::string> active_;
  std::map<std::string, std::vector<std::string>> ring_vars_;
  /// name -> ring it was declared under
  std::map<std::string, std::string> bindings_;
  std::map<std::string, Span> spans_;
};

}  // namespace

SessionAST parse_session(std::string_view text) { return Parser(text).session(); }

}  // namespace syzlab::dsl
