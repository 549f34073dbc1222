#include <cctype>

#include "syzlab/errors.hpp"
#include "syzlab/polynomial.hpp"

namespace syzlab {

namespace {

class PolyParser {
 public:
  PolyParser(const PolyRing& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    Polynomial f = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw UsageError("polynomial '" + std::string(text_) + "', column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer literal too large");
    }
    return v;
  }

  Polynomial expr() {
    Polynomial f;
    if (accept('-')) {
      f = ring_.neg(term());
    } else {
      accept('+');
      f = term();
    }
    for (;;) {
      if (accept('+')) {
        f = ring_.add(f, term());
      } else if (accept('-')) {
        f = ring_.sub(f, term());
      } else {
        return f;
      }
    }
  }

  Polynomial term() {
    Polynomial f = factor();
    while (accept('*')) f = ring_.mul(f, factor());
    return f;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      std::int64_t e = integer();
      if (e > 255) fail("exponent too large");
      base = ring_.pow(base, static_cast<int>(e));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ring_.constant(integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_.variable_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return ring_.variable(static_cast<std::size_t>(idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const PolyRing& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial PolyRing::parse(std::string_view text) const { return PolyParser(*this, text).run(); }

}  // namespace syzlab
