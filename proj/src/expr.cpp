#include "occ/expr.hpp"

#include <cctype>

#include "occ/error.hpp"

namespace occ {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ContextPtr &ctx, const FormalGroupLaw *law)
      : text_(text), ctx_(ctx), law_(law) {}

  Series parse() {
    Series s = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string &what) const {
    throw Error(Errc::parse_error, "at position " + std::to_string(pos_) + ": " + what, pos_);
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

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Series expression() {
    Series acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Series term() {
    Series acc = unary();
    for (;;) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Series d = unary();
        if (d.size() > 1 || (d.size() == 1 && d.constant_term() == 0) || d.is_zero()) {
          pos_ = at;
          fail("division only by nonzero constants");
        }
        acc = acc.scaled(1 / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  Series unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Series power() {
    Series base = atom();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 255) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Series atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (accept('(')) {
      Series s = expression();
      expect(')');
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Series::constant(ctx_, Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      skip();
      if (pos_ < text_.size() && text_[pos_] == '(') return call(name, start);
      if (!ctx_->contains(name)) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Series::variable(ctx_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Series call(const std::string &name, std::size_t start) {
    expect('(');
    std::vector<Series> args;
    if (!accept(')')) {
      do args.push_back(expression());
      while (accept(','));
      expect(')');
    }
    auto need = [&](std::size_t n) {
      if (!law_) {
        pos_ = start;
        fail("function '" + name + "' needs a formal group law");
      }
      if (args.size() != n) {
        pos_ = start;
        fail("function '" + name + "' takes " + std::to_string(n) + " argument(s)");
      }
    };
    if (name == "F") {
      need(2);
      return law_->apply(args[0], args[1]);
    }
    if (name == "inv") {
      need(1);
      return law_->apply_inverse(args[0]);
    }
    pos_ = start;
    fail("unknown function '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  ContextPtr ctx_;
  const FormalGroupLaw *law_;
};

}  // namespace

Series parse_expression(std::string_view text, const ContextPtr &context,
                        const FormalGroupLaw *law) {
  return Parser(text, context, law).parse();
}

}  // namespace occ
