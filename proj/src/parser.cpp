#include "supercauchy/parser.hpp"

#include <cctype>
#include <stdexcept>

#include "supercauchy/fermionic.hpp"
#include "supercauchy/operators.hpp"

namespace supercauchy {

namespace {

class Parser {
 public:
  Parser(const std::string& text, Signature sig) : text_(text), sig_(sig) {}

  SuperElement run() {
    SuperElement e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  const std::string& text_;
  Signature sig_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  SuperElement expr() {
    SuperElement acc = eat('-') ? -term() : term();
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  SuperElement term() {
    SuperElement acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  SuperElement factor() {
    SuperElement b = base();
    if (!eat('^')) return b;
    const bool neg = eat('-');
    const long e = integer("exponent");
    if (!neg) return b.pow(static_cast<unsigned>(e));
    // negative exponents are reserved for scalar bases (rationals, pi)
    if (b.terms().size() != 1) fail("negative exponent needs a scalar base");
    const auto& [w, c] = *b.terms().begin();
    if (w != unit_monomial(sig_)) fail("negative exponent needs a scalar base");
    Scalar inv = c.inverse(), out(1);
    for (long k = 0; k < e; ++k) out = out * inv;
    return SuperElement::constant(sig_, out);
  }

  long integer(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what);
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000000L) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  SuperElement base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected an expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long num = integer("integer");
      if (eat('/')) {
        const long den = integer("denominator");
        if (den == 0) fail("zero denominator");
        return SuperElement::constant(sig_, Scalar(num, den));
      }
      return SuperElement::constant(sig_, Scalar(num));
    }
    if (c == '(') {
      ++pos_;
      SuperElement e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return name();
    fail("expected an expression");
  }

  SuperElement name() {
    const std::size_t start = pos_;
    std::string word;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      word += text_[pos_++];

    if (word == "pi") return SuperElement::constant(sig_, Scalar(1, 1, 1));
    if (word == "X") return SuperElement::vector_variable(sig_, VectorPart::full);
    if (word == "Xb") return SuperElement::vector_variable(sig_, VectorPart::bosonic);
    if (word == "Xf") return SuperElement::vector_variable(sig_, VectorPart::fermionic);

    if (word == "Dl" || word == "Dr" || word == "Lap" || word == "Eul" || word == "Ber") {
      if (!eat('(')) fail("expected '(' after " + word);
      SuperElement arg = expr();
      if (!eat(')')) fail("expected ')'");
      if (word == "Dl") return dirac(arg, Side::left);
      if (word == "Dr") return dirac(arg, Side::right);
      if (word == "Lap") return laplace(arg);
      if (word == "Eul") return euler(arg);
      return berezin(arg);
    }

    if (word.size() == 1 && std::string("xqyef").find(word[0]) != std::string::npos) {
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        pos_ = start;
        fail("variable needs an index");
      }
      const long idx = integer("variable index");
      try {
        return SuperElement::variable(sig_, word[0], static_cast<int>(idx));
      } catch (const std::invalid_argument& e) {
        pos_ = start;
        fail(e.what());
      }
    }

    pos_ = start;
    fail("unknown name '" + word + "'");
  }
};

}  // namespace

SuperElement parse_element(const std::string& text, const Signature& sig) {
  Parser p(text, sig);
  return p.run();
}

}  // namespace supercauchy
