#include "symfrac/expr.hpp"

#include <cctype>

#include "symfrac/error.hpp"

namespace symfrac {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingSpec& ring, std::string_view symbols)
      : text_(text), ring_(ring), symbols_(symbols) {}

  std::vector<ProductTerm> run() {
    std::vector<ProductTerm> out;
    skip_space();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      ProductTerm t = term();
      if (negative) t.coeff = -t.coeff;
      out.push_back(std::move(t));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return out;
  }

 private:
  std::string_view text_;
  RingSpec ring_;
  std::string_view symbols_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError, what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  unsigned number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    unsigned long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > 1000000) fail("number too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  ProductTerm term() {
    skip_space();
    ProductTerm t{Coeff(ring_, 1), {}};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
      try {
        t.coeff = Coeff::parse(ring_, text_.substr(start, pos_ - start));
      } catch (const Error&) {
        pos_ = start;
        fail("malformed coefficient");
      }
      skip_space();
      if (peek() != '*') return t;
      ++pos_;
      skip_space();
    }
    while (need_factor) {
      factors(t.factors);
      skip_space();
      need_factor = peek() == '*';
      if (need_factor) {
        ++pos_;
        skip_space();
      }
    }
    return t;
  }

  void factors(std::vector<Factor>& out) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(peek())));
    if (at_end() || symbols_.find(c) == std::string_view::npos)
      fail(std::string("expected one of '") + std::string(symbols_) + "'");
    ++pos_;
    std::vector<unsigned> indices;
    if (peek() == '_') {
      ++pos_;
      if (peek() == '{') {
        ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) indices.push_back(static_cast<unsigned>(text_[pos_++] - '0'));
        if (indices.empty()) fail("empty subscript");
        if (peek() != '}') fail("expected '}'");
        ++pos_;
      } else {
        indices.push_back(number());
      }
    } else {
      indices.push_back(number());
    }
    unsigned exponent = 1;
    if (peek() == '^') {
      ++pos_;
      if (peek() == '{') {
        ++pos_;
        exponent = number();
        if (peek() != '}') fail("expected '}'");
        ++pos_;
      } else {
        exponent = number();
      }
    }
    for (unsigned idx : indices) out.push_back({c, idx, exponent});
  }
};

}  // namespace

std::vector<ProductTerm> parse_products(std::string_view text, const RingSpec& ring, std::string_view symbols) {
  return Parser(text, ring, symbols).run();
}

}  // namespace symfrac
