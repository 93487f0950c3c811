#include "circlepoly/cli/text_format.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace circlepoly::cli {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    skip_ws();
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool consume_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  // Unsigned decimal literal (digits, optional fraction, optional exponent).
  bool try_unsigned(double& out) {
    if (done() || !(std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) return false;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{}) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return true;
  }

  Complex complex_literal() {
    skip_ws();
    const std::size_t start = pos_;
    double sign = 1.0;
    if (consume('-')) sign = -1.0;
    else consume('+');

    double value = 0.0;
    if (!try_unsigned(value)) {
      if (consume('i')) return {0.0, sign};
      pos_ = start;
      fail("expected a number");
    }
    if (consume('i')) return {0.0, sign * value};
    const double re = sign * value;

    // Optional imaginary part; spaces around the sign are allowed.
    const std::size_t before_imag = pos_;
    skip_ws();
    double imag_sign = 0.0;
    if (consume('+')) imag_sign = 1.0;
    else if (consume('-')) imag_sign = -1.0;
    if (imag_sign == 0.0) {
      pos_ = before_imag;
      return {re, 0.0};
    }
    skip_ws();
    double im = 1.0;
    try_unsigned(im);
    if (!consume('i')) fail("expected 'i' after imaginary part");
    return {re, imag_sign * im};
  }

  std::vector<Complex> list() {
    expect('[');
    std::vector<Complex> out;
    out.push_back(complex_literal());
    skip_ws();
    while (consume(',')) {
      out.push_back(complex_literal());
      skip_ws();
    }
    if (!consume(']')) fail("expected ',' or ']'");
    return out;
  }

  std::size_t unsigned_integer() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void expect_end() {
    skip_ws();
    if (!done()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Complex parse_complex(std::string_view text) {
  Cursor cur(text);
  const Complex z = cur.complex_literal();
  cur.expect_end();
  return z;
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  Cursor cur(text);
  auto out = cur.list();
  cur.expect_end();
  return out;
}

FunctionSpec parse_spec(std::string_view text) {
  Cursor cur(text);
  cur.skip_ws();
  if (cur.consume_word("zero")) {
    cur.expect_end();
    return FunctionSpec::zero();
  }
  if (cur.consume_word("const")) {
    const Complex c = cur.complex_literal();
    cur.expect_end();
    return FunctionSpec::constant(c);
  }
  if (cur.consume_word("ratio")) {
    auto u = cur.list();
    cur.expect('/');
    auto v = cur.list();
    cur.expect_end();
    return FunctionSpec::ratio(Polynomial(std::move(u)), Polynomial(std::move(v)));
  }
  if (cur.consume_word("coeffs")) {
    auto c = cur.list();
    cur.expect_end();
    return FunctionSpec::explicit_coeffs(TruncatedSeries(std::move(c)));
  }
  cur.fail("expected one of 'zero', 'const', 'ratio', 'coeffs'");
}

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ec == std::errc{} ? ptr : buf);
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  const double im = z.imag();
  if (std::signbit(im)) {
    out += '-';
    out += format_double(-im);
  } else {
    out += '+';
    out += format_double(im);
  }
  out += 'i';
  return out;
}

std::vector<std::size_t> parse_degree_list(std::string_view text) {
  Cursor cur(text);
  std::vector<std::size_t> out;
  const std::size_t first = cur.unsigned_integer();
  cur.skip_ws();
  if (cur.consume('.')) {
    if (!cur.consume('.')) cur.fail("expected '..'");
    const std::size_t last = cur.unsigned_integer();
    std::size_t step = 1;
    cur.skip_ws();
    if (cur.consume_word("step")) step = cur.unsigned_integer();
    cur.expect_end();
    if (step == 0) throw SyntaxError(0, "range step must be positive");
    if (last < first) throw SyntaxError(0, "range end is below range start");
    for (std::size_t N = first; N <= last; N += step) out.push_back(N);
    return out;
  }
  out.push_back(first);
  while (cur.consume(',')) {
    out.push_back(cur.unsigned_integer());
    cur.skip_ws();
  }
  cur.expect_end();
  return out;
}

}  // namespace circlepoly::cli
