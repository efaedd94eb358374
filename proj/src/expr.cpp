#include "cayley/expr.hpp"

#include <cctype>
#include <vector>

#include "cayley/element.hpp"
#include "cayley/errors.hpp"

namespace cayley {

namespace {

class Parser {
 public:
  Parser(std::string_view text, AlgebraId algebra) : algebra_(algebra) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      origin_.push_back(i);
    }
    end_position_ = text.size();
  }

  Element parse() {
    std::vector<Scalar> coeffs(algebra_.dim(), Scalar::zero(algebra_.field()));
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      auto [coeff, index] = term();
      coeffs[index] += negative ? -coeff : coeff;
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return Element(algebra_, std::move(coeffs));
  }

 private:
  bool at_end() const { return pos_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[pos_]; }
  bool peek_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::size_t position() const { return at_end() ? end_position_ : origin_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, position()); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::pair<Scalar, std::size_t> term() {
    if (peek() == 'e') return {Scalar(1), basis()};
    Scalar coeff = scalar();
    std::size_t index = 0;
    if (peek() == 'e') index = basis();
    return {coeff, index};
  }

  Scalar scalar() {
    if (peek() == '(') {
      ++pos_;
      bool negative_re = false;
      if (peek() == '-') {
        negative_re = true;
        ++pos_;
      }
      Rational re = rational();
      if (negative_re) re = -re;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-' inside complex literal");
      const bool negative_im = peek() == '-';
      ++pos_;
      Rational im = rational();
      imaginary_unit();
      expect(')');
      return Scalar::complex(re, negative_im ? Rational(-im) : im);
    }
    if (peek() == 'i') {
      imaginary_unit();
      return Scalar::imaginary_unit();
    }
    Rational value = rational();
    if (peek() == 'i') {
      imaginary_unit();
      return Scalar::complex(0, value);
    }
    return Scalar(value);
  }

  void imaginary_unit() {
    if (peek() != 'i') fail("expected 'i'");
    if (algebra_.field() == Field::Real)
      throw ImaginaryScalarInRealAlgebra(
          "imaginary scalar in real algebra " + std::string(algebra_.name()), position());
    ++pos_;
  }

  Rational rational() {
    mpz_class num = integer();
    if (peek() != '/') return Rational(num);
    ++pos_;
    const std::size_t at = position();
    mpz_class den = integer();
    if (den == 0) throw ParseError("zero denominator", at);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  mpz_class integer() {
    if (!peek_digit()) fail("expected a number");
    std::string digits;
    while (peek_digit()) digits += chars_[pos_++];
    return mpz_class(digits, 10);
  }

  std::size_t basis() {
    const std::size_t at = position();
    expect('e');
    if (!peek_digit()) fail("expected a basis index after 'e'");
    const std::size_t index = static_cast<std::size_t>(chars_[pos_++] - '0');
    if (index >= algebra_.dim())
      throw IndexOutOfRange("basis index " + std::to_string(index) + " out of range for " +
                                std::string(algebra_.name()),
                            at);
    bool primed = false;
    if (peek() == '\'') {
      primed = true;
      ++pos_;
    }
    if (primed != algebra_.is_primed(index))
      throw PrimeMismatch(std::string(primed ? "unexpected" : "missing") + " prime on e" +
                              std::to_string(index) + " in " + std::string(algebra_.name()),
                          at);
    return index;
  }

  AlgebraId algebra_;
  std::vector<char> chars_;
  std::vector<std::size_t> origin_;
  std::size_t end_position_ = 0;
  std::size_t pos_ = 0;
};

struct Term {
  bool negative = false;
  std::string body;
};

Term coefficient_text(const Scalar& c, bool elide_unit) {
  const auto magnitude = [](const Rational& q, bool elide) {
    Rational m = abs(q);
    return elide && m == 1 ? std::string() : m.get_str();
  };
  if (c.is_real_valued()) return {sgn(c.re()) < 0, magnitude(c.re(), elide_unit)};
  if (sgn(c.re()) == 0) return {sgn(c.im()) < 0, magnitude(c.im(), true) + "i"};
  std::string body = "(" + c.re().get_str() + (sgn(c.im()) < 0 ? "-" : "+") +
                     magnitude(c.im(), false) + "i)";
  return {false, body};
}

}  // namespace

Element parse_element(std::string_view text, AlgebraId algebra) {
  return Parser(text, algebra).parse();
}

std::string format_element(const Element& a) {
  std::string out;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a[k].is_zero()) continue;
    auto [negative, body] = coefficient_text(a[k], k > 0);
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    out += body;
    if (k > 0) out += a.algebra().basis_label(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cayley
