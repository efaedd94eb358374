#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

namespace cayley {

using Rational = mpq_class;

enum class Field { Real, Complex };

/// Exact element of Q or Q(i).
///
/// A real scalar is a reduced rational; a complex scalar is a pair of reduced
/// rationals re + im*i. The field tag only records provenance: equality and
/// arithmetic act on the value, and a binary operation is complex if either
/// operand is.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  Scalar(Rational re, Rational im);

  static Scalar real(Rational re) { return Scalar(std::move(re)); }
  static Scalar complex(Rational re, Rational im) { return Scalar(std::move(re), std::move(im)); }
  static Scalar imaginary_unit() { return complex(0, 1); }
  /// Zero in the given field.
  static Scalar zero(Field field);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  Field field() const { return complex_ ? Field::Complex : Field::Real; }
  bool is_complex() const { return complex_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real_valued() const { return sgn(im_) == 0; }

  /// Complex conjugation; identity on reals.
  Scalar conj() const;
  /// Same value, re-tagged into `field`. Requires a zero imaginary part when
  /// narrowing to Real.
  Scalar in_field(Field field) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws DivisionByZero.
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
  bool complex_ = false;
};

/// Human-readable form: "3", "-1/2", "5i", "2-3i".
std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "num" or "num/den" (den > 0 after sign normalisation). Throws
/// ParseError on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace cayley
