#include "cayley/scalar.hpp"

#include "cayley/errors.hpp"

namespace cayley {

Scalar::Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)), complex_(true) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::zero(Field field) {
  return field == Field::Complex ? complex(0, 0) : Scalar();
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  out.im_ = -im_;
  return out;
}

Scalar Scalar::in_field(Field field) const {
  if (field == Field::Complex) return complex(re_, im_);
  if (!is_real_valued()) throw Error("cannot narrow a non-real scalar to the real field");
  return real(re_);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.re_ = -re_;
  out.im_ = -im_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  complex_ = complex_ || rhs.complex_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  complex_ = complex_ || rhs.complex_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
  } else {
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
  }
  complex_ = complex_ || rhs.complex_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  if (sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
  } else {
    // (a+bi)/(c+di) = (a+bi)(c-di)/(c^2+d^2)
    Rational den = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
    Rational re = (re_ * rhs.re_ + im_ * rhs.im_) / den;
    Rational im = (im_ * rhs.re_ - re_ * rhs.im_) / den;
    re_ = std::move(re);
    im_ = std::move(im);
  }
  complex_ = complex_ || rhs.complex_;
  return *this;
}

std::string to_string(const Scalar& s) {
  if (s.is_real_valued()) return s.re().get_str();
  std::string im = s.im().get_str();
  if (im == "1") im.clear();
  if (im == "-1") im = "-";
  if (sgn(s.re()) == 0) return im + "i";
  std::string out = s.re().get_str();
  if (sgn(s.im()) > 0) out += '+';
  return out + im + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

Rational parse_rational(const std::string& text) {
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw ParseError("malformed rational '" + text + "'", 0);
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'", slash);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace cayley
