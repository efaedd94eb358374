#include "cayley/element.hpp"

#include <algorithm>

#include "cayley/errors.hpp"
#include "cayley/expr.hpp"

namespace cayley {

namespace {

void require_same_algebra(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra()))
    throw AlgebraMismatch("operands belong to " + std::string(a.algebra().name()) + " and " +
                          std::string(b.algebra().name()));
}

}  // namespace

Element::Element(AlgebraId algebra, std::vector<Scalar> coeffs)
    : algebra_(algebra), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra.dim())
    throw AlgebraMismatch("expected " + std::to_string(algebra.dim()) + " coefficients for " +
                          std::string(algebra.name()) + ", got " + std::to_string(coeffs_.size()));
  for (auto& c : coeffs_) {
    if (algebra.field() == Field::Real && !c.is_real_valued())
      throw AlgebraMismatch("complex coefficient in real algebra " + std::string(algebra.name()));
    c = c.in_field(algebra.field());
  }
}

Element Element::zero(AlgebraId algebra) {
  return Element(algebra, std::vector<Scalar>(algebra.dim(), Scalar::zero(algebra.field())));
}

Element Element::one(AlgebraId algebra) { return basis(algebra, 0); }

Element Element::basis(AlgebraId algebra, std::size_t index) {
  std::vector<Scalar> c(algebra.dim(), Scalar::zero(algebra.field()));
  c.at(index) = Scalar(1).in_field(algebra.field());
  return Element(algebra, std::move(c));
}

Element Element::from_ints(AlgebraId algebra, std::span<const long> coeffs) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return Element(algebra, std::move(c));
}

bool Element::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Element& Element::operator+=(const Element& rhs) {
  require_same_algebra(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  require_same_algebra(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (algebra_.field() == Field::Real && !s.is_real_valued())
    throw AlgebraMismatch("complex scalar applied to real algebra " + std::string(algebra_.name()));
  const Scalar factor = s.in_field(algebra_.field());
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

Element operator*(const Element& a, const Element& b) { return mul(a, b); }

Element mul(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  const StructureTable& t = table_for(a.algebra());
  std::vector<Scalar> out(a.dim(), Scalar::zero(a.algebra().field()));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (b[j].is_zero()) continue;
      const BasisProduct& e = t(i, j);
      if (e.sign > 0)
        out[e.index] += a[i] * b[j];
      else
        out[e.index] -= a[i] * b[j];
    }
  }
  return Element(a.algebra(), std::move(out));
}

Element conjugate(const Element& a) {
  std::vector<Scalar> c = a.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
  return Element(a.algebra(), std::move(c));
}

Scalar inner(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  Element twice = mul(a, conjugate(b)) + mul(b, conjugate(a));
  for (std::size_t i = 1; i < twice.dim(); ++i)
    if (!twice[i].is_zero())
      throw ConsistencyError("a conj(b) + b conj(a) has a nonzero imaginary part");
  return twice.real_part() / Scalar(2);
}

Scalar norm(const Element& a) {
  Scalar n = inner(a, a);
  if (a.is_pure() && !(mul(a, a) == Element::one(a.algebra()) * -n))
    throw ConsistencyError("pure element does not satisfy a^2 = -N(a)");
  return n;
}

Element inverse(const Element& a) {
  const Scalar n = norm(a);
  if (n.is_zero()) throw NotInvertible("element has zero norm");
  return conjugate(a) * (Scalar(1) / n);
}

Element sandwich(const Element& p, const Element& a) {
  require_same_algebra(p, a);
  const Element p_inv = inverse(p);
  Element left = mul(mul(p, a), p_inv);
  if (!(left == mul(p, mul(a, p_inv))))
    throw ConsistencyError("(p a) p^-1 differs from p (a p^-1)");
  return left;
}

Classification classify(const Element& a) {
  return {a.is_pure(), !a.is_zero(), !norm(a).is_zero()};
}

Element embed_in_cayley(const Element& a) {
  if (a.algebra().is_cayley()) return a;
  const AlgebraId target = a.algebra().cayley_extension();
  std::vector<Scalar> c(target.dim(), Scalar::zero(target.field()));
  std::copy(a.coeffs().begin(), a.coeffs().end(), c.begin());
  return Element(target, std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Element& a) { return os << format_element(a); }

}  // namespace cayley
