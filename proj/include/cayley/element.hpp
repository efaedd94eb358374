#pragma once

#include <ostream>
#include <span>
#include <vector>

#include "cayley/algebra.hpp"
#include "cayley/scalar.hpp"

namespace cayley {

/// Element of one of the six algebras, stored as exact coordinates in the
/// positional basis 1, e1, ..., e_{dim-1}.
class Element {
 public:
  /// Throws AlgebraMismatch if the length differs from the algebra dimension
  /// or a coefficient is non-real in a real algebra.
  Element(AlgebraId algebra, std::vector<Scalar> coeffs);

  static Element zero(AlgebraId algebra);
  static Element one(AlgebraId algebra);
  /// The basis unit e_index (index 0 is the identity).
  static Element basis(AlgebraId algebra, std::size_t index);
  /// Convenience for integer coordinates.
  static Element from_ints(AlgebraId algebra, std::span<const long> coeffs);

  AlgebraId algebra() const { return algebra_; }
  std::size_t dim() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  const Scalar& real_part() const { return coeffs_[0]; }

  bool is_zero() const;
  bool is_pure() const { return coeffs_[0].is_zero(); }

  Element operator-() const;
  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Scalar& s);

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Element lhs, const Scalar& s) { return lhs *= s; }
  friend Element operator*(const Scalar& s, Element rhs) { return rhs *= s; }
  /// Algebra product; see mul().
  friend Element operator*(const Element& a, const Element& b);

  friend bool operator==(const Element& a, const Element& b) {
    return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
  }

 private:
  AlgebraId algebra_;
  std::vector<Scalar> coeffs_;
};

/// Bilinear extension of the structure table. Throws AlgebraMismatch.
Element mul(const Element& a, const Element& b);
/// Keeps the real part, negates every imaginary coordinate.
Element conjugate(const Element& a);
/// (a, b) = (a conj(b) + b conj(a)) / 2. Throws AlgebraMismatch, and
/// ConsistencyError if the defining expression has an imaginary part.
Scalar inner(const Element& a, const Element& b);
/// N(a) = (a, a) = a conj(a).
Scalar norm(const Element& a);
/// conj(a) / N(a). Throws NotInvertible when N(a) = 0.
Element inverse(const Element& a);
/// (p a) p^-1, cross-checked against p (a p^-1). Throws NotInvertible.
Element sandwich(const Element& p, const Element& a);

/// Membership in K_0 (pure), K_0* (pure and nonzero), K^x (invertible),
/// K_0^x (pure and invertible).
struct Classification {
  bool pure = false;
  bool nonzero = false;
  bool invertible = false;

  bool in_pure_nonzero() const { return pure && nonzero; }
  bool in_pure_invertible() const { return pure && invertible; }
};
Classification classify(const Element& a);

/// Embeds a quaternion element into its Cayley double (H -> O, Hs -> Os,
/// Hc -> Oc). Identity on Cayley elements.
Element embed_in_cayley(const Element& a);

std::ostream& operator<<(std::ostream& os, const Element& a);

}  // namespace cayley
