#include "cayley/sampling.hpp"

#include <array>
#include <vector>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

Rational random_rational(SampleSource& src) {
  const long num = src.integer(-4, 4);
  const long den = src.chance(1, 4) ? src.integer(1, 3) : 1;
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Picks `count` distinct entries of `pool` in random order.
std::vector<std::size_t> pick_distinct(SampleSource& src, std::vector<std::size_t> pool, std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < count; ++n) {
    const auto at = static_cast<std::size_t>(src.integer(0, static_cast<long>(pool.size()) - 1));
    out.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<long>(at));
  }
  return out;
}

// Null pure element e_i + s e_j (split: i primed, j unprimed) or e_i + s i e_j
// (complex), with s = +-1.
Element null_unit_pair(AlgebraId algebra, std::size_t i, std::size_t j, bool flip) {
  Scalar s = flip ? Scalar(-1) : Scalar(1);
  if (algebra.field() == Field::Complex) s *= Scalar::imaginary_unit();
  return Element::basis(algebra, i) + Element::basis(algebra, j) * s;
}

std::vector<std::size_t> primed_indices(AlgebraId algebra) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < algebra.dim(); ++k)
    if (algebra.is_primed(k)) out.push_back(k);
  return out;
}

std::vector<std::size_t> unprimed_indices(AlgebraId algebra) {
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k < algebra.dim(); ++k)
    if (!algebra.is_primed(k)) out.push_back(k);
  return out;
}

}  // namespace

Scalar random_scalar(SampleSource& src, Field field) {
  if (field == Field::Real) return Scalar(random_rational(src));
  Rational re = random_rational(src);
  Rational im = random_rational(src);
  return Scalar::complex(re, im);
}

Scalar random_nonzero_scalar(SampleSource& src, Field field) {
  while (true) {
    Scalar s = random_scalar(src, field);
    if (!s.is_zero()) return s;
  }
}

Element random_element(SampleSource& src, AlgebraId algebra) {
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < algebra.dim(); ++k)
    c.push_back(src.chance(1, 5) ? Scalar::zero(algebra.field()) : random_scalar(src, algebra.field()));
  return Element(algebra, std::move(c));
}

Element random_pure_nonzero(SampleSource& src, AlgebraId algebra) {
  while (true) {
    std::vector<Scalar> c = random_element(src, algebra).coeffs();
    c[0] = Scalar::zero(algebra.field());
    Element a(algebra, std::move(c));
    if (!a.is_zero()) return a;
  }
}

Element random_invertible(SampleSource& src, AlgebraId algebra) {
  while (true) {
    Element r = random_element(src, algebra);
    if (!norm(r).is_zero()) return r;
  }
}

Element random_sparse_pure(SampleSource& src, AlgebraId algebra) {
  while (true) {
    std::vector<Scalar> c(algebra.dim(), Scalar::zero(algebra.field()));
    for (std::size_t k = 1; k < algebra.dim(); ++k) {
      if (src.chance(1, 2)) continue;
      Scalar v = src.chance(1, 2) ? Scalar(1) : Scalar(-1);
      if (algebra.field() == Field::Complex && src.chance(1, 2)) v *= Scalar::imaginary_unit();
      c[k] = v.in_field(algebra.field());
    }
    Element a(algebra, std::move(c));
    if (!a.is_zero()) return a;
  }
}

std::pair<Element, Element> random_null_pair(SampleSource& src, AlgebraId algebra) {
  if (algebra.is_division()) throw PreconditionViolation("division algebras have no null elements");
  const Field field = algebra.field();

  std::optional<Element> a, b;
  const bool disjoint = algebra.is_cayley() && src.chance(1, 2);
  if (algebra.is_split()) {
    const auto odd = pick_distinct(src, primed_indices(algebra), disjoint ? 2 : 1);
    const auto even = pick_distinct(src, unprimed_indices(algebra), disjoint ? 2 : 1);
    a = null_unit_pair(algebra, odd[0], even[0], src.chance(1, 2));
    if (disjoint) b = null_unit_pair(algebra, odd[1], even[1], src.chance(1, 2));
  } else {
    std::vector<std::size_t> all;
    for (std::size_t k = 1; k < algebra.dim(); ++k) all.push_back(k);
    const auto idx = pick_distinct(src, all, disjoint ? 4 : 2);
    a = null_unit_pair(algebra, idx[0], idx[1], src.chance(1, 2));
    if (disjoint) b = null_unit_pair(algebra, idx[2], idx[3], src.chance(1, 2));
  }
  if (!b) b = *a;
  *a *= random_nonzero_scalar(src, field);
  *b *= random_nonzero_scalar(src, field);

  if (src.chance(1, 2)) {
    const Element r = random_invertible(src, algebra);
    a = sandwich(r, *a);
    b = sandwich(r, *b);
  }
  return {*a, *b};
}

std::pair<Element, Element> random_conjugate_pair(SampleSource& src, AlgebraId algebra) {
  Element a = random_pure_nonzero(src, algebra);
  const Element r = random_invertible(src, algebra);
  Element b = sandwich(r, a);
  return {std::move(a), std::move(b)};
}

}  // namespace cayley
