#include <doctest.h>

#include "cayley/element.hpp"
#include "cayley/errors.hpp"
#include "cayley/expr.hpp"
#include "cayley/sampling.hpp"

using namespace cayley;

namespace {

Element el(const char* text, AlgebraKind kind) { return parse_element(text, kind); }

}  // namespace

TEST_CASE("products of basis units") {
  using K = AlgebraKind;
  CHECK(el("e3", K::O) * el("e4", K::O) == el("e7", K::O));
  CHECK(el("e2", K::O) * el("e4", K::O) == el("-e6", K::O));
  CHECK(el("e1", K::H) * el("e2", K::H) == el("e3", K::H));
  CHECK(el("e3'", K::Hs) * el("e1'", K::Hs) == el("-e2", K::Hs));
  CHECK(el("e5'", K::Os) * el("e5'", K::Os) == el("1", K::Os));
}

TEST_CASE("octonions are not associative") {
  const AlgebraId o = AlgebraKind::O;
  const Element e1 = Element::basis(o, 1), e2 = Element::basis(o, 2), e4 = Element::basis(o, 4);
  CHECK((e1 * e2) * e4 == el("e7", AlgebraKind::O));
  CHECK(e1 * (e2 * e4) == el("-e7", AlgebraKind::O));
}

TEST_CASE("conjugation") {
  CHECK(conjugate(el("1+e1", AlgebraKind::H)) == el("1-e1", AlgebraKind::H));
  CHECK(conjugate(el("e4+e7", AlgebraKind::O)) == el("-e4-e7", AlgebraKind::O));
  // Complex coefficients are not conjugated.
  CHECK(conjugate(el("(1+2i)+ie3", AlgebraKind::Hc)) == el("(1+2i)-ie3", AlgebraKind::Hc));
}

TEST_CASE("inner product and norm") {
  CHECK(inner(el("e1", AlgebraKind::H), el("e1", AlgebraKind::H)) == Scalar(1));
  CHECK(inner(el("e1'", AlgebraKind::Hs), el("e1'", AlgebraKind::Hs)) == Scalar(-1));
  CHECK(inner(el("e1", AlgebraKind::H), el("e2", AlgebraKind::H)).is_zero());
  CHECK(norm(el("e1+e2+e3", AlgebraKind::H)) == Scalar(3));
  CHECK(norm(el("4e1'+5e2+3e3'-5e4+4e5'+3e7'", AlgebraKind::Os)).is_zero());
  CHECK(norm(el("3e2+4e6+5ie7", AlgebraKind::Oc)).is_zero());
  // Bilinear, not sesquilinear: N(i e1) = -1 in Oc.
  CHECK(norm(el("ie1", AlgebraKind::Oc)) == Scalar(-1));
}

TEST_CASE("inverse") {
  CHECK(inverse(el("e2", AlgebraKind::H)) == el("-e2", AlgebraKind::H));
  CHECK(inverse(el("e1'", AlgebraKind::Hs)) == el("e1'", AlgebraKind::Hs));
  CHECK_THROWS_AS(inverse(el("e1'+e2", AlgebraKind::Os)), NotInvertible);
  CHECK_THROWS_AS(inverse(Element::zero(AlgebraKind::O)), NotInvertible);
  const Element x = el("1/2+3e1'-e6+2/3e7'", AlgebraKind::Os);
  CHECK(x * inverse(x) == Element::one(AlgebraKind::Os));
  CHECK(inverse(x) * x == Element::one(AlgebraKind::Os));
}

TEST_CASE("sandwich") {
  CHECK(sandwich(el("e2", AlgebraKind::H), el("e1", AlgebraKind::H)) == el("-e1", AlgebraKind::H));
  CHECK(sandwich(el("e1+e2", AlgebraKind::H), el("e1", AlgebraKind::H)) == el("e2", AlgebraKind::H));
  const Element a = el("e1-2e5+3e6", AlgebraKind::O);
  CHECK(sandwich(a * Scalar(2), a) == a);
  CHECK_THROWS_AS(sandwich(el("e1'+e2", AlgebraKind::Os), el("e4", AlgebraKind::Os)), NotInvertible);
}

TEST_CASE("classify") {
  const auto c1 = classify(el("e1'+e2", AlgebraKind::Os));
  CHECK(c1.pure);
  CHECK(c1.nonzero);
  CHECK_FALSE(c1.invertible);
  const auto c2 = classify(Element::zero(AlgebraKind::H));
  CHECK(c2.pure);
  CHECK_FALSE(c2.nonzero);
  CHECK_FALSE(c2.invertible);
  const auto c3 = classify(el("1+e1", AlgebraKind::H));
  CHECK_FALSE(c3.pure);
  CHECK(c3.nonzero);
  CHECK(c3.invertible);
  CHECK(classify(el("e2", AlgebraKind::Hs)).in_pure_invertible());
}

TEST_CASE("mismatched algebras are rejected") {
  CHECK_THROWS_AS(el("e1", AlgebraKind::H) * el("e1", AlgebraKind::Hc), AlgebraMismatch);
  CHECK_THROWS_AS(inner(el("e1", AlgebraKind::O), el("e1", AlgebraKind::H)), AlgebraMismatch);
  CHECK_THROWS_AS(Element(AlgebraKind::H, std::vector<Scalar>(8)), AlgebraMismatch);
  CHECK_THROWS_AS(Element(AlgebraKind::H, {Scalar::complex(0, 1), 0, 0, 0}), AlgebraMismatch);
  CHECK_THROWS_AS(el("e1", AlgebraKind::H) * Scalar::imaginary_unit(), AlgebraMismatch);
}

TEST_CASE("quaternion arithmetic agrees with its Cayley embedding") {
  SampleSource src(11);
  for (AlgebraKind kind : {AlgebraKind::H, AlgebraKind::Hs, AlgebraKind::Hc}) {
    for (int n = 0; n < 50; ++n) {
      const Element a = random_element(src, kind);
      const Element b = random_element(src, kind);
      CHECK(embed_in_cayley(a * b) == embed_in_cayley(a) * embed_in_cayley(b));
      CHECK(norm(embed_in_cayley(a)) == norm(a));
    }
  }
}

TEST_CASE("algebraic identities on random samples") {
  SampleSource src(3);
  for (AlgebraKind kind : kAllAlgebras) {
    const AlgebraId algebra(kind);
    CAPTURE(algebra.name());
    const Element one = Element::one(algebra);
    for (int n = 0; n < 40; ++n) {
      const Element a = random_element(src, algebra);
      const Element b = random_element(src, algebra);
      const Element c = random_element(src, algebra);
      const Scalar s = random_scalar(src, algebra.field());
      CHECK(norm(a * b) == norm(a) * norm(b));
      CHECK(conjugate(a * b) == conjugate(b) * conjugate(a));
      CHECK(a * conjugate(a) == one * norm(a));
      CHECK((a * a) * b == a * (a * b));
      CHECK((a * b) * b == a * (b * b));
      CHECK((a + c * s) * b == a * b + (c * b) * s);
      CHECK(inner(a, b) == inner(b, a));
      CHECK(inner(a + c * s, b) == inner(a, b) + inner(c, b) * s);
      if (algebra.is_quaternion()) CHECK((a * b) * c == a * (b * c));
      if (!norm(c).is_zero()) CHECK(mul(mul(c, a), inverse(c)) == mul(c, mul(a, inverse(c))));
      const Element p = random_pure_nonzero(src, algebra);
      CHECK(p * p == one * -norm(p));
      CHECK(conjugate(p) == -p);
    }
  }
}
