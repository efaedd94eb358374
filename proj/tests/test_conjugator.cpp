#include <doctest.h>

#include "cayley/conjugator.hpp"
#include "cayley/errors.hpp"
#include "cayley/expr.hpp"
#include "cayley/sampling.hpp"

using namespace cayley;

namespace {

Element el(const char* text, AlgebraKind kind) { return parse_element(text, kind); }

const char* const kRemarkA = "4e1'+5e2+3e3'-5e4+4e5'+3e7'";
const char* const kRemarkB = "3e2+4e6+5e7'";

}  // namespace

TEST_CASE("negator picks the first candidate of nonzero norm") {
  CHECK(negator(el("e1", AlgebraKind::O)) == el("-e2", AlgebraKind::O));
  CHECK(negator(el("e2", AlgebraKind::Os)) == el("-e4", AlgebraKind::Os));
  CHECK(negator(el("e1'", AlgebraKind::Os)) == el("-e3'", AlgebraKind::Os));
  CHECK(norm(negator(el("e1'", AlgebraKind::Os))) == Scalar(-1));
  // Oc: a1^2 + a2^2 = 0 and a2^2 + a3^2 = 0 skip the first two candidates.
  CHECK(negator(el("e1+ie2+e3", AlgebraKind::Oc)) == el("e3-e1", AlgebraKind::Oc));
  CHECK(negator(el("e7", AlgebraKind::Oc)) == el("e6", AlgebraKind::Oc));
  // Hs falls back to e1' on multiples of e2.
  CHECK(negator(el("3e2", AlgebraKind::Hs)) == el("e1'", AlgebraKind::Hs));
  CHECK(negator(el("e1'+e2", AlgebraKind::Hs)) == el("-e3'", AlgebraKind::Hs));
}

TEST_CASE("negator stays inside quaternion algebras") {
  SampleSource src(23);
  for (AlgebraKind kind : {AlgebraKind::H, AlgebraKind::Hs, AlgebraKind::Hc}) {
    for (int n = 0; n < 100; ++n) {
      const Element a = n % 2 ? random_sparse_pure(src, kind) : random_pure_nonzero(src, kind);
      const Element p = negator(a);
      CHECK(p.algebra() == AlgebraId(kind));
      CHECK(p.is_pure());
      CHECK((p * a + a * p).is_zero());
      CHECK(sandwich(p, a) == -a);
    }
  }
}

TEST_CASE("negator rejects zero and non-pure input") {
  CHECK_THROWS_AS(negator(Element::zero(AlgebraKind::O)), ZeroElement);
  CHECK_THROWS_AS(negator(el("1+e1", AlgebraKind::O)), NotPure);
}

TEST_CASE("separator on disjoint supports") {
  const Element a = el("e1+ie2", AlgebraKind::Oc);
  const Element b = el("e3+ie4", AlgebraKind::Oc);
  const Element p = separator(a, b);
  CHECK(p == el("e1+e3", AlgebraKind::Oc));
  CHECK(norm(p) == Scalar(2));
  CHECK(norm(sandwich(p, a) + b) == Scalar(2));
}

TEST_CASE("separator on a shared index") {
  const Element a = el("e1+ie2", AlgebraKind::Oc);
  const Element b = el("ie1-e2", AlgebraKind::Oc);
  const Element p = separator(a, b);
  CHECK(p == el("e1", AlgebraKind::Oc));
  CHECK(norm(sandwich(p, a) + b) == Scalar::complex(0, 4));

  const Element sa = el(kRemarkA, AlgebraKind::Os);
  const Element sb = el(kRemarkB, AlgebraKind::Os);
  const Element sp = separator(sa, sb);
  CHECK(sp == el("e2", AlgebraKind::Os));
  CHECK(norm(sp) == Scalar(1));
  CHECK_FALSE(norm(sandwich(sp, sa) + sb).is_zero());
}

TEST_CASE("separator on split disjoint supports uses norm +1 units") {
  const Element a = el("e1'+e2", AlgebraKind::Os);
  const Element b = el("e3'-e4", AlgebraKind::Os);
  const Element p = separator(a, b);
  CHECK(p == el("e2+e4", AlgebraKind::Os));
  CHECK_FALSE(norm(sandwich(p, a) + b).is_zero());
}

TEST_CASE("separator preconditions") {
  // (a, b) = 2i here.
  CHECK_THROWS_AS(separator(el("e1+ie2", AlgebraKind::Oc), el("ie1+e2", AlgebraKind::Oc)), PreconditionViolation);
  // Orthogonal with N(a) + N(b) = 0 but both norms nonzero: excluded in split algebras.
  CHECK_THROWS_AS(separator(el("e1'", AlgebraKind::Os), el("e2", AlgebraKind::Os)), PreconditionViolation);
  CHECK_THROWS_AS(separator(el("e1", AlgebraKind::O), el("e2", AlgebraKind::O)), PreconditionViolation);
  CHECK_THROWS_AS(separator(el("e1+ie2", AlgebraKind::Oc), Element::zero(AlgebraKind::Oc)), PreconditionViolation);
  CHECK_THROWS_AS(separator(el("1+e1+ie2", AlgebraKind::Oc), el("e3+ie4", AlgebraKind::Oc)), PreconditionViolation);
  // In Oc the weaker hypothesis is enough: N(e1) = 1, N(ie2) = -1.
  const Element a = el("e1", AlgebraKind::Oc);
  const Element b = el("ie2", AlgebraKind::Oc);
  CHECK_FALSE(norm(sandwich(separator(a, b), a) + b).is_zero());
}

TEST_CASE("witness ladder branches") {
  const ConjugacyWitness w1 = conjugacy_witness(el("e1", AlgebraKind::H), el("e2", AlgebraKind::H));
  CHECK(w1.is_single());
  CHECK(w1.branch() == WitnessBranch::SumInvertible);
  CHECK(w1.p() == el("e1+e2", AlgebraKind::H));

  const ConjugacyWitness w2 = conjugacy_witness(el("e1", AlgebraKind::O), el("-e1", AlgebraKind::O));
  CHECK(w2.is_single());
  CHECK(w2.branch() == WitnessBranch::DivisionNegate);
  CHECK(w2.p() == el("-e2", AlgebraKind::O));

  const Element a = el("e1'", AlgebraKind::Os);
  const ConjugacyWitness w3 = conjugacy_witness(a, -a);
  CHECK(w3.is_double());
  CHECK(w3.branch() == WitnessBranch::DiffInvertible);
  CHECK(w3.p() == a * Scalar(2));

  const Element ra = el(kRemarkA, AlgebraKind::Os);
  const Element rb = el(kRemarkB, AlgebraKind::Os);
  const ConjugacyWitness w4 = conjugacy_witness(ra, rb);
  CHECK(w4.is_double());
  CHECK(w4.branch() == WitnessBranch::NullPair);
  CHECK(w4.q() == sandwich(w4.p(), ra) + rb);
  CHECK(verify_witness(ra, rb, w4).passed());
}

TEST_CASE("witness ladder errors") {
  CHECK_THROWS_AS(conjugacy_witness(el("e1", AlgebraKind::O), el("2e2", AlgebraKind::O)), NormMismatch);
  CHECK_THROWS_AS(conjugacy_witness(Element::zero(AlgebraKind::O), el("e2", AlgebraKind::O)), ZeroElement);
  CHECK_THROWS_AS(conjugacy_witness(el("1+e1", AlgebraKind::H), el("1+e2", AlgebraKind::H)), NotPure);
  CHECK_THROWS_AS(conjugacy_witness(el("e1", AlgebraKind::O), el("e1", AlgebraKind::H)), AlgebraMismatch);
}

TEST_CASE("minimal mode prefers a single conjugator") {
  const Element a = el("e1'", AlgebraKind::Os);
  const ConjugacyWitness w = conjugacy_witness(a, -a, WitnessMode::Minimal);
  CHECK(w.is_single());
  CHECK(w.branch() == WitnessBranch::CommutantSearch);
  CHECK(sandwich(w.p(), a) == -a);

  // No single conjugator exists here, so the double survives.
  const Element ra = el(kRemarkA, AlgebraKind::Os);
  const Element rb = el(kRemarkB, AlgebraKind::Os);
  CHECK(conjugacy_witness(ra, rb, WitnessMode::Minimal).is_double());
}

TEST_CASE("associative collapse") {
  const Element a = el("e1+ie2", AlgebraKind::Hc);
  const Element b = el("2ie1-2e2", AlgebraKind::Hc);
  const ConjugacyWitness w = conjugacy_witness(a, b);
  REQUIRE(w.is_double());
  const ConjugacyWitness s = collapse_quaternion(w);
  CHECK(s.is_single());
  CHECK(s.branch() == WitnessBranch::AssociativeCollapse);
  CHECK(s.p() == w.q() * w.p());
  CHECK(sandwich(s.p(), a) == b);

  const ConjugacyWitness single = conjugacy_witness(el("e1", AlgebraKind::H), el("e2", AlgebraKind::H));
  CHECK(collapse_quaternion(single).p() == single.p());
  CHECK(collapse_quaternion(single).branch() == WitnessBranch::SumInvertible);

  const ConjugacyWitness oct = conjugacy_witness(el(kRemarkA, AlgebraKind::Os), el(kRemarkB, AlgebraKind::Os));
  CHECK_THROWS_AS(collapse_quaternion(oct), AlgebraMismatch);
}

TEST_CASE("verify_witness reports the failing equation") {
  const Element a = el("e1", AlgebraKind::H);
  const Element b = el("e2", AlgebraKind::H);
  const ConjugacyWitness good = conjugacy_witness(a, b);
  CHECK(verify_witness(a, b, good).passed());

  const ConjugacyWitness tampered =
      ConjugacyWitness::single(good.p() + Element::one(AlgebraKind::H), good.branch());
  const Report bad = verify_witness(a, b, tampered);
  CHECK_FALSE(bad.passed());
  REQUIRE(bad.first_failure() != nullptr);
  CHECK(bad.first_failure()->id == "sandwich-chain");

  const Element sa = el(kRemarkA, AlgebraKind::Os);
  const Element sb = el(kRemarkB, AlgebraKind::Os);
  const ConjugacyWitness null_q =
      ConjugacyWitness::pair(el("e2", AlgebraKind::Os), el("e1'+e2", AlgebraKind::Os), WitnessBranch::NullPair);
  const Report r = verify_witness(sa, sb, null_q);
  CHECK_FALSE(r.passed());
  CHECK(r.first_failure()->id == "q-invertible");
  CHECK(r.first_failure()->detail == "q not invertible");

  const ConjugacyWitness wrong_algebra = ConjugacyWitness::single(el("e1", AlgebraKind::O), WitnessBranch::SumInvertible);
  CHECK(verify_witness(a, b, wrong_algebra).first_failure()->id == "algebra");
}

TEST_CASE("ladder round trip on random conjugate pairs") {
  SampleSource src(29);
  for (AlgebraKind kind : kAllAlgebras) {
    CAPTURE(AlgebraId(kind).name());
    for (int n = 0; n < 40; ++n) {
      const auto [a, b] = random_conjugate_pair(src, kind);
      ConjugacyWitness w = conjugacy_witness(a, b);
      CHECK(verify_witness(a, b, w).passed());
      if (w.is_double()) {
        CHECK(w.p().is_pure());
        CHECK(w.q().is_pure());
      }
      if (AlgebraId(kind).is_quaternion()) {
        w = collapse_quaternion(w);
        CHECK(w.is_single());
        CHECK(sandwich(w.p(), a) == b);
      }
    }
  }
}

TEST_CASE("null pairs reach the last branch") {
  SampleSource src(31);
  for (AlgebraKind kind : {AlgebraKind::Hs, AlgebraKind::Hc, AlgebraKind::Os, AlgebraKind::Oc}) {
    for (int n = 0; n < 30; ++n) {
      const auto [a, b] = random_null_pair(src, kind);
      const ConjugacyWitness w = conjugacy_witness(a, b);
      CHECK(w.branch() == WitnessBranch::NullPair);
      CHECK(verify_witness(a, b, w).passed());
    }
  }
}
