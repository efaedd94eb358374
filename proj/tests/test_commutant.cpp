#include <doctest.h>

#include "cayley/commutant.hpp"
#include "cayley/conjugator.hpp"
#include "cayley/errors.hpp"
#include "cayley/expr.hpp"
#include "cayley/sampling.hpp"

using namespace cayley;

namespace {

Element el(const char* text, AlgebraKind kind) { return parse_element(text, kind); }

std::vector<std::vector<Scalar>> coords(const std::vector<Element>& xs) {
  std::vector<std::vector<Scalar>> out;
  for (const Element& x : xs) out.push_back(x.coeffs());
  return out;
}

bool same_span(const std::vector<Element>& u, const std::vector<Element>& v, Field field) {
  auto joint = coords(u);
  for (auto& c : coords(v)) joint.push_back(c);
  const std::size_t ru = column_rank(coords(u), field);
  return ru == column_rank(coords(v), field) && ru == column_rank(joint, field);
}

}  // namespace

TEST_CASE("matrix columns are e_j a - b e_j") {
  CHECK(twisted_commutant_matrix(Element::zero(AlgebraKind::O), Element::zero(AlgebraKind::O)).is_zero());

  const Element a = el("e1-2e3", AlgebraKind::H);
  const Element b = el("2e2+e1", AlgebraKind::H);
  const ExactMatrix m = twisted_commutant_matrix(a, b);
  for (std::size_t j = 0; j < 4; ++j) {
    const Element e = Element::basis(AlgebraKind::H, j);
    const Element col = e * a - b * e;
    for (std::size_t i = 0; i < 4; ++i) CHECK(m(i, j) == col[i]);
  }
  CHECK_THROWS_AS(twisted_commutant_matrix(a, el("e1", AlgebraKind::O)), AlgebraMismatch);
}

TEST_CASE("centralizer of e1 in H") {
  const Element e1 = el("e1", AlgebraKind::H);
  // Oracle: which basis units commute with e1, straight from products.
  std::vector<Element> commuting;
  for (std::size_t k = 0; k < 4; ++k) {
    const Element e = Element::basis(AlgebraKind::H, k);
    if (e * e1 == e1 * e) commuting.push_back(e);
  }
  CHECK(commuting.size() == 2);

  std::vector<Element> computed;
  for (auto& v : nullspace(twisted_commutant_matrix(e1, e1))) computed.emplace_back(AlgebraKind::H, v);
  CHECK(computed.size() == 2);
  CHECK(same_span(computed, commuting, Field::Real));
}

TEST_CASE("remark instances have no single conjugator") {
  const auto instances = remark_instances();
  REQUIRE(instances.size() == 2);
  for (const RemarkInstance& inst : instances) {
    CAPTURE(inst.name);
    const CommutantReport r = single_conjugator_search(inst.a, inst.b);
    CHECK(r.nullspace_basis.size() == 2);
    CHECK(r.norm_gram.is_zero());
    CHECK_FALSE(r.single_exists());
    CHECK(same_span(r.nullspace_basis, inst.listed_solutions, inst.a.algebra().field()));
    for (const Element& v : inst.listed_solutions) {
      CHECK(v * inst.a == inst.b * v);
      CHECK(norm(v).is_zero());
    }
    const Report check = verify_remark_instance(inst);
    CHECK(check.passed());
    CHECK(check.checks.size() == 6);
  }
}

TEST_CASE("remark instances match their text form") {
  const auto instances = remark_instances();
  CHECK(format_element(instances[0].a) == "4e1'+5e2+3e3'-5e4+4e5'+3e7'");
  CHECK(format_element(instances[0].b) == "3e2+4e6+5e7'");
  CHECK(format_element(instances[1].a) == "4ie1+5e2+3ie3-5e4+4ie5+3ie7");
  CHECK(format_element(instances[1].b) == "3e2+4e6+5ie7");
}

TEST_CASE("perturbed instance is reported") {
  RemarkInstance inst = remark_instances().front();
  inst.b = inst.b * Scalar(2);
  const Report r = verify_remark_instance(inst);
  CHECK_FALSE(r.passed());
  CHECK(r.find("norms-zero")->passed);
  CHECK_FALSE(r.find("listed-solutions-commute")->passed);
  CHECK_FALSE(r.find("span-equality")->passed);
}

TEST_CASE("quaternion pairs always have a single conjugator") {
  const Element a = el("e1", AlgebraKind::H);
  const Element b = el("e2", AlgebraKind::H);
  const CommutantReport r = single_conjugator_search(a, b);
  REQUIRE(r.single_exists());
  CHECK(sandwich(*r.conjugator, a) == b);
  // The ladder's witness lies in the same solution space.
  const ConjugacyWitness w = conjugacy_witness(a, b);
  std::vector<Element> with_witness = r.nullspace_basis;
  with_witness.push_back(w.p());
  CHECK(same_span(with_witness, r.nullspace_basis, Field::Real));
}

TEST_CASE("split pair b = -a has a single conjugator") {
  const Element a = el("e1'+2e2", AlgebraKind::Os);
  const CommutantReport r = single_conjugator_search(a, -a);
  REQUIRE(r.single_exists());
  CHECK(sandwich(*r.conjugator, a) == -a);
}

TEST_CASE("oracle soundness on random instances") {
  SampleSource src(41);
  for (AlgebraKind kind : kAllAlgebras) {
    CAPTURE(AlgebraId(kind).name());
    for (int n = 0; n < 15; ++n) {
      // Unrelated a, b usually give a trivial solution space; conjugate pairs do not.
      const auto [a, b] = n % 3 == 0 ? std::pair{random_pure_nonzero(src, kind), random_pure_nonzero(src, kind)}
                                     : random_conjugate_pair(src, kind);
      const CommutantReport r = single_conjugator_search(a, b);
      for (const Element& v : r.nullspace_basis) CHECK(v * a == b * v);
      for (std::size_t i = 0; i < r.nullspace_basis.size(); ++i)
        for (std::size_t j = 0; j < r.nullspace_basis.size(); ++j)
          CHECK(r.norm_gram(i, j) == inner(r.nullspace_basis[i], r.nullspace_basis[j]));
      // Any solution not in the span would raise the rank of the matrix kernel.
      const Element probe = random_invertible(src, kind);
      const bool solves = probe * a == b * probe;
      std::vector<Element> extended = r.nullspace_basis;
      extended.push_back(probe);
      CHECK(solves == same_span(extended, r.nullspace_basis, AlgebraId(kind).field()));
      if (n % 3 != 0) {
        REQUIRE(r.single_exists());
        CHECK(sandwich(*r.conjugator, a) == b);
        CHECK(*r.conjugator * a == b * *r.conjugator);
      }
    }
  }
}
