#include "cayley/commutant.hpp"

#include "cayley/conjugator.hpp"
#include "cayley/errors.hpp"
#include "cayley/expr.hpp"

namespace cayley {

ExactMatrix twisted_commutant_matrix(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra()))
    throw AlgebraMismatch("operands belong to " + std::string(a.algebra().name()) + " and " +
                          std::string(b.algebra().name()));
  const AlgebraId algebra = a.algebra();
  ExactMatrix m(algebra.dim(), algebra.dim(), algebra.field());
  for (std::size_t j = 0; j < algebra.dim(); ++j) {
    const Element e = Element::basis(algebra, j);
    const Element column = mul(e, a) - mul(b, e);
    for (std::size_t i = 0; i < algebra.dim(); ++i) m(i, j) = column[i];
  }
  return m;
}

CommutantReport single_conjugator_search(const Element& a, const Element& b) {
  CommutantReport report;
  report.matrix = twisted_commutant_matrix(a, b);
  const AlgebraId algebra = a.algebra();
  for (auto& v : nullspace(report.matrix)) report.nullspace_basis.emplace_back(algebra, std::move(v));

  const std::size_t d = report.nullspace_basis.size();
  report.norm_gram = ExactMatrix(d, d, algebra.field());
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = r; s < d; ++s) {
      report.norm_gram(r, s) = inner(report.nullspace_basis[r], report.nullspace_basis[s]);
      report.norm_gram(s, r) = report.norm_gram(r, s);
    }
  if (report.norm_gram.is_zero()) return report;

  // A nonzero form of degree <= 2 in each variable cannot vanish on all of
  // {0,1,2}^d.
  std::vector<long> t(d, 0);
  while (true) {
    std::size_t digit = 0;
    while (digit < d && t[digit] == 2) t[digit++] = 0;
    if (digit == d) break;
    ++t[digit];

    Scalar q = Scalar::zero(algebra.field());
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s)
        if (t[r] != 0 && t[s] != 0) q += Scalar(t[r] * t[s]) * report.norm_gram(r, s);
    if (q.is_zero()) continue;

    Element p = Element::zero(algebra);
    for (std::size_t r = 0; r < d; ++r) p += report.nullspace_basis[r] * Scalar(t[r]);
    if (!(sandwich(p, a) == b))
      throw ConsistencyError("invertible solution of p a = b p fails p a p^-1 = b");
    report.conjugator = std::move(p);
    return report;
  }
  throw ConsistencyError("nonzero Gram matrix but the norm vanishes on the whole parameter grid");
}

std::vector<RemarkInstance> remark_instances() {
  // Pairs with N(a) = N(b) = 0 whose twisted commutant is the 2-dimensional
  // span of the listed solutions, on which the norm vanishes identically.
  const AlgebraId os = AlgebraKind::Os;
  const AlgebraId oc = AlgebraKind::Oc;
  return {
      {"Os",
       parse_element("4e1'+5e2+3e3'-5e4+4e5'+3e7'", os),
       parse_element("3e2+4e6+5e7'", os),
       {parse_element("104e1'+40e2+3e3'-165e4+132e5'+24e7'", os),
        parse_element("-46e1'-8e2+3e3'+75e4-60e5'+6e6", os)}},
      {"Oc",
       parse_element("4ie1+5e2+3ie3-5e4+4ie5+3ie7", oc),
       parse_element("3e2+4e6+5ie7", oc),
       {parse_element("104e1-40ie2+3e3+165ie4+132e5+24e7", oc),
        parse_element("-46ie1-8e2+3ie3+75e4-60ie5+6e6", oc)}},
  };
}

namespace {

Report verify_instance(const RemarkInstance& inst, CommutantReport& commutant) {
  Report report;
  const Element& a = inst.a;
  const Element& b = inst.b;

  const bool norms = norm(a).is_zero() && norm(b).is_zero();
  report.add("norms-zero", norms,
             "N(a) = " + to_string(norm(a)) + ", N(b) = " + to_string(norm(b)));

  commutant = single_conjugator_search(a, b);
  const std::size_t dim = commutant.nullspace_basis.size();
  report.add("nullspace-dim-2", dim == 2, "dimension " + std::to_string(dim));

  bool commute = true;
  std::string offending;
  for (const Element& v : inst.listed_solutions)
    if (!(mul(v, a) == mul(b, v))) {
      commute = false;
      offending = format_element(v);
    }
  report.add("listed-solutions-commute", commute, commute ? "" : "v a != b v for v = " + offending);

  std::vector<std::vector<Scalar>> computed, listed, joint;
  for (const Element& v : commutant.nullspace_basis) computed.push_back(v.coeffs());
  for (const Element& v : inst.listed_solutions) listed.push_back(v.coeffs());
  joint = computed;
  joint.insert(joint.end(), listed.begin(), listed.end());
  const Field field = a.algebra().field();
  const std::size_t rc = column_rank(computed, field);
  const std::size_t rl = column_rank(listed, field);
  const std::size_t rj = column_rank(joint, field);
  const bool span = rc == rl && rj == rc;
  report.add("span-equality", span,
             "ranks computed " + std::to_string(rc) + ", listed " + std::to_string(rl) +
                 ", joint " + std::to_string(rj));

  const bool none = commutant.norm_gram.is_zero() && !commutant.single_exists();
  report.add("no-single-conjugator", none,
             none ? "norm vanishes on the solution space"
                  : "found invertible solution " + format_element(*commutant.conjugator));

  try {
    const ConjugacyWitness w = conjugacy_witness(a, b);
    const bool ok = w.is_double() && verify_witness(a, b, w).passed();
    report.add("double-witness-verified", ok,
               "branch " + std::string(branch_name(w.branch())) + ", p = " + format_element(w.p()) +
                   (w.is_double() ? ", q = " + format_element(w.q()) : ""));
  } catch (const Error& e) {
    report.add("double-witness-verified", false, e.what());
  }
  return report;
}

}  // namespace

Report verify_remark_instance(const RemarkInstance& instance) {
  CommutantReport unused;
  return verify_instance(instance, unused);
}

std::vector<RemarkResult> verify_remark() {
  std::vector<RemarkResult> out;
  for (const RemarkInstance& inst : remark_instances()) {
    RemarkResult r{inst.name, {}, {}};
    r.report = verify_instance(inst, r.commutant);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cayley
