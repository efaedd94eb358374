#include "cayley/conjugator.hpp"

#include <vector>

#include "cayley/commutant.hpp"
#include "cayley/errors.hpp"
#include "cayley/expr.hpp"

namespace cayley {

namespace {

// A candidate (i, j) stands for a_j e_i - a_i e_j.
struct IndexPair {
  std::size_t i;
  std::size_t j;
};

const std::vector<IndexPair>& negator_candidates(AlgebraId algebra) {
  static const std::vector<IndexPair> cyclic3 = {{1, 2}, {2, 3}, {3, 1}};
  static const std::vector<IndexPair> hs = {{1, 3}};
  static const std::vector<IndexPair> o = {{1, 2}, {2, 3}, {4, 5}, {6, 7}};
  static const std::vector<IndexPair> os = {{2, 4}, {4, 6}, {1, 3}, {5, 7}};
  static const std::vector<IndexPair> oc = {{1, 2}, {2, 3}, {3, 1}, {3, 4},
                                            {4, 5}, {5, 6}, {6, 7}};
  switch (algebra.kind()) {
    case AlgebraKind::H:
    case AlgebraKind::Hc: return cyclic3;
    case AlgebraKind::Hs: return hs;
    case AlgebraKind::O: return o;
    case AlgebraKind::Os: return os;
    case AlgebraKind::Oc: return oc;
  }
  return o;
}

void require_pure_nonzero(const Element& a, const char* name) {
  if (a.is_zero()) throw ZeroElement(std::string(name) + " is zero");
  if (!a.is_pure()) throw NotPure(std::string(name) + " has a nonzero real part");
}

void require_same_algebra(const Element& a, const Element& b) {
  if (!(a.algebra() == b.algebra()))
    throw AlgebraMismatch("operands belong to " + std::string(a.algebra().name()) + " and " +
                          std::string(b.algebra().name()));
}

}  // namespace

std::string_view branch_name(WitnessBranch branch) {
  switch (branch) {
    case WitnessBranch::SumInvertible: return "SumInvertible";
    case WitnessBranch::DivisionNegate: return "DivisionNegate";
    case WitnessBranch::DiffInvertible: return "DiffInvertible";
    case WitnessBranch::NullPair: return "NullPair";
    case WitnessBranch::AssociativeCollapse: return "AssociativeCollapse";
    case WitnessBranch::CommutantSearch: return "CommutantSearch";
  }
  return "?";
}

Element ConjugacyWitness::apply(const Element& a) const {
  Element once = sandwich(p_, a);
  return q_ ? sandwich(*q_, once) : once;
}

Element negator(const Element& a) {
  require_pure_nonzero(a, "a");
  const AlgebraId algebra = a.algebra();

  std::optional<Element> found;
  for (const auto& [i, j] : negator_candidates(algebra)) {
    Element p = Element::basis(algebra, i) * a[j] - Element::basis(algebra, j) * a[i];
    if (!norm(p).is_zero()) {
      found = std::move(p);
      break;
    }
  }
  // In Hs the only candidate vanishes on multiples of e2, which e1' negates.
  if (!found && algebra.kind() == AlgebraKind::Hs) found = Element::basis(algebra, 1);
  if (!found) throw ConsistencyError("no negator candidate has nonzero norm for " + format_element(a));

  const Element& p = *found;
  if (!(mul(p, a) + mul(a, p)).is_zero() || !(sandwich(p, a) == -a))
    throw ConsistencyError("negator " + format_element(p) + " does not anticommute with " +
                           format_element(a));
  return p;
}

Element separator(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  const AlgebraId algebra = a.algebra();
  if (algebra.is_division()) throw PreconditionViolation("no orthogonal pair with N(a) + N(b) = 0 in a division algebra");
  if (a.is_zero() || b.is_zero()) throw PreconditionViolation("a and b must be nonzero");
  if (!a.is_pure() || !b.is_pure()) throw PreconditionViolation("a and b must be pure");
  if (!inner(a, b).is_zero()) throw PreconditionViolation("(a, b) must vanish");
  const Scalar na = norm(a);
  const Scalar nb = norm(b);
  if (!(na + nb).is_zero()) throw PreconditionViolation("N(a) + N(b) must vanish");
  if (algebra.is_split() && !na.is_zero())
    throw PreconditionViolation("split algebras require N(a) = N(b) = 0");

  const StructureTable& table = table_for(algebra);
  std::optional<Element> p;
  for (std::size_t k = 1; k < algebra.dim() && !p; ++k)
    if (!(a[k] * b[k]).is_zero()) p = Element::basis(algebra, k);

  if (!p) {
    // Disjoint supports. Split algebras draw both indices from the units of
    // norm +1, which must carry weight in a real null vector.
    const auto first_support = [&](const Element& x) -> std::optional<std::size_t> {
      for (std::size_t k = 1; k < algebra.dim(); ++k)
        if (!x[k].is_zero() && (!algebra.is_split() || table.basis_norm(k) == 1)) return k;
      return std::nullopt;
    };
    const auto k = first_support(a);
    const auto l = first_support(b);
    if (!k || !l || *k == *l)
      throw ConsistencyError("no separator index pair for " + format_element(a) + ", " +
                             format_element(b));
    p = Element::basis(algebra, *k) + Element::basis(algebra, *l);
  }

  if (norm(sandwich(*p, a) + b).is_zero())
    throw ConsistencyError("separator " + format_element(*p) + " leaves N(p a p^-1 + b) = 0");
  return *p;
}

ConjugacyWitness conjugacy_witness(const Element& a, const Element& b, WitnessMode mode) {
  require_same_algebra(a, b);
  require_pure_nonzero(a, "a");
  require_pure_nonzero(b, "b");
  if (!(norm(a) == norm(b))) throw NormMismatch("N(a) != N(b)");
  const AlgebraId algebra = a.algebra();

  std::optional<ConjugacyWitness> w;
  if (!norm(a + b).is_zero()) {
    w = ConjugacyWitness::single(a + b, WitnessBranch::SumInvertible);
  } else if (algebra.is_division()) {
    if (!(b == -a)) throw ConsistencyError("N(a+b) = 0 in a division algebra but b != -a");
    w = ConjugacyWitness::single(negator(a), WitnessBranch::DivisionNegate);
  } else if (!norm(a - b).is_zero()) {
    w = ConjugacyWitness::pair(a - b, negator(b), WitnessBranch::DiffInvertible);
  } else {
    Element p = separator(a, b);
    Element q = sandwich(p, a) + b;
    w = ConjugacyWitness::pair(std::move(p), std::move(q), WitnessBranch::NullPair);
  }

  if (mode == WitnessMode::Minimal && w->is_double()) {
    const CommutantReport report = single_conjugator_search(a, b);
    if (report.conjugator)
      w = ConjugacyWitness::single(*report.conjugator, WitnessBranch::CommutantSearch);
  }

  const Report check = verify_witness(a, b, *w);
  if (!check.passed())
    throw ConsistencyError("constructed witness failed check '" + check.first_failure()->id + "'");
  return *w;
}

ConjugacyWitness collapse_quaternion(const ConjugacyWitness& w) {
  if (w.algebra().is_cayley())
    throw AlgebraMismatch("associative collapse needs a quaternion witness, got " +
                          std::string(w.algebra().name()));
  if (w.is_single()) return w;
  return ConjugacyWitness::single(mul(w.q(), w.p()), WitnessBranch::AssociativeCollapse);
}

Report verify_witness(const Element& a, const Element& b, const ConjugacyWitness& w) {
  Report report;
  const AlgebraId algebra = a.algebra();
  const bool same = b.algebra() == algebra && w.p().algebra() == algebra &&
                    (w.is_single() || w.q().algebra() == algebra);
  report.add("algebra", same, same ? "" : "operands and witness live in different algebras");
  if (!same) return report;

  const bool p_ok = !norm(w.p()).is_zero();
  report.add("p-invertible", p_ok, p_ok ? "" : "p not invertible");
  bool q_ok = true;
  if (w.is_double()) {
    q_ok = !norm(w.q()).is_zero();
    report.add("q-invertible", q_ok, q_ok ? "" : "q not invertible");
    report.add("p-pure", w.p().is_pure(), w.p().is_pure() ? "" : "p not pure");
    report.add("q-pure", w.q().is_pure(), w.q().is_pure() ? "" : "q not pure");
  }
  if (!p_ok || !q_ok) {
    report.add("sandwich-chain", false, "chain undefined: non-invertible witness");
    return report;
  }
  const Element image = w.apply(a);
  const bool chain = image == b;
  report.add("sandwich-chain", chain,
             chain ? "" : "chain maps a to " + format_element(image) + ", expected " + format_element(b));
  return report;
}

}  // namespace cayley
