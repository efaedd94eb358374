#pragma once

#include <optional>
#include <string_view>

#include "cayley/element.hpp"
#include "cayley/report.hpp"

namespace cayley {

/// Which construction produced a witness.
enum class WitnessBranch {
  SumInvertible,        ///< p = a + b
  DivisionNegate,       ///< b = -a in a division algebra, p = negator(a)
  DiffInvertible,       ///< p = a - b, q = negator(b)
  NullPair,             ///< p = separator(a, b), q = p a p^-1 + b
  AssociativeCollapse,  ///< quaternion double (p, q) folded into q p
  CommutantSearch,      ///< single conjugator found by solving p a = b p
};

std::string_view branch_name(WitnessBranch branch);

/// Either a single conjugator p with p a p^-1 = b, or a pair with
/// q (p a p^-1) q^-1 = b.
class ConjugacyWitness {
 public:
  static ConjugacyWitness single(Element p, WitnessBranch branch) {
    return ConjugacyWitness(std::move(p), std::nullopt, branch);
  }
  static ConjugacyWitness pair(Element p, Element q, WitnessBranch branch) {
    return ConjugacyWitness(std::move(p), std::move(q), branch);
  }

  bool is_single() const { return !q_.has_value(); }
  bool is_double() const { return q_.has_value(); }
  const Element& p() const { return p_; }
  /// Only valid for a double witness.
  const Element& q() const { return q_.value(); }
  WitnessBranch branch() const { return branch_; }
  AlgebraId algebra() const { return p_.algebra(); }

  /// The chain applied to a: p a p^-1, then q (.) q^-1 for a double.
  Element apply(const Element& a) const;

 private:
  ConjugacyWitness(Element p, std::optional<Element> q, WitnessBranch branch)
      : p_(std::move(p)), q_(std::move(q)), branch_(branch) {}

  Element p_;
  std::optional<Element> q_;
  WitnessBranch branch_;
};

/// Pure invertible p with p a = -a p, chosen as the first candidate of
/// nonzero norm in the algebra's fixed candidate list.
/// Throws ZeroElement, NotPure.
Element negator(const Element& a);

/// Pure invertible p with N(p a p^-1 + b) != 0 for an orthogonal pair of
/// pure nonzero elements with N(a) + N(b) = 0. Split algebras additionally
/// require N(a) = N(b) = 0. Throws PreconditionViolation.
Element separator(const Element& a, const Element& b);

enum class WitnessMode {
  Ladder,   ///< the four-branch construction, as is
  Minimal,  ///< replace a double witness by a single one when one exists
};

/// Conjugacy witness for pure nonzero a, b with N(a) = N(b):
///   1. N(a+b) != 0                 -> single a + b
///   2. division algebra (b = -a)   -> single negator(a)
///   3. N(a-b) != 0                 -> double (a - b, negator(b))
///   4. otherwise                   -> double (s, s a s^-1 + b), s = separator(a, b)
/// The result is verified before returning (ConsistencyError otherwise).
/// Throws ZeroElement, NotPure, NormMismatch, AlgebraMismatch.
ConjugacyWitness conjugacy_witness(const Element& a, const Element& b,
                                   WitnessMode mode = WitnessMode::Ladder);

/// Folds a quaternion double witness (p, q) into the single q p. Singles
/// pass through. Throws AlgebraMismatch for Cayley witnesses.
ConjugacyWitness collapse_quaternion(const ConjugacyWitness& w);

/// Re-derives every claimed equation. Check ids: "algebra", "p-invertible",
/// "q-invertible", "p-pure", "q-pure", "sandwich-chain".
Report verify_witness(const Element& a, const Element& b, const ConjugacyWitness& w);

}  // namespace cayley
