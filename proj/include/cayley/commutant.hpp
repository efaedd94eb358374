#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayley/element.hpp"
#include "cayley/linalg.hpp"
#include "cayley/report.hpp"

namespace cayley {

/// Matrix of the linear map p -> p a - b p; column j holds the coordinates
/// of e_j a - b e_j. Throws AlgebraMismatch.
ExactMatrix twisted_commutant_matrix(const Element& a, const Element& b);

struct CommutantReport {
  ExactMatrix matrix;
  /// Canonical basis of the solutions of p a = b p.
  std::vector<Element> nullspace_basis;
  /// norm_gram(r, s) = (v_r, v_s) over the null-space basis.
  ExactMatrix norm_gram;
  /// Set iff some solution is invertible; then p a p^-1 = b.
  std::optional<Element> conjugator;

  bool single_exists() const { return conjugator.has_value(); }
};

/// Solves p a = b p exactly and decides whether an invertible solution
/// exists. The norm restricted to the solution space is the quadratic form
/// of norm_gram; it vanishes identically iff the Gram matrix is zero.
/// Otherwise a point of {0,1,2}^d where it is nonzero gives the conjugator.
/// Throws AlgebraMismatch.
CommutantReport single_conjugator_search(const Element& a, const Element& b);

/// Pair with no single conjugator, together with the two solutions of
/// p a = b p listed alongside it.
struct RemarkInstance {
  std::string name;
  Element a;
  Element b;
  std::vector<Element> listed_solutions;
};

/// The split (Os) and complex (Oc) instances.
std::vector<RemarkInstance> remark_instances();

/// Check ids: "norms-zero", "nullspace-dim-2", "listed-solutions-commute",
/// "span-equality", "no-single-conjugator", "double-witness-verified".
Report verify_remark_instance(const RemarkInstance& instance);

struct RemarkResult {
  std::string name;
  Report report;
  CommutantReport commutant;
};

/// Runs verify_remark_instance on both built-in instances.
std::vector<RemarkResult> verify_remark();

}  // namespace cayley
