#include "cayley/selftest.hpp"

#include <functional>
#include <string>

#include "cayley/commutant.hpp"
#include "cayley/conjugator.hpp"
#include "cayley/errors.hpp"
#include "cayley/expr.hpp"
#include "cayley/sampling.hpp"

namespace cayley {

namespace {

// Runs `property` on `samples` draws; the property returns an empty string on
// success or a description of the counterexample.
void check_property(Report& report, AlgebraId algebra, const std::string& name, std::size_t samples,
                    const std::function<std::string()>& property) {
  std::size_t failures = 0;
  std::string first;
  for (std::size_t n = 0; n < samples; ++n) {
    std::string why;
    try {
      why = property();
    } catch (const Error& e) {
      why = std::string("threw: ") + e.what();
    }
    if (!why.empty() && failures++ == 0) first = why;
  }
  std::string detail = std::to_string(samples - failures) + "/" + std::to_string(samples) + " passed";
  if (failures) detail += "; first failure: " + first;
  report.add(std::string(algebra.name()) + "/" + name, failures == 0, detail);
}

}  // namespace

Report run_selftest(const SelftestOptions& options) {
  Report report;
  const std::size_t n = options.samples;
  for (AlgebraId algebra : options.algebras) {
    SampleSource src(options.seed * 16 + static_cast<std::uint64_t>(algebra.kind()));
    const Element one = Element::one(algebra);

    check_property(report, algebra, "composition", n, [&] {
      const Element a = random_element(src, algebra);
      const Element b = random_element(src, algebra);
      return norm(a * b) == norm(a) * norm(b) ? "" : format_element(a) + ", " + format_element(b);
    });
    check_property(report, algebra, "conjugation-anti-automorphism", n, [&] {
      const Element a = random_element(src, algebra);
      const Element b = random_element(src, algebra);
      return conjugate(a * b) == conjugate(b) * conjugate(a) ? ""
                                                               : format_element(a) + ", " + format_element(b);
    });
    check_property(report, algebra, "norm-realization", n, [&] {
      const Element a = random_element(src, algebra);
      const Element n1 = one * norm(a);
      return a * conjugate(a) == n1 && conjugate(a) * a == n1 ? "" : format_element(a);
    });
    check_property(report, algebra, "pure-square", n, [&] {
      const Element a = random_pure_nonzero(src, algebra);
      return a * a == one * -norm(a) ? "" : format_element(a);
    });
    if (algebra.is_cayley()) {
      check_property(report, algebra, "alternativity", n, [&] {
        const Element a = random_element(src, algebra);
        const Element b = random_element(src, algebra);
        const bool ok = (a * a) * b == a * (a * b) && (a * b) * b == a * (b * b);
        return ok ? "" : format_element(a) + ", " + format_element(b);
      });
    } else {
      check_property(report, algebra, "associativity", n, [&] {
        const Element a = random_element(src, algebra);
        const Element b = random_element(src, algebra);
        const Element c = random_element(src, algebra);
        return (a * b) * c == a * (b * c) ? "" : format_element(a) + ", " + format_element(b);
      });
    }
    check_property(report, algebra, "negator", n, [&] {
      const Element a = src.chance(1, 2) ? random_sparse_pure(src, algebra) : random_pure_nonzero(src, algebra);
      const Element p = negator(a);
      const bool ok = (p * a + a * p).is_zero() && !norm(p).is_zero() && sandwich(p, a) == -a;
      return ok ? "" : format_element(a);
    });
    check_property(report, algebra, "conjugacy-witness", n, [&] {
      auto [a, b] = random_conjugate_pair(src, algebra);
      if (src.chance(1, 8)) b = -a;
      if (!algebra.is_division() && src.chance(1, 8)) std::tie(a, b) = random_null_pair(src, algebra);
      ConjugacyWitness w = conjugacy_witness(a, b);
      if (algebra.is_quaternion()) w = collapse_quaternion(w);
      const bool ok = verify_witness(a, b, w).passed() && (algebra.is_cayley() || w.is_single());
      return ok ? "" : format_element(a) + " -> " + format_element(b);
    });
    check_property(report, algebra, "commutant-soundness", std::max<std::size_t>(n / 10, 1), [&] {
      const auto [a, b] = random_conjugate_pair(src, algebra);
      const CommutantReport r = single_conjugator_search(a, b);
      for (const Element& v : r.nullspace_basis)
        if (!(v * a == b * v)) return format_element(v);
      if (r.conjugator && !(sandwich(*r.conjugator, a) == b)) return format_element(*r.conjugator);
      return std::string();
    });
    check_property(report, algebra, "format-parse-roundtrip", n, [&] {
      const Element a = random_element(src, algebra);
      const std::string text = format_element(a);
      return parse_element(text, algebra) == a ? "" : text;
    });
  }
  return report;
}

}  // namespace cayley
