// Command-line front end for the composition-algebra library.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "cayley/commutant.hpp"
#include "cayley/conjugator.hpp"
#include "cayley/errors.hpp"
#include "cayley/expr.hpp"
#include "cayley/json_io.hpp"
#include "cayley/selftest.hpp"

using namespace cayley;

namespace {

enum ExitCode { kOk = 0, kNegativeVerdict = 1, kUsage = 2, kInternal = 3 };

struct CommonOptions {
  std::string algebra;
  bool json = false;
};

struct Options {
  CommonOptions common;
  std::string lhs;
  std::string rhs;
  bool minimal = false;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
};

AlgebraId resolve_algebra(const std::string& name) {
  const auto algebra = algebra_from_name(name);
  if (!algebra) throw PreconditionViolation("unknown algebra '" + name + "' (expected H, Hs, Hc, O, Os or Oc)");
  return *algebra;
}

void add_common(CLI::App* cmd, CommonOptions& common, bool algebra_required) {
  auto* opt = cmd->add_option("--algebra", common.algebra, "One of H, Hs, Hc, O, Os, Oc")
                  ->check(CLI::IsMember({"H", "Hs", "Hc", "O", "Os", "Oc"}));
  if (algebra_required) opt->required();
  cmd->add_flag("--json", common.json, "Machine-readable output");
}

void print_report(const Report& r) {
  for (const Check& c : r.checks) {
    std::cout << (c.passed ? "  PASS  " : "  FAIL  ") << c.id;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << '\n';
  }
}

int cmd_table(const Options& o) {
  const AlgebraId algebra = resolve_algebra(o.common.algebra);
  const StructureTable& t = table_for(algebra);
  const auto cell = [&](std::size_t i, std::size_t j) {
    const BasisProduct& e = t(i, j);
    return std::string(e.sign < 0 ? "-" : "") + algebra.basis_label(e.index);
  };
  if (o.common.json) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.dim(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < t.dim(); ++j) row.push_back({{"index", t(i, j).index}, {"sign", t(i, j).sign}});
      rows.push_back(row);
    }
    std::cout << json{{"algebra", std::string(algebra.name())}, {"table", rows}}.dump() << '\n';
    return kOk;
  }
  const auto pad = [](std::string s) {
    s.resize(std::max<std::size_t>(s.size(), 5), ' ');
    return s;
  };
  std::cout << pad("*");
  for (std::size_t j = 0; j < t.dim(); ++j) std::cout << ' ' << pad(algebra.basis_label(j));
  std::cout << '\n';
  for (std::size_t i = 0; i < t.dim(); ++i) {
    std::cout << pad(algebra.basis_label(i));
    for (std::size_t j = 0; j < t.dim(); ++j) std::cout << ' ' << pad(cell(i, j));
    std::cout << '\n';
  }
  return kOk;
}

int print_element(const Element& e, bool as_json) {
  if (as_json)
    std::cout << element_to_json(e).dump() << '\n';
  else
    std::cout << format_element(e) << '\n';
  return kOk;
}

int print_scalar(const char* key, const Scalar& s, bool as_json) {
  if (as_json)
    std::cout << json{{key, scalar_to_json(s)}}.dump() << '\n';
  else
    std::cout << s << '\n';
  return kOk;
}

int cmd_negate_witness(const Options& o) {
  const AlgebraId algebra = resolve_algebra(o.common.algebra);
  const Element a = parse_element(o.lhs, algebra);
  const Element p = negator(a);
  Report r;
  r.add("p-invertible", !norm(p).is_zero(), "N(p) = " + to_string(norm(p)));
  r.add("anticommutes", (p * a + a * p).is_zero(), "p a + a p = " + format_element(p * a + a * p));
  const Element image = sandwich(p, a);
  r.add("negates", image == -a, "p a p^-1 = " + format_element(image));
  if (o.common.json) {
    std::cout << json{{"a", element_to_json(a)}, {"p", element_to_json(p)}, {"report", report_to_json(r)}}.dump()
              << '\n';
  } else {
    std::cout << "a = " << a << "\np = " << p << '\n';
    print_report(r);
  }
  return r.passed() ? kOk : kInternal;
}

int cmd_conjugate_witness(const Options& o) {
  const AlgebraId algebra = resolve_algebra(o.common.algebra);
  const Element a = parse_element(o.lhs, algebra);
  const Element b = parse_element(o.rhs, algebra);
  ConjugacyWitness w = conjugacy_witness(a, b, o.minimal ? WitnessMode::Minimal : WitnessMode::Ladder);
  if (algebra.is_quaternion()) w = collapse_quaternion(w);
  const Report r = verify_witness(a, b, w);
  if (o.common.json) {
    std::cout << witness_to_json(w, r.passed()).dump() << '\n';
  } else {
    std::cout << (w.is_single() ? "single" : "double") << " witness, branch " << branch_name(w.branch()) << '\n'
              << "p = " << w.p() << '\n';
    if (w.is_double()) std::cout << "q = " << w.q() << '\n';
    std::cout << (r.passed() ? "verified" : "NOT verified") << '\n';
    print_report(r);
  }
  return r.passed() ? kOk : kInternal;
}

int cmd_commutant(const Options& o) {
  const AlgebraId algebra = resolve_algebra(o.common.algebra);
  const Element a = parse_element(o.lhs, algebra);
  const Element b = parse_element(o.rhs, algebra);
  const CommutantReport r = single_conjugator_search(a, b);
  if (o.common.json) {
    std::cout << commutant_to_json(r).dump() << '\n';
    return kOk;
  }
  std::cout << "null space dimension " << r.nullspace_basis.size() << '\n';
  for (std::size_t k = 0; k < r.nullspace_basis.size(); ++k)
    std::cout << "  v" << k << " = " << r.nullspace_basis[k] << '\n';
  std::cout << "norm Gram matrix:\n";
  for (std::size_t i = 0; i < r.norm_gram.rows(); ++i) {
    std::cout << ' ';
    for (std::size_t j = 0; j < r.norm_gram.cols(); ++j) std::cout << ' ' << r.norm_gram(i, j);
    std::cout << '\n';
  }
  if (r.conjugator)
    std::cout << "verdict: SingleExists, p = " << *r.conjugator << '\n';
  else
    std::cout << "verdict: NoSingleConjugator\n";
  return kOk;
}

int cmd_verify_remark(const Options& o) {
  const auto results = verify_remark();
  bool all = true;
  json out = json::array();
  for (const RemarkResult& res : results) {
    all = all && res.report.passed();
    const char* verdict = res.commutant.single_exists() ? "SingleExists" : "NoSingleConjugator";
    if (o.common.json) {
      out.push_back({{"instance", res.name}, {"verdict", verdict}, {"report", report_to_json(res.report)}});
    } else {
      std::cout << res.name << ": " << verdict << '\n';
      print_report(res.report);
    }
  }
  if (o.common.json)
    std::cout << json{{"passed", all}, {"instances", out}}.dump() << '\n';
  else
    std::cout << (all ? "all checks passed" : "some checks FAILED") << '\n';
  return all ? kOk : kNegativeVerdict;
}

int cmd_selftest(const Options& o) {
  SelftestOptions opts;
  opts.samples = o.samples;
  opts.seed = o.seed;
  if (!o.common.algebra.empty()) opts.algebras = {resolve_algebra(o.common.algebra)};
  const Report r = run_selftest(opts);
  if (o.common.json) {
    std::cout << report_to_json(r).dump() << '\n';
  } else {
    print_report(r);
    std::cout << (r.passed() ? "selftest passed" : "selftest FAILED") << '\n';
  }
  return r.passed() ? kOk : kNegativeVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic and conjugacy witnesses in quaternion and Cayley algebras"};
  app.require_subcommand(1);
  Options o;

  auto* table = app.add_subcommand("table", "Print the multiplication table of the basis units");
  add_common(table, o.common, true);

  auto* mul_cmd = app.add_subcommand("mul", "Product A*B");
  auto* conj_cmd = app.add_subcommand("conj", "Conjugate of A");
  auto* inv_cmd = app.add_subcommand("inv", "Inverse of A");
  auto* norm_cmd = app.add_subcommand("norm", "Norm N(A)");
  auto* inner_cmd = app.add_subcommand("inner", "Inner product (A, B)");
  auto* negate = app.add_subcommand("negate-witness", "Pure invertible p with p A p^-1 = -A");
  auto* conjw = app.add_subcommand("conjugate-witness", "Single or double conjugator taking A to B");
  conjw->add_flag("--minimal", o.minimal, "Return a single conjugator whenever one exists");
  auto* commutant = app.add_subcommand("commutant", "Solve p A = B p and decide whether an invertible p exists");
  for (CLI::App* cmd : {mul_cmd, conj_cmd, inv_cmd, norm_cmd, inner_cmd, negate, conjw, commutant}) {
    add_common(cmd, o.common, true);
    cmd->add_option("A", o.lhs, "Element expression")->required();
  }
  for (CLI::App* cmd : {mul_cmd, inner_cmd, conjw, commutant})
    cmd->add_option("B", o.rhs, "Element expression")->required();

  auto* remark = app.add_subcommand("verify-remark", "Check both built-in pairs that admit no single conjugator");
  add_common(remark, o.common, false);
  auto* selftest = app.add_subcommand("selftest", "Randomized property suite");
  add_common(selftest, o.common, false);
  selftest->add_option("--samples", o.samples, "Samples per property and algebra")->check(CLI::PositiveNumber);
  selftest->add_option("--seed", o.seed, "Seed of the sample stream");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (table->parsed()) return cmd_table(o);
    if (mul_cmd->parsed() || inner_cmd->parsed()) {
      const AlgebraId algebra = resolve_algebra(o.common.algebra);
      const Element a = parse_element(o.lhs, algebra);
      const Element b = parse_element(o.rhs, algebra);
      return mul_cmd->parsed() ? print_element(a * b, o.common.json) : print_scalar("inner", inner(a, b), o.common.json);
    }
    if (conj_cmd->parsed() || inv_cmd->parsed() || norm_cmd->parsed()) {
      const Element a = parse_element(o.lhs, resolve_algebra(o.common.algebra));
      if (norm_cmd->parsed()) return print_scalar("norm", norm(a), o.common.json);
      return print_element(conj_cmd->parsed() ? conjugate(a) : inverse(a), o.common.json);
    }
    if (negate->parsed()) return cmd_negate_witness(o);
    if (conjw->parsed()) return cmd_conjugate_witness(o);
    if (commutant->parsed()) return cmd_commutant(o);
    if (remark->parsed()) return cmd_verify_remark(o);
    if (selftest->parsed()) return cmd_selftest(o);
  } catch (const ConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
