#pragma once

#include <string>
#include <vector>

#include "rbsym/delcon.hpp"
#include "rbsym/digraph.hpp"
#include "rbsym/listings.hpp"
#include "rbsym/polynomial.hpp"
#include "rbsym/qsym.hpp"
#include "rbsym/redei_berge.hpp"

namespace rbsym {

enum class CheckStatus { pass, fail, skip };

[[nodiscard]] inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

struct IdentityCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string lhs;  ///< filled on failure
  std::string rhs;  ///< filled on failure
  std::string note;
};

struct IdentityReport {
  Digraph digraph;
  std::vector<IdentityCheck> checks;

  [[nodiscard]] bool all_passed() const {
    for (const IdentityCheck& c : checks) {
      if (c.status == CheckStatus::fail) return false;
    }
    return true;
  }
};

struct VerifyOptions {
  EnumerationOptions enumeration{};
  DelconOptions delcon{};
  /// Deletion-contraction is skipped above this many vertices.
  int delcon_max_vertices = 8;
};

/// Evaluates every applicable identity for X with independently computed sides.
/// Polynomial identities are compared coefficient-wise.
[[nodiscard]] inline IdentityReport verify_identities(const Digraph& x, const VerifyOptions& opts = {}) {
  IdentityReport report{x, {}};
  auto record = [&](const std::string& name, bool ok, const std::string& lhs, const std::string& rhs) {
    IdentityCheck c{name, ok ? CheckStatus::pass : CheckStatus::fail, {}, {}, {}};
    if (!ok) {
      c.lhs = lhs;
      c.rhs = rhs;
    }
    report.checks.push_back(std::move(c));
  };
  auto check_qsym = [&](const std::string& name, const QSymElem& a, const QSymElem& b) {
    record(name, a == b, to_string(a), to_string(b));
  };
  auto check_poly = [&](const std::string& name, const Polynomial& a, const Polynomial& b) {
    record(name, a == b, a.to_string(), b.to_string());
  };
  auto check_int = [&](const std::string& name, Integer a, Integer b) {
    record(name, a == b, std::to_string(a), std::to_string(b));
  };

  const int n = x.size();
  const Integer sign = n % 2 == 0 ? 1 : -1;
  const Digraph xc = complement(x);

  const CoefficientTable lambda = lambda_table(x, opts.enumeration);
  const QSymElem uf = QSymElem::from_dense(n, Basis::fundamental, lambda.values);
  const QSymElem um = u_monomial_via_zeta(x);
  const QSymElem uf_c = u_fundamental(xc, opts.enumeration);
  const Polynomial poly = rb_polynomial_binomial(x);
  const Polynomial poly_c = rb_polynomial_binomial(xc);

  check_qsym("psi_equals_u", f_to_m(uf), um);

  Integer total = 0;
  for (Integer c : lambda.values) total = checked::add(total, c);
  check_int("lambda_sum", total, checked::factorial(n));

  {
    bool ok = true;
    std::string where;
    for (PositionMask i = 0; i < lambda.values.size(); ++i) {
      Integer sum = 0;
      for (PositionMask j = i;; j = (j - 1) & i) {
        sum = checked::add(sum, lambda[j]);
        if (j == 0) break;
      }
      if (sum != um.coefficient(i)) {
        ok = false;
        where = "I=" + std::to_string(i) + ": " + std::to_string(sum) + " vs " + std::to_string(um.coefficient(i));
        break;
      }
    }
    record("mu_containment", ok, where, "sum of lambda_J over J subset I");
  }

  check_qsym("opposite", uf, u_fundamental(opposite(x), opts.enumeration));
  record("symmetric", is_symmetric(um), to_string(um), "symmetric");
  check_qsym("antipode", antipode(uf), sign * uf_c);
  check_poly("qsym_reciprocity", principal_specialization(uf).negate_variable(),
             principal_specialization(antipode(uf)));
  check_poly("polynomial_reciprocity", poly.negate_variable(), Rational(sign) * poly_c);

  if (n <= opts.delcon_max_vertices) {
    check_poly("deletion_contraction", rb_polynomial_delcon(x, opts.delcon), poly);
  } else {
    report.checks.push_back({"deletion_contraction", CheckStatus::skip, {}, {},
                             "n above " + std::to_string(opts.delcon_max_vertices)});
  }

  const Integer zeta_x = zeta(x, HamMethod::automatic, opts.enumeration);
  const Integer zeta_xc = zeta(xc, HamMethod::automatic, opts.enumeration);
  check_int("zeta_specialization", poly.evaluate_integer(1), zeta_x);
  check_int("negative_specialization", poly.evaluate_integer(-1), checked::mul(sign, zeta_xc));
  const Integer ham_x = count_hamiltonian_paths(x, HamMethod::automatic, opts.enumeration);
  const Integer ham_xc = count_hamiltonian_paths(xc, HamMethod::automatic, opts.enumeration);
  check_int("berge_parity", ham_x % 2, ham_xc % 2);

  if (is_tournament(x)) {
    record("redei_odd", ham_x % 2 == 1, std::to_string(ham_x), "odd");
    check_qsym("tournament_self_complementary", uf, uf_c);
    check_qsym("tournament_antipode", antipode(uf), sign * uf);
    check_poly("tournament_reciprocity", poly.negate_variable(), Rational(sign) * poly);
  }
  return report;
}

}  // namespace rbsym
