#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rbsym/checked.hpp"
#include "rbsym/composition.hpp"
#include "rbsym/polynomial.hpp"

namespace rbsym {

enum class Basis { monomial, fundamental };

[[nodiscard]] inline const char* basis_name(Basis b) { return b == Basis::monomial ? "M" : "F"; }

/// Homogeneous quasisymmetric function of a fixed degree, expanded in the M
/// or F basis. Terms are keyed by the subset I of [n-1]; zero coefficients
/// are never stored. Degree 0 has the single key 0 (the unit).
class QSymElem {
 public:
  using Terms = std::map<PositionMask, Integer>;

  QSymElem() = default;
  QSymElem(int degree, Basis basis) : degree_(degree), basis_(basis) {
    if (degree < 0) throw InvalidArgument("negative degree");
    if (degree > 32) throw CapExceeded("QSym degree above 32");
  }
  QSymElem(int degree, Basis basis, const Terms& terms) : QSymElem(degree, basis) {
    for (const auto& [key, c] : terms) add_term(key, c);
  }

  /// Builds from a dense coefficient vector indexed by subset mask.
  static QSymElem from_dense(int degree, Basis basis, const std::vector<Integer>& dense) {
    QSymElem out(degree, basis);
    for (std::size_t k = 0; k < dense.size(); ++k) out.add_term(static_cast<PositionMask>(k), dense[k]);
    return out;
  }

  static QSymElem monomial(const Composition& alpha, Integer c = 1) {
    QSymElem out(alpha.degree(), Basis::monomial);
    out.add_term(subset_of_comp(alpha).bits(), c);
    return out;
  }
  static QSymElem fundamental(const DescentSet& s, Integer c = 1) {
    QSymElem out(s.degree(), Basis::fundamental);
    out.add_term(s.bits(), c);
    return out;
  }

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] Basis basis() const { return basis_; }
  [[nodiscard]] const Terms& terms() const& { return terms_; }
  [[nodiscard]] Terms terms() && { return std::move(terms_); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Integer coefficient(PositionMask key) const {
    const auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }
  [[nodiscard]] Integer coefficient(const DescentSet& s) const { return coefficient(s.bits()); }
  [[nodiscard]] Integer coefficient(const Composition& alpha) const { return coefficient(subset_of_comp(alpha)); }

  /// Dense coefficient vector of length 2^(n-1) (1 in degree 0 and 1).
  [[nodiscard]] std::vector<Integer> dense() const {
    std::vector<Integer> out(std::size_t{1} << std::max(degree_ - 1, 0), 0);
    for (const auto& [key, c] : terms_) out[key] = c;
    return out;
  }

  friend QSymElem operator+(const QSymElem& a, const QSymElem& b) {
    check_compatible(a, b);
    QSymElem out = a;
    for (const auto& [key, c] : b.terms_) out.add_term(key, c);
    return out;
  }
  friend QSymElem operator-(const QSymElem& a) { return Integer{-1} * a; }
  friend QSymElem operator-(const QSymElem& a, const QSymElem& b) { return a + (-b); }
  friend QSymElem operator*(Integer s, const QSymElem& a) {
    QSymElem out(a.degree_, a.basis_);
    for (const auto& [key, c] : a.terms_) out.add_term(key, checked::mul(s, c));
    return out;
  }

  friend bool operator==(const QSymElem&, const QSymElem&) = default;

 private:
  static void check_compatible(const QSymElem& a, const QSymElem& b) {
    if (a.degree_ != b.degree_ || a.basis_ != b.basis_) {
      throw InvalidArgument("QSym elements differ in degree or basis");
    }
  }

  void add_term(PositionMask key, Integer c) {
    if ((key & ~full_position_mask(degree_)) != 0) throw InvalidArgument("QSym key outside [n-1]");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = checked::add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree_ = 0;
  Basis basis_ = Basis::monomial;
  Terms terms_;
};

namespace detail {

// In-place superset-sum (sign = +1) or its Moebius inverse (sign = -1) over
// the subsets of a `bits`-element ground set: out[I] = sum_{J subset I} ...
inline void subset_transform(std::vector<Integer>& v, int bits, int sign) {
  for (int b = 0; b < bits; ++b) {
    const std::size_t bit = std::size_t{1} << b;
    for (std::size_t s = 0; s < v.size(); ++s) {
      if (s & bit) v[s] = sign > 0 ? checked::add(v[s], v[s ^ bit]) : checked::sub(v[s], v[s ^ bit]);
    }
  }
}

}  // namespace detail

/// F_I = sum over J containing I of M_J.
[[nodiscard]] inline QSymElem f_to_m(const QSymElem& phi) {
  if (phi.basis() != Basis::fundamental) throw InvalidArgument("f_to_m expects an F-basis element");
  std::vector<Integer> v = phi.dense();
  // coefficient of M_J = sum_{I subset J} c_I
  detail::subset_transform(v, std::max(phi.degree() - 1, 0), +1);
  return QSymElem::from_dense(phi.degree(), Basis::monomial, v);
}

/// M_I = sum over J containing I of (-1)^{|J \ I|} F_J.
[[nodiscard]] inline QSymElem m_to_f(const QSymElem& phi) {
  if (phi.basis() != Basis::monomial) throw InvalidArgument("m_to_f expects an M-basis element");
  std::vector<Integer> v = phi.dense();
  detail::subset_transform(v, std::max(phi.degree() - 1, 0), -1);
  return QSymElem::from_dense(phi.degree(), Basis::fundamental, v);
}

[[nodiscard]] inline QSymElem to_monomial(const QSymElem& phi) {
  return phi.basis() == Basis::monomial ? phi : f_to_m(phi);
}
[[nodiscard]] inline QSymElem to_fundamental(const QSymElem& phi) {
  return phi.basis() == Basis::fundamental ? phi : m_to_f(phi);
}

/// S(F_I) = (-1)^n F_{(I^op)^c}; the result is in the F basis.
[[nodiscard]] inline QSymElem antipode(const QSymElem& phi) {
  const QSymElem f = to_fundamental(phi);
  const int n = f.degree();
  const Integer sign = (n % 2 == 0) ? 1 : -1;
  QSymElem::Terms out;
  for (const auto& [key, c] : f.terms()) {
    const PositionMask image = full_position_mask(n) & ~DescentSet::opposite_mask(n, key);
    out[image] = checked::mul(sign, c);
  }
  return {n, Basis::fundamental, out};
}

[[nodiscard]] inline QSymElem antipode_f(const QSymElem& phi) { return antipode(phi); }

/// rev M_I = M_{I^op}; the result is in the M basis.
[[nodiscard]] inline QSymElem reversion(const QSymElem& phi) {
  const QSymElem m = to_monomial(phi);
  QSymElem::Terms out;
  for (const auto& [key, c] : m.terms()) out[DescentSet::opposite_mask(m.degree(), key)] = c;
  return {m.degree(), Basis::monomial, out};
}

/// True iff the M coefficients agree on all rearrangements of each composition.
[[nodiscard]] inline bool is_symmetric(const QSymElem& phi) {
  const QSymElem m = to_monomial(phi);
  struct Group {
    Integer coeff = 0;
    std::size_t present = 0;
    bool consistent = true;
  };
  std::map<std::vector<int>, Group> groups;
  for (const auto& [key, c] : m.terms()) {
    std::vector<int> parts = comp_of_subset(DescentSet(m.degree(), key)).parts();
    std::sort(parts.begin(), parts.end());
    auto [it, inserted] = groups.try_emplace(std::move(parts), Group{c, 0, true});
    if (it->second.coeff != c) it->second.consistent = false;
    ++it->second.present;
  }
  for (const auto& [parts, g] : groups) {
    if (!g.consistent) return false;
    // Every distinct rearrangement must carry the same (nonzero) coefficient.
    Integer rearrangements = checked::factorial(static_cast<int>(parts.size()));
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      rearrangements /= checked::factorial(static_cast<int>(j - i));
      i = j;
    }
    if (static_cast<Integer>(g.present) != rearrangements) return false;
  }
  return true;
}

/// ps^1(M_I)(m) = C(m, |I| + 1); degree 0 maps to the constant.
[[nodiscard]] inline Polynomial principal_specialization(const QSymElem& phi) {
  const QSymElem m = to_monomial(phi);
  if (m.degree() == 0) return Polynomial::constant(Rational(m.coefficient(PositionMask{0})));
  std::vector<Integer> by_size(static_cast<std::size_t>(m.degree()) + 1, 0);
  for (const auto& [key, c] : m.terms()) {
    Integer& slot = by_size[static_cast<std::size_t>(std::popcount(key)) + 1];
    slot = checked::add(slot, c);
  }
  Polynomial out;
  for (int k = 1; k <= m.degree(); ++k) {
    if (by_size[static_cast<std::size_t>(k)] != 0) {
      out = out + Rational(by_size[static_cast<std::size_t>(k)]) * binomial_polynomial(k);
    }
  }
  return out;
}

/// zeta_Q: the coefficient of M_(n), equivalently ps^1(phi)(1).
[[nodiscard]] inline Integer zeta_q(const QSymElem& phi) { return to_monomial(phi).coefficient(PositionMask{0}); }
[[nodiscard]] inline Integer zeta_Q(const QSymElem& phi) { return zeta_q(phi); }

/// Human-readable form, e.g. "F{} + 2F{1}" or "M(2) + 2M(1,1)"; "0" if zero.
[[nodiscard]] inline std::string to_string(const QSymElem& phi) {
  if (phi.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : phi.terms()) {
    std::string label;
    if (phi.basis() == Basis::fundamental) {
      label = "F{";
      bool first = true;
      for (int i : DescentSet(phi.degree(), key).positions()) {
        label += (first ? "" : ",") + std::to_string(i);
        first = false;
      }
      label += "}";
    } else {
      label = "M(";
      bool first = true;
      const Composition alpha = comp_of_subset(DescentSet(phi.degree(), key));
      for (int a : alpha.parts()) {
        label += (first ? "" : ",") + std::to_string(a);
        first = false;
      }
      label += ")";
    }
    const Integer mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += label;
  }
  return out;
}

[[nodiscard]] inline Integer eval_polynomial(const Polynomial& p, Integer m) { return p.evaluate_integer(m); }

}  // namespace rbsym
