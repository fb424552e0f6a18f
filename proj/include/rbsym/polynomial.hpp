#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rbsym/checked.hpp"
#include "rbsym/rational.hpp"

namespace rbsym {

/// Univariate polynomial in m with exact rational coefficients c_0..c_d.
///
/// The leading coefficient is nonzero unless the polynomial is zero (empty
/// coefficient vector). Integer-coefficient results are narrowed with
/// integer_coefficients(), which throws on a non-integral coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Integer> coeffs) {
    for (Integer c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial from_integers(const std::vector<Integer>& coeffs) {
    std::vector<Rational> r(coeffs.begin(), coeffs.end());
    return Polynomial(std::move(r));
  }
  static Polynomial constant(Rational c) { return Polynomial(std::vector<Rational>{c}); }
  /// The polynomial m.
  static Polynomial variable() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const& { return coeffs_; }
  [[nodiscard]] std::vector<Rational> coefficients() && { return std::move(coeffs_); }

  [[nodiscard]] bool is_integral() const {
    for (const Rational& c : coeffs_) {
      if (!c.is_integer()) return false;
    }
    return true;
  }

  [[nodiscard]] std::vector<Integer> integer_coefficients() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (const Rational& c : coeffs_) {
      if (!c.is_integer()) throw InvalidArgument("polynomial " + to_string() + " has a non-integer coefficient");
      out.push_back(c.to_integer());
    }
    return out;
  }

  /// Horner evaluation; exact, overflow-checked.
  [[nodiscard]] Rational evaluate(const Rational& m) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it;
    return acc;
  }
  [[nodiscard]] Integer evaluate_integer(Integer m) const { return evaluate(Rational(m)).to_integer(); }

  /// p(-m).
  [[nodiscard]] Polynomial negate_variable() const {
    std::vector<Rational> out = coeffs_;
    for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Rational> out = a.coeffs_;
    for (Rational& c : out) c = -c;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) { return constant(s) * p; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Descending powers, explicit signs, zero terms omitted: "m^3 - 3m^2 + 2m".
  [[nodiscard]] std::string to_string(const std::string& var = "m") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      const bool negative = c < Rational(0);
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      const Rational mag = negative ? -c : c;
      if (k == 0 || mag != Rational(1)) out += mag.is_integer() ? mag.str() : "(" + mag.str() + ")";
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// m(m+1)...(m+k-1); 1 for k = 0.
[[nodiscard]] inline Polynomial rising_factorial(int k) {
  Polynomial p{1};
  for (int i = 0; i < k; ++i) p = p * Polynomial{i, 1};
  return p;
}

/// m(m-1)...(m-k+1); 1 for k = 0.
[[nodiscard]] inline Polynomial falling_factorial(int k) {
  Polynomial p{1};
  for (int i = 0; i < k; ++i) p = p * Polynomial{-i, 1};
  return p;
}

/// C(m, k) = m(m-1)...(m-k+1) / k!.
[[nodiscard]] inline Polynomial binomial_polynomial(int k) {
  return Rational(1, checked::factorial(k)) * falling_factorial(k);
}

}  // namespace rbsym
