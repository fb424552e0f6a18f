#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "oracle.hpp"
#include "rbsym/qsym.hpp"

using namespace rbsym;

namespace {

QSymElem random_element(int n, Basis b, std::mt19937_64& rng) {
  std::uniform_int_distribution<Integer> coeff(-5, 5);
  std::vector<Integer> dense(std::size_t{1} << std::max(n - 1, 0));
  for (Integer& c : dense) c = coeff(rng);
  return QSymElem::from_dense(n, b, dense);
}

// All coarsenings of a composition (merging adjacent parts).
std::vector<std::vector<int>> coarsenings(const std::vector<int>& parts) {
  if (parts.size() <= 1) return {parts};
  std::vector<std::vector<int>> out;
  std::vector<int> tail(parts.begin() + 1, parts.end());
  for (std::vector<int> c : coarsenings(tail)) {
    std::vector<int> split = c;
    split.insert(split.begin(), parts[0]);
    out.push_back(split);
    c[0] += parts[0];
    out.push_back(c);
  }
  return out;
}

// S(M_alpha) = (-1)^{l(alpha)} sum over coarsenings beta of rev(alpha) of M_beta.
QSymElem antipode_in_m(const QSymElem& phi) {
  QSymElem out(phi.degree(), Basis::monomial);
  for (const auto& [key, c] : phi.terms()) {
    std::vector<int> parts = comp_of_subset(DescentSet(phi.degree(), key)).parts();
    const Integer sign = parts.size() % 2 == 0 ? 1 : -1;
    std::reverse(parts.begin(), parts.end());
    for (const auto& beta : coarsenings(parts)) {
      out = out + QSymElem::monomial(Composition(beta), sign * c);
    }
  }
  return out;
}

}  // namespace

TEST(Composition, SubsetBijection) {
  EXPECT_EQ(subset_of_comp(Composition{2, 1, 3}).positions(), (std::vector<int>{2, 3}));
  EXPECT_EQ(comp_of_subset(DescentSet(6, {2, 3})).parts(), (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(comp_of_subset(DescentSet(0, PositionMask{0})).parts(), std::vector<int>{});
  for (int n = 1; n <= 7; ++n) {
    for (PositionMask m = 0; m < (PositionMask{1} << (n - 1)); ++m) {
      const DescentSet s(n, m);
      EXPECT_EQ(subset_of_comp(comp_of_subset(s)), s);
      EXPECT_EQ(comp_of_subset(s).degree(), n);
    }
  }
  EXPECT_THROW(Composition({2, 0}), InvalidArgument);
}

TEST(Composition, OppositeAndComplement) {
  const DescentSet s(5, {1, 2});
  EXPECT_EQ(s.opposite().positions(), (std::vector<int>{3, 4}));
  EXPECT_EQ(s.complement().positions(), (std::vector<int>{3, 4}));
  EXPECT_EQ(DescentSet(5, {1}).opposite().positions(), (std::vector<int>{4}));
  EXPECT_THROW(DescentSet(3, {3}), InvalidArgument);
}

TEST(QSym, FundamentalToMonomialByDefinition) {
  // F_I = sum over J containing I of M_J.
  for (int n = 1; n <= 5; ++n) {
    const PositionMask full = full_position_mask(n);
    for (PositionMask i = 0; i <= full; ++i) {
      const QSymElem m = f_to_m(QSymElem::fundamental(DescentSet(n, i)));
      for (PositionMask j = 0; j <= full; ++j) EXPECT_EQ(m.coefficient(j), (j & i) == i ? 1 : 0);
    }
  }
  EXPECT_EQ(to_string(f_to_m(QSymElem::fundamental(DescentSet(3, {1})))), "M(1,2) + M(1,1,1)");
}

TEST(QSym, BasisChangeRoundTrip) {
  std::mt19937_64 rng(1);
  for (int n = 0; n <= 7; ++n) {
    const QSymElem f = random_element(n, Basis::fundamental, rng);
    EXPECT_EQ(m_to_f(f_to_m(f)), f);
    const QSymElem m = random_element(n, Basis::monomial, rng);
    EXPECT_EQ(f_to_m(m_to_f(m)), m);
  }
  EXPECT_THROW((void)f_to_m(QSymElem(2, Basis::monomial)), InvalidArgument);
}

TEST(QSym, ArithmeticAndValidation) {
  const QSymElem a = QSymElem::fundamental(DescentSet(3, {1}), 2);
  const QSymElem b = QSymElem::fundamental(DescentSet(3, {1}), -2);
  EXPECT_TRUE((a + b).is_zero());
  EXPECT_EQ(to_string(a + b), "0");
  EXPECT_EQ(3 * a, a + a + a);
  EXPECT_THROW((void)(a + QSymElem(4, Basis::fundamental)), InvalidArgument);
  EXPECT_THROW((void)(a + QSymElem(3, Basis::monomial)), InvalidArgument);
  EXPECT_THROW((void)QSymElem(2, Basis::monomial, {{PositionMask{0b10}, 1}}), InvalidArgument);
  EXPECT_EQ(to_string(QSymElem::fundamental(DescentSet(2, PositionMask{0})) - 3 * QSymElem::fundamental(DescentSet(2, {1}))),
            "F{} - 3F{1}");
}

TEST(QSym, AntipodeOnFundamentals) {
  // S(F_{}) in degree 2 is F_{1}; S(F_{1}) in degree 3 is -F_{1}.
  EXPECT_EQ(antipode(QSymElem::fundamental(DescentSet(2, PositionMask{0}))),
            QSymElem::fundamental(DescentSet(2, {1})));
  EXPECT_EQ(antipode(QSymElem::fundamental(DescentSet(3, {1}))), QSymElem::fundamental(DescentSet(3, {1}), -1));
  EXPECT_EQ(antipode(QSymElem::fundamental(DescentSet(1, PositionMask{0}))),
            QSymElem::fundamental(DescentSet(1, PositionMask{0}), -1));
}

TEST(QSym, AntipodeMatchesMonomialFormula) {
  std::mt19937_64 rng(2);
  for (int n = 0; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const QSymElem f = random_element(n, Basis::fundamental, rng);
      EXPECT_EQ(f_to_m(antipode(f)), antipode_in_m(f_to_m(f))) << "n=" << n;
    }
  }
}

TEST(QSym, AntipodeIsAnInvolution) {
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 6; ++n) {
    const QSymElem f = random_element(n, Basis::fundamental, rng);
    EXPECT_EQ(antipode(antipode(f)), f);
  }
}

TEST(QSym, Reversion) {
  EXPECT_EQ(reversion(QSymElem::monomial(Composition{2, 1})), QSymElem::monomial(Composition{1, 2}));
  std::mt19937_64 rng(4);
  const QSymElem m = random_element(5, Basis::monomial, rng);
  EXPECT_EQ(reversion(reversion(m)), m);
}

TEST(QSym, Symmetry) {
  const QSymElem m21 = QSymElem::monomial(Composition{2, 1});
  const QSymElem m12 = QSymElem::monomial(Composition{1, 2});
  EXPECT_FALSE(is_symmetric(m21));
  EXPECT_TRUE(is_symmetric(m21 + m12));
  EXPECT_FALSE(is_symmetric(m21 + 2 * m12));
  EXPECT_TRUE(is_symmetric(QSymElem::monomial(Composition{3})));
  // F_{} + F_{1} = M_(2) + 2 M_(1,1) = h_2 + e_2, symmetric; F_{1} alone is not.
  EXPECT_TRUE(is_symmetric(QSymElem::fundamental(DescentSet(2, PositionMask{0})) +
                           QSymElem::fundamental(DescentSet(2, {1}))));
  EXPECT_FALSE(is_symmetric(QSymElem::fundamental(DescentSet(3, {1}))));
  const QSymElem m = QSymElem::monomial(Composition{1, 1, 2}) + QSymElem::monomial(Composition{1, 2, 1}) +
                     QSymElem::monomial(Composition{2, 1, 1});
  EXPECT_TRUE(is_symmetric(m));
  EXPECT_TRUE(is_symmetric(QSymElem(4, Basis::monomial)));
}

TEST(QSym, PrincipalSpecializationOfFundamentals) {
  // ps(F_I)(m) counts 1 <= i_1 <= ... <= i_n <= m, strict at I: C(m - |I| + n - 1, n).
  for (int n = 1; n <= 5; ++n) {
    for (PositionMask i = 0; i <= full_position_mask(n); ++i) {
      const Polynomial p = principal_specialization(QSymElem::fundamental(DescentSet(n, i)));
      const int k = std::popcount(i);
      for (Integer m = 0; m <= 8; ++m) {
        EXPECT_EQ(p.evaluate_integer(m), oracle::binom(m - k + n - 1, n)) << n << ' ' << i << ' ' << m;
      }
    }
  }
  EXPECT_EQ(principal_specialization(QSymElem(0, Basis::monomial, {{0, 5}})), Polynomial{5});
}

TEST(QSym, ZetaQIsCoefficientOfTheOnePartComposition) {
  const QSymElem f = QSymElem::fundamental(DescentSet(3, PositionMask{0})) +
                     QSymElem::fundamental(DescentSet(3, {1}));
  EXPECT_EQ(zeta_q(f), 1);
  EXPECT_EQ(zeta_q(f), principal_specialization(f).evaluate_integer(1));
}

TEST(QSym, Rendering) {
  EXPECT_EQ(to_string(QSymElem::monomial(Composition{2}) + QSymElem::monomial(Composition{1, 1}, 2)),
            "M(2) + 2M(1,1)");
  EXPECT_EQ(to_string(QSymElem::fundamental(DescentSet(3, {1, 2}), -1)), "-F{1,2}");
}

TEST(QSym, SmallExamples) {
  EXPECT_EQ(subset_of_comp(Composition{2, 1, 1}), DescentSet(4, {2, 3}));
  EXPECT_EQ(comp_of_subset(DescentSet(3, PositionMask{0})), Composition{3});
  EXPECT_EQ(f_to_m(QSymElem::fundamental(DescentSet(2, PositionMask{0}))),
            QSymElem::monomial(Composition{2}) + QSymElem::monomial(Composition{1, 1}));
  EXPECT_EQ(f_to_m(QSymElem::fundamental(DescentSet(4, {1, 2, 3}))), QSymElem::monomial(Composition{1, 1, 1, 1}));
  const QSymElem sym = QSymElem::monomial(Composition{2, 1}) + QSymElem::monomial(Composition{1, 2});
  EXPECT_EQ(reversion(sym), sym);
  EXPECT_EQ(principal_specialization(QSymElem::monomial(Composition{1, 1})), binomial_polynomial(2));
  EXPECT_EQ(principal_specialization(QSymElem::monomial(Composition{4})), Polynomial::variable());
  EXPECT_EQ(principal_specialization(QSymElem::fundamental(DescentSet(2, PositionMask{0}))),
            binomial_polynomial(1) + binomial_polynomial(2));
  EXPECT_EQ(zeta_q(QSymElem::monomial(Composition{3})), 1);
  EXPECT_EQ(zeta_q(QSymElem::monomial(Composition{1, 2})), 0);
  EXPECT_EQ(zeta_Q(QSymElem::monomial(Composition{3}, 4)), 4);
  EXPECT_EQ(antipode_f(QSymElem::fundamental(DescentSet(1, PositionMask{0}))),
            QSymElem::fundamental(DescentSet(1, PositionMask{0}), -1));
  EXPECT_EQ(eval_polynomial(Polynomial{0, 0, 1}, -3), 9);
  EXPECT_EQ(eval_polynomial(Polynomial{0, 1, 1}, -1), 0);
}
