#include <gtest/gtest.h>

#include "dualbent/characters.hpp"
#include "dualbent/error.hpp"
#include "oracles.hpp"

using namespace dualbent;

TEST(Characters, AdditiveExamples) {
  const auto f9 = get_field(3, 2);
  EXPECT_NEAR(std::abs(additive_character(FieldElem(f9, 1), FieldElem(f9, 0)) - Complex(1, 0)), 0, 1e-15);
  // Tr(1) = 2 in GF(9)
  EXPECT_NEAR(std::abs(additive_character(FieldElem(f9, 1), FieldElem(f9, 1)) - oracle::zeta(3, 2)), 0, 1e-15);
  const VectorSpace V(3, {1, 1});
  EXPECT_NEAR(std::abs(additive_character(V, V.encode(std::vector<Code>{1, 2}), V.encode(std::vector<Code>{2, 2})) - 1.0),
              0, 1e-15);
}

TEST(Characters, AdditiveOrthogonality) {
  const VectorSpace V(3, {2, 1});
  for (Code a = 1; a < V.size(); ++a) {
    Complex s{0, 0};
    for (Code x = 0; x < V.size(); ++x) s += additive_character(V, a, x);
    ASSERT_LT(std::abs(s), 1e-12) << a;
  }
}

TEST(Characters, MultiplicativeValuesMatchOracle) {
  const auto f = get_field(5, 2);
  const oracle::Field o(5, 2);
  for (std::int64_t j : {0, 1, 6, 12, 23}) {
    const MultChar psi(f, j);
    for (Code x = 0; x < f->size(); ++x) ASSERT_LT(std::abs(psi(x) - oracle::mult_char(o, j, x)), 1e-12);
  }
  EXPECT_EQ(MultChar(f, -1).index(), 23u);
  EXPECT_EQ(MultChar(f, 6).order(), 4u);
  EXPECT_TRUE(MultChar(f, 24).is_trivial());
}

TEST(Characters, MultiplicativeOrthogonalityAndGroupLaw) {
  const auto f = get_field(3, 3);
  for (std::int64_t j = 1; j < 26; ++j) {
    const MultChar psi(f, j);
    Complex s{0, 0};
    for (Code x = 1; x < f->size(); ++x) s += psi(x);
    ASSERT_LT(std::abs(s), 1e-12);
    const MultChar prod = psi * MultChar(f, 5);
    EXPECT_EQ(prod.index(), std::uint32_t((j + 5) % 26));
    EXPECT_TRUE((psi * psi.conj()).is_trivial());
  }
}

TEST(Characters, QuadraticCharacterIsEta) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {5, 1}, {5, 3}, {7, 2}}) {
    const auto f = get_field(p, k);
    const oracle::Field o(int(p), k);
    const auto eta_c = quadratic_character(f);
    EXPECT_EQ(eta_c.order(), 2u);
    int sum = 0;
    for (Code x = 0; x < f->size(); ++x) {
      ASSERT_EQ(eta(*f, x), o.eta(x));
      ASSERT_LT(std::abs(eta_c(x) - double(o.eta(x))), 1e-12);
      sum += eta(*f, x);
    }
    EXPECT_EQ(sum, 0);
  }
}

TEST(Characters, GaussSumsMatchOracleAndClassicalProperties) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {3, 3}, {5, 2}}) {
    const auto f = get_field(p, k);
    const oracle::Field o(int(p), k);
    const double q = f->size();
    for (std::uint32_t j = 0; j + 1 < f->size(); ++j) {
      const MultChar psi(f, j);
      for (Code a : {Code{1}, f->primitive(), Code(f->size() - 1)}) {
        const Complex g = gauss_sum(psi, a);
        ASSERT_LT(std::abs(g - oracle::gauss(o, j, a)), 1e-9);
        if (j == 0)
          ASSERT_LT(std::abs(g + 1.0), 1e-9);
        else
          ASSERT_NEAR(std::abs(g), std::sqrt(q), 1e-9);
        // G(psi, lambda_a) = conj(psi(a)) G(psi, lambda_1)
        ASSERT_LT(std::abs(g - std::conj(psi(a)) * gauss_sum(psi, 1)), 1e-9);
      }
      if (j) {
        // G(psi) G(conj psi) = psi(-1) q
        const Complex lhs = gauss_sum(psi, 1) * gauss_sum(psi.conj(), 1);
        ASSERT_LT(std::abs(lhs - psi(f->neg(1)) * q), 1e-8);
      }
    }
  }
}

TEST(Characters, QuadraticGaussClosedForm) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 1}, {5, 2}, {5, 3}, {7, 1}, {7, 2}, {7, 3}, {11, 2}, {13, 2}}) {
    const auto f = get_field(p, k);
    const oracle::Field o(int(p), k);
    const Complex brute = oracle::gauss(o, (f->size() - 1) / 2, 1);
    EXPECT_LT(std::abs(gauss_sum_quadratic_closed(*f) - brute), 1e-8) << p << "^" << k;
  }
  // p = 3, m = 1: i sqrt(3); m = 2: 3
  EXPECT_LT(std::abs(gauss_sum_quadratic_closed(*get_field(3, 1)) - Complex(0, std::sqrt(3.0))), 1e-12);
  EXPECT_LT(std::abs(gauss_sum_quadratic_closed(*get_field(3, 2)) - Complex(3, 0)), 1e-12);
  EXPECT_LT(std::abs(gauss_sum_quadratic_closed(*get_field(5, 1)) - Complex(std::sqrt(5.0), 0)), 1e-12);
}

TEST(Characters, FourierExpansionsHold) {
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {5, 1}, {5, 2}, {3, 3}}) {
    const auto f = get_field(p, k);
    for (Code x = 0; x < f->size(); ++x) {
      for (std::uint32_t j = 0; j + 1 < f->size(); ++j) {
        if (j == 0 && x == 0) continue;
        ASSERT_LT(fourier_residual(FourierKind::mult_via_add, f, j, x), 1e-9) << "j=" << j << " x=" << x;
      }
      if (x == 0) continue;
      for (Code a = 0; a < f->size(); ++a)
        ASSERT_LT(fourier_residual(FourierKind::add_via_mult, f, a, x), 1e-9) << "a=" << a << " x=" << x;
    }
  }
}

// With psi_0(0) = 1 the expansion of the trivial character gives 0 at x = 0,
// a mismatch of exactly 1.
TEST(Characters, TrivialCharacterExpansionMissesZero) {
  const auto f = get_field(3, 2);
  EXPECT_NEAR(fourier_residual(FourierKind::mult_via_add, f, 0, 0), 1.0, 1e-12);
  EXPECT_LT(fourier_residual(FourierKind::mult_via_add, f, 1, 0), 1e-12);
}

TEST(Characters, AdditiveExpansionRejectsZero) {
  EXPECT_THROW(fourier_residual(FourierKind::add_via_mult, get_field(3, 2), 1, 0), OutsideDomain);
}

TEST(Characters, MixedFieldsRejected) {
  EXPECT_THROW(MultChar(get_field(3, 2), 1) * MultChar(get_field(3, 3), 1), DomainMismatch);
  EXPECT_THROW(additive_character(FieldElem(get_field(3, 2), 1), FieldElem(get_field(3, 3), 1)), DomainMismatch);
}
