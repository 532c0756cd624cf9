#include <gtest/gtest.h>

#include "dualbent/error.hpp"
#include "dualbent/space.hpp"
#include "oracles.hpp"

using namespace dualbent;

TEST(Space, InnerProductExamples) {
  const VectorSpace f9(3, {2});
  EXPECT_EQ(f9.inner_product(1, 1), 2u);
  for (Code a = 0; a < 9; ++a) EXPECT_EQ(f9.inner_product(a, 0), 0u);

  const VectorSpace f3f3(3, {1, 1});
  const Code a = f3f3.encode(std::vector<Code>{1, 2});
  const Code b = f3f3.encode(std::vector<Code>{2, 2});
  EXPECT_EQ(f3f3.inner_product(a, b), 0u);
}

TEST(Space, InnerProductIsSymmetricBilinearNondegenerate) {
  for (const auto& deg : std::vector<std::vector<std::uint32_t>>{{2}, {1, 1}, {2, 2}, {1, 2, 2}, {3, 3}, {6}}) {
    const VectorSpace V(3, deg);
    for (Code a = 1; a < V.size(); ++a) {
      bool found = false;
      for (Code b = 0; b < V.size(); ++b) {
        const auto ab = V.inner_product(a, b);
        ASSERT_EQ(ab, V.inner_product(b, a));
        found = found || ab != 0;
        if (b < 20) ASSERT_EQ(V.inner_product(V.add(a, b), a), (V.inner_product(a, a) + V.inner_product(b, a)) % 3);
      }
      ASSERT_TRUE(found) << "a = " << a;
    }
  }
}

TEST(Space, InnerProductAgreesWithTraceOracle) {
  const VectorSpace V(3, {2, 3});
  const oracle::Field f9(3, 2), f27(3, 3);
  for (Code a = 0; a < V.size(); a += 7)
    for (Code b = 0; b < V.size(); b += 5) {
      const auto x = V.decode(a), y = V.decode(b);
      const int expect = (f9.trace(f9.mul(x[0], y[0])) + f27.trace(f27.mul(x[1], y[1]))) % 3;
      ASSERT_EQ(V.inner_product(a, b), std::uint32_t(expect));
    }
}

TEST(Space, RowsAndFunctionalsMatchInnerProduct) {
  const VectorSpace V(5, {1, 2});
  for (Code a = 0; a < V.size(); a += 11) {
    const auto row = V.inner_product_row(a);
    for (Code x = 0; x < V.size(); ++x) ASSERT_EQ(row[x], V.inner_product(a, x));
  }
}

TEST(Space, EncodingIsLexicographicFirstPartMostSignificant) {
  const VectorSpace V(3, {1, 1});
  const auto all = enumerate(V);
  ASSERT_EQ(all.size(), 9u);
  for (Code i = 0; i < 9; ++i) {
    EXPECT_EQ(all[i].parts[0].code(), i / 3);
    EXPECT_EQ(all[i].parts[1].code(), i % 3);
    EXPECT_EQ(V.code(all[i]), i);
  }
}

TEST(Space, AdditionAndScaling) {
  const VectorSpace V(3, {2, 2});
  const auto f9 = get_field(3, 2);
  for (Code a = 0; a < V.size(); ++a) {
    EXPECT_EQ(V.add(a, V.neg(a)), 0u);
    const auto s = V.decode(V.scale(FieldElem(f9, 3), a));
    const auto d = V.decode(a);
    EXPECT_EQ(s[0], f9->mul(3, d[0]));
    EXPECT_EQ(s[1], f9->mul(3, d[1]));
  }
  EXPECT_THROW(V.scale(FieldElem(get_field(3, 3), 1), 1), InvalidArgument);
}

TEST(Space, MismatchedElementsAreRejected) {
  const VectorSpace V(3, {2});
  VecElem x{{FieldElem(get_field(3, 3), 1)}};
  EXPECT_THROW(V.code(x), DomainMismatch);
}
