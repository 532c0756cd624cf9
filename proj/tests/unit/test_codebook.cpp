#include <gtest/gtest.h>

#include <set>

#include "dualbent/codebook.hpp"
#include "dualbent/error.hpp"
#include "oracles.hpp"

using namespace dualbent;

namespace {

BentContext ctx_ext(std::uint32_t p, std::uint32_t n, std::uint32_t m, Code e) {
  FamilyParams P;
  P.e = e;
  return BentContext::prepare(make_bent(Family::ext_square, p, {n}, m, 0, P));
}

Code prim(std::uint32_t p, std::uint32_t k) { return get_field(p, k)->primitive(); }

// Pairwise magnitudes summed with std::polar, bucketed at 1e-9.
std::map<long long, std::uint64_t> oracle_spectrum(const Codebook& C) {
  std::vector<double> mags;
  for (std::uint32_t i = 0; i < C.N; ++i)
    for (std::uint32_t k = 0; k < C.N; ++k)
      if (i != k) mags.push_back(oracle::correlation(int(C.p), C.row(i).data(), C.row(k).data(), C.K));
  return oracle::bucket(mags);
}

std::map<long long, std::uint64_t> as_buckets(const Spectrum& s) {
  std::map<long long, std::uint64_t> m;
  for (const auto& e : s.entries) m[std::llround(e.magnitude * 1e9)] += e.count;
  return m;
}

}  // namespace

TEST(Codebook, CdOnNineMatchesOracle) {
  const auto c = ctx_ext(3, 2, 1, prim(3, 2));
  const auto C = build_cd(c);
  EXPECT_EQ(C.N, 9u);
  EXPECT_EQ(C.K, 4u);
  EXPECT_TRUE(C.rows_distinct());
  const auto expect = std::map<long long, std::uint64_t>{{250000000, 36}, {500000000, 36}};
  EXPECT_EQ(oracle_spectrum(C), expect);
  const auto s = spectrum(C, SpectrumMode::pairwise);
  EXPECT_EQ(as_buckets(s), expect);
  EXPECT_DOUBLE_EQ(s.imax, 0.5);
  EXPECT_NEAR(s.welch, 0.395284707521, 1e-11);
  EXPECT_NEAR(s.ratio, 1.26491106407, 1e-10);
}

TEST(Codebook, HadamardOnNineMatchesOracle) {
  const auto c = ctx_ext(3, 2, 1, prim(3, 2));
  const auto C = build_partial_hadamard(c);
  EXPECT_EQ(C.N, 9u);
  EXPECT_EQ(C.K, 5u);
  EXPECT_EQ(oracle_spectrum(C), (std::map<long long, std::uint64_t>{{200000000, 36}, {400000000, 36}}));
}

TEST(Codebook, HadamardMatrixIsOrthogonal) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {3, 2}, {5, 1}, {3, 3}}) {
    const auto H = hadamard_matrix(p, n);
    const std::uint32_t N = ipow(p, n);
    ASSERT_EQ(H.size(), std::size_t(N) * N);
    for (std::uint32_t i = 0; i < N; ++i) {
      EXPECT_EQ(H[i], 0);
      EXPECT_EQ(H[i * N], 0);
      for (std::uint32_t k = i + 1; k < N; ++k)
        ASSERT_LT(oracle::correlation(int(p), &H[i * N], &H[k * N], N), 1e-9);
    }
    // entries are Tr(alpha^{i+j-2}) away from the border
    const oracle::Field o(int(p), n);
    for (std::uint32_t i = 1; i < N; ++i)
      for (std::uint32_t j = 1; j < N; ++j) ASSERT_EQ(H[i * N + j], o.trace(o.pow(o.alpha(), i + j - 2)));
  }
}

TEST(Codebook, RowSelectionCountsQuadraticNonresidues) {
  const auto c = ctx_ext(3, 4, 1, 1);
  const auto r = row_selection(c);
  ASSERT_EQ(r.size(), 81u);
  EXPECT_EQ(r[0], 1);
  std::uint64_t ones = 0;
  for (auto v : r) ones += v;
  EXPECT_EQ(ones, 1 + counts(c, CountTarget::function, CountMethod::enumerate).n_minus1);
  EXPECT_EQ(build_partial_hadamard(c).K, ones);
}

TEST(Codebook, WelchExamples) {
  EXPECT_NEAR(welch_bound(9, 4), std::sqrt(5.0 / 32.0), 1e-15);
  EXPECT_NEAR(welch_bound(9, 5), std::sqrt(4.0 / 40.0), 1e-15);
  EXPECT_DOUBLE_EQ(welch_bound(2, 2), 0.0);
}

TEST(Codebook, TranslateModeEqualsPairwise) {
  for (auto [p, n, m, e] : std::vector<std::array<std::uint32_t, 4>>{
           {3, 2, 1, prim(3, 2)}, {3, 4, 1, 1}, {3, 4, 2, prim(3, 4)}, {5, 2, 1, 1}, {3, 3, 1, 1}, {3, 5, 1, 1}}) {
    const auto c = ctx_ext(p, n, m, e);
    const auto C = c.spec.condition == Condition::I ? build_cd(c) : build_cd1(c);
    const auto a = spectrum(C, SpectrumMode::pairwise);
    const auto b = spectrum(C, SpectrumMode::translate);
    EXPECT_EQ(as_buckets(a), as_buckets(b));
    EXPECT_DOUBLE_EQ(a.imax, b.imax);
  }
}

TEST(Codebook, SpectrumEqualsClosedForm) {
  for (auto [p, n, m, e] : std::vector<std::array<std::uint32_t, 4>>{
           {3, 2, 1, prim(3, 2)}, {3, 4, 1, 1}, {3, 4, 2, prim(3, 4)}, {3, 3, 1, 1}, {3, 5, 1, 1}, {5, 2, 1, 1}}) {
    SCOPED_TRACE(std::to_string(p) + "," + std::to_string(n) + "," + std::to_string(m));
    const auto c = ctx_ext(p, n, m, e);
    std::vector<std::pair<Construction, Codebook>> books;
    if (c.spec.condition == Condition::I) {
      books.push_back({Construction::cd, build_cd(c)});
      books.push_back({Construction::hadamard, build_partial_hadamard(c)});
    } else {
      books.push_back({Construction::cd1, build_cd1(c)});
    }
    for (const auto& [kind, C] : books) {
      const auto mode = kind == Construction::hadamard ? SpectrumMode::pairwise : SpectrumMode::translate;
      EXPECT_EQ(as_buckets(spectrum(C, mode)), as_buckets(closed_spectrum(kind, c))) << to_string(kind);
    }
  }
}

TEST(Codebook, ClosedSpectrumFromParametersFrozen) {
  const auto s = closed_spectrum(Construction::cd1, 3, 5, 1, Complex(0, 1));
  EXPECT_EQ(s.N, 243u);
  EXPECT_EQ(s.K, 80u);
  EXPECT_EQ(as_buckets(s), (std::map<long long, std::uint64_t>{{12500000, 19440}, {100000000, 21870}, {125000000, 17496}}));
}

TEST(Codebook, HadamardTransformMagnitudesMatchClosedSpectrum) {
  const auto c = ctx_ext(3, 4, 2, prim(3, 4));
  const auto mags = hadamard_transform_magnitudes(c);
  ASSERT_EQ(mags.size(), 80u);
  const auto cl = closed_spectrum(Construction::hadamard, c);
  std::set<long long> allowed;
  for (const auto& e : cl.entries) allowed.insert(std::llround(e.magnitude * 1e9));
  for (double v : mags) EXPECT_TRUE(allowed.count(std::llround(v * 1e9))) << v;
}

TEST(Codebook, SequenceCorrelationSmallestCase) {
  const auto c = ctx_ext(3, 2, 1, 1);
  const auto v = seq_crosscorr(c);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_DOUBLE_EQ(v[0].value, -5);
  EXPECT_EQ(v[0].count, 2u);
  EXPECT_DOUBLE_EQ(v[1].value, 1);
  EXPECT_EQ(v[1].count, 6u);
  const auto cl = seq_crosscorr_closed(c);
  ASSERT_EQ(cl.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_NEAR(cl[i].value, v[i].value, 1e-9);
    EXPECT_EQ(cl[i].count, v[i].count);
  }
}

TEST(Codebook, JsonRoundTrip) {
  const auto C = build_cd(ctx_ext(3, 4, 1, 1));
  const auto back = codebook_from_json(to_json(C));
  EXPECT_EQ(back.N, C.N);
  EXPECT_EQ(back.K, C.K);
  EXPECT_EQ(back.p, C.p);
  EXPECT_EQ(back.entries, C.entries);
  EXPECT_EQ(back.labels, C.labels);
  EXPECT_EQ(back.construction, C.construction);
}

TEST(Codebook, ThreadCountDoesNotChangeResults) {
  const auto c = ctx_ext(3, 4, 1, 1);
  const auto C = build_cd(c);
  const auto a = to_json(spectrum(C, SpectrumMode::pairwise, 1));
  const auto b = to_json(spectrum(C, SpectrumMode::pairwise, 3));
  const auto t = to_json(spectrum(C, SpectrumMode::translate, 5));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a.dump(), t.dump());
}

// With K = 2 the set D has two antipodal points and rows b, -b coincide.
TEST(Codebook, TinyPositiveSignInstanceRepeatsRows) {
  const auto c = ctx_ext(3, 2, 1, 1);
  EXPECT_EQ(build_cd(c).K, 2u);
  EXPECT_FALSE(build_cd(c).rows_distinct());
  EXPECT_FALSE(build_partial_hadamard(c).rows_distinct());
}

TEST(Codebook, TranslateNeedsFullLabelSet) {
  const auto C = build_partial_hadamard(ctx_ext(3, 2, 1, prim(3, 2)));
  EXPECT_THROW(spectrum(C, SpectrumMode::translate), InvalidArgument);
  EXPECT_THROW(parse_spectrum_mode("fast"), InvalidArgument);
  EXPECT_THROW(parse_construction("cd2"), InvalidArgument);
}

TEST(Codebook, RatioBoundValues) {
  EXPECT_NEAR(ratio_bound(Construction::cd, 3), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(ratio_bound(Construction::cd1, 3), std::sqrt(1.5), 1e-15);
  EXPECT_TRUE(std::isinf(ratio_bound(Construction::hadamard, 3)));
}
