#include <gtest/gtest.h>

#include "ffcurve/error.hpp"
#include "ffcurve/gsbasis.hpp"
#include "ffcurve/numtheory.hpp"

using namespace ffc;
using namespace ffc::gsbasis;

namespace {

using Mat = std::vector<std::vector<std::int64_t>>;

Mat mul(const Mat& a, const Mat& b, std::int64_t p) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % p;
  return c;
}

// trace(C^r) for the companion matrix of T^q + T + (-1)^q c over GF(p)
std::vector<std::int64_t> companion_power_sums(std::uint64_t q, std::int64_t p, std::int64_t c, unsigned r_max) {
  std::vector<std::int64_t> a(q, 0);  // a_0..a_{q-1}
  a[1] = 1;
  a[0] = ((q % 2 == 0 ? c : -c) % p + p) % p;
  Mat C(q, std::vector<std::int64_t>(q, 0));
  for (std::size_t i = 1; i < q; ++i) C[i][i - 1] = 1;
  for (std::size_t i = 0; i < q; ++i) C[i][q - 1] = (p - a[i]) % p;
  std::vector<std::int64_t> out;
  Mat P(q, std::vector<std::int64_t>(q, 0));
  for (std::size_t i = 0; i < q; ++i) P[i][i] = 1;
  for (unsigned r = 0; r <= r_max; ++r) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < q; ++i) t += P[i][i];
    out.push_back(t % p);
    P = mul(P, C, p);
  }
  return out;
}

}  // namespace

TEST(PowerSums, MatchCompanionMatrix) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto p = static_cast<std::int64_t>(nt::prime_power(q).first);
    const auto S = gs_power_sums(q, static_cast<unsigned>(2 * (q - 1)));
    for (std::int64_t c = 0; c < p; ++c) {
      const auto oracle = companion_power_sums(q, p, c, static_cast<unsigned>(2 * (q - 1)));
      for (std::size_t r = 0; r < S.size(); ++r) {
        EXPECT_EQ(static_cast<std::int64_t>(S[r].coeff(0).v), oracle[r]) << "q=" << q << " r=" << r;
      }
    }
  }
  EXPECT_THROW(gs_power_sums(4, 7), DomainError);
}

TEST(PowerSums, MonomialTraceIsProduct) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto p = static_cast<std::int64_t>(nt::prime_power(q).first);
    const auto S = gs_power_sums(q, static_cast<unsigned>(2 * (q - 1)));
    for (unsigned a = 0; a <= 2 * (q - 1); ++a) {
      for (unsigned b = 0; b <= 2 * (q - 1); ++b) {
        const std::int64_t prod = static_cast<std::int64_t>(S[a].coeff(0).v) * S[b].coeff(0).v % p;
        const std::int64_t t = (monomial_trace({a, b}, q) % p + p) % p;
        EXPECT_EQ(t, prod) << q << " " << a << " " << b;
      }
    }
  }
}

TEST(TraceMatrix, ReverseTriangularUnitDet) {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 8}, {2, 13}, {3, 2}, {3, 3}, {4, 2}, {4, 6}, {5, 3}}) {
    const auto m = build_trace_matrix(q, n);
    EXPECT_EQ(m.size(), nt::ipow(q, n - 1));
    EXPECT_TRUE(is_reverse_triangular(m));
    const auto d = gs_discriminant_det(q, n);
    EXPECT_TRUE(d.unit);
    EXPECT_EQ(d.det, d.structural);
  }
  EXPECT_THROW(build_trace_matrix(2, 14), CapExceeded);
  EXPECT_THROW(build_trace_matrix(6, 2), DomainError);
}

TEST(FieldDiscriminant, CharacteristicTwo) {
  const std::vector<std::pair<std::int64_t, std::int64_t>> want = {
      {2, 0}, {6, 0}, {14, 4}, {30, 12}, {62, 36}, {126, 84}, {254, 196}};
  for (unsigned n = 2; n <= 8; ++n) {
    const auto d = gs_field_discriminant(2, n);
    EXPECT_EQ(d.p_inf, want[n - 2].first) << n;
    EXPECT_EQ(d.p_zero, want[n - 2].second) << n;
    EXPECT_TRUE(d.paths_agree);
  }
}

TEST(FieldDiscriminant, PathsAgree) {
  for (std::uint64_t q : {3, 4, 5}) {
    for (unsigned n = 2; n <= 5; ++n) {
      const auto d = gs_field_discriminant(q, n);
      EXPECT_TRUE(d.paths_agree);
      EXPECT_EQ(d.p_inf, d.p_inf_recursion);
      EXPECT_EQ(d.alphas.size(), q - 1);
    }
  }
}

TEST(LocalBasis, QTwoNFour) {
  const auto v = gs_local_basis_check(2, 4);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0].set_valuation, 14);
  EXPECT_EQ(v[0].field_valuation, 14);
  EXPECT_TRUE(v[0].is_basis);
  EXPECT_EQ(v[1].place, "P_0");
  EXPECT_EQ(v[1].field_valuation, 4);
  EXPECT_FALSE(v[1].is_basis);
  EXPECT_TRUE(v[2].is_basis);
}

TEST(LocalBasis, SmallNIsBasisEverywhere) {
  for (std::uint64_t q : {2, 3}) {
    for (const auto& lv : gs_local_basis_check(q, 2)) EXPECT_TRUE(lv.is_basis) << lv.place;
  }
}
