#include <gtest/gtest.h>

#include <random>

#include "ffcurve/bounds.hpp"
#include "ffcurve/curves.hpp"
#include "ffcurve/error.hpp"
#include "ffcurve/numtheory.hpp"
#include "ffcurve/sympoly.hpp"

using namespace ffc;
using namespace ffc::curves;

namespace {

// direct enumeration of affine pairs, poles skipped
std::uint64_t brute_affine(const CurveSpec& c) {
  const Field& F = c.constant_field();
  std::uint64_t n = 0;
  for (Element x : F.elements()) {
    if (c.rhs.is_pole(x)) continue;
    const Element fx = c.rhs.eval(x);
    for (Element y : F.elements()) {
      const Element lhs = c.kind == CurveKind::kKummer ? F.pow(y, c.kummer_exponent) : c.lhs.eval(y);
      if (lhs == fx) ++n;
    }
  }
  return n;
}

Polynomial random_poly(const Field& F, int deg, std::mt19937_64& rng) {
  std::vector<Element> c(deg + 1);
  for (auto& e : c) e = {static_cast<std::uint32_t>(rng() % F.order())};
  if (c.back().v == 0) c.back() = F.one();
  return Polynomial(F, c);
}

}  // namespace

TEST(Count, HermitianIsMaximal) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto H = hermitian(q);
    EXPECT_EQ(count_affine(H, H.constant_field()), q * q * q);
    EXPECT_EQ(brute_affine(H), q * q * q);
    const auto prof = splitting_profile(H, H.constant_field());
    ASSERT_TRUE(prof.degree_one_total);
    EXPECT_EQ(*prof.degree_one_total, q * q * q + 1);
    EXPECT_EQ(*prof.degree_one_total, bounds::hasse_weil_max(q * q, q * (q - 1) / 2));
    for (const auto& fp : prof.finite) EXPECT_EQ(fp.cls, PlaceClass::kSplitCompletely);
    EXPECT_EQ(prof.infinity.cls, PlaceClass::kTotallyRamified);
  }
}

TEST(Count, MatchesEnumerationOnRandomCurves) {
  std::mt19937_64 rng(7);
  for (auto [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
    const Field F = gf::make_field(p, k);
    for (int rep = 0; rep < 6; ++rep) {
      std::vector<Element> lc(k + 1);
      for (auto& e : lc) e = {static_cast<std::uint32_t>(rng() % F.order())};
      if (lc[0].v == 0) lc[0] = F.one();
      const auto as = artin_schreier(LinearizedPolynomial(F, p, lc), RationalFunction(random_poly(F, 1 + rep % 5, rng)));
      EXPECT_EQ(count_affine(as, F), brute_affine(as));
      const RationalFunction rf(random_poly(F, 2 + rep % 3, rng), random_poly(F, 1 + rep % 2, rng));
      const auto as2 = artin_schreier(LinearizedPolynomial(F, p, lc), rf);
      EXPECT_EQ(count_affine(as2, F), brute_affine(as2));
      for (std::uint64_t M : {2, 3, 4}) {
        if (M % p == 0) continue;
        const auto ku = kummer(M, rf);
        EXPECT_EQ(count_affine(ku, F), brute_affine(ku));
      }
    }
  }
}

TEST(Symmetric, PointCounts) {
  for (auto [n, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
    for (unsigned i = 2; i <= n; ++i) {
      const auto E = symmetric_curve(n, i, q);
      const auto prof = splitting_profile(E, E.constant_field());
      ASSERT_TRUE(prof.degree_one_total);
      EXPECT_EQ(*prof.degree_one_total, nt::ipow(q, 2 * n - 1) + 1) << n << " " << i << " " << q;
      EXPECT_EQ(prof.affine_total, brute_affine(E));
    }
  }
}

TEST(Symmetric, InvariantsAgreeWithHurwitz) {
  for (std::uint64_t q : {2, 3, 4}) {
    for (unsigned n = 2; n <= 4; ++n) {
      for (unsigned i = 2; i <= n; ++i) {
        const auto s = symmetric_invariants(n, i, q);
        EXPECT_EQ(s.m, s.m_coprime);
        const std::int64_t deg = static_cast<std::int64_t>(nt::ipow(q, n - 1));
        EXPECT_EQ(hurwitz_genus(0, deg, static_cast<std::int64_t>(s.d)), static_cast<std::int64_t>(s.g));
        EXPECT_LE(s.N, bounds::hasse_weil_max(nt::ipow(q, n), s.g));
      }
    }
  }
  const auto h = symmetric_invariants(2, 2, 3);
  EXPECT_EQ(h.g, 3u);
  EXPECT_EQ(h.N, 28u);
  EXPECT_THROW(symmetric_invariants(3, 1, 2), DomainError);
}

TEST(Kummer, SevenfoldCover) {
  const auto K = kummer_symmetric_curve(3, 2, 2);
  EXPECT_EQ(K.kummer_exponent, 7u);
  EXPECT_EQ(K.rhs.num(), from_terms(K.constant_field(), {"1*t^3", "1*t^5", "1*t^6"}));
  const auto prof = splitting_profile(K, K.constant_field());
  EXPECT_EQ(prof.affine_total, brute_affine(K));
  ASSERT_TRUE(prof.degree_one_total);
  EXPECT_EQ(*prof.degree_one_total, 33u);
  const auto kp = kummer_profile(3, 2, 2);
  EXPECT_EQ(kp.genus, 9);
  EXPECT_TRUE(kp.valuations_match);
}

TEST(Kummer, ProfilesConsistent) {
  for (std::uint64_t q : {2, 3, 4}) {
    for (unsigned n = 2; n <= 3; ++n) {
      for (unsigned i = 1; i < n; ++i) {
        const auto kp = kummer_profile(n, i, q);
        EXPECT_TRUE(kp.valuations_match);
        EXPECT_GE(kp.genus, 0);
        std::uint64_t dd = 0;
        for (const auto& pl : kp.places) dd += pl.count * pl.r * pl.d;
        EXPECT_EQ(dd, kp.deg_diff);
      }
    }
  }
}

TEST(DegreeM, HermitianHasNoQuadraticPlaces) {
  for (std::uint64_t q : {2, 3}) {
    const auto H = hermitian(q);
    const auto d = degree_m_places(H, H.constant_field(), 2);
    EXPECT_EQ(d.value, 0u);
    EXPECT_EQ(d.counts[1], d.counts[0]);
  }
}

TEST(DegreeM, SymmetricFiveTwoHasQuadraticPlaces) {
  // y^16+y^8+y^4+y^2+y = s_{5,2}(x) over GF(32) does pick up new points over GF(1024)
  const auto E = symmetric_curve(5, 2, 2);
  const auto d = degree_m_places(E, E.constant_field(), 2);
  EXPECT_EQ(d.counts[0], 513u);
  EXPECT_EQ(d.value, 256u);
}

TEST(DegreeM, MobiusInversionByEnumeration) {
  const Field f3 = gf::make_field(3, 1);
  const auto c = artin_schreier(LinearizedPolynomial(f3, 3, {f3.scalar(-1), f3.one()}),
                                RationalFunction(from_terms(f3, {"1*t^2", "1"})));
  const auto d = degree_m_places(c, f3, 3);
  ASSERT_EQ(d.counts.size(), 2u);
  EXPECT_EQ((d.counts[1] - d.counts[0]) % 3, 0u);
  EXPECT_EQ(d.value, (d.counts[1] - d.counts[0]) / 3);
}

TEST(Median, CoprimeExtensions) {
  for (auto [n, i, q, m] : std::vector<std::tuple<unsigned, unsigned, std::uint64_t, unsigned>>{
           {3, 2, 2, 2}, {3, 3, 2, 2}, {3, 2, 2, 4}, {2, 2, 3, 3}, {3, 2, 4, 2}, {5, 2, 2, 2}}) {
    const auto r = median_check(n, i, q, m);
    EXPECT_TRUE(r.median) << n << i << q << m << " got " << r.affine << "+" << r.at_infinity;
    EXPECT_EQ(r.expected, nt::ipow(q, m) + 1);
  }
  EXPECT_THROW(median_check(2, 2, 2, 2), DomainError);
  EXPECT_THROW(median_check(3, 2, 3, 2), DomainError);
}

TEST(Subextension, ChainComposes) {
  const Field f8 = gf::make_field(2, 3);
  std::vector<Element> V;
  const Polynomial tr = sympoly::elementary_symmetric_nq(3, 1, 2, f8);
  for (Element x : f8.elements()) {
    if (tr.eval(x).v == 0) V.push_back(x);
  }
  const LinearizedPolynomial L = sympoly::linearized_from_subgroup(f8, V);
  std::vector<Element> basis;
  for (Element v : V) {
    if (v.v != 0 && (basis.empty() || v != basis[0])) basis.push_back(v);
    if (basis.size() == 2) break;
  }
  const auto ch = subextension_chain(L, basis);
  EXPECT_TRUE(ch.composition_matches);
  EXPECT_EQ(ch.steps.size(), 2u);
  EXPECT_EQ(ch.A, f8.pow(ch.B[0], 2 - 1));
  EXPECT_THROW(subextension_chain(L, {basis[0]}), DomainError);
}

TEST(Automorphisms, PairCount) {
  for (auto [n, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    const auto rep = generalized_hermitian_automorphisms(n, q, 3);
    EXPECT_EQ(rep.pair_count, nt::ipow(q, 2 * n - 1));
    EXPECT_EQ(rep.pair_count, rep.expected);
    EXPECT_TRUE(rep.verified);
  }
}

TEST(TraceNorm, HermitianSpecialCase) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const auto r = trace_norm_ratio(2, q, 1);
    EXPECT_EQ(r.N, Rational(q * q * q + 1));
    EXPECT_EQ(r.g, Rational(q * (q - 1), 2));
  }
  const auto r = trace_norm_ratio(4, 2, 2);
  EXPECT_EQ(r.N, Rational(65));
  EXPECT_EQ(r.g, Rational(6));
  EXPECT_THROW(trace_norm_ratio(3, 2, 2), DomainError);
}

TEST(Validation, Rejects) {
  const Field f4 = gf::make_field(2, 2);
  const auto rhs = RationalFunction(Polynomial::x(f4));
  EXPECT_THROW(kummer(2, rhs), DomainError);
  EXPECT_THROW(artin_schreier(LinearizedPolynomial(f4, 2, {f4.zero(), f4.one()}), rhs), DomainError);
}
