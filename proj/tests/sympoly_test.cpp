#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "ffcurve/error.hpp"
#include "ffcurve/numtheory.hpp"
#include "ffcurve/sympoly.hpp"

using namespace ffc;
using namespace ffc::sympoly;

namespace {

std::uint64_t binom(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

Field ext(std::uint64_t q, unsigned n) {
  const Field fq = gf::field_of_order(q);
  return gf::make_field(fq.p(), fq.k() * n);
}

}  // namespace

TEST(Snq, Examples) {
  const Field f8 = gf::make_field(2, 3);
  EXPECT_EQ(to_terms(elementary_symmetric_nq(3, 2, 2, f8)), (std::vector<std::string>{"1*t^3", "1*t^5", "1*t^6"}));
  const Field f9 = gf::make_field(3, 2);
  EXPECT_EQ(to_terms(elementary_symmetric_nq(2, 2, 3, f9)), (std::vector<std::string>{"1*t^4"}));
  EXPECT_EQ(to_terms(elementary_symmetric_nq(3, 1, 2, f8)), (std::vector<std::string>{"1*t^1", "1*t^2", "1*t^4"}));
  EXPECT_THROW(elementary_symmetric_nq(3, 4, 2, f8), DomainError);
}

TEST(Snq, TermCountAndDegree) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field fp = gf::make_field(gf::field_of_order(q).p(), 1);
    for (unsigned n = 1; n <= 4; ++n) {
      for (unsigned i = 1; i <= n; ++i) {
        const Polynomial s = elementary_symmetric_nq(n, i, q, fp);
        EXPECT_EQ(s.term_count(), binom(n, i));
        std::uint64_t deg = 0;
        for (unsigned j = 1; j <= i; ++j) deg += nt::ipow(q, n - j);
        EXPECT_EQ(static_cast<std::uint64_t>(s.degree()), deg);
      }
    }
  }
}

TEST(Snq, DerivativeIdentity) {
  // t^6+t^5+t^3 has derivative t^4+t^2 = (t^2+t)^2
  EXPECT_TRUE(derivative_identity_check(3, 2, 2));
  EXPECT_TRUE(derivative_identity_check(4, 3, 3));
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (unsigned n = 2; n <= 4; ++n) {
      for (unsigned i = 1; i <= n; ++i) EXPECT_TRUE(derivative_identity_check(n, i, q)) << n << i << q;
    }
  }
}

TEST(Snq, ReciprocalRoots) {
  EXPECT_TRUE(reciprocal_root_check(2, 1, 2, gf::make_field(2, 2)));
  EXPECT_TRUE(reciprocal_root_check(3, 1, 2, gf::make_field(2, 3)));
  for (std::uint64_t q : {2, 3, 4}) {
    for (unsigned n = 2; n <= 4; ++n) {
      for (unsigned i = 1; i < n; ++i) EXPECT_TRUE(reciprocal_root_check(n, i, q, ext(q, n)));
    }
  }
}

TEST(Snq, RootFieldProfile) {
  const auto trace = root_field_profile(3, 1, 2);
  EXPECT_EQ(trace.roots_in.at(3).size(), 4u);
  for (const auto& r : trace.roots_in.at(3)) EXPECT_EQ(r.multiplicity, 1u);
  const auto norm = root_field_profile(3, 3, 2);
  ASSERT_EQ(norm.roots_in.at(1).size(), 1u);
  EXPECT_EQ(norm.roots_in.at(1)[0].root.v, 0u);
  EXPECT_EQ(norm.roots_in.at(1)[0].multiplicity, 7u);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (unsigned n = 2; n <= 4; ++n) {
      for (unsigned i = 1; i <= n; ++i) {
        const auto prof = root_field_profile(n, i, q);
        EXPECT_EQ(prof.counted, prof.degree);
        EXPECT_TRUE(prof.coprime_roots_in_qn);
        EXPECT_TRUE(prof.multiple_root_pattern);
      }
    }
  }
}

TEST(Snq, PermutationLemma) {
  EXPECT_TRUE(is_permutation_poly(elementary_symmetric_nq(3, 1, 2, gf::make_field(2, 1)), gf::make_field(2, 2)));
  EXPECT_FALSE(is_permutation_poly(elementary_symmetric_nq(2, 1, 2, gf::make_field(2, 2)), gf::make_field(2, 2)));
  EXPECT_TRUE(is_permutation_poly(Polynomial::x(gf::make_field(5, 1)), gf::make_field(5, 2)));
  // hypotheses gcd(m,n) = 1 and p not dividing n
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field fq = gf::field_of_order(q);
    for (unsigned n = 2; n <= 5; ++n) {
      if (n % fq.p() == 0) continue;
      for (unsigned m = 1; m <= 3; ++m) {
        if (std::gcd(m, n) != 1 || nt::ipow(q, m) > 4096) continue;
        EXPECT_TRUE(is_permutation_poly(elementary_symmetric_nq(n, 1, q, fq), ext(q, m)));
      }
    }
  }
}

TEST(QuasiSymmetric, Examples) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (unsigned n = 2; n <= 4; ++n) {
      const Field f = ext(q, n);
      for (unsigned i = 1; i <= n; ++i) {
        const auto rep = is_quasi_symmetric(elementary_symmetric_nq(n, i, q, f), q);
        EXPECT_TRUE(rep.quasi_symmetric);
        EXPECT_TRUE(rep.values_in_subfield);
      }
    }
  }
  const Field f25 = gf::make_field(5, 2);
  EXPECT_FALSE(is_quasi_symmetric(Polynomial::x(f25), 5).quasi_symmetric);
  const auto rep = is_quasi_symmetric(from_terms(f25, {"1*t^10", "2*t^6", "1*t^2", "3"}), 5);
  EXPECT_TRUE(rep.quasi_symmetric);
  for (const auto& o : rep.orbits) EXPECT_NE(o.value.v, 0u);
}

TEST(QuasiSymmetric, DimensionMatchesMobiusOracle) {
  EXPECT_EQ(qs_dimension(2, 2), 3u);
  EXPECT_EQ(qs_dimension(2, 3), 4u);
  EXPECT_EQ(qs_dimension(7, 1), 7u);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (unsigned n = 1; n <= 4; ++n) {
      std::uint64_t oracle = 0;
      for (auto d : nt::divisors(n)) oracle += nt::count_irreducible(q, static_cast<unsigned>(d));
      EXPECT_EQ(qs_dimension(q, n), oracle);
    }
  }
}

TEST(QuasiSymmetric, IndependenceSurvivesScalarExtension) {
  for (auto [q, n] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {2, 4}, {4, 2}}) {
    const Field F = ext(q, n);
    const Field Fq = gf::field_of_order(q);
    const gf::SubfieldEmbedding emb(Fq, F);
    const auto orbits = gf::galois_orbits(F, q);
    std::vector<std::vector<Element>> big, small;
    for (unsigned i = 1; i <= n; ++i) {
      const Polynomial s = elementary_symmetric_nq(n, i, q, F);
      std::vector<Element> rb, rs;
      for (const auto& o : orbits) {
        rb.push_back(s.eval(o[0]));
        rs.push_back(*emb.preimage(rb.back()));
      }
      big.push_back(rb);
      small.push_back(rs);
    }
    EXPECT_EQ(matrix_rank(F, big), matrix_rank(Fq, small));
  }
}

TEST(QuasiSymmetric, CanonicalRepresentative) {
  const Field F = gf::make_field(2, 3);
  const Polynomial s = elementary_symmetric_nq(3, 2, 2, F);
  const Polynomial big = s.pow(3) + s.pow(2).compose(Polynomial::monomial(F, F.one(), 2));
  const Polynomial r = reduce_to_function(big);
  EXPECT_LT(r.degree(), 8);
  for (Element x : F.elements()) EXPECT_EQ(r.eval(x), big.eval(x));
  for (Element c : r.coeffs()) EXPECT_TRUE(gf::in_subfield(F, c, 2));
}

TEST(ComposeNoZero, Examples) {
  const Field f5 = gf::make_field(5, 1);
  const Field f25 = gf::make_field(5, 2);
  const Polynomial r = compose_no_zero(from_terms(f5, {"1*t^2", "3"}), from_terms(f25, {"1*t^5", "1*t"}));
  EXPECT_EQ(to_terms(r), (std::vector<std::string>{"3*t^0", "1*t^2", "2*t^6", "1*t^10"}));
  const Field f2 = gf::make_field(2, 1);
  const Field f8 = gf::make_field(2, 3);
  const Polynomial r8 = compose_no_zero(from_terms(f2, {"1*t^2", "1*t", "1"}), elementary_symmetric_nq(3, 1, 2, f8));
  EXPECT_EQ(r8.degree(), 8);
  for (Element x : f8.elements()) EXPECT_NE(r8.eval(x).v, 0u);
  // i with a root in GF(q) and s that is not quasi-symmetric are both rejected
  EXPECT_THROW(compose_no_zero(from_terms(f2, {"1*t"}), elementary_symmetric_nq(3, 1, 2, f8)), DomainError);
  EXPECT_THROW(compose_no_zero(from_terms(f2, {"1*t^2", "1*t", "1"}), Polynomial::x(f8)), DomainError);
}

TEST(LinearizedFromSubgroup, Examples) {
  const Field f4 = gf::make_field(2, 2);
  EXPECT_EQ(linearized_from_subgroup(f4, {f4.zero()}).to_polynomial(), Polynomial::x(f4));
  EXPECT_EQ(to_terms(linearized_from_subgroup(f4, {f4.zero(), f4.one()}).to_polynomial()),
            (std::vector<std::string>{"1*t^1", "1*t^2"}));
  const Field f8 = gf::make_field(2, 3);
  std::vector<Element> V;
  const Polynomial tr = elementary_symmetric_nq(3, 1, 2, f8);
  for (Element x : f8.elements()) {
    if (tr.eval(x).v == 0) V.push_back(x);
  }
  const LinearizedPolynomial L = linearized_from_subgroup(f8, V);
  EXPECT_EQ(L.degree(), 4u);
  for (Element x : f8.elements()) EXPECT_EQ(L.eval(x).v == 0, tr.eval(x).v == 0);
  EXPECT_THROW(linearized_from_subgroup(f8, {f8.zero(), f8.one(), f8.generator()}), DomainError);
}

TEST(ArtinSchreier, CoprimeCriterion) {
  // kernel of L is the trace-zero set of GF(8); f = s_{3,2}
  const Field f8 = gf::make_field(2, 3);
  const LinearizedPolynomial L(f8, 2, {f8.one(), f8.one(), f8.one()});
  const auto c = artin_schreier_irreducibility(L, RationalFunction(elementary_symmetric_nq(3, 2, 2, f8)));
  EXPECT_EQ(c.verdict, AsVerdict::kIrreducibleByCoprimeCriterion);
  EXPECT_EQ(c.coprime_degree, 5);
  const Field f64 = gf::make_field(2, 6);
  const LinearizedPolynomial L4(f64, 4, {f64.one(), f64.one(), f64.one()});
  const auto c4 = artin_schreier_irreducibility(L4, RationalFunction(elementary_symmetric_nq(3, 2, 4, f64)));
  EXPECT_EQ(c4.verdict, AsVerdict::kIrreducibleByCoprimeCriterion);
  EXPECT_EQ(c4.coprime_degree, 17);
}

TEST(ArtinSchreier, WitnessForConstructedReducible) {
  const Field f8 = gf::make_field(2, 3);
  std::vector<Element> V;
  const Polynomial tr = elementary_symmetric_nq(3, 1, 2, f8);
  for (Element x : f8.elements()) {
    if (tr.eval(x).v == 0) V.push_back(x);
  }
  const LinearizedPolynomial L = linearized_from_subgroup(f8, V);
  // W = {0, w}; W' = L_W(V); f = L_{W'}(x) makes L(y) = f reducible.
  const Element w = V[1].v != 0 ? V[1] : V[2];
  const LinearizedPolynomial LW = linearized_from_subgroup(f8, {f8.zero(), w});
  std::vector<Element> Wp;
  for (Element v : V) {
    const Element img = LW.eval(v);
    if (std::find(Wp.begin(), Wp.end(), img) == Wp.end()) Wp.push_back(img);
  }
  const LinearizedPolynomial LWp = linearized_from_subgroup(f8, Wp);
  const Polynomial f = LWp.to_polynomial().compose(Polynomial::x(f8).pow(3) + Polynomial::x(f8));
  const auto c = artin_schreier_irreducibility(L, RationalFunction(f));
  ASSERT_EQ(c.verdict, AsVerdict::kReducibleWithWitness);
  const Polynomial back = LWp.to_polynomial().compose(c.witness_g);
  EXPECT_LE((back - f).degree(), 0);
}

TEST(ArtinSchreier, PolePath) {
  const Field f4 = gf::make_field(2, 2);
  const LinearizedPolynomial L(f4, 2, {f4.one(), f4.one()});
  const Polynomial t = Polynomial::x(f4);
  const RationalFunction f(Polynomial::constant(f4, f4.one()), t.pow(3) + Polynomial::constant(f4, f4.one()));
  // pole of order 1 at each cube root of unity
  const auto c = artin_schreier_irreducibility(L, f);
  EXPECT_EQ(c.verdict, AsVerdict::kIrreducibleByPole);
}
