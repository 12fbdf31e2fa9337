#include "ffcurve/curves.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "ffcurve/error.hpp"
#include "ffcurve/numtheory.hpp"
#include "ffcurve/sympoly.hpp"

namespace ffc::curves {

namespace {

std::uint32_t char_of(std::uint64_t q) {
  auto [p, m] = nt::prime_power(q);
  if (p == 0) throw DomainError(std::to_string(q) + " is not a prime power");
  return static_cast<std::uint32_t>(p);
}

struct Lifted {
  Field E;
  LinearizedPolynomial lhs;
  RationalFunction rhs;
  std::vector<std::uint32_t> hist;  // hist[c] = #{y in E : lhs(y) = c}
};

Lifted lift(const CurveSpec& curve, const Field& E) {
  curve.validate();
  gf::check_cap(E.order(), "point count");
  Lifted out{E, curve.lhs, curve.rhs, {}};
  if (!(curve.constant_field() == E)) {
    const gf::SubfieldEmbedding emb(curve.constant_field(), E);
    out.rhs = map_coefficients(curve.rhs, emb);
    if (curve.kind == CurveKind::kArtinSchreier) out.lhs = curve.lhs.map(emb);
  }
  out.hist.assign(E.order(), 0);
  for (std::uint32_t v = 0; v < E.order(); ++v) {
    const Element y{v};
    const Element img = curve.kind == CurveKind::kArtinSchreier ? out.lhs.eval(y)
                                                                 : E.pow(y, curve.kummer_exponent);
    ++out.hist[img.v];
  }
  return out;
}

PlaceClass by_count(std::uint64_t count, std::uint64_t degree) {
  if (count == degree) return PlaceClass::kSplitCompletely;
  if (count == 0) return PlaceClass::kNoDegreeOnePoint;
  return PlaceClass::kPartiallySplit;
}

}  // namespace

std::uint64_t CurveSpec::degree() const {
  return kind == CurveKind::kArtinSchreier ? lhs.degree() : kummer_exponent;
}

void CurveSpec::validate() const {
  if (kind == CurveKind::kArtinSchreier) {
    if (!(lhs.field() == rhs.field())) throw DomainError("LHS and RHS over different fields");
    if (lhs.coeffs().empty() || lhs.coeffs().front().v == 0) {
      throw DomainError("Artin-Schreier LHS is not separable");
    }
  } else {
    if (kummer_exponent < 2 || kummer_exponent % rhs.field().p() == 0) {
      throw DomainError("Kummer exponent must be >= 2 and coprime to p");
    }
  }
}

CurveSpec artin_schreier(LinearizedPolynomial lhs, RationalFunction rhs) {
  CurveSpec c{CurveKind::kArtinSchreier, std::move(lhs), 0, std::move(rhs)};
  c.validate();
  return c;
}

CurveSpec kummer(std::uint64_t m, RationalFunction rhs) {
  CurveSpec c{CurveKind::kKummer, {}, m, std::move(rhs)};
  c.validate();
  return c;
}

CurveSpec symmetric_curve(unsigned n, unsigned i, std::uint64_t q, const Field& constants) {
  std::vector<Element> ones(n, constants.one());
  return artin_schreier(LinearizedPolynomial(constants, q, ones),
                        RationalFunction(sympoly::elementary_symmetric_nq(n, i, q, constants)));
}

CurveSpec symmetric_curve(unsigned n, unsigned i, std::uint64_t q) {
  return symmetric_curve(n, i, q, gf::field_of_order(nt::ipow(q, n)));
}

CurveSpec kummer_symmetric_curve(unsigned n, unsigned i, std::uint64_t q) {
  const Field F = gf::field_of_order(nt::ipow(q, n));
  return kummer((nt::ipow(q, n) - 1) / (q - 1),
                RationalFunction(sympoly::elementary_symmetric_nq(n, i, q, F)));
}

CurveSpec hermitian(std::uint64_t q) { return symmetric_curve(2, 2, q); }

std::uint64_t count_affine(const CurveSpec& curve, const Field& field) {
  const Lifted L = lift(curve, field);
  std::uint64_t total = 0;
  for (std::uint32_t v = 0; v < field.order(); ++v) {
    const Element x{v};
    if (L.rhs.is_pole(x)) continue;
    total += L.hist[L.rhs.eval(x).v];
  }
  return total;
}

std::string to_string(PlaceClass c) {
  switch (c) {
    case PlaceClass::kSplitCompletely: return "split-completely";
    case PlaceClass::kPartiallySplit: return "partially-split";
    case PlaceClass::kNoDegreeOnePoint: return "no-degree-one-point";
    case PlaceClass::kPoleOfRhs: return "pole-of-RHS";
    case PlaceClass::kRamified: return "ramified";
    case PlaceClass::kTotallyRamified: return "totally-ramified";
    case PlaceClass::kUnclassified: return "unclassified";
  }
  return "?";
}

SplittingProfile splitting_profile(const CurveSpec& curve, const Field& field) {
  const Lifted L = lift(curve, field);
  const Field& E = L.E;
  const std::uint64_t p = E.p();
  const std::uint64_t deg = curve.degree();
  const bool as = curve.kind == CurveKind::kArtinSchreier;
  SplittingProfile prof;
  prof.degree = deg;
  bool decided = true;
  std::uint64_t extra = 0;

  for (std::uint32_t v = 0; v < E.order(); ++v) {
    const Element x{v};
    FinitePlace fp{x, 0, PlaceClass::kUnclassified, std::nullopt};
    if (L.rhs.is_pole(x)) {
      fp.cls = PlaceClass::kPoleOfRhs;
      const unsigned mu = root_multiplicity(L.rhs.den(), x);
      if (as) {
        if (mu % p != 0) fp.pole_places = 1;
      } else {
        const std::uint64_t M = curve.kummer_exponent;
        if (mu % M == 0) {
          Polynomial rest = L.rhs.den();
          for (unsigned j = 0; j < mu; ++j) rest = divmod(rest, Polynomial(E, {E.neg(x), E.one()})).first;
          fp.pole_places = L.hist[E.div(L.rhs.num().eval(x), rest.eval(x)).v];
        } else if (nt::gcd(M, mu) == 1) {
          fp.pole_places = 1;
        }
      }
      if (fp.pole_places) extra += *fp.pole_places;
      else decided = false;
    } else {
      const Element c = L.rhs.eval(x);
      fp.y_count = L.hist[c.v];
      fp.cls = (!as && c.v == 0) ? PlaceClass::kRamified : by_count(fp.y_count, deg);
      prof.affine_total += fp.y_count;
    }
    prof.finite.push_back(fp);
  }

  InfinityRecord& inf = prof.infinity;
  const Polynomial& num = L.rhs.num();
  const Polynomial& den = L.rhs.den();
  if (num.is_zero()) {
    inf.valuation = 0;
    inf.rule = "rhs is zero";
    inf.degree_one_places = L.hist[0];
    inf.cls = as ? by_count(L.hist[0], deg) : PlaceClass::kUnclassified;
    if (!as) inf.degree_one_places.reset();
  } else {
    const int vinf = L.rhs.valuation_at_infinity();
    inf.valuation = vinf;
    const Element lead = E.div(num.lead(), den.lead());
    if (as) {
      if (vinf > 0) {
        inf.rule = "residue 0";
        inf.degree_one_places = L.hist[0];
        inf.cls = by_count(L.hist[0], deg);
      } else if (vinf == 0) {
        inf.rule = "residue is the leading coefficient ratio";
        inf.degree_one_places = L.hist[lead.v];
        inf.cls = by_count(L.hist[lead.v], deg);
      } else if ((-vinf) % p != 0) {
        inf.rule = "pole order coprime to p";
        inf.cls = PlaceClass::kTotallyRamified;
        inf.degree_one_places = 1;
      } else {
        // Terms of degree divisible by p reduce to degree at most deg/p, so if the top
        // coprime-degree term d has d*p > deg the reduced pole order is d.
        const int d = L.rhs.is_polynomial() ? coprime_degree(num) : -1;
        if (d > 0 && static_cast<std::uint64_t>(d) * p > static_cast<std::uint64_t>(num.degree())) {
          inf.rule = "reduced pole order " + std::to_string(d) + " coprime to p";
          inf.cls = PlaceClass::kTotallyRamified;
          inf.degree_one_places = 1;
        } else {
          inf.rule = "pole order divisible by p";
        }
      }
    } else {
      const std::int64_t M = static_cast<std::int64_t>(curve.kummer_exponent);
      const std::int64_t av = vinf < 0 ? -vinf : vinf;
      if (av % M == 0) {
        inf.rule = "valuation divisible by M, residue w^M = leading coefficient";
        inf.degree_one_places = L.hist[lead.v];
        inf.cls = by_count(L.hist[lead.v], deg);
      } else if (nt::gcd(static_cast<std::uint64_t>(M), static_cast<std::uint64_t>(av)) == 1) {
        inf.rule = "gcd(M, v) = 1";
        inf.cls = PlaceClass::kTotallyRamified;
        inf.degree_one_places = 1;
      } else {
        inf.rule = "1 < gcd(M, v) < M";
        inf.cls = PlaceClass::kRamified;
      }
    }
  }
  if (decided && inf.degree_one_places) {
    prof.degree_one_total = prof.affine_total + extra + *inf.degree_one_places;
  }
  return prof;
}

SymmetricInvariants symmetric_invariants(unsigned n, unsigned i, std::uint64_t q) {
  if (i < 2 || i > n) throw DomainError("symmetric invariants need 2 <= i <= n");
  SymmetricInvariants s;
  s.m = 1;
  for (unsigned j = n - i + 1; j <= n - 1; ++j) s.m += nt::ipow(q, j);
  const Field fp = gf::make_field(char_of(q), 1);
  s.m_coprime = static_cast<std::uint64_t>(coprime_degree(sympoly::elementary_symmetric_nq(n, i, q, fp)));
  const std::uint64_t a = nt::ipow(q, n - 1) - 1;
  s.d = a * (s.m + 1);
  if ((a * (s.m - 1)) % 2 != 0) throw AssertionFailure("genus is not an integer");
  s.g = a * (s.m - 1) / 2;
  s.N = nt::ipow(q, 2 * n - 1) + 1;
  return s;
}

std::int64_t hurwitz_genus(std::int64_t g_base, std::int64_t degree, std::int64_t deg_diff) {
  const std::int64_t twice = degree * (2 * g_base - 2) + deg_diff;
  if (twice % 2 != 0) throw DomainError("Hurwitz parity violation: inconsistent inputs");
  return (twice + 2) / 2;
}

KummerProfile kummer_profile(unsigned n, unsigned i, std::uint64_t q) {
  if (i < 1 || i + 1 > n) throw DomainError("Kummer profile needs 1 <= i <= n-1");
  KummerProfile kp;
  const std::uint64_t M = (nt::ipow(q, n) - 1) / (q - 1);
  kp.degree = M;
  const std::uint64_t v0 = (nt::ipow(q, i) - 1) / (q - 1);
  const std::uint64_t vinf = nt::ipow(q, n - i) * v0;

  const auto prof = sympoly::root_field_profile(n, i, q);
  std::map<std::uint64_t, std::uint64_t> other;  // multiplicity -> distinct roots over the closure
  std::uint64_t mult0 = 0;
  const unsigned lo = n - i + 1;
  for (const auto& [k, list] : prof.roots_in) {
    for (const auto& e : list) {
      unsigned first_k = lo;
      while (first_k % e.degree_over_q != 0) ++first_k;
      if (first_k != k) continue;
      if (e.root.v == 0) mult0 = e.multiplicity;
      else ++other[e.multiplicity];
    }
  }
  kp.valuations_match = mult0 == v0 && prof.degree == vinf && prof.counted == prof.degree;

  auto add = [&](std::string name, std::uint64_t v, std::uint64_t count) {
    KummerPlace pl{std::move(name), v, count, nt::gcd(M, v), 0, 0};
    pl.e = M / pl.r;
    pl.d = pl.e - 1;
    kp.deg_diff += count * pl.r * pl.d;
    kp.places.push_back(pl);
  };
  add("P0", v0, 1);
  add("Pinf", vinf, 1);
  for (const auto& [mult, count] : other) add("zero of multiplicity " + std::to_string(mult), mult, count);
  kp.genus = hurwitz_genus(0, static_cast<std::int64_t>(M), static_cast<std::int64_t>(kp.deg_diff));
  return kp;
}

DegreeMPlaces degree_m_places(const CurveSpec& curve, const Field& base, unsigned m) {
  if (m == 0) throw DomainError("m must be positive");
  DegreeMPlaces out;
  out.m = m;
  std::int64_t acc = 0;
  for (std::uint64_t d : nt::divisors(m)) {
    std::uint64_t size = 1;
    for (unsigned j = 0; j < base.k() * d; ++j) {
      size *= base.p();
      gf::check_cap(size, "degree-m places");
    }
    const Field E = gf::make_field(base.p(), base.k() * static_cast<unsigned>(d));
    const auto prof = splitting_profile(curve, E);
    if (!prof.degree_one_total) throw AssertionFailure("degree-one count is not decidable over " + E.name());
    out.counts.push_back(*prof.degree_one_total);
    acc += nt::mobius(m / d) * static_cast<std::int64_t>(*prof.degree_one_total);
  }
  if (acc < 0 || acc % m != 0) throw AssertionFailure("new points do not form whole conjugacy classes");
  out.value = static_cast<std::uint64_t>(acc) / m;
  return out;
}

MedianResult median_check(unsigned n, unsigned i, std::uint64_t q, unsigned m) {
  const std::uint32_t p = char_of(q);
  if (n % p == 0) throw DomainError("median check needs p not dividing n");
  if (nt::gcd(m, n) != 1) throw DomainError("median check needs gcd(m, n) = 1");
  const Field F = gf::field_of_order(nt::ipow(q, m));
  const auto prof = splitting_profile(symmetric_curve(n, i, q, F), F);
  MedianResult r;
  r.affine = prof.affine_total;
  r.at_infinity = prof.infinity.degree_one_places.value_or(0);
  r.expected = F.order() + 1;
  r.median = prof.degree_one_total && *prof.degree_one_total == r.expected;
  return r;
}

SubextensionChain subextension_chain(const LinearizedPolynomial& L, const std::vector<Element>& basis) {
  const Field& F = L.field();
  const std::uint64_t p = F.p();
  for (const Element& b : basis) {
    if (L.eval(b).v != 0) throw DomainError("basis element is not in the kernel of L");
  }
  if (nt::ipow(p, static_cast<unsigned>(basis.size())) != L.degree()) {
    throw DomainError("basis size does not match deg L");
  }
  const std::size_t r = basis.size();
  SubextensionChain ch;
  ch.B.resize(r);
  ch.steps.resize(r);
  std::vector<Element> cur = basis;
  for (std::size_t level = r; level >= 1; --level) {
    const Element B = cur.front();
    if (B.v == 0) throw DomainError("basis is linearly dependent");
    ch.B[level - 1] = B;
    ch.steps[level - 1] = LinearizedPolynomial(F, p, {F.neg(F.pow(B, p - 1)), F.one()});
    std::vector<Element> next;
    for (std::size_t j = 1; j < cur.size(); ++j) next.push_back(ch.steps[level - 1].eval(cur[j]));
    cur = std::move(next);
  }
  LinearizedPolynomial comp = ch.steps.front();
  for (std::size_t j = 1; j < r; ++j) comp = comp.compose(ch.steps[j]);
  const LinearizedPolynomial target = L.to_base_p();
  const Element s = F.inv(target.coeffs().back());
  std::vector<Element> monic(target.coeffs().size());
  for (std::size_t j = 0; j < monic.size(); ++j) monic[j] = F.mul(target.coeffs()[j], s);
  ch.composition_matches = comp == LinearizedPolynomial(F, p, monic);
  ch.A = F.pow(ch.B.front(), p - 1);
  return ch;
}

AutomorphismReport generalized_hermitian_automorphisms(unsigned n, std::uint64_t q, std::uint64_t seed) {
  if (n < 2) throw DomainError("generalized Hermitian curve needs n >= 2");
  const std::uint64_t size = nt::ipow(q, n);
  gf::check_cap(size, "automorphism enumeration");
  const Field F = gf::field_of_order(size);
  const Polynomial s1 = sympoly::elementary_symmetric_nq(n, 1, q, F);
  const Polynomial s2 = sympoly::elementary_symmetric_nq(n, 2, q, F);
  std::vector<Element> v1(F.order()), v2(F.order());
  std::vector<std::vector<Element>> by_trace(F.order());
  for (std::uint32_t v = 0; v < F.order(); ++v) {
    v1[v] = s1.eval({v});
    v2[v] = s2.eval({v});
    by_trace[v1[v].v].push_back({v});
  }
  std::vector<std::pair<Element, Element>> pairs;  // (delta, tau)
  for (std::uint32_t t = 0; t < F.order(); ++t) {
    for (const Element& d : by_trace[v2[t].v]) pairs.push_back({d, {t}});
  }
  std::vector<std::pair<Element, Element>> points;  // (x, y)
  for (std::uint32_t x = 0; x < F.order(); ++x) {
    for (const Element& y : by_trace[v2[x].v]) points.push_back({{x}, y});
  }
  AutomorphismReport rep;
  rep.pair_count = pairs.size();
  rep.expected = nt::ipow(q, 2 * n - 1);
  rep.points = points.size();

  constexpr std::uint64_t kBudget = 1u << 22;
  std::vector<std::size_t> chosen(pairs.size());
  for (std::size_t j = 0; j < chosen.size(); ++j) chosen[j] = j;
  if (!pairs.empty() && pairs.size() * points.size() > kBudget) {
    std::mt19937_64 rng(seed);
    std::shuffle(chosen.begin(), chosen.end(), rng);
    chosen.resize(std::max<std::size_t>(1, kBudget / std::max<std::size_t>(1, points.size())));
    std::sort(chosen.begin(), chosen.end());
  }
  rep.verified = true;
  for (std::size_t idx : chosen) {
    const auto [delta, tau] = pairs[idx];
    Element shift{};  // tau^q + ... + tau^{q^{n-1}}
    Element c = tau;
    for (unsigned j = 1; j < n; ++j) {
      c = F.pow(c, q);
      shift = F.add(shift, c);
    }
    for (const auto& [x, y] : points) {
      const Element x2 = F.add(x, tau);
      const Element y2 = F.add(F.add(y, F.mul(x, shift)), delta);
      if (v1[y2.v] != v2[x2.v]) rep.verified = false;
    }
    ++rep.pairs_checked;
  }
  return rep;
}

TraceNormRatio trace_norm_ratio(unsigned n, std::uint64_t q, unsigned m) {
  if (m == 0 || m >= n || n % m != 0) throw DomainError("trace-norm ratio needs m | n and m < n");
  using boost::multiprecision::cpp_int;
  auto P = [&](unsigned e) -> cpp_int { return boost::multiprecision::pow(cpp_int(q), e); };
  TraceNormRatio r;
  r.N = Rational(P(2 * n - m) + 1);
  r.g = Rational(P(m) * (P(n - m) - 1) * (P(n - m) - 1), 2 * (P(m) - 1));
  r.ratio = Rational((P(m) - 1) * (P(m) + P(2 * n)), (P(n) - P(m)) * (P(n) - P(m)));
  r.ratio_from_ng = r.N / (2 * r.g);
  if (r.ratio != r.ratio_from_ng) throw AssertionFailure("N/(2g) disagrees with the closed form");
  return r;
}

}  // namespace ffc::curves
