#include "ffcurve/towers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ffcurve/error.hpp"
#include "ffcurve/numtheory.hpp"
#include "ffcurve/sympoly.hpp"

namespace ffc::towers {

using gf::field_of_order;
using gf::make_field;

std::string to_string(Family f) {
  switch (f) {
    case Family::kFamily1: return "family1";
    case Family::kFamily2: return "family2";
    case Family::kGs: return "gs";
    case Family::kAllSplitAs: return "all-split-AS";
    case Family::kAbelian: return "abelian";
    case Family::kKummerAllSplit: return "kummer-all-split";
    case Family::kCustom: return "custom";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::kFamily1, Family::kFamily2, Family::kGs, Family::kAllSplitAs, Family::kAbelian,
                   Family::kKummerAllSplit, Family::kCustom}) {
    if (to_string(f) == s) return f;
  }
  throw DomainError("unknown tower family: " + s);
}

namespace {

template <class T>
const T& nth(const std::vector<T>& v, std::size_t i) {
  return v[std::min(i, v.size() - 1)];
}

bool is_power_of(std::uint64_t r, std::uint64_t p) {
  if (r == 0) return false;
  while (r % p == 0) r /= p;
  return r == 1;
}

// Kummer steps x^M = c - (a x^r + b)^M with a, b taken from GF(p^m).
TowerSpec linear_kummer_family(Family fam, std::uint32_t p, unsigned n, unsigned m, std::uint64_t exponent,
                               bool use_b_power, const std::vector<std::uint64_t>& a,
                               const std::vector<std::uint64_t>& b, const std::vector<std::uint64_t>& r) {
  if (a.empty() || b.empty() || r.empty()) throw DomainError("family parameters a, b, r must be nonempty");
  TowerSpec spec;
  spec.family = fam;
  spec.constants = make_field(p, n);
  spec.p = p;
  spec.q = spec.constants.order();
  spec.n = n;
  spec.m = m;
  const Field sub = make_field(p, m);
  const gf::SubfieldEmbedding emb(sub, spec.constants);
  const Field& F = spec.constants;
  const std::size_t len = std::max({a.size(), b.size(), r.size()});
  for (std::size_t i = 0; i < len; ++i) {
    if (nth(a, i) == 0 || nth(b, i) == 0) throw DomainError("a_i and b_i must be nonzero");
    if (!is_power_of(nth(r, i), p)) throw DomainError("exponents r_i must be powers of p");
    const Element ai = emb.map(sub.from_int(nth(a, i)));
    const Element bi = emb.map(sub.from_int(nth(b, i)));
    const Polynomial z = Polynomial::monomial(F, ai, nth(r, i)) + Polynomial::constant(F, bi);
    const Element c = use_b_power ? F.pow(bi, exponent) : F.one();
    Step st;
    st.kind = StepKind::kKummer;
    st.exponent = exponent;
    st.rhs = RationalFunction(Polynomial::constant(F, c) - z.pow(exponent));
    spec.steps.push_back(std::move(st));
  }
  return spec;
}

LinearizedPolynomial trace_lhs(const Field& F, std::uint64_t q, unsigned n) {
  return LinearizedPolynomial(F, q, std::vector<Element>(n, F.one()));
}

// i_num(s(x)) / i_den(s(x)) with s = s_{n,1}; the hypotheses of the all-split theorems are checked
// on GF(q).
RationalFunction composed_rhs(const Field& F, std::uint64_t q, unsigned n, const Polynomial& i_num,
                              const Polynomial& i_den) {
  const Field Fq = i_num.field();
  if (i_den.is_zero() || i_num.is_zero()) throw DomainError("i_num and i_den must be nonzero");
  for (Element c : Fq.elements()) {
    if (i_den.eval(c).v == 0) throw DomainError("i_den has a root in GF(q)");
  }
  const gf::SubfieldEmbedding emb(Fq, F);
  const Polynomial s = sympoly::elementary_symmetric_nq(n, 1, q, F);
  return RationalFunction(map_coefficients(i_num, emb).compose(s), map_coefficients(i_den, emb).compose(s));
}

TowerSpec all_split_base(Family fam, std::uint64_t q, unsigned n) {
  if (n < 2) throw DomainError("all-split towers need n >= 2");
  TowerSpec spec;
  spec.family = fam;
  const Field Fq = field_of_order(q);
  spec.constants = make_field(Fq.p(), Fq.k() * n);
  spec.p = Fq.p();
  spec.q = q;
  spec.n = n;
  return spec;
}

TowerSpec as_all_split(Family fam, std::uint64_t q, unsigned n, const Polynomial& i_num, const Polynomial& i_den) {
  if (i_num.degree() > i_den.degree()) throw DomainError("need deg i_num <= deg i_den");
  TowerSpec spec = all_split_base(fam, q, n);
  Step st;
  st.kind = StepKind::kArtinSchreier;
  st.lhs = trace_lhs(spec.constants, q, n);
  st.rhs = composed_rhs(spec.constants, q, n, i_num, i_den);
  spec.steps.push_back(std::move(st));
  return spec;
}

}  // namespace

TowerSpec family1(std::uint32_t p, unsigned n, unsigned m, std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                  std::vector<std::uint64_t> r) {
  if (!nt::is_prime(p) || m == 0 || n % m != 0 || m == n) throw DomainError("family1 needs m | n and m != n");
  const std::uint64_t k = (nt::ipow(p, n) - 1) / (nt::ipow(p, m) - 1);
  return linear_kummer_family(Family::kFamily1, p, n, m, k, true, a, b, r);
}

TowerSpec family2(std::uint32_t p, unsigned n, unsigned m, std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                  std::vector<std::uint64_t> s) {
  if (!nt::is_prime(p) || m == 0 || n % m != 0) throw DomainError("family2 needs m | n");
  if (nt::ipow(p, n) <= 4) throw DomainError("family2 needs q > 4");
  const std::uint64_t l = nt::ipow(p, m) - 1;
  if (l < 2) throw DomainError("family2 needs p^m > 2");
  return linear_kummer_family(Family::kFamily2, p, n, m, l, false, a, b, s);
}

TowerSpec gs_tower(std::uint64_t q) {
  const Field Fq = field_of_order(q);
  TowerSpec spec;
  spec.family = Family::kGs;
  spec.constants = make_field(Fq.p(), 2 * Fq.k());
  spec.p = Fq.p();
  spec.q = q;
  spec.n = 2;
  const Field& F = spec.constants;
  Step st;
  st.kind = StepKind::kArtinSchreier;
  st.lhs = LinearizedPolynomial(F, q, {F.one(), F.one()});
  st.rhs = RationalFunction(Polynomial::monomial(F, F.one(), q),
                            Polynomial::monomial(F, F.one(), q - 1) + Polynomial::constant(F, F.one()));
  spec.steps.push_back(std::move(st));
  return spec;
}

TowerSpec all_split_as(std::uint64_t q, unsigned n, const std::vector<std::string>& i_num,
                       const std::vector<std::string>& i_den) {
  const Field Fq = field_of_order(q);
  return as_all_split(Family::kAllSplitAs, q, n, from_terms(Fq, i_num), from_terms(Fq, i_den));
}

TowerSpec abelian_tower(std::uint64_t q, unsigned n, std::uint64_t alpha) {
  const Field Fq = field_of_order(q);
  if (Fq.p() == 2) throw DomainError("abelian tower needs odd characteristic");
  const Element a = Fq.from_int(alpha);
  if (a.v == 0 || Fq.pow(a, (q - 1) / 2) == Fq.one()) throw DomainError("alpha must be a non-square in GF(q)");
  const Polynomial den = Polynomial::monomial(Fq, Fq.one(), 2) - Polynomial::constant(Fq, a);
  return as_all_split(Family::kAbelian, q, n, Polynomial::constant(Fq, Fq.one()), den);
}

TowerSpec kummer_all_split(std::uint64_t q, unsigned n, const std::vector<std::string>& i_num,
                           const std::vector<std::string>& i_den) {
  const Field Fq = field_of_order(q);
  const Polynomial num = from_terms(Fq, i_num);
  const Polynomial den = from_terms(Fq, i_den);
  for (Element c : Fq.elements()) {
    if (num.eval(c).v == 0) throw DomainError("i_num has a root in GF(q)");
  }
  if (num.degree() != den.degree()) throw DomainError("need deg i_num = deg i_den");
  TowerSpec spec = all_split_base(Family::kKummerAllSplit, q, n);
  Step st;
  st.kind = StepKind::kKummer;
  st.exponent = (nt::ipow(q, n) - 1) / (q - 1);
  st.rhs = composed_rhs(spec.constants, q, n, num, den);
  if (st.rhs.num().degree() == 0 && st.rhs.den().degree() == 0) throw DomainError("RHS is constant");
  spec.steps.push_back(std::move(st));
  return spec;
}

std::vector<Tuple> base_level(const Field& field) {
  std::vector<Tuple> out;
  out.reserve(field.order() + 1);
  for (Element x : field.elements()) out.push_back({Coord{false, x, {}, 1, false}});
  out.push_back({Coord{true, {}, {}, 1, false}});
  return out;
}

namespace {

struct Lifted {
  StepKind kind;
  std::uint64_t M = 0;
  std::uint64_t deg = 0;
  std::uint32_t p = 0;
  RationalFunction rhs;
  std::vector<std::vector<Element>> fibers;  // by LHS value
  int D = 0;                                 // deg num - deg den
  Element lead_ratio;
  int inf_zero_order = 0;  // deg den - deg(num - lead_ratio*den) when D == 0; -1 if unknown
  int coprime_d = -1;
};

Lifted lift(const Step& step, const Field& E) {
  Lifted L;
  L.kind = step.kind;
  L.M = step.exponent;
  L.deg = step.degree();
  L.p = E.p();
  const Field& C = step.rhs.field();
  if (C == E) {
    L.rhs = step.rhs;
  } else {
    const gf::SubfieldEmbedding emb(C, E);
    L.rhs = map_coefficients(step.rhs, emb);
  }
  if (L.rhs.num().is_zero()) throw DomainError("tower step has zero RHS");
  LinearizedPolynomial lhs;
  if (step.kind == StepKind::kArtinSchreier) {
    lhs = (step.lhs.field() == E) ? step.lhs : step.lhs.map(gf::SubfieldEmbedding(step.lhs.field(), E));
  }
  L.fibers.assign(E.order(), {});
  for (Element y : E.elements()) {
    const Element v = step.kind == StepKind::kArtinSchreier ? lhs.eval(y) : E.pow(y, L.M);
    L.fibers[v.v].push_back(y);
  }
  const Polynomial& num = L.rhs.num();
  const Polynomial& den = L.rhs.den();
  L.D = num.degree() - den.degree();
  L.lead_ratio = E.div(num.lead(), den.lead());
  if (L.D == 0) {
    const Polynomial r = num - den.scaled(L.lead_ratio);
    L.inf_zero_order = r.is_zero() ? -1 : den.degree() - r.degree();
  }
  if (L.rhs.is_polynomial()) L.coprime_d = coprime_degree(num);
  return L;
}

struct LocalData {
  bool pole = false;
  Element c;
  unsigned mult = 0;  // pole multiplicity, or v(R - c) (0 if R is constant)
};

std::uint32_t times(std::uint32_t order, std::uint64_t k) { return order == 0 ? 0 : static_cast<std::uint32_t>(order * k); }

}  // namespace

Extension extend_level(const std::vector<Tuple>& solutions, const Step& step, const Field& field,
                       const ExtendOptions& opts) {
  Extension ext;
  if (solutions.empty()) return ext;
  if (static_cast<double>(solutions.size()) * field.order() > static_cast<double>(opts.work_cap)) {
    throw CapExceeded("tower level work exceeds cap");
  }
  const Lifted L = lift(step, field);
  const Field& E = field;
  const std::uint64_t p = L.p;
  std::vector<std::optional<LocalData>> cache(E.order());
  auto local = [&](Element b) -> const LocalData& {
    auto& slot = cache[b.v];
    if (!slot) {
      LocalData d;
      if (L.rhs.is_pole(b)) {
        d.pole = true;
        d.mult = root_multiplicity(L.rhs.den(), b);
      } else {
        d.c = L.rhs.eval(b);
        const Polynomial r = L.rhs.num() - L.rhs.den().scaled(d.c);
        d.mult = r.is_zero() ? 0 : root_multiplicity(r, b);
      }
      slot = d;
    }
    return *slot;
  };
  auto note_cert = [&](const std::string& why) {
    if (!ext.certificate) ext.certificate = why;
  };

  for (const Tuple& t : solutions) {
    const Coord& x = t.back();
    std::vector<Coord> succ;
    bool tracked = true;
    bool ramified = false;
    auto finite_fiber = [&](Element c, std::uint32_t order) {
      for (Element y : L.fibers[c.v]) succ.push_back(Coord{false, y, {}, order, false});
    };

    if (!x.at_infinity) {
      const LocalData& d = local(x.value);
      if (d.pole) {
        ext.pole_tuples.push_back(t);
        ramified = true;
        const std::uint64_t mu = d.mult;
        const std::uint64_t v = x.order * mu;  // 0 when the order is unknown
        if (L.kind == StepKind::kArtinSchreier) {
          if (v != 0 && v % p != 0) {
            note_cert("pole of order " + std::to_string(v) + " coprime to p");
            succ.push_back(Coord{true, {}, {}, static_cast<std::uint32_t>(v), true});
          } else {
            tracked = false;
          }
        } else if (mu % L.M == 0) {
          Polynomial rest = L.rhs.den();
          for (unsigned i = 0; i < mu; ++i) {
            rest = divmod(rest, Polynomial(E, {E.neg(x.value), E.one()})).first;
          }
          const Element c = E.div(L.rhs.num().eval(x.value), rest.eval(x.value));
          for (Element w : L.fibers[c.v]) succ.push_back(Coord{true, {}, w, times(x.order, mu / L.M), true});
          ramified = false;
        } else if (v != 0 && std::gcd(v, L.M) == 1) {
          note_cert("pole of order " + std::to_string(v) + " coprime to the exponent");
          succ.push_back(Coord{true, {}, {}, static_cast<std::uint32_t>(v), true});
        } else {
          tracked = false;
        }
        if (!opts.extend_poles) {
          if (ramified || !tracked) ext.ramified.push_back(t);
          continue;
        }
      } else if (L.kind == StepKind::kKummer && d.c.v == 0) {
        const std::uint64_t V = x.order * d.mult;
        if (d.mult % L.M == 0) {
          // y ~ w (x - b)^{mult/M}: unramified, one branch per M-th root of the leading value.
          Polynomial rest = L.rhs.num();
          for (unsigned i = 0; i < d.mult; ++i) {
            rest = divmod(rest, Polynomial(E, {E.neg(x.value), E.one()})).first;
          }
          const Element c = E.div(rest.eval(x.value), L.rhs.den().eval(x.value));
          for (Element w : L.fibers[c.v]) succ.push_back(Coord{false, E.zero(), w, times(x.order, d.mult / L.M), false});
        } else if (V == 0 || V % L.M == 0) {
          tracked = false;  // the residue depends on a uniformizer we do not have
        } else {
          ramified = true;
          if (std::gcd(V, L.M) == 1) note_cert("zero of order " + std::to_string(V) + " coprime to the exponent");
          succ.push_back(Coord{false, E.zero(), {}, static_cast<std::uint32_t>(V / std::gcd(V, L.M)), true});
        }
      } else {
        finite_fiber(d.c, times(x.order, d.mult));
      }
    } else {
      const std::uint64_t t_ord = x.order;
      if (L.D < 0) {
        const std::uint64_t a = static_cast<std::uint64_t>(-L.D);
        if (L.kind == StepKind::kArtinSchreier) {
          finite_fiber(E.zero(), times(t_ord, a));
        } else if (a % L.M == 0) {
          for (Element w : L.fibers[L.lead_ratio.v]) succ.push_back(Coord{false, E.zero(), w, times(t_ord, a / L.M), false});
        } else if (t_ord != 0 && std::gcd(a * t_ord, L.M) == 1) {
          ramified = true;
          note_cert("zero of order " + std::to_string(a * t_ord) + " at infinity coprime to the exponent");
          succ.push_back(Coord{false, E.zero(), {}, static_cast<std::uint32_t>(a * t_ord), true});
        } else {
          tracked = false;
        }
      } else if (L.D == 0) {
        const std::uint32_t ord = L.inf_zero_order < 0 ? 0 : times(t_ord, L.inf_zero_order);
        finite_fiber(L.lead_ratio, ord);
      } else {
        const std::uint64_t a = static_cast<std::uint64_t>(L.D);
        const std::uint64_t v = a * t_ord;
        if (L.kind == StepKind::kArtinSchreier) {
          const bool coprime = v != 0 && v % p != 0;
          const bool reduced = t_ord != 0 && L.coprime_d > 0 && static_cast<std::uint64_t>(L.coprime_d) * p > a &&
                               (static_cast<std::uint64_t>(L.coprime_d) * t_ord) % p != 0;
          if (coprime || reduced) {
            ramified = true;
            note_cert("pole at infinity of reduced order coprime to p");
            succ.push_back(Coord{true, {}, {}, static_cast<std::uint32_t>(v), true});
          } else {
            tracked = false;
          }
        } else if (a % L.M == 0) {
          for (Element w : L.fibers[L.lead_ratio.v]) succ.push_back(Coord{true, {}, w, times(t_ord, a / L.M), false});
        } else if (v != 0 && std::gcd(v, L.M) == 1) {
          ramified = true;
          note_cert("pole at infinity of order " + std::to_string(v) + " coprime to the exponent");
          succ.push_back(Coord{true, {}, {}, static_cast<std::uint32_t>(v), true});
        } else {
          tracked = false;
        }
      }
    }

    if (!tracked) {
      ext.untracked.push_back(t);
      ext.ramified.push_back(t);
      continue;
    }
    if (ramified) ext.ramified.push_back(t);
    const bool full = succ.size() == L.deg;
    if (full) {
      ++ext.full;
    } else {
      ext.deficient.push_back(t);
    }
    if (x.above_ramified) ++(full ? ext.ramified_successors_full : ext.ramified_successors_deficient);
    for (const Coord& c : succ) {
      Tuple nt = t;
      nt.push_back(c);
      ext.tuples.push_back(std::move(nt));
    }
  }
  std::sort(ext.tuples.begin(), ext.tuples.end());
  return ext;
}

FamilyBounds family_bounds(const TowerSpec& spec, unsigned j) {
  if (j == 0) throw DomainError("level must be >= 1");
  FamilyBounds b;
  if (spec.family == Family::kFamily1) {
    const std::uint64_t q = spec.q;
    if (q <= 2) throw DomainError("family1 bounds need q > 2");
    const std::uint64_t k = (q - 1) / (nt::ipow(spec.p, spec.m) - 1);
    const Rational kj = boost::multiprecision::pow(boost::multiprecision::cpp_int(k), j - 1);
    b.lambda_lower = Rational(2, q - 2);
    b.genus_upper = Rational(q - 2) * (kj - 1) / 2;
    b.deg_diff_upper = Rational(q) * (kj - 1);
  } else if (spec.family == Family::kFamily2) {
    const std::uint64_t l = nt::ipow(spec.p, spec.m) - 1;
    const Rational lj = boost::multiprecision::pow(boost::multiprecision::cpp_int(l), j - 1);
    b.lambda_lower = Rational(2, l - 1);
    b.genus_upper = Rational(l - 1) * (lj - 1) / 2;
    b.deg_diff_upper = Rational(l + 1) * (lj - 1);
  } else {
    throw DomainError("family bounds exist only for family1 and family2");
  }
  return b;
}

namespace {

Field enumeration_field(const TowerSpec& spec, unsigned e) {
  if (e == 0) throw DomainError("extension degree must be >= 1");
  if (e == 1) return spec.constants;
  gf::check_cap(nt::ipow(spec.constants.order(), e), "tower enumeration field");
  return make_field(spec.constants.p(), spec.constants.k() * e);
}

std::size_t count_affine_tuples(const std::vector<Tuple>& ts) {
  return static_cast<std::size_t>(std::count_if(ts.begin(), ts.end(), [](const Tuple& t) {
    return std::none_of(t.begin(), t.end(), [](const Coord& c) { return c.at_infinity; });
  }));
}

}  // namespace

std::vector<TowerLevelReport> tower_census(const TowerSpec& spec, unsigned depth, const CensusOptions& opts) {
  if (depth == 0) throw DomainError("depth must be >= 1");
  if (spec.steps.empty() && depth > 1) throw DomainError("tower has no steps");
  const Field E = enumeration_field(spec, opts.extension_degree);
  const bool has_bounds = spec.family == Family::kFamily1 || spec.family == Family::kFamily2;
  std::vector<TowerLevelReport> out;
  std::vector<Tuple> level = base_level(E);
  {
    TowerLevelReport r;
    r.level = 1;
    r.affine = E.order();
    r.infinity_branch = 1;
    r.tracked = level.size();
    r.step_degree = 1;
    out.push_back(r);
  }
  for (unsigned j = 2; j <= depth; ++j) {
    const Step& st = spec.step(j - 2);
    Extension ext = extend_level(level, st, E, opts.extend);
    TowerLevelReport r;
    r.level = j;
    r.step_degree = st.degree();
    r.tracked = ext.tuples.size();
    r.affine = count_affine_tuples(ext.tuples);
    r.infinity_branch = r.tracked - r.affine;
    r.full = ext.full;
    r.deficient = ext.deficient.size();
    r.pole_tuples = ext.pole_tuples.size();
    r.untracked = ext.untracked.size();
    r.ramified_successors_full = ext.ramified_successors_full;
    r.ramified_successors_deficient = ext.ramified_successors_deficient;
    r.complete_splitting = ext.full == level.size();
    r.within_degree_bound = r.tracked <= r.step_degree * level.size() &&
                            r.affine <= r.step_degree * out.back().affine;
    r.certificate = ext.certificate;
    if (has_bounds) {
      const FamilyBounds b = family_bounds(spec, j);
      r.lambda_lower = b.lambda_lower;
      r.genus_upper = b.genus_upper;
      r.exceeds_k_pow_j = boost::multiprecision::cpp_int(r.tracked) >
                          boost::multiprecision::pow(boost::multiprecision::cpp_int(st.exponent), j);
    }
    if (spec.all_split() && opts.extension_degree == 1 && !r.complete_splitting) {
      throw AssertionFailure("all-split tower fails to split completely at level " + std::to_string(j));
    }
    out.push_back(r);
    level = std::move(ext.tuples);
  }
  return out;
}

LocusReport ramified_locus_check(const TowerSpec& spec, unsigned depth, unsigned extension_degree) {
  LocusReport rep;
  if (spec.all_split()) {
    rep.locus = "none";
    const auto census = tower_census(spec, depth);
    for (const auto& r : census) rep.deficient_over_constants += r.deficient + r.pole_tuples + r.untracked;
    rep.holds = rep.deficient_over_constants == 0;
    return rep;
  }
  if (spec.family != Family::kFamily1 && spec.family != Family::kFamily2) {
    throw DomainError("ramified locus check needs family1, family2 or an all-split family");
  }
  const std::uint64_t q = spec.q;
  // Membership in GF(q^m) is tested inside the enumeration field, so that field must contain it.
  const std::uint64_t locus_order = spec.family == Family::kFamily1 ? q : nt::ipow(q, spec.m);
  rep.locus = spec.family == Family::kFamily1 ? "GF(" + std::to_string(q) + ")" : "GF(" + std::to_string(locus_order) + ")";

  auto scan = [&](const Field& E, bool constants, std::set<Element>& firsts) {
    std::vector<Tuple> level = base_level(E);
    for (unsigned j = 2; j <= depth; ++j) {
      Extension ext = extend_level(level, spec.step(j - 2), E);
      if (constants) {
        rep.deficient_over_constants += ext.deficient.size() + ext.pole_tuples.size();
        for (const Tuple& t : ext.deficient) {
          if (!t.front().at_infinity) firsts.insert(t.front().value);
        }
      } else {
        rep.ramified_over_extension += ext.ramified.size();
      }
      for (const Tuple& t : ext.ramified) {
        if (!t.front().at_infinity) firsts.insert(t.front().value);
      }
      level = std::move(ext.tuples);
    }
  };

  std::set<Element> over_constants;
  scan(spec.constants, true, over_constants);
  const Field E = enumeration_field(spec, extension_degree);
  std::set<Element> over_ext;
  scan(E, false, over_ext);
  rep.first_coordinates.assign(over_ext.begin(), over_ext.end());

  const unsigned locus_k = static_cast<unsigned>(spec.constants.k() * (spec.family == Family::kFamily1 ? 1 : spec.m));
  const bool locus_visible = E.k() % locus_k == 0;
  for (Element x : over_ext) {
    if (locus_visible && !gf::in_subfield(E, x, locus_order)) rep.holds = false;
  }
  // Deficient fibers over the constant field lie in GF(q) trivially; they are counted for the report.
  if (spec.family == Family::kFamily2) {
    const std::uint64_t pm = nt::ipow(spec.p, spec.m);
    rep.prime_subfield_locus = std::all_of(over_ext.begin(), over_ext.end(),
                                           [&](Element x) { return gf::in_subfield(E, x, pm); });
  }
  return rep;
}

}  // namespace ffc::towers
