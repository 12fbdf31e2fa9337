#include "ffcurve/gsbasis.hpp"

#include <algorithm>

#include "ffcurve/error.hpp"
#include "ffcurve/numtheory.hpp"

namespace ffc::gsbasis {

std::vector<Polynomial> gs_power_sums(std::uint64_t q, unsigned r_max) {
  const auto [p, k] = nt::prime_power(q);
  if (p == 0) throw DomainError("q must be a prime power");
  if (r_max > 2 * (q - 1)) throw DomainError("power sums are only needed up to 2(q-1)");
  const Field F = gf::make_field(static_cast<std::uint32_t>(p), 1);
  // nu[i] for i = 1..q as polynomials in nu_q.
  std::vector<Polynomial> nu(q + 1, Polynomial(F));
  nu[q - 1] = Polynomial::constant(F, F.scalar((q - 1) % 2 == 0 ? 1 : -1));
  nu[q] = nu[q] + Polynomial::x(F);
  std::vector<Polynomial> S(r_max + 1, Polynomial(F));
  S[0] = Polynomial::constant(F, F.scalar(static_cast<std::int64_t>(q % p)));
  for (unsigned r = 1; r <= r_max; ++r) {
    Polynomial acc(F);
    const unsigned top = static_cast<unsigned>(std::min<std::uint64_t>(r - 1, q));
    for (unsigned i = 1; i <= top; ++i) {
      const Polynomial term = nu[i] * S[r - i];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    if (r <= q) {
      const Polynomial term = nu[r].scaled(F.scalar(r));
      acc = (r % 2 == 1) ? acc + term : acc - term;
    }
    S[r] = acc;
  }
  for (unsigned r = 0; r <= r_max; ++r) {
    if (S[r].degree() > 0) throw AssertionFailure("power sum S_" + std::to_string(r) + " depends on nu_q");
  }
  return S;
}

int monomial_trace(const std::vector<unsigned>& h, std::uint64_t q) {
  int sign = 1;
  for (unsigned x : h) {
    if (x > 2 * (q - 1)) throw DomainError("exponent above 2(q-1)");
    if (x == q - 1) continue;
    if (x == 2 * (q - 1)) {
      sign = -sign;
      continue;
    }
    return 0;
  }
  return sign;
}

TraceMatrix build_trace_matrix(std::uint64_t q, unsigned n) {
  const auto [p, k] = nt::prime_power(q);
  if (p == 0) throw DomainError("q must be a prime power");
  if (n < 2) throw DomainError("n must be at least 2");
  const std::uint64_t N = nt::ipow(q, n - 1);
  if (N > kTraceMatrixCap) throw CapExceeded("trace matrix larger than " + std::to_string(kTraceMatrixCap));
  TraceMatrix m;
  m.q = q;
  m.n = n;
  m.p = static_cast<std::uint32_t>(p);
  m.exponents.resize(N);
  for (std::uint64_t idx = 0; idx < N; ++idx) {
    std::vector<unsigned> e(n - 1);
    std::uint64_t r = idx;
    for (unsigned i = n - 1; i-- > 0;) {
      e[i] = static_cast<unsigned>(r % q);
      r /= q;
    }
    m.exponents[idx] = std::move(e);
  }
  m.entries.assign(N, std::vector<std::uint32_t>(N, 0));
  std::vector<unsigned> h(n - 1);
  for (std::uint64_t i = 0; i < N; ++i) {
    for (std::uint64_t j = 0; j < N; ++j) {
      for (unsigned c = 0; c + 1 < n; ++c) h[c] = m.exponents[i][c] + m.exponents[j][c];
      const int t = monomial_trace(h, q);
      m.entries[i][j] = t >= 0 ? static_cast<std::uint32_t>(t) : m.p - 1;
    }
  }
  return m;
}

bool is_reverse_triangular(const TraceMatrix& m) {
  const std::size_t N = m.size();
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j + 1 < N - i; ++j) {
      if (m.entries[i][j] != 0) return false;
    }
    if (m.entries[i][N - 1 - i] != 1) return false;
  }
  return true;
}

namespace {

std::uint32_t det_mod_p(std::vector<std::vector<std::uint32_t>> a, std::uint32_t p) {
  const std::size_t N = a.size();
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && a[piv][c] == 0) ++piv;
    if (piv == N) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = (p - det) % p;
    }
    det = det * a[c][c] % p;
    const std::uint64_t ic = inv(a[c][c]);
    for (std::size_t r = c + 1; r < N; ++r) {
      if (a[r][c] == 0) continue;
      const std::uint64_t f = a[r][c] * ic % p;
      for (std::size_t j = c; j < N; ++j) {
        a[r][j] = static_cast<std::uint32_t>((a[r][j] + (p - f) * a[c][j]) % p);
      }
    }
  }
  return static_cast<std::uint32_t>(det);
}

}  // namespace

DetResult gs_discriminant_det(std::uint64_t q, unsigned n) {
  const TraceMatrix m = build_trace_matrix(q, n);
  if (!is_reverse_triangular(m)) throw AssertionFailure("trace matrix is not reverse-triangular");
  DetResult r;
  r.det = det_mod_p(m.entries, m.p);
  const std::uint64_t N = m.size();
  r.structural = ((N * (N - 1) / 2) % 2 == 0) ? 1 % m.p : m.p - 1;
  if (r.det != r.structural) throw AssertionFailure("determinant disagrees with the anti-diagonal product");
  r.unit = r.det == 1 || r.det == m.p - 1;
  return r;
}

DivisorValuations gs_field_discriminant(std::uint64_t q, unsigned n) {
  if (n < 2) throw DomainError("n must be at least 2");
  const auto [p, k] = nt::prime_power(q);
  if (p == 0) throw DomainError("q must be a prime power");
  DivisorValuations d;
  d.q = q;
  d.n = n;
  const auto Q = [q](unsigned e) { return static_cast<std::int64_t>(nt::ipow(q, e)); };
  const std::int64_t qq = static_cast<std::int64_t>(q);
  d.p_inf = 2 * (Q(n - 1) - 1);
  d.p_alpha = d.p_inf;
  d.p_zero = 2 * (Q(n - 1) - Q(n - n / 2) - Q(n / 2) + qq);

  // Each step is totally ramified at infinity with local different exponent 2(q-1):
  // d(P''|P) = d(P''|P') + e(P''|P') d(P'|P).
  std::int64_t rec = 0;
  for (unsigned j = 2; j <= n; ++j) rec = 2 * (qq - 1) + qq * rec;
  d.p_inf_recursion = rec;
  std::int64_t sum = 0;
  for (unsigned kk = 1; 2 * kk + 2 <= n; ++kk) sum += 2 * Q(kk) * (qq - 1) * (Q(n - 2 * kk - 1) - 1);
  d.p_zero_sum = sum;
  d.paths_agree = d.p_inf == d.p_inf_recursion && d.p_zero == d.p_zero_sum;

  const Field F = gf::make_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(2 * k));
  const Polynomial g1 = Polynomial::monomial(F, F.one(), q - 1) + Polynomial::constant(F, F.one());
  for (Element a : F.elements()) {
    if (g1.eval(a).v != 0) continue;
    if (root_multiplicity(g1, a) != 1) throw AssertionFailure("x^{q-1} + 1 has a multiple root");
    d.alphas.push_back(a);
  }
  if (d.alphas.size() != q - 1) throw AssertionFailure("x^{q-1} + 1 does not split over GF(q^2)");
  return d;
}

std::vector<LocalVerdict> gs_local_basis_check(std::uint64_t q, unsigned n) {
  const DivisorValuations d = gs_field_discriminant(q, n);
  // The set discriminant of the basis scaled by g_1 is g_1^{2(q^{n-1}-1)}.
  const std::int64_t set_at_alpha = 2 * (static_cast<std::int64_t>(nt::ipow(q, n - 1)) - 1);
  std::vector<LocalVerdict> out;
  for (Element a : d.alphas) {
    out.push_back({"P_alpha=" + std::to_string(a.v), set_at_alpha, d.p_alpha, set_at_alpha == d.p_alpha});
  }
  out.push_back({"P_0", 0, d.p_zero, d.p_zero == 0});
  const Field F = gf::make_field(gf::field_of_order(q).p(), 2 * gf::field_of_order(q).k());
  for (Element b : F.elements()) {
    if (b.v == 0 || std::find(d.alphas.begin(), d.alphas.end(), b) != d.alphas.end()) continue;
    out.push_back({"P_" + std::to_string(b.v), 0, 0, true});
    break;
  }
  return out;
}

}  // namespace ffc::gsbasis
