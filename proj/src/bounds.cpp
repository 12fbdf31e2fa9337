#include "ffcurve/bounds.hpp"

#include <cmath>
#include <numbers>

#include "ffcurve/error.hpp"
#include "ffcurve/numtheory.hpp"

namespace ffc::bounds {

std::uint64_t hasse_weil_max(std::uint64_t l, std::uint64_t g) {
  if (nt::prime_power(l).first == 0) throw DomainError("field size must be a prime power");
  // floor(2g sqrt(l)) = isqrt(4 g^2 l)
  using u128 = unsigned __int128;
  const u128 x = u128{4} * g * g * l;
  if (x >> 64) throw DomainError("Hasse-Weil bound overflows");
  return l + 1 + nt::isqrt(static_cast<std::uint64_t>(x));
}

bool exceeds_maximal_genus(std::uint64_t l, std::uint64_t g) {
  // 2g > l - sqrt(l)  <=>  sqrt(l) > l - 2g
  if (2 * g >= l) return true;
  const std::uint64_t a = l - 2 * g;
  return l > a * a;
}

OesterleTrace oesterle_min_genus(std::uint64_t q, std::uint64_t N) {
  if (nt::prime_power(q).first == 0) throw DomainError("q must be a prime power");
  if (N < 2) throw DomainError("Oesterle bound needs N >= 2");
  OesterleTrace t;
  t.q = q;
  t.N = N;
  t.L = N - 1;
  const double L = static_cast<double>(t.L);
  const double sq = std::sqrt(static_cast<double>(q));
  if (L <= sq) throw DomainError("L = N - 1 must exceed sqrt(q)");

  // sqrt(q)^m < L <= sqrt(q)^{m+1}; compare squares exactly: q^m < L^2 <= q^{m+1}.
  const unsigned __int128 L2 = static_cast<unsigned __int128>(t.L) * t.L;
  unsigned __int128 qm = q;  // q^m
  unsigned m = 1;
  while (!(qm < L2 && L2 <= qm * q)) {
    qm *= q;
    ++m;
  }
  t.m = m;
  // sqrt of the exact integer keeps sqrt(q)^{m+1} = L exact when L^2 = q^{m+1}
  const double sm = std::sqrt(static_cast<double>(qm));
  const double sm1 = std::sqrt(static_cast<double>(qm * q));
  t.u = (sm1 - L) / (L * sq - sm);

  auto f = [&](double th) {
    return std::cos((m + 1) / 2.0 * th) + t.u * std::cos((m - 1) / 2.0 * th);
  };
  double lo = std::numbers::pi / (m + 1);
  double hi = std::numbers::pi / m;
  double flo = f(lo), fhi = f(hi);
  constexpr double kEndpointTol = 1e-12;
  t.bracket_sign_change = (flo >= 0 && fhi <= 0) || (flo <= 0 && fhi >= 0) ||
                          std::abs(flo) <= kEndpointTol || std::abs(fhi) <= kEndpointTol;
  if (!t.bracket_sign_change) {
    throw AssertionFailure("Oesterle equation has no sign change on the bracket");
  }
  if (std::abs(flo) <= kEndpointTol) {
    hi = lo;
  } else if (std::abs(fhi) <= kEndpointTol) {
    lo = hi;
  }
  while (hi - lo > 1e-12) {
    const double mid = (lo + hi) / 2;
    const double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  t.theta0 = (lo + hi) / 2;
  const double c = std::cos(t.theta0);
  t.real_bound = ((L - 1) * sq * c + static_cast<double>(q) - L) / (static_cast<double>(q) + 1 - 2 * sq * c);
  const double ceil_val = std::ceil(t.real_bound - 1e-9);
  t.genus_bound = ceil_val < 0 ? 0 : static_cast<std::uint64_t>(ceil_val);
  return t;
}

DrinfeldVladut drinfeld_vladut(std::uint64_t q) {
  if (nt::prime_power(q).first == 0) throw DomainError("q must be a prime power");
  DrinfeldVladut d;
  d.value = std::sqrt(static_cast<double>(q)) - 1;
  const std::uint64_t r = nt::isqrt(q);
  if (r * r == q) d.exact = r - 1;
  return d;
}

}  // namespace ffc::bounds
