#include "ffcurve/gf.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <string>

#include "ffcurve/error.hpp"
#include "ffcurve/numtheory.hpp"

namespace ffc::gf {

namespace {

std::atomic<std::uint64_t> g_cap{kDefaultCap};

// Dense polynomials over GF(p), low degree first, used only while searching for a modulus.
using Vec = std::vector<std::uint32_t>;

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Vec vec_mod(Vec a, const Vec& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Vec vec_mulmod(const Vec& a, const Vec& b, const Vec& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return vec_mod(std::move(r), m, p);
}

Vec vec_powmod(Vec base, std::uint64_t e, const Vec& m, std::uint32_t p) {
  Vec r{1};
  base = vec_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = vec_mulmod(r, base, m, p);
    base = vec_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Vec vec_gcd(Vec a, Vec b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = vec_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test: f | X^{p^k} - X and gcd(f, X^{p^{k/r}} - X) = 1 for each prime r | k.
bool is_irreducible(const Vec& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  auto x_pow_p_pow = [&](unsigned d) {
    Vec x{0, 1};
    for (unsigned i = 0; i < d; ++i) x = vec_powmod(x, p, f, p);
    return x;
  };
  auto minus_x = [&](Vec a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(x_pow_p_pow(k)).empty()) return false;
  for (std::uint64_t r : nt::prime_factors(k)) {
    Vec g = vec_gcd(f, minus_x(x_pow_p_pow(static_cast<unsigned>(k / r))), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Candidates ordered lexicographically by (c_0, c_1, ..., c_{k-1}).
Vec smallest_irreducible(std::uint32_t p, unsigned k) {
  if (k == 1) return {0, 1};
  const std::uint64_t total = nt::ipow(p, k);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec f(k + 1, 0);
    std::uint64_t t = idx;
    for (unsigned i = k; i-- > 0;) {  // c_{k-1} is the least significant digit of idx
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[k] = 1;
    if (f[0] == 0) continue;
    if (is_irreducible(f, p)) return f;
  }
  throw AssertionFailure("no irreducible polynomial found");
}

}  // namespace

std::uint64_t enumeration_cap() { return g_cap.load(); }
void set_enumeration_cap(std::uint64_t cap) { g_cap.store(cap); }

void check_cap(std::uint64_t size, const char* what) {
  if (size > enumeration_cap()) {
    throw CapExceeded(std::string(what) + ": size " + std::to_string(size) +
                      " exceeds enumeration cap " + std::to_string(enumeration_cap()));
  }
}

struct Field::Impl {
  std::uint32_t p = 0;
  unsigned k = 0;
  std::uint32_t order = 0;
  Vec modulus;
  std::vector<std::uint32_t> pw;  // p^i
  bool tables = false;
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, length order-1
  std::vector<std::uint32_t> log;  // log[x], x != 0
  std::uint32_t primitive = 0;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p == 2) return a ^ b;
    if (k == 1) return (a + b) % p;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k; ++i) {
      r += ((a % p + b % p) % p) * pw[i];
      a /= p;
      b /= p;
    }
    return r;
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (p == 2) return a;
    std::uint32_t r = 0;
    for (unsigned i = 0; i < k; ++i) {
      r += ((p - a % p) % p) * pw[i];
      a /= p;
    }
    return r;
  }
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    Vec va(k), vb(k);
    for (unsigned i = 0; i < k; ++i) {
      va[i] = a % p;
      a /= p;
      vb[i] = b % p;
      b /= p;
    }
    Vec r = vec_mulmod(va, vb, modulus, p);
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * pw[i];
    return out;
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (tables) {
      std::uint32_t s = log[a] + log[b];
      if (s >= order - 1) s -= order - 1;
      return exp[s];
    }
    return mul_slow(a, b);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (tables) return exp[(std::uint64_t{log[a]} * (e % (order - 1))) % (order - 1)];
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

namespace {

std::shared_ptr<const Field::Impl> build(std::uint32_t p, unsigned k) {
  auto impl = std::make_shared<Field::Impl>();
  impl->p = p;
  impl->k = k;
  impl->order = static_cast<std::uint32_t>(nt::ipow(p, k));
  impl->pw.resize(k + 1);
  impl->pw[0] = 1;
  for (unsigned i = 1; i <= k; ++i) impl->pw[i] = impl->pw[i - 1] * p;
  impl->modulus = smallest_irreducible(p, k);

  const std::uint32_t n1 = impl->order - 1;
  auto is_primitive = [&](std::uint32_t g) {
    for (std::uint64_t r : nt::prime_factors(n1)) {
      if (impl->pow(g, n1 / r) == 1) return false;
    }
    return true;
  };
  if (n1 == 1) {
    impl->primitive = 1;
  } else {
    for (std::uint32_t g = 2; g < impl->order; ++g) {
      if (is_primitive(g)) {
        impl->primitive = g;
        break;
      }
    }
  }
  if (impl->order <= kTableLimit) {
    impl->exp.resize(n1);
    impl->log.assign(impl->order, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n1; ++i) {
      impl->exp[i] = x;
      impl->log[x] = i;
      x = impl->mul_slow(x, impl->primitive);
    }
    if (x != 1) throw AssertionFailure("primitive element has wrong order");
    impl->tables = true;
  }
  return impl;
}

}  // namespace

Field make_field(std::uint32_t p, unsigned k) {
  if (!nt::is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw DomainError("extension degree must be positive");
  std::uint64_t order = 1;
  for (unsigned i = 0; i < k; ++i) {
    order *= p;
    if (order > enumeration_cap() || order > (std::uint64_t{1} << 31)) {
      throw CapExceeded("GF(" + std::to_string(p) + "^" + std::to_string(k) +
                        ") exceeds enumeration cap " + std::to_string(enumeration_cap()));
    }
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const Field::Impl>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = build(p, k);
  return Field(slot);
}

Field field_of_order(std::uint64_t q) {
  auto [p, k] = nt::prime_power(q);
  if (p == 0) throw DomainError(std::to_string(q) + " is not a prime power");
  return make_field(static_cast<std::uint32_t>(p), k);
}

Field parse_field_spec(const std::string& spec) {
  try {
    const auto caret = spec.find('^');
    if (caret == std::string::npos) return field_of_order(std::stoull(spec));
    const auto p = std::stoul(spec.substr(0, caret));
    const auto k = std::stoul(spec.substr(caret + 1));
    return make_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const DomainError*>(&e)) throw;
    throw DomainError("bad field spec '" + spec + "'");
  }
}

std::uint32_t Field::p() const { return impl_->p; }
unsigned Field::k() const { return impl_->k; }
std::uint32_t Field::order() const { return impl_->order; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }
bool Field::has_tables() const { return impl_->tables; }

std::string Field::name() const {
  return "GF(" + std::to_string(p()) + "^" + std::to_string(k()) + ")";
}

Element Field::from_int(std::uint64_t serialized) const {
  if (serialized >= order()) {
    throw DomainError("element " + std::to_string(serialized) + " out of range for " + name());
  }
  return {static_cast<std::uint32_t>(serialized)};
}

Element Field::scalar(std::int64_t n) const {
  const std::int64_t p = impl_->p;
  return {static_cast<std::uint32_t>(((n % p) + p) % p)};
}

Element Field::from_coefficients(const std::vector<std::uint32_t>& c) const {
  if (c.size() > k()) throw DomainError("too many coefficients for " + name());
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= p()) throw DomainError("coefficient out of range");
    v += c[i] * impl_->pw[i];
  }
  return {v};
}

std::vector<std::uint32_t> Field::coefficients(Element a) const {
  std::vector<std::uint32_t> c(k());
  std::uint32_t v = a.v;
  for (unsigned i = 0; i < k(); ++i) {
    c[i] = v % p();
    v /= p();
  }
  return c;
}

Element Field::generator() const { return {k() == 1 ? 0u : p()}; }
Element Field::primitive() const { return {impl_->primitive}; }

Element Field::add(Element a, Element b) const { return {impl_->add(a.v, b.v)}; }
Element Field::sub(Element a, Element b) const { return {impl_->add(a.v, impl_->neg(b.v))}; }
Element Field::neg(Element a) const { return {impl_->neg(a.v)}; }
Element Field::mul(Element a, Element b) const { return {impl_->mul(a.v, b.v)}; }

Element Field::inv(Element a) const {
  if (a.v == 0) throw DomainError("division by zero in " + name());
  if (impl_->tables) {
    const std::uint32_t l = impl_->log[a.v];
    return {impl_->exp[l == 0 ? 0 : order() - 1 - l]};
  }
  return {impl_->pow(a.v, order() - 2)};
}

Element Field::pow(Element a, std::uint64_t e) const { return {impl_->pow(a.v, e)}; }

std::vector<Element> Field::elements() const {
  std::vector<Element> out(order());
  for (std::uint32_t i = 0; i < order(); ++i) out[i] = {i};
  return out;
}

SubfieldEmbedding::SubfieldEmbedding(Field source, Field target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.p() != target_.p() || target_.k() % source_.k() != 0) {
    throw DomainError(source_.name() + " is not a subfield of " + target_.name());
  }
  const auto& mod = source_.modulus();
  bool found = false;
  for (std::uint32_t y = 0; y < target_.order() && !found; ++y) {
    Element acc = target_.zero();
    for (std::size_t i = mod.size(); i-- > 0;) {
      acc = target_.add(target_.mul(acc, {y}), target_.scalar(mod[i]));
    }
    if (acc.v == 0) {
      root_ = {y};
      found = true;
    }
  }
  if (!found) throw AssertionFailure("source modulus has no root in target");

  image_.resize(source_.order());
  inverse_.assign(target_.order(), 0);
  std::vector<Element> powers(source_.k());
  powers[0] = target_.one();
  for (unsigned i = 1; i < source_.k(); ++i) powers[i] = target_.mul(powers[i - 1], root_);
  for (std::uint32_t s = 0; s < source_.order(); ++s) {
    const auto c = source_.coefficients({s});
    Element acc = target_.zero();
    for (unsigned i = 0; i < source_.k(); ++i) {
      acc = target_.add(acc, target_.mul(target_.scalar(c[i]), powers[i]));
    }
    image_[s] = acc;
    inverse_[acc.v] = s + 1;
  }
}

Element SubfieldEmbedding::map(Element a) const { return image_.at(a.v); }

bool SubfieldEmbedding::contains(Element y) const { return inverse_.at(y.v) != 0; }

std::optional<Element> SubfieldEmbedding::preimage(Element y) const {
  const std::uint32_t s = inverse_.at(y.v);
  if (s == 0) return std::nullopt;
  return Element{s - 1};
}

namespace {

unsigned log_p(const Field& f, std::uint64_t q) {
  auto [p, m] = nt::prime_power(q);
  if (p != f.p() || f.k() % m != 0) {
    throw DomainError(std::to_string(q) + " is not p^m with m | k for " + f.name());
  }
  return m;
}

}  // namespace

Element frobenius_power(const Field& f, Element x, std::uint64_t q, std::int64_t j) {
  const unsigned m = log_p(f, q);
  const std::int64_t n = f.k() / m;
  const std::int64_t jj = ((j % n) + n) % n;
  for (std::int64_t i = 0; i < jj * m; ++i) x = f.pow(x, f.p());
  return x;
}

TraceNorm relative_trace_norm(Element x, const SubfieldEmbedding& sub) {
  const Field& f = sub.target();
  const std::uint64_t q = sub.source().order();
  TraceNorm out{f.zero(), f.one()};
  Element c = x;
  for (unsigned i = 0; i < sub.relative_degree(); ++i) {
    out.trace = f.add(out.trace, c);
    out.norm = f.mul(out.norm, c);
    c = f.pow(c, q);
  }
  if (!sub.contains(out.trace) || !sub.contains(out.norm)) {
    throw AssertionFailure("trace or norm left the subfield");
  }
  return out;
}

std::vector<std::vector<Element>> galois_orbits(const Field& f, std::uint64_t q) {
  log_p(f, q);
  std::vector<char> seen(f.order(), 0);
  std::vector<std::vector<Element>> out;
  for (std::uint32_t v = 0; v < f.order(); ++v) {
    if (seen[v]) continue;
    std::vector<Element> orbit;
    Element x{v};
    do {
      orbit.push_back(x);
      seen[x.v] = 1;
      x = f.pow(x, q);
    } while (x.v != v);
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

bool in_subfield(const Field& f, Element x, std::uint64_t q) { return f.pow(x, q) == x; }

std::vector<Element> fixed_subfield(const Field& f, std::uint64_t q) {
  log_p(f, q);
  std::vector<Element> out;
  for (std::uint32_t v = 0; v < f.order(); ++v) {
    if (in_subfield(f, {v}, q)) out.push_back({v});
  }
  return out;
}

}  // namespace ffc::gf
