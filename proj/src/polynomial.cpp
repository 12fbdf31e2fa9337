#include "ffcurve/polynomial.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "ffcurve/error.hpp"
#include "ffcurve/numtheory.hpp"

namespace ffc {

Polynomial::Polynomial(Field f, std::vector<Element> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Polynomial Polynomial::constant(const Field& f, Element c) { return Polynomial(f, {c}); }

Polynomial Polynomial::monomial(const Field& f, Element c, std::size_t e) {
  std::vector<Element> v(e + 1);
  v[e] = c;
  return Polynomial(f, std::move(v));
}

Element Polynomial::eval(Element x) const {
  Element acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Element> d;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d.push_back(field_.mul(field_.scalar(static_cast<std::int64_t>(i % field_.p())), c_[i]));
  }
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

Polynomial Polynomial::scaled(Element s) const {
  std::vector<Element> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial r = constant(field_, field_.one());
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::compose(const Polynomial& g) const {
  Polynomial acc(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(field_, c_[i]);
  return acc;
}

std::size_t Polynomial::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](Element e) { return e.v != 0; }));
}

namespace {

const Field& common_field(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) throw DomainError("polynomials over different fields");
  return a.field();
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const Field& f = common_field(a, b);
  std::vector<Element> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const Field& f = common_field(a, b);
  std::vector<Element> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(f, std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const Field& f = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(f);
  std::vector<Element> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].v == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      v[i + j] = f.add(v[i + j], f.mul(a.c_[i], b.c_[j]));
    }
  }
  return Polynomial(f, std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  const Field& f = common_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Element> r = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (r.size() <= db) return {Polynomial(f), a};
  std::vector<Element> q(r.size() - db);
  const Element inv = f.inv(b.lead());
  for (std::size_t i = r.size(); i-- > db;) {
    const Element c = f.mul(r[i], inv);
    q[i - db] = c;
    if (c.v == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[i - db + j] = f.sub(r[i - db + j], f.mul(c, b.coeffs()[j]));
    }
  }
  r.resize(db);
  return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

unsigned root_multiplicity(const Polynomial& f, Element alpha) {
  if (f.is_zero()) throw DomainError("multiplicity of a root of the zero polynomial");
  const Field& F = f.field();
  const Polynomial lin(F, {F.neg(alpha), F.one()});
  Polynomial g = f;
  unsigned m = 0;
  for (;;) {
    auto [q, r] = divmod(g, lin);
    if (!r.is_zero()) return m;
    ++m;
    g = std::move(q);
  }
}

Polynomial map_coefficients(const Polynomial& f, const gf::SubfieldEmbedding& emb) {
  if (!(f.field() == emb.source())) throw DomainError("embedding source mismatch");
  std::vector<Element> v(f.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = emb.map(f.coeffs()[i]);
  return Polynomial(emb.target(), std::move(v));
}

int coprime_degree(const Polynomial& f) {
  const auto p = f.field().p();
  for (int e = f.degree(); e > 0; --e) {
    if (f.coeff(e).v != 0 && e % p != 0) return e;
  }
  return -1;
}

RationalFunction::RationalFunction(Polynomial num)
    : RationalFunction(num, Polynomial::constant(num.field(), num.field().one())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = std::move(num);
    den_ = Polynomial::constant(den.field(), den.field().one());
    return;
  }
  Polynomial g = gcd(num, den);
  num = divmod(num, g).first;
  den = divmod(den, g).first;
  const Element s = den.field().inv(den.lead());
  num_ = num.scaled(s);
  den_ = den.scaled(s);
}

Element RationalFunction::eval(Element x) const {
  const Element d = den_.eval(x);
  if (d.v == 0) throw DomainError("rational function evaluated at a pole");
  return field().div(num_.eval(x), d);
}

RationalFunction map_coefficients(const RationalFunction& f, const gf::SubfieldEmbedding& emb) {
  return RationalFunction(map_coefficients(f.num(), emb), map_coefficients(f.den(), emb));
}

LinearizedPolynomial::LinearizedPolynomial(Field f, std::uint64_t base, std::vector<Element> coeffs)
    : field_(std::move(f)), base_(base), c_(std::move(coeffs)) {
  auto [p, m] = nt::prime_power(base_);
  if (p != field_.p()) throw DomainError("linearized base must be a power of the characteristic");
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

std::uint64_t LinearizedPolynomial::degree() const {
  if (c_.empty()) return 0;
  return nt::ipow(base_, static_cast<unsigned>(c_.size() - 1));
}

Element LinearizedPolynomial::eval(Element x) const {
  Element acc{};
  for (const Element& a : c_) {
    acc = field_.add(acc, field_.mul(a, x));
    x = field_.pow(x, base_);
  }
  return acc;
}

Polynomial LinearizedPolynomial::to_polynomial() const {
  std::vector<Element> v(degree() + 1);
  std::uint64_t e = 1;
  for (const Element& a : c_) {
    v[e] = a;
    e *= base_;
  }
  return Polynomial(field_, std::move(v));
}

LinearizedPolynomial LinearizedPolynomial::to_base_p() const {
  const std::uint64_t p = field_.p();
  if (base_ == p) return *this;
  const unsigned m = nt::prime_power(base_).second;
  std::vector<Element> v(c_.empty() ? 0 : (c_.size() - 1) * m + 1);
  for (std::size_t j = 0; j < c_.size(); ++j) v[j * m] = c_[j];
  return LinearizedPolynomial(field_, p, std::move(v));
}

LinearizedPolynomial LinearizedPolynomial::compose(const LinearizedPolynomial& other) const {
  if (base_ != field_.p() || other.base_ != field_.p()) {
    throw DomainError("compose needs base-p linearized polynomials");
  }
  // a_i (sum_j b_j T^{p^j})^{p^i} = sum a_i b_j^{p^i} T^{p^{i+j}}
  std::vector<Element> v(c_.empty() || other.c_.empty() ? 0 : c_.size() + other.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < other.c_.size(); ++j) {
      const Element t = field_.mul(c_[i], field_.pow(other.c_[j], nt::ipow(base_, static_cast<unsigned>(i))));
      v[i + j] = field_.add(v[i + j], t);
    }
  }
  return LinearizedPolynomial(field_, base_, std::move(v));
}

LinearizedPolynomial LinearizedPolynomial::map(const gf::SubfieldEmbedding& emb) const {
  if (!(field_ == emb.source())) throw DomainError("embedding source mismatch");
  std::vector<Element> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = emb.map(c_[i]);
  return LinearizedPolynomial(emb.target(), base_, std::move(v));
}

std::vector<std::string> to_terms(const Polynomial& f) {
  std::vector<std::string> out;
  for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
    if (f.coeffs()[e].v == 0) continue;
    out.push_back(std::to_string(f.coeffs()[e].v) + "*t^" + std::to_string(e));
  }
  return out;
}

Polynomial from_terms(const Field& f, const std::vector<std::string>& terms) {
  Polynomial acc(f);
  for (const std::string& raw : terms) {
    std::string s;
    for (char ch : raw) {
      if (ch != ' ') s += ch;
    }
    // c, c*t, c*t^e, t, t^e
    static const std::regex kTerm(R"(^(\d+)?(?:(\*)?t(?:\^(\d+))?)?$)");
    std::smatch mt;
    if (s.empty() || !std::regex_match(s, mt, kTerm) || (mt[2].matched && !mt[1].matched) ||
        (mt[1].matched && !mt[2].matched && s.find('t') != std::string::npos)) {
      throw DomainError("bad polynomial term '" + raw + "'");
    }
    std::uint64_t c = 1, e = 0;
    try {
      if (mt[1].matched) c = std::stoull(mt[1].str());
      if (s.find('t') != std::string::npos) e = mt[3].matched ? std::stoull(mt[3].str()) : 1;
    } catch (const std::out_of_range&) {
      throw DomainError("bad polynomial term '" + raw + "'");
    }
    acc = acc + Polynomial::monomial(f, f.from_int(c), e);
  }
  return acc;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t e = f.coeffs().size(); e-- > 0;) {
    const Element c = f.coeffs()[e];
    if (c.v == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c.v != 1 || e == 0) os << c.v;
    if (e > 0) os << (c.v != 1 ? "*" : "") << "t" << (e > 1 ? "^" + std::to_string(e) : "");
  }
  return os.str();
}

}  // namespace ffc
