#pragma once

#include <climits>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ffcurve/gf.hpp"

namespace ffc {

using gf::Element;
using gf::Field;

inline constexpr int kDegreeOfZero = INT_MIN;

// Dense univariate polynomial over a Field, low degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Field f) : field_(std::move(f)) {}
  Polynomial(Field f, std::vector<Element> coeffs);

  static Polynomial constant(const Field& f, Element c);
  static Polynomial monomial(const Field& f, Element c, std::size_t e);
  static Polynomial x(const Field& f) { return monomial(f, f.one(), 1); }

  const Field& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return c_; }
  int degree() const { return c_.empty() ? kDegreeOfZero : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Element coeff(std::size_t e) const { return e < c_.size() ? c_[e] : Element{}; }
  Element lead() const { return c_.empty() ? Element{} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  Element eval(Element x) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial scaled(Element s) const;
  Polynomial pow(std::uint64_t e) const;
  // f(g(t)).
  Polynomial compose(const Polynomial& g) const;
  // Number of nonzero coefficients.
  std::size_t term_count() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

 private:
  void normalize();
  Field field_;
  std::vector<Element> c_;
};

// a = q*b + r.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);  // monic, or zero
// Multiplicity of alpha as a root, by repeated exact division.
unsigned root_multiplicity(const Polynomial& f, Element alpha);
// Same polynomial with coefficients pushed through an embedding.
Polynomial map_coefficients(const Polynomial& f, const gf::SubfieldEmbedding& emb);
// Largest degree of a term whose degree is coprime to p; -1 if there is none.
int coprime_degree(const Polynomial& f);

// num/den with gcd 1 and monic den.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  const Field& field() const { return num_.field(); }
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  // deg den - deg num, the valuation at infinity (meaningless for zero).
  int valuation_at_infinity() const { return den_.degree() - num_.degree(); }

  bool is_pole(Element x) const { return den_.eval(x).v == 0; }
  // Throws DomainError at a pole.
  Element eval(Element x) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

RationalFunction map_coefficients(const RationalFunction& f, const gf::SubfieldEmbedding& emb);

// sum_j a_j T^{base^j} for base a power of p.
class LinearizedPolynomial {
 public:
  LinearizedPolynomial() = default;
  LinearizedPolynomial(Field f, std::uint64_t base, std::vector<Element> coeffs);

  const Field& field() const { return field_; }
  std::uint64_t base() const { return base_; }
  const std::vector<Element>& coeffs() const { return c_; }
  std::uint64_t degree() const;  // as an ordinary polynomial

  Element eval(Element x) const;
  Polynomial to_polynomial() const;
  // Same map written with base p.
  LinearizedPolynomial to_base_p() const;
  // (this o other)(T) = this(other(T)); both must have base p.
  LinearizedPolynomial compose(const LinearizedPolynomial& other) const;
  LinearizedPolynomial map(const gf::SubfieldEmbedding& emb) const;

  friend bool operator==(const LinearizedPolynomial& a, const LinearizedPolynomial& b) {
    return a.field_ == b.field_ && a.base_ == b.base_ && a.c_ == b.c_;
  }

 private:
  Field field_;
  std::uint64_t base_ = 0;
  std::vector<Element> c_;
};

// JSON-facing term lists: "c*t^e" with c the serialized coefficient, ascending degree.
std::vector<std::string> to_terms(const Polynomial& f);
Polynomial from_terms(const Field& f, const std::vector<std::string>& terms);
std::string to_string(const Polynomial& f);

}  // namespace ffc
