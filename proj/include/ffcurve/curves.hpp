#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffcurve/polynomial.hpp"

namespace ffc::curves {

using Rational = boost::multiprecision::cpp_rational;

enum class CurveKind { kArtinSchreier, kKummer };

// L(y) = rhs(x) or y^M = rhs(x). The constant field is the field of rhs.
struct CurveSpec {
  CurveKind kind = CurveKind::kArtinSchreier;
  LinearizedPolynomial lhs;
  std::uint64_t kummer_exponent = 0;
  RationalFunction rhs;

  const Field& constant_field() const { return rhs.field(); }
  std::uint64_t degree() const;
  void validate() const;
};

CurveSpec artin_schreier(LinearizedPolynomial lhs, RationalFunction rhs);
CurveSpec kummer(std::uint64_t m, RationalFunction rhs);
// y^{q^{n-1}} + ... + y = s_{n,i}(x) over the given field (default GF(q^n)).
CurveSpec symmetric_curve(unsigned n, unsigned i, std::uint64_t q);
CurveSpec symmetric_curve(unsigned n, unsigned i, std::uint64_t q, const Field& constants);
// y^{(q^n-1)/(q-1)} = s_{n,i}(x) over GF(q^n).
CurveSpec kummer_symmetric_curve(unsigned n, unsigned i, std::uint64_t q);
CurveSpec hermitian(std::uint64_t q);

std::uint64_t count_affine(const CurveSpec& curve, const Field& field);

enum class PlaceClass {
  kSplitCompletely,
  kPartiallySplit,
  kNoDegreeOnePoint,
  kPoleOfRhs,
  kRamified,
  kTotallyRamified,
  kUnclassified,
};

std::string to_string(PlaceClass c);

struct FinitePlace {
  Element x;
  std::uint64_t y_count = 0;
  PlaceClass cls = PlaceClass::kUnclassified;
  // Degree-one places above a pole of the RHS, when a valuation rule decides it.
  std::optional<std::uint64_t> pole_places;
};

struct InfinityRecord {
  PlaceClass cls = PlaceClass::kUnclassified;
  std::optional<std::uint64_t> degree_one_places;
  int valuation = 0;  // of the RHS
  std::string rule;
};

struct SplittingProfile {
  std::uint64_t degree = 0;
  std::vector<FinitePlace> finite;
  InfinityRecord infinity;
  std::uint64_t affine_total = 0;
  // Affine pairs plus classified places over poles and infinity; nullopt if any is unclassified.
  std::optional<std::uint64_t> degree_one_total;
};

SplittingProfile splitting_profile(const CurveSpec& curve, const Field& field);

struct SymmetricInvariants {
  std::uint64_t m = 0;           // coprime degree by formula
  std::uint64_t m_coprime = 0;   // coprime degree read off s_{n,i}
  std::uint64_t d = 0;           // different exponent at infinity
  std::uint64_t g = 0;
  std::uint64_t N = 0;
};

SymmetricInvariants symmetric_invariants(unsigned n, unsigned i, std::uint64_t q);

std::int64_t hurwitz_genus(std::int64_t g_base, std::int64_t degree, std::int64_t deg_diff);

struct KummerPlace {
  std::string place;
  std::uint64_t valuation = 0;  // |v_P(s_{n,i})|
  std::uint64_t count = 0;      // places of this kind over the algebraic closure
  std::uint64_t r = 0;
  std::uint64_t e = 0;
  std::uint64_t d = 0;
};

struct KummerProfile {
  std::uint64_t degree = 0;
  std::vector<KummerPlace> places;
  std::uint64_t deg_diff = 0;
  std::int64_t genus = 0;
  bool valuations_match = true;  // formula valuations agree with root multiplicities
};

KummerProfile kummer_profile(unsigned n, unsigned i, std::uint64_t q);

struct DegreeMPlaces {
  std::uint64_t m = 0;
  std::vector<std::uint64_t> counts;  // N over GF(base^d), for d = 1..m
  std::uint64_t value = 0;
};

DegreeMPlaces degree_m_places(const CurveSpec& curve, const Field& base, unsigned m);

struct MedianResult {
  std::uint64_t affine = 0;
  std::uint64_t at_infinity = 0;
  std::uint64_t expected = 0;
  bool median = false;
};

MedianResult median_check(unsigned n, unsigned i, std::uint64_t q, unsigned m);

struct SubextensionChain {
  std::vector<Element> B;                  // B_1..B_r
  std::vector<LinearizedPolynomial> steps;  // T_1..T_r
  Element A;                               // bottom step z^p - A z = f, A = B_1^{p-1}
  bool composition_matches = false;
};

SubextensionChain subextension_chain(const LinearizedPolynomial& L, const std::vector<Element>& basis);

struct AutomorphismReport {
  std::uint64_t pair_count = 0;
  std::uint64_t expected = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t points = 0;
  bool verified = false;
};

AutomorphismReport generalized_hermitian_automorphisms(unsigned n, std::uint64_t q, std::uint64_t seed = 1);

struct TraceNormRatio {
  Rational N;
  Rational g;
  Rational ratio;
  Rational ratio_from_ng;
};

TraceNormRatio trace_norm_ratio(unsigned n, std::uint64_t q, unsigned m);

}  // namespace ffc::curves
