#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffcurve/polynomial.hpp"

namespace ffc::sympoly {

// s_{n,i}(t): sum over i-subsets S of {0..n-1} of t^{sum_{j in S} q^j}. i = 0 gives 1.
Polynomial elementary_symmetric_nq(unsigned n, unsigned i, std::uint64_t q, const Field& coeff_field);

// Formal derivative of s_{n,i} against s_{n-1,i-1}^q, over GF(p).
bool derivative_identity_check(unsigned n, unsigned i, std::uint64_t q);

// For every nonzero a in the field: s_{n,i}(a) = 0 iff s_{n,n-i}(1/a) = 0.
bool reciprocal_root_check(unsigned n, unsigned i, std::uint64_t q, const Field& field);

struct RootEntry {
  Element root;             // in GF(q^k) for the k it is listed under
  unsigned multiplicity = 0;
  unsigned degree_over_q = 0;  // smallest d with root^{q^d} = root
};

struct RootFieldProfile {
  unsigned n = 0, i = 0;
  std::uint64_t q = 0;
  std::map<unsigned, std::vector<RootEntry>> roots_in;  // k -> all roots lying in GF(q^k)
  std::uint64_t degree = 0;
  std::uint64_t counted = 0;  // distinct roots over the range, with multiplicity
  bool coprime_roots_in_qn = true;
  bool multiple_root_pattern = true;
};

RootFieldProfile root_field_profile(unsigned n, unsigned i, std::uint64_t q);

// f must be defined over a subfield of the given field.
bool is_permutation_poly(const Polynomial& f, const Field& field);

struct OrbitValue {
  std::vector<Element> orbit;
  Element value;
  bool constant = true;
};

struct QsReport {
  bool quasi_symmetric = false;
  bool values_in_subfield = false;
  std::vector<OrbitValue> orbits;
};

QsReport is_quasi_symmetric(const Polynomial& f, std::uint64_t q);

std::uint64_t qs_dimension(std::uint64_t q, unsigned n);

// i(s(t)) with i over GF(q) and s over GF(q^n).
Polynomial compose_no_zero(const Polynomial& i_poly, const Polynomial& s);

// f mod (t^{|F|} - t), the representative of degree < |F| of the same function on F.
Polynomial reduce_to_function(const Polynomial& f);

LinearizedPolynomial linearized_from_subgroup(const Field& field, const std::vector<Element>& V);

enum class AsVerdict {
  kIrreducibleByCoprimeCriterion,
  kIrreducibleByPole,
  kIrreducibleBySearch,
  kReducibleWithWitness,
  kUndecided,
};

std::string to_string(AsVerdict v);

struct AsCertificate {
  AsVerdict verdict = AsVerdict::kUndecided;
  int coprime_degree = -1;
  int pole_order = 0;  // order of the pole used on the pole path
  std::vector<Element> witness_W;
  Polynomial witness_g;
  // The constant of g solves L_{W'}(c) = f(0) only over an extension.
  bool constant_in_extension = false;
  std::size_t subgroups_tried = 0;
};

// Irreducibility of L(T) - f over the rational function field.
AsCertificate artin_schreier_irreducibility(const LinearizedPolynomial& L, const RationalFunction& f);

// Rank of a matrix over a field by Gaussian elimination.
std::size_t matrix_rank(const Field& f, std::vector<std::vector<Element>> rows);

}  // namespace ffc::sympoly
