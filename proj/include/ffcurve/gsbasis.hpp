#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffcurve/polynomial.hpp"

namespace ffc::gsbasis {

// Power sums of the roots of T^q - nu_1 T^{q-1} + ... +- nu_q with nu_1..nu_{q-2} = 0,
// nu_{q-1} = (-1)^{q-1} and nu_q left free: entry r is a polynomial in nu_q over GF(p).
std::vector<Polynomial> gs_power_sums(std::uint64_t q, unsigned r_max);

// Trace of prod x_i^{h_i}: -1, 0 or 1.
int monomial_trace(const std::vector<unsigned>& h, std::uint64_t q);

struct TraceMatrix {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::uint32_t p = 0;
  std::vector<std::vector<unsigned>> exponents;  // (e_2..e_n), lexicographic
  std::vector<std::vector<std::uint32_t>> entries;  // residues mod p
  std::size_t size() const { return entries.size(); }
};

inline constexpr std::size_t kTraceMatrixCap = 4096;

TraceMatrix build_trace_matrix(std::uint64_t q, unsigned n);
// Zero left of and above the anti-diagonal, ones on it.
bool is_reverse_triangular(const TraceMatrix& m);

struct DetResult {
  std::uint32_t det = 0;         // by elimination, as a residue mod p
  std::uint32_t structural = 0;  // sign of the reversal permutation, mod p
  bool unit = false;             // det is 1 or p-1
};

// Throws AssertionFailure if the two determinants disagree or the matrix is not reverse-triangular.
DetResult gs_discriminant_det(std::uint64_t q, unsigned n);

struct DivisorValuations {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::int64_t p_inf = 0;
  std::int64_t p_alpha = 0;  // same value at each root of x^{q-1} + 1
  std::vector<Element> alphas;
  std::int64_t p_zero = 0;
  // independent derivations
  std::int64_t p_inf_recursion = 0;
  std::int64_t p_zero_sum = 0;
  bool paths_agree = false;
};

DivisorValuations gs_field_discriminant(std::uint64_t q, unsigned n);

struct LocalVerdict {
  std::string place;
  std::int64_t set_valuation = 0;
  std::int64_t field_valuation = 0;
  bool is_basis = false;
};

// P_alpha for each root of g_1, P_0 and one generic rational place.
std::vector<LocalVerdict> gs_local_basis_check(std::uint64_t q, unsigned n);

}  // namespace ffc::gsbasis
