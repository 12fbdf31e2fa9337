#pragma once

#include <cstdint>
#include <optional>

namespace ffc::bounds {

// l + 1 + floor(2 g sqrt(l)), exact.
std::uint64_t hasse_weil_max(std::uint64_t l, std::uint64_t g);

// 2g > sqrt(l)(sqrt(l) - 1), decided exactly: a curve of genus g over GF(l) above this
// threshold cannot be maximal.
bool exceeds_maximal_genus(std::uint64_t l, std::uint64_t g);

struct OesterleTrace {
  std::uint64_t q = 0;
  std::uint64_t N = 0;
  std::uint64_t L = 0;
  unsigned m = 0;
  double u = 0;
  double theta0 = 0;
  double real_bound = 0;
  std::uint64_t genus_bound = 0;
  bool bracket_sign_change = false;
};

OesterleTrace oesterle_min_genus(std::uint64_t q, std::uint64_t N);

struct DrinfeldVladut {
  double value = 0;
  std::optional<std::uint64_t> exact;  // when q is a square
};

DrinfeldVladut drinfeld_vladut(std::uint64_t q);

}  // namespace ffc::bounds
