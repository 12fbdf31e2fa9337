#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffcurve/curves.hpp"
#include "ffcurve/polynomial.hpp"

namespace ffc::towers {

using curves::Rational;

enum class StepKind { kArtinSchreier, kKummer };

// L(x_{i+1}) = rhs(x_i) or x_{i+1}^M = rhs(x_i), over the tower's constant field.
struct Step {
  StepKind kind = StepKind::kArtinSchreier;
  LinearizedPolynomial lhs;
  std::uint64_t exponent = 0;
  RationalFunction rhs;
  std::uint64_t degree() const { return kind == StepKind::kArtinSchreier ? lhs.degree() : exponent; }
};

enum class Family { kFamily1, kFamily2, kGs, kAllSplitAs, kAbelian, kKummerAllSplit, kCustom };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct TowerSpec {
  Family family = Family::kCustom;
  Field constants;
  std::vector<Step> steps;  // steps[i] defines level i+2 from level i+1; the last one repeats
  std::uint64_t p = 0, q = 0;
  unsigned n = 0, m = 0;

  const Step& step(std::size_t i) const { return steps[i < steps.size() ? i : steps.size() - 1]; }
  bool all_split() const {
    return family == Family::kAllSplitAs || family == Family::kAbelian || family == Family::kKummerAllSplit;
  }
};

// x_{i+1}^k = b^k - (a x^r + b)^k over GF(p^n), k = (p^n-1)/(p^m-1). a, b are serialized
// elements of GF(p^m); the lists repeat their last entry.
TowerSpec family1(std::uint32_t p, unsigned n, unsigned m, std::vector<std::uint64_t> a,
                  std::vector<std::uint64_t> b, std::vector<std::uint64_t> r);
// x_{i+1}^l = 1 - (a x^s + b)^l over GF(p^n), l = p^m - 1.
TowerSpec family2(std::uint32_t p, unsigned n, unsigned m, std::vector<std::uint64_t> a,
                  std::vector<std::uint64_t> b, std::vector<std::uint64_t> s);
// x_i^q + x_i = x_{i-1}^q / (x_{i-1}^{q-1} + 1) over GF(q^2).
TowerSpec gs_tower(std::uint64_t q);
// s_{n,1}(x_{i+1}) = i_num(s_{n,1}(x_i)) / i_den(s_{n,1}(x_i)) over GF(q^n), i_num and i_den
// over GF(q) given as term lists.
TowerSpec all_split_as(std::uint64_t q, unsigned n, const std::vector<std::string>& i_num,
                       const std::vector<std::string>& i_den);
// s_{n,1}(x_{i+1}) = 1 / (s_{n,1}(x_i)^2 - alpha), alpha a non-square of GF(q).
TowerSpec abelian_tower(std::uint64_t q, unsigned n, std::uint64_t alpha);
// x_{i+1}^{(q^n-1)/(q-1)} = i_num(s_{n,1}(x_i)) / i_den(s_{n,1}(x_i)).
TowerSpec kummer_all_split(std::uint64_t q, unsigned n, const std::vector<std::string>& i_num,
                           const std::vector<std::string>& i_den);

// One coordinate of a tuple. A finite coordinate carries its value; a pole carries a residue
// tag telling apart places with the same coordinates. order is v(x - value) for finite
// coordinates and the pole order otherwise; 0 means unknown.
struct Coord {
  bool at_infinity = false;
  Element value;
  Element branch;
  std::uint32_t order = 0;
  bool above_ramified = false;  // created at a place where the previous step ramifies
  auto operator<=>(const Coord&) const = default;
};

using Tuple = std::vector<Coord>;

struct ExtendOptions {
  bool extend_poles = false;
  std::uint64_t work_cap = 100000000;
};

struct Extension {
  std::vector<Tuple> tuples;
  std::vector<Tuple> pole_tuples;
  std::vector<Tuple> untracked;
  std::vector<Tuple> deficient;  // tracked tuples whose fiber is smaller than the degree
  std::vector<Tuple> ramified;   // input tuples where the step ramifies or a rule is missing
  std::size_t full = 0;          // tuples whose fiber had exactly deg successors
  std::size_t ramified_successors_full = 0;
  std::size_t ramified_successors_deficient = 0;
  std::optional<std::string> certificate;  // irreducibility witness seen on this step
};

Extension extend_level(const std::vector<Tuple>& solutions, const Step& step, const Field& field,
                       const ExtendOptions& opts = {});

std::vector<Tuple> base_level(const Field& field);

struct TowerLevelReport {
  unsigned level = 0;
  std::size_t affine = 0;
  std::size_t infinity_branch = 0;
  std::size_t tracked = 0;
  std::uint64_t step_degree = 0;
  std::size_t full = 0;
  std::size_t deficient = 0;
  std::size_t pole_tuples = 0;
  std::size_t untracked = 0;
  // Tuples created at a ramified place of the previous step, by whether their own fiber was full.
  std::size_t ramified_successors_full = 0;
  std::size_t ramified_successors_deficient = 0;
  bool complete_splitting = true;
  bool within_degree_bound = true;
  std::optional<std::string> certificate;
  std::optional<Rational> lambda_lower;
  std::optional<Rational> genus_upper;
  std::optional<bool> exceeds_k_pow_j;
};

struct CensusOptions {
  unsigned extension_degree = 1;  // enumerate over GF(|constants|^e)
  ExtendOptions extend;
};

std::vector<TowerLevelReport> tower_census(const TowerSpec& spec, unsigned depth, const CensusOptions& opts = {});

struct FamilyBounds {
  Rational lambda_lower;
  Rational genus_upper;
  Rational deg_diff_upper;
};

FamilyBounds family_bounds(const TowerSpec& spec, unsigned j);

struct LocusReport {
  bool holds = true;
  std::size_t deficient_over_constants = 0;
  std::size_t ramified_over_extension = 0;
  std::vector<Element> first_coordinates;  // distinct x_1 values over the extension field
  std::string locus;
  // family2: every ramified x_1 also lies in GF(p^m)
  std::optional<bool> prime_subfield_locus;
};

LocusReport ramified_locus_check(const TowerSpec& spec, unsigned depth, unsigned extension_degree = 2);

}  // namespace ffc::towers
