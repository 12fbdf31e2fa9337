#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ffc::gf {

// An element of some GF(p^k). The value is the serialized form: the integer whose base-p
// digits are the coefficients in the power basis of the modulus root, low degree first.
// Which field it belongs to is tracked by the caller; all arithmetic goes through Field.
struct Element {
  std::uint32_t v = 0;
  auto operator<=>(const Element&) const = default;
};

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

// Largest field (and enumeration domain) the library will build. Process-wide; the CLI sets
// it from FFCURVE_CAP before doing any work.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);
void check_cap(std::uint64_t size, const char* what);

class Field {
 public:
  Field() = default;

  std::uint32_t p() const;
  unsigned k() const;
  std::uint32_t order() const;
  // Monic modulus, k+1 coefficients, low degree first. The prime field uses X.
  const std::vector<std::uint32_t>& modulus() const;
  bool has_tables() const;
  bool valid() const { return impl_ != nullptr; }
  std::string name() const;  // "GF(p^k)"

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element from_int(std::uint64_t serialized) const;
  // Image of an integer in the prime subfield.
  Element scalar(std::int64_t n) const;
  Element from_coefficients(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> coefficients(Element a) const;
  // The class of X modulo the modulus.
  Element generator() const;
  // Smallest-valued generator of the multiplicative group.
  Element primitive() const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  // Serial order of all elements 0..order-1.
  std::vector<Element> elements() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ || (a.valid() && b.valid() && a.p() == b.p() && a.k() == b.k());
  }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend Field make_field(std::uint32_t p, unsigned k);
};

Field make_field(std::uint32_t p, unsigned k);

// Accepts "p^k" or a bare prime power such as "8".
Field parse_field_spec(const std::string& spec);
// GF(q) for a prime power q.
Field field_of_order(std::uint64_t q);

class SubfieldEmbedding {
 public:
  SubfieldEmbedding(Field source, Field target);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  Element image_of_generator() const { return root_; }
  unsigned relative_degree() const { return target_.k() / source_.k(); }

  Element map(Element a) const;
  bool contains(Element y) const;
  std::optional<Element> preimage(Element y) const;

 private:
  Field source_;
  Field target_;
  Element root_;
  std::vector<Element> image_;
  std::vector<std::uint32_t> inverse_;  // target value -> source value + 1, 0 if absent
};

// x^{q^j} for q = p^m with m | k. Negative j is allowed.
Element frobenius_power(const Field& f, Element x, std::uint64_t q, std::int64_t j);

struct TraceNorm {
  Element trace;
  Element norm;
};

// Relative trace and norm of x (an element of sub.target()) down to the image of sub.source().
TraceNorm relative_trace_norm(Element x, const SubfieldEmbedding& sub);

// Frobenius orbits of x -> x^q on the field, each sorted, ordered by smallest member.
std::vector<std::vector<Element>> galois_orbits(const Field& f, std::uint64_t q);

// Elements fixed by x -> x^q, i.e. the copy of GF(q) inside f.
std::vector<Element> fixed_subfield(const Field& f, std::uint64_t q);
bool in_subfield(const Field& f, Element x, std::uint64_t q);

}  // namespace ffc::gf
