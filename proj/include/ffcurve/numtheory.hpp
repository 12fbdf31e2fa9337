#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ffc::nt {

bool is_prime(std::uint64_t n);

// Returns (p, k) with n = p^k, or (0, 0) when n is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t n);

// Throws DomainError on overflow of 64 bits.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::uint64_t isqrt(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
int mobius(std::uint64_t n);

// Number of monic irreducible polynomials of degree d over GF(q).
std::uint64_t count_irreducible(std::uint64_t q, unsigned d);

}  // namespace ffc::nt
