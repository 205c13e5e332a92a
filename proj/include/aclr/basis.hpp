#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace aclr {

// Product-basis ordering for a chain of L sites with g local levels.
// Basis labels are the base-g digit strings (site 1 first, most
// significant); rank 1 is |g-1, g-1, ..., g-1> (all spins at S^z = +S)
// and rank g^L is |0, 0, ..., 0>.  Rank i corresponds to the base-g
// number n = g^L - i.  Array storage uses offset = rank - 1.

std::size_t ipow(std::size_t base, int exp);

// digits -> 1-based rank.  Throws std::out_of_range on a bad digit.
std::size_t basis_rank(std::span<const int> digits, int g);

// 1-based rank -> digits (length L).  Throws std::out_of_range.
std::vector<int> basis_digits(std::size_t rank, int g, int length);

// Digit of `site` (1-based) for the 0-based array offset, without
// materializing the full digit string.
inline int digit_at(std::size_t offset, int site, int g, int length) {
  const std::size_t n = ipow(static_cast<std::size_t>(g), length) - 1 - offset;
  return static_cast<int>(n / ipow(static_cast<std::size_t>(g), length - site) % g);
}

}  // namespace aclr
