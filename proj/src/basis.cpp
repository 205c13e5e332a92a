#include "aclr/basis.hpp"

#include <stdexcept>

namespace aclr {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::size_t basis_rank(std::span<const int> digits, int g) {
  const int length = static_cast<int>(digits.size());
  std::size_t n = 0;
  for (int site = 0; site < length; ++site) {
    const int d = digits[site];
    if (d < 0 || d >= g) throw std::out_of_range("basis_rank: digit out of [0, g-1]");
    n = n * static_cast<std::size_t>(g) + static_cast<std::size_t>(d);
  }
  return ipow(static_cast<std::size_t>(g), length) - n;
}

std::vector<int> basis_digits(std::size_t rank, int g, int length) {
  const std::size_t dim = ipow(static_cast<std::size_t>(g), length);
  if (rank < 1 || rank > dim) throw std::out_of_range("basis_digits: rank out of [1, g^L]");
  std::size_t n = dim - rank;
  std::vector<int> digits(static_cast<std::size_t>(length));
  for (int site = length - 1; site >= 0; --site) {
    digits[static_cast<std::size_t>(site)] = static_cast<int>(n % g);
    n /= static_cast<std::size_t>(g);
  }
  return digits;
}

}  // namespace aclr
