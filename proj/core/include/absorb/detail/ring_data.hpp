#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "absorb/ring.hpp"

namespace absorb::detail {

struct RingData {
  RingKind kind = RingKind::Table;
  std::size_t order = 0;
  Elem zero = 0;
  Elem one = 1;
  std::string descriptor;

  // Present only when order <= kTableLimit (or for table rings).
  std::vector<Elem> add_table;
  std::vector<Elem> mul_table;
  std::vector<Elem> neg_table;
  std::vector<std::uint8_t> units;

  // Zmod
  std::uint64_t modulus = 0;

  // Product: index = left * |right| + right
  std::shared_ptr<const RingData> left;
  std::shared_ptr<const RingData> right;

  // Truncated: base-p digit i is the coefficient of monomials[i]
  unsigned p = 0;
  unsigned vars = 0;
  unsigned nil = 0;
  std::vector<std::vector<unsigned>> monomials;
  std::vector<int> monomial_product;  // -1 when the product is truncated away

  // Table
  std::vector<std::string> displays;
};

}  // namespace absorb::detail
