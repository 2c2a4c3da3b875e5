#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace absorb {

/// Index of an element inside a FiniteRing, always in [0, order).
using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 4096;
/// Rings up to this order get precomputed add/mul tables.
inline constexpr std::size_t kTableLimit = 256;

enum class RingKind { Zmod, Product, Truncated, Table };

namespace detail {
struct RingData;
}

/// A finite commutative unital ring with elements indexed 0..order-1.
///
/// Values are cheap handles onto immutable shared data, so copies can be
/// passed freely between threads. The zero element is always index 0 for
/// the built-in families; table rings may choose any index.
class FiniteRing {
 public:
  std::size_t order() const;
  Elem zero() const;
  Elem one() const;

  Elem add(Elem a, Elem b) const;
  Elem mul(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, unsigned e) const;

  bool is_unit(Elem a) const;
  /// Throws std::invalid_argument when `a` is not a unit.
  Elem inverse(Elem a) const;

  RingKind kind() const;
  /// Canonical construction recipe in the ring-spec grammar
  /// (`zmod:N`, `prod:A,B`, `trunc:p=P,vars=K,nil=E`). Table rings carry a
  /// free-form descriptor that is not re-parseable.
  const std::string& descriptor() const;
  bool has_tables() const;

  /// Human readable element: integers for zmod, monomial sums such as
  /// `1+x+xy` for truncated rings, tuples for products.
  std::string display(Elem a) const;
  /// Inverse of display(). Throws ParseError.
  Elem parse_element(std::string_view text) const;

  /// Moduli of the cyclic factors when the ring is Z/n or a (nested) product
  /// of such rings, in index order; empty otherwise.
  std::vector<std::uint64_t> cyclic_factors() const;
  /// Residues of `a` in each cyclic factor (same order as cyclic_factors()).
  std::vector<std::uint64_t> split_cyclic(Elem a) const;
  Elem join_cyclic(std::span<const std::uint64_t> residues) const;

  /// Sub-rings of a product ring (empty for other kinds).
  std::optional<std::pair<FiniteRing, FiniteRing>> product_factors() const;

  /// Builds a ring directly from operation tables. No axioms are checked;
  /// call verify_ring_axioms() on the result.
  static FiniteRing from_tables(std::size_t order, std::vector<Elem> add,
                                std::vector<Elem> mul, std::vector<Elem> neg,
                                Elem zero, Elem one, std::string descriptor,
                                std::vector<std::string> displays = {});

  /// Two handles denote the same ring when their descriptors and orders match.
  friend bool operator==(const FiniteRing& a, const FiniteRing& b);

  explicit FiniteRing(std::shared_ptr<const detail::RingData> data);
  const detail::RingData& data() const { return *data_; }
  const std::shared_ptr<const detail::RingData>& shared() const { return data_; }

 private:
  std::shared_ptr<const detail::RingData> data_;
};

FiniteRing make_zmod(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
FiniteRing make_product(const FiniteRing& a, const FiniteRing& b,
                        std::size_t order_cap = kDefaultOrderCap);
/// F_p[x_1..x_vars] / (x_1..x_vars)^nil.
FiniteRing make_truncated_local(unsigned p, unsigned vars, unsigned nil,
                                std::size_t order_cap = kDefaultOrderCap);

/// Parses `zmod:N`, `prod:<spec>,<spec>` or `trunc:p=P,vars=K,nil=E`.
FiniteRing parse_ring_spec(std::string_view spec,
                           std::size_t order_cap = kDefaultOrderCap);

struct AxiomReport {
  bool ok = true;
  std::string axiom;            // empty when ok
  std::vector<Elem> witness;    // offending elements, up to three
  bool skipped = false;         // order above the check limit
};

/// Exhaustive check of the commutative ring axioms. Rings larger than
/// `order_limit` are reported as skipped.
AxiomReport verify_ring_axioms(const FiniteRing& ring,
                               std::size_t order_limit = kTableLimit);

bool is_prime_number(std::uint64_t n);

}  // namespace absorb
