#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absorb/ring.hpp"

namespace absorb {

/// Dense membership set over the element indices of one ring.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }
  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  std::size_t count() const;
  bool subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;
  std::vector<Elem> to_vector() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const;
};

/// A finitely generated ideal with its full element set materialized.
///
/// Equality and ordering are extensional (element sets); the generator
/// list is the greedy minimal generating subset taken in increasing index
/// order, so equal ideals always carry equal generators.
class Ideal {
 public:
  /// Trusted constructor: `members` must already be an ideal of `ring`.
  Ideal(FiniteRing ring, ElementSet members);
  Ideal(FiniteRing ring, ElementSet members, std::vector<Elem> generators);

  const FiniteRing& ring() const { return ring_; }
  const ElementSet& members() const { return members_; }
  const std::vector<Elem>& elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(Elem x) const { return members_.contains(x); }
  bool is_zero() const { return elements_.size() == 1; }
  bool is_whole() const { return contains(ring_.one()); }
  bool is_proper() const { return !is_whole(); }
  bool subset_of(const Ideal& other) const { return members_.subset_of(other.members_); }

  /// `(0)`, `(2)`, `(x,y)`: generators in ring display syntax.
  std::string display() const;
  /// `gen:3,8` / `gen:none`: generators as element indices.
  std::string spec() const;

  friend bool operator==(const Ideal& a, const Ideal& b);
  /// Canonical order: cardinality first, then lexicographic element list.
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b);

 private:
  FiniteRing ring_;
  ElementSet members_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
};

/// The set {r * x : r in R}.
ElementSet principal_set(const FiniteRing& ring, Elem x);
/// {a + b : a in A, b in B}; the sum of two ideals given as element sets.
ElementSet sum_set(const FiniteRing& ring, const ElementSet& a, const ElementSet& b);

Ideal ideal_from_generators(const FiniteRing& ring, std::span<const Elem> gens);
Ideal principal_ideal(const FiniteRing& ring, Elem x);
Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);

/// All binary operations throw std::invalid_argument on a ring mismatch.
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// I^0 = R.
Ideal ideal_power(const Ideal& a, unsigned n);

/// { x : x^t in I for some 1 <= t <= |R| }.
Ideal ideal_radical(const Ideal& ideal);
bool is_prime(const Ideal& ideal);
bool is_radical_ideal(const Ideal& ideal);

/// Full scan: zero present, closed under +, negation and ring multiplication.
bool check_ideal_closure(const FiniteRing& ring, const ElementSet& members);

/// Parses `gen:3,8`, `gen:none`, or the display form `(a,b)`.
Ideal parse_ideal(const FiniteRing& ring, std::string_view text);

/// R/J as a table ring. Coset indices follow the order of the least
/// representative, so the zero coset is index 0.
struct QuotientRing {
  FiniteRing ring;
  std::vector<Elem> project;  // element of R -> coset index
  std::vector<Elem> lift;     // coset index -> least representative

  /// Image of an ideal of R (containing the modulus or not) in R/J.
  Ideal image(const Ideal& ideal) const;
  /// Preimage in R of an ideal of R/J.
  Ideal preimage(const Ideal& ideal, const FiniteRing& base) const;
};

inline constexpr std::size_t kQuotientOrderLimit = 1024;

/// Throws std::invalid_argument when J = R (the zero ring is excluded).
QuotientRing make_quotient(const Ideal& modulus);

}  // namespace absorb
