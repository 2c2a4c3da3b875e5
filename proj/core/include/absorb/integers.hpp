#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "absorb/search.hpp"

namespace absorb {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in Z[X] with arbitrary-precision coefficients; zero
/// coefficients are never stored.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Constant term first.
  static IntPolynomial from_coefficients(const std::vector<BigInt>& coeffs);

  const std::map<unsigned, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  BigInt coefficient(unsigned deg) const;
  void set(unsigned deg, const BigInt& c);

  /// `-15+6x+10x^3`; zero prints as `0`.
  std::string display() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::map<unsigned, BigInt> terms_;
};

IntPolynomial int_add(const IntPolynomial& f, const IntPolynomial& g);
IntPolynomial int_mul(const IntPolynomial& f, const IntPolynomial& g);

/// Comma list of coefficients, constant term first: `4,2` is 4 + 2x.
IntPolynomial parse_int_polynomial(std::string_view text);

/// The ideal (m) of Z; m = 0 is the zero ideal and m = 1 is Z.
struct PrincipalIdeal {
  BigInt modulus;

  bool contains(const BigInt& x) const;
  /// Every coefficient lies in (m).
  bool contains(const IntPolynomial& f) const;
};

inline constexpr std::uint64_t kMaxIntModulus = (std::uint64_t{1} << 63) - 1;
inline constexpr std::uint64_t kDefaultOracleLimit = 60;

/// Prime factors of m with multiplicity, ascending, by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t m);

struct IntOmega {
  unsigned value = 0;
  /// Tuple whose product lies in (m) with no proper subproduct in it.
  std::vector<std::uint64_t> witness;
  bool oracle_checked = false;  // compared against the finite-ring scan
};

/// omega of (m) in Z: 0 for m = 1, 1 for m = 0 or m prime, otherwise the
/// number of prime factors with multiplicity. For 2 <= m <= oracle_limit
/// the value is compared with omega((0)) in Z/m, and a mismatch throws
/// VerificationFailure. Throws std::invalid_argument for m > 2^63 - 1.
IntOmega omega_int(std::uint64_t m, std::uint64_t oracle_limit = kDefaultOracleLimit);

/// Non-negative gcd of the coefficients; 0 for the zero polynomial.
BigInt content_int(const IntPolynomial& f);

/// content(fg) = content(f) content(g).
bool gauss_lemma_check(const IntPolynomial& f, const IntPolynomial& g);

struct GaussSweep {
  SearchMode mode;
  std::uint64_t pairs = 0;
  std::optional<std::pair<IntPolynomial, IntPolynomial>> failure;
};

/// Every unordered pair of polynomials with degree <= max_deg and
/// coefficients in [-height, height].
GaussSweep gauss_lemma_exhaustive(unsigned max_deg, std::uint64_t height, unsigned jobs = 1);
/// `samples` seeded random pairs from the same region.
GaussSweep gauss_lemma_sampled(unsigned max_deg, std::uint64_t height, std::uint64_t samples,
                               std::uint64_t seed, unsigned jobs = 1);

/// Bounded check of omega_{Z[X]}((m)[X]) = omega_Z((m)).
///
/// Tuples of omega + 1 polynomials with degree <= max_deg and coefficients
/// in [-height, height] whose product lies in (m)[X] are tested for an
/// omega-subproduct in (m)[X]. When the multisets of pruned candidates
/// number at most `sample` the region is scanned exhaustively; otherwise
/// random tuples are drawn and kept when their product lies in (m)[X]
/// until `sample` are kept or the draw limit is reached.
struct IntConjectureReport {
  std::uint64_t m = 0;
  IntOmega omega;
  std::vector<IntPolynomial> lower_witness;  // prime factors as constants
  bool lower_valid = false;
  SearchMode mode;
  std::uint64_t drawn = 0;     // tuples generated (sampling)
  std::uint64_t accepted = 0;  // tuples with product in (m)[X] that were tested
  std::string notice;
  std::optional<std::vector<IntPolynomial>> violation;
};

/// Throws std::invalid_argument for m < 2 or height < 1.
IntConjectureReport conjecture_check_int(std::uint64_t m, unsigned max_deg, std::uint64_t height,
                                         std::uint64_t sample, std::uint64_t seed,
                                         unsigned jobs = 1);

}  // namespace absorb
