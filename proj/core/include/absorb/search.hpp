#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absorb/absorbing.hpp"
#include "absorb/content.hpp"
#include "absorb/lattice.hpp"
#include "absorb/polynomial.hpp"

namespace absorb {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultSamples = 100'000;

/// Search region and execution knobs shared by the polynomial searches.
/// `budget` bounds the number of evaluations (pairs or tuples) an
/// exhaustive scan may take; past it the search samples instead.
struct SearchBounds {
  unsigned vars = 1;
  unsigned max_deg = 1;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::size_t lattice_cap = kDefaultLatticeCap;
};

struct SearchMode {
  bool exhaustive = true;
  std::uint64_t samples = 0;

  /// "exhaustive" or "sampled:N".
  std::string label() const;
};

using PolyPair = std::pair<Polynomial, Polynomial>;

struct PairSearchResult {
  SearchMode mode;
  std::uint64_t space = 0;     // pairs examined in full, or samples drawn
  std::string notice;          // set when the budget forced sampling
  std::optional<PolyPair> witness;

  bool found() const { return witness.has_value(); }
};

/// First pair (in enumeration order) with c(fg) != c(f)c(g).
PairSearchResult gaussian_search(const FiniteRing& ring, const SearchBounds& bounds);
PairSearchResult gaussian_search(const IdealLattice& lat, const SearchBounds& bounds);

/// First pair with fg = 0 but c(f)c(g) != (0).
PairSearchResult armendariz_search(const FiniteRing& ring, const SearchBounds& bounds);
PairSearchResult armendariz_search(const IdealLattice& lat, const SearchBounds& bounds);

/// First pair with c(fg) not inside c(f)c(g); none is the expected answer.
PairSearchResult content_subset_search(const IdealLattice& lat, const SearchBounds& bounds);

/// Dedekind-Mertens exponents over ordered pairs (f, g).
struct DmSurvey {
  SearchMode mode;
  std::uint64_t space = 0;
  std::string notice;
  std::map<unsigned, std::uint64_t> histogram;  // exponent -> pair count
  std::uint64_t cap_exceeded = 0;
  unsigned max_exponent = 0;
  std::optional<PolyPair> max_witness;          // first pair reaching the max
  /// Univariate only: first pair with exponent > deg(g) + 1.
  std::optional<PolyPair> bound_violation;
  bool bound_checked = false;
};

DmSurvey dm_survey(const IdealLattice& lat, const SearchBounds& bounds,
                   unsigned cap = kDefaultDmCap);
DmSurvey dm_survey(const FiniteRing& ring, const SearchBounds& bounds,
                   unsigned cap = kDefaultDmCap);

struct QuotientArmendariz {
  Ideal ideal;
  std::string quotient;  // descriptor of R/I
  PairSearchResult result;
};

/// Bounded-degree comparison of "R is Gaussian" with "R/I is Armendariz for
/// every proper I". A Gaussian counterexample (f, g) is pushed to R/c(fg)
/// and must become an Armendariz violation there; every quotient violation
/// is lifted by least representatives and must be a Gaussian counterexample
/// in R. The verdicts agree when a counterexample exists on one side exactly
/// when one exists on the other, counting transferred witnesses.
struct GaussianArmendarizReport {
  PairSearchResult gaussian;
  std::vector<QuotientArmendariz> quotients;
  std::optional<Ideal> forward_ideal;  // c(fg) of the Gaussian witness
  bool forward_ok = true;
  bool backward_ok = true;
  bool gaussian_side = false;          // counterexample on the Gaussian side
  bool armendariz_side = false;        // violation in some quotient
  bool verdicts_agree = true;
};

GaussianArmendarizReport gaussian_iff_armendariz_quotients(const FiniteRing& ring,
                                                           const SearchBounds& bounds);

/// Degree-bounded check of omega_{R[X]}(I[X]) = omega_R(I).
struct PolyOmegaReport {
  ElementOmega omega_base;
  std::vector<Polynomial> lower_witness;  // constants; product in I[X]
  bool lower_valid = false;               // no omega_base-subproduct in I[X]
  SearchMode mode;
  std::uint64_t space = 0;
  std::string notice;
  std::size_t candidates = 0;             // polynomials surviving pruning
  std::optional<std::vector<Polynomial>> violation;
  bool searched = false;                  // false when omega_base exceeded the cap
};

/// Throws std::invalid_argument for I = R.
PolyOmegaReport verify_poly_omega(const Ideal& ideal, const SearchBounds& bounds,
                                  unsigned cap = kDefaultOmegaCap,
                                  const ScanOptions& opts = {});

/// bezout_factor over every nonzero g of degree <= max_deg, or over
/// seeded random g past the budget. Rings must be zmod or products of zmods.
struct BezoutSweep {
  SearchMode mode;
  std::uint64_t space = 0;
  std::string notice;
  std::uint64_t factored = 0;
  std::optional<Polynomial> failure;
  std::string failure_reason;
};

BezoutSweep bezout_sweep(const FiniteRing& ring, const SearchBounds& bounds);

/// certify_content_product over every pair (f, g) with degree <= max_deg
/// whose product lies in I[X].
struct CertifySweep {
  SearchMode mode;
  std::uint64_t space = 0;
  std::string notice;
  std::uint64_t certified = 0;       // pairs meeting the precondition
  unsigned max_exponent = 0;
  bool exponents_bounded = true;     // every l_i <= max_deg + 1
  std::optional<PolyPair> failure;   // final containment false
  std::optional<PolyPair> cap_hit;
};

CertifySweep certify_pair_sweep(const Ideal& ideal, const SearchBounds& bounds,
                                unsigned cap = kDefaultDmCap);

}  // namespace absorb
