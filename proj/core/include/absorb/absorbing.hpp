#pragma once

#include <optional>
#include <vector>

#include "absorb/ideal.hpp"
#include "absorb/lattice.hpp"

namespace absorb {

inline constexpr unsigned kDefaultOmegaCap = 6;

struct ScanOptions {
  /// Skip units, members of I, and tuples whose prefix already lies in I.
  bool prune = true;
  unsigned jobs = 1;
};

/// Outcome of an n-absorbing test. On failure `violation` is the
/// lexicographically least (n+1)-multiset (non-decreasing indices) whose
/// product lies in I while no n-subproduct does.
struct AbsorbingVerdict {
  bool absorbing = true;
  std::vector<Elem> violation;
};

struct StrongVerdict {
  bool absorbing = true;
  std::vector<Ideal> violation;  // ideals in canonical lattice order
};

/// Least n with I n-absorbing, or a cap marker.
///
/// For an exact value n >= 2, `lower_witness` is an n-tuple with product in
/// I and no (n-1)-subproduct in I, i.e. the certificate that I is not
/// (n-1)-absorbing. `upper_certified` records that the exhaustive scan of
/// (n+1)-tuples found no violation. When the cap is hit, `lower_witness`
/// is the violation found at the cap.
template <typename W>
struct OmegaResult {
  std::optional<unsigned> value;
  unsigned cap = 0;
  std::vector<W> lower_witness;
  bool upper_certified = false;

  bool exact() const { return value.has_value(); }
  static OmegaResult exceeds(unsigned cap, std::vector<W> last_violation) {
    return OmegaResult{std::nullopt, cap, std::move(last_violation), false};
  }
};

using ElementOmega = OmegaResult<Elem>;
using IdealOmega = OmegaResult<Ideal>;

/// Throws std::invalid_argument for I = R or n = 0.
AbsorbingVerdict is_n_absorbing(const Ideal& ideal, unsigned n, const ScanOptions& opts = {});

ElementOmega omega(const Ideal& ideal, unsigned cap = kDefaultOmegaCap,
                   const ScanOptions& opts = {});

/// Quantifies over (n+1)-multisets of ideals of the lattice.
StrongVerdict is_strongly_n_absorbing(const Ideal& ideal, unsigned n, const IdealLattice& lattice,
                                      const ScanOptions& opts = {});
/// Builds the lattice; throws CapExceeded if it is larger than `lattice_cap`.
StrongVerdict is_strongly_n_absorbing(const Ideal& ideal, unsigned n,
                                      std::size_t lattice_cap = kDefaultLatticeCap);

IdealOmega strong_omega(const Ideal& ideal, unsigned cap, const IdealLattice& lattice,
                        const ScanOptions& opts = {});
IdealOmega strong_omega(const Ideal& ideal, unsigned cap = kDefaultOmegaCap,
                        std::size_t lattice_cap = kDefaultLatticeCap);

enum class Agreement { Equal, Differ, Undetermined };

struct Conjecture1Row {
  Ideal ideal;
  ElementOmega omega;
  IdealOmega strong;
  Agreement agreement = Agreement::Undetermined;
};

/// Compares omega against strong_omega for every proper ideal of `ring`.
/// Both exceeding the cap is Undetermined; omega exact with strong_omega
/// above the cap is a definite difference.
std::vector<Conjecture1Row> conjecture1_check(const FiniteRing& ring,
                                              unsigned cap = kDefaultOmegaCap,
                                              const ScanOptions& opts = {},
                                              std::size_t lattice_cap = kDefaultLatticeCap);
std::vector<Conjecture1Row> conjecture1_check(const IdealLattice& lattice, unsigned cap,
                                              const ScanOptions& opts = {});

Agreement compare_omegas(const ElementOmega& plain, const IdealOmega& strong);

}  // namespace absorb
