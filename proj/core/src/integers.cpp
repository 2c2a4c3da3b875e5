#include "absorb/integers.hpp"

#include <algorithm>
#include <stdexcept>

#include "absorb/absorbing.hpp"
#include "absorb/detail/dense.hpp"
#include "absorb/detail/multiset_scan.hpp"
#include "absorb/detail/parallel.hpp"
#include "absorb/detail/random.hpp"
#include "absorb/detail/text.hpp"
#include "absorb/error.hpp"

namespace absorb {

IntPolynomial IntPolynomial::from_coefficients(const std::vector<BigInt>& coeffs) {
  IntPolynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.set(static_cast<unsigned>(i), coeffs[i]);
  return p;
}

int IntPolynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first);
}

BigInt IntPolynomial::coefficient(unsigned deg) const {
  auto it = terms_.find(deg);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void IntPolynomial::set(unsigned deg, const BigInt& c) {
  if (c == 0)
    terms_.erase(deg);
  else
    terms_[deg] = c;
}

std::string IntPolynomial::display() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [deg, c] : terms_) {
    const bool negative = c < 0;
    if (negative)
      out += '-';
    else if (!out.empty())
      out += '+';
    const BigInt mag = negative ? BigInt(-c) : c;
    if (deg == 0 || mag != 1) out += mag.str();
    if (deg > 0) out += 'x';
    if (deg > 1) out += '^' + std::to_string(deg);
  }
  return out;
}

IntPolynomial int_add(const IntPolynomial& f, const IntPolynomial& g) {
  IntPolynomial out = f;
  for (const auto& [deg, c] : g.terms()) out.set(deg, out.coefficient(deg) + c);
  return out;
}

IntPolynomial int_mul(const IntPolynomial& f, const IntPolynomial& g) {
  std::map<unsigned, BigInt> acc;
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : g.terms()) acc[a + b] += x * y;
  IntPolynomial out;
  for (const auto& [deg, c] : acc) out.set(deg, c);
  return out;
}

IntPolynomial parse_int_polynomial(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const auto piece = detail::trim(text.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos));
    const std::size_t digits_from = !piece.empty() && (piece[0] == '-' || piece[0] == '+');
    if (piece.size() == digits_from ||
        !std::all_of(piece.begin() + static_cast<std::ptrdiff_t>(digits_from), piece.end(),
                     detail::is_digit))
      throw ParseError("expected an integer coefficient", 1, pos + 1);
    BigInt v(std::string(piece.substr(digits_from)));
    coeffs.push_back(piece[0] == '-' ? BigInt(-v) : v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return IntPolynomial::from_coefficients(coeffs);
}

bool PrincipalIdeal::contains(const BigInt& x) const {
  if (modulus == 0) return x == 0;
  return x % modulus == 0;
}

bool PrincipalIdeal::contains(const IntPolynomial& f) const {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [this](const auto& t) { return contains(t.second); });
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= m / p; ++p)
    while (m % p == 0) {
      out.push_back(p);
      m /= p;
    }
  if (m > 1) out.push_back(m);
  return out;
}

IntOmega omega_int(std::uint64_t m, std::uint64_t oracle_limit) {
  if (m > kMaxIntModulus) throw std::invalid_argument("omega_int: m exceeds 2^63 - 1");
  IntOmega out;
  if (m == 1) return out;
  if (m == 0) {
    // (0) is prime in Z.
    out.value = 1;
    out.witness = {0};
    return out;
  }
  out.witness = prime_factors(m);
  out.value = static_cast<unsigned>(out.witness.size());
  if (m <= oracle_limit) {
    const auto ring = make_zmod(m);
    const auto oracle = omega(zero_ideal(ring), out.value + 1);
    if (!oracle.exact() || *oracle.value != out.value)
      throw VerificationFailure("omega_int(" + std::to_string(m) + ") = " +
                                std::to_string(out.value) + " disagrees with the Z/" +
                                std::to_string(m) + " scan");
    out.oracle_checked = true;
  }
  return out;
}

BigInt content_int(const IntPolynomial& f) {
  BigInt g = 0;
  for (const auto& [deg, c] : f.terms()) g = boost::multiprecision::gcd(g, c);
  return boost::multiprecision::abs(g);
}

bool gauss_lemma_check(const IntPolynomial& f, const IntPolynomial& g) {
  return content_int(int_mul(f, g)) == content_int(f) * content_int(g);
}

namespace {

using Coeffs = std::vector<std::int64_t>;

IntPolynomial from_small(const Coeffs& c) {
  IntPolynomial p;
  for (std::size_t i = 0; i < c.size(); ++i) p.set(static_cast<unsigned>(i), c[i]);
  return p;
}

void draw_small(std::mt19937_64& rng, std::uint64_t height, Coeffs& out) {
  for (auto& c : out)
    c = static_cast<std::int64_t>(detail::below(rng, 2 * height + 1)) -
        static_cast<std::int64_t>(height);
}

// Enumeration index -> coefficients in [-h, h], constant term first.
void decode_small(std::uint64_t index, std::uint64_t height, Coeffs& out) {
  const std::uint64_t base = 2 * height + 1;
  for (auto& c : out) {
    c = static_cast<std::int64_t>(index % base) - static_cast<std::int64_t>(height);
    index /= base;
  }
}

std::optional<std::uint64_t> region_size(unsigned max_deg, std::uint64_t height) {
  return detail::checked_power(2 * height + 1, max_deg + 1);
}

void require_bounds(std::uint64_t height) {
  if (height < 1) throw std::invalid_argument("height must be >= 1");
  if (height > (std::uint64_t{1} << 31)) throw std::invalid_argument("height must be <= 2^31");
}

}  // namespace

GaussSweep gauss_lemma_exhaustive(unsigned max_deg, std::uint64_t height, unsigned jobs) {
  require_bounds(height);
  const auto polys = region_size(max_deg, height);
  if (!polys || *polys > (1U << 20))
    throw std::invalid_argument("gauss_lemma_exhaustive: region too large to enumerate");
  std::vector<IntPolynomial> all;
  Coeffs c(max_deg + 1);
  for (std::uint64_t i = 0; i < *polys; ++i) {
    decode_small(i, height, c);
    all.push_back(from_small(c));
  }
  GaussSweep out;
  out.mode = {true, 0};
  out.pairs = *polys * (*polys + 1) / 2;
  auto hit = detail::first_hit<std::size_t>(all.size(), jobs, [&](std::size_t i) {
    for (std::size_t j = i; j < all.size(); ++j)
      if (!gauss_lemma_check(all[i], all[j])) return std::optional<std::size_t>(j);
    return std::optional<std::size_t>();
  });
  if (hit) out.failure.emplace(all[hit->first], all[hit->second]);
  return out;
}

GaussSweep gauss_lemma_sampled(unsigned max_deg, std::uint64_t height, std::uint64_t samples,
                               std::uint64_t seed, unsigned jobs) {
  require_bounds(height);
  GaussSweep out;
  out.mode = {false, samples};
  out.pairs = samples;
  const std::size_t blocks =
      static_cast<std::size_t>((samples + detail::kSampleBlock - 1) / detail::kSampleBlock);
  using Pair = std::pair<IntPolynomial, IntPolynomial>;
  auto hit = detail::first_hit<Pair>(blocks, jobs, [&](std::size_t block) {
    auto rng = detail::stream_rng(seed, block);
    Coeffs a(max_deg + 1), b(max_deg + 1);
    const std::uint64_t begin = block * detail::kSampleBlock;
    const std::uint64_t end = std::min<std::uint64_t>(samples, begin + detail::kSampleBlock);
    for (std::uint64_t s = begin; s < end; ++s) {
      draw_small(rng, height, a);
      draw_small(rng, height, b);
      auto f = from_small(a), g = from_small(b);
      if (!gauss_lemma_check(f, g)) return std::optional<Pair>(Pair{f, g});
    }
    return std::optional<Pair>();
  });
  if (hit) out.failure = std::move(hit->second);
  return out;
}

namespace {

using Dense = std::vector<BigInt>;

// Product truncated to `size` coefficients; exact since every product the
// scan forms has degree below `size`.
Dense dense_mul(const Dense& x, const Dense& y) {
  Dense z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; i + j < z.size(); ++j)
      if (y[j] != 0) z[i + j] += x[i] * y[j];
  }
  return z;
}

IntPolynomial from_dense(const Dense& d) {
  IntPolynomial p;
  for (std::size_t i = 0; i < d.size(); ++i) p.set(static_cast<unsigned>(i), d[i]);
  return p;
}

std::optional<std::uint64_t> multisets(std::uint64_t c, unsigned k) {
  if (c == 0) return 0;
  std::uint64_t v = 1;
  for (unsigned i = 1; i <= k; ++i) {
    if (v > (std::uint64_t{1} << 62) / (c + i - 1)) return std::nullopt;
    v = v * (c + i - 1) / i;
  }
  return v;
}

// Coefficients of the product modulo m, for a quick membership filter.
bool product_in_ideal_mod(const std::vector<Coeffs>& tuple, std::uint64_t m) {
  std::vector<std::uint64_t> acc{1 % m};
  auto reduce = [m](std::int64_t v) {
    const auto r = static_cast<std::int64_t>(v % static_cast<std::int64_t>(m));
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
  };
  for (const auto& f : tuple) {
    std::vector<std::uint64_t> next(acc.size() + f.size() - 1, 0);
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j)
        next[i + j] = (next[i + j] + acc[i] * reduce(f[j])) % m;
    acc = std::move(next);
  }
  return std::all_of(acc.begin(), acc.end(), [](std::uint64_t v) { return v == 0; });
}

}  // namespace

IntConjectureReport conjecture_check_int(std::uint64_t m, unsigned max_deg, std::uint64_t height,
                                         std::uint64_t sample, std::uint64_t seed,
                                         unsigned jobs) {
  if (m < 2) throw std::invalid_argument("conjecture_check_int needs m >= 2");
  require_bounds(height);
  IntConjectureReport out;
  out.m = m;
  out.omega = omega_int(m);
  const unsigned n = out.omega.value;
  const PrincipalIdeal ideal{BigInt(m)};

  // Lower bound: the prime factors of m as constants.
  BigInt product = 1;
  for (auto p : out.omega.witness) {
    out.lower_witness.push_back(IntPolynomial::from_coefficients({BigInt(p)}));
    product *= p;
  }
  out.lower_valid = ideal.contains(product);
  for (auto p : out.omega.witness)
    if (ideal.contains(BigInt(product / p))) out.lower_valid = false;

  const std::size_t len = static_cast<std::size_t>(n + 1) * max_deg + 1;
  Dense one(len);
  one[0] = 1;
  auto widen = [len](const Coeffs& c) {
    Dense d(len);
    for (std::size_t i = 0; i < c.size(); ++i) d[i] = c[i];
    return d;
  };
  auto in_ideal = [&ideal](const Dense& d) {
    return std::all_of(d.begin(), d.end(), [&](const BigInt& c) { return ideal.contains(c); });
  };
  auto to_polys = [](const std::vector<Dense>& tuple) {
    std::vector<IntPolynomial> v;
    for (const auto& d : tuple) v.push_back(from_dense(d));
    return v;
  };

  // Pruning: content in (m) keeps the polynomial inside every subproduct;
  // content 1 makes it a non-zero-divisor modulo m, so it cancels.
  const auto polys = region_size(max_deg, height);
  if (polys && *polys <= sample) {
    std::vector<Dense> cands;
    Coeffs c(max_deg + 1);
    for (std::uint64_t i = 0; i < *polys; ++i) {
      decode_small(i, height, c);
      const BigInt g = content_int(from_small(c));
      if (ideal.contains(g) || g == 1) continue;
      cands.push_back(widen(c));
    }
    const auto count = multisets(cands.size(), n + 1);
    if (count && *count <= sample) {
      out.mode = {true, 0};
      out.accepted = *count;
      auto hit = detail::scan_multisets(cands, n, one, dense_mul, in_ideal, true, jobs);
      if (hit) {
        std::vector<Dense> tuple;
        for (auto pos : *hit) tuple.push_back(cands[pos]);
        out.violation = to_polys(tuple);
      }
      return out;
    }
  }

  out.mode = {false, sample};
  const std::uint64_t per_block_limit = detail::kSampleBlock * 1000;
  const std::size_t blocks =
      static_cast<std::size_t>((sample + detail::kSampleBlock - 1) / detail::kSampleBlock);
  struct BlockResult {
    std::uint64_t drawn = 0, accepted = 0;
    std::optional<std::vector<Dense>> violation;
  };
  std::vector<BlockResult> results(blocks);
  const bool fast = m < (std::uint64_t{1} << 31);
  detail::for_each_index(blocks, jobs, [&](std::size_t block) {
    auto rng = detail::stream_rng(seed, block);
    auto& r = results[block];
    const std::uint64_t want =
        std::min<std::uint64_t>(sample - block * detail::kSampleBlock, detail::kSampleBlock);
    std::vector<Coeffs> tuple(n + 1, Coeffs(max_deg + 1));
    std::vector<Dense> dense(n + 1);
    std::vector<std::size_t> all(n + 1);
    for (std::size_t i = 0; i <= n; ++i) all[i] = i;
    while (r.accepted < want && r.drawn < per_block_limit) {
      ++r.drawn;
      for (auto& f : tuple) draw_small(rng, height, f);
      if (fast && !product_in_ideal_mod(tuple, m)) continue;
      for (std::size_t i = 0; i <= n; ++i) dense[i] = widen(tuple[i]);
      Dense full = one;
      for (const auto& d : dense) full = dense_mul(full, d);
      if (!in_ideal(full)) continue;
      ++r.accepted;
      detail::MultisetScan scan(dense, n, one, dense_mul, in_ideal, false);
      if (!r.violation && scan.check(all)) r.violation = dense;
    }
  });
  for (auto& r : results) {
    out.drawn += r.drawn;
    out.accepted += r.accepted;
    if (r.violation && !out.violation) out.violation = to_polys(*r.violation);
  }
  if (out.accepted < sample)
    out.notice = "draw limit reached: " + std::to_string(out.accepted) + " of " +
                 std::to_string(sample) + " tuples with product in (m)[X] after " +
                 std::to_string(out.drawn) + " draws";
  return out;
}

}  // namespace absorb
