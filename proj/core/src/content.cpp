#include "absorb/content.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <tuple>

#include "absorb/detail/dense.hpp"
#include "absorb/error.hpp"

namespace absorb {

Ideal content(const Polynomial& f) {
  const auto coeffs = f.coefficients();
  return ideal_from_generators(f.ring(), coeffs);
}

bool content_subset_property(const Polynomial& f, const Polynomial& g) {
  return content(poly_mul(f, g)).subset_of(ideal_product(content(f), content(g)));
}

std::optional<unsigned> dm_exponent(const Polynomial& f, const Polynomial& g, unsigned cap) {
  if (cap == 0) throw std::invalid_argument("dm cap must be >= 1");
  const Ideal cf = content(f);
  const Ideal cg = content(g);
  const Ideal cfg = content(poly_mul(f, g));
  Ideal lower = unit_ideal(f.ring());  // c(f)^(n-1)
  for (unsigned n = 1; n <= cap; ++n) {
    Ideal upper = ideal_product(lower, cf);
    if (ideal_product(upper, cg) == ideal_product(lower, cfg)) return n;
    lower = std::move(upper);
  }
  return std::nullopt;
}

bool in_extended_ideal(const Polynomial& f, const Ideal& ideal) {
  for (const auto& [e, c] : f.terms())
    if (!ideal.contains(c)) return false;
  return true;
}

Exponent fresh_exponent(const Polynomial& g) {
  const unsigned limit = static_cast<unsigned>(std::max(g.degree(), 0)) + 1;
  detail::MonomialBasis basis(g.vars(), limit);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (g.terms().find(basis.monomial(i)) == g.terms().end()) return basis.monomial(i);
  throw std::logic_error("no fresh monomial below degree bound");
}

namespace {

struct ExtGcd {
  std::int64_t g, x, y;
};

// g = x*a + y*b with g = gcd(a, b) >= 0.
ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  if (b == 0) return {a, 1, 0};
  auto [g, x, y] = ext_gcd(b, a % b);
  return {g, y, x - (a / b) * y};
}

std::int64_t mod(std::int64_t v, std::int64_t n) {
  v %= n;
  return v < 0 ? v + n : v;
}

struct ComponentFactor {
  std::int64_t b = 0;
  std::vector<std::int64_t> r, s;
  std::int64_t d = 0;
};

// Bezout data for one cyclic factor Z/n. The combination s is accumulated
// left to right with the extended gcd; a coefficient already divisible by
// the running gcd contributes s_i = 0. The final gcd with n normalizes b to
// the canonical generator gcd(b_1, ..., b_k, n).
ComponentFactor factor_component(const std::vector<std::int64_t>& coeffs, std::int64_t n) {
  ComponentFactor out;
  const std::size_t k = coeffs.size();
  out.r.assign(k, 0);
  out.s.assign(k, 0);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t v = coeffs[i];
    const bool divisible = acc == 0 ? v == 0 : v % acc == 0;
    if (divisible) continue;
    const auto [g, x, y] = ext_gcd(acc, v);
    for (std::size_t j = 0; j < i; ++j) out.s[j] = mod(out.s[j] * x, n);
    out.s[i] = mod(y, n);
    acc = g;
  }
  if (acc == 0) return out;  // every coefficient vanishes in this factor
  const auto [g, x, y] = ext_gcd(acc, n);
  for (auto& s : out.s) s = mod(s * x, n);
  out.b = g;
  for (std::size_t i = 0; i < k; ++i) out.r[i] = coeffs[i] / g;
  for (std::size_t i = 0; i < k; ++i) out.d = mod(out.d + out.s[i] * out.r[i], n);
  return out;
}

}  // namespace

BezoutFactorization bezout_factor(const Polynomial& g) {
  const auto& ring = g.ring();
  const auto moduli = ring.cyclic_factors();
  if (moduli.empty())
    throw std::invalid_argument("bezout_factor needs zmod or a product of zmods, got " +
                                ring.descriptor());
  if (g.is_zero()) throw std::invalid_argument("bezout_factor needs a nonzero polynomial");

  BezoutFactorization out{0, {}, {}, {}, 0, {}, Polynomial(ring, g.vars())};
  std::vector<Elem> coeffs;
  for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
    out.support.push_back(it->first);
    coeffs.push_back(it->second);
  }
  const std::size_t k = coeffs.size();
  const std::size_t parts = moduli.size();

  std::vector<std::vector<std::uint64_t>> split(k);
  for (std::size_t i = 0; i < k; ++i) split[i] = ring.split_cyclic(coeffs[i]);

  std::vector<std::uint64_t> b(parts), d(parts);
  std::vector<std::vector<std::uint64_t>> r(k, std::vector<std::uint64_t>(parts)),
      s(k, std::vector<std::uint64_t>(parts));
  for (std::size_t j = 0; j < parts; ++j) {
    std::vector<std::int64_t> column(k);
    for (std::size_t i = 0; i < k; ++i) column[i] = static_cast<std::int64_t>(split[i][j]);
    const auto cf = factor_component(column, static_cast<std::int64_t>(moduli[j]));
    b[j] = static_cast<std::uint64_t>(cf.b);
    d[j] = static_cast<std::uint64_t>(cf.d);
    for (std::size_t i = 0; i < k; ++i) {
      r[i][j] = static_cast<std::uint64_t>(cf.r[i]);
      s[i][j] = static_cast<std::uint64_t>(cf.s[i]);
    }
  }
  out.b = ring.join_cyclic(b);
  out.d = ring.join_cyclic(d);
  for (std::size_t i = 0; i < k; ++i) {
    out.r.push_back(ring.join_cyclic(r[i]));
    out.s.push_back(ring.join_cyclic(s[i]));
  }
  out.fresh_exponent = fresh_exponent(g);

  Polynomial gp(ring, g.vars());
  for (std::size_t i = 0; i < k; ++i) gp.set(out.support[i], out.r[i]);
  gp.set(out.fresh_exponent, ring.sub(ring.one(), out.d));
  out.g_prime = std::move(gp);

  // Self-check of the construction.
  Elem combo = ring.zero();
  for (std::size_t i = 0; i < k; ++i) {
    if (ring.mul(out.r[i], out.b) != coeffs[i])
      throw VerificationFailure("bezout: b_i != r_i b for term " + std::to_string(i));
    combo = ring.add(combo, ring.mul(out.s[i], coeffs[i]));
  }
  if (combo != out.b) throw VerificationFailure("bezout: b != sum s_i b_i");
  if (ring.mul(out.d, out.b) != out.b) throw VerificationFailure("bezout: d b != b");
  if (g.terms().count(out.fresh_exponent))
    throw VerificationFailure("bezout: fresh exponent lies in the support");
  if (!(poly_scale(out.g_prime, out.b) == g))
    throw VerificationFailure("bezout: g != g' b for g = " + g.display());
  if (!content(out.g_prime).is_whole())
    throw VerificationFailure("bezout: c(g') != R for g = " + g.display());
  return out;
}

DMCertificate certify_content_product(const Ideal& ideal, std::span<const Polynomial> fs,
                                      unsigned cap) {
  if (fs.size() < 2) throw std::invalid_argument("certify needs at least two polynomials");
  const auto& ring = ideal.ring();
  for (const auto& f : fs)
    if (!(f.ring() == ring))
      throw std::invalid_argument("polynomial over " + f.ring().descriptor() +
                                  " but ideal lives in " + ring.descriptor());
  const std::size_t m = fs.size();

  // tails[i] = f_{i} * ... * f_{m-1}
  std::vector<Polynomial> tails(m + 1, Polynomial::constant(ring, fs[0].vars(), ring.one()));
  for (std::size_t i = m; i-- > 0;) tails[i] = poly_mul(fs[i], tails[i + 1]);
  if (!in_extended_ideal(tails[0], ideal))
    throw std::invalid_argument("product " + tails[0].display() + " is not in I[X] for I = " +
                                ideal.display());

  DMCertificate cert;
  Ideal peeled = unit_ideal(ring);  // c(f_1)^{l_1} ... c(f_i)^{l_i}
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const auto l = dm_exponent(fs[i], tails[i + 1], cap);
    if (!l)
      throw CapExceeded("Dedekind-Mertens exponent of step " + std::to_string(i + 1) +
                        " exceeds cap " + std::to_string(cap));
    cert.exponents.push_back(*l);
    peeled = ideal_product(peeled, ideal_power(content(fs[i]), *l));
    cert.chain_contained.push_back(
        ideal_product(peeled, content(tails[i + 1])).subset_of(ideal));
  }
  cert.max_exponent = *std::max_element(cert.exponents.begin(), cert.exponents.end());

  Ideal all = unit_ideal(ring);
  for (const auto& f : fs) all = ideal_product(all, content(f));
  cert.power_contained = ideal_power(all, cert.max_exponent).subset_of(ideal);
  cert.radical = is_radical_ideal(ideal);
  cert.final_containment = all.subset_of(ideal);
  return cert;
}

}  // namespace absorb
