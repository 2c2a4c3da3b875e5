#include "absorb/ideal.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

#include "absorb/detail/text.hpp"
#include "absorb/error.hpp"

namespace absorb {

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  ElementSet out(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

std::vector<Elem> ElementSet::to_vector() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<Elem>(i * 64 + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t ElementSetHash::operator()(const ElementSet& s) const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto w : s.words()) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

ElementSet principal_set(const FiniteRing& ring, Elem x) {
  ElementSet s(ring.order());
  for (Elem r = 0; r < ring.order(); ++r) s.insert(ring.mul(r, x));
  return s;
}

ElementSet sum_set(const FiniteRing& ring, const ElementSet& a, const ElementSet& b) {
  ElementSet out(ring.order());
  const auto as = a.to_vector();
  const auto bs = b.to_vector();
  for (Elem x : as)
    for (Elem y : bs) out.insert(ring.add(x, y));
  return out;
}

namespace {

ElementSet zero_set(const FiniteRing& ring) {
  ElementSet s(ring.order());
  s.insert(ring.zero());
  return s;
}

std::vector<Elem> greedy_generators(const FiniteRing& ring, const ElementSet& members) {
  std::vector<Elem> gens;
  ElementSet cur = zero_set(ring);
  if (cur == members) return gens;
  for (Elem x : members.to_vector()) {
    if (cur.contains(x)) continue;
    cur = sum_set(ring, cur, principal_set(ring, x));
    gens.push_back(x);
    if (cur == members) break;
  }
  return gens;
}

ElementSet closure(const FiniteRing& ring, std::span<const Elem> gens) {
  ElementSet cur = zero_set(ring);
  for (Elem g : gens) {
    if (g >= ring.order())
      throw std::invalid_argument("generator index " + std::to_string(g) +
                                  " outside ring of order " + std::to_string(ring.order()));
    if (cur.contains(g)) continue;
    cur = sum_set(ring, cur, principal_set(ring, g));
  }
  return cur;
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring()))
    throw std::invalid_argument("ideals live in different rings: " + a.ring().descriptor() +
                                " vs " + b.ring().descriptor());
}

}  // namespace

Ideal::Ideal(FiniteRing ring, ElementSet members)
    : ring_(std::move(ring)), members_(std::move(members)) {
  elements_ = members_.to_vector();
  generators_ = greedy_generators(ring_, members_);
}

Ideal::Ideal(FiniteRing ring, ElementSet members, std::vector<Elem> generators)
    : ring_(std::move(ring)),
      members_(std::move(members)),
      generators_(std::move(generators)) {
  elements_ = members_.to_vector();
}

std::string Ideal::display() const {
  if (generators_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ',';
    out += ring_.display(generators_[i]);
  }
  return out + ")";
}

std::string Ideal::spec() const {
  if (generators_.empty()) return "gen:none";
  std::string out = "gen:";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(generators_[i]);
  }
  return out;
}

bool operator==(const Ideal& a, const Ideal& b) {
  return a.ring_ == b.ring_ && a.members_ == b.members_;
}

std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
  if (auto c = a.elements_.size() <=> b.elements_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.elements_.begin(), a.elements_.end(),
                                                b.elements_.begin(), b.elements_.end());
}

Ideal ideal_from_generators(const FiniteRing& ring, std::span<const Elem> gens) {
  return Ideal(ring, closure(ring, gens));
}

Ideal principal_ideal(const FiniteRing& ring, Elem x) {
  const Elem g[] = {x};
  return ideal_from_generators(ring, g);
}

Ideal zero_ideal(const FiniteRing& ring) { return Ideal(ring, zero_set(ring)); }

Ideal unit_ideal(const FiniteRing& ring) { return principal_ideal(ring, ring.one()); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal(a.ring(), sum_set(a.ring(), a.members(), b.members()));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  const auto& ring = a.ring();
  std::vector<Elem> gens;
  for (Elem x : a.generators())
    for (Elem y : b.generators()) gens.push_back(ring.mul(x, y));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Ideal(ring, closure(ring, gens));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return Ideal(a.ring(), a.members().intersect(b.members()));
}

Ideal ideal_power(const Ideal& a, unsigned n) {
  Ideal out = unit_ideal(a.ring());
  for (unsigned i = 0; i < n; ++i) out = ideal_product(out, a);
  return out;
}

Ideal ideal_radical(const Ideal& ideal) {
  const auto& ring = ideal.ring();
  ElementSet rad(ring.order());
  for (Elem x = 0; x < ring.order(); ++x) {
    Elem p = x;
    for (std::size_t t = 1; t <= ring.order(); ++t) {
      if (ideal.contains(p)) {
        rad.insert(x);
        break;
      }
      p = ring.mul(p, x);
    }
  }
  if (!check_ideal_closure(ring, rad))
    throw VerificationFailure("radical of " + ideal.display() + " is not an ideal");
  return Ideal(ring, std::move(rad));
}

bool is_prime(const Ideal& ideal) {
  if (!ideal.is_proper()) return false;
  const auto& ring = ideal.ring();
  std::vector<Elem> outside;
  for (Elem x = 0; x < ring.order(); ++x)
    if (!ideal.contains(x)) outside.push_back(x);
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = i; j < outside.size(); ++j)
      if (ideal.contains(ring.mul(outside[i], outside[j]))) return false;
  return true;
}

bool is_radical_ideal(const Ideal& ideal) { return ideal_radical(ideal) == ideal; }

bool check_ideal_closure(const FiniteRing& ring, const ElementSet& members) {
  if (!members.contains(ring.zero())) return false;
  const auto elems = members.to_vector();
  for (Elem a : elems) {
    if (!members.contains(ring.neg(a))) return false;
    for (Elem b : elems)
      if (!members.contains(ring.add(a, b))) return false;
    for (Elem r = 0; r < ring.order(); ++r)
      if (!members.contains(ring.mul(r, a))) return false;
  }
  return true;
}

Ideal parse_ideal(const FiniteRing& ring, std::string_view text) {
  text = detail::trim(text);
  std::vector<Elem> gens;
  if (text.starts_with("gen:")) {
    auto body = text.substr(4);
    if (body == "none") return zero_ideal(ring);
    std::size_t pos = 0;
    while (true) {
      std::size_t end = body.find(',', pos);
      auto tok = body.substr(pos, end == std::string_view::npos ? body.size() - pos : end - pos);
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
        throw ParseError("ideal spec: expected element index", 1, 5 + pos);
      if (v >= ring.order())
        throw ParseError("ideal spec: element index " + std::to_string(v) +
                             " outside ring of order " + std::to_string(ring.order()),
                         1, 5 + pos);
      gens.push_back(static_cast<Elem>(v));
      if (end == std::string_view::npos) break;
      pos = end + 1;
    }
    return ideal_from_generators(ring, gens);
  }
  if (text == "(0)") return zero_ideal(ring);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    auto inner = text.substr(1, text.size() - 2);
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
      if (i < inner.size() && (inner[i] == '(' || inner[i] == '[')) ++depth;
      if (i < inner.size() && (inner[i] == ')' || inner[i] == ']')) --depth;
      if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
        gens.push_back(ring.parse_element(inner.substr(start, i - start)));
        start = i + 1;
      }
    }
    return ideal_from_generators(ring, gens);
  }
  throw ParseError("ideal spec: expected 'gen:...' or '(...)'", 1, 1);
}

Ideal QuotientRing::image(const Ideal& ideal) const {
  ElementSet s(ring.order());
  for (Elem x : ideal.elements()) s.insert(project[x]);
  // The image of an ideal under a surjection is an ideal.
  return Ideal(ring, std::move(s));
}

Ideal QuotientRing::preimage(const Ideal& ideal, const FiniteRing& base) const {
  ElementSet s(base.order());
  for (Elem x = 0; x < base.order(); ++x)
    if (ideal.contains(project[x])) s.insert(x);
  return Ideal(base, std::move(s));
}

QuotientRing make_quotient(const Ideal& modulus) {
  const auto& base = modulus.ring();
  if (modulus.is_whole())
    throw std::invalid_argument("quotient by the unit ideal is the zero ring");
  const std::size_t n = base.order();
  const std::size_t q = n / modulus.size();
  if (q > kQuotientOrderLimit)
    throw CapExceeded("quotient order " + std::to_string(q) + " exceeds table limit");

  QuotientRing out{FiniteRing(nullptr), std::vector<Elem>(n, 0), {}};
  std::vector<Elem> rep(n, static_cast<Elem>(n));
  for (Elem x = 0; x < n; ++x) {
    if (rep[x] != n) continue;
    // x is the least element of its coset
    for (Elem j : modulus.elements()) rep[base.add(x, j)] = x;
    out.lift.push_back(x);
  }
  std::vector<Elem> index_of_rep(n, 0);
  for (Elem i = 0; i < out.lift.size(); ++i) index_of_rep[out.lift[i]] = i;
  for (Elem x = 0; x < n; ++x) out.project[x] = index_of_rep[rep[x]];

  std::vector<Elem> add(q * q), mul(q * q), neg(q);
  std::vector<std::string> displays(q);
  for (Elem i = 0; i < q; ++i) {
    const Elem a = out.lift[i];
    neg[i] = out.project[base.neg(a)];
    displays[i] = "[" + base.display(a) + "]";
    for (Elem j = 0; j < q; ++j) {
      const Elem b = out.lift[j];
      add[i * q + j] = out.project[base.add(a, b)];
      mul[i * q + j] = out.project[base.mul(a, b)];
    }
  }
  out.ring = FiniteRing::from_tables(q, std::move(add), std::move(mul), std::move(neg),
                                     out.project[base.zero()], out.project[base.one()],
                                     base.descriptor() + "/" + modulus.display(),
                                     std::move(displays));
  return out;
}

}  // namespace absorb
