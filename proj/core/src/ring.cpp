#include "absorb/ring.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "absorb/detail/ring_data.hpp"
#include "absorb/detail/text.hpp"
#include "absorb/error.hpp"

namespace absorb {

using detail::RingData;

namespace {

Elem structural_add(const RingData& d, Elem a, Elem b);
Elem structural_mul(const RingData& d, Elem a, Elem b);
Elem structural_neg(const RingData& d, Elem a);

Elem op_add(const RingData& d, Elem a, Elem b) {
  if (!d.add_table.empty()) return d.add_table[a * d.order + b];
  return structural_add(d, a, b);
}

Elem op_mul(const RingData& d, Elem a, Elem b) {
  if (!d.mul_table.empty()) return d.mul_table[a * d.order + b];
  return structural_mul(d, a, b);
}

Elem op_neg(const RingData& d, Elem a) {
  if (!d.neg_table.empty()) return d.neg_table[a];
  return structural_neg(d, a);
}

// Truncated rings store an element as base-p digits, one per monomial.
void trunc_decode(const RingData& d, Elem a, std::vector<unsigned>& out) {
  out.assign(d.monomials.size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = a % d.p;
    a /= d.p;
  }
}

Elem trunc_encode(const RingData& d, const std::vector<unsigned>& coeffs) {
  Elem v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * d.p + coeffs[i];
  return v;
}

Elem structural_add(const RingData& d, Elem a, Elem b) {
  switch (d.kind) {
    case RingKind::Zmod:
      return static_cast<Elem>((std::uint64_t{a} + b) % d.modulus);
    case RingKind::Product: {
      const auto nb = d.right->order;
      return op_add(*d.left, a / nb, b / nb) * nb + op_add(*d.right, a % nb, b % nb);
    }
    case RingKind::Truncated: {
      Elem out = 0, scale = 1;
      for (std::size_t i = 0; i < d.monomials.size(); ++i) {
        out += ((a % d.p + b % d.p) % d.p) * scale;
        a /= d.p;
        b /= d.p;
        scale *= d.p;
      }
      return out;
    }
    case RingKind::Table:
      break;
  }
  throw std::logic_error("table ring without tables");
}

Elem structural_neg(const RingData& d, Elem a) {
  switch (d.kind) {
    case RingKind::Zmod:
      return a == 0 ? 0 : static_cast<Elem>(d.modulus - a);
    case RingKind::Product: {
      const auto nb = d.right->order;
      return op_neg(*d.left, a / nb) * nb + op_neg(*d.right, a % nb);
    }
    case RingKind::Truncated: {
      Elem out = 0, scale = 1;
      for (std::size_t i = 0; i < d.monomials.size(); ++i) {
        out += ((d.p - a % d.p) % d.p) * scale;
        a /= d.p;
        scale *= d.p;
      }
      return out;
    }
    case RingKind::Table:
      break;
  }
  throw std::logic_error("table ring without tables");
}

Elem structural_mul(const RingData& d, Elem a, Elem b) {
  switch (d.kind) {
    case RingKind::Zmod:
      return static_cast<Elem>((std::uint64_t{a} * b) % d.modulus);
    case RingKind::Product: {
      const auto nb = d.right->order;
      return op_mul(*d.left, a / nb, b / nb) * nb + op_mul(*d.right, a % nb, b % nb);
    }
    case RingKind::Truncated: {
      std::vector<unsigned> x, y;
      trunc_decode(d, a, x);
      trunc_decode(d, b, y);
      const std::size_t m = d.monomials.size();
      std::vector<unsigned> z(m, 0);
      for (std::size_t i = 0; i < m; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
          if (y[j] == 0) continue;
          const int k = d.monomial_product[i * m + j];
          if (k < 0) continue;
          z[k] = (z[k] + x[i] * y[j]) % d.p;
        }
      }
      return trunc_encode(d, z);
    }
    case RingKind::Table:
      break;
  }
  throw std::logic_error("table ring without tables");
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

void fill_tables(RingData& d) {
  const std::size_t n = d.order;
  std::vector<Elem> add(n * n), mul(n * n), neg(n);
  for (Elem a = 0; a < n; ++a) {
    neg[a] = structural_neg(d, a);
    for (Elem b = 0; b < n; ++b) {
      add[a * n + b] = structural_add(d, a, b);
      mul[a * n + b] = structural_mul(d, a, b);
    }
  }
  d.add_table = std::move(add);
  d.mul_table = std::move(mul);
  d.neg_table = std::move(neg);
}

void fill_units(RingData& d) {
  d.units.assign(d.order, 0);
  switch (d.kind) {
    case RingKind::Zmod:
      for (Elem a = 0; a < d.order; ++a) d.units[a] = gcd64(a, d.modulus) == 1;
      return;
    case RingKind::Product: {
      const auto nb = d.right->order;
      for (Elem a = 0; a < d.order; ++a)
        d.units[a] = d.left->units[a / nb] && d.right->units[a % nb];
      return;
    }
    case RingKind::Truncated:
      for (Elem a = 0; a < d.order; ++a) d.units[a] = (a % d.p) != 0;
      return;
    case RingKind::Table:
      for (Elem a = 0; a < d.order; ++a)
        for (Elem b = 0; b < d.order; ++b)
          if (op_mul(d, a, b) == d.one) {
            d.units[a] = 1;
            break;
          }
      return;
  }
}

void finish(RingData& d) {
  if (d.order <= kTableLimit && d.add_table.empty()) fill_tables(d);
  fill_units(d);
}

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap)
    throw CapExceeded("ring order " + std::to_string(order) +
                      " exceeds order cap " + std::to_string(cap));
}

std::string monomial_name(const std::vector<unsigned>& exps) {
  static constexpr char kNames[] = {'x', 'y', 'z', 'w'};
  const bool indexed = exps.size() > 4;
  std::string out;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    if (indexed) {
      if (!out.empty()) out += '*';
      out += 'x' + std::to_string(v + 1);
    } else {
      out += kNames[v];
    }
    if (exps[v] > 1) out += '^' + std::to_string(exps[v]);
  }
  return out;
}

// Parses a monomial written by monomial_name() back into exponents.
std::vector<unsigned> parse_monomial(std::string_view text, unsigned vars,
                                     std::size_t offset) {
  std::vector<unsigned> exps(vars, 0);
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg, 1, offset + i + 1);
  };
  while (i < text.size()) {
    if (text[i] == '*') {
      ++i;
      continue;
    }
    std::size_t var = 0;
    if (vars > 4) {
      if (text[i] != 'x') fail("expected variable");
      ++i;
      std::size_t start = i;
      while (i < text.size() && detail::is_digit(text[i])) ++i;
      if (start == i) fail("expected variable number");
      var = std::stoul(std::string(text.substr(start, i - start)));
      if (var == 0 || var > vars) fail("variable out of range");
      --var;
    } else {
      static constexpr std::string_view kNames = "xyzw";
      const auto pos = kNames.find(text[i]);
      if (pos == std::string_view::npos || pos >= vars) fail("unknown variable");
      var = pos;
      ++i;
    }
    unsigned e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      while (i < text.size() && detail::is_digit(text[i])) ++i;
      if (start == i) fail("expected exponent");
      e = static_cast<unsigned>(std::stoul(std::string(text.substr(start, i - start))));
    }
    exps[var] += e;
  }
  return exps;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::string display_impl(const RingData& d, Elem a) {
  switch (d.kind) {
    case RingKind::Zmod:
      return std::to_string(a);
    case RingKind::Product: {
      const auto nb = d.right->order;
      return "(" + display_impl(*d.left, a / nb) + "," +
             display_impl(*d.right, a % nb) + ")";
    }
    case RingKind::Truncated: {
      if (a == 0) return "0";
      std::vector<unsigned> c;
      trunc_decode(d, a, c);
      std::string out;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += '+';
        const std::string mono = monomial_name(d.monomials[i]);
        if (mono.empty() || c[i] != 1) out += std::to_string(c[i]);
        out += mono;
      }
      return out;
    }
    case RingKind::Table:
      if (a < d.displays.size()) return d.displays[a];
      return "#" + std::to_string(a);
  }
  return {};
}

Elem parse_impl(const RingData& d, std::string_view text, std::size_t offset) {
  auto fail = [&](const std::string& msg, std::size_t at) -> Elem {
    throw ParseError(msg + " in element '" + std::string(text) + "'", 1,
                     offset + at + 1);
  };
  switch (d.kind) {
    case RingKind::Zmod: {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        return fail("expected residue", 0);
      if (v >= d.modulus) return fail("residue out of range", 0);
      return static_cast<Elem>(v);
    }
    case RingKind::Product: {
      if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        return fail("expected tuple", 0);
      auto inner = text.substr(1, text.size() - 2);
      auto parts = split_top_level(inner, ',');
      if (parts.size() != 2) return fail("expected pair", 1);
      const Elem a = parse_impl(*d.left, parts[0], offset + 1);
      const Elem b = parse_impl(*d.right, parts[1], offset + 2 + parts[0].size());
      return a * static_cast<Elem>(d.right->order) + b;
    }
    case RingKind::Truncated: {
      if (text == "0") return 0;
      std::vector<unsigned> coeffs(d.monomials.size(), 0);
      std::size_t pos = 0;
      for (auto term : split_top_level(text, '+')) {
        std::size_t i = 0;
        while (i < term.size() && detail::is_digit(term[i])) ++i;
        unsigned c = 1;
        if (i > 0) c = static_cast<unsigned>(std::stoul(std::string(term.substr(0, i))));
        if (term.empty()) return fail("empty term", pos);
        auto exps = parse_monomial(term.substr(i), d.vars, offset + pos + i);
        auto it = std::find(d.monomials.begin(), d.monomials.end(), exps);
        if (it == d.monomials.end()) {
          // degree at or above the nilpotency index: the term is zero
          pos += term.size() + 1;
          continue;
        }
        auto idx = static_cast<std::size_t>(it - d.monomials.begin());
        coeffs[idx] = (coeffs[idx] + c) % d.p;
        pos += term.size() + 1;
      }
      return trunc_encode(d, coeffs);
    }
    case RingKind::Table: {
      for (Elem a = 0; a < d.order; ++a)
        if (display_impl(d, a) == text) return a;
      return fail("unknown element", 0);
    }
  }
  return 0;
}

void collect_cyclic(const RingData& d, std::vector<std::uint64_t>& out, bool& ok) {
  switch (d.kind) {
    case RingKind::Zmod:
      out.push_back(d.modulus);
      return;
    case RingKind::Product:
      collect_cyclic(*d.left, out, ok);
      collect_cyclic(*d.right, out, ok);
      return;
    default:
      ok = false;
  }
}

void split_impl(const RingData& d, Elem a, std::vector<std::uint64_t>& out) {
  if (d.kind == RingKind::Zmod) {
    out.push_back(a);
    return;
  }
  const auto nb = d.right->order;
  split_impl(*d.left, a / nb, out);
  split_impl(*d.right, a % nb, out);
}

Elem join_impl(const RingData& d, std::span<const std::uint64_t>& residues) {
  if (d.kind == RingKind::Zmod) {
    const auto v = residues.front() % d.modulus;
    residues = residues.subspan(1);
    return static_cast<Elem>(v);
  }
  const Elem a = join_impl(*d.left, residues);
  const Elem b = join_impl(*d.right, residues);
  return a * static_cast<Elem>(d.right->order) + b;
}

}  // namespace

FiniteRing::FiniteRing(std::shared_ptr<const RingData> data) : data_(std::move(data)) {}

std::size_t FiniteRing::order() const { return data_->order; }
Elem FiniteRing::zero() const { return data_->zero; }
Elem FiniteRing::one() const { return data_->one; }
Elem FiniteRing::add(Elem a, Elem b) const { return op_add(*data_, a, b); }
Elem FiniteRing::mul(Elem a, Elem b) const { return op_mul(*data_, a, b); }
Elem FiniteRing::neg(Elem a) const { return op_neg(*data_, a); }

Elem FiniteRing::pow(Elem a, unsigned e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

bool FiniteRing::is_unit(Elem a) const { return data_->units[a] != 0; }

Elem FiniteRing::inverse(Elem a) const {
  if (!is_unit(a))
    throw std::invalid_argument(display(a) + " is not a unit of " + descriptor());
  for (Elem b = 0; b < order(); ++b)
    if (mul(a, b) == one()) return b;
  throw std::logic_error("unit without inverse");
}

RingKind FiniteRing::kind() const { return data_->kind; }
const std::string& FiniteRing::descriptor() const { return data_->descriptor; }
bool FiniteRing::has_tables() const { return !data_->mul_table.empty(); }

std::string FiniteRing::display(Elem a) const { return display_impl(*data_, a); }

Elem FiniteRing::parse_element(std::string_view text) const {
  return parse_impl(*data_, detail::trim(text), 0);
}

std::vector<std::uint64_t> FiniteRing::cyclic_factors() const {
  std::vector<std::uint64_t> out;
  bool ok = true;
  collect_cyclic(*data_, out, ok);
  if (!ok) out.clear();
  return out;
}

std::vector<std::uint64_t> FiniteRing::split_cyclic(Elem a) const {
  std::vector<std::uint64_t> out;
  split_impl(*data_, a, out);
  return out;
}

Elem FiniteRing::join_cyclic(std::span<const std::uint64_t> residues) const {
  return join_impl(*data_, residues);
}

std::optional<std::pair<FiniteRing, FiniteRing>> FiniteRing::product_factors() const {
  if (data_->kind != RingKind::Product) return std::nullopt;
  return std::make_pair(FiniteRing(data_->left), FiniteRing(data_->right));
}

FiniteRing FiniteRing::from_tables(std::size_t order, std::vector<Elem> add,
                                   std::vector<Elem> mul, std::vector<Elem> neg,
                                   Elem zero, Elem one, std::string descriptor,
                                   std::vector<std::string> displays) {
  if (order < 2) throw std::invalid_argument("table ring needs order >= 2");
  if (add.size() != order * order || mul.size() != order * order ||
      neg.size() != order)
    throw std::invalid_argument("table sizes do not match order");
  auto d = std::make_shared<RingData>();
  d->kind = RingKind::Table;
  d->order = order;
  d->zero = zero;
  d->one = one;
  d->descriptor = std::move(descriptor);
  d->add_table = std::move(add);
  d->mul_table = std::move(mul);
  d->neg_table = std::move(neg);
  d->displays = std::move(displays);
  fill_units(*d);
  return FiniteRing(std::move(d));
}

bool operator==(const FiniteRing& a, const FiniteRing& b) {
  return a.data_ == b.data_ ||
         (a.order() == b.order() && a.descriptor() == b.descriptor());
}

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

FiniteRing make_zmod(std::size_t n, std::size_t order_cap) {
  if (n < 2) throw std::invalid_argument("zmod modulus must be >= 2 (got " +
                                         std::to_string(n) + ")");
  check_cap(n, order_cap);
  auto d = std::make_shared<RingData>();
  d->kind = RingKind::Zmod;
  d->order = n;
  d->modulus = n;
  d->zero = 0;
  d->one = 1;
  d->descriptor = "zmod:" + std::to_string(n);
  finish(*d);
  return FiniteRing(std::move(d));
}

FiniteRing make_product(const FiniteRing& a, const FiniteRing& b, std::size_t order_cap) {
  check_cap(a.order() * b.order(), order_cap);
  auto d = std::make_shared<RingData>();
  d->kind = RingKind::Product;
  d->order = a.order() * b.order();
  d->left = a.shared();
  d->right = b.shared();
  const auto nb = static_cast<Elem>(b.order());
  d->zero = a.zero() * nb + b.zero();
  d->one = a.one() * nb + b.one();
  d->descriptor = "prod:" + a.descriptor() + "," + b.descriptor();
  finish(*d);
  return FiniteRing(std::move(d));
}

FiniteRing make_truncated_local(unsigned p, unsigned vars, unsigned nil,
                                std::size_t order_cap) {
  if (!is_prime_number(p))
    throw std::invalid_argument("trunc characteristic must be prime (got " +
                                std::to_string(p) + ")");
  if (vars < 1) throw std::invalid_argument("trunc needs vars >= 1");
  if (nil < 2) throw std::invalid_argument("trunc needs nil >= 2");

  // Monomials of total degree < nil, graded: degree ascending, then
  // lexicographically descending so that x precedes y.
  std::vector<std::vector<unsigned>> monos;
  std::vector<unsigned> cur(vars, 0);
  for (unsigned deg = 0; deg < nil; ++deg) {
    std::vector<std::vector<unsigned>> level;
    auto rec = [&](auto&& self, unsigned var, unsigned left) -> void {
      if (var + 1 == vars) {
        cur[var] = left;
        level.push_back(cur);
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        cur[var] = e;
        self(self, var + 1, left - e);
      }
    };
    rec(rec, 0, deg);
    monos.insert(monos.end(), level.begin(), level.end());
  }

  std::size_t order = 1;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (order > order_cap / p)
      throw CapExceeded("trunc ring order p^" + std::to_string(monos.size()) +
                        " exceeds order cap " + std::to_string(order_cap));
    order *= p;
  }

  auto d = std::make_shared<RingData>();
  d->kind = RingKind::Truncated;
  d->order = order;
  d->p = p;
  d->vars = vars;
  d->nil = nil;
  d->zero = 0;
  d->one = 1;
  const std::size_t m = monos.size();
  d->monomial_product.assign(m * m, -1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<unsigned> e(vars);
      for (unsigned v = 0; v < vars; ++v) e[v] = monos[i][v] + monos[j][v];
      auto it = std::find(monos.begin(), monos.end(), e);
      if (it != monos.end())
        d->monomial_product[i * m + j] = static_cast<int>(it - monos.begin());
    }
  d->monomials = std::move(monos);
  d->descriptor = "trunc:p=" + std::to_string(p) + ",vars=" + std::to_string(vars) +
                  ",nil=" + std::to_string(nil);
  finish(*d);
  return FiniteRing(std::move(d));
}

namespace {

class SpecParser {
 public:
  SpecParser(std::string_view text, std::size_t cap) : text_(text), cap_(cap) {}

  FiniteRing parse_all() {
    FiniteRing r = parse();
    if (pos_ != text_.size()) fail("trailing characters");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("ring spec: " + msg, 1, pos_ + 1);
  }

  bool consume(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view lit) {
    if (!consume(lit)) fail("expected '" + std::string(lit) + "'");
  }

  std::uint64_t number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && detail::is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected number");
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("number out of range");
    }
    return v;
  }

  FiniteRing parse() {
    const std::size_t start = pos_;
    try {
      if (consume("zmod:")) {
        const auto n = number();
        return make_zmod(n, cap_);
      }
      if (consume("prod:")) {
        FiniteRing a = parse();
        expect(",");
        FiniteRing b = parse();
        return make_product(a, b, cap_);
      }
      if (consume("trunc:")) {
        expect("p=");
        const auto p = number();
        expect(",vars=");
        const auto k = number();
        expect(",nil=");
        const auto e = number();
        if (p > 65536 || k > 64 || e > 64) fail("trunc parameter too large");
        return make_truncated_local(static_cast<unsigned>(p), static_cast<unsigned>(k),
                                    static_cast<unsigned>(e), cap_);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("ring spec: ") + e.what(), 1, start + 1);
    }
    fail("expected 'zmod:', 'prod:' or 'trunc:'");
  }

  std::string_view text_;
  std::size_t cap_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteRing parse_ring_spec(std::string_view spec, std::size_t order_cap) {
  return SpecParser(spec, order_cap).parse_all();
}

AxiomReport verify_ring_axioms(const FiniteRing& r, std::size_t order_limit) {
  AxiomReport rep;
  const auto n = static_cast<Elem>(r.order());
  if (r.order() > order_limit) {
    rep.skipped = true;
    return rep;
  }
  auto violation = [&](std::string axiom, std::vector<Elem> w) {
    rep.ok = false;
    rep.axiom = std::move(axiom);
    rep.witness = std::move(w);
    return rep;
  };
  if (r.zero() == r.one()) return violation("zero != one", {r.zero()});
  for (Elem a = 0; a < n; ++a) {
    if (r.neg(a) >= n) return violation("closure of negation", {a});
    for (Elem b = 0; b < n; ++b)
      if (r.add(a, b) >= n || r.mul(a, b) >= n)
        return violation("closure of operations", {a, b});
  }
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a) return violation("additive identity", {a});
    if (r.add(a, r.neg(a)) != r.zero()) return violation("additive inverse", {a});
    if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a)
      return violation("multiplicative identity", {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) return violation("additive commutativity", {a, b});
      if (r.mul(a, b) != r.mul(b, a))
        return violation("multiplicative commutativity", {a, b});
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab_sum = r.add(a, b);
      const Elem ab_prod = r.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (r.add(ab_sum, c) != r.add(a, r.add(b, c)))
          return violation("additive associativity", {a, b, c});
        if (r.mul(ab_prod, c) != r.mul(a, r.mul(b, c)))
          return violation("multiplicative associativity", {a, b, c});
        if (r.mul(a, r.add(b, c)) != r.add(ab_prod, r.mul(a, c)))
          return violation("distributivity", {a, b, c});
      }
    }
  return rep;
}

}  // namespace absorb
