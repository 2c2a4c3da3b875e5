#include "absorb/polynomial.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "absorb/detail/text.hpp"
#include "absorb/error.hpp"

namespace absorb {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0U); }

bool MonomialOrder::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return b < a;
}

Polynomial::Polynomial(FiniteRing ring, unsigned vars) : ring_(std::move(ring)), vars_(vars) {
  if (vars == 0) throw std::invalid_argument("polynomials need at least one variable");
}

Polynomial Polynomial::constant(const FiniteRing& ring, unsigned vars, Elem c) {
  Polynomial p(ring, vars);
  p.set(Exponent(vars, 0), c);
  return p;
}

Polynomial Polynomial::term(const FiniteRing& ring, Exponent exponent, Elem c) {
  Polynomial p(ring, static_cast<unsigned>(exponent.size()));
  p.set(exponent, c);
  return p;
}

Polynomial Polynomial::from_coefficients(const FiniteRing& ring, const std::vector<Elem>& coeffs) {
  Polynomial p(ring, 1);
  for (std::uint32_t i = 0; i < coeffs.size(); ++i) p.set(Exponent{i}, coeffs[i]);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

Elem Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ring_.zero() : it->second;
}

void Polynomial::set(const Exponent& e, Elem c) {
  if (e.size() != vars_) throw std::invalid_argument("exponent has wrong number of variables");
  if (c >= ring_.order()) throw std::invalid_argument("coefficient outside the ring");
  if (c == ring_.zero())
    terms_.erase(e);
  else
    terms_[e] = c;
}

std::vector<Elem> Polynomial::coefficients() const {
  std::vector<Elem> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(c);
  return out;
}

std::string monomial_display(const Exponent& e) {
  static constexpr char kNames[] = {'x', 'y', 'z', 'w'};
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += '*';
    if (e.size() > 4)
      out += 'x' + std::to_string(v + 1);
    else
      out += kNames[v];
    if (e[v] > 1) out += '^' + std::to_string(e[v]);
  }
  return out;
}

std::string Polynomial::display() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += '+';
    const std::string mono = monomial_display(e);
    if (mono.empty() || c != ring_.one()) out += std::to_string(c);
    out += mono;
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

namespace {

void require_compatible(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring()))
    throw std::invalid_argument("polynomials over different rings: " + f.ring().descriptor() +
                                " vs " + g.ring().descriptor());
  if (f.vars() != g.vars())
    throw std::invalid_argument("polynomials in different numbers of variables");
}

}  // namespace

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  require_compatible(f, g);
  Polynomial out = f;
  for (const auto& [e, c] : g.terms()) out.set(e, f.ring().add(out.coefficient(e), c));
  return out;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  require_compatible(f, g);
  const auto& ring = f.ring();
  Polynomial out(ring, f.vars());
  Exponent e(f.vars());
  for (const auto& [ea, ca] : f.terms())
    for (const auto& [eb, cb] : g.terms()) {
      for (unsigned v = 0; v < f.vars(); ++v) e[v] = ea[v] + eb[v];
      out.set(e, ring.add(out.coefficient(e), ring.mul(ca, cb)));
    }
  return out;
}

Polynomial poly_neg(const Polynomial& f) {
  Polynomial out(f.ring(), f.vars());
  for (const auto& [e, c] : f.terms()) out.set(e, f.ring().neg(c));
  return out;
}

Polynomial poly_scale(const Polynomial& f, Elem c) {
  Polynomial out(f.ring(), f.vars());
  for (const auto& [e, a] : f.terms()) out.set(e, f.ring().mul(a, c));
  return out;
}

Polynomial parse_polynomial(const FiniteRing& ring, unsigned vars, std::string_view text) {
  const std::string_view full = text;
  text = detail::trim(text);
  const std::size_t base = static_cast<std::size_t>(text.data() - full.data());
  Polynomial out(ring, vars);
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    throw ParseError("polynomial: " + msg, 1, base + i + 1);
  };
  auto skip_space = [&] {
    while (i < text.size() && detail::is_space(text[i])) ++i;
  };
  if (text.empty()) fail("empty literal");
  while (true) {
    skip_space();
    const std::size_t term_start = i;
    Elem coeff = ring.one();
    bool have_coeff = false;
    if (i < text.size() && detail::is_digit(text[i])) {
      std::uint64_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc{}) fail("coefficient out of range");
      if (v >= ring.order()) fail("coefficient index " + std::to_string(v) + " outside ring");
      i = static_cast<std::size_t>(ptr - text.data());
      coeff = static_cast<Elem>(v);
      have_coeff = true;
    }
    Exponent e(vars, 0);
    bool have_var = false;
    while (i < text.size()) {
      skip_space();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_space();
      }
      if (i >= text.size() || text[i] == '+') break;
      std::size_t var = 0;
      if (vars > 4) {
        if (text[i] != 'x') fail("expected variable x1..x" + std::to_string(vars));
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
      std::uint32_t power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t start = i;
        while (i < text.size() && detail::is_digit(text[i])) ++i;
        if (start == i) fail("expected exponent");
        power = static_cast<std::uint32_t>(std::stoul(std::string(text.substr(start, i - start))));
      }
      e[var] += power;
      have_var = true;
    }
    if (!have_coeff && !have_var) {
      i = term_start;
      fail("empty term");
    }
    out.set(e, ring.add(out.coefficient(e), coeff));
    skip_space();
    if (i >= text.size()) break;
    if (text[i] != '+') fail("expected '+'");
    ++i;
  }
  return out;
}

}  // namespace absorb
