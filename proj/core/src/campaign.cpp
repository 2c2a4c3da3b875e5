#include "absorb/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "absorb/absorbing.hpp"
#include "absorb/content.hpp"
#include "absorb/detail/parallel.hpp"
#include "absorb/detail/text.hpp"
#include "absorb/error.hpp"
#include "absorb/integers.hpp"
#include "absorb/lattice.hpp"

namespace absorb {

const std::vector<std::string>& campaign_checks() {
  static const std::vector<std::string> names{
      "omega-table", "conjecture1", "gaussian",        "armendariz",    "dm-bound",
      "poly-omega",  "bezout",      "certify-radical", "int-conjecture"};
  return names;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Counterexample: return "counterexample-found";
    case Status::CapExceeded: return "cap-exceeded";
    case Status::Skipped: return "skipped";
    case Status::Error: return "error";
  }
  return "error";
}

namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string> kBoundKeys{"max_deg", "cap",       "vars",  "height",
                                       "sample",  "order_cap", "budget"};
const std::set<std::string> kTopKeys{"rings", "checks", "bounds", "seed",
                                     "jobs",  "output", "timing"};
const std::set<std::string> kFormats{"json", "csv", "text"};

// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// Location of the first occurrence of a quoted token, for error messages.
[[noreturn]] void fail_at(std::string_view text, const std::string& token, const std::string& what) {
  const auto at = text.find('"' + token + '"');
  const auto [line, col] = position(text, at == std::string_view::npos ? 0 : at);
  throw ParseError(what, line, col);
}

std::uint64_t read_unsigned(std::string_view text, const Json& v, const std::string& key) {
  if (!v.is_number_unsigned()) fail_at(text, key, "'" + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

void set_bound(CampaignBounds& b, std::string_view text, const std::string& key, const Json& v) {
  const auto n = read_unsigned(text, v, key);
  auto narrow = [&](std::uint64_t limit) {
    if (n > limit) fail_at(text, key, "'" + key + "' is too large");
    return static_cast<unsigned>(n);
  };
  if (key == "max_deg") b.max_deg = narrow(64);
  else if (key == "cap") b.cap = narrow(64);
  else if (key == "vars") b.vars = narrow(8);
  else if (key == "height") b.height = n;
  else if (key == "sample") b.sample = n;
  else if (key == "order_cap") b.order_cap = n;
  else if (key == "budget") b.budget = n;
}

bool needs_seed(const std::vector<std::string>& checks) {
  return std::find(checks.begin(), checks.end(), "int-conjecture") != checks.end();
}

}  // namespace

void validate_config(const CampaignConfig& c) {
  if (c.rings.empty()) throw std::invalid_argument("config lists no rings");
  if (c.checks.empty()) throw std::invalid_argument("config lists no checks");
  const auto& known = campaign_checks();
  for (const auto& check : c.checks)
    if (std::find(known.begin(), known.end(), check) == known.end())
      throw std::invalid_argument("unknown check '" + check + "'");
  for (const auto& spec : c.rings) parse_ring_spec(spec, c.bounds.order_cap);
  if (needs_seed(c.checks) && !c.seed)
    throw std::invalid_argument("'seed' is required when int-conjecture is enabled");
  if (c.jobs == 0) throw std::invalid_argument("'jobs' must be >= 1");
  if (!kFormats.count(c.output.format))
    throw std::invalid_argument("output format must be json, csv or text");
  if (c.bounds.cap == 0) throw std::invalid_argument("'cap' must be >= 1");
  if (c.bounds.vars == 0) throw std::invalid_argument("'vars' must be >= 1");
  if (c.bounds.height == 0) throw std::invalid_argument("'height' must be >= 1");
  if (c.bounds.sample == 0) throw std::invalid_argument("'sample' must be >= 1");
}

CampaignConfig parse_campaign_config(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, col] = position(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed config: " + std::string(e.what()), line, col);
  }
  if (!doc.is_object()) throw ParseError("config must be a JSON object", 1, 1);

  CampaignConfig c;
  std::set<std::string> flat_bounds, nested_bounds;
  for (const auto& [key, value] : doc.items()) {
    if (kBoundKeys.count(key)) {
      if (nested_bounds.count(key)) fail_at(text, key, "bound '" + key + "' given twice");
      set_bound(c.bounds, text, key, value);
      flat_bounds.insert(key);
      continue;
    }
    if (!kTopKeys.count(key)) fail_at(text, key, "unknown config key '" + key + "'");
    if (key == "rings" || key == "checks") {
      if (!value.is_array()) fail_at(text, key, "'" + key + "' must be a list of strings");
      auto& out = key == "rings" ? c.rings : c.checks;
      for (const auto& item : value) {
        if (!item.is_string()) fail_at(text, key, "'" + key + "' must be a list of strings");
        out.push_back(item.get<std::string>());
      }
    } else if (key == "bounds") {
      if (!value.is_object()) fail_at(text, key, "'bounds' must be an object");
      for (const auto& [bk, bv] : value.items()) {
        if (!kBoundKeys.count(bk)) fail_at(text, bk, "unknown bound '" + bk + "'");
        if (flat_bounds.count(bk)) fail_at(text, bk, "bound '" + bk + "' given twice");
        set_bound(c.bounds, text, bk, bv);
        nested_bounds.insert(bk);
      }
    } else if (key == "seed") {
      c.seed = read_unsigned(text, value, key);
    } else if (key == "jobs") {
      const auto j = read_unsigned(text, value, key);
      if (j == 0 || j > 1024) fail_at(text, key, "'jobs' must be between 1 and 1024");
      c.jobs = static_cast<unsigned>(j);
    } else if (key == "timing") {
      if (!value.is_boolean()) fail_at(text, key, "'timing' must be true or false");
      c.timing = value.get<bool>();
    } else if (key == "output") {
      if (!value.is_object()) fail_at(text, key, "'output' must be an object");
      for (const auto& [ok, ov] : value.items()) {
        if (ok != "format" && ok != "path") fail_at(text, ok, "unknown output key '" + ok + "'");
        if (!ov.is_string()) fail_at(text, ok, "'" + ok + "' must be a string");
        (ok == "format" ? c.output.format : c.output.path) = ov.get<std::string>();
      }
    }
  }

  if (c.rings.empty()) fail_at(text, "rings", "config lists no rings");
  if (c.checks.empty()) fail_at(text, "checks", "config lists no checks");
  const auto& known = campaign_checks();
  for (const auto& check : c.checks)
    if (std::find(known.begin(), known.end(), check) == known.end())
      fail_at(text, check, "unknown check '" + check + "'");
  for (const auto& spec : c.rings) {
    try {
      parse_ring_spec(spec, c.bounds.order_cap);
    } catch (const std::exception& e) {
      fail_at(text, spec, "ring '" + spec + "': " + e.what());
    }
  }
  if (!kFormats.count(c.output.format))
    fail_at(text, c.output.format, "output format must be json, csv or text");
  try {
    validate_config(c);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
  return c;
}

namespace {

template <typename Range, typename Show>
std::string tuple_display(const Range& items, Show show) {
  std::string out = "(";
  bool first = true;
  for (const auto& x : items) {
    if (!first) out += ',';
    out += show(x);
    first = false;
  }
  return out + ")";
}

std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.display());
  return out;
}

SearchBounds search_bounds(const CheckRequest& r) {
  SearchBounds b;
  b.vars = r.bounds.vars;
  b.max_deg = r.bounds.max_deg;
  b.budget = r.bounds.budget;
  b.samples = r.bounds.sample;
  b.seed = r.seed;
  b.jobs = r.jobs;
  return b;
}

Status pair_status(const PairSearchResult& r) {
  return r.found() ? Status::Counterexample : Status::Pass;
}

Record pair_record(const PairSearchResult& r, bool gaussian) {
  Record rec;
  rec.mode = r.mode.label();
  rec.status = pair_status(r);
  if (!r.witness) {
    rec.detail = "no counterexample";
  } else {
    const auto& [f, g] = *r.witness;
    rec.witness = {f.display(), g.display()};
    const auto cf = content(f), cg = content(g);
    const auto prod = ideal_product(cf, cg);
    if (gaussian)
      rec.detail = "f = " + f.display() + ", g = " + g.display() + ": c(fg) = " +
                   content(poly_mul(f, g)).display() + " but c(f)c(g) = " + prod.display();
    else
      rec.detail = "f = " + f.display() + ", g = " + g.display() + ": fg = 0 but c(f)c(g) = " +
                   prod.display();
  }
  if (!r.notice.empty()) rec.data.emplace_back("notice", r.notice);
  rec.data.emplace_back("space", std::to_string(r.space));
  return rec;
}

std::string omega_text(const std::optional<unsigned>& v, unsigned cap) {
  return v ? std::to_string(*v) : "> " + std::to_string(cap);
}

std::vector<Record> ideal_records(const CheckRequest& req, const FiniteRing& ring,
                                  const IdealLattice& lat) {
  std::vector<std::pair<std::size_t, Ideal>> targets;
  if (req.ideal) {
    auto ideal = parse_ideal(ring, *req.ideal);
    targets.emplace_back(lat.index_of(ideal) + 1, std::move(ideal));
  } else {
    for (std::size_t i = 0; i < lat.size(); ++i)
      if (lat.ideal(static_cast<IdealLattice::Index>(i)).is_proper())
        targets.emplace_back(i + 1, lat.ideal(static_cast<IdealLattice::Index>(i)));
  }
  const ScanOptions opts{true, req.jobs};
  const unsigned cap = req.bounds.cap;
  std::vector<Record> out;
  for (const auto& [rank, ideal] : targets) {
    Record rec;
    rec.ideal = ideal.display();
    rec.ideal_rank = rank;
    rec.mode = "exhaustive";
    if (!ideal.is_proper()) {
      rec.status = Status::Skipped;
      rec.detail = "ideal is the whole ring";
      out.push_back(std::move(rec));
      continue;
    }
    auto show = [&ring](Elem x) { return ring.display(x); };
    if (req.check == "omega-table") {
      const auto w = omega(ideal, cap, opts);
      rec.detail = "omega = " + omega_text(w.value, cap);
      if (!w.lower_witness.empty()) {
        rec.detail += ", witness = " + tuple_display(w.lower_witness, show);
        for (Elem x : w.lower_witness) rec.witness.push_back(ring.display(x));
      }
      rec.status = w.exact() ? Status::Pass : Status::CapExceeded;
      rec.data.emplace_back("omega", w.exact() ? std::to_string(*w.value) : "exceeds-cap");
    } else if (req.check == "strong-omega") {
      const auto s = strong_omega(ideal, cap, lat, opts);
      rec.detail = "strong omega = " + omega_text(s.value, cap);
      if (!s.lower_witness.empty()) {
        rec.detail += ", witness = " +
                      tuple_display(s.lower_witness, [](const Ideal& i) { return i.display(); });
        for (const auto& i : s.lower_witness) rec.witness.push_back(i.display());
      }
      rec.status = s.exact() ? Status::Pass : Status::CapExceeded;
      rec.data.emplace_back("strong_omega", s.exact() ? std::to_string(*s.value) : "exceeds-cap");
    } else if (req.check == "conjecture1") {
      const auto w = omega(ideal, cap, opts);
      const auto s = strong_omega(ideal, cap, lat, opts);
      const auto a = compare_omegas(w, s);
      const char* verdict = a == Agreement::Equal ? "equal"
                            : a == Agreement::Differ ? "differ"
                                                     : "undetermined";
      rec.detail = "omega = " + omega_text(w.value, cap) + ", strong omega = " +
                   omega_text(s.value, cap) + ": " + verdict;
      rec.status = a == Agreement::Equal    ? Status::Pass
                   : a == Agreement::Differ ? Status::Counterexample
                                            : Status::CapExceeded;
      rec.data.emplace_back("agreement", verdict);
    } else if (req.check == "poly-omega") {
      const auto rep = verify_poly_omega(ideal, search_bounds(req), cap, opts);
      rec.mode = rep.mode.label();
      rec.detail = "omega_base = " + omega_text(rep.omega_base.value, cap) +
                   ", lower witness = " +
                   tuple_display(rep.lower_witness, [](const Polynomial& p) { return p.display(); }) +
                   (rep.lower_valid ? " valid" : " INVALID");
      if (rep.violation) {
        rec.status = Status::Counterexample;
        rec.witness = poly_strings(*rep.violation);
        rec.detail += ", violation = " + tuple_display(rec.witness, [](const auto& s) { return s; });
      } else {
        rec.witness = poly_strings(rep.lower_witness);
        rec.status = !rep.lower_valid ? Status::Fail
                     : !rep.searched  ? Status::CapExceeded
                                      : Status::Pass;
        rec.detail += rep.searched ? ", violation = none" : ", search skipped";
      }
      rec.data.emplace_back("candidates", std::to_string(rep.candidates));
      rec.data.emplace_back("space", std::to_string(rep.space));
      if (!rep.notice.empty()) rec.data.emplace_back("notice", rep.notice);
    } else if (req.check == "certify-radical") {
      if (!is_radical_ideal(ideal)) {
        rec.status = Status::Skipped;
        rec.detail = "ideal is not radical";
        out.push_back(std::move(rec));
        continue;
      }
      const auto sweep = certify_pair_sweep(ideal, search_bounds(req));
      rec.mode = sweep.mode.label();
      rec.detail = std::to_string(sweep.certified) + " pairs certified, max exponent " +
                   std::to_string(sweep.max_exponent);
      const bool bound_applies = req.bounds.vars == 1;
      if (sweep.failure) {
        rec.status = Status::Fail;
        rec.witness = {sweep.failure->first.display(), sweep.failure->second.display()};
        rec.detail += ", final containment failed";
      } else if (bound_applies && !sweep.exponents_bounded) {
        rec.status = Status::Fail;
        rec.detail += ", exponent above max_deg + 1";
      } else if (sweep.cap_hit) {
        rec.status = Status::CapExceeded;
        rec.witness = {sweep.cap_hit->first.display(), sweep.cap_hit->second.display()};
      } else {
        rec.status = Status::Pass;
      }
      if (!sweep.notice.empty()) rec.data.emplace_back("notice", sweep.notice);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Record> explicit_bezout(const CheckRequest& req, const FiniteRing& ring) {
  std::vector<Record> out;
  for (const auto& text : req.polys) {
    const auto g = parse_polynomial(ring, req.bounds.vars, text);
    const auto f = bezout_factor(g);
    Record rec;
    rec.mode = "exhaustive";
    rec.status = Status::Pass;
    auto show = [&ring](Elem x) { return ring.display(x); };
    rec.detail = "g = " + g.display() + ": b = " + ring.display(f.b) +
                 ", r = " + tuple_display(f.r, show) + ", s = " + tuple_display(f.s, show) +
                 ", d = " + ring.display(f.d) + ", g' = " + f.g_prime.display();
    rec.witness = {f.g_prime.display()};
    rec.data.emplace_back("b", ring.display(f.b));
    rec.data.emplace_back("d", ring.display(f.d));
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<Record> explicit_certify(const CheckRequest& req, const FiniteRing& ring,
                                     const IdealLattice& lat) {
  if (!req.ideal) throw std::invalid_argument("certify with polynomials needs --ideal");
  const auto ideal = parse_ideal(ring, *req.ideal);
  std::vector<Polynomial> fs;
  for (const auto& text : req.polys) fs.push_back(parse_polynomial(ring, req.bounds.vars, text));
  const auto cert = certify_content_product(ideal, fs, kDefaultDmCap);
  Record rec;
  rec.ideal = ideal.display();
  rec.ideal_rank = lat.index_of(ideal) + 1;
  rec.mode = "exhaustive";
  rec.detail = "l = " + tuple_display(cert.exponents, [](unsigned l) { return std::to_string(l); }) +
               ", radical = " + (cert.radical ? "yes" : "no") +
               ", final containment = " + (cert.final_containment ? "true" : "false");
  rec.status = cert.radical && !cert.final_containment ? Status::Fail : Status::Pass;
  rec.witness = poly_strings(fs);
  return {rec};
}

std::vector<Record> int_records(const CheckRequest& req) {
  const std::string& spec = req.ring_spec;
  const std::string prefix = "zmod:";
  Record rec;
  if (spec.rfind(prefix, 0) != 0) {
    rec.status = Status::Skipped;
    rec.detail = "integer leg runs on zmod:m rings only";
    rec.mode = "exhaustive";
    return {rec};
  }
  const std::string digits = spec.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), detail::is_digit) ||
      digits.size() > 19)
    throw std::invalid_argument("bad modulus in '" + spec + "'");
  const std::uint64_t m = std::stoull(digits);
  const auto rep = conjecture_check_int(m, req.bounds.max_deg, req.bounds.height,
                                        req.bounds.sample, req.seed, req.jobs);
  rec.ideal = "(" + std::to_string(m) + ")";
  rec.mode = rep.mode.label();
  rec.detail = "omega = " + std::to_string(rep.omega.value) + ", lower witness = " +
               tuple_display(rep.omega.witness, [](std::uint64_t p) { return std::to_string(p); }) +
               (rep.lower_valid ? " valid" : " INVALID") + ", " +
               std::to_string(rep.accepted) + " tuples tested";
  if (!rep.mode.exhaustive) rec.detail += " of " + std::to_string(rep.drawn) + " drawn";
  if (rep.violation) {
    rec.status = Status::Counterexample;
    for (const auto& p : *rep.violation) rec.witness.push_back(p.display());
    rec.detail += ", violation = " + tuple_display(rec.witness, [](const auto& s) { return s; });
  } else {
    rec.status = rep.lower_valid ? Status::Pass : Status::Fail;
    for (auto p : rep.omega.witness) rec.witness.push_back(std::to_string(p));
    rec.detail += ", violation = none";
  }
  rec.data.emplace_back("accepted", std::to_string(rep.accepted));
  rec.data.emplace_back("drawn", std::to_string(rep.drawn));
  if (!rep.notice.empty()) rec.data.emplace_back("notice", rep.notice);
  return {rec};
}

std::vector<Record> ring_records(const CheckRequest& req) {
  if (req.check == "int-conjecture") return int_records(req);
  const auto ring = parse_ring_spec(req.ring_spec, req.bounds.order_cap);
  const auto lat = IdealLattice::build(ring);
  const auto b = search_bounds(req);
  if (req.check == "gaussian") return {pair_record(gaussian_search(lat, b), true)};
  if (req.check == "armendariz") return {pair_record(armendariz_search(lat, b), false)};
  if (req.check == "dm-bound") {
    const auto s = dm_survey(lat, b);
    Record rec;
    rec.mode = s.mode.label();
    rec.detail = "max = " + std::to_string(s.max_exponent);
    for (const auto& [l, n] : s.histogram) {
      rec.data.emplace_back("exponent " + std::to_string(l), std::to_string(n));
      rec.detail += ", l=" + std::to_string(l) + ": " + std::to_string(n);
    }
    if (s.cap_exceeded) rec.data.emplace_back("cap-exceeded", std::to_string(s.cap_exceeded));
    if (s.bound_violation) {
      rec.status = Status::Counterexample;
      rec.witness = {s.bound_violation->first.display(), s.bound_violation->second.display()};
      rec.detail += ", exponent above deg(g) + 1";
    } else {
      if (s.max_witness)
        rec.witness = {s.max_witness->first.display(), s.max_witness->second.display()};
      rec.status = s.cap_exceeded ? Status::CapExceeded : Status::Pass;
    }
    if (!s.notice.empty()) rec.data.emplace_back("notice", s.notice);
    return {rec};
  }
  if (req.check == "bezout") {
    if (ring.cyclic_factors().empty()) {
      Record rec;
      rec.mode = "exhaustive";
      rec.status = Status::Skipped;
      rec.detail = "Bezout construction needs zmod or a product of zmods";
      return {rec};
    }
    if (!req.polys.empty()) return explicit_bezout(req, ring);
    const auto s = bezout_sweep(ring, b);
    Record rec;
    rec.mode = s.mode.label();
    rec.detail = std::to_string(s.factored) + " polynomials factored";
    if (s.failure) {
      rec.status = Status::Fail;
      rec.witness = {s.failure->display()};
      rec.detail += ", failure: " + s.failure_reason;
    }
    if (!s.notice.empty()) rec.data.emplace_back("notice", s.notice);
    return {rec};
  }
  if (req.check == "certify-radical" && !req.polys.empty()) return explicit_certify(req, ring, lat);
  if (req.check == "omega-table" || req.check == "strong-omega" || req.check == "conjecture1" ||
      req.check == "poly-omega" || req.check == "certify-radical")
    return ideal_records(req, ring, lat);
  throw std::invalid_argument("unknown check '" + req.check + "'");
}

}  // namespace

std::vector<Record> run_check(const CheckRequest& req) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Record> out;
  try {
    out = ring_records(req);
  } catch (const CapExceeded& e) {
    Record rec;
    rec.status = Status::CapExceeded;
    rec.detail = e.what();
    out = {rec};
  } catch (const std::exception& e) {
    Record rec;
    rec.status = Status::Error;
    rec.detail = e.what();
    out = {rec};
  }
  const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  for (auto& r : out) {
    r.ring = req.ring_spec;
    r.check = req.check;
    if (r.ideal.empty()) r.ideal = "-";
    if (r.mode.empty()) r.mode = "exhaustive";
    r.millis = req.timing ? millis : 0;
  }
  return out;
}

CampaignReport make_report(const CampaignConfig& config, std::vector<Record> records) {
  std::stable_sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.ring, a.ideal_rank, a.check) < std::tie(b.ring, b.ideal_rank, b.check);
  });
  CampaignReport rep{config, std::move(records), {}, {}};
  for (std::size_t i = 0; i < rep.records.size(); ++i) {
    switch (rep.records[i].status) {
      case Status::Pass: ++rep.summary.pass; break;
      case Status::Fail: ++rep.summary.fail; break;
      case Status::Counterexample: ++rep.summary.counterexample; break;
      case Status::CapExceeded: ++rep.summary.cap_exceeded; break;
      case Status::Skipped: ++rep.summary.skipped; break;
      case Status::Error: ++rep.summary.error; break;
    }
    const auto s = rep.records[i].status;
    if (s == Status::Counterexample || s == Status::Fail || s == Status::Error)
      rep.flagged.push_back(i);
  }
  return rep;
}

CampaignReport run_campaign(const CampaignConfig& config) {
  validate_config(config);
  std::vector<CheckRequest> items;
  for (const auto& ring : config.rings)
    for (const auto& check : config.checks) {
      CheckRequest req;
      req.check = check;
      req.ring_spec = ring;
      req.bounds = config.bounds;
      req.seed = config.seed.value_or(0);
      req.timing = config.timing;
      items.push_back(std::move(req));
    }
  // Outer parallelism over work items; searches inside an item stay
  // single-threaded unless there is only one item.
  const unsigned inner = items.size() == 1 ? config.jobs : 1;
  for (auto& item : items) item.jobs = inner;
  std::vector<std::vector<Record>> results(items.size());
  detail::for_each_index(items.size(), config.jobs,
                         [&](std::size_t i) { results[i] = run_check(items[i]); });
  std::vector<Record> all;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(all));
  return make_report(config, std::move(all));
}

namespace {

Json config_json(const CampaignConfig& c) {
  Json j;
  j["rings"] = c.rings;
  j["checks"] = c.checks;
  j["bounds"] = {{"max_deg", c.bounds.max_deg}, {"cap", c.bounds.cap},
                 {"vars", c.bounds.vars},       {"height", c.bounds.height},
                 {"sample", c.bounds.sample},   {"order_cap", c.bounds.order_cap},
                 {"budget", c.bounds.budget}};
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  j["jobs"] = c.jobs;
  j["output"] = {{"format", c.output.format}, {"path", c.output.path}};
  j["timing"] = c.timing;
  return j;
}

// Neither the worker count nor the destination changes results, so the
// echo leaves both out and reports stay identical across them.
Json config_echo(const CampaignConfig& c) {
  Json j = config_json(c);
  j.erase("jobs");
  j["output"].erase("path");
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

std::string render_json(const CampaignReport& rep) {
  Json j;
  j["version"] = kToolVersion;
  j["config"] = config_echo(rep.config);
  Json records = Json::array();
  for (const auto& r : rep.records) {
    Json rec;
    rec["ring"] = r.ring;
    rec["ideal"] = r.ideal;
    rec["check"] = r.check;
    rec["mode"] = r.mode;
    rec["result"] = status_name(r.status);
    rec["detail"] = r.detail;
    if (!r.witness.empty()) rec["witness"] = r.witness;
    if (!r.data.empty()) {
      Json data;
      for (const auto& [k, v] : r.data) data[k] = v;
      rec["data"] = data;
    }
    rec["millis"] = r.millis;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  j["summary"] = {{"pass", rep.summary.pass},
                  {"fail", rep.summary.fail},
                  {"counterexample-found", rep.summary.counterexample},
                  {"cap-exceeded", rep.summary.cap_exceeded},
                  {"skipped", rep.summary.skipped},
                  {"error", rep.summary.error}};
  Json flagged = Json::array();
  for (auto i : rep.flagged) {
    const auto& r = rep.records[i];
    flagged.push_back({{"ring", r.ring}, {"ideal", r.ideal}, {"check", r.check},
                       {"result", status_name(r.status)}});
  }
  j["flagged"] = std::move(flagged);
  return j.dump(2) + "\n";
}

std::string render_csv(const CampaignReport& rep) {
  std::string out = "ring,ideal,check,mode,result,witness,detail,millis\n";
  for (const auto& r : rep.records) {
    out += csv_field(r.ring) + ',' + csv_field(r.ideal) + ',' + csv_field(r.check) + ',' +
           csv_field(r.mode) + ',' + status_name(r.status) + ',' +
           csv_field(join(r.witness, ";")) + ',' + csv_field(r.detail) + ',' +
           std::to_string(r.millis) + '\n';
  }
  return out;
}

std::string render_text(const CampaignReport& rep) {
  std::ostringstream out;
  for (const auto& r : rep.records) {
    out << r.ring << ' ' << r.ideal << ' ' << r.check << " [" << r.mode << "] "
        << status_name(r.status) << ": " << r.detail << '\n';
    for (const auto& [k, v] : r.data)
      if (k == "notice") out << "  notice: " << v << '\n';
  }
  const auto& s = rep.summary;
  out << "summary: " << s.pass << " pass, " << s.fail << " fail, " << s.counterexample
      << " counterexample-found, " << s.cap_exceeded << " cap-exceeded, " << s.skipped
      << " skipped, " << s.error << " error\n";
  return out.str();
}

std::string render(const CampaignReport& rep, const std::string& format) {
  if (format == "json") return render_json(rep);
  if (format == "csv") return render_csv(rep);
  if (format == "text") return render_text(rep);
  throw std::invalid_argument("unknown format '" + format + "'");
}

int exit_status(const CampaignReport& rep) {
  if (rep.summary.counterexample || rep.summary.fail) return 2;
  if (rep.summary.error) return 1;
  return 0;
}

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move report into " + path);
  }
}

}  // namespace absorb
