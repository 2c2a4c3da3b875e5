#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "absorb/campaign.hpp"
#include "absorb/error.hpp"
#include "absorb/integers.hpp"

namespace {

constexpr const char* kPolyGrammar = R"(Polynomial literals:
  poly    := term ('+' term)* | '0'
  term    := coeff | [coeff ['*']] monomial
  monomial:= var ['^' N] ('*' var ['^' N])*
  coeff   := ring element index (decimal)
  var     := x | y | z | w        (x1, x2, ... when --vars > 4)
  Example: 2+4x, 1+3x^2*y. Integer polynomials for `int --poly` are comma
  lists of coefficients, constant term first: 4,2 is 4 + 2x.)";

struct Globals {
  std::string ring;
  std::string ideal;
  unsigned max_deg = 1;
  unsigned cap = absorb::kDefaultOmegaCap;
  unsigned vars = 1;
  std::uint64_t height = 5;
  std::uint64_t sample = 10'000;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::string format = "text";
  std::string out;
  std::uint64_t budget = absorb::kDefaultBudget;
};

void emit(const std::string& content, const std::string& path) {
  if (path.empty())
    std::cout << content;
  else
    absorb::write_atomic(path, content);
}

std::string text_lines(const std::vector<absorb::Record>& records, bool prefix_ideal) {
  std::ostringstream out;
  for (const auto& r : records) {
    if (prefix_ideal && r.ideal != "-") out << r.ideal << ": ";
    out << r.detail;
    if (r.mode != "exhaustive") out << " [" << r.mode << "]";
    out << '\n';
    for (const auto& [k, v] : r.data)
      if (k == "notice") out << "  notice: " << v << '\n';
  }
  return out.str();
}

std::string dm_table(const absorb::Record& r) {
  std::ostringstream out;
  out << "exponent  pairs\n";
  for (const auto& [k, v] : r.data) {
    if (k.rfind("exponent ", 0) != 0) continue;
    std::string l = k.substr(9);
    out << l << std::string(l.size() < 10 ? 10 - l.size() : 1, ' ') << v << '\n';
  }
  for (const auto& [k, v] : r.data)
    if (k == "cap-exceeded") out << "cap exceeded: " << v << '\n';
  out << "max = " << r.detail.substr(6, r.detail.find(',') - 6);
  if (r.witness.size() == 2) out << ", first at (" << r.witness[0] << ", " << r.witness[1] << ")";
  out << " [" << r.mode << "]\n";
  if (r.status == absorb::Status::Counterexample) out << "exponent above deg(g) + 1\n";
  for (const auto& [k, v] : r.data)
    if (k == "notice") out << "notice: " << v << '\n';
  return out.str();
}

int run_single(const Globals& g, const std::string& check, const std::vector<std::string>& polys) {
  if (g.ring.empty()) throw CLI::RequiredError("--ring");
  absorb::CheckRequest req;
  req.check = check;
  req.ring_spec = g.ring;
  if (!g.ideal.empty()) req.ideal = g.ideal;
  req.bounds.max_deg = g.max_deg;
  req.bounds.cap = g.cap;
  req.bounds.vars = g.vars;
  req.bounds.height = g.height;
  req.bounds.sample = g.sample;
  req.bounds.budget = g.budget;
  req.seed = g.seed;
  req.jobs = g.jobs;
  req.polys = polys;
  if (check != "int-conjecture") absorb::parse_ring_spec(g.ring);  // report bad specs up front

  auto records = absorb::run_check(req);
  for (const auto& r : records)
    if (r.status == absorb::Status::Error) {
      std::cerr << "error: " << r.detail << '\n';
      return 1;
    }
  absorb::CampaignConfig config;
  config.rings = {g.ring};
  config.checks = {check};
  config.bounds = req.bounds;
  config.seed = g.seed;
  config.jobs = g.jobs;
  config.output = {g.format, g.out};
  const auto report = absorb::make_report(config, std::move(records));
  if (g.format == "text") {
    if (check == "dm-bound" && report.records.size() == 1)
      emit(dm_table(report.records[0]), g.out);
    else
      emit(text_lines(report.records, !req.ideal && report.records.size() > 1), g.out);
  } else {
    emit(absorb::render(report, g.format), g.out);
  }
  return absorb::exit_status(report);
}

int run_int(const Globals& g, std::uint64_t m, const std::vector<std::string>& polys) {
  if (polys.size() == 2 && m == 0) {
    const auto f = absorb::parse_int_polynomial(polys[0]);
    const auto h = absorb::parse_int_polynomial(polys[1]);
    const auto fg = absorb::int_mul(f, h);
    std::cout << "c(f) = " << absorb::content_int(f) << ", c(g) = " << absorb::content_int(h)
              << ", c(fg) = " << absorb::content_int(fg) << " for fg = " << fg.display() << ": "
              << (absorb::gauss_lemma_check(f, h) ? "multiplicative" : "NOT multiplicative")
              << '\n';
    return absorb::gauss_lemma_check(f, h) ? 0 : 2;
  }
  if (!polys.empty()) {
    for (const auto& p : polys) {
      const auto f = absorb::parse_int_polynomial(p);
      std::cout << f.display() << ": content " << absorb::content_int(f) << '\n';
    }
    if (m == 0) return 0;
  }
  if (m < 2) throw CLI::ValidationError("--m", "must be >= 2");
  Globals h = g;
  h.ring = "zmod:" + std::to_string(m);
  return run_single(h, "int-conjecture", {});
}

int run_campaign_file(const Globals& g, const std::string& path, bool format_given,
                      bool out_given) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read config " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto config = absorb::parse_campaign_config(buf.str());
  if (format_given) config.output.format = g.format;
  if (out_given) config.output.path = g.out;
  if (g.jobs != 1) config.jobs = g.jobs;
  const auto report = absorb::run_campaign(config);
  emit(absorb::render(report, config.output.format), config.output.path);
  if (!config.output.path.empty()) std::cerr << absorb::render_text(report);
  return absorb::exit_status(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for n-absorbing ideals, content ideals and polynomial extensions"};
  app.footer(kPolyGrammar);
  app.require_subcommand(1);
  Globals g;
  app.add_option("--ring", g.ring, "Ring spec: zmod:N, prod:A,B, trunc:p=P,vars=K,nil=E");
  app.add_option("--ideal", g.ideal, "Ideal: gen:a,b | gen:none | (a,b)");
  app.add_option("--max-deg", g.max_deg, "Polynomial degree bound")->check(CLI::Range(0, 64));
  app.add_option("--cap", g.cap, "omega search cap")->check(CLI::Range(1, 64));
  app.add_option("--vars", g.vars, "Number of polynomial variables")->check(CLI::Range(1, 8));
  app.add_option("--height", g.height, "Coefficient height for integer sampling")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 31));
  app.add_option("--sample", g.sample, "Sample count when searches sample")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  app.add_option("--seed", g.seed, "Master seed for sampling");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  auto* format_opt = app.add_option("--format", g.format, "Output format")
                         ->check(CLI::IsMember({"json", "csv", "text"}));
  auto* out_opt = app.add_option("--out", g.out, "Write output to PATH");
  app.add_option("--budget", g.budget, "Largest exhaustive search before sampling");

  std::vector<std::string> polys;
  std::uint64_t m = 0;
  std::string config_path;

  struct Sub {
    const char* name;
    const char* check;
    const char* help;
  };
  const std::vector<Sub> subs{
      {"omega", "omega-table", "omega of each proper ideal (or --ideal)"},
      {"strong-omega", "strong-omega", "strong omega of each proper ideal (or --ideal)"},
      {"conjecture1", "conjecture1", "Compare omega with strong omega"},
      {"gaussian", "gaussian", "Search for c(fg) != c(f)c(g)"},
      {"armendariz", "armendariz", "Search for fg = 0 with c(f)c(g) != 0"},
      {"dm", "dm-bound", "Dedekind-Mertens exponent table"},
      {"bezout", "bezout", "Bezout factorization of --poly, or a sweep"},
      {"certify", "certify-radical", "Content certificate for --poly list, or a sweep"},
      {"poly-omega", "poly-omega", "Check omega of I[X] against omega of I"},
  };
  std::vector<std::pair<CLI::App*, std::string>> commands;
  for (const auto& s : subs) {
    auto* cmd = app.add_subcommand(s.name, s.help)->fallthrough();
    if (std::string(s.name) == "bezout" || std::string(s.name) == "certify")
      cmd->add_option("--poly", polys, "Polynomial literal (repeatable)");
    commands.emplace_back(cmd, s.check);
  }
  auto* int_cmd = app.add_subcommand("int", "Integer leg: omega of (m) and a bounded Z[X] check")
                      ->fallthrough();
  int_cmd->add_option("--m", m, "Modulus m >= 2");
  int_cmd->add_option("--poly", polys, "Integer polynomial as a comma list (repeatable)");
  auto* campaign_cmd = app.add_subcommand("campaign", "Run a campaign config")->fallthrough();
  campaign_cmd->add_option("--config", config_path, "Config file (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*campaign_cmd) return run_campaign_file(g, config_path, format_opt->count() > 0, out_opt->count() > 0);
    if (*int_cmd) return run_int(g, m, polys);
    for (const auto& [cmd, check] : commands)
      if (*cmd) return run_single(g, check, polys);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
