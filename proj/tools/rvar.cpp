#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rvar/certificate.hpp"
#include "rvar/claims.hpp"
#include "rvar/config.hpp"
#include "rvar/errors.hpp"
#include "rvar/parameterization.hpp"
#include "rvar/variety.hpp"

extern char** environ;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

// Accepts "1,3" as well as "{1,3}", since shells brace-expand the latter unquoted.
rvar::KSubset parse_subset(const std::string& text, int n) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] != '{') return rvar::KSubset::parse("{" + text + "}", n);
  return rvar::KSubset::parse(text, n);
}

std::map<std::string, std::string> environment() {
  std::map<std::string, std::string> env;
  for (char** e = environ; e != nullptr && *e != nullptr; ++e) {
    const std::string entry(*e);
    const auto eq = entry.find('=');
    if (eq != std::string::npos && entry.rfind("RVAR_", 0) == 0) env[entry.substr(0, eq)] = entry.substr(eq + 1);
  }
  return env;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rvar::ConfigError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint32_t> q;
  std::string report_path;
};

rvar::SweepConfig resolve_config(const GlobalOptions& g) {
  rvar::SweepConfig config;
  if (!g.config_path.empty()) rvar::apply_config_text(config, read_file(g.config_path));
  rvar::apply_environment(config, environment());
  if (g.seed) config.seed = *g.seed;
  if (g.budget) config.budget = *g.budget;
  if (g.q) config.primes = {*g.q};
  if (!g.report_path.empty()) config.report_path = g.report_path;
  config.validate();
  return config;
}

struct VarietyOptions {
  std::string kind = "gr";
  int k = 0;
  int n = 0;
  std::string beta;
  std::string gamma;
  int t = 0;
};

void add_variety_options(CLI::App* cmd, VarietyOptions& v) {
  cmd->add_option("--variety", v.kind, "gr, richardson, open-richardson, w, divisor or positroid")
      ->check(CLI::IsMember({"gr", "richardson", "open-richardson", "w", "divisor", "positroid"}));
  cmd->add_option("-k", v.k, "subspace dimension (for gr)");
  cmd->add_option("-n", v.n, "ambient dimension");
  cmd->add_option("--beta", v.beta, "lower subset, e.g. {1,2}");
  cmd->add_option("--gamma", v.gamma, "upper subset, e.g. {3,4}");
  cmd->add_option("-t", v.t, "index for divisor and positroid");
}

rvar::VarietySpec make_variety(const VarietyOptions& v) {
  if (v.kind == "gr") {
    if (v.k < 1 || v.n < v.k) throw rvar::ConfigError("gr needs 1 <= k <= n");
    return rvar::grassmannian_spec(v.k, v.n);
  }
  if (v.n < 1 || v.beta.empty() || v.gamma.empty()) throw rvar::ConfigError(v.kind + " needs -n, --beta and --gamma");
  const auto beta = parse_subset(v.beta, v.n);
  const auto gamma = parse_subset(v.gamma, v.n);
  if (v.kind == "richardson") return rvar::richardson_spec(beta, gamma, false);
  if (v.kind == "open-richardson") return rvar::richardson_spec(beta, gamma, true);
  if (v.kind == "w") return rvar::w_spec(beta, gamma);
  if (v.kind == "divisor") return rvar::divisor_spec(beta, gamma, v.t);
  return rvar::intersect(rvar::positroid_spec(rvar::p_set(beta, gamma, v.t)), rvar::richardson_spec(beta, gamma, true));
}

std::string point_line(const rvar::PointSet& points, std::size_t i) {
  const auto data = points.echelon(i);
  std::string out;
  for (int r = 0; r < points.k(); ++r) {
    if (r > 0) out += "; ";
    for (int c = 0; c < points.n(); ++c) {
      if (c > 0) out += " ";
      out += std::to_string(data[r * points.n() + c]);
    }
  }
  return out;
}

template <rvar::ExactField F>
void run_param(const F& field, const std::string& text, const rvar::KSubset& beta, const rvar::KSubset& gamma,
               const std::string& direction) {
  const auto m = rvar::parse_matrix(field, text);
  const auto out = direction == "phi" ? rvar::phi(m, beta, gamma) : rvar::psi(m, beta, gamma);
  std::cout << rvar::format_matrix(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification sweeps for Richardson varieties in the Grassmannian"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--config", g.config_path, "key=value configuration file");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--report", g.report_path, "where to write the JSON report");
  app.add_option("--q", g.q, "field size (a prime)");
  app.add_option("--budget", g.budget, "largest point set to enumerate");

  auto* verify = app.add_subcommand("verify-all", "run every claim over the configured sweep");
  std::vector<std::string> only;
  verify->add_option("--only", only, "restrict to these claim ids");

  auto* cert = app.add_subcommand("certificate", "print the certificate for Delta_alpha");
  std::string c_beta, c_gamma, c_alpha;
  int c_n = 0, c_t = 0;
  cert->add_option("-n", c_n, "ambient dimension")->required();
  cert->add_option("--beta", c_beta)->required();
  cert->add_option("--gamma", c_gamma)->required();
  cert->add_option("-t", c_t)->required();
  cert->add_option("--alpha", c_alpha)->required();

  auto* param = app.add_subcommand("param", "apply phi (Y to W) or psi (W to Y) to a matrix file");
  std::string p_beta, p_gamma, p_direction, p_file;
  int p_n = 0;
  param->add_option("-n", p_n, "ambient dimension")->required();
  param->add_option("--beta", p_beta)->required();
  param->add_option("--gamma", p_gamma)->required();
  param->add_option("--direction", p_direction)->required()->check(CLI::IsMember({"phi", "psi"}));
  param->add_option("matrix", p_file, "matrix file; rationals unless --q is given")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list the F_q points of a variety, one per line");
  VarietyOptions e_variety;
  add_variety_options(enumerate, e_variety);

  auto* count = app.add_subcommand("count", "count the F_q points of a variety");
  VarietyOptions n_variety;
  add_variety_options(count, n_variety);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  rvar::SweepConfig config;
  try {
    config = resolve_config(g);
  } catch (const rvar::Error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (*verify) {
      rvar::RunReport report;
      report.config = config.to_json();
      if (!only.empty()) report.config["only"] = only;
      rvar::PointCache cache(config.budget);
      for (const auto& id : rvar::claim_ids()) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        report.claims.push_back(rvar::run_claim(id, config, cache));
        const auto& r = report.claims.back();
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.claim << "\n";
      }
      std::cout << report.summary();
      if (!config.report_path.empty()) {
        std::ofstream out(config.report_path);
        if (!out) throw rvar::ConfigError("cannot write " + config.report_path);
        out << report.to_json().dump(2) << "\n";
      }
      return report.pass() ? 0 : kExitFail;
    }
    if (*cert) {
      const auto beta = parse_subset(c_beta, c_n);
      const auto gamma = parse_subset(c_gamma, c_n);
      const auto alpha = parse_subset(c_alpha, c_n);
      std::cout << rvar::serialize_certificate(rvar::principal_certificate(beta, gamma, c_t, alpha));
      return 0;
    }
    if (*param) {
      const auto beta = parse_subset(p_beta, p_n);
      const auto gamma = parse_subset(p_gamma, p_n);
      const std::string text = read_file(p_file);
      if (g.q) {
        run_param(rvar::PrimeField(*g.q), text, beta, gamma, p_direction);
      } else {
        run_param(rvar::RationalField{}, text, beta, gamma, p_direction);
      }
      return 0;
    }
    const bool listing = enumerate->parsed();
    const VarietyOptions& v = listing ? e_variety : n_variety;
    const auto spec = make_variety(v);
    const std::uint32_t q = g.q.value_or(2);
    rvar::PointCache cache(config.budget);
    const auto points = cache.get(spec.k(), spec.n(), q);
    if (listing) {
      for (std::size_t i : rvar::filter_points(*points, spec)) std::cout << point_line(*points, i) << "\n";
    } else {
      std::cout << rvar::count_points(*points, spec) << "\n";
    }
    return 0;
  } catch (const rvar::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
