// nct: batch driver for the verification suites.
//
// Exit codes: 0 all certificates pass, 1 a certificate failed, 2 usage or
// configuration error.

#include "nct/nct.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nct::Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return nct::parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError(name + " expects a rational p/q, got '" + text + "'");
  }
}

void print_suite(const nct::SuiteReport& r, bool as_json) {
  if (as_json) {
    std::cout << r.to_json().dump(2) << "\n";
    return;
  }
  for (const auto& c : r.checks) std::cout << (c.pass ? "PASS " : "FAIL ") << r.suite << ": " << c.name << "\n";
}

int run_verify(const std::string& config_path, const std::string& out_dir, bool as_json) {
  nct::Config cfg;
  try {
    cfg = config_path.empty() ? nct::Config{} : nct::parse_config_file(config_path);
  } catch (const nct::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "cannot create output directory '" << out_dir << "': " << ec.message() << "\n";
    return kUsage;
  }
  bool ok = true;
  json summary = json::object();
  for (const auto& name : cfg.suites) {
    auto report = nct::run_suite(name, cfg);
    std::ofstream out(fs::path(out_dir) / (name + "-report.json"));
    out << report.to_json().dump(2) << "\n";
    summary[name] = report.pass();
    if (!as_json) std::cout << (report.pass() ? "PASS " : "FAIL ") << name << "\n";
    for (const auto& f : report.failures()) std::cerr << "certificate failed: " << f << "\n";
    ok = ok && report.pass();
  }
  if (as_json) std::cout << json{{"pass", ok}, {"suites", summary}}.dump(2) << "\n";
  return ok ? kPass : kFail;
}

int run_index(const std::vector<std::string>& which, int window, const std::string& q_text, bool as_json) {
  if (which.empty()) throw UsageError("--which is required");
  const auto q = rational_arg("--q", q_text);
  if (q <= 0 || q >= 1) throw UsageError("q must lie in (0,1)");
  nct::IndexReport report;
  long expected = 0;
  const auto& kind = which[0];
  if (which.size() > 1 && kind != "multiplicity") throw UsageError("only --which multiplicity takes a value");
  try {
    if (kind == "u") {
      report = nct::stabilized_index(nct::u_against_dirac(nct::DiracSpec::generic()), window);
      expected = 1;
    } else if (kind == "canonical") {
      report = nct::canonical_unitary_pairing(window, q);
      expected = 1;
    } else if (kind == "sphere") {
      report = nct::sphere_index_pairing(window);
      expected = -1;
    } else if (kind == "multiplicity") {
      if (which.size() != 2) throw UsageError("--which multiplicity needs a value m");
      int m = 0;
      try {
        m = std::stoi(which[1]);
      } catch (const std::exception&) {
        throw UsageError("multiplicity expects an integer, got '" + which[1] + "'");
      }
      if (m == 0) throw UsageError("multiplicity must be nonzero");
      report = nct::multiplicity_pairing(m, window);
      expected = m;
    } else {
      throw UsageError("unknown --which '" + kind + "'");
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    std::cerr << "certificate failed: " << e.what() << "\n";
    return kFail;
  }
  auto j = report.to_json();
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << report.index << "\n";
    for (const auto& w : report.windows)
      std::cout << "window " << w.m_row << ": dim ker " << w.kernel << ", dim coker " << w.cokernel << ", index "
                << w.index() << "\n";
    std::cout << j["certificate"].get<std::string>() << "\n";
  }
  return report.stable && report.index == expected ? kPass : kFail;
}

int run_spectrum(const std::string& dirac, const std::string& p_text, const std::vector<int>& lambdas,
                 bool as_json) {
  if (lambdas.empty()) throw UsageError("--lambda list is empty");
  for (int l : lambdas)
    if (l < 1) throw UsageError("--lambda values must be >= 1");
  const auto p = rational_arg("--p", p_text);
  if (p <= 0) throw UsageError("--p must be positive");
  nct::DiracSpec spec = nct::DiracSpec::generic();
  if (dirac != "generic") {
    std::ifstream in(dirac);
    if (!in) throw UsageError("cannot open dirac csv '" + dirac + "'");
    spec = nct::dirac_from_csv(in, nct::DiracSpec::generic(), dirac);
  }
  const int top = *std::max_element(lambdas.begin(), lambdas.end());
  auto mult = nct::multiplicities(spec, top);
  auto profile = nct::summability_profile(spec, p, lambdas);
  if (as_json) {
    json rows = json::array();
    for (const auto& [v, n] : mult)
      if (nct::detail::abs(v) <= top) rows.push_back({{"eigenvalue", nct::to_string(v)}, {"multiplicity", n}});
    std::cout << json{{"dirac", spec.name}, {"multiplicities", rows}, {"summability", profile.to_json()}}.dump(2)
              << "\n";
    return kPass;
  }
  std::cout << "eigenvalue,multiplicity\n";
  for (const auto& [v, n] : mult)
    if (nct::detail::abs(v) <= top) std::cout << nct::to_string(v) << "," << n << "\n";
  std::cout << "\nlambda,partial_sum\n";
  std::ostringstream sums;
  sums.precision(12);
  for (std::size_t t = 0; t < profile.lambdas.size(); ++t)
    sums << profile.lambdas[t] << "," << profile.partial_sums[t] << "\n";
  std::cout << sums.str() << "\n# p = " << nct::to_string(p) << ", trend " << (profile.converging ? "converging" : "diverging")
            << "\n";
  return kPass;
}

int run_named_suite(const std::string& suite, const std::string& q_text, const std::string& c_text, bool as_json) {
  nct::Config cfg;
  cfg.q = rational_arg("--q", q_text);
  cfg.c = rational_arg("--c", c_text);
  if (cfg.q <= 0 || cfg.q >= 1) throw UsageError("q must lie in (0,1)");
  if (cfg.c <= 0) throw UsageError("c must be > 0");
  auto report = nct::run_suite(suite, cfg);
  print_suite(report, as_json);
  return report.pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nct: spectral triple and differential calculus verification for SU_q(2) and the Podles spheres"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string config_path, out_dir = "reports";
  auto* verify = app.add_subcommand("verify", "run the configured suites and write <suite>-report.json files");
  verify->add_option("config", config_path, "config file (defaults apply when omitted)");
  verify->add_option("-o,--out", out_dir, "report directory");
  verify->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> which;
  int window = 12;
  std::string q_text = "1/2", c_text = "2";
  auto* index = app.add_subcommand("index", "index pairings with a two-window certificate");
  index->add_option("--which", which, "u | canonical | sphere | multiplicity m")->expected(1, 2)->allow_extra_args(false);
  index->add_option("--window", window, "base window m (windows m and 2m)")->check(CLI::Range(2, 32));
  index->add_option("--q", q_text, "deformation parameter p/q");
  index->add_option("--c", c_text, "sphere parameter (unused by the index)");
  index->add_flag("--json", as_json, "machine-readable output");

  std::string dirac = "generic", p_text = "3";
  std::vector<int> lambdas;
  bool lambda_given = false;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue multiplicities and summability partial sums as CSV");
  spectrum->add_option("--dirac", dirac, "generic or a CSV of i,j,value rows");
  spectrum->add_option("--p", p_text, "summability exponent");
  auto* lambda_opt = spectrum->add_option("--lambda", lambdas, "comma-separated cutoffs")->delimiter(',')->expected(0, -1);
  spectrum->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::pair<std::string, CLI::App*>> suites;
  for (const char* name : {"algebra", "calculus", "l2", "sphere"}) {
    auto* sub = app.add_subcommand(name, std::string("run the ") + name + " suite");
    sub->add_option("--q", q_text, "deformation parameter p/q");
    sub->add_option("--c", c_text, "sphere parameter p/q");
    sub->add_flag("--json", as_json, "machine-readable output");
    suites.emplace_back(name, sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return run_verify(config_path, out_dir, as_json);
    if (*index) return run_index(which, window, q_text, as_json);
    if (*spectrum) {
      lambda_given = lambda_opt->count() > 0;
      if (!lambda_given) lambdas = {8, 16, 32};
      return run_spectrum(dirac, p_text, lambdas, as_json);
    }
    for (const auto& [name, sub] : suites)
      if (*sub) return run_named_suite(name, q_text, c_text, as_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
