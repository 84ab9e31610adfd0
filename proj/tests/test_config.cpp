#include "nct/config.hpp"
#include "nct/suites.hpp"

#include "catch_amalgamated.hpp"

#include <sstream>

using namespace nct;

namespace {

Config parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("defaults") {
  auto cfg = parse("");
  CHECK(cfg.q == Rational(1, 2));
  CHECK(cfg.c == 2);
  CHECK(cfg.windows == std::vector<int>{8, 16});
  CHECK(cfg.index_window == 12);
  CHECK(cfg.suites == all_suites());
  auto text = parse(default_config_text());
  CHECK(text.q == cfg.q);
  CHECK(text.c == cfg.c);
  CHECK(text.suites == cfg.suites);
}

TEST_CASE("values and comments") {
  auto cfg = parse("# comment\nq_num = 3\nq_den = 4   # trailing\nc_num = 1\nc_den = 10\nwindows = 4, 12\nsuites = l2, algebra\n");
  CHECK(cfg.q == Rational(3, 4));
  CHECK(cfg.c == Rational(1, 10));
  CHECK(cfg.windows == std::vector<int>{4, 12});
  CHECK(cfg.suites == std::vector<std::string>{"l2", "algebra"});
  CHECK(parse("q_num = -1\nq_den = -3\n").q == Rational(1, 3));
}

TEST_CASE("errors") {
  CHECK(error_of("q_num = 2\nq_den = 1\n") == "q must lie in (0,1)");
  CHECK(error_of("q_num = 1\nq_den = -2\n") == "q must lie in (0,1)");
  CHECK(error_of("q_den = 0\n").find("nonzero") != std::string::npos);
  CHECK(error_of("c_num = -1\n") == "c must be > 0");
  CHECK(error_of("colour = red\n").find("unknown key") != std::string::npos);
  CHECK(error_of("q_num = 1\nq_num = 1\n").find("duplicate") != std::string::npos);
  CHECK(error_of("windows = 2\n").find("windows") != std::string::npos);
  CHECK(error_of("windows = 8, x\n").find("integer") != std::string::npos);
  CHECK(error_of("suites = topology\n").find("unknown suite") != std::string::npos);
  CHECK(error_of("just text\n").find("key = value") != std::string::npos);
  CHECK_THROWS_AS(parse_config_file("/nonexistent/config"), ConfigError);
}

TEST_CASE("suite reports") {
  Config cfg;
  auto r = run_suite("fredholm", cfg);
  CHECK(r.pass());
  CHECK(r.failures().empty());
  auto j = r.to_json();
  CHECK(j["suite"] == "fredholm");
  CHECK(j["checks"].size() == r.checks.size());
  // reports are deterministic
  CHECK(run_suite("fredholm", cfg).to_json().dump(2) == j.dump(2));
  CHECK_THROWS_AS(run_suite("topology", cfg), ConfigError);
}

TEST_CASE("a failing check is named") {
  SuiteReport r{"demo", {{"good", true, {}}, {"bad", false, {}}}};
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == std::vector<std::string>{"demo: bad"});
}
