#pragma once

// Verification campaign configuration.  Flat `key = value` lines; '#' starts
// a comment.  Keys:
//
//   q_num, q_den    deformation parameter q in (0, 1)
//   c_num, c_den    sphere parameter c > 0
//   windows         comma-separated representation windows (e.g. 8, 16)
//   index_window    base window m for index pairings (windows m and 2m)
//   suites          comma-separated subset of the suite names

#include "nct/scalar.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nct {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> names{"algebra", "representation", "dirac", "fredholm",
                                              "calculus", "l2", "sphere"};
  return names;
}

struct Config {
  Rational q{1, 2};
  Rational c{2};
  std::vector<int> windows{8, 16};
  int index_window = 12;
  std::vector<std::string> suites = all_suites();
};

namespace detail {

inline std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline long parse_long(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long r = std::stol(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return r;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "' expects an integer, got '" + v + "'");
  }
}

}  // namespace detail

inline Config parse_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    auto key = detail::strip(line.substr(0, eq));
    auto value = detail::strip(line.substr(eq + 1));
    static const std::vector<std::string> known{"q_num", "q_den", "c_num", "c_den", "windows", "index_window", "suites"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (kv.count(key)) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    kv[key] = value;
  }

  Config cfg;
  auto ratio = [&](const char* num, const char* den, const Rational& fallback) {
    bool has_num = kv.count(num), has_den = kv.count(den);
    if (!has_num && !has_den) return fallback;
    long n = has_num ? detail::parse_long(num, kv[num]) : 1;
    long d = has_den ? detail::parse_long(den, kv[den]) : 1;
    if (d == 0) throw ConfigError(std::string(den) + " must be nonzero");
    return Rational(n) / Rational(d);
  };
  cfg.q = ratio("q_num", "q_den", cfg.q);
  cfg.c = ratio("c_num", "c_den", cfg.c);
  if (cfg.q <= 0 || cfg.q >= 1) throw ConfigError("q must lie in (0,1)");
  if (cfg.c <= 0) throw ConfigError("c must be > 0");
  if (kv.count("windows")) {
    cfg.windows.clear();
    for (const auto& w : detail::split_list(kv["windows"])) {
      long m = detail::parse_long("windows", w);
      if (m < 4 || m > 48) throw ConfigError("windows must lie in [4, 48]");
      cfg.windows.push_back(static_cast<int>(m));
    }
    if (cfg.windows.empty()) throw ConfigError("windows is empty");
  }
  if (kv.count("index_window")) {
    long m = detail::parse_long("index_window", kv["index_window"]);
    if (m < 4 || m > 32) throw ConfigError("index_window must lie in [4, 32]");
    cfg.index_window = static_cast<int>(m);
  }
  if (kv.count("suites")) {
    cfg.suites.clear();
    for (const auto& s : detail::split_list(kv["suites"])) {
      if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
        throw ConfigError("unknown suite '" + s + "'");
      if (std::find(cfg.suites.begin(), cfg.suites.end(), s) == cfg.suites.end()) cfg.suites.push_back(s);
    }
    if (cfg.suites.empty()) throw ConfigError("suites is empty");
  }
  return cfg;
}

inline Config parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in);
}

inline std::string default_config_text() {
  return "# q = q_num / q_den, c = c_num / c_den\n"
         "q_num = 1\n"
         "q_den = 2\n"
         "c_num = 2\n"
         "c_den = 1\n"
         "windows = 8, 16\n"
         "index_window = 12\n"
         "suites = algebra, representation, dirac, fredholm, calculus, l2, sphere\n";
}

}  // namespace nct
