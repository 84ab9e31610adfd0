// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Exact criteria compare exact rationals; certificate criteria use
// the tail-decay factor kTailDecay (2x per doubling) and floor kTailFloor.

#include "nct/suites.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace nct;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int n, const std::string& title, const std::vector<Check>& cs) {
  bool ok = true;
  std::string failed;
  for (const auto& c : cs)
    if (!c.pass) {
      ok = false;
      failed += (failed.empty() ? "" : "; ") + c.name;
    }
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title;
  if (!ok) std::cout << " [failed: " << failed << "]";
  std::cout << "\n";
}

Check guarded(const std::string& name, const std::function<Check()>& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return {name + " (threw: " + e.what() + ")", false, {}};
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Check determinism() {
  const fs::path root = fs::temp_directory_path() / "nct_acceptance";
  fs::remove_all(root);
  fs::create_directories(root);
  const std::string cli = NCT_CLI_PATH, config = NCT_DEFAULT_CONFIG;
  auto run = [&](const std::string& dir) {
    std::string cmd = "\"" + cli + "\" verify \"" + config + "\" -o \"" + (root / dir).string() + "\" > \"" +
                      (root / (dir + ".log")).string() + "\" 2>&1";
    return std::system(cmd.c_str());
  };
  int ra = run("a"), rb = run("b");
  nlohmann::json detail{{"exit_a", ra}, {"exit_b", rb}};
  bool ok = ra == 0 && rb == 0;
  int reports = 0;
  for (const auto& name : all_suites()) {
    auto file = name + "-report.json";
    auto pa = root / "a" / file, pb = root / "b" / file;
    if (!fs::exists(pa) || !fs::exists(pb)) {
      ok = false;
      detail["missing"].push_back(file);
      continue;
    }
    ++reports;
    if (slurp(pa) != slurp(pb)) {
      ok = false;
      detail["differs"].push_back(file);
    }
  }
  detail["reports"] = reports;
  ok = ok && reports == 7;
  std::cout << "  verify runs: exit " << ra << " / " << rb << ", " << reports << " report pairs compared\n";
  return {"two verify runs give byte-identical reports", ok, detail};
}

}  // namespace

int main() {
  const Rational q(1, 2);

  report(1, "algebra relations, associativity and involution exact",
         {guarded("relations", [&] { return checks::algebra_relations(q); }),
          guarded("associativity", [&] { return checks::algebra_associativity(q); }),
          guarded("involution", [&] { return checks::algebra_involution(q); })});

  report(2, "representation is a *-homomorphism on windows 8 and 16",
         {guarded("fidelity", [&] { return checks::representation_fidelity(q, {8, 16}); })});

  report(3, "commutator formulas and four-term decomposition exact (|i|,j,k <= 3)",
         {guarded("commutators", [&] { return checks::commutator_formulas(q, 12); })});

  report(4, "boundedness gate over scans 8, 16, 32; d = i^2 fails",
         {guarded("boundedness", [] { return checks::boundedness(8); })});

  report(5, "multiplicities exact for |n| <= 16; p = 1, 2 diverge, p = 3 converges",
         {guarded("summability", [] { return checks::summability(16); })});

  report(6, "index table stabilized over windows 12 and 24",
         {guarded("index table", [] { return checks::index_table(12); })});

  report(7, "multiplicity pairing returns m for m in {-3..3} \\ {0}",
         {guarded("multiplicity", [] { return checks::multiplicity(12); })});

  {
    std::vector<Check> cs;
    for (const auto& p : {SphereParams(Rational(1, 2), 2), SphereParams(Rational(3, 4), Rational(1, 10))}) {
      cs.push_back(guarded("sphere algebra " + p.str(), [&] { return checks::sphere_algebra(p); }));
      cs.push_back(guarded("sphere bounded " + p.str(), [&] { return checks::sphere_bounded(p); }));
    }
    cs.push_back(guarded("sphere index", [] { return checks::sphere_index(12); }));
    report(8, "sphere relations, c(0) = 0, boundedness at two parameter pairs, index -1", cs);
  }

  report(9, "Form1 Leibniz exact; vanishing certificates decay >= 2x per doubling at q = 1/2",
         {guarded("leibniz", [&] { return checks::form1_leibniz(q); }),
          guarded("vanishing", [&] { return checks::vanishing(q); })});

  report(10, "L2 kernel relations, (w,w) >= 0 on 100 forms, differentials and modes",
         {guarded("relations", [] { return checks::l2_relations(); }),
          guarded("psd", [] { return checks::l2_inner_product_psd(); }),
          guarded("differentials", [&] { return checks::l2_differentials(q); })});

  report(11, "verify is deterministic", {guarded("determinism", determinism)});

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
