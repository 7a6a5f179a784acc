// One line per acceptance criterion, built from the same suites the CLI runs.
#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>

#include "radgeo/suites.hpp"

using namespace radgeo;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> prefixes;
  double limit_s;  // 0 = no limit
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string gens = std::string(RADGEO_DATA_DIR) + "/co3_276.gens";
  std::uint64_t seed = 1;
  bool no_2b = false;
  app.add_option("--gens", gens);
  app.add_option("--seed", seed);
  app.add_flag("--no-2b", no_2b);
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "group order and the two involution classes", {"calibrate.", "classes."}, 60},
      {2, "Sylow model counts, matrices and relations", {"sylow.", "prop43."}, 300},
      {3, "distinguished radical classes: orders, centers, centricity, normalizers", {"table1."}, 1800},
      {4, "orbit multisets on the chain ends", {"table2."}, 0},
      {5, "cone facts and local justifications of the retraction", {"cone.", "prop51.", "steps."}, 0},
      {6, "geometry axioms and the object attached to a 2-subgroup", {"axioms.", "borel_tits."}, 1800},
      {7, "fixed-point complex of a central involution is contractible", {"delta_fixed."}, 1800},
      {8, "reduced Euler characteristic and its 2-part", {"euler."}, 1},
      {9, "small-group oracle suite", {"small_groups."}, 60},
      {10, "complex engine properties", {"engine."}, 0},
  };

  Report all;
  std::map<std::string, double> suite_seconds;
  auto timed = [&](const std::string& name, const std::function<Report()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r;
    try {
      r = f();
    } catch (const std::exception& e) {
      r.add({name + ".error", "suite raised", Status::Fail, "no error", e.what(), 0});
    }
    suite_seconds[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all.append(r);
  };

  Co3Options opts;
  opts.seed = seed;
  opts.enumerate_2b = !no_2b;
  std::unique_ptr<Co3Session> session;
  try {
    session = std::make_unique<Co3Session>(read_generators(gens), opts);
  } catch (const std::exception& e) {
    std::cout << "cannot load generators: " << e.what() << "\n";
    return 2;
  }
  for (const auto& s : co3_suite_names()) timed(s, [&] { return session->run(s); });
  timed("small-groups", [] { return small_group_suite(std::string(RADGEO_SOURCE_DIR) + "/tests/golden"); });
  timed("engine", [&] { return engine_properties(seed); });

  // wall time charged to each criterion
  auto seconds_for = [&](int id) -> double {
    switch (id) {
      case 1: return suite_seconds["calibrate"];
      case 2: return suite_seconds["sylow"] + suite_seconds["prop43"];
      case 3: return suite_seconds["table1"];
      case 6: return suite_seconds["axioms"];
      case 7: return suite_seconds["delta-fixed"];
      case 8: {  // the limit applies to the count itself, given the orders
        for (const auto& e : all.entries())
          if (e.check_id == "euler.value") return e.runtime_ms / 1000.0;
        return 0;
      }
      case 9: return suite_seconds["small-groups"];
      default: return 0;
    }
  };

  int failed = 0;
  for (const auto& c : criteria) {
    std::size_t n = 0, unverified = 0;
    std::vector<std::string> bad;
    std::size_t centric = 0, centric_rows = 0;
    for (const auto& e : all.entries()) {
      bool mine = std::any_of(c.prefixes.begin(), c.prefixes.end(), [&](auto& p) { return starts_with(e.check_id, p); });
      if (c.id == 1 && starts_with(e.check_id, "calibrate.error")) mine = true;
      if (!mine) continue;
      ++n;
      if (e.status == Status::Fail) bad.push_back(e.check_id + " (expected " + e.expected + ", got " + e.actual + ")");
      if (e.status == Status::Unverified) ++unverified;
      if (c.id == 3 && e.check_id.size() > 8 && e.check_id.substr(e.check_id.size() - 8) == ".centric") {
        ++centric_rows;
        centric += e.expected.find("odd") != std::string::npos && e.status == Status::Pass;
      }
    }
    // the criterion asks for every one of the eleven rows to be centric
    if (c.id == 3 && centric != 11)
      bad.push_back("all 11 centric (got " + std::to_string(centric) + " of " + std::to_string(centric_rows) + ")");
    if (n == 0) bad.push_back("no checks ran");
    const double secs = seconds_for(c.id);
    if (c.limit_s > 0 && secs > c.limit_s)
      bad.push_back("time " + std::to_string(secs) + " s over the " + std::to_string(c.limit_s) + " s limit");
    const bool ok = bad.empty();
    failed += !ok;
    std::cout << "criterion " << std::setw(2) << c.id << (ok ? " PASS" : " FAIL") << ": " << c.title << " [" << n
              << " checks";
    if (unverified) std::cout << ", " << unverified << " unverified";
    std::cout << ", " << std::fixed << std::setprecision(1) << secs << " s]";
    for (const auto& b : bad) std::cout << "\n    failing: " << b;
    std::cout << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " of 10 criteria failed" : "all 10 criteria passed") << "\n";
  return failed ? 1 : 0;
}
