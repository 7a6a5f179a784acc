#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radgeo/co3.hpp"
#include "radgeo/gens_io.hpp"
#include "radgeo/report.hpp"

namespace radgeo {

/// Suite names in dependency order.
const std::vector<std::string>& co3_suite_names();

/// Builds the context, Sylow model and point residue on first use and runs
/// suites against them.
class Co3Session {
 public:
  Co3Session(GeneratorFile gens, Co3Options opts);
  ~Co3Session();
  /// One named suite; "all" runs every suite in order.
  Report run(const std::string& suite);

  const Co3Context& context();
  const LocalSylowModel& model();

 private:
  GeneratorFile gens_;
  Co3Options opts_;
  Report calibrate_report_, sylow_report_;
  std::unique_ptr<Co3Context> ctx_;
  std::unique_ptr<LocalSylowModel> model_;
  std::optional<std::vector<RadicalInstance>> inst_;
  std::optional<PointResidue> residue_;
  const std::vector<RadicalInstance>& instances();
  const PointResidue& residue();
};

/// Golden class tables plus the collection comparisons on S4, S5 and GL(3,2).
Report small_group_suite(const std::string& golden_dir);
/// Randomized checks of the complex engine; deterministic for a given seed.
Report engine_properties(std::uint64_t seed, std::size_t complexes = 50);
/// Oracle checks with answers known by inspection.
Report selftest_suite();

}  // namespace radgeo
