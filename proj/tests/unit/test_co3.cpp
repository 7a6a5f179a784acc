#include <doctest.h>

#include <sstream>

#include "radgeo/co3.hpp"
#include "radgeo/gens_io.hpp"

using namespace radgeo;

namespace {

const std::string kGens = std::string(RADGEO_DATA_DIR) + "/co3_276.gens";

bool all_pass(const Report& r) {
  for (const auto& e : r.entries())
    if (e.status == Status::Fail) {
      MESSAGE(e.check_id << ": expected " << e.expected << ", got " << e.actual);
      return false;
    }
  return true;
}

// One calibrated context shared by the cases below; the 2A class takes a second or two.
struct Shared {
  std::unique_ptr<Co3Context> ctx;
  LocalSylowModel model;
  Shared() {
    Co3Options o;
    o.enumerate_2b = false;
    ctx = Co3Context::calibrate(read_generators(kGens), o);
    model = sylow2(*ctx);
  }
};

Shared& shared() {
  static Shared s;
  return s;
}

}  // namespace

TEST_CASE("calibration finds the central class") {
  const auto& ctx = *shared().ctx;
  CHECK(to_string(ctx.group().order()) == "495766656000");
  CHECK(ctx.class_2a().size() == 170775);
  CHECK(to_string(ctx.cz().order()) == "2903040");
  CHECK(ctx.z().fixed_points() == 36);
  CHECK(ctx.is_central(ctx.z()));
  CHECK_FALSE(ctx.is_central(ctx.b()));
}

TEST_CASE("calibration rejects other groups and small budgets") {
  std::istringstream s4("perm 276\n(1,2)\n(1,2,3,4)\n");
  CHECK_THROWS_AS(Co3Context::calibrate(parse_generators(s4), {}), InputError);
  Co3Options tiny;
  tiny.max_mem_mb = 8;
  CHECK_THROWS_AS(Co3Context::calibrate(read_generators(kGens), tiny), ResourceError);
}

TEST_CASE("Sylow model and its local structures") {
  auto& s = shared();
  CHECK(s.model.table->size() == 1024);
  CHECK(s.model.centrals.size() == 55);
  CHECK(s.model.line_structure.size() == 39);
  CHECK(s.model.cone.size() == 31);
  CHECK(s.model.perm(s.model.a1()) == s.ctx->z());
  CHECK(all_pass(prop43_structures(s.model)));
}

TEST_CASE("radical instances and cone facts inside S") {
  auto& s = shared();
  const auto inst = instantiate_radicals(s.model);
  CHECK(inst.size() == 11);
  for (const auto& r : inst) CHECK(r.elements.size() == r.expected_order);
  CHECK(all_pass(cone_facts(s.model, inst)));
  CHECK(all_pass(step_justifications(s.model, inst)));
}

TEST_CASE("point residue and the fixed-point complex") {
  auto& s = shared();
  const auto res = point_residue(*s.ctx);
  CHECK(res.points.size() == 631);
  CHECK(res.lines.size() == 315);
  CHECK(res.mspaces.size() == 135);
  const auto fc = delta_fixed_z(*s.ctx, res);
  CHECK(fc.points == 631);
  CHECK(fc.mspaces_pointwise == 135);
  CHECK(fc.complex.is_flag_typed());
  CHECK(fc.complex.euler_reduced() == 0);
}
