#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "radgeo/bsgs.hpp"
#include "radgeo/class_index.hpp"
#include "radgeo/complex.hpp"
#include "radgeo/gens_io.hpp"
#include "radgeo/gf2.hpp"
#include "radgeo/morse.hpp"
#include "radgeo/radical.hpp"
#include "radgeo/report.hpp"

namespace radgeo {

inline const Order kCo3Order = (Order{495766656} * 1000);

struct Co3Options {
  std::uint64_t seed = 1;
  /// The 2B class has 2.6M elements; enumerating it certifies its centralizer
  /// and the two-class claim but costs ~12 s and ~150 MB.
  bool enumerate_2b = true;
  std::size_t max_mem_mb = 4096;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Raised for resource limits (memory budget) as opposed to failed checks.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Result of a normalizer/stabilizer computation in G.
struct StabilizerResult {
  GroupHandle group;
  Order in_cz = 0;       // order of the part inside C(z)
  std::size_t orbit = 1; // length of the orbit of z
  bool certified = false;
};

class Co3Context {
 public:
  /// Verifies the order, finds the two involution classes by random powering
  /// and builds the 2A class index and C_G(z).
  static std::unique_ptr<Co3Context> calibrate(const GeneratorFile& gens, const Co3Options& opts,
                                               Report* report = nullptr);

  const GroupHandle& group() const { return g_; }
  const Co3Options& options() const { return opts_; }
  const Permutation& z() const { return z_; }
  const Permutation& b() const { return b_; }
  const ClassIndex& class_2a() const { return *a_; }
  const ClassIndex* class_2b() const { return b_class_.get(); }
  const GroupHandle& cz() const { return cz_; }
  const std::optional<GroupHandle>& cb() const { return cb_; }
  std::size_t fixed_2a() const { return fix_a_; }
  std::size_t fixed_2b() const { return fix_b_; }

  bool is_involution(const Point* p) const;
  /// 2A membership by fixed-point count (a class function separating the two classes)
  bool is_central(const Point* p) const;
  bool is_central(const Permutation& p) const { return is_central(p.data()); }
  bool is_noncentral(const Point* p) const;

  /// C(z)-elements satisfying every predicate's normalizing condition, streamed.
  GroupHandle normalizer_in_cz(const std::vector<GroupHandle>& objects, std::uint64_t seed = 1) const;
  /// Joint stabilizer in G of subgroups that all contain the central points
  /// `points` (one of which is z) in their centers. Uses C(z) streaming plus
  /// conjugates of the C(q)-stabilizers for q in `points`.
  StabilizerResult stabilizer(const std::vector<GroupHandle>& objects, const std::vector<Permutation>& points,
                              std::uint64_t seed = 1) const;

  /// Cached variant keyed by a caller-chosen name.
  const StabilizerResult& stabilizer_cached(const std::string& key, const std::vector<GroupHandle>& objects,
                                            const std::vector<Permutation>& points) const;
  /// A previously cached result, or nullptr.
  const StabilizerResult* cached(const std::string& key) const {
    auto it = memo_.find(key);
    return it == memo_.end() ? nullptr : &it->second;
  }

 private:
  Co3Context() = default;
  GroupHandle g_;
  Co3Options opts_;
  Permutation z_, b_;
  std::unique_ptr<ClassIndex> a_, b_class_;
  GroupHandle cz_;
  std::optional<GroupHandle> cb_;
  std::size_t fix_a_ = 0, fix_b_ = 0;
  mutable std::map<std::string, StabilizerResult> memo_;
};

/// 4x4 unitriangular matrices over F2 packed as bit 4*r + c (0-based entry (r, c)).
using Mat4 = std::uint16_t;
Mat4 mat4_mul(Mat4 a, Mat4 b);
Mat4 mat4_identity();
Mat4 mat4_from(const BitMatrix& m);
inline bool mat4_get(Mat4 m, int r, int c) { return (m >> (4 * r + c)) & 1; }

struct LocalSylowModel {
  GroupHandle s;
  std::unique_ptr<FiniteGroup> table;  // explicit elements of S
  ElemSet centrals;                    // 2A involutions of S
  std::vector<ElemSet> pure_central;   // pure central subgroups of S (identity included)
  ElemSet m;                           // normal pure central 2^4
  std::array<std::uint32_t, 4> a{};    // basis a1..a4 of M
  std::array<std::uint32_t, 10> zl{};  // lifts z1..z10
  std::array<ElemSet, 10> lifts;       // all four central lifts of each zbar_i
  std::vector<Mat4> u4;                // image of each element of S
  ElemSet line;                        // L = <a1, a2>
  ElemSet m1, m2, m3;
  ElemSet line_structure;              // points of the three M-spaces on L (39)
  ElemSet cone;                        // points of the cone structure (31)
  std::vector<ElemSet> cone_lines;     // 15 lines through a1 inside the cone structure
  std::vector<ElemSet> cone_planes;    // 15 planes
  std::vector<ElemSet> boxes;          // planes 1..15 in the reference labelling

  Permutation perm(std::uint32_t i) const { return table->element(i); }
  std::uint32_t a1() const { return a[0]; }
  /// Points (2A elements) of a subgroup of S.
  ElemSet points_of(const ElemSet& h) const;
  ElemSet span(const std::vector<std::uint32_t>& gens) const { return table->closure(gens); }
  GroupHandle handle(const ElemSet& h) const;
};

/// Builds a Sylow 2-subgroup inside C(z) by climbing and fits the U4 model.
LocalSylowModel sylow2(const Co3Context& ctx, Report* report = nullptr);

Report involution_classes(const Co3Context& ctx, const LocalSylowModel& model);
Report prop43_structures(const LocalSylowModel& model);

struct RadicalInstance {
  std::string tag;        // e.g. "pML[]"
  std::string structure;  // reference text from the class table
  ElemSet elements;
  std::uint64_t expected_order = 0;
  std::size_t expected_center_points = 0;
  std::uint64_t expected_normalizer = 0;
  ElemSet points;
  ElemSet center;
};

std::vector<RadicalInstance> instantiate_radicals(const LocalSylowModel& model);
const RadicalInstance& find_instance(const std::vector<RadicalInstance>& v, const std::string& tag);

Report verify_table1(const Co3Context& ctx, const LocalSylowModel& model,
                     const std::vector<RadicalInstance>& inst);
Report table2_orbits(const Co3Context& ctx, const LocalSylowModel& model,
                     const std::vector<RadicalInstance>& inst);
Report cone_facts(const LocalSylowModel& model, const std::vector<RadicalInstance>& inst);
Report step_justifications(const LocalSylowModel& model, const std::vector<RadicalInstance>& inst);
Report prop51_check(const Co3Context& ctx, const LocalSylowModel& model,
                    const std::vector<RadicalInstance>& inst);

/// Points, lines and M-spaces through z, from the 2A elements of C(z).
struct PointResidue {
  std::vector<std::uint32_t> points;             // class ids of 2A n C(z), z first
  std::vector<std::vector<std::uint32_t>> lines; // sorted class ids, 3 each
  std::vector<std::vector<std::uint32_t>> planes;
  std::vector<std::vector<std::uint32_t>> mspaces;
  std::size_t rank5 = 0;
  std::size_t product_exceptions = 0;
};

PointResidue point_residue(const Co3Context& ctx);
Report geometry_axioms(const Co3Context& ctx, const LocalSylowModel& model, const PointResidue& res);

struct BorelTitsObject {
  std::string kind;  // point, line, mspace
  std::vector<std::uint32_t> points;  // class ids
};
/// The Delta-object attached to a 2-subgroup U of S whose center holds a central involution.
BorelTitsObject borel_tits_c(const Co3Context& ctx, const LocalSylowModel& model, const PointResidue& res,
                             const ElemSet& u);
Report borel_tits_checks(const Co3Context& ctx, const LocalSylowModel& model, const PointResidue& res,
                         const std::vector<RadicalInstance>& inst);

struct FixedComplex {
  TypedComplex complex;
  std::size_t points = 0, lines = 0, mspaces = 0;
  std::size_t lines_pointwise = 0, mspaces_pointwise = 0;
};
FixedComplex delta_fixed_z(const Co3Context& ctx, const PointResidue& res);
Report delta_fixed_report(const Co3Context& ctx, const PointResidue& res);

Report euler_divisibility(const Co3Context& ctx, const LocalSylowModel& model);

/// Local flag complex on the distinguished radicals inside S, with the retraction
/// steps replayed where the chains are topped by S.
struct LocalFlagComplex {
  TypedComplex complex;
  std::map<std::string, VertexId> named;  // "pL[]" etc.
  std::vector<VertexId> point_vertex;     // per central of S (index into model.centrals)
  std::vector<VertexId> mspace_vertex;    // M1, M2, M3
};
LocalFlagComplex local_flag_complex(const LocalSylowModel& model, const std::vector<RadicalInstance>& inst);

}  // namespace radgeo
