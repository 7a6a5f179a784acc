#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "radgeo/bsgs.hpp"
#include "radgeo/gf2.hpp"

namespace radgeo {

using VertexId = std::uint32_t;
using Simplex = std::vector<VertexId>;  // sorted, nonempty
using SimplexId = std::uint32_t;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

class ComplexError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite simplicial complex with typed vertices. Simplices are never
/// physically erased; removal flips an alive flag so ids stay stable for
/// certificates.
class TypedComplex {
 public:
  TypedComplex() = default;

  /// Registers a type name and returns its tag.
  int add_type(const std::string& name);
  const std::vector<std::string>& type_names() const { return type_names_; }
  VertexId add_vertex(int type);
  std::size_t vertex_count() const { return vertex_type_.size(); }
  int vertex_type(VertexId v) const { return vertex_type_[v]; }

  /// Adds a simplex and all its faces (input need not be sorted).
  SimplexId add_simplex(Simplex s);

  std::optional<SimplexId> find(const Simplex& s) const;
  bool contains(const Simplex& s) const;
  const Simplex& simplex(SimplexId id) const { return simplices_[id]; }
  bool alive(SimplexId id) const { return alive_[id]; }
  std::size_t id_bound() const { return simplices_.size(); }
  std::size_t size() const { return alive_count_; }
  int dimension() const;

  /// Alive simplices one dimension up containing id.
  std::vector<SimplexId> alive_cofaces(SimplexId id) const;
  /// Every alive simplex strictly containing id.
  std::vector<SimplexId> all_cofaces(SimplexId id) const;
  std::size_t alive_coface_count(SimplexId id) const { return coface_count_[id]; }
  bool is_maximal(SimplexId id) const { return alive_[id] && coface_count_[id] == 0; }
  std::vector<SimplexId> alive_ids() const;
  std::vector<Simplex> maximal_simplices() const;
  std::vector<VertexId> alive_vertices() const;

  /// Removes one simplex; it must have no alive cofaces.
  void remove(SimplexId id);

  /// Subcomplex of simplices containing v, and the link of v.
  TypedComplex star(VertexId v) const;
  TypedComplex residue(VertexId v) const;

  /// Apex contained in every maximal simplex (least id), if any.
  std::optional<VertexId> is_cone() const;

  /// Sum over simplices of (-1)^dim, minus one.
  long long euler_reduced() const;
  /// Counts of alive simplices per dimension.
  std::vector<std::size_t> f_vector() const;
  BettiResult betti() const;

  /// At most one vertex of each type in every simplex.
  bool is_flag_typed() const;

  /// Order-independent 64-bit digest of the alive simplices.
  std::uint64_t content_hash() const;

  /// Text dump: `types` and `vertex <id> <type>` header lines, then one
  /// maximal simplex per line.
  void dump(std::ostream& out) const;
  static TypedComplex parse(std::istream& in);

 private:
  std::vector<std::string> type_names_;
  std::vector<int> vertex_type_;
  std::vector<Simplex> simplices_;
  std::vector<bool> alive_;
  std::vector<std::uint32_t> coface_count_;
  std::vector<std::vector<SimplexId>> cofaces_;  // codimension one, alive or not
  std::unordered_map<Simplex, SimplexId, SimplexHash> index_;
  std::size_t alive_count_ = 0;

  SimplexId insert_closed(const Simplex& s);
};

/// Finite poset with tagged elements; less[i][j] means i < j.
class Poset {
 public:
  explicit Poset(std::size_t n = 0) : less_(n, std::vector<bool>(n, false)), tags_(n, 0) {}
  std::size_t size() const { return less_.size(); }
  std::size_t add_element(int tag);
  void set_less(std::size_t i, std::size_t j) { less_[i][j] = true; }
  bool less(std::size_t i, std::size_t j) const { return less_[i][j]; }
  int tag(std::size_t i) const { return tags_[i]; }
  /// Closes the relation transitively and checks antisymmetry.
  void close();
  std::vector<std::string> tag_names;

 private:
  std::vector<std::vector<bool>> less_;
  std::vector<int> tags_;
};

/// Chains of P as simplices; vertex i is element i, with the element's tag.
TypedComplex order_complex(const Poset& p);

/// Vertex permutation images for one group element acting on a complex.
using VertexPermutation = std::vector<VertexId>;

struct AdmissibilityReport {
  bool admissible = true;
  std::optional<Simplex> witness;  // fixed setwise but not pointwise
};

/// Checks that the map sends simplices to simplices and preserves types.
bool is_simplicial_action(const TypedComplex& c, const VertexPermutation& g);
AdmissibilityReport check_admissible(const TypedComplex& c, const VertexPermutation& g);

/// Fixed-point subcomplex of g; throws ComplexError when g is not admissible.
TypedComplex fixed_subcomplex(const TypedComplex& c, const VertexPermutation& g);

/// One flag type: number of vertices in the flag and the stabilizer order.
struct FlagTypeStabilizer {
  std::string name;
  int flag_size = 1;
  Order stabilizer_order = 1;
};

/// -1 + sum over flag types of (-1)^(|F|-1) |G|/|G_F|. Throws ComplexError
/// when a stabilizer order does not divide |G|.
__int128 euler_by_orbit_counting(const std::vector<FlagTypeStabilizer>& flags, Order group_order);

/// Largest k with 2^k dividing n (n != 0).
int two_adic_valuation(__int128 n);
std::string int128_to_string(__int128 n);

}  // namespace radgeo
