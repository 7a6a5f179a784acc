#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "radgeo/bsgs.hpp"
#include "radgeo/complex.hpp"

namespace radgeo {

inline constexpr std::uint64_t kBruteCap = 1'000'000;

class CapExceeded : public PermError {
 public:
  using PermError::PermError;
};

/// Sorted element indices into a FiniteGroup table.
using ElemSet = std::vector<std::uint32_t>;

/// Explicit element table of a small permutation group.
class FiniteGroup {
 public:
  explicit FiniteGroup(const GroupHandle& g, std::uint64_t cap = kBruteCap);

  std::size_t size() const { return elems_.size(); }
  std::size_t degree() const { return degree_; }
  const GroupHandle& handle() const { return handle_; }
  const Permutation& element(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t identity() const { return 0; }
  std::uint32_t index_of(const Permutation& p) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  /// g^-1 a g
  std::uint32_t conj(std::uint32_t a, std::uint32_t g) const;
  std::uint32_t order_of(std::uint32_t a) const { return order_[a]; }
  const std::vector<std::uint32_t>& generator_indices() const { return gen_idx_; }
  /// Conjugation by generator s as a table over all elements.
  const std::vector<std::uint32_t>& gen_action(std::size_t s) const { return act_[s]; }

  ElemSet closure(const std::vector<std::uint32_t>& gens) const;
  /// Greedy generating set, each element outside the span of the previous ones.
  std::vector<std::uint32_t> generators_of(const ElemSet& h) const;
  ElemSet conjugate_set(const ElemSet& h, std::uint32_t g) const;
  ElemSet normalizer(const ElemSet& within, const ElemSet& r) const;
  ElemSet centralizer(const ElemSet& within, const ElemSet& r) const;
  ElemSet center(const ElemSet& r) const;
  ElemSet sylow(const ElemSet& within, unsigned p) const;
  /// Largest normal p-subgroup: intersection of all Sylow p-subgroups.
  ElemSet p_core(const ElemSet& within, unsigned p) const;
  ElemSet all() const;
  bool is_elementary_abelian(const ElemSet& h, unsigned p) const;

 private:
  GroupHandle handle_;
  std::size_t degree_;
  std::vector<Permutation> elems_;
  std::unordered_multimap<std::uint64_t, std::uint32_t> lookup_;
  std::vector<std::uint32_t> inv_, order_, gen_idx_;
  std::vector<std::vector<std::uint32_t>> act_;
};

bool contains(const ElemSet& h, std::uint32_t x);
bool is_subset(const ElemSet& a, const ElemSet& b);
/// p-part of n
std::uint64_t p_part(std::uint64_t n, unsigned p);

struct SubgroupRecord {
  ElemSet elements;
  std::vector<Permutation> generators;
  std::uint64_t order = 1;
  int class_id = -1;
  std::uint64_t center_order = 1;
  std::uint64_t normalizer_order = 0;
  std::uint64_t centralizer_order = 0;
  std::uint64_t class_size = 0;
  bool is_radical = false;
  bool is_centric = false;
  bool is_distinguished = false;
  bool is_elementary_abelian = false;
};

/// All p-subgroups: `classes` holds one representative per conjugacy class
/// (inside the stored Sylow), `all` every actual subgroup with its class id.
struct PSubgroupLattice {
  unsigned p = 2;
  ElemSet sylow;
  std::vector<SubgroupRecord> classes;
  std::vector<ElemSet> all;
  std::vector<int> class_of;
  /// Normalizer order computed a second way (stabilizer chain streaming).
  std::vector<std::uint64_t> normalizer_check;
};

PSubgroupLattice p_subgroups(const FiniteGroup& g, unsigned p);

enum class CollectionKind { Quillen, Bouc, DistinguishedBouc, Benson };
std::string collection_name(CollectionKind k);

struct CollectionPoset {
  CollectionKind kind;
  std::vector<ElemSet> members;
  std::vector<int> class_of;
  Poset poset;
};

/// Order-p elements generated from Omega_1 Z(S) under conjugation and commuting products.
ElemSet benson_elements(const FiniteGroup& g, const PSubgroupLattice& lat);

CollectionPoset quillen_poset(const FiniteGroup& g, const PSubgroupLattice& lat);
CollectionPoset bouc_poset(const FiniteGroup& g, const PSubgroupLattice& lat);
CollectionPoset distinguished_poset(const FiniteGroup& g, const PSubgroupLattice& lat);
CollectionPoset benson_closure(const FiniteGroup& g, const PSubgroupLattice& lat);

struct HomotopyReport {
  std::vector<long long> betti_a, betti_b;  // reduced
  long long chi_a = 0, chi_b = 0;
  bool equal = false;
  std::string note = "equal Betti vectors are evidence only, not a homotopy equivalence";
};

HomotopyReport homotopy_compare(const CollectionPoset& a, const CollectionPoset& b);

/// Named brute-forceable groups: S4, S5, GL32 (on the 7 Fano points), C2, C2xC2.
GroupHandle small_group(const std::string& name);
std::vector<std::string> small_group_names();

/// Class table as JSON: per class order, |Z|, |N|, |C|, class size and flags.
nlohmann::json class_table_json(const std::string& name, const PSubgroupLattice& lat);

}  // namespace radgeo
