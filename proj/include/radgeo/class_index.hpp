#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "radgeo/bsgs.hpp"
#include "radgeo/flat_map.hpp"

namespace radgeo {

class ClassCapExceeded : public PermError {
 public:
  ClassCapExceeded(std::size_t reached, std::size_t cap)
      : PermError("class enumeration exceeded cap " + std::to_string(cap) + " (reached " +
                  std::to_string(reached) + ")"),
        reached_(reached) {}
  std::size_t reached() const { return reached_; }

 private:
  std::size_t reached_;
};

struct ClassOptions {
  std::size_t cap = std::size_t{1} << 22;
  /// Keep every element's image array. Without it only 64-bit fingerprints
  /// are stored and images are rebuilt from parent words.
  bool full_storage = true;
  /// Record act[s][i] = index of element i conjugated by generator s.
  bool action_table = true;
};

/// Conjugacy class of `rep` under G as a breadth-first orbit over conjugation
/// by the generators of G, with a parent pointer per element.
class ClassIndex {
 public:
  static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

  ClassIndex(const GroupHandle& g, const Permutation& rep, const ClassOptions& opts = {});

  const GroupHandle& group() const { return *group_; }
  const Permutation& representative() const { return rep_; }
  std::size_t size() const { return fingerprints_.size(); }
  std::size_t degree() const { return degree_; }
  bool full_storage() const { return full_; }
  bool has_action_table() const { return !act_.empty(); }

  /// Index of an element, or kNone when it is not in the class.
  std::uint32_t find(const Point* images) const;
  std::uint32_t find(const Permutation& p) const { return find(p.data()); }
  bool contains(const Permutation& p) const { return find(p) != kNone; }

  /// Image array of element i. Only valid in full-storage mode.
  const Point* images(std::uint32_t i) const { return storage_.data() + std::size_t{i} * degree_; }
  Permutation element(std::uint32_t i) const;
  /// index of element i conjugated by generator s (needs the action table)
  std::uint32_t act(std::size_t s, std::uint32_t i) const { return act_[s][i]; }

  /// g with rep^g equal to element i.
  Permutation transversal(std::uint32_t i) const;
  /// g with rep^g = target; throws when target is outside the class.
  Permutation conjugating_element(const Permutation& target) const;

  /// C_G(rep) from Schreier generators of the conjugation action, with the
  /// order certified to equal |G| / |class|.
  GroupHandle centralizer(std::uint64_t seed = 1) const;

 private:
  const GroupHandle* group_;
  Permutation rep_;
  std::size_t degree_;
  bool full_;
  std::vector<std::uint64_t> fingerprints_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint8_t> via_;
  std::vector<Point> storage_;
  std::vector<std::vector<std::uint32_t>> act_;
  FingerprintMap lookup_;
};

}  // namespace radgeo
