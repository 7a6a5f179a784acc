#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "radgeo/perm.hpp"

namespace radgeo {

/// Binary Golay code of length 24 as the extended quadratic-residue code:
/// coordinates 0..22 are F_23, coordinate 23 is infinity.
class GolayCode {
 public:
  GolayCode();
  bool contains(std::uint32_t word) const { return member_[word]; }
  const std::vector<std::uint32_t>& words() const { return words_; }
  std::vector<std::uint32_t> words_of_weight(int w) const;
  /// Generators of M24 acting on the 24 coordinates (0-based images).
  const std::vector<std::array<std::uint8_t, 24>>& m24_generators() const { return m24_; }

 private:
  std::vector<bool> member_;
  std::vector<std::uint32_t> words_;
  std::vector<std::array<std::uint8_t, 24>> m24_;
};

using LeechVector = std::array<int, 24>;  // coordinates scaled by sqrt(8)

bool in_leech(const GolayCode& code, const LeechVector& x);

/// Generators of Co3 acting on the 276 pairs {v, w - v} of type-2 vectors v
/// with v.w = 24 for a fixed type-3 vector w. The result is checked to
/// have order |Co3| before returning; throws after `max_attempts` failures.
std::vector<Permutation> construct_co3_276(std::uint64_t seed = 7, int max_attempts = 8);

}  // namespace radgeo
