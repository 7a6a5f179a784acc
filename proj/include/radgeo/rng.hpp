#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "radgeo/perm.hpp"

namespace radgeo {

/// Seeded generator used by every randomized routine in the library.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    0x5eedu};
  return Rng(seq);
}

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

/// Product-replacement random group elements (Celler, Leedham-Green et al.).
class ProductReplacer {
 public:
  ProductReplacer(const std::vector<Permutation>& gens, std::uint64_t seed,
                  std::size_t slots = 10, std::size_t warmup = 60);

  Permutation next();

 private:
  Rng rng_;
  std::vector<Permutation> slots_;
  Permutation accum_;
};

}  // namespace radgeo
