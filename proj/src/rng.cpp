#include "radgeo/rng.hpp"

#include <algorithm>

namespace radgeo {

ProductReplacer::ProductReplacer(const std::vector<Permutation>& gens, std::uint64_t seed,
                                 std::size_t slots, std::size_t warmup)
    : rng_(make_rng(seed)) {
  if (gens.empty()) throw PermError("product replacement needs at least one generator");
  const std::size_t r = std::max(slots, gens.size() + 2);
  slots_.reserve(r);
  for (std::size_t i = 0; i < r; ++i) slots_.push_back(gens[i % gens.size()]);
  accum_ = Permutation(gens.front().degree());
  for (std::size_t i = 0; i < warmup; ++i) next();
}

Permutation ProductReplacer::next() {
  const std::size_t r = slots_.size();
  std::size_t s = uniform_index(rng_, r);
  std::size_t t = uniform_index(rng_, r - 1);
  if (t >= s) ++t;
  if (rng_() & 1) {
    slots_[s] = slots_[s] * slots_[t];
    accum_ = accum_ * slots_[s];
  } else {
    slots_[s] = slots_[t] * slots_[s];
    accum_ = slots_[s] * accum_;
  }
  return accum_;
}

}  // namespace radgeo
