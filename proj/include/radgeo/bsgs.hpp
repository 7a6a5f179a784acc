#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radgeo/perm.hpp"
#include "radgeo/rng.hpp"

namespace radgeo {

/// Exact group orders; |Co3| needs 39 bits, symmetric groups overflow 64 quickly.
using Order = unsigned __int128;

std::string to_string(Order n);
Order parse_order(const std::string& s);

/// One level of a stabilizer chain: the basic orbit of `base` under the
/// level's strong generators, with explicit coset representatives.
struct ChainLevel {
  Point base = 0;
  std::vector<std::uint32_t> gens;       // indices into StabilizerChain::strong_generators()
  std::vector<Point> orbit;               // orbit[0] == base
  std::vector<std::int32_t> position;     // point -> index into orbit, -1 if absent
  std::vector<Permutation> transversal;   // base^transversal[i] == orbit[i]
  std::vector<Permutation> inverse_transversal;
};

class StabilizerChain {
 public:
  StabilizerChain() = default;
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  const ChainLevel& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  std::vector<std::size_t> transversal_sizes() const;
  Order order() const;

  struct SiftResult {
    Permutation residue;
    std::size_t level = 0;  // first level whose orbit missed, or depth() when all matched
  };
  SiftResult sift(const Permutation& g) const;
  bool contains(const Permutation& g) const;

  /// Uniformly random element (product of random transversal entries).
  Permutation random_element(Rng& rng) const;

  // Mutation used while the chain is being built.
  void add_strong_generator(const Permutation& g, std::size_t through_level);
  void append_level(Point base_point);
  void rebuild_level(std::size_t i);

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> strong_;
  std::vector<ChainLevel> levels_;
};

struct SchreierSimsOptions {
  std::uint64_t seed = 1;
  /// When set, construction stops once the chain reaches this order; the
  /// result is then certified because a partial chain's order is a lower bound.
  std::optional<Order> known_order;
  /// Consecutive successful random sifts before the random phase stops.
  std::size_t stop_after = 40;
  /// Deterministic Schreier-generator check when no known order is supplied.
  bool verify = true;
  std::size_t max_random_iterations = 200000;
};

/// Randomized Schreier-Sims with product-replacement elements, followed by a
/// deterministic verification (every Schreier generator sifts to identity)
/// unless the target order is known.
StabilizerChain schreier_sims(const std::vector<Permutation>& gens,
                              const SchreierSimsOptions& opts = {});

/// Immutable handle: generators plus their (always built) stabilizer chain.
class GroupHandle {
 public:
  GroupHandle() = default;

  static GroupHandle from_generators(std::vector<Permutation> gens,
                                     const SchreierSimsOptions& opts = {});
  static GroupHandle trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const StabilizerChain& chain() const { return *chain_; }
  Order order() const { return chain_->order(); }
  bool contains(const Permutation& g) const { return chain_->contains(g); }
  /// All elements, refusing when the order exceeds `cap`.
  std::vector<Permutation> elements(std::size_t cap = std::size_t{1} << 20) const;
  /// True when every generator of `other` lies in this group.
  bool contains_group(const GroupHandle& other) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabilizerChain> chain_;
};

/// Orbit of a point under a generator set.
std::vector<Point> orbit_of(const std::vector<Permutation>& gens, Point x, std::size_t degree);

}  // namespace radgeo
