#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "radgeo/bsgs.hpp"

namespace radgeo {

/// Default upper bound on |G| for anything that walks every element.
inline constexpr std::uint64_t kDefaultStreamCap = std::uint64_t{1} << 24;

class StreamCapExceeded : public PermError {
 public:
  using PermError::PermError;
};

/// Walks every element of a group exactly once as a product of transversal
/// representatives, deepest level outermost. The order is fixed by the chain.
class ElementStream {
 public:
  explicit ElementStream(const GroupHandle& g, std::uint64_t cap = kDefaultStreamCap);
  /// Only the elements whose outermost transversal index equals `top`.
  ElementStream(const GroupHandle& g, std::size_t top, std::uint64_t cap);

  /// Pointer to the current element's image array, or nullptr when exhausted.
  const Point* next();
  std::uint64_t produced() const { return produced_; }
  std::size_t degree() const { return degree_; }

 private:
  void fill_from(std::size_t level);

  const StabilizerChain* chain_;
  std::size_t degree_;
  std::size_t depth_;
  std::vector<std::size_t> index_;
  // partial_[k] = u_{depth-1} * ... * u_k ; partial_[depth] = identity
  std::vector<std::vector<Point>> partial_;
  std::size_t levels_ = 0;  // number of levels the counter runs over
  bool started_ = false;
  bool done_ = false;
  std::uint64_t produced_ = 0;
};

/// Calls f(images) for every element; stops early when f returns false.
/// Returns the number of elements visited.
std::uint64_t for_each_element(const GroupHandle& g, const std::function<bool(const Point*)>& f,
                               std::uint64_t cap = kDefaultStreamCap);

/// {h in H : pred(h)}, assuming the predicate cuts out a subgroup (stabilizers,
/// normalizers, centralizers). The returned handle's order equals the exact
/// count of accepted elements.
GroupHandle filter_subgroup(const GroupHandle& h, const std::function<bool(const Point*)>& pred,
                            std::uint64_t cap = kDefaultStreamCap, std::uint64_t seed = 1);

using PredicateFactory = std::function<std::function<bool(const Point*)>()>;

/// Parallel filter_subgroup: the factory builds one predicate per worker.
GroupHandle filter_subgroup_parallel(const GroupHandle& h, const PredicateFactory& make_pred,
                                     unsigned threads = 0, std::uint64_t cap = kDefaultStreamCap,
                                     std::uint64_t seed = 1);

/// First element of H (in stream order) satisfying pred.
std::optional<Permutation> find_element(const GroupHandle& h,
                                        const std::function<bool(const Point*)>& pred,
                                        std::uint64_t cap = kDefaultStreamCap);

/// Hashed element set of a small group, used for O(1) membership of
/// conjugated generators.
class ElementSet {
 public:
  explicit ElementSet(const GroupHandle& g, std::size_t cap = std::size_t{1} << 20);
  bool contains(const Point* images) const;
  std::size_t size() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> elements_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> sorted_;  // (hash, index)
};

/// True when h^-1 r h lies in R for every generator r of R.
bool normalizes(const Point* h, const GroupHandle& r, const ElementSet& r_elems,
                std::vector<Point>& scratch);

/// N_H(R) by streaming H. Throws if R is not contained in H.
GroupHandle normalizer_by_stream(const GroupHandle& h, const GroupHandle& r,
                                 std::uint64_t cap = kDefaultStreamCap, std::uint64_t seed = 1);

/// C_H(X) for a list of permutations X, by streaming H.
GroupHandle centralizer_by_stream(const GroupHandle& h, const std::vector<Permutation>& xs,
                                  std::uint64_t cap = kDefaultStreamCap, std::uint64_t seed = 1);

/// Builds a group from generators whose exact order is already known.
GroupHandle group_with_order(std::vector<Permutation> gens, Order order, std::uint64_t seed = 1);

}  // namespace radgeo
