#include "radgeo/class_index.hpp"

#include <algorithm>

#include "radgeo/rng.hpp"

namespace radgeo {

ClassIndex::ClassIndex(const GroupHandle& g, const Permutation& rep, const ClassOptions& opts)
    : group_(&g), rep_(rep), degree_(g.degree()), full_(opts.full_storage) {
  if (rep.degree() != degree_) throw PermError("class representative has the wrong degree");
  const auto& gens = g.generators();
  if (gens.size() > 255) throw PermError("too many generators for a class index");
  const std::size_t n = degree_;
  if (opts.action_table) act_.assign(gens.size(), {});

  auto add = [&](const Point* img, std::uint32_t parent, std::uint8_t via) -> std::uint32_t {
    const auto h = hash_images(img, n);
    const auto [idx, inserted] =
        lookup_.try_emplace(h, static_cast<std::uint32_t>(fingerprints_.size()));
    if (!inserted) {
      if (full_ && !std::equal(img, img + n, images(idx)))
        throw PermError("fingerprint collision in class enumeration");
      return idx;
    }
    if (fingerprints_.size() >= opts.cap) throw ClassCapExceeded(fingerprints_.size(), opts.cap);
    fingerprints_.push_back(h);
    parent_.push_back(parent);
    via_.push_back(via);
    if (full_) storage_.insert(storage_.end(), img, img + n);
    return idx;
  };

  add(rep.data(), kNone, 0);
  // Breadth-first by layers; in fingerprint mode only the current layer's
  // images are kept.
  std::vector<Point> layer(rep.images().begin(), rep.images().end());
  std::vector<Point> next_layer;
  std::vector<Point> scratch(n);
  std::size_t layer_begin = 0;
  std::size_t layer_end = 1;
  while (layer_begin < layer_end) {
    next_layer.clear();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const Point* img = full_ ? images(static_cast<std::uint32_t>(i))
                               : layer.data() + (i - layer_begin) * n;
      for (std::size_t s = 0; s < gens.size(); ++s) {
        conjugate_into(img, gens[s].data(), scratch.data(), n);
        const auto before = fingerprints_.size();
        const auto j = add(scratch.data(), static_cast<std::uint32_t>(i), static_cast<std::uint8_t>(s));
        if (!full_ && fingerprints_.size() != before)
          next_layer.insert(next_layer.end(), scratch.begin(), scratch.end());
        if (!act_.empty()) act_[s].push_back(j);
        if (full_) img = images(static_cast<std::uint32_t>(i));  // storage may have moved
      }
    }
    layer_begin = layer_end;
    layer_end = fingerprints_.size();
    if (!full_) layer.swap(next_layer);
  }
}

std::uint32_t ClassIndex::find(const Point* img) const {
  const auto i = lookup_.find(hash_images(img, degree_));
  if (i == FingerprintMap::kAbsent) return kNone;
  if (full_ && !std::equal(img, img + degree_, images(i))) return kNone;
  return i;
}

Permutation ClassIndex::transversal(std::uint32_t i) const {
  std::vector<std::uint8_t> word;
  for (std::uint32_t k = i; parent_[k] != kNone; k = parent_[k]) word.push_back(via_[k]);
  Permutation t(degree_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) t = t * group_->generators()[*it];
  return t;
}

Permutation ClassIndex::element(std::uint32_t i) const {
  if (full_) return Permutation(std::vector<Point>(images(i), images(i) + degree_));
  return conjugate(rep_, transversal(i));
}

Permutation ClassIndex::conjugating_element(const Permutation& target) const {
  const auto i = find(target);
  if (i == kNone) throw PermError("conjugating_element: target is not in the class");
  Permutation t = transversal(i);
  if (!(conjugate(rep_, t) == target))
    throw PermError("conjugating_element: fingerprint matched a different element");
  return t;
}

GroupHandle ClassIndex::centralizer(std::uint64_t seed) const {
  const auto& G = *group_;
  const Order target = G.order() / size();
  if (target * size() != G.order()) throw PermError("class size does not divide |G|");
  const auto& gens = G.generators();
  Rng rng = make_rng(seed);
  std::vector<Permutation> cgens;
  for (int round = 0; round < 64; ++round) {
    for (int k = 0; k < 4; ++k) {
      const auto i = static_cast<std::uint32_t>(uniform_index(rng, size()));
      const auto s = uniform_index(rng, gens.size());
      const Permutation ti = transversal(i);
      const Permutation b = conjugate(element(i), gens[s]);
      const auto j = act_.empty() ? find(b) : act_[s][i];
      // t_i s t_j^-1 maps rep -> b_i -> b_j -> rep
      Permutation sg = ti * gens[s] * transversal(j).inverse();
      if (!sg.is_identity()) cgens.push_back(std::move(sg));
    }
    if (cgens.empty()) {
      if (target == 1) return GroupHandle::trivial(degree_);
      continue;
    }
    SchreierSimsOptions quick;
    quick.seed = seed + round;
    quick.verify = false;
    const Order reached = schreier_sims(cgens, quick).order();
    if (reached > target) throw PermError("centralizer generators exceed |G|/|class|");
    if (reached == target) {
      SchreierSimsOptions exact;
      exact.seed = seed;
      exact.known_order = target;
      return GroupHandle::from_generators(cgens, exact);
    }
  }
  throw PermError("centralizer generation did not reach |G|/|class|");
}

}  // namespace radgeo
