#include "radgeo/stream.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

namespace radgeo {

ElementStream::ElementStream(const GroupHandle& g, std::uint64_t cap)
    : chain_(&g.chain()), degree_(g.degree()), depth_(g.chain().depth()) {
  if (g.order() > cap)
    throw StreamCapExceeded("group order " + to_string(g.order()) + " exceeds stream cap " +
                            std::to_string(cap));
  index_.assign(depth_, 0);
  partial_.assign(depth_ + 1, std::vector<Point>(degree_));
  std::iota(partial_[depth_].begin(), partial_[depth_].end(), Point{0});
  levels_ = depth_;
}

ElementStream::ElementStream(const GroupHandle& g, std::size_t top, std::uint64_t cap)
    : ElementStream(g, cap) {
  if (depth_ == 0) {
    if (top != 0) done_ = true;
    return;
  }
  if (top >= chain_->level(depth_ - 1).orbit.size()) {
    done_ = true;
    return;
  }
  index_[depth_ - 1] = top;
  levels_ = depth_ - 1;
}

void ElementStream::fill_from(std::size_t level) {
  // recompute partial_[k] for k = level, level-1, ..., 0
  for (std::size_t k = level + 1; k-- > 0;) {
    const auto& u = chain_->level(k).transversal[index_[k]];
    compose_into(partial_[k + 1].data(), u.data(), partial_[k].data(), degree_);
  }
}

const Point* ElementStream::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    if (depth_ == 0) {
      ++produced_;
      return partial_[0].data();
    }
    fill_from(depth_ - 1);
    ++produced_;
    return partial_[0].data();
  }
  // advance the mixed-radix counter, level 0 fastest
  std::size_t k = 0;
  while (k < levels_) {
    if (++index_[k] < chain_->level(k).orbit.size()) break;
    index_[k] = 0;
    ++k;
  }
  if (k == levels_) {
    done_ = true;
    return nullptr;
  }
  fill_from(k);
  ++produced_;
  return partial_[0].data();
}

std::uint64_t for_each_element(const GroupHandle& g, const std::function<bool(const Point*)>& f,
                               std::uint64_t cap) {
  ElementStream s(g, cap);
  while (const Point* p = s.next())
    if (!f(p)) break;
  return s.produced();
}

GroupHandle group_with_order(std::vector<Permutation> gens, Order order, std::uint64_t seed) {
  SchreierSimsOptions o;
  o.seed = seed;
  o.known_order = order;
  return GroupHandle::from_generators(std::move(gens), o);
}

GroupHandle filter_subgroup(const GroupHandle& h, const std::function<bool(const Point*)>& pred,
                            std::uint64_t cap, std::uint64_t seed) {
  const std::size_t n = h.degree();
  std::vector<Permutation> gens{Permutation(n)};
  StabilizerChain current = schreier_sims(gens);
  std::uint64_t count = 0;
  Permutation tmp(n);
  for_each_element(
      h,
      [&](const Point* p) {
        if (!pred(p)) return true;
        ++count;
        std::copy(p, p + n, tmp.mutable_data());
        if (!current.contains(tmp)) {
          gens.push_back(tmp);
          SchreierSimsOptions o;
          o.seed = seed + gens.size();
          current = schreier_sims(gens, o);
        }
        return true;
      },
      cap);
  if (gens.size() > 1) gens.erase(gens.begin());
  return group_with_order(std::move(gens), count, seed);
}

GroupHandle filter_subgroup_parallel(const GroupHandle& h, const PredicateFactory& make_pred,
                                     unsigned threads, std::uint64_t cap, std::uint64_t seed) {
  if (h.order() > cap)
    throw StreamCapExceeded("group order " + to_string(h.order()) + " exceeds stream cap " +
                            std::to_string(cap));
  const std::size_t n = h.degree();
  const std::size_t depth = h.chain().depth();
  const std::size_t tops = depth == 0 ? 1 : h.chain().level(depth - 1).orbit.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, tops));

  struct Partial {
    std::vector<Permutation> gens;
    std::uint64_t count = 0;
  };
  std::vector<Partial> parts(threads);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&](unsigned id) {
    try {
      auto pred = make_pred();
      auto& part = parts[id];
      std::vector<Permutation> gens{Permutation(n)};
      StabilizerChain current = schreier_sims(gens);
      Permutation tmp(n);
      for (std::size_t top; (top = next.fetch_add(1)) < tops;) {
        ElementStream s(h, top, cap);
        while (const Point* p = s.next()) {
          if (!pred(p)) continue;
          ++part.count;
          std::copy(p, p + n, tmp.mutable_data());
          if (!current.contains(tmp)) {
            gens.push_back(tmp);
            SchreierSimsOptions o;
            o.seed = seed + gens.size();
            current = schreier_sims(gens, o);
          }
        }
      }
      part.gens.assign(gens.begin() + 1, gens.end());
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<Permutation> gens;
  std::uint64_t count = 0;
  for (auto& part : parts) {
    count += part.count;
    for (auto& g : part.gens) gens.push_back(std::move(g));
  }
  if (gens.empty()) gens.push_back(Permutation(n));
  return group_with_order(std::move(gens), count, seed);
}

std::optional<Permutation> find_element(const GroupHandle& h,
                                        const std::function<bool(const Point*)>& pred,
                                        std::uint64_t cap) {
  std::optional<Permutation> found;
  const std::size_t n = h.degree();
  for_each_element(
      h,
      [&](const Point* p) {
        if (!pred(p)) return true;
        Permutation g(n);
        std::copy(p, p + n, g.mutable_data());
        found = std::move(g);
        return false;
      },
      cap);
  return found;
}

ElementSet::ElementSet(const GroupHandle& g, std::size_t cap)
    : degree_(g.degree()), elements_(g.elements(cap)) {
  sorted_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    sorted_.emplace_back(elements_[i].hash(), static_cast<std::uint32_t>(i));
  std::sort(sorted_.begin(), sorted_.end());
}

bool ElementSet::contains(const Point* images) const {
  const auto h = hash_images(images, degree_);
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), std::make_pair(h, std::uint32_t{0}));
  for (; it != sorted_.end() && it->first == h; ++it)
    if (std::equal(images, images + degree_, elements_[it->second].data())) return true;
  return false;
}

bool normalizes(const Point* h, const GroupHandle& r, const ElementSet& r_elems,
                std::vector<Point>& scratch) {
  const std::size_t n = r.degree();
  scratch.resize(n);
  for (const auto& g : r.generators()) {
    conjugate_into(g.data(), h, scratch.data(), n);
    if (!r_elems.contains(scratch.data())) return false;
  }
  return true;
}

GroupHandle normalizer_by_stream(const GroupHandle& h, const GroupHandle& r, std::uint64_t cap,
                                 std::uint64_t seed) {
  if (!h.contains_group(r)) throw PermError("normalizer_by_stream: R is not contained in H");
  ElementSet elems(r);
  std::vector<Point> scratch;
  return filter_subgroup(
      h, [&](const Point* p) { return normalizes(p, r, elems, scratch); }, cap, seed);
}

GroupHandle centralizer_by_stream(const GroupHandle& h, const std::vector<Permutation>& xs,
                                  std::uint64_t cap, std::uint64_t seed) {
  const std::size_t n = h.degree();
  return filter_subgroup(
      h,
      [&](const Point* p) {
        for (const auto& x : xs)
          if (!commute(p, x.data(), n)) return false;
        return true;
      },
      cap, seed);
}

}  // namespace radgeo
