#include "radgeo/bsgs.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace radgeo {

std::string to_string(Order n) {
  if (n == 0) return "0";
  std::string s;
  while (n) {
    s.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

Order parse_order(const std::string& s) {
  Order n = 0;
  for (char c : s) {
    if (c == ',' || c == '_') continue;
    if (c < '0' || c > '9') throw std::invalid_argument("bad order literal: " + s);
    n = n * 10 + static_cast<Order>(c - '0');
  }
  return n;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

std::vector<std::size_t> StabilizerChain::transversal_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& l : levels_) s.push_back(l.orbit.size());
  return s;
}

Order StabilizerChain::order() const {
  Order n = 1;
  for (const auto& l : levels_) n *= l.orbit.size();
  return n;
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& g) const {
  if (g.degree() != degree_) throw PermError("degree mismatch in sift");
  SiftResult r{g, 0};
  Permutation tmp(degree_);
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& lv = levels_[i];
    const Point beta = r.residue[lv.base];
    const auto pos = lv.position[beta];
    if (pos < 0) {
      r.level = i;
      return r;
    }
    compose_into(r.residue.data(), lv.inverse_transversal[pos].data(), tmp.mutable_data(),
                 degree_);
    std::swap(r.residue, tmp);
  }
  r.level = levels_.size();
  return r;
}

bool StabilizerChain::contains(const Permutation& g) const {
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

Permutation StabilizerChain::random_element(Rng& rng) const {
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const auto& lv = levels_[i];
    g = g * lv.transversal[uniform_index(rng, lv.orbit.size())];
  }
  return g;
}

void StabilizerChain::append_level(Point base_point) {
  ChainLevel lv;
  lv.base = base_point;
  levels_.push_back(std::move(lv));
  rebuild_level(levels_.size() - 1);
}

void StabilizerChain::add_strong_generator(const Permutation& g, std::size_t through_level) {
  strong_.push_back(g);
  const auto idx = static_cast<std::uint32_t>(strong_.size() - 1);
  for (std::size_t i = 0; i <= through_level && i < levels_.size(); ++i) {
    levels_[i].gens.push_back(idx);
    rebuild_level(i);
  }
}

void StabilizerChain::rebuild_level(std::size_t i) {
  auto& lv = levels_[i];
  lv.orbit.assign(1, lv.base);
  lv.position.assign(degree_, -1);
  lv.position[lv.base] = 0;
  lv.transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    for (auto gi : lv.gens) {
      const auto& s = strong_[gi];
      const Point y = s[lv.orbit[k]];
      if (lv.position[y] >= 0) continue;
      lv.position[y] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(y);
      lv.transversal.push_back(lv.transversal[k] * s);
    }
  }
  lv.inverse_transversal.clear();
  lv.inverse_transversal.reserve(lv.transversal.size());
  for (const auto& u : lv.transversal) lv.inverse_transversal.push_back(u.inverse());
}

std::vector<Point> orbit_of(const std::vector<Permutation>& gens, Point x, std::size_t degree) {
  std::vector<bool> seen(degree, false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : gens) {
      Point y = g[orb[k]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

namespace {

// Picks the moved point of `g` lying on its longest cycle; short chains
// on large degree come from base points in big orbits.
Point choose_base_point(const Permutation& g) {
  std::vector<bool> seen(g.degree(), false);
  std::size_t best_len = 0;
  Point best = 0;
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (seen[i] || g[i] == i) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > best_len) {
      best_len = len;
      best = static_cast<Point>(i);
    }
  }
  return best;
}

class Builder {
 public:
  explicit Builder(std::size_t degree) : chain_(degree) {}

  // Sifts g from `start`; adds the residue as a new strong generator when
  // it is nontrivial. Returns true when the chain changed.
  bool insert(const Permutation& g, std::size_t start = 0) {
    auto r = sift_from(g, start);
    if (r.level == chain_.depth() && r.residue.is_identity()) return false;
    std::size_t j = r.level;
    if (j == chain_.depth()) chain_.append_level(choose_base_point(r.residue));
    chain_.add_strong_generator(r.residue, j);
    return true;
  }

  StabilizerChain::SiftResult sift_from(const Permutation& g, std::size_t start) const {
    StabilizerChain::SiftResult r{g, start};
    Permutation tmp(chain_.degree());
    for (std::size_t i = start; i < chain_.depth(); ++i) {
      const auto& lv = chain_.level(i);
      const auto pos = lv.position[r.residue[lv.base]];
      if (pos < 0) {
        r.level = i;
        return r;
      }
      compose_into(r.residue.data(), lv.inverse_transversal[pos].data(), tmp.mutable_data(),
                   chain_.degree());
      std::swap(r.residue, tmp);
    }
    r.level = chain_.depth();
    return r;
  }

  // Returns true when every Schreier generator sifts; otherwise inserts the
  // first failing residue and returns false.
  bool verify_once() {
    for (std::size_t i = chain_.depth(); i-- > 0;) {
      const auto& lv = chain_.level(i);
      const auto gens = lv.gens;  // copy: insert() may grow the level
      const auto orbit_size = lv.orbit.size();
      for (std::size_t k = 0; k < orbit_size; ++k) {
        for (auto gi : gens) {
          const auto& level = chain_.level(i);
          const auto& s = chain_.strong_generators()[gi];
          const Point img = s[level.orbit[k]];
          Permutation sg = level.transversal[k] * s * level.inverse_transversal[level.position[img]];
          if (insert(sg, i + 1)) return false;
        }
      }
    }
    return true;
  }

  void seed_base(Point p) { chain_.append_level(p); }

  StabilizerChain take() { return std::move(chain_); }
  const StabilizerChain& chain() const { return chain_; }

 private:
  StabilizerChain chain_;
};

}  // namespace

StabilizerChain schreier_sims(const std::vector<Permutation>& gens,
                              const SchreierSimsOptions& opts) {
  if (gens.empty()) throw PermError("schreier_sims needs at least one generator");
  const std::size_t n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw PermError("generators have different degrees");

  Builder b(n);
  std::vector<Permutation> nontrivial;
  for (const auto& g : gens)
    if (!g.is_identity()) nontrivial.push_back(g);
  if (nontrivial.empty()) return b.take();

  // First base point: smallest point of a largest orbit.
  {
    std::vector<bool> done(n, false);
    std::size_t best = 0;
    Point best_pt = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (done[x]) continue;
      auto orb = orbit_of(nontrivial, static_cast<Point>(x), n);
      for (auto y : orb) done[y] = true;
      if (orb.size() > best) {
        best = orb.size();
        best_pt = static_cast<Point>(x);
      }
    }
    b.seed_base(best_pt);
  }
  for (const auto& g : nontrivial) b.insert(g);

  const std::size_t k_max = opts.max_random_iterations;
  ProductReplacer pr(nontrivial, opts.seed);
  std::size_t consecutive = 0;
  for (std::size_t it = 0; it < k_max; ++it) {
    const Order cur = b.chain().order();
    if (opts.known_order) {
      if (cur == *opts.known_order) break;
      if (cur > *opts.known_order)
        throw PermError("group order exceeds the supplied known order");
    } else if (consecutive >= opts.stop_after) {
      break;
    }
    if (b.insert(pr.next()))
      consecutive = 0;
    else
      ++consecutive;
  }
  if (opts.known_order) {
    if (b.chain().order() != *opts.known_order)
      throw PermError("random Schreier-Sims did not reach the known order " +
                      to_string(*opts.known_order) + " (reached " +
                      to_string(b.chain().order()) + ")");
  } else if (opts.verify) {
    while (!b.verify_once()) {
    }
  }
  return b.take();
}

GroupHandle GroupHandle::from_generators(std::vector<Permutation> gens,
                                         const SchreierSimsOptions& opts) {
  if (gens.empty()) throw PermError("group needs at least one generator");
  GroupHandle h;
  h.degree_ = gens.front().degree();
  h.chain_ = std::make_shared<const StabilizerChain>(schreier_sims(gens, opts));
  h.gens_ = std::move(gens);
  return h;
}

GroupHandle GroupHandle::trivial(std::size_t degree) {
  return from_generators({Permutation(degree)});
}

std::vector<Permutation> GroupHandle::elements(std::size_t cap) const {
  if (order() > cap) throw PermError("group too large to list (" + to_string(order()) + ")");
  // Breadth-first closure over the transversals, deepest level first.
  std::vector<Permutation> out{Permutation(degree_)};
  const auto& ch = chain();
  for (std::size_t i = ch.depth(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * ch.level(i).orbit.size());
    for (const auto& g : out)
      for (const auto& u : ch.level(i).transversal) next.push_back(g * u);
    out = std::move(next);
  }
  return out;
}

bool GroupHandle::contains_group(const GroupHandle& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Permutation& g) { return contains(g); });
}

}  // namespace radgeo
