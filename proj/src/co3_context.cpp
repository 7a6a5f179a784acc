#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "radgeo/co3.hpp"
#include "radgeo/rng.hpp"
#include "radgeo/stream.hpp"

namespace radgeo {

namespace {

constexpr std::size_t kExpected2A = 170775;
constexpr std::uint64_t kExpectedC2A = 2903040;
constexpr std::size_t kExpected2B = 2608200;
constexpr std::uint64_t kExpectedC2B = 190080;

std::size_t estimate_mb(std::size_t elements, std::size_t degree, bool full) {
  // fingerprint + parent + via + two hash slots, plus images when kept
  std::size_t per = 8 + 4 + 1 + 32 + (full ? 2 * degree : 0);
  return elements * per / (1u << 20) + 1;
}

}  // namespace

std::unique_ptr<Co3Context> Co3Context::calibrate(const GeneratorFile& gens, const Co3Options& opts,
                                                  Report* report) {
  std::unique_ptr<Co3Context> ctx(new Co3Context());
  ctx->opts_ = opts;
  Report local;
  Report& rep = report ? *report : local;

  if (gens.degree != 276)
    throw InputError("expected permutations on 276 points, got degree " + std::to_string(gens.degree));
  Stopwatch sw;
  SchreierSimsOptions so;
  so.seed = opts.seed;
  ctx->g_ = GroupHandle::from_generators(gens.gens, so);
  const auto order = ctx->g_.order();
  rep.expect("calibrate.order", "order of the sporadic group on 276 points", to_string(kCo3Order),
             to_string(order), sw.ms());
  if (order != kCo3Order) throw InputError("group order " + to_string(order) + " is not |Co3|");

  const std::size_t need = estimate_mb(kExpected2A, 276, true) + 64 +
                           (opts.enumerate_2b ? estimate_mb(kExpected2B, 276, false) : 0);
  if (need > opts.max_mem_mb)
    throw ResourceError("memory budget " + std::to_string(opts.max_mem_mb) + " MB is below the estimated " +
                        std::to_string(need) + " MB (disable 2B enumeration to save ~" +
                        std::to_string(estimate_mb(kExpected2B, 276, false)) + " MB)");

  // involutions by random powering; fixed-point counts are class functions
  sw.reset();
  ProductReplacer pr(gens.gens, opts.seed * 7919 + 3);
  std::map<std::size_t, Permutation> by_fixed;
  for (int i = 0; i < 400; ++i) {
    auto x = pr.next();
    auto o = x.order();
    if (o % 2) continue;
    auto y = x.pow(static_cast<std::int64_t>(o / 2));
    by_fixed.emplace(y.fixed_points(), std::move(y));
  }
  std::vector<std::size_t> sigs;
  for (const auto& [f, _] : by_fixed) sigs.push_back(f);
  rep.check("calibrate.involution_signatures", "two classes of involutions", by_fixed.size() == 2, "2",
            std::to_string(by_fixed.size()) + " fixed-point signatures " + printable(sigs), sw.ms());
  if (by_fixed.size() != 2) throw InputError("random search did not find exactly two involution signatures");

  // the central class is the one of size 170775; try the smaller-support one first
  auto it_hi = std::prev(by_fixed.end());
  auto it_lo = by_fixed.begin();
  sw.reset();
  ClassOptions ao;
  ao.cap = std::size_t{1} << 20;
  std::unique_ptr<ClassIndex> first;
  try {
    first = std::make_unique<ClassIndex>(ctx->g_, it_hi->second, ao);
  } catch (const ClassCapExceeded&) {
  }
  if (!first || first->size() != kExpected2A) {
    std::swap(it_hi, it_lo);
    first = std::make_unique<ClassIndex>(ctx->g_, it_hi->second, ao);
  }
  ctx->a_ = std::move(first);
  ctx->z_ = it_hi->second;
  ctx->fix_a_ = it_hi->first;
  ctx->b_ = it_lo->second;
  ctx->fix_b_ = it_lo->first;
  rep.expect("calibrate.2A.class_size", "central involution class", kExpected2A, ctx->a_->size(), sw.ms());
  sw.reset();
  ctx->cz_ = ctx->a_->centralizer(opts.seed);
  rep.expect("calibrate.2A.centralizer", "centralizer of a central involution is 2.S6(2)", kExpectedC2A,
             to_string(ctx->cz_.order()), sw.ms());
  rep.check("calibrate.2A.class_equation", "|class| x |centralizer| = |G|",
            Order{ctx->a_->size()} * ctx->cz_.order() == kCo3Order, to_string(kCo3Order),
            to_string(Order{ctx->a_->size()} * ctx->cz_.order()));

  if (opts.enumerate_2b) {
    sw.reset();
    ClassOptions bo;
    bo.full_storage = false;
    bo.action_table = false;
    ctx->b_class_ = std::make_unique<ClassIndex>(ctx->g_, ctx->b_, bo);
    rep.expect("calibrate.2B.class_size", "non-central involution class", kExpected2B, ctx->b_class_->size(),
               sw.ms());
    sw.reset();
    ctx->cb_ = ctx->b_class_->centralizer(opts.seed);
    rep.expect("calibrate.2B.centralizer", "centralizer of a non-central involution is 2 x M12", kExpectedC2B,
               to_string(ctx->cb_->order()), sw.ms());
    rep.check("calibrate.2B.class_equation", "|class| x |centralizer| = |G|",
              Order{ctx->b_class_->size()} * ctx->cb_->order() == kCo3Order, to_string(kCo3Order),
              to_string(Order{ctx->b_class_->size()} * ctx->cb_->order()));
  } else {
    rep.add({"calibrate.2B.class_size", "non-central involution class", Status::Skipped,
             std::to_string(kExpected2B), "2B enumeration disabled", 0});
  }
  rep.expect("calibrate.signature_2A", "fixed points of a central involution", 36, ctx->fix_a_);
  rep.expect("calibrate.signature_2B", "fixed points of a non-central involution", 12, ctx->fix_b_);
  return ctx;
}

bool Co3Context::is_involution(const Point* p) const {
  const std::size_t n = g_.degree();
  bool moved = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (p[p[i]] != i) return false;
    if (p[i] != i) moved = true;
  }
  return moved;
}

static std::size_t fixed_count(const Point* p, std::size_t n) {
  std::size_t f = 0;
  for (std::size_t i = 0; i < n; ++i) f += p[i] == i;
  return f;
}

bool Co3Context::is_central(const Point* p) const {
  return fixed_count(p, g_.degree()) == fix_a_ && is_involution(p);
}

bool Co3Context::is_noncentral(const Point* p) const {
  return fixed_count(p, g_.degree()) == fix_b_ && is_involution(p);
}

GroupHandle Co3Context::normalizer_in_cz(const std::vector<GroupHandle>& objects, std::uint64_t seed) const {
  std::vector<ElementSet> sets;
  for (const auto& o : objects) {
    if (!cz_.contains_group(o)) throw PermError("normalizer_in_cz: object not inside C(z)");
    sets.emplace_back(o);
  }
  auto factory = [&]() {
    auto scratch = std::make_shared<std::vector<Point>>();
    return std::function<bool(const Point*)>([&, scratch](const Point* p) {
      for (std::size_t k = 0; k < objects.size(); ++k)
        if (!normalizes(p, objects[k], sets[k], *scratch)) return false;
      return true;
    });
  };
  return filter_subgroup_parallel(cz_, factory, opts_.threads, kDefaultStreamCap, seed);
}

namespace {

std::vector<Permutation> conjugate_all(const std::vector<Permutation>& xs, const Permutation& g) {
  std::vector<Permutation> out;
  for (const auto& x : xs) out.push_back(conjugate(x, g));
  return out;
}

}  // namespace

StabilizerResult Co3Context::stabilizer(const std::vector<GroupHandle>& objects,
                                        const std::vector<Permutation>& points, std::uint64_t seed) const {
  StabilizerResult res;
  auto hz = normalizer_in_cz(objects, seed);
  res.in_cz = hz.order();
  std::unordered_set<Permutation, PermutationHash> pts(points.begin(), points.end());
  if (!pts.count(z_)) throw PermError("stabilizer: z must be one of the points");
  if (points.size() == 1) {
    res.group = hz;
    res.orbit = 1;
    res.certified = true;
    return res;
  }
  std::vector<Permutation> gens = hz.generators();
  auto orbit_of_z = [&](const std::vector<Permutation>& gs) {
    std::unordered_set<Permutation, PermutationHash> seen{z_};
    std::vector<Permutation> todo{z_};
    while (!todo.empty()) {
      auto x = todo.back();
      todo.pop_back();
      for (const auto& g : gs) {
        auto y = conjugate(x, g);
        if (seen.insert(y).second) todo.push_back(y);
      }
    }
    return seen;
  };
  auto orbit = orbit_of_z(gens);
  for (const auto& q : points) {
    if (orbit.size() == pts.size()) break;
    if (q == z_) continue;
    const auto g = a_->conjugating_element(q);  // z^g = q
    const auto ginv = g.inverse();
    std::vector<GroupHandle> moved;
    for (const auto& o : objects) moved.push_back(group_with_order(conjugate_all(o.generators(), ginv), o.order()));
    auto hq = normalizer_in_cz(moved, seed + 17);
    for (const auto& h : hq.generators()) gens.push_back(conjugate(h, g));
    orbit = orbit_of_z(gens);
  }
  bool inside = std::all_of(orbit.begin(), orbit.end(), [&](const Permutation& x) { return pts.count(x) > 0; });
  SchreierSimsOptions so;
  so.seed = seed;
  res.group = GroupHandle::from_generators(gens, so);
  res.orbit = orbit.size();
  res.certified = inside && orbit.size() == pts.size() && res.group.order() == res.in_cz * Order{orbit.size()};
  return res;
}

const StabilizerResult& Co3Context::stabilizer_cached(const std::string& key, const std::vector<GroupHandle>& objects,
                                                      const std::vector<Permutation>& points) const {
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(key, stabilizer(objects, points, opts_.seed)).first->second;
}

}  // namespace radgeo
