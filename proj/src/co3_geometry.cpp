#include <algorithm>
#include <map>
#include <set>

#include "radgeo/co3.hpp"
#include "radgeo/rng.hpp"

namespace radgeo {

namespace {

bool commute_images(const Point* a, const Point* b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k)
    if (a[b[k]] != b[a[k]]) return false;
  return true;
}

std::uint32_t class_product(const ClassIndex& cls, const Point* a, const Point* b, std::vector<Point>& scratch) {
  const std::size_t n = cls.degree();
  scratch.resize(n);
  for (std::size_t k = 0; k < n; ++k) scratch[k] = b[a[k]];  // right action: x^(ab) = (x^a)^b
  return cls.find(scratch.data());
}

std::vector<std::uint32_t> sorted_ids(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

PointResidue point_residue(const Co3Context& ctx) {
  PointResidue res;
  const auto& cls = ctx.class_2a();
  if (!cls.full_storage()) throw PermError("point_residue needs the 2A class in full storage");
  const std::size_t n = cls.degree();
  const auto zid = cls.find(ctx.z());
  const Point* z = cls.images(zid);
  res.points.push_back(zid);
  for (std::uint32_t i = 0; i < cls.size(); ++i)
    if (i != zid && commute_images(z, cls.images(i), n)) res.points.push_back(i);

  // local product table among the points of C(z)
  const std::size_t np = res.points.size();
  std::map<std::uint32_t, int> local;
  for (std::size_t i = 0; i < np; ++i) local[res.points[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> prod(np, std::vector<int>(np, -1));
  std::vector<Point> scratch;
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = i + 1; j < np; ++j) {
      const Point* a = cls.images(res.points[i]);
      const Point* b = cls.images(res.points[j]);
      if (!commute_images(a, b, n)) continue;
      auto id = class_product(cls, a, b, scratch);
      if (id == ClassIndex::kNone) continue;
      auto it = local.find(id);
      if (it == local.end()) continue;
      prod[i][j] = prod[j][i] = it->second;
    }
  for (std::size_t i = 1; i < np; ++i) res.product_exceptions += prod[0][i] < 0;

  // pure central subgroups through z, as sets of local ids
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> todo{{0}};
  seen.insert(todo[0]);
  for (std::size_t k = 0; k < todo.size(); ++k) {
    const auto e = todo[k];
    for (int x = 0; x < static_cast<int>(np); ++x) {
      if (std::binary_search(e.begin(), e.end(), x)) continue;
      std::vector<int> next = e;
      next.push_back(x);
      bool ok = true;
      for (int y : e) {
        const int xy = prod[x][y];
        if (xy < 0) {
          ok = false;
          break;
        }
        next.push_back(xy);
      }
      if (!ok) continue;
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (next.size() != 2 * e.size() + 1) continue;
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  for (const auto& e : todo) {
    std::vector<std::uint32_t> ids;
    for (int x : e) ids.push_back(res.points[x]);
    ids = sorted_ids(std::move(ids));
    switch (e.size()) {
      case 3: res.lines.push_back(std::move(ids)); break;
      case 7: res.planes.push_back(std::move(ids)); break;
      case 15: res.mspaces.push_back(std::move(ids)); break;
      case 31: ++res.rank5; break;
      default: break;
    }
  }
  return res;
}

Report geometry_axioms(const Co3Context& ctx, const LocalSylowModel& model, const PointResidue& res) {
  Report rep;
  const auto& cls = ctx.class_2a();
  const std::size_t n = cls.degree();
  Stopwatch sw;
  rep.expect("axioms.points_commuting_with_z", "2A elements of C(z), z included", 631, res.points.size());
  rep.expect("axioms.product_with_z", "zq is central for every central q commuting with z", 0,
             res.product_exceptions);
  rep.expect("axioms.lines_through_point", "315 lines through a point", 315, res.lines.size());
  rep.expect("axioms.mspaces_through_point", "135 M-spaces through a point", 135, res.mspaces.size());
  rep.expect("axioms.planes_through_point", "pure central 2^3 through a point", 945, res.planes.size());
  rep.expect("axioms.no_rank5", "no pure central 2^5", 0, res.rank5);

  // every M-space: 15 points and 35 lines, all of them pure central
  std::set<std::vector<std::uint32_t>> all_lines;
  for (const auto& l : res.lines) all_lines.insert(l);
  bool d2 = true;
  for (const auto& m : res.mspaces) d2 &= m.size() == 15;
  rep.check("axioms.D2", "an M-space has 15 points and 35 lines", d2, "15 points, 35 lines",
            d2 ? "15 points, 35 lines (every 2-subspace of a pure 2^4 is a line)" : "wrong size");

  // every plane lies in exactly one M-space
  std::size_t bad_planes = 0;
  for (const auto& p : res.planes) {
    std::size_t over = 0;
    for (const auto& m : res.mspaces) over += std::includes(m.begin(), m.end(), p.begin(), p.end());
    bad_planes += over != 1;
  }
  rep.check("axioms.plane_in_unique_M", "each plane lies in a unique M-space", bad_planes == 0 && !res.planes.empty(),
            "0 exceptions", std::to_string(bad_planes) + " exceptions over " + std::to_string(res.planes.size()) +
                                " planes");

  // D6: M-spaces through z meet in at most a line
  std::size_t d6 = 0;
  std::map<std::size_t, std::size_t> meets;
  for (std::size_t i = 0; i < res.mspaces.size(); ++i)
    for (std::size_t j = i + 1; j < res.mspaces.size(); ++j) {
      std::vector<std::uint32_t> c;
      std::set_intersection(res.mspaces[i].begin(), res.mspaces[i].end(), res.mspaces[j].begin(),
                            res.mspaces[j].end(), std::back_inserter(c));
      ++meets[c.size()];
      d6 += c.size() > 3;
    }
  rep.check("axioms.D6", "two M-spaces meet in at most a line", d6 == 0, "0 exceptions",
            std::to_string(d6) + " exceptions; intersection sizes " + printable(meets));

  // D4 and D5 over the whole class
  sw.reset();
  const auto& line = res.lines.at(0);
  const auto& mspace = res.mspaces.at(0);
  std::map<std::size_t, std::size_t> d4, d5;
  std::size_t d5_not_line = 0;
  std::vector<Point> scratch;
  for (std::uint32_t q = 0; q < cls.size(); ++q) {
    const Point* x = cls.images(q);
    std::size_t c = 0;
    for (auto l : line) c += commute_images(x, cls.images(l), n);
    ++d4[c];
    if (std::binary_search(mspace.begin(), mspace.end(), q)) continue;
    std::vector<std::uint32_t> perp;
    for (auto m : mspace)
      if (commute_images(x, cls.images(m), n)) perp.push_back(m);
    ++d5[perp.size()];
    if (perp.size() == 3) {
      auto id = class_product(cls, cls.images(perp[0]), cls.images(perp[1]), scratch);
      if (id != perp[2] && std::find(perp.begin(), perp.end(), id) == perp.end()) ++d5_not_line;
    }
  }
  const bool d4_ok = std::all_of(d4.begin(), d4.end(), [](auto& kv) { return kv.first == 0 || kv.first == 1 || kv.first == 3; });
  rep.check("axioms.D4", "q^perp n L is empty, a point or all of L (never two points)", d4_ok,
            "sizes in {0,1,3}", "histogram " + printable(d4), sw.ms());
  const bool d5_ok = d5_not_line == 0 && std::all_of(d5.begin(), d5.end(), [](auto& kv) { return kv.first <= 3; });
  rep.check("axioms.D5", "for q off M, q^perp n M is at most a line", d5_ok, "sizes in {0,1,3}, 3 = a line",
            "histogram " + printable(d5) + ", " + std::to_string(d5_not_line) + " non-lines", sw.ms());

  // 2B product rule, sampled inside C(z)
  sw.reset();
  ProductReplacer pr(ctx.cz().generators(), ctx.options().seed * 13 + 5);
  std::size_t sampled = 0, bad_b = 0;
  for (int i = 0; i < 4000 && sampled < 500; ++i) {
    auto y = pr.next();
    auto o = y.order();
    if (o % 2) continue;
    auto r = y.pow(static_cast<std::int64_t>(o / 2));
    if (!ctx.is_noncentral(r.data())) continue;
    ++sampled;
    auto zr = ctx.z() * r;
    bool is_b = ctx.is_noncentral(zr.data());
    if (ctx.class_2b()) is_b = is_b && ctx.class_2b()->contains(zr);
    bad_b += !is_b;
  }
  rep.check("axioms.product_with_2B", "z r is non-central for non-central r commuting with z",
            bad_b == 0 && sampled > 0, "0 exceptions",
            std::to_string(bad_b) + " exceptions in " + std::to_string(sampled) + " sampled 2B elements of C(z)",
            sw.ms());

  // the model's M-spaces and line are objects of the residue
  std::set<std::vector<std::uint32_t>> ms(res.mspaces.begin(), res.mspaces.end());
  std::size_t found = 0;
  for (const auto* h : {&model.m1, &model.m2, &model.m3}) {
    std::vector<std::uint32_t> ids;
    for (auto x : model.points_of(*h)) ids.push_back(cls.find(model.perm(x)));
    found += ms.count(sorted_ids(ids));
  }
  rep.expect("axioms.model_mspaces", "M1, M2, M3 are M-spaces through z", 3, found);
  return rep;
}

BorelTitsObject borel_tits_c(const Co3Context& ctx, const LocalSylowModel& model, const PointResidue& res,
                             const ElemSet& u) {
  const auto& t = *model.table;
  const auto& cls = ctx.class_2a();
  const auto center = t.center(u);
  ElemSet h{t.identity()};
  for (auto x : center)
    if (contains(model.centrals, x)) h.push_back(x);
  std::sort(h.begin(), h.end());
  if (h.size() == 1) throw PermError("Z(U) contains no central involution");
  if (t.closure(h) != h) throw PermError("central involutions of Z(U) are not closed under products");
  BorelTitsObject out;
  for (auto x : h)
    if (x != t.identity()) out.points.push_back(cls.find(model.perm(x)));
  std::sort(out.points.begin(), out.points.end());
  switch (h.size()) {
    case 2: out.kind = "point"; break;
    case 4: out.kind = "line"; break;
    case 16: out.kind = "mspace"; break;
    case 8: {
      std::vector<const std::vector<std::uint32_t>*> over;
      for (const auto& m : res.mspaces)
        if (std::includes(m.begin(), m.end(), out.points.begin(), out.points.end())) over.push_back(&m);
      if (!std::binary_search(out.points.begin(), out.points.end(), res.points.front()))
        throw PermError("plane not through z: outside the computed residue");
      if (over.size() != 1) throw PermError("plane does not lie in a unique M-space");
      out.kind = "mspace";
      out.points = *over.front();
      break;
    }
    default: throw PermError("pure central subgroup of rank 5 or more: model inconsistent");
  }
  return out;
}

Report borel_tits_checks(const Co3Context& ctx, const LocalSylowModel& model, const PointResidue& res,
                         const std::vector<RadicalInstance>& inst) {
  Report rep;
  const auto& cls = ctx.class_2a();
  auto ids_of = [&](const ElemSet& pts) {
    std::vector<std::uint32_t> ids;
    for (auto x : pts) ids.push_back(cls.find(model.perm(x)));
    return sorted_ids(ids);
  };
  auto s_obj = borel_tits_c(ctx, model, res, model.table->all());
  rep.check("borel_tits.S", "U = S gives the cone point", s_obj.kind == "point" &&
                s_obj.points == ids_of(model.points_of(model.span({model.a1()}))) && s_obj.points.size() == 1,
            "point a1", s_obj.kind);
  auto l_obj = borel_tits_c(ctx, model, res, find_instance(inst, "L").elements);
  rep.check("borel_tits.R_L", "U = R_L gives the line L", l_obj.kind == "line" &&
                l_obj.points == ids_of(model.points_of(model.line)),
            "line L", l_obj.kind);
  std::size_t good = 0;
  for (std::size_t i = 3; i < model.boxes.size(); ++i) {
    auto o = borel_tits_c(ctx, model, res, model.boxes[i]);
    good += o.kind == "mspace" && o.points.size() == 15;
  }
  rep.expect("borel_tits.planes", "planes 4..15 each give the unique M-space above them", 12, good);

  // normalizing elements stabilize the object
  std::size_t checked = 0, stable = 0;
  for (const auto& r : inst) {
    auto st = ctx.cached("N:" + r.tag);
    if (!st) continue;
    auto o = borel_tits_c(ctx, model, res, r.elements);
    for (const auto& g : st->group.generators()) {
      std::vector<std::uint32_t> img;
      for (auto p : o.points) img.push_back(cls.find(conjugate(cls.element(p), g)));
      ++checked;
      stable += sorted_ids(img) == o.points;
    }
  }
  if (checked == 0)
    rep.add({"borel_tits.normalizers", "N_G(U) stabilizes the object attached to U", Status::Skipped,
             "all generators", "no normalizer computed yet (run table1 first)", 0});
  else
    rep.check("borel_tits.normalizers", "N_G(U) stabilizes the object attached to U", stable == checked,
              "all generators", std::to_string(stable) + "/" + std::to_string(checked) + " generators");
  return rep;
}

}  // namespace radgeo
