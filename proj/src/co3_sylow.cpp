#include <algorithm>
#include <map>
#include <set>

#include "radgeo/co3.hpp"
#include "radgeo/rng.hpp"
#include "radgeo/stream.hpp"

namespace radgeo {

Mat4 mat4_identity() { return 0x8421; }

Mat4 mat4_mul(Mat4 a, Mat4 b) {
  Mat4 out = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      int bit = 0;
      for (int k = 0; k < 4; ++k) bit ^= mat4_get(a, r, k) & mat4_get(b, k, c);
      out |= static_cast<Mat4>(bit << (4 * r + c));
    }
  return out;
}

Mat4 mat4_from(const BitMatrix& m) {
  Mat4 out = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (m.get(r, c)) out |= static_cast<Mat4>(1u << (4 * r + c));
  return out;
}

namespace {

std::optional<Mat4> mat4_inverse(Mat4 m) {
  // Gauss-Jordan on [m | I]
  std::array<std::uint8_t, 4> a{}, b{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) a[r] |= mat4_get(m, r, c) << c;
    b[r] = static_cast<std::uint8_t>(1u << r);
  }
  for (int c = 0; c < 4; ++c) {
    int piv = -1;
    for (int r = c; r < 4; ++r)
      if ((a[r] >> c) & 1) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (int r = 0; r < 4; ++r)
      if (r != c && ((a[r] >> c) & 1)) {
        a[r] ^= a[c];
        b[r] ^= b[c];
      }
  }
  Mat4 out = 0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if ((b[r] >> c) & 1) out |= static_cast<Mat4>(1u << (4 * r + c));
  return out;
}

bool is_unitriangular(Mat4 m) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c <= r; ++c)
      if (mat4_get(m, r, c) != (r == c)) return false;
  return true;
}

bool is_power_of_two(Order n) { return n != 0 && (n & (n - 1)) == 0; }

GroupHandle climb(const Co3Context& ctx, std::uint64_t seed, std::size_t& rounds) {
  std::vector<Permutation> pg{ctx.z()};
  GroupHandle p = GroupHandle::from_generators(pg);
  rounds = 0;
  const Order target = 1024;
  while (p.order() < target) {
    ++rounds;
    if (rounds > 12) break;
    GroupHandle n = rounds == 1 ? ctx.cz() : ctx.normalizer_in_cz({p}, seed + rounds);
    ProductReplacer pr(n.generators(), seed * 31 + rounds);
    const Order before = p.order();
    int misses = 0;
    while (misses < 60 && p.order() < target) {
      auto y = pr.next();
      auto o = y.order();
      while (o % 2 == 0) o /= 2;
      auto x = y.pow(static_cast<std::int64_t>(o));
      if (x.is_identity() || p.contains(x)) {
        ++misses;
        continue;
      }
      auto gens = pg;
      gens.push_back(x);
      SchreierSimsOptions so;
      so.seed = seed + gens.size();
      auto cand = GroupHandle::from_generators(gens, so);
      if (!is_power_of_two(cand.order())) {
        ++misses;
        continue;
      }
      pg = std::move(gens);
      p = std::move(cand);
      misses = 0;
    }
    if (p.order() == before) break;  // stalled
  }
  return p;
}

std::vector<std::vector<std::uint32_t>> listed_plane_generators(const FiniteGroup& t,
                                                                const std::array<std::uint32_t, 4>& a,
                                                                const std::array<std::uint32_t, 10>& z) {
  auto mul = [&](std::uint32_t x, std::uint32_t y) { return t.mul(x, y); };
  const auto a23 = mul(a[1], a[2]);
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs = {
      {a[1], a[2]},          {a[1], z[0]},          {a[1], z[4]},          {a[2], z[6]},
      {a[2], z[7]},          {a23, z[8]},           {a23, z[9]},           {z[0], z[6]},
      {z[0], z[7]},          {z[4], z[6]},          {z[4], z[7]},          {mul(a[1], z[0]), mul(a[2], z[6])},
      {mul(a[1], z[0]), mul(a[2], z[7])}, {mul(a[1], z[4]), mul(a[2], z[6])}, {mul(a[1], z[4]), mul(a[2], z[7])}};
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& [x, y] : pairs) out.push_back({a[0], x, y});
  return out;
}

}  // namespace

ElemSet LocalSylowModel::points_of(const ElemSet& h) const {
  ElemSet out;
  std::set_intersection(h.begin(), h.end(), centrals.begin(), centrals.end(), std::back_inserter(out));
  return out;
}

GroupHandle LocalSylowModel::handle(const ElemSet& h) const {
  std::vector<Permutation> gens;
  for (auto x : table->generators_of(h)) gens.push_back(table->element(x));
  if (gens.empty()) gens.push_back(Permutation(table->degree()));
  return group_with_order(std::move(gens), h.size());
}

LocalSylowModel sylow2(const Co3Context& ctx, Report* report) {
  Report local;
  Report& rep = report ? *report : local;
  LocalSylowModel m;
  Stopwatch sw;
  std::size_t rounds = 0;
  GroupHandle s;
  int attempt = 0;
  for (; attempt < 5; ++attempt) {
    s = climb(ctx, ctx.options().seed + 1000 * attempt, rounds);
    if (s.order() == 1024) break;
  }
  rep.expect("sylow.order", "Sylow 2-subgroup of order 2^10 inside C(z)", 1024, to_string(s.order()), sw.ms())
      .actual += " (" + std::to_string(rounds) + " normalizer rounds, attempt " + std::to_string(attempt + 1) + ")";
  if (s.order() != 1024) throw PermError("Sylow climbing stalled");
  m.s = s;
  m.table = std::make_unique<FiniteGroup>(s);
  const auto& t = *m.table;

  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (ctx.is_central(t.element(i).data())) m.centrals.push_back(i);
  rep.expect("sylow.central_involutions", "S contains 55 central involutions", 55, m.centrals.size());

  // pure central subgroups: elementary abelian with every involution central
  std::set<ElemSet> seen;
  std::vector<ElemSet> todo{ElemSet{t.identity()}};
  seen.insert(todo[0]);
  for (std::size_t k = 0; k < todo.size(); ++k) {
    const auto gens = t.generators_of(todo[k]);
    for (auto c : m.centrals) {
      if (contains(todo[k], c)) continue;
      bool ok = true;
      for (auto g : gens)
        if (!commute(t.element(g), t.element(c))) ok = false;
      if (!ok) continue;
      auto ext = gens;
      ext.push_back(c);
      auto h = t.closure(ext);
      for (auto x : h)
        if (x != t.identity() && !contains(m.centrals, x)) ok = false;
      if (ok && seen.insert(h).second) todo.push_back(std::move(h));
    }
  }
  m.pure_central.assign(todo.begin() + 1, todo.end());

  // normal rank 4
  std::vector<ElemSet> normal4;
  for (const auto& h : m.pure_central) {
    if (h.size() != 16) continue;
    bool normal = true;
    for (auto g : t.generator_indices())
      if (t.conjugate_set(h, g) != h) normal = false;
    if (normal) normal4.push_back(h);
  }
  rep.expect("sylow.normal_pure_central_2^4", "unique normal pure central 2^4 in S", 1, normal4.size());
  if (normal4.empty()) throw PermError("no normal pure central 2^4 in S");
  m.m = normal4[0];

  // coordinates on M from an initial basis
  const auto b0 = t.generators_of(m.m);
  std::map<std::uint32_t, unsigned> coord;
  std::array<std::uint32_t, 16> elem_of{};
  for (unsigned mask = 0; mask < 16; ++mask) {
    auto x = t.identity();
    for (unsigned j = 0; j < 4; ++j)
      if ((mask >> j) & 1) x = t.mul(x, b0[j]);
    coord[x] = mask;
    elem_of[mask] = x;
  }
  auto action = [&](std::uint32_t s_idx) {
    Mat4 a = 0;
    const auto sinv = t.inv(s_idx);
    for (unsigned j = 0; j < 4; ++j) {
      const unsigned col = coord.at(t.conj(b0[j], sinv));
      for (unsigned r = 0; r < 4; ++r)
        if ((col >> r) & 1) a |= static_cast<Mat4>(1u << (4 * r + j));
    }
    return a;
  };
  std::vector<Mat4> raw(t.size());
  for (std::uint32_t i = 0; i < t.size(); ++i) raw[i] = action(i);

  std::set<Mat4> reference;
  for (const auto& n : reference_nilpotents()) reference.insert(mat4_from(BitMatrix::identity(4) + n));
  ElemSet outside;
  for (auto c : m.centrals)
    if (!contains(m.m, c)) outside.push_back(c);

  std::optional<Mat4> chosen, fallback;
  for (unsigned v0 = 1; v0 < 16 && !chosen; ++v0)
    for (unsigned v1 = 1; v1 < 16 && !chosen; ++v1)
      for (unsigned v2 = 1; v2 < 16 && !chosen; ++v2)
        for (unsigned v3 = 1; v3 < 16 && !chosen; ++v3) {
          Mat4 p = 0;
          const unsigned cols[4] = {v0, v1, v2, v3};
          for (unsigned j = 0; j < 4; ++j)
            for (unsigned r = 0; r < 4; ++r)
              if ((cols[j] >> r) & 1) p |= static_cast<Mat4>(1u << (4 * r + j));
          auto pinv = mat4_inverse(p);
          if (!pinv) continue;
          bool tri = true;
          for (auto g : t.generator_indices())
            if (!is_unitriangular(mat4_mul(mat4_mul(*pinv, raw[g]), p))) tri = false;
          if (!tri) continue;
          if (!fallback) fallback = p;
          std::set<Mat4> images;
          for (auto c : outside) images.insert(mat4_mul(mat4_mul(*pinv, raw[c]), p));
          if (images == reference) chosen = p;
        }
  rep.check("sylow.u4_basis_fit", "S/M identified with U4 so that the central lifts map onto I+N1..I+N10",
            chosen.has_value(), "basis found", chosen ? "basis found" : "no basis");
  if (!chosen) chosen = fallback;
  if (!chosen) throw PermError("no flag basis of M makes S act unitriangularly");
  const Mat4 p = *chosen;
  const Mat4 pinv = *mat4_inverse(p);
  for (unsigned j = 0; j < 4; ++j) {
    unsigned col = 0;
    for (unsigned r = 0; r < 4; ++r) col |= static_cast<unsigned>(mat4_get(p, r, j)) << r;
    m.a[j] = elem_of[col];
  }
  m.u4.resize(t.size());
  for (std::uint32_t i = 0; i < t.size(); ++i) m.u4[i] = mat4_mul(mat4_mul(pinv, raw[i]), p);

  const auto refs = reference_nilpotents();
  for (std::size_t i = 0; i < 10; ++i) {
    const Mat4 target = mat4_from(BitMatrix::identity(4) + refs[i]);
    for (auto c : outside)
      if (m.u4[c] == target) m.lifts[i].push_back(c);
    m.zl[i] = m.lifts[i].empty() ? t.identity() : m.lifts[i][0];
  }
  // The listed planes depend on the representatives; pick lifts of
  // z1, z5, z7, z8, z9, z10 making all fifteen of them pure central.
  {
    const std::array<int, 6> free = {0, 4, 6, 7, 8, 9};
    std::size_t combos = 1;
    for (int i : free) combos *= std::max<std::size_t>(m.lifts[i].size(), 1);
    std::size_t found = 0;
    auto trial = m.zl;
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t c = code;
      for (int i : free) {
        const auto n = std::max<std::size_t>(m.lifts[i].size(), 1);
        if (!m.lifts[i].empty()) trial[i] = m.lifts[i][c % n];
        c /= n;
      }
      bool ok = true;
      for (const auto& g : listed_plane_generators(t, m.a, trial)) {
        auto h = t.closure(g);
        if (h.size() != 8) {
          ok = false;
          break;
        }
        for (auto x : h)
          if (x != t.identity() && !contains(m.centrals, x)) ok = false;
        if (!ok) break;
      }
      if (ok && found++ == 0) m.zl = trial;
    }
    rep.check("sylow.lift_choice", "representatives z_i exist making the listed planes pure central", found > 0,
              "at least one choice", std::to_string(found) + " of " + std::to_string(combos) + " choices");
  }
  rep.check("sylow.cone_point", "a1 is the central involution z and generates Z(S)",
            t.element(m.a1()) == ctx.z() && t.center(t.all()) == t.closure({m.a1()}), "a1 = z, Z(S) = <a1>",
            std::string(t.element(m.a1()) == ctx.z() ? "a1 = z" : "a1 != z") + ", |Z(S)| = " +
                std::to_string(t.center(t.all()).size()));

  const auto& a = m.a;
  const auto& z = m.zl;
  m.line = m.span({a[0], a[1]});
  m.m1 = m.m;
  m.m2 = m.span({a[0], a[1], z[0], z[1]});
  m.m3 = m.span({a[0], a[1], z[3], z[4]});
  ElemSet ls;
  for (const auto* h : {&m.m1, &m.m2, &m.m3}) {
    auto pts = m.points_of(*h);
    ls.insert(ls.end(), pts.begin(), pts.end());
  }
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  m.line_structure = ls;
  const auto rpb = m.span({a[0], a[1], a[2], z[0], z[4], z[6]});
  m.cone = m.points_of(rpb);
  for (const auto& h : m.pure_central) {
    if (!contains(h, m.a1()) || !is_subset(h, rpb)) continue;
    if (h.size() == 4) m.cone_lines.push_back(h);
    if (h.size() == 8) m.cone_planes.push_back(h);
  }
  for (const auto& g : listed_plane_generators(t, m.a, m.zl)) m.boxes.push_back(m.span(g));
  return m;
}

Report involution_classes(const Co3Context& ctx, const LocalSylowModel& model) {
  Report rep;
  Stopwatch sw;
  const auto& t = *model.table;
  std::size_t inv = 0, in_a = 0, in_b = 0, other = 0, unchecked_b = 0;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    const auto& x = t.element(i);
    if (!ctx.is_involution(x.data())) continue;
    ++inv;
    const auto f = x.fixed_points();
    if (f == ctx.fixed_2a() && ctx.class_2a().contains(x)) {
      ++in_a;
    } else if (f == ctx.fixed_2b()) {
      if (ctx.class_2b()) {
        if (ctx.class_2b()->contains(x))
          ++in_b;
        else
          ++other;
      } else {
        ++unchecked_b;
      }
    } else {
      ++other;
    }
  }
  // every involution is conjugate into S, so S sees every involution class
  const bool ok = other == 0 && unchecked_b == 0 && in_a > 0 && in_b > 0;
  auto& e = rep.check("classes.involutions", "exactly two classes of involutions, 2A and 2B", ok,
                      "every involution of S in 2A or 2B",
                      std::to_string(inv) + " involutions: " + std::to_string(in_a) + " in 2A, " +
                          std::to_string(in_b) + " in 2B, " + std::to_string(other) + " elsewhere",
                      sw.ms());
  if (unchecked_b > 0 && other == 0) {
    e.status = Status::Unverified;
    e.actual += ", " + std::to_string(unchecked_b) + " 2B-signature involutions not looked up (2B not enumerated)";
  }
  return rep;
}

Report prop43_structures(const LocalSylowModel& m) {
  Report rep;
  const auto& t = *m.table;

  // matrices
  auto enumerated = enumerate_rank2_squarezero();
  auto refs = reference_nilpotents();
  std::set<BitMatrix> se(enumerated.begin(), enumerated.end()), sr(refs.begin(), refs.end());
  rep.check("prop43.rank2_squarezero", "exactly ten rank-2 square-zero matrices, equal to N1..N10",
            enumerated.size() == 10 && se == sr, "10, equal to the reference set",
            std::to_string(enumerated.size()) + (se == sr ? ", equal" : ", differ"));
  for (const auto& rc : u4_relations_check())
    rep.check("prop43.relation." + rc.name, "relations among the zbar_i", rc.ok, "holds", rc.ok ? "holds" : rc.detail);

  // homomorphism onto U4 with kernel M
  bool hom = true;
  for (std::uint32_t x = 0; x < t.size(); ++x)
    for (auto g : t.generator_indices())
      if (m.u4[t.mul(x, g)] != mat4_mul(m.u4[x], m.u4[g])) hom = false;
  std::set<Mat4> image(m.u4.begin(), m.u4.end());
  ElemSet kernel;
  for (std::uint32_t x = 0; x < t.size(); ++x)
    if (m.u4[x] == mat4_identity()) kernel.push_back(x);
  rep.check("prop43.u4_map", "S/M is U4: homomorphism, image of order 64, kernel M",
            hom && image.size() == 64 && kernel == m.m, "hom, 64, kernel = M",
            std::string(hom ? "hom" : "not hom") + ", " + std::to_string(image.size()) + ", kernel " +
                (kernel == m.m ? "= M" : "!= M"));

  // central involutions outside M: 40, four per matrix, forming cosets of L
  std::map<Mat4, ElemSet> per;
  std::size_t outside = 0;
  for (auto c : m.centrals)
    if (!contains(m.m, c)) {
      ++outside;
      per[m.u4[c]].push_back(c);
    }
  // the lifts of zbar_i form the coset z_i (z_i^perp n M), a line fixed by zbar_i
  bool cosets = per.size() == 10;
  const std::array<std::uint32_t, 10> fixed_line_partner = {
      m.a[1], m.a[1], m.a[1], m.a[1], m.a[1], m.a[1], m.a[2], m.a[2], t.mul(m.a[1], m.a[2]), t.mul(m.a[1], m.a[2])};
  for (std::size_t i = 0; i < 10; ++i) {
    ElemSet perp;
    for (auto x : m.m)
      if (t.mul(x, m.zl[i]) == t.mul(m.zl[i], x)) perp.push_back(x);
    const auto expected_line = m.span({m.a1(), fixed_line_partner[i]});
    ElemSet coset;
    for (auto l : perp) coset.push_back(t.mul(m.zl[i], l));
    std::sort(coset.begin(), coset.end());
    auto it = per.find(m.u4[m.zl[i]]);
    if (perp != expected_line || it == per.end() || it->second != coset) cosets = false;
  }
  rep.expect("prop43.centrals_outside_M", "40 central involutions outside M", 40, outside);
  rep.check("prop43.lift_cosets", "the four lifts of zbar_i are z_i (z_i^perp n M), with the stated fixed lines",
            cosets, "10 cosets of size 4",
            std::to_string(per.size()) + " matrices" + (cosets ? ", cosets of the fixed lines" : ", mismatch"));

  // line structure and cone structure
  rep.expect("prop43.line_structure", "three M-spaces on a common line: 39 points", 39, m.line_structure.size());
  bool mspaces = true;
  for (const auto* h : {&m.m2, &m.m3})
    if (h->size() != 16 || std::find(m.pure_central.begin(), m.pure_central.end(), *h) == m.pure_central.end())
      mspaces = false;
  ElemSet common;
  std::set_intersection(m.m2.begin(), m.m2.end(), m.m3.begin(), m.m3.end(), std::back_inserter(common));
  ElemSet common3;
  std::set_intersection(common.begin(), common.end(), m.m1.begin(), m.m1.end(), std::back_inserter(common3));
  rep.check("prop43.three_mspaces", "M1, M2, M3 pure central 2^4 meeting in L", mspaces && common3 == m.line,
            "pure central, common line L", mspaces && common3 == m.line ? "pure central, common line L" : "mismatch");
  rep.expect("prop43.gq_points", "cone structure: 31 points", 31, m.cone.size());
  rep.expect("prop43.gq_lines", "15 lines on the cone point", 15, m.cone_lines.size());
  rep.expect("prop43.gq_planes", "15 planes on the cone point", 15, m.cone_planes.size());

  // GQ(2,2): cone lines are the points, planes are the lines
  std::vector<std::vector<int>> on(m.cone_lines.size());
  std::vector<std::vector<int>> lines_in(m.cone_planes.size());
  for (std::size_t i = 0; i < m.cone_lines.size(); ++i)
    for (std::size_t j = 0; j < m.cone_planes.size(); ++j)
      if (is_subset(m.cone_lines[i], m.cone_planes[j])) {
        on[i].push_back(static_cast<int>(j));
        lines_in[j].push_back(static_cast<int>(i));
      }
  bool gq = m.cone_lines.size() == 15 && m.cone_planes.size() == 15;
  for (const auto& v : on) gq &= v.size() == 3;
  for (const auto& v : lines_in) gq &= v.size() == 3;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < m.cone_lines.size(); ++i)
    for (std::size_t j = 0; j < m.cone_planes.size(); ++j) {
      if (std::find(on[i].begin(), on[i].end(), static_cast<int>(j)) != on[i].end()) continue;
      int meet = 0;
      for (int k : on[i]) {
        bool share = false;
        for (int l : lines_in[k])
          if (std::find(lines_in[j].begin(), lines_in[j].end(), l) != lines_in[j].end()) share = true;
        meet += share;
      }
      if (meet != 1) ++violations;
    }
  rep.check("prop43.gq_axioms", "15 lines and 15 planes form GQ(2,2)", gq && violations == 0,
            "3 planes per line, 3 lines per plane, unique meeting plane",
            std::string(gq ? "regular" : "irregular") + ", " + std::to_string(violations) + " violations");

  // the reference lists of lines and planes
  auto mul = [&](std::initializer_list<std::uint32_t> xs) {
    auto r = t.identity();
    for (auto x : xs) r = t.mul(r, x);
    return r;
  };
  const auto& a = m.a;
  const auto& z = m.zl;
  const std::vector<std::uint32_t> partners = {
      a[1], a[2], mul({a[1], a[2]}), z[0], mul({a[1], z[0]}), z[4], mul({a[1], z[4]}), z[6], mul({a[2], z[6]}),
      z[7], mul({a[2], z[7]}), z[8], mul({a[1], a[2], z[8]}), z[9], mul({a[1], a[2], z[9]})};
  std::set<ElemSet> listed_lines, found_lines(m.cone_lines.begin(), m.cone_lines.end());
  for (auto x : partners) listed_lines.insert(m.span({a[0], x}));
  rep.check("prop43.listed_lines", "the fifteen listed lines on a1", listed_lines == found_lines,
            "equal to the computed cone lines", listed_lines == found_lines ? "equal" : "differ");
  std::set<ElemSet> listed_planes(m.boxes.begin(), m.boxes.end()),
      found_planes(m.cone_planes.begin(), m.cone_planes.end());
  rep.check("prop43.listed_planes", "the fifteen listed planes on a1", listed_planes == found_planes,
            "equal to the computed cone planes", listed_planes == found_planes ? "equal" : "differ");

  // overlap
  ElemSet overlap;
  std::set_intersection(m.cone.begin(), m.cone.end(), m.line_structure.begin(), m.line_structure.end(),
                        std::back_inserter(overlap));
  rep.expect("prop43.overlap_points", "overlap of line and cone structures: 15 points", 15, overlap.size());
  std::vector<std::size_t> overlap_planes;
  for (std::size_t j = 0; j < m.boxes.size(); ++j)
    if (is_subset(m.points_of(m.boxes[j]), overlap)) overlap_planes.push_back(j + 1);
  rep.expect("prop43.overlap_planes", "the overlap is the planes 1, 2, 3", std::vector<std::size_t>{1, 2, 3},
             overlap_planes);
  std::size_t overlap_lines = 0;
  for (const auto& l : m.cone_lines)
    if (is_subset(m.points_of(l), overlap)) ++overlap_lines;
  rep.expect("prop43.overlap_cone_lines", "7 of the 15 cone lines lie in the overlap", 7, overlap_lines);

  // maximal pure central subgroups
  std::vector<ElemSet> maximal;
  for (const auto& h : m.pure_central) {
    bool is_max = true;
    for (const auto& k : m.pure_central)
      if (k.size() > h.size() && is_subset(h, k)) is_max = false;
    if (is_max) maximal.push_back(h);
  }
  std::size_t r4 = 0, r3 = 0, rother = 0, r5 = 0;
  for (const auto& h : maximal) (h.size() == 16 ? r4 : h.size() == 8 ? r3 : rother)++;
  for (const auto& h : m.pure_central) r5 += h.size() > 16;
  rep.expect("prop43.maximal_pure_central", "maximal pure central subgroups: 3 of rank 4, 12 of rank 3",
             "rank4=3 rank3=12 other=0",
             "rank4=" + std::to_string(r4) + " rank3=" + std::to_string(r3) + " other=" + std::to_string(rother));
  std::set<ElemSet> expected_max{m.m1, m.m2, m.m3};
  for (std::size_t j = 3; j < m.boxes.size(); ++j) expected_max.insert(m.boxes[j]);
  rep.check("prop43.maximal_identity", "they are M1, M2, M3 and planes 4..15",
            std::set<ElemSet>(maximal.begin(), maximal.end()) == expected_max, "equal",
            std::set<ElemSet>(maximal.begin(), maximal.end()) == expected_max ? "equal" : "differ");
  rep.expect("prop43.no_pure_central_2^5", "no pure central 2^5 in S", 0, r5);

  // coset invariance of the lift choice
  bool invariant = true;
  const auto rpb = m.span({a[0], a[1], a[2], z[0], z[4], z[6]});
  for (int which : {0, 4, 6})
    for (auto alt : m.lifts[which]) {
      std::vector<std::uint32_t> g = {a[0], a[1], a[2], z[0], z[4], z[6]};
      for (auto& x : g)
        if (x == z[which]) x = alt;
      if (m.span(g) != rpb) invariant = false;
    }
  for (auto alt : m.lifts[0])
    for (auto alt2 : m.lifts[1])
      if (m.span({a[0], a[1], alt, alt2}) != m.m2) invariant = false;
  for (auto alt : m.lifts[3])
    for (auto alt2 : m.lifts[4])
      if (m.span({a[0], a[1], alt, alt2}) != m.m3) invariant = false;
  rep.check("prop43.lift_invariance", "constructions do not depend on the coset representative z_i", invariant,
            "invariant", invariant ? "invariant" : "depends on lift");
  return rep;
}

}  // namespace radgeo
