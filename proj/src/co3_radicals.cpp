#include <algorithm>
#include <map>
#include <set>

#include "radgeo/co3.hpp"
#include "radgeo/stream.hpp"

namespace radgeo {

namespace {

struct Pattern {
  std::vector<std::pair<int, int>> free;  // 0-based upper entries allowed to be nonzero
  bool tie_01_23 = false;                 // entry (0,1) equals entry (2,3)
};

bool matches(Mat4 x, const Pattern& p) {
  for (int r = 0; r < 4; ++r)
    for (int c = r + 1; c < 4; ++c)
      if (mat4_get(x, r, c) &&
          std::find(p.free.begin(), p.free.end(), std::make_pair(r, c)) == p.free.end())
        return false;
  if (p.tie_01_23 && mat4_get(x, 0, 1) != mat4_get(x, 2, 3)) return false;
  return true;
}

ElemSet pullback(const LocalSylowModel& m, const Pattern& p) {
  ElemSet out;
  for (std::uint32_t i = 0; i < m.table->size(); ++i)
    if (matches(m.u4[i], p)) out.push_back(i);
  return out;
}

const Pattern kAll{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, false};

std::vector<Permutation> perms_of(const LocalSylowModel& m, const ElemSet& xs) {
  std::vector<Permutation> out;
  for (auto x : xs) out.push_back(m.perm(x));
  return out;
}

ElemSet minus(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet unite(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet meet(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string order_str(Order o) { return to_string(o); }

/// S-conjugates of h (as element sets), by orbit closure under the generators of S.
std::vector<ElemSet> s_conjugates(const FiniteGroup& t, const ElemSet& h) {
  std::set<ElemSet> seen{h};
  std::vector<ElemSet> todo{h};
  for (std::size_t k = 0; k < todo.size(); ++k)
    for (auto g : t.generator_indices()) {
      auto c = t.conjugate_set(todo[k], g);
      if (seen.insert(c).second) todo.push_back(std::move(c));
    }
  return todo;
}

/// Orbit lengths of a group (given by generators in G) acting by conjugation on
/// a family of subsets of S; the family must be invariant.
std::vector<std::size_t> orbit_lengths(const FiniteGroup& t, const std::vector<Permutation>& gens,
                                       const std::vector<ElemSet>& family, bool& invariant) {
  std::map<ElemSet, std::size_t> pos;
  for (std::size_t i = 0; i < family.size(); ++i) pos[family[i]] = i;
  std::vector<std::vector<std::size_t>> act(gens.size(), std::vector<std::size_t>(family.size()));
  invariant = true;
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < family.size(); ++i) {
      ElemSet img;
      for (auto x : family[i]) {
        try {
          img.push_back(t.index_of(conjugate(t.element(x), gens[g])));
        } catch (const PermError&) {
          invariant = false;  // left S
          return {};
        }
      }
      std::sort(img.begin(), img.end());
      auto it = pos.find(img);
      if (it == pos.end()) {
        invariant = false;
        return {};
      }
      act[g][i] = it->second;
    }
  std::vector<bool> done(family.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orb{i};
    done[i] = true;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (const auto& a : act)
        if (!done[a[orb[k]]]) {
          done[a[orb[k]]] = true;
          orb.push_back(a[orb[k]]);
        }
    out.push_back(orb.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

const StabilizerResult& normalizer_of(const Co3Context& ctx, const LocalSylowModel& m, const RadicalInstance& r) {
  return ctx.stabilizer_cached("N:" + r.tag, {m.handle(r.elements)}, perms_of(m, meet(r.center, m.centrals)));
}

}  // namespace

std::vector<RadicalInstance> instantiate_radicals(const LocalSylowModel& m) {
  const auto& t = *m.table;
  const auto& a = m.a;
  const auto& z = m.zl;
  struct Spec {
    std::string tag, structure;
    std::uint64_t order;
    std::size_t center_points;
    std::uint64_t normalizer;
  };
  const std::vector<Spec> specs = {{"p", "2", 2, 1, 2903040},
                                   {"M", "2^4", 16, 15, 322560},
                                   {"p[]", "2^{1+5}", 64, 1, 46080},
                                   {"pM", "2^{1+6}_+", 128, 1, 21504},
                                   {"M[]", "2^{3+4}", 128, 7, 21504},
                                   {"L", "2^{2+6}", 256, 3, 27648},
                                   {"pML", "2^4.2^{2+3}", 512, 1, 3072},
                                   {"ML[]", "2^4.2^{2+3}", 512, 1, 3072},
                                   {"pM[]", "2^4.2^{1+4}_+", 512, 1, 3072},
                                   {"pL[]", "[2^9]", 512, 1, 3072},
                                   {"pML[]", "[2^10]", 1024, 1, 1024}};
  const std::map<std::string, Pattern> patterns = {
      {"pM", {{{0, 1}, {0, 2}, {0, 3}}, false}},
      {"M[]", {{{0, 3}, {1, 3}, {2, 3}}, false}},
      {"L", {{{0, 2}, {0, 3}, {1, 2}, {1, 3}}, false}},
      {"pML", {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}, false}},
      {"ML[]", {{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, false}},
      {"pM[]", {{{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}, false}},
      {"pL[]", {kAll.free, true}},
      {"pML[]", kAll}};
  std::vector<RadicalInstance> out;
  for (const auto& s : specs) {
    RadicalInstance r;
    r.tag = s.tag;
    r.structure = s.structure;
    r.expected_order = s.order;
    r.expected_center_points = s.center_points;
    r.expected_normalizer = s.normalizer;
    if (s.tag == "p")
      r.elements = m.span({m.a1()});
    else if (s.tag == "M")
      r.elements = m.m;
    else if (s.tag == "p[]")
      r.elements = m.span({a[0], a[1], a[2], z[0], z[4], z[6]});
    else
      r.elements = pullback(m, patterns.at(s.tag));
    if (t.closure(t.generators_of(r.elements)) != r.elements)
      throw PermError("pullback for " + s.tag + " is not a subgroup; the U4 fit is wrong");
    r.points = m.points_of(r.elements);
    r.center = t.center(r.elements);
    out.push_back(std::move(r));
  }
  return out;
}

const RadicalInstance& find_instance(const std::vector<RadicalInstance>& v, const std::string& tag) {
  for (const auto& r : v)
    if (r.tag == tag) return r;
  throw std::out_of_range("no radical instance " + tag);
}

Report verify_table1(const Co3Context& ctx, const LocalSylowModel& m, const std::vector<RadicalInstance>& inst) {
  Report rep;
  const auto& t = *m.table;
  std::size_t centric = 0;
  for (const auto& r : inst) {
    const std::string id = "table1." + r.tag;
    rep.expect(id + ".order", "|R| for R_" + r.tag + " = " + r.structure, r.expected_order, r.elements.size());
    // Z(R) = A^k: k involutions of the center, all central
    std::size_t inv_a = 0, inv_b = 0;
    for (auto x : r.center) {
      if (t.order_of(x) != 2) continue;
      (contains(m.centrals, x) ? inv_a : inv_b)++;
    }
    rep.check(id + ".center", "Z(R_" + r.tag + ") = A^" + std::to_string(r.expected_center_points),
              inv_a == r.expected_center_points && inv_b == 0, "A^" + std::to_string(r.expected_center_points),
              "A^" + std::to_string(inv_a) + (inv_b ? " B^" + std::to_string(inv_b) : "") + " (|Z| = " +
                  std::to_string(r.center.size()) + ")");

    Stopwatch sw;
    const auto& st = normalizer_of(ctx, m, r);
    auto& e = rep.expect(id + ".normalizer", "|N_G(R_" + r.tag + ")|", std::to_string(r.expected_normalizer),
                         order_str(st.group.order()), sw.ms());
    if (!st.certified && e.status == Status::Pass) e.status = Status::Unverified;
    if (st.orbit > 1)
      e.actual += " (" + order_str(st.in_cz) + " inside C(z) x orbit " + std::to_string(st.orbit) + ")";

    // centric: Z(R) is a Sylow 2-subgroup of C_G(R); C_G(R) lies in C(z)
    sw.reset();
    auto c = centralizer_by_stream(ctx.cz(), perms_of(m, t.generators_of(r.elements)), kDefaultStreamCap,
                                   ctx.options().seed);
    const Order co = c.order();
    const bool is_centric = co % r.center.size() == 0 && (co / r.center.size()) % 2 == 1;
    const bool expect_centric = r.tag != "p";  // the classes of 2 and the pure 2B classes are not
    centric += is_centric;
    rep.check(id + ".centric", std::string("R_") + r.tag + (expect_centric ? " is" : " is not") + " 2-centric",
              is_centric == expect_centric, expect_centric ? "|C_G(R)|/|Z(R)| odd" : "|C_G(R)|/|Z(R)| even",
              "|C_G(R)| = " + order_str(co) + ", |Z(R)| = " + std::to_string(r.center.size()), sw.ms());

    // radical: O_2(N_G(R)) = R, when N is small enough to tabulate
    if (st.group.order() <= 50000) {
      sw.reset();
      FiniteGroup n(st.group);
      ElemSet rin;
      for (auto x : r.elements) rin.push_back(n.index_of(m.perm(x)));
      std::sort(rin.begin(), rin.end());
      const auto core = n.p_core(n.all(), 2);
      rep.check(id + ".radical", "R_" + r.tag + " = O_2(N_G(R))", core == rin, "equal",
                core == rin ? "equal" : "|O_2| = " + std::to_string(core.size()), sw.ms());
    }
  }
  rep.expect("table1.centric_count", "all classes but the first rows are 2-centric: 10 of these 11", 10, centric);

  // centers named in the text
  const auto& a = m.a;
  rep.check("table1.M[].center_is_plane", "Z(R_M[]) = <a1,a2,a3>",
            find_instance(inst, "M[]").center == m.span({a[0], a[1], a[2]}), "<a1,a2,a3>",
            find_instance(inst, "M[]").center == m.span({a[0], a[1], a[2]}) ? "<a1,a2,a3>" : "different");
  rep.check("table1.L.center_is_line", "Z(R_L) is the line L", find_instance(inst, "L").center == m.line, "L",
            find_instance(inst, "L").center == m.line ? "L" : "different");

  // structure of individual instances
  const auto& pb = find_instance(inst, "p[]");
  std::size_t lines_cone = 0, lines_all = 0, mspaces = 0;
  for (const auto& h : m.pure_central) {
    if (!is_subset(h, pb.elements)) continue;
    if (h.size() == 4) {
      ++lines_all;
      lines_cone += contains(h, m.a1());
    }
    mspaces += h.size() == 16;
  }
  rep.expect("instances.p[].points", "R_p[] contains 31 central involutions", 31, pb.points.size());
  rep.expect("instances.p[].lines", "15 lines on the cone point and 75 in all",
             "cone=15 total=75", "cone=" + std::to_string(lines_cone) + " total=" + std::to_string(lines_all));
  rep.expect("instances.p[].mspaces", "R_p[] contains no M-space", 0, mspaces);
  const auto& rl = find_instance(inst, "L");
  rep.expect("instances.L.points", "R_L contains precisely 39 central involutions", 39, rl.points.size());
  rep.check("instances.L.generated_by_points", "R_L is generated by its central involutions",
            t.closure(rl.points) == rl.elements, "equal", t.closure(rl.points) == rl.elements ? "equal" : "proper");
  {
    const auto listed = m.span({a[0], a[1], a[2], a[3], m.zl[0], m.zl[1], m.zl[3], m.zl[4]});
    rep.check("instances.L.listed_generators",
              "<a1..a4,z1,z2,z4,z5> generates R_L, not the line L (label flagged as a typo)",
              listed == rl.elements, "R_L", listed == rl.elements ? "R_L" : "order " + std::to_string(listed.size()));
  }
  const auto& pmb = find_instance(inst, "pM[]");
  const auto overlap = meet(pb.points, m.points_of(m.m));
  rep.check("instances.pM[].points", "R_pM[] has 39 points: 31 of R_p[] and 15 of M meeting in the plane",
            pmb.points.size() == 39 && unite(pb.points, m.points_of(m.m)) == pmb.points &&
                overlap == m.points_of(m.span({a[0], a[1], a[2]})),
            "39 = 31 + 15 - 7",
            std::to_string(pmb.points.size()) + " = 31 + 15 - " + std::to_string(overlap.size()));
  rep.expect("instances.pL[].points", "R_pL[] contains all 55 points", 55,
             find_instance(inst, "pL[]").points.size());
  rep.check("instances.contain", "R_p[] and R_L lie in R_pL[]",
            is_subset(pb.elements, find_instance(inst, "pL[]").elements) &&
                is_subset(rl.elements, find_instance(inst, "pL[]").elements),
            "true", "checked");
  return rep;
}

Report table2_orbits(const Co3Context& ctx, const LocalSylowModel& m, const std::vector<RadicalInstance>& inst) {
  Report rep;
  const auto& t = *m.table;
  struct Row {
    std::string sub, top;
    std::vector<std::size_t> expected;
  };
  const std::vector<Row> rows = {{"p", "p[]", {1, 30}},
                                 {"p", "pM[]", {1, 6, 8, 24}},
                                 {"p", "pL[]", {1, 2, 12, 16, 24}},
                                 {"p", "pML[]", {1, 2, 4, 8, 8, 16, 16}},
                                 {"M", "pM[]", {1}},
                                 {"M", "pL[]", {3}},
                                 {"M", "pML[]", {1, 2}},
                                 {"L", "pL[]", {1}},
                                 {"L", "pML[]", {1}},
                                 {"p[]", "pM[]", {1}},
                                 {"p[]", "pL[]", {1}},
                                 {"p[]", "pML[]", {1}},
                                 {"pM[]", "pML[]", {1}},
                                 {"pL[]", "pML[]", {1}}};
  const std::map<std::string, std::uint64_t> second = {
      {"p[]", 46080}, {"pM[]", 3072}, {"pL[]", 3072}, {"pML[]", 1024}};
  for (const auto& [tag, order] : second) {
    const auto& st = normalizer_of(ctx, m, find_instance(inst, tag));
    rep.expect("table2.stabilizer." + tag, "second column: |N_G(" + tag + ")|", std::to_string(order),
               order_str(st.group.order()));
  }
  for (const auto& row : rows) {
    Stopwatch sw;
    const auto& top = find_instance(inst, row.top);
    std::vector<ElemSet> family;
    std::string how;
    if (row.sub == "p") {
      for (auto x : top.points) family.push_back(m.span({x}));
    } else if (row.sub == "M") {
      for (const auto& h : m.pure_central)
        if (h.size() == 16 && is_subset(h, top.elements)) family.push_back(h);
    } else {
      // conjugates inside S of the instance; unique up to G by the text, checked here within S
      for (const auto& h : s_conjugates(t, find_instance(inst, row.sub).elements))
        if (is_subset(h, top.elements)) family.push_back(h);
      how = " (S-conjugates)";
    }
    const auto& st = normalizer_of(ctx, m, top);
    bool invariant = false;
    auto lens = orbit_lengths(t, st.group.generators(), family, invariant);
    auto& e = rep.expect("table2." + row.sub + "_in_" + row.top,
                         "orbits of N_G(" + row.top + ") on " + row.sub + "-objects inside it" + how, row.expected,
                         lens, sw.ms());
    if (!invariant) {
      e.status = Status::Fail;
      e.actual = "family not invariant";
    }
  }
  return rep;
}

Report cone_facts(const LocalSylowModel& m, const std::vector<RadicalInstance>& inst) {
  Report rep;
  const auto& t = *m.table;
  for (const char* tag : {"pM", "M[]"}) {
    const auto& r = find_instance(inst, tag);
    std::vector<ElemSet> ms;
    for (const auto& h : m.pure_central)
      if (h.size() == 16 && is_subset(h, r.elements)) ms.push_back(h);
    const bool ok = r.points.size() == 15 && ms.size() == 1 && m.points_of(ms[0]) == r.points;
    rep.check(std::string("cone.") + tag + ".unique_M",
              std::string("a unique R_M in R_") + tag + " holding all 15 central involutions", ok,
              "15 points, 1 pure central 2^4 holding them",
              std::to_string(r.points.size()) + " points, " + std::to_string(ms.size()) + " pure central 2^4");
  }
  // any conjugate of R_L in R holds 39 points and is generated by them, so it
  // equals <points of R> when R has exactly 39 points
  const auto& rl = find_instance(inst, "L");
  for (const char* tag : {"pML", "ML[]"}) {
    const auto& r = find_instance(inst, tag);
    const auto gen = t.closure(r.points);
    const bool is_rl_conj = gen.size() == rl.elements.size() && m.points_of(gen).size() == 39;
    std::size_t in_s = 0;
    for (const auto& h : s_conjugates(t, rl.elements)) in_s += is_subset(h, r.elements);
    const bool ok = r.points.size() == 39 && gen == rl.elements && is_rl_conj && in_s == 1;
    rep.check(std::string("cone.") + tag + ".unique_R_L",
              std::string("a unique conjugate of R_L in R_") + tag + " holding all 39 central involutions", ok,
              "39 points generating R_L; 1 conjugate",
              std::to_string(r.points.size()) + " points, <points> " + (gen == rl.elements ? "= R_L" : "!= R_L") +
                  ", " + std::to_string(in_s) + " S-conjugate(s)");
  }
  std::size_t m_in_pb = 0;
  for (const auto& h : m.pure_central)
    m_in_pb += h.size() == 16 && is_subset(h, find_instance(inst, "p[]").elements);
  rep.expect("cone.p[].no_M", "pure central 2^4 in R_p[]", 0, m_in_pb);
  return rep;
}

Report prop51_check(const Co3Context&, const LocalSylowModel& m, const std::vector<RadicalInstance>& inst) {
  Report rep;
  const auto& t = *m.table;
  const auto& rl = find_instance(inst, "L");
  std::size_t considered = 0, agree = 0, excluded = 0;
  for (auto p : m.centrals) {
    bool commutes = true;
    for (auto x : m.line)
      if (t.mul(x, p) != t.mul(p, x)) commutes = false;
    if (!commutes) {
      ++excluded;
      continue;
    }
    if (!contains(rl.elements, p)) continue;
    ++considered;
    const auto rp = m.span({p});
    bool normal = true;
    for (auto g : t.generators_of(rl.elements))
      if (t.conjugate_set(rp, g) != rp) normal = false;
    agree += normal == contains(rl.center, p);
  }
  rep.check("prop51.normal_iff_central", "R_p normal in R_L iff p in Z(R_L) = L", agree == considered,
            "all incidences agree",
            std::to_string(agree) + "/" + std::to_string(considered) + " points of R_L commuting with L (" +
                std::to_string(excluded) + " points of S not commuting with L excluded)");

  std::size_t planes = 0, unique = 0;
  for (auto p : m.centrals) {
    if (contains(m.line, p)) continue;
    bool commutes = true;
    for (auto x : m.line)
      if (t.mul(x, p) != t.mul(p, x)) commutes = false;
    if (!commutes) continue;
    auto h = m.span({m.a[0], m.a[1], p});
    if (h.size() != 8 || m.points_of(h).size() != 7) continue;
    ++planes;
    std::size_t over = 0;
    for (const auto& k : m.pure_central) over += k.size() == 16 && is_subset(h, k);
    unique += over == 1;
  }
  rep.check("prop51.plane_in_unique_M", "for p off L commuting with L, <p,L> is a plane in a unique M-space",
            planes > 0 && unique == planes, "every plane in exactly one M-space of S",
            std::to_string(unique) + "/" + std::to_string(planes) + " planes");
  return rep;
}

LocalFlagComplex local_flag_complex(const LocalSylowModel& m, const std::vector<RadicalInstance>& inst) {
  LocalFlagComplex out;
  Poset poset;
  std::vector<ElemSet> sets;
  std::vector<std::string> names;
  poset.tag_names = {"p", "M", "L", "p[]", "pM[]", "pL[]", "pML[]"};
  auto add = [&](int tag, ElemSet s, std::string name) {
    poset.add_element(tag);
    sets.push_back(std::move(s));
    names.push_back(std::move(name));
  };
  for (auto c : m.centrals) add(0, m.span({c}), "");
  add(1, m.m1, "M1");
  add(1, m.m2, "M2");
  add(1, m.m3, "M3");
  add(2, find_instance(inst, "L").elements, "L");
  add(3, find_instance(inst, "p[]").elements, "p[]");
  add(4, find_instance(inst, "pM[]").elements, "pM[]");
  add(5, find_instance(inst, "pL[]").elements, "pL[]");
  add(6, find_instance(inst, "pML[]").elements, "pML[]");
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[i].size() < sets[j].size() && is_subset(sets[i], sets[j])) poset.set_less(i, j);
  poset.close();
  out.complex = order_complex(poset);
  for (std::size_t i = 0; i < m.centrals.size(); ++i) out.point_vertex.push_back(static_cast<VertexId>(i));
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!names[i].empty()) out.named[names[i]] = static_cast<VertexId>(i);
  out.mspace_vertex = {out.named["M1"], out.named["M2"], out.named["M3"]};
  return out;
}

Report step_justifications(const LocalSylowModel& m, const std::vector<RadicalInstance>& inst) {
  Report rep;
  const auto& a = m.a;
  const auto pts = [&](const ElemSet& h) { return m.points_of(h); };
  const auto pb = pts(find_instance(inst, "p[]").elements);
  const auto pl = pts(find_instance(inst, "pL[]").elements);
  const auto ll = m.line_structure;
  const auto line = pts(m.line);
  const auto p1 = pts(m.span({a[0]}));
  const auto m1 = pts(m.m1);
  const auto b1 = pts(m.boxes[0]), b2 = pts(m.boxes[1]), b3 = pts(m.boxes[2]);
  const std::map<std::string, ElemSet> sets = {
      {"", {}},
      {"pL[]\\p[]", minus(pl, pb)},
      {"p[]\\LL", minus(pb, ll)},
      {"p[]\\M1", minus(pb, m1)},
      {"M1\\p[]", minus(m1, pb)},
      {"LL\\L", minus(ll, line)},
      {"LL\\p[]", minus(ll, pb)},
      {"(b2+b3)\\L", minus(unite(b2, b3), line)},
      {"(b1+b2+b3)\\L", minus(unite(unite(b1, b2), b3), line)},
      {"b1\\L", minus(b1, line)},
      {"b1\\p1", minus(b1, p1)},
      {"L\\p1", minus(line, p1)},
      {"p[]\\p1", minus(pb, p1)},
      {"L", line}};

  struct StepSpec {
    int step;
    std::vector<std::string> sigma;  // types of sigma
    std::string added;               // type inserted to get Sigma
    std::string pset;
    std::size_t expected_points;     // size of the point set (0: none)
    std::vector<std::string> ms;     // allowed M-spaces when an M occurs
    std::size_t expected_pairs;      // pairs with the fixed Sylow S
    bool restricted;                 // sigma not topped by S
  };
  const std::vector<StepSpec> steps = {
      {1, {"p", "M", "L", "pML[]"}, "pL[]", "", 0, {}, 45, false},
      {2, {"M", "L", "pML[]"}, "pL[]", "", 0, {}, 3, false},
      {3, {"p", "L", "pML[]"}, "pL[]", "", 0, {}, 39, false},
      {4, {"L", "pML[]"}, "pL[]", "", 0, {}, 1, false},
      {5, {"p", "pL[]", "pML[]"}, "M", "pL[]\\p[]", 24, {}, 24, false},
      {6, {"p", "pL[]", "pML[]"}, "p[]", "p[]\\LL", 16, {}, 16, false},
      {7, {"p", "pM[]", "pML[]"}, "p[]", "p[]\\M1", 24, {}, 24, false},
      {8, {"p", "pM[]", "pML[]"}, "M", "M1\\p[]", 8, {}, 8, false},
      {9, {"p", "L", "pL[]"}, "M", "LL\\L", 36, {}, 36, true},
      {10, {"p", "pL[]"}, "M", "pL[]\\p[]", 24, {}, 24, true},
      {11, {"p", "pL[]"}, "p[]", "p[]\\LL", 16, {}, 16, true},
      {12, {"p", "pM[]"}, "p[]", "p[]\\M1", 24, {}, 24, true},
      {13, {"p", "pM[]"}, "M", "M1\\p[]", 8, {}, 8, true},
      {14, {"p", "p[]", "pML[]"}, "pL[]", "(b2+b3)\\L", 8, {}, 8, false},
      {15, {"p", "pL[]", "pML[]"}, "M", "(b2+b3)\\L", 8, {}, 8, false},
      {16, {"p", "pML[]"}, "p[]", "p[]\\LL", 16, {}, 16, false},
      {17, {"p", "pML[]"}, "M", "LL\\p[]", 24, {}, 24, false},
      {18, {"p", "pML[]"}, "M", "(b2+b3)\\L", 8, {}, 8, false},
      {19, {"p", "M", "pML[]"}, "pL[]", "L", 3, {"M2", "M3"}, 6, false},
      {20, {"p", "p[]", "pL[]"}, "pML[]", "(b1+b2+b3)\\L", 12, {}, 4, true},
      {21, {"p", "pL[]", "pML[]"}, "M", "b1\\L", 4, {}, 4, false},
      {22, {"p", "p[]", "pML[]"}, "pM[]", "b1\\L", 4, {}, 4, false},
      {23, {"p", "pM[]", "pML[]"}, "M", "b1\\L", 4, {}, 4, false},
      {24, {"p", "M", "pM[]"}, "pML[]", "b1\\p1", 6, {}, 2, true},
      {25, {"p", "p[]", "pM[]"}, "pML[]", "b1\\p1", 6, {}, 2, true},
      {26, {"p", "M", "pML[]"}, "pL[]", "L\\p1", 2, {"M1"}, 2, false},
      {27, {"p", "p[]", "pML[]"}, "pL[]", "L\\p1", 2, {}, 2, false},
      {28, {"p", "M", "pL[]"}, "L", "L\\p1", 2, {}, 6, true},
      {29, {"p", "pL[]"}, "M", "(b1+b2+b3)\\L", 12, {}, 12, true},
      {30, {"p", "pM[]"}, "pML[]", "b1\\p1", 6, {}, 2, true},
      {31, {"p", "pML[]"}, "M", "b1\\L", 4, {}, 4, false},
      {32, {"p", "pML[]"}, "pL[]", "L\\p1", 2, {}, 2, false},
      {33, {"M", "pML[]"}, "pL[]", "", 0, {"M2", "M3"}, 2, false},
      {34, {"p", "p[]"}, "pL[]", "p[]\\p1", 30, {}, 2, true},
      {35, {"p", "pL[]"}, "L", "L\\p1", 2, {}, 2, true}};

  // per-M splits quoted in the text
  auto per_m = [&](const ElemSet& s) {
    std::vector<std::size_t> out;
    for (const auto* h : {&m.m1, &m.m2, &m.m3}) out.push_back(meet(s, pts(*h)).size());
    return out;
  };
  rep.expect("steps.5.per_M", "8 points in each of the three M-spaces", std::vector<std::size_t>{8, 8, 8},
             per_m(sets.at("pL[]\\p[]")));
  rep.expect("steps.9.per_M", "12 points per M-space", std::vector<std::size_t>{12, 12, 12},
             per_m(sets.at("LL\\L")));
  rep.expect("steps.15.per_M", "4 points in each of M2, M3", std::vector<std::size_t>{0, 4, 4},
             per_m(sets.at("(b2+b3)\\L")));
  rep.expect("steps.29.per_M", "4 points per M-space", std::vector<std::size_t>{4, 4, 4},
             per_m(sets.at("(b1+b2+b3)\\L")));

  auto lfc = local_flag_complex(m, inst);
  auto& c = lfc.complex;
  const auto& tn = c.type_names();
  auto type_of = [&](VertexId v) { return tn[c.vertex_type(v)]; };
  std::map<VertexId, std::string> mname;
  for (const auto& [n, v] : lfc.named) mname[v] = n;
  std::map<VertexId, std::uint32_t> point_elem;
  for (std::size_t i = 0; i < m.centrals.size(); ++i) point_elem[lfc.point_vertex[i]] = m.centrals[i];

  rep.expect("steps.local.vertices", "vertices of the local flag complex: 55 points, 3 M, 1 each of the rest",
             55 + 3 + 5, c.vertex_count());
  struct Chunk {
    std::vector<CollapseStep> pairs;
    std::vector<Simplex> orphans;
  };
  std::vector<Chunk> chunks;
  const auto initial = c;
  for (const auto& st : steps) {
    const std::string id = "steps." + std::to_string(st.step);
    const auto& pset = sets.at(st.pset);
    if (st.expected_points) rep.expect(id + ".points", "points in sigma: " + st.pset, st.expected_points, pset.size());
    std::set<std::string> want(st.sigma.begin(), st.sigma.end());
    std::size_t pairs = 0, orphan = 0, bad = 0;
    auto& chunk = chunks.emplace_back();
    for (auto sid : c.alive_ids()) {
      const auto& s = c.simplex(sid);
      if (s.size() != st.sigma.size()) continue;
      std::set<std::string> have;
      bool ok = true;
      for (auto v : s) {
        have.insert(type_of(v));
        if (type_of(v) == "p" && !st.pset.empty() && !contains(pset, point_elem[v])) ok = false;
        if (type_of(v) == "M" && !st.ms.empty() &&
            std::find(st.ms.begin(), st.ms.end(), mname[v]) == st.ms.end())
          ok = false;
      }
      if (!ok || have != want) continue;
      auto cof = c.all_cofaces(sid);
      if (cof.empty()) {
        // partner lies in another Sylow: globally the pair goes, locally only sigma
        ++orphan;
        if (st.restricted) {
          chunk.orphans.push_back(s);
          c.remove(sid);
        }
        continue;
      }
      const auto& big = c.simplex(cof[0]);
      VertexId extra = 0;
      for (auto v : big)
        if (!std::binary_search(s.begin(), s.end(), v)) extra = v;
      if (cof.size() != 1 || type_of(extra) != st.added ||
          (st.added == "M" && !st.ms.empty() &&
           std::find(st.ms.begin(), st.ms.end(), mname[extra]) == st.ms.end()) ||
          !is_free_pair(c, big, s)) {
        ++bad;
        continue;
      }
      CollapseStep cs;
      cs.big = big;
      cs.small = s;
      cs.label = "step " + std::to_string(st.step);
      chunk.pairs.push_back(cs);
      apply_collapse(c, cs.big, cs.small);
      ++pairs;
    }
    auto& e = rep.check(id + ".free_pairs", "retraction step " + std::to_string(st.step) + ": Sigma free over sigma",
                        bad == 0 && pairs == st.expected_pairs,
                        std::to_string(st.expected_pairs) + " free pairs",
                        std::to_string(pairs) + " free pairs, " + std::to_string(bad) + " not free" +
                            (orphan ? ", " + std::to_string(orphan) + " paired through another Sylow" : ""));
    if (st.restricted && e.status == Status::Pass) {
      e.status = Status::Unverified;
      e.actual += " (freeness restricted to chains inside S)";
    }
  }
  // replay from scratch: each step's pairs through the engine, then the
  // sigmas whose partner lies outside S
  auto copy = initial;
  std::size_t collapses = 0;
  try {
    for (std::size_t k = 0; k < chunks.size(); ++k) {
      try {
        replay_schedule(copy, chunks[k].pairs);
      } catch (const CollapseError& err) {
        throw ComplexError("table step " + std::to_string(steps[k].step) + ", " + err.what());
      }
      collapses += chunks[k].pairs.size();
      for (const auto& o : chunks[k].orphans) copy.remove(*copy.find(o));
    }
    rep.check("steps.replay", "the local schedule replays in the stated order with full freeness checks",
              copy.content_hash() == c.content_hash(), "identical terminal hash",
              std::to_string(collapses) + " elementary collapses, terminal size " + std::to_string(copy.size()));
  } catch (const ComplexError& err) {
    rep.check("steps.replay", "the local schedule replays in the stated order with full freeness checks", false,
              "replays", err.what());
  }
  return rep;
}

}  // namespace radgeo
