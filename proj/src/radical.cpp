#include "radgeo/radical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "radgeo/stream.hpp"

namespace radgeo {

bool contains(const ElemSet& h, std::uint32_t x) { return std::binary_search(h.begin(), h.end(), x); }

bool is_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::uint64_t p_part(std::uint64_t n, unsigned p) {
  std::uint64_t r = 1;
  while (n > 0 && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

FiniteGroup::FiniteGroup(const GroupHandle& g, std::uint64_t cap) : handle_(g), degree_(g.degree()) {
  if (g.order() > cap)
    throw CapExceeded("group order " + to_string(g.order()) + " exceeds brute-force cap " +
                      std::to_string(cap));
  elems_.push_back(Permutation(degree_));
  for_each_element(
      g,
      [&](const Point* p) {
        Permutation x(degree_);
        std::copy(p, p + degree_, x.mutable_data());
        if (!x.is_identity()) elems_.push_back(std::move(x));
        return true;
      },
      cap);
  lookup_.reserve(elems_.size() * 2);
  for (std::uint32_t i = 0; i < elems_.size(); ++i) lookup_.emplace(elems_[i].hash(), i);
  inv_.resize(size());
  order_.resize(size());
  for (std::uint32_t i = 0; i < size(); ++i) {
    inv_[i] = index_of(elems_[i].inverse());
    order_[i] = static_cast<std::uint32_t>(elems_[i].order());
  }
  for (const auto& s : g.generators()) gen_idx_.push_back(index_of(s));
  act_.assign(gen_idx_.size(), std::vector<std::uint32_t>(size()));
  for (std::size_t s = 0; s < gen_idx_.size(); ++s)
    for (std::uint32_t i = 0; i < size(); ++i) act_[s][i] = conj(i, gen_idx_[s]);
}

std::uint32_t FiniteGroup::index_of(const Permutation& p) const {
  auto [lo, hi] = lookup_.equal_range(p.hash());
  for (auto it = lo; it != hi; ++it)
    if (elems_[it->second] == p) return it->second;
  throw PermError("element not in group table");
}

std::uint32_t FiniteGroup::mul(std::uint32_t a, std::uint32_t b) const {
  return index_of(elems_[a] * elems_[b]);
}

std::uint32_t FiniteGroup::conj(std::uint32_t a, std::uint32_t g) const {
  return index_of(conjugate(elems_[a], elems_[g]));
}

ElemSet FiniteGroup::all() const {
  ElemSet s(size());
  for (std::uint32_t i = 0; i < size(); ++i) s[i] = i;
  return s;
}

ElemSet FiniteGroup::closure(const std::vector<std::uint32_t>& gens) const {
  std::vector<char> seen(size(), 0);
  std::vector<std::uint32_t> out{identity()};
  seen[identity()] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto s : gens) {
      auto y = mul(out[k], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> FiniteGroup::generators_of(const ElemSet& h) const {
  std::vector<std::uint32_t> gens;
  ElemSet span{identity()};
  for (auto x : h) {
    if (contains(span, x)) continue;
    gens.push_back(x);
    span = closure(gens);
    if (span.size() == h.size()) break;
  }
  return gens;
}

ElemSet FiniteGroup::conjugate_set(const ElemSet& h, std::uint32_t g) const {
  ElemSet out;
  out.reserve(h.size());
  for (auto x : h) out.push_back(conj(x, g));
  std::sort(out.begin(), out.end());
  return out;
}

ElemSet FiniteGroup::normalizer(const ElemSet& within, const ElemSet& r) const {
  const auto gens = generators_of(r);
  ElemSet out;
  for (auto g : within) {
    bool ok = true;
    for (auto x : gens)
      if (!contains(r, conj(x, g))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

ElemSet FiniteGroup::centralizer(const ElemSet& within, const ElemSet& r) const {
  const auto gens = generators_of(r);
  ElemSet out;
  for (auto g : within) {
    bool ok = true;
    for (auto x : gens)
      if (!commute(elems_[x], elems_[g])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return out;
}

ElemSet FiniteGroup::center(const ElemSet& r) const { return centralizer(r, r); }

ElemSet FiniteGroup::sylow(const ElemSet& within, unsigned p) const {
  ElemSet P{identity()};
  const auto target = p_part(within.size(), p);
  while (P.size() < target) {
    const auto n = normalizer(within, P);
    std::optional<std::uint32_t> lift;
    for (auto x : n) {
      if (contains(P, x)) continue;
      // x^p in P
      auto y = identity();
      for (unsigned k = 0; k < p; ++k) y = mul(y, x);
      if (contains(P, y)) {
        lift = x;
        break;
      }
    }
    if (!lift) throw PermError("sylow: no p-element in N(P)/P although P is not Sylow");
    auto gens = generators_of(P);
    gens.push_back(*lift);
    P = closure(gens);
  }
  return P;
}

ElemSet FiniteGroup::p_core(const ElemSet& within, unsigned p) const {
  ElemSet core = sylow(within, p);
  const auto wgens = generators_of(within);
  // conjugates of one Sylow under `within`, via its generators
  std::set<ElemSet> seen{core};
  std::deque<ElemSet> queue{core};
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    ElemSet next;
    std::set_intersection(core.begin(), core.end(), cur.begin(), cur.end(), std::back_inserter(next));
    core = std::move(next);
    for (auto g : wgens) {
      auto c = conjugate_set(cur, g);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  return core;
}

bool FiniteGroup::is_elementary_abelian(const ElemSet& h, unsigned p) const {
  for (auto x : h)
    if (x != identity() && order_[x] != p) return false;
  const auto gens = generators_of(h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commute(elems_[gens[i]], elems_[gens[j]])) return false;
  return true;
}

namespace {

ElemSet element_class(const FiniteGroup& g, std::uint32_t x) {
  std::vector<char> seen(g.size(), 0);
  ElemSet out{x};
  seen[x] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t s = 0; s < g.generator_indices().size(); ++s) {
      auto y = g.gen_action(s)[out[k]];
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemSet> subgroup_orbit(const FiniteGroup& g, const ElemSet& h) {
  std::set<ElemSet> seen{h};
  std::vector<ElemSet> out{h};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t s = 0; s < g.generator_indices().size(); ++s) {
      ElemSet c;
      c.reserve(out[k].size());
      for (auto x : out[k]) c.push_back(g.gen_action(s)[x]);
      std::sort(c.begin(), c.end());
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  return out;
}

}  // namespace

PSubgroupLattice p_subgroups(const FiniteGroup& g, unsigned p) {
  PSubgroupLattice lat;
  lat.p = p;
  const ElemSet whole = g.all();
  lat.sylow = g.sylow(whole, p);

  // subgroups of S by single-element extension
  std::set<ElemSet> sub_s{ElemSet{g.identity()}};
  std::vector<ElemSet> order_s{ElemSet{g.identity()}};
  for (std::size_t k = 0; k < order_s.size(); ++k) {
    const auto gens = g.generators_of(order_s[k]);
    for (auto x : lat.sylow) {
      if (contains(order_s[k], x)) continue;
      auto ext = gens;
      ext.push_back(x);
      auto h = g.closure(ext);
      if (sub_s.insert(h).second) order_s.push_back(std::move(h));
    }
  }
  std::sort(order_s.begin(), order_s.end(), [](const ElemSet& a, const ElemSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::map<ElemSet, int> index;
  const auto zs = g.center(lat.sylow);
  ElemSet central_conj;
  for (auto z : zs)
    if (z != g.identity() && g.order_of(z) == p) {
      auto cls = element_class(g, z);
      central_conj.insert(central_conj.end(), cls.begin(), cls.end());
    }
  std::sort(central_conj.begin(), central_conj.end());
  central_conj.erase(std::unique(central_conj.begin(), central_conj.end()), central_conj.end());

  for (const auto& h : order_s) {
    if (index.count(h)) continue;
    const int cid = static_cast<int>(lat.classes.size());
    const auto orbit = subgroup_orbit(g, h);
    for (const auto& c : orbit) {
      index.emplace(c, static_cast<int>(lat.all.size()));
      lat.all.push_back(c);
      lat.class_of.push_back(cid);
    }
    SubgroupRecord rec;
    rec.elements = h;
    rec.order = h.size();
    rec.class_id = cid;
    rec.class_size = orbit.size();
    for (auto x : g.generators_of(h)) rec.generators.push_back(g.element(x));
    const auto z = g.center(h);
    rec.center_order = z.size();
    const auto n = g.normalizer(whole, h);
    rec.normalizer_order = n.size();
    rec.centralizer_order = g.centralizer(whole, h).size();
    rec.is_radical = g.p_core(n, p) == h;
    rec.is_centric = p_part(rec.centralizer_order, p) == rec.center_order;
    rec.is_distinguished = std::any_of(z.begin(), z.end(), [&](std::uint32_t x) {
      return x != g.identity() && contains(central_conj, x);
    });
    rec.is_elementary_abelian = g.is_elementary_abelian(h, p);
    lat.classes.push_back(std::move(rec));

    auto gens = lat.classes.back().generators;
    if (gens.empty()) gens.push_back(Permutation(g.degree()));
    const auto r = group_with_order(gens, h.size());
    lat.normalizer_check.push_back(
        static_cast<std::uint64_t>(normalizer_by_stream(g.handle(), r).order()));
  }
  return lat;
}

std::string collection_name(CollectionKind k) {
  switch (k) {
    case CollectionKind::Quillen: return "A_p";
    case CollectionKind::Bouc: return "B_p";
    case CollectionKind::DistinguishedBouc: return "B^_p";
    case CollectionKind::Benson: return "E_p";
  }
  return "?";
}

namespace {

template <class Pred>
CollectionPoset make_collection(const FiniteGroup& g, const PSubgroupLattice& lat, CollectionKind kind,
                                Pred keep) {
  (void)g;
  CollectionPoset c{kind, {}, {}, Poset{}};
  std::map<int, int> tag_of;
  for (std::size_t i = 0; i < lat.all.size(); ++i) {
    const auto& rec = lat.classes[lat.class_of[i]];
    if (rec.order == 1 || !keep(rec, lat.all[i])) continue;
    c.members.push_back(lat.all[i]);
    c.class_of.push_back(rec.class_id);
    auto [it, fresh] = tag_of.emplace(rec.class_id, static_cast<int>(tag_of.size()));
    if (fresh) c.poset.tag_names.push_back("class" + std::to_string(rec.class_id));
    c.poset.add_element(it->second);
  }
  for (std::size_t i = 0; i < c.members.size(); ++i)
    for (std::size_t j = 0; j < c.members.size(); ++j)
      if (c.members[i].size() < c.members[j].size() && is_subset(c.members[i], c.members[j]))
        c.poset.set_less(i, j);
  c.poset.close();
  return c;
}

}  // namespace

CollectionPoset quillen_poset(const FiniteGroup& g, const PSubgroupLattice& lat) {
  return make_collection(g, lat, CollectionKind::Quillen,
                         [](const SubgroupRecord& r, const ElemSet&) { return r.is_elementary_abelian; });
}

CollectionPoset bouc_poset(const FiniteGroup& g, const PSubgroupLattice& lat) {
  return make_collection(g, lat, CollectionKind::Bouc,
                         [](const SubgroupRecord& r, const ElemSet&) { return r.is_radical; });
}

CollectionPoset distinguished_poset(const FiniteGroup& g, const PSubgroupLattice& lat) {
  return make_collection(g, lat, CollectionKind::DistinguishedBouc, [](const SubgroupRecord& r, const ElemSet&) {
    return r.is_radical && r.is_distinguished;
  });
}

ElemSet benson_elements(const FiniteGroup& g, const PSubgroupLattice& lat) {
  std::vector<char> in(g.size(), 0);
  std::vector<std::uint32_t> list;
  auto add = [&](std::uint32_t x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  };
  for (auto z : g.center(lat.sylow))
    if (z != g.identity() && g.order_of(z) == lat.p) add(z);
  bool grew = true;
  while (grew) {
    const auto before = list.size();
    for (std::size_t k = 0; k < list.size(); ++k)
      for (std::size_t s = 0; s < g.generator_indices().size(); ++s) add(g.gen_action(s)[list[k]]);
    const auto n = list.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!commute(g.element(list[a]), g.element(list[b]))) continue;
        auto y = g.mul(list[a], list[b]);
        if (y != g.identity() && g.order_of(y) == lat.p) add(y);
      }
    grew = list.size() != before;
  }
  std::sort(list.begin(), list.end());
  return list;
}

CollectionPoset benson_closure(const FiniteGroup& g, const PSubgroupLattice& lat) {
  const auto e = benson_elements(g, lat);
  return make_collection(g, lat, CollectionKind::Benson, [&](const SubgroupRecord& r, const ElemSet& h) {
    if (!r.is_elementary_abelian) return false;
    for (auto x : h)
      if (x != g.identity() && !contains(e, x)) return false;
    return true;
  });
}

HomotopyReport homotopy_compare(const CollectionPoset& a, const CollectionPoset& b) {
  HomotopyReport r;
  const auto ca = order_complex(a.poset), cb = order_complex(b.poset);
  r.betti_a = ca.betti().reduced;
  r.betti_b = cb.betti().reduced;
  r.chi_a = ca.euler_reduced();
  r.chi_b = cb.euler_reduced();
  auto trim = [](std::vector<long long> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  r.equal = trim(r.betti_a) == trim(r.betti_b) && r.chi_a == r.chi_b;
  return r;
}

namespace {

Permutation perm_of(std::vector<Point> images) { return Permutation(std::move(images)); }

// GL(3,2) acting on the nonzero vectors 1..7 of F_2^3, point = vector - 1
Permutation gl_matrix(const int m[3][3]) {
  std::vector<Point> img(7);
  for (int v = 1; v < 8; ++v) {
    int w = 0;
    for (int r = 0; r < 3; ++r) {
      int bit = 0;
      for (int c = 0; c < 3; ++c) bit ^= m[r][c] & ((v >> c) & 1);
      w |= bit << r;
    }
    img[v - 1] = static_cast<Point>(w - 1);
  }
  return Permutation(std::move(img));
}

}  // namespace

std::vector<std::string> small_group_names() { return {"C2", "C2xC2", "S4", "S5", "GL32"}; }

GroupHandle small_group(const std::string& name) {
  std::vector<Permutation> gens;
  if (name == "C2") {
    gens = {perm_of({1, 0})};
  } else if (name == "C2xC2") {
    gens = {perm_of({1, 0, 2, 3}), perm_of({0, 1, 3, 2})};
  } else if (name == "S4") {
    gens = {perm_of({1, 2, 3, 0}), perm_of({1, 0, 2, 3})};
  } else if (name == "S5") {
    gens = {perm_of({1, 2, 3, 4, 0}), perm_of({1, 0, 2, 3, 4})};
  } else if (name == "GL32") {
    const int t[3][3] = {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    const int c[3][3] = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    gens = {gl_matrix(t), gl_matrix(c)};
  } else {
    throw PermError("unknown small group '" + name + "'");
  }
  return GroupHandle::from_generators(std::move(gens));
}

nlohmann::json class_table_json(const std::string& name, const PSubgroupLattice& lat) {
  std::vector<const SubgroupRecord*> rows;
  for (const auto& r : lat.classes) rows.push_back(&r);
  auto key = [](const SubgroupRecord* r) {
    return std::make_tuple(r->order, r->center_order, r->normalizer_order, r->centralizer_order,
                           r->class_size, r->is_radical, r->is_centric, r->is_distinguished,
                           r->is_elementary_abelian);
  };
  std::sort(rows.begin(), rows.end(), [&](auto* a, auto* b) { return key(a) < key(b); });
  nlohmann::json classes = nlohmann::json::array();
  for (const auto* r : rows) {
    classes.push_back({{"order", r->order},
                       {"center_order", r->center_order},
                       {"normalizer_order", r->normalizer_order},
                       {"centralizer_order", r->centralizer_order},
                       {"class_size", r->class_size},
                       {"radical", r->is_radical},
                       {"centric", r->is_centric},
                       {"distinguished", r->is_distinguished},
                       {"elementary_abelian", r->is_elementary_abelian}});
  }
  return {{"group", name}, {"p", lat.p}, {"sylow_order", lat.sylow.size()}, {"classes", classes}};
}

}  // namespace radgeo
