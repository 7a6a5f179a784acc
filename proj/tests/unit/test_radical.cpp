#include <doctest.h>

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "radgeo/morse.hpp"
#include "radgeo/radical.hpp"
#include "radgeo/rng.hpp"

using namespace radgeo;

namespace {

std::vector<std::uint64_t> class_orders(const PSubgroupLattice& lat) {
  std::vector<std::uint64_t> v;
  for (const auto& r : lat.classes) v.push_back(r.order);
  return v;
}

}  // namespace

TEST_CASE("small group orders") {
  CHECK(small_group("C2").order() == 2);
  CHECK(small_group("C2xC2").order() == 4);
  CHECK(small_group("S4").order() == 24);
  CHECK(small_group("S5").order() == 120);
  CHECK(small_group("GL32").order() == 168);
  CHECK_THROWS(small_group("M24"));
  CHECK_THROWS_AS(FiniteGroup(small_group("S5"), 100), CapExceeded);
}

TEST_CASE("2-subgroups of S4") {
  FiniteGroup g(small_group("S4"));
  auto lat = p_subgroups(g, 2);
  CHECK(lat.sylow.size() == 8);
  CHECK(class_orders(lat) == std::vector<std::uint64_t>{1, 2, 2, 4, 4, 4, 8});
  CHECK(lat.all.size() == 1 + 6 + 3 + 3 + 1 + 3 + 3);
  int radical = 0;
  for (const auto& r : lat.classes) {
    if (r.is_radical) ++radical;
    if (r.order == 8) CHECK((r.is_radical && r.is_distinguished && r.is_centric));
    if (r.order == 1) CHECK_FALSE(r.is_radical);
  }
  CHECK(radical == 2);
  auto b = bouc_poset(g, lat);
  CHECK(b.members.size() == 4);
  auto oc = order_complex(b.poset);
  CHECK(oc.f_vector() == std::vector<std::size_t>{4, 3});
  auto collapsed = greedy_collapse(oc);
  CHECK(collapsed.reached_point);
}

TEST_CASE("trivial collections") {
  FiniteGroup c2(small_group("C2"));
  auto l2 = p_subgroups(c2, 2);
  CHECK(class_orders(l2) == std::vector<std::uint64_t>{1, 2});
  FiniteGroup v4(small_group("C2xC2"));
  auto lv = p_subgroups(v4, 2);
  auto q = quillen_poset(v4, lv);
  CHECK(q.members.size() == 4);
  auto oc = order_complex(q.poset);
  CHECK(oc.is_cone());
  CHECK(oc.euler_reduced() == 0);
  // abelian 2-group: the closure is every involution
  CHECK(benson_elements(v4, lv).size() == 3);
}

TEST_CASE("Benson closure in S4") {
  FiniteGroup g(small_group("S4"));
  auto lat = p_subgroups(g, 2);
  auto e = benson_elements(g, lat);
  CHECK(e.size() == 3);
  for (auto x : e) CHECK(g.element(x).fixed_points() == 0);
  auto c = benson_closure(g, lat);
  std::vector<std::uint64_t> sizes;
  for (const auto& m : c.members) sizes.push_back(m.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::uint64_t>{2, 2, 2, 4});
}

TEST_CASE("Quillen and Bouc agree in homology") {
  for (const std::string name : {"S4", "S5", "GL32"}) {
    CAPTURE(name);
    FiniteGroup g(small_group(name));
    auto lat = p_subgroups(g, 2);
    auto rep = homotopy_compare(quillen_poset(g, lat), bouc_poset(g, lat));
    CHECK(rep.equal);
    auto same = homotopy_compare(bouc_poset(g, lat), bouc_poset(g, lat));
    CHECK(same.betti_a == same.betti_b);
  }
}

TEST_CASE("GL(3,2) Bouc complex is the subdivided building") {
  FiniteGroup g(small_group("GL32"));
  auto lat = p_subgroups(g, 2);
  auto b = bouc_poset(g, lat);
  CHECK(b.members.size() == 35);
  auto oc = order_complex(b.poset);
  CHECK(oc.euler_reduced() == -8);
  auto h = oc.betti().reduced;
  CHECK(h.size() >= 2);
  CHECK(h[0] == 0);
  CHECK(h[1] == 8);
}

TEST_CASE("lattice invariants on small groups") {
  for (const std::string name : {"S4", "S5", "GL32"}) {
    CAPTURE(name);
    FiniteGroup g(small_group(name));
    auto lat = p_subgroups(g, 2);
    std::size_t total = 0;
    for (std::size_t c = 0; c < lat.classes.size(); ++c) {
      const auto& r = lat.classes[c];
      CHECK(r.normalizer_order == lat.normalizer_check[c]);
      CHECK(r.class_size * r.normalizer_order == g.size());
      total += r.class_size;
      if (r.is_centric) CHECK((r.centralizer_order / r.center_order) % 2 == 1);
      if (r.order == lat.sylow.size()) CHECK((r.is_radical && r.is_distinguished));
    }
    CHECK(total == lat.all.size());
    auto b = bouc_poset(g, lat), d = distinguished_poset(g, lat);
    for (const auto& m : d.members) CHECK(std::find(b.members.begin(), b.members.end(), m) != b.members.end());
    auto rng = make_rng(11);
    for (int k = 0; k < 100; ++k) {
      const auto i = uniform_index(rng, lat.all.size());
      const auto x = static_cast<std::uint32_t>(uniform_index(rng, g.size()));
      auto img = g.conjugate_set(lat.all[i], x);
      auto it = std::find(lat.all.begin(), lat.all.end(), img);
      REQUIRE(it != lat.all.end());
      CHECK(lat.class_of[it - lat.all.begin()] == lat.class_of[i]);
    }
  }
}

TEST_CASE("class tables match the brute-force golden files") {
  for (const std::string name : {"S4", "S5", "GL32"}) {
    CAPTURE(name);
    std::ifstream in(std::string(RADGEO_SOURCE_DIR) + "/tests/golden/" + name + ".json");
    REQUIRE(in.good());
    const auto golden = nlohmann::json::parse(in);
    FiniteGroup g(small_group(name));
    CHECK(class_table_json(name, p_subgroups(g, 2)) == golden);
  }
}
