#include <doctest.h>

#include <sstream>

#include "radgeo/complex.hpp"
#include "radgeo/morse.hpp"

using namespace radgeo;

namespace {

TypedComplex plain(std::size_t n) {
  TypedComplex c;
  c.add_type("v");
  for (std::size_t i = 0; i < n; ++i) c.add_vertex(0);
  return c;
}

TypedComplex hollow_triangle() {
  auto c = plain(3);
  c.add_simplex({0, 1});
  c.add_simplex({0, 2});
  c.add_simplex({1, 2});
  return c;
}

// Fano plane building: points 0..6, lines 7..13, incidence edges
TypedComplex fano_building() {
  TypedComplex c;
  int p = c.add_type("point"), l = c.add_type("line");
  for (int i = 0; i < 7; ++i) c.add_vertex(p);
  for (int i = 0; i < 7; ++i) c.add_vertex(l);
  const int lines[7][3] = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
  for (int j = 0; j < 7; ++j)
    for (int k = 0; k < 3; ++k) c.add_simplex({static_cast<VertexId>(lines[j][k]), static_cast<VertexId>(7 + j)});
  return c;
}

}  // namespace

TEST_CASE("faces are closed and counted") {
  auto c = plain(3);
  c.add_simplex({2, 0, 1});
  CHECK(c.size() == 7);
  CHECK(c.f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(c.euler_reduced() == 0);
  CHECK(c.is_cone() == VertexId{0});
  auto t = hollow_triangle();
  CHECK(t.euler_reduced() == -1);
  CHECK_FALSE(t.is_cone());
  CHECK(t.betti().betti == std::vector<long long>{1, 1});
}

TEST_CASE("order complexes") {
  Poset chain;
  for (int i = 0; i < 3; ++i) chain.add_element(0);
  chain.set_less(0, 1);
  chain.set_less(1, 2);
  chain.close();
  auto oc = order_complex(chain);
  CHECK(oc.dimension() == 2);
  CHECK(oc.euler_reduced() == 0);
  CHECK(chain.less(0, 2));

  Poset anti;
  for (int i = 0; i < 5; ++i) anti.add_element(0);
  CHECK(order_complex(anti).euler_reduced() == 4);
  CHECK(order_complex(anti).is_flag_typed());

  Poset cyc(2);
  cyc.set_less(0, 1);
  cyc.set_less(1, 0);
  CHECK_THROWS_AS(cyc.close(), ComplexError);
}

TEST_CASE("star and residue") {
  auto t = hollow_triangle();
  auto res = t.residue(0);
  CHECK(res.size() == 2);
  CHECK(res.alive_vertices() == std::vector<VertexId>{1, 2});
  auto cone = plain(4);
  cone.add_simplex({0, 1});
  cone.add_simplex({0, 2});
  cone.add_simplex({0, 3});
  CHECK(cone.is_cone() == VertexId{0});
  CHECK(cone.residue(0).f_vector() == std::vector<std::size_t>{3});
  CHECK(cone.star(1).size() == 3);
  CHECK_THROWS_AS(cone.star(9), ComplexError);
}

TEST_CASE("building of the Fano plane") {
  auto b = fano_building();
  CHECK(b.euler_reduced() == -8);
  auto h = b.betti();
  CHECK(h.reduced == std::vector<long long>{0, 8});
  CHECK(b.is_flag_typed());
  std::vector<FlagTypeStabilizer> flags = {{"point", 1, 24}, {"line", 1, 24}, {"flag", 2, 8}};
  CHECK(euler_by_orbit_counting(flags, 168) == -8);
  CHECK(euler_by_orbit_counting({{"all", 1, 168}}, 168) == 0);
  CHECK_THROWS_AS(euler_by_orbit_counting({{"bad", 1, 5}}, 168), ComplexError);
}

TEST_CASE("orbit counting for the flag stabilizers of the sporadic geometry") {
  const Order g = parse_order("495766656000");
  std::vector<FlagTypeStabilizer> flags = {
      {"p", 1, 2903040}, {"L", 1, 27648}, {"M", 1, 322560}, {"pL", 2, 9216},
      {"pM", 2, 21504},  {"LM", 2, 9216}, {"pLM", 3, 3072}};
  const auto chi = euler_by_orbit_counting(flags, g);
  CHECK(int128_to_string(chi) == "50378624");
  CHECK(two_adic_valuation(chi) == 7);
}

TEST_CASE("fixed subcomplex and admissibility") {
  auto t = hollow_triangle();
  VertexPermutation id{0, 1, 2};
  CHECK(fixed_subcomplex(t, id).size() == t.size());
  VertexPermutation rot{1, 2, 0};
  CHECK(fixed_subcomplex(t, rot).size() == 0);
  VertexPermutation swap{1, 0, 2};
  CHECK_FALSE(check_admissible(t, swap).admissible);
  CHECK_THROWS_AS(fixed_subcomplex(t, swap), ComplexError);
}

TEST_CASE("dump round trip") {
  auto b = fano_building();
  std::stringstream ss;
  b.dump(ss);
  auto back = TypedComplex::parse(ss);
  CHECK(back.content_hash() == b.content_hash());
  CHECK(back.vertex_type(8) == b.vertex_type(8));
  std::istringstream bad("types v\nvertex 0 v\nsimplices\n0 7\n");
  CHECK_THROWS_AS(TypedComplex::parse(bad), ComplexError);
}

TEST_CASE("free pairs and collapses") {
  auto solid = plain(3);
  solid.add_simplex({0, 1, 2});
  CHECK(is_free_pair(solid, {0, 1, 2}, {0, 1}));
  auto t = hollow_triangle();
  CHECK_FALSE(is_free_pair(t, {0, 1}, {0}));
  CHECK(apply_collapse(solid, {0, 1, 2}, {1, 2}) == 2);
  auto g = greedy_collapse(solid);
  CHECK(g.reached_point);
  CHECK(g.certificate.steps.size() == 2);

  auto simplex5 = plain(5);
  simplex5.add_simplex({0, 1, 2, 3, 4});
  auto g5 = greedy_collapse(simplex5);
  CHECK(g5.reached_point);
  CHECK(simplex5.size() == 1);

  auto stuck = hollow_triangle();
  auto gs = greedy_collapse(stuck);
  CHECK_FALSE(gs.reached_point);
  CHECK(stuck.size() == 6);
}

TEST_CASE("star removal needs a cone residue") {
  auto c = plain(4);
  c.add_simplex({0, 1});
  c.add_simplex({1, 2});
  c.add_vertex(0);
  c.add_simplex({4});
  CHECK(remove_star_if_cone(c, 0) == 1);
  CHECK_FALSE(c.contains({0}));
  CHECK_THROWS_AS(remove_star_if_cone(c, 4), ComplexError);
}

TEST_CASE("schedule replay checks order") {
  // path 0-1-2 plus triangle {1,2,3}
  auto make = [] {
    auto c = plain(4);
    c.add_simplex({0, 1});
    c.add_simplex({1, 2, 3});
    return c;
  };
  std::istringstream good("collapse 1 2 3 over 2 3\ncollapse 1 3 over 3\ncollapse 0 1 over 0\n");
  auto steps = parse_schedule(good);
  auto c1 = make();
  auto cert = replay_schedule(c1, steps);
  CHECK(cert.terminal_size == 3);
  auto c2 = make();
  std::vector<CollapseStep> reversed(steps.rbegin(), steps.rend());
  std::swap(reversed[0], reversed[2]);
  std::swap(reversed[0], reversed[1]);  // order: {1 3 over 3} first
  CHECK_THROWS_AS(replay_schedule(c2, reversed), CollapseError);
  auto c3 = make();
  CHECK(replay_schedule(c3, {}).terminal_hash == make().content_hash());

  std::stringstream out;
  write_certificate(out, cert);
  std::optional<std::uint64_t> h;
  auto again = parse_schedule(out, &h);
  auto c4 = make();
  CHECK(replay_schedule(c4, again).terminal_hash == *h);
}
