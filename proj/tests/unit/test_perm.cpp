#include <doctest.h>

#include <set>
#include <sstream>

#include "radgeo/bsgs.hpp"
#include "radgeo/gens_io.hpp"
#include "radgeo/stream.hpp"

using namespace radgeo;

TEST_CASE("product applies left factor first") {
  Permutation a{1, 0, 2};  // (0 1)
  Permutation b{0, 2, 1};  // (1 2)
  auto ab = a * b;
  CHECK(ab[0] == 2);  // 0 -> 1 -> 2
  CHECK(conjugate(a, b) == Permutation{2, 1, 0});
}

TEST_CASE("symmetric group orders") {
  Permutation c = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  Permutation t = Permutation::from_cycles(4, {{0, 1}});
  auto s4 = GroupHandle::from_generators({c, t});
  CHECK(s4.order() == 24);
  auto c3 = GroupHandle::from_generators({Permutation::from_cycles(4, {{0, 1, 2}})});
  CHECK(c3.order() == 3);
  CHECK(s4.contains_group(c3));
  CHECK_FALSE(c3.contains(t));

  std::vector<Permutation> gens{Permutation::from_cycles(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}}),
                                Permutation::from_cycles(9, {{0, 1}})};
  CHECK(to_string(GroupHandle::from_generators(gens).order()) == "362880");
}

TEST_CASE("element stream visits every element once") {
  auto s4 = GroupHandle::from_generators(
      {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}})});
  std::set<std::vector<Point>> seen;
  for_each_element(s4, [&](const Point* p) {
    seen.emplace(p, p + 4);
    return true;
  });
  CHECK(seen.size() == 24);
  auto n = normalizer_by_stream(
      s4, GroupHandle::from_generators({Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                        Permutation::from_cycles(4, {{0, 2}, {1, 3}})}));
  CHECK(n.order() == 24);
  auto d8 = normalizer_by_stream(
      s4, GroupHandle::from_generators({Permutation::from_cycles(4, {{0, 1}, {2, 3}})}));
  CHECK(d8.order() == 8);
  CHECK_THROWS_AS(ElementStream(s4, 10), StreamCapExceeded);
}

TEST_CASE("generator file round trip") {
  std::istringstream in("# S4\nperm 4\n2 3 4 1\n(1,2)  # transposition\n");
  auto f = parse_generators(in);
  CHECK(f.degree == 4);
  REQUIRE(f.gens.size() == 2);
  CHECK(f.gens[1] == Permutation{1, 0, 2, 3});
  std::ostringstream out;
  write_generators(out, f);
  std::istringstream back(out.str());
  CHECK(parse_generators(back).gens == f.gens);
  std::istringstream bad("perm 3\n1 1 2\n");
  CHECK_THROWS_AS(parse_generators(bad), InputError);
  std::istringstream nohdr("1 2 3\n");
  CHECK_THROWS_AS(parse_generators(nohdr), InputError);
}

TEST_CASE("parallel filter agrees with the serial one") {
  auto s6 = GroupHandle::from_generators({Permutation{1, 2, 3, 4, 5, 0}, Permutation{1, 0, 2, 3, 4, 5}});
  auto pred = [](const Point* p) { return p[0] < 2 && p[1] < 2; };
  auto serial = filter_subgroup(s6, pred);
  for (unsigned t : {1u, 3u, 8u}) {
    auto par = filter_subgroup_parallel(s6, [&] { return std::function<bool(const Point*)>(pred); }, t);
    CHECK(par.order() == serial.order());
  }
  CHECK(serial.order() == 48);
}
