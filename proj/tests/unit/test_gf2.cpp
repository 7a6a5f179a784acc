#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "radgeo/gf2.hpp"

using namespace radgeo;

TEST_CASE("rank basics") {
  CHECK(BitMatrix::identity(4).rank() == 4);
  CHECK(BitMatrix(4, 4).rank() == 0);
  CHECK(reference_nilpotents()[0].rank() == 2);
  BitMatrix wide(3, 130);
  wide.set(0, 129);
  wide.set(1, 129);
  wide.set(2, 64);
  CHECK(wide.rank() == 2);
  CHECK(wide.transpose().rank() == 2);
}

TEST_CASE("rank of products and transposes on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t r = 1 + rng() % 9, k = 1 + rng() % 9, c = 1 + rng() % 9;
    BitMatrix a(r, k), b(k, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) a.set(i, j, rng() & 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < c; ++j) b.set(i, j, rng() & 1);
    const auto ab = (a * b).rank();
    REQUIRE(ab <= std::min(a.rank(), b.rank()));
    REQUIRE(a.rank() == a.transpose().rank());
    REQUIRE(a.rank() + a.nullspace().rows() == a.cols());
  }
}

TEST_CASE("the ten square-zero rank-two matrices") {
  auto found = enumerate_rank2_squarezero();
  auto ref = reference_nilpotents();
  CHECK(found.size() == 10);
  std::set<BitMatrix> a(found.begin(), found.end()), b(ref.begin(), ref.end());
  CHECK(a == b);
  for (const auto& n : found) {
    CHECK(n.rank() == 2);
    CHECK((n * n).is_zero());
  }
  // N7 has entries (1,2) and (3,4)
  BitMatrix n7(4, 4);
  n7.set(0, 1);
  n7.set(2, 3);
  CHECK(a.count(n7) == 1);
  CHECK(ref[6] == n7);
}

TEST_CASE("kernel of N7 is spanned by e1 and e3") {
  auto ker = reference_nilpotents()[6].nullspace();
  REQUIRE(ker.rows() == 2);
  std::set<std::uint64_t> span;
  for (std::uint64_t m = 0; m < 4; ++m) {
    std::uint64_t v = 0;
    for (std::size_t r = 0; r < 2; ++r)
      if (m >> r & 1) v ^= ker.row(r)[0];
    span.insert(v);
  }
  CHECK(span == std::set<std::uint64_t>{0, 1, 4, 5});
}

TEST_CASE("unitriangular relations") {
  for (const auto& c : u4_relations_check()) {
    INFO(c.name);
    CHECK(c.ok);
  }
  auto u4 = u4_elements();
  std::set<BitMatrix> all(u4.begin(), u4.end());
  CHECK(all.size() == 64);
  for (const auto& x : u4)
    for (const auto& y : u4) REQUIRE(all.count(x * y) == 1);
}

TEST_CASE("betti numbers of triangles") {
  // vertices 0,1,2; edges 01,02,12
  BitMatrix d1 = BitMatrix::from_rows({{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  auto hollow = betti_f2({3, 3}, {d1});
  CHECK(hollow.betti == std::vector<long long>{1, 1});
  BitMatrix d2 = BitMatrix::from_rows({{1}, {1}, {1}});
  auto solid = betti_f2({3, 3, 1}, {d1, d2});
  CHECK(solid.betti == std::vector<long long>{1, 0, 0});
  CHECK(solid.reduced == std::vector<long long>{0, 0, 0});
  BitMatrix bad = BitMatrix::from_rows({{1}, {1}, {0}});
  CHECK_THROWS_AS(betti_f2({3, 3, 1}, {d1, bad}), HomologyError);

  std::vector<std::vector<SparseColumn>> sp = {{{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}}};
  CHECK(betti_f2_sparse({3, 3, 1}, sp).betti == std::vector<long long>{1, 0, 0});
  sp.pop_back();
  CHECK(betti_f2_sparse({3, 3}, sp).reduced == std::vector<long long>{0, 1});
}
