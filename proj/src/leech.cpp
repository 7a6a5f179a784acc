#include "radgeo/leech.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "radgeo/bsgs.hpp"
#include "radgeo/rng.hpp"

namespace radgeo {

namespace {

constexpr int kP = 23;
constexpr int kInf = 23;
constexpr std::uint32_t kAll = (1u << 24) - 1;

int mod_pow(int b, int e) {
  int r = 1;
  b %= kP;
  while (e) {
    if (e & 1) r = r * b % kP;
    b = b * b % kP;
    e >>= 1;
  }
  return r;
}
int inv(int x) { return mod_pow(x, kP - 2); }

bool is_residue(int x) {
  for (int i = 1; i < kP; ++i)
    if (i * i % kP == x) return true;
  return false;
}

using Perm24 = std::array<std::uint8_t, 24>;

Perm24 compose24(const Perm24& p, const Perm24& q) {
  Perm24 r{};
  for (int i = 0; i < 24; ++i) r[i] = q[p[i]];
  return r;
}

std::uint32_t image_word(std::uint32_t w, const Perm24& p) {
  std::uint32_t r = 0;
  for (int i = 0; i < 24; ++i)
    if (w >> i & 1) r |= 1u << p[i];
  return r;
}

// coordinate i moves to p[i]
LeechVector permute(const LeechVector& x, const Perm24& p) {
  LeechVector y{};
  for (int i = 0; i < 24; ++i) y[p[i]] = x[i];
  return y;
}

LeechVector sign_change(LeechVector x, std::uint32_t c) {
  for (int i = 0; i < 24; ++i)
    if (c >> i & 1) x[i] = -x[i];
  return x;
}

int dot(const LeechVector& a, const LeechVector& b) {
  int s = 0;
  for (int i = 0; i < 24; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

GolayCode::GolayCode() : member_(std::size_t{1} << 24, false) {
  std::vector<std::uint32_t> rows;
  for (int i = 0; i < kP; ++i) {
    std::uint32_t r = 1u << kInf;
    for (int x = 1; x < kP; ++x)
      if (!is_residue(x)) r |= 1u << ((i + x) % kP);
    rows.push_back(r);
  }
  rows.push_back(kAll);
  std::vector<std::uint32_t> basis;
  for (auto r : rows) {
    for (auto b : basis) r = std::min(r, r ^ b);
    if (r) {
      basis.push_back(r);
      std::sort(basis.rbegin(), basis.rend());
    }
  }
  words_ = {0};
  for (auto b : basis) {
    const auto n = words_.size();
    for (std::size_t k = 0; k < n; ++k) words_.push_back(words_[k] ^ b);
  }
  std::sort(words_.begin(), words_.end());
  for (auto w : words_) member_[w] = true;

  auto mk = [](auto f) {
    Perm24 p{};
    for (int i = 0; i < 24; ++i) p[i] = static_cast<std::uint8_t>(f(i));
    return p;
  };
  m24_.push_back(mk([](int i) { return i == kInf ? kInf : (i + 1) % kP; }));
  m24_.push_back(mk([](int i) { return i == kInf ? kInf : (2 * i) % kP; }));
  m24_.push_back(mk([](int i) {
    if (i == kInf) return 0;
    if (i == 0) return kInf;
    return (kP - inv(i)) % kP;
  }));
  m24_.push_back(mk([](int i) {
    if (i == 0 || i == kInf) return i;
    return is_residue(i) ? mod_pow(i, 3) * inv(9) % kP : 9 * mod_pow(i, 3) % kP;
  }));
  for (const auto& g : m24_)
    for (auto w : basis)
      if (!contains(image_word(w, g))) throw PermError("M24 generator does not preserve the code");
}

std::vector<std::uint32_t> GolayCode::words_of_weight(int w) const {
  std::vector<std::uint32_t> out;
  for (auto c : words_)
    if (std::popcount(c) == w) out.push_back(c);
  return out;
}

bool in_leech(const GolayCode& code, const LeechVector& x) {
  const int m = x[0] & 1;
  int sum = 0;
  for (int v : x) {
    if ((v & 1) != m) return false;
    sum += v;
  }
  if (((sum - 4 * m) % 8 + 8) % 8 != 0) return false;
  const int k = m == 0 ? 2 : 1;
  std::uint32_t s = 0;
  for (int i = 0; i < 24; ++i)
    if (((x[i] % 4) + 4) % 4 == k) s |= 1u << i;
  return code.contains(s);
}

std::vector<Permutation> construct_co3_276(std::uint64_t seed, int max_attempts) {
  const GolayCode code;
  const auto octads = code.words_of_weight(8);
  const auto& m24 = code.m24_generators();

  // Sextet containing the four lowest coordinates of the first octad.
  std::vector<std::uint32_t> tetrads;
  {
    std::uint32_t t1 = 0;
    int taken = 0;
    for (int i = 0; i < 24 && taken < 4; ++i)
      if (octads.front() >> i & 1) {
        t1 |= 1u << i;
        ++taken;
      }
    tetrads.push_back(t1);
    for (auto o : octads) {
      if ((o & t1) != t1) continue;
      const std::uint32_t t = o ^ t1;
      if (std::none_of(tetrads.begin(), tetrads.end(), [&](auto u) { return u & t; }))
        tetrads.push_back(t);
    }
    if (tetrads.size() != 6) throw PermError("sextet construction failed");
  }
  // x_i -> (tetrad sum)/2 - x_i, then negate tetrad 0; an element of Co0.
  auto xi = [&](const LeechVector& x, bool& ok) {
    LeechVector y{};
    ok = true;
    for (std::size_t t = 0; t < tetrads.size(); ++t) {
      int s = 0;
      for (int i = 0; i < 24; ++i)
        if (tetrads[t] >> i & 1) s += x[i];
      for (int i = 0; i < 24; ++i)
        if (tetrads[t] >> i & 1) {
          const int v = s - 2 * x[i];
          if (v % 2) ok = false;
          y[i] = (t == 0 ? -1 : 1) * v / 2;
        }
    }
    return y;
  };

  const std::uint32_t dodecad = code.words_of_weight(12).front();
  LeechVector w{};
  for (int i = 0; i < 24; ++i) w[i] = (dodecad >> i & 1) ? 2 : 0;

  // The 552 type-2 vectors with v.w = 24, paired as {v, w - v}.
  std::vector<LeechVector> cand;
  for (int i = 0; i < 24; ++i)
    for (int j = i + 1; j < 24; ++j)
      for (int si : {4, -4})
        for (int sj : {4, -4}) {
          LeechVector v{};
          v[i] = si;
          v[j] = sj;
          cand.push_back(v);
        }
  for (auto o : octads) {
    std::vector<int> pos;
    for (int i = 0; i < 24; ++i)
      if (o >> i & 1) pos.push_back(i);
    for (int s = 0; s < 256; ++s) {
      if (std::popcount(static_cast<unsigned>(s)) % 2) continue;
      LeechVector v{};
      for (int k = 0; k < 8; ++k) v[pos[k]] = (s >> k & 1) ? -2 : 2;
      cand.push_back(v);
    }
  }
  for (auto c : code.words())
    for (int i = 0; i < 24; ++i) {
      LeechVector v;
      v.fill(1);
      v[i] = -3;
      cand.push_back(sign_change(v, c));
    }
  std::map<LeechVector, int> index;
  std::vector<LeechVector> vecs;
  for (const auto& v : cand)
    if (dot(v, w) == 24) {
      if (!in_leech(code, v)) throw PermError("candidate is not a Leech vector");
      index.emplace(v, static_cast<int>(vecs.size()));
      vecs.push_back(v);
    }
  if (vecs.size() != 552) throw PermError("expected 552 vectors with v.w = 24");
  std::vector<int> pair_of(vecs.size(), -1);
  std::vector<int> reps;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (pair_of[i] >= 0) continue;
    LeechVector d{};
    for (int k = 0; k < 24; ++k) d[k] = w[k] - vecs[i][k];
    const int j = index.at(d);
    pair_of[i] = pair_of[j] = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(i));
  }

  auto to_points = [&](auto&& f) {
    std::vector<Point> img(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k) {
      auto it = index.find(f(vecs[reps[k]]));
      if (it == index.end()) throw PermError("map does not preserve the 552 vectors");
      img[k] = static_cast<Point>(pair_of[it->second]);
    }
    return Permutation(std::move(img));
  };

  const Order co3_order = parse_order("495766656000");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng = make_rng(seed + attempt);
    auto random_m24 = [&](int steps) {
      Perm24 p;
      for (int i = 0; i < 24; ++i) p[i] = static_cast<std::uint8_t>(i);
      for (int s = 0; s < steps; ++s) p = compose24(p, m24[uniform_index(rng, m24.size())]);
      return p;
    };
    std::vector<Permutation> gens;
    // monomial part: M12 fixing the dodecad, and the sign change off it
    while (gens.size() < 3) {
      const auto p = random_m24(40);
      if (image_word(dodecad, p) == dodecad)
        gens.push_back(to_points([&](const LeechVector& v) { return permute(v, p); }));
    }
    gens.push_back(to_points([&](const LeechVector& v) { return sign_change(v, kAll ^ dodecad); }));
    // non-monomial part: conjugates of xi returned to fix w
    int found = 0;
    for (int tries = 0; found < 2 && tries < 100000; ++tries) {
      const auto pi = random_m24(30);
      const auto c = code.words()[uniform_index(rng, code.words().size())];
      bool ok = true;
      const auto u = xi(sign_change(permute(w, pi), c), ok);
      if (!ok) continue;
      std::uint32_t support = 0;
      bool shape = true;
      for (int i = 0; i < 24; ++i) {
        if (u[i] == 0) continue;
        if (u[i] != 2 && u[i] != -2) shape = false;
        support |= 1u << i;
      }
      if (!shape || std::popcount(support) != 12) continue;
      Perm24 p2;
      do p2 = random_m24(12);
      while (image_word(support, p2) != dodecad);
      const auto u2 = permute(u, p2);
      std::uint32_t diff = 0;
      for (int i = 0; i < 24; ++i)
        if (u2[i] != w[i]) diff |= 1u << i;
      std::uint32_t c2 = 0;
      bool have = false;
      for (auto cw : code.words())
        if ((cw & dodecad) == diff) {
          c2 = cw;
          have = true;
          break;
        }
      if (!have) continue;
      auto g = [&](const LeechVector& x) {
        bool okx = true;
        auto y = sign_change(permute(xi(sign_change(permute(x, pi), c), okx), p2), c2);
        if (!okx) throw PermError("xi left the lattice");
        return y;
      };
      if (g(w) != w) continue;
      gens.push_back(to_points(g));
      ++found;
    }
    if (found < 2) continue;
    SchreierSimsOptions o;
    o.seed = seed;
    if (schreier_sims(gens, o).order() == co3_order) return gens;
  }
  throw PermError("Co3 construction did not reach the expected order");
}

}  // namespace radgeo
