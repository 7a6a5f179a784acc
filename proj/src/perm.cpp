#include "radgeo/perm.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>

namespace radgeo {

namespace {

void check_bijection(const std::vector<Point>& img) {
  std::vector<bool> seen(img.size(), false);
  for (Point y : img) {
    if (y >= img.size() || seen[y]) throw PermError("images do not form a bijection");
    seen[y] = true;
  }
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree > kMaxDegree) throw PermError("degree exceeds 2^16");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) throw PermError("degree exceeds 2^16");
  check_bijection(images_);
}

Permutation::Permutation(std::initializer_list<Point> images)
    : Permutation(std::vector<Point>(images)) {}

Permutation Permutation::from_images(std::span<const std::uint32_t> images) {
  if (images.size() > kMaxDegree) throw PermError("degree exceeds 2^16");
  std::vector<Point> img(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= images.size()) throw PermError("image out of range");
    img[i] = static_cast<Point>(images[i]);
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto x = c[i];
      if (x >= degree) throw PermError("cycle point out of range");
      if (used[x]) throw PermError("cycles are not disjoint");
      used[x] = true;
      p.images_[x] = static_cast<Point>(c[(i + 1) % c.size()]);
    }
  }
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = result / gcd64(result, len) * len;
  }
  return result;
}

std::size_t Permutation::fixed_points() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += (images_[i] == i);
  return n;
}

std::vector<std::uint32_t> Permutation::cycle_type() const {
  std::vector<std::uint32_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Permutation result(degree());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::uint64_t Permutation::hash() const { return hash_images(images_.data(), images_.size()); }

std::string Permutation::to_cycle_string(bool one_based) const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) os << ',';
      os << (j + (one_based ? 1 : 0));
      first = false;
    }
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw PermError("degree mismatch in product");
  Permutation r;
  r.images_.resize(a.degree());
  compose_into(a.data(), b.data(), r.images_.data(), a.degree());
  return r;
}

std::uint64_t hash_images(const Point* images, std::size_t n) {
  // Word-at-a-time multiply-xorshift mix; fast enough for the hot loops.
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ (n * 0xD6E8FEB86659FD93ull);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    std::uint64_t w;
    std::memcpy(&w, images + i, sizeof(w));
    h ^= w;
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 31;
  }
  for (; i < n; ++i) {
    h ^= images[i];
    h *= 0x94D049BB133111EBull;
    h ^= h >> 29;
  }
  h ^= h >> 33;
  h *= 0xFF51AFD7ED558CCDull;
  h ^= h >> 33;
  return h;
}

void compose_into(const Point* a, const Point* b, Point* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = b[a[i]];
}

void conjugate_into(const Point* a, const Point* g, Point* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[g[i]] = g[a[i]];
}

Permutation conjugate(const Permutation& a, const Permutation& g) {
  if (a.degree() != g.degree()) throw PermError("degree mismatch in conjugation");
  Permutation r(a.degree());
  conjugate_into(a.data(), g.data(), r.mutable_data(), a.degree());
  return r;
}

bool commute(const Point* a, const Point* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

bool commute(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw PermError("degree mismatch");
  return commute(a.data(), b.data(), a.degree());
}

bool is_involution(const Permutation& a) {
  if (a.is_identity()) return false;
  for (std::size_t i = 0; i < a.degree(); ++i)
    if (a[a[i]] != i) return false;
  return true;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace radgeo
