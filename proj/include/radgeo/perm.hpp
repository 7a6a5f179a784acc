#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace radgeo {

using Point = std::uint16_t;

/// Largest supported permutation degree (points are stored as 16-bit ids).
inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

class PermError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A permutation of {0, ..., degree-1} stored as its image array.
///
/// Right action throughout: `x^(p*q) = (x^p)^q`, i.e. `p * q` applies `p`
/// first. Conjugation is `a^g = g^-1 a g`.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images);

  /// Builds from 0-based images given as wider integers; validates bijectivity.
  static Permutation from_images(std::span<const std::uint32_t> images);
  /// Builds from disjoint cycles of 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  Point image(std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }
  const Point* data() const { return images_.data(); }
  Point* mutable_data() { return images_.data(); }

  bool is_identity() const;
  Permutation inverse() const;
  /// Order of the cyclic group generated by this permutation.
  std::uint64_t order() const;
  std::size_t fixed_points() const;
  std::size_t support_size() const { return degree() - fixed_points(); }
  /// Cycle-type fingerprint: counts of cycles per length, as a sorted list.
  std::vector<std::uint32_t> cycle_type() const;
  Permutation pow(std::int64_t e) const;

  std::uint64_t hash() const;
  std::string to_cycle_string(bool one_based = true) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// 64-bit fingerprint of an image array.
std::uint64_t hash_images(const Point* images, std::size_t n);

/// out = a * b (apply a, then b). `out` must already have the right size and
/// must not alias `b`.
void compose_into(const Point* a, const Point* b, Point* out, std::size_t n);

/// out = g^-1 a g, computed without forming g^-1.
void conjugate_into(const Point* a, const Point* g, Point* out, std::size_t n);

Permutation conjugate(const Permutation& a, const Permutation& g);
bool commute(const Permutation& a, const Permutation& b);
bool commute(const Point* a, const Point* b, std::size_t n);
bool is_involution(const Permutation& a);
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace radgeo
