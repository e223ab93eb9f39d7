#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace parker {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}; images()[i] is the image of point i.
///
/// Composition convention used everywhere in the library:
///   compose(p, q)(i) = p(q(i))    (apply q first, then p).
class Perm {
 public:
  /// Identity on n points.
  explicit Perm(std::size_t degree = 1);

  /// Throws InputError unless `images` is a bijection of {0..n-1}, n >= 1.
  explicit Perm(std::vector<Point> images);

  /// Builds a permutation from disjoint 0-based cycles; omitted points are fixed.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;

  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& lhs, const Perm& rhs) { return lhs.images_ <=> rhs.images_; }

 private:
  std::vector<Point> images_;
};

Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

/// g^-1 p g, i.e. compose(inverse(g), compose(p, g)).
Perm conjugate(const Perm& p, const Perm& g);

/// Cycle lengths in descending order, fixed points included as 1s.
std::vector<std::size_t> cycle_type(const Perm& p);

/// Number of cycles including fixed points.
std::size_t cycle_count(const Perm& p);

/// lcm of the cycle lengths.
std::uint64_t element_order(const Perm& p);

/// 1-based cycle notation, "()" for the identity, e.g. "(1 2 3)(4 5)".
std::string to_cycle_string(const Perm& p);

}  // namespace parker

template <>
struct std::hash<parker::Perm> {
  std::size_t operator()(const parker::Perm& p) const noexcept;
};
