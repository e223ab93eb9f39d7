#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "parker/perm.hpp"

namespace parker {

inline constexpr std::size_t kDefaultGroupCap = 5000;

/// Multiplication is materialized as an index table up to this order.
inline constexpr std::size_t kMulTableMaxOrder = 512;

struct ConjugacyClass {
  std::vector<std::size_t> members;  // element indices, ascending
  std::size_t representative = 0;    // least member index
};

/// A fully enumerated permutation group.
///
/// Element 0 is the identity. Every index-based product refers to the global
/// composition convention: mul(i, j) is the index of compose(element(i), element(j)).
/// Immutable after construction.
class GroupTable {
 public:
  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return elements_.front().degree(); }

  const Perm& element(std::size_t i) const { return elements_[i]; }
  std::span<const Perm> elements() const { return elements_; }
  std::span<const Perm> generators() const { return generators_; }

  std::optional<std::size_t> find(const Perm& p) const;
  /// Index of p; throws InputError when p is not in the group.
  std::size_t index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return find(p).has_value(); }

  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const { return inverse_[i]; }
  /// Index of element(i)^k; negative k allowed.
  std::size_t pow(std::size_t i, std::int64_t k) const;
  /// Index of element(g)^-1 element(i) element(g).
  std::size_t conj(std::size_t i, std::size_t g) const { return mul(inv(g), mul(i, g)); }

  std::uint64_t element_order(std::size_t i) const { return orders_[i]; }
  /// lcm of all element orders.
  std::uint64_t exponent() const { return exponent_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t i) const { return class_of_[i]; }

  bool has_mul_table() const { return !mul_table_.empty(); }

 private:
  friend GroupTable enumerate_group(std::span<const Perm> gens, std::size_t cap);

  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t> index_;
  std::vector<std::uint32_t> mul_table_;  // row-major order x order, or empty
  std::vector<std::size_t> inverse_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t exponent_ = 1;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
};

/// Closure of `gens` under composition, breadth first.
///
/// Ordering: identity first, then layer by layer (a layer is everything first
/// reached by multiplying the previous layer on the left by a generator), each
/// layer sorted by image sequence. Throws SizeError (carrying the partial count)
/// once more than `cap` elements are found.
GroupTable enumerate_group(std::span<const Perm> gens, std::size_t cap = kDefaultGroupCap);

const std::vector<ConjugacyClass>& conjugacy_classes(const GroupTable& group);

/// True iff some g in G has g^-1 p g = q. Throws InputError if p or q is not in G.
bool are_conjugate(const GroupTable& group, const Perm& p, const Perm& q);

std::uint64_t exponent(const GroupTable& group);

/// |C_G(element i)|, counted directly over all of G.
std::size_t centralizer_order(const GroupTable& group, std::size_t i);

}  // namespace parker
