#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "parker/cyclo.hpp"
#include "parker/group.hpp"

namespace parker {

inline constexpr std::size_t kDefaultCharTableCap = 2000;

/// (M_i)[j][k] = #{(u, v) in C_i x C_j : u v = rep(C_k)}.
using ClassMatrix = std::vector<std::vector<std::int64_t>>;

/// Class structure constants, one matrix per conjugacy class (class index order).
std::vector<ClassMatrix> class_matrices(const GroupTable& group);

/// Exact irreducible character table.
///
/// Columns follow group.classes(); values live in Q(zeta_N) with N the
/// normalized group exponent. Row 0 is the trivial character, the remaining
/// rows are sorted by degree and then lexicographically by value coordinates.
/// The table refers to `group`, which must outlive it.
class CharacterTable {
 public:
  const GroupTable& group() const { return *group_; }
  std::uint64_t conductor() const { return conductor_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<std::vector<CycloNum>>& rows() const { return rows_; }
  const std::vector<CycloNum>& row(std::size_t i) const { return rows_[i]; }
  std::uint64_t degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<std::uint64_t>& degrees() const { return degrees_; }
  /// The prime the modular computation succeeded with.
  std::uint64_t prime() const { return prime_; }

 private:
  friend CharacterTable character_table(const GroupTable& group, std::size_t cap);

  const GroupTable* group_ = nullptr;
  std::uint64_t conductor_ = 1;
  std::vector<std::vector<CycloNum>> rows_;
  std::vector<std::uint64_t> degrees_;
  std::uint64_t prime_ = 0;
};

/// Throws SizeError above `cap`; InternalError if no prime in the search
/// range yields a consistent table.
CharacterTable character_table(const GroupTable& group, std::size_t cap = kDefaultCharTableCap);

/// The column of the table at the class of g; throws InputError if g is not in the group.
std::vector<CycloNum> char_values_at(const CharacterTable& table, const Perm& g);

/// sum_k |C_k| chi_i(g_k) conj(chi_j(g_k)) == |G| delta_ij, exactly.
bool rows_orthogonal(const CharacterTable& table);

/// sum_i chi_i(g_k) conj(chi_i(g_l)) == delta_kl |G| / |C_k|, exactly.
bool columns_orthogonal(const CharacterTable& table);

}  // namespace parker
