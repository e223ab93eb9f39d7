#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "parker/cyclo.hpp"

namespace parker {

/// A subfield of Q(zeta_N) given by its fixing subgroup H <= (Z/N)^*.
///
/// Values produced by the library are canonical: N is the conductor of the
/// field (minimal), so equal fields have equal representations.
struct Subfield {
  std::uint64_t conductor = 1;
  std::vector<std::uint64_t> subgroup{1};  // sorted residues mod conductor
  std::uint64_t degree = 1;                // phi(conductor) / |subgroup|

  friend bool operator==(const Subfield&, const Subfield&) = default;
};

/// Validates H (closed, contains 1, coprime residues) at conductor n and
/// returns the canonical form. Throws InputError on an invalid subgroup.
Subfield make_subfield(std::uint64_t n, std::vector<std::uint64_t> subgroup);

/// Q itself.
Subfield rational_field();
/// Q(zeta_n), canonical.
Subfield cyclotomic_field(std::uint64_t n);

/// Smallest d | N such that ker((Z/N)^* -> (Z/d)^*) <= H, re-expressed at d.
Subfield conductor_reduce(const Subfield& field);

/// Smallest subfield containing both, i.e. the intersection of the lifted subgroups.
Subfield compositum(const Subfield& f1, const Subfield& f2);

/// F1 <= F2, tested at conductor lcm(N1, N2) as H1 >= H2.
bool subfield_leq(const Subfield& f1, const Subfield& f2);

/// The field Q(S) for S inside Q(zeta_n): {j : sigma_j fixes every element},
/// canonicalized. Every element must already live at conductor normalize(n).
Subfield stabilizer_subgroup(std::span<const CycloNum> values, std::uint64_t n);

/// The subgroup of (Z/m)^* lying over `field`'s H, for a multiple m of its conductor.
std::vector<std::uint64_t> lift_subgroup(const Subfield& field, std::uint64_t m);

/// "Q", "Q(zeta_5)" or "Q(zeta_24)^<5,19>": the fixed field of the subgroup
/// generated by the listed residues (greedy generators, ascending).
std::string describe(const Subfield& field);

/// A finite abelian group by its invariant factors d1 | d2 | ... (all > 1).
struct AbelianGroup {
  std::vector<std::uint64_t> invariant_factors;

  std::uint64_t order() const;
  bool is_trivial() const { return invariant_factors.empty(); }
  /// "1" or e.g. "Z/2 x Z/4".
  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Invariant factors of (Z/N)^* / H, i.e. Gal(field / Q).
AbelianGroup galois_group(const Subfield& field);

}  // namespace parker
