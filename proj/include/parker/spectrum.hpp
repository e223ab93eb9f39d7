#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "parker/chartab.hpp"
#include "parker/cyclo.hpp"
#include "parker/dessin.hpp"
#include "parker/group.hpp"
#include "parker/ratpoly.hpp"
#include "parker/subfield.hpp"

namespace parker {

inline constexpr std::size_t kDefaultDenseCap = 24;
inline constexpr std::size_t kDefaultKrylovCap = 360;

/// Index of a basis element (s, t) of Q[G x G].
using ElementPair = std::pair<std::size_t, std::size_t>;

/// An element of Q[G x G] with integer coefficients. Refers to `group`, which
/// must outlive it.
class AlgebraElement {
 public:
  AlgebraElement(const GroupTable& group, std::map<ElementPair, std::int64_t> support);

  const GroupTable& group() const { return *group_; }
  const std::map<ElementPair, std::int64_t>& support() const { return support_; }
  std::int64_t coefficient_sum() const;

 private:
  const GroupTable* group_;
  std::map<ElementPair, std::int64_t> support_;
};

/// x = sum_g (g^-1 a g, g^-1 b g). `group` must be the monodromy group of d.
AlgebraElement parker_element(const Dessin& d, const GroupTable& group);

/// Square integer matrix, row-major.
struct DenseMatrix {
  std::size_t dim = 0;
  std::vector<std::int64_t> entries;

  std::int64_t at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
  std::int64_t& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }
};

/// Basis index of (u, v) in Q[G x G].
inline std::size_t pair_index(std::size_t u, std::size_t v, std::size_t order) { return u * order + v; }

/// Matrix of left multiplication by x on Q[G x G]; column (u, v) gets c at
/// row (s u, t v) for every support pair (s, t) with coefficient c.
/// Throws SizeError when |G| > dense_cap.
DenseMatrix dense_action_matrix(const AlgebraElement& x, std::size_t dense_cap = kDefaultDenseCap);

enum class Strategy { Auto, Dense, Krylov };

const char* to_string(Strategy s);
/// Parses "auto" | "dense" | "krylov"; throws InputError otherwise.
Strategy parse_strategy(const std::string& text);

struct Caps {
  std::size_t dense_cap = kDefaultDenseCap;
  std::size_t krylov_cap = kDefaultKrylovCap;
};

/// Auto picks dense up to dense_cap, then Krylov up to krylov_cap; throws
/// SizeError naming the cap otherwise.
Strategy resolve_strategy(Strategy requested, std::size_t group_order, const Caps& caps);

/// Minimal polynomial of the dense action matrix: lcm over all basis vectors of
/// their annihilators, computed modulo word-size primes and recovered by CRT.
/// The result is certified exactly (f(M) = 0 follows from the accumulated modulus).
RatPoly min_poly_dense(const AlgebraElement& x, std::size_t dense_cap = kDefaultDenseCap);

/// Minimal polynomial from the Krylov sequence x^k of the identity pair.
/// Iterates on the subspace of functions constant on diagonal-conjugation
/// orbits (every power of x lives there), detects the dependency modulo
/// word-size primes and confirms it exactly over Z.
RatPoly min_poly_krylov(const AlgebraElement& x, std::size_t krylov_cap = kDefaultKrylovCap);

RatPoly min_poly_of_x(const AlgebraElement& x, Strategy strategy, const Caps& caps = {});

/// p / gcd(p, p'), monic.
RatPoly squarefree_part(const RatPoly& p);

/// Integer roots of a monic integer polynomial with all roots of modulus <= bound.
std::vector<mpz_class> integer_roots(const RatPoly& p, std::uint64_t bound);

/// One Frobenius splitting test used to determine L.
struct FrobeniusTest {
  std::uint64_t residue;
  std::uint64_t prime;
  bool splits;
};

/// The field generated by the roots of the squarefree s, all of which must lie
/// in Q(zeta_N): H_L = {j : s splits mod a good prime p = j (mod N)}.
/// Throws EigenvalueFieldError if s does not split at j = 1.
Subfield field_L(const RatPoly& s, std::uint64_t n, std::vector<FrobeniusTest>* trace = nullptr);

/// k from power maps: H_k = {j : a^j ~ a and b^j ~ b}.
Subfield field_k_power_maps(const GroupTable& group, const Perm& a, const Perm& b);
/// k from the character table: the field of all chi(a), chi(b).
Subfield field_k_table(const CharacterTable& table, const Perm& a, const Perm& b);
/// Both methods when a table is given; throws InternalError if they disagree.
Subfield field_k(const GroupTable& group, const Perm& a, const Perm& b, const CharacterTable* table);

struct EigenvalueSource {
  std::size_t row;
  char element;  // 'a' or 'b'
};

struct PredictedEigenvalue {
  CycloNum value;
  std::vector<EigenvalueSource> sources;
};

/// Distinct values |G| chi(a)/chi(1) and |G| chi(b)/chi(1) over all rows:
/// a-values first in row order, then b-values.
std::vector<PredictedEigenvalue> predicted_eigenvalues(const CharacterTable& table, const Perm& a, const Perm& b);

struct CheckOutcome {
  bool passed = true;
  std::string detail;  // witness on failure
};

/// Conjugating the support by (h, h) for each group generator h permutes it
/// and preserves coefficients.
CheckOutcome verify_commutation(const AlgebraElement& x);

/// m(e) == 0 exactly for every predicted value e.
CheckOutcome verify_predicted_are_roots(const RatPoly& m, std::span<const PredictedEigenvalue> predicted);

/// (k <= L, L <= K_exp, K_exp <= K_ord).
std::array<bool, 3> verify_tower(const Subfield& k, const Subfield& l, const Subfield& k_exp, const Subfield& k_ord);

AbelianGroup galois_group_of_L(const Subfield& l);

/// Q(sqrt(disc f)) for a monic integral irreducible quadratic f, located by the
/// Kronecker character of its fundamental discriminant d (conductor |d|).
/// Empty when the discriminant resists trial division or |d| exceeds max_conductor.
std::optional<Subfield> quadratic_field(const RatPoly& f, std::uint64_t max_conductor);

/// One rational-irreducible eigenvalue class with its multiplicity per root.
struct EigenvalueClass {
  RatPoly factor;                        // monic, irreducible over Q
  std::optional<mpq_class> root;         // set when the factor is linear
  std::size_t multiplicity = 0;
};

/// Characteristic polynomial of the dense action matrix, by Hessenberg
/// reduction modulo word-size primes and CRT against the bound (1 + |G|)^dim.
RatPoly dense_charpoly(const DenseMatrix& m, std::uint64_t spectral_bound);

/// Factors the squarefree part of the minimal polynomial over Q and reads the
/// multiplicity of each factor in the characteristic polynomial by repeated
/// exact division. Multiplicity times factor degree sums to |G|^2.
std::vector<EigenvalueClass> eigenvalue_multiplicities(const AlgebraElement& x, const RatPoly& squarefree,
                                                       std::size_t dense_cap = kDefaultDenseCap);

struct AnalysisConfig {
  std::size_t dense_cap = kDefaultDenseCap;
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t krylov_cap = kDefaultKrylovCap;
  std::size_t chartab_cap = kDefaultCharTableCap;
  Strategy strategy = Strategy::Auto;
  bool multiplicities = false;
};

enum class CheckStatus { Pass, Fail, Skipped };

const char* to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct SpectrumReport {
  // dessin
  std::string dessin;
  std::size_t degree = 0;
  std::string a, b, c;
  std::array<Partition, 3> passport;
  std::size_t genus = 0;
  // group
  std::size_t group_order = 0;
  std::uint64_t exponent = 1;
  std::size_t class_count = 0;
  // Parker element
  std::size_t support_size = 0;
  std::int64_t pair_centralizer_order = 0;
  Strategy strategy = Strategy::Auto;
  RatPoly min_poly;
  RatPoly squarefree_min_poly;
  bool min_poly_is_squarefree = false;
  std::size_t distinct_eigenvalues = 0;
  std::vector<mpz_class> rational_eigenvalues;
  // fields
  Subfield field_k;
  std::optional<Subfield> field_k_table;
  /// Unset when the eigenvalues lie in neither Q(zeta_exponent) nor Q(zeta_|G|).
  std::optional<Subfield> field_L;
  /// The cyclotomic field L was identified in: exponent, or |G| as a fallback.
  std::uint64_t field_L_ambient = 0;
  /// Irreducible factors of the squarefree part whose roots are not all in Q(zeta_exponent).
  std::vector<RatPoly> factors_outside_exponent_field;
  Subfield field_K_exponent;
  Subfield field_K_order;
  std::optional<AbelianGroup> galois_L;
  std::vector<FrobeniusTest> frobenius;
  // character data
  bool has_character_table = false;
  std::vector<std::uint64_t> character_degrees;
  std::vector<PredictedEigenvalue> predicted;
  std::optional<std::vector<EigenvalueClass>> multiplicities;
  // verification
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool all_passed() const;
  const Check* find_check(const std::string& name) const;
};

/// Full pipeline. Deterministic for a given (dessin, config) apart from timings.
///
/// Eigenvalues outside Q(zeta_exponent) do not abort the run: the check
/// "eigenvalues_in_exponent_field" fails, naming the offending factors, and L is
/// located inside Q(zeta_|G|) when possible. Cap violations throw SizeError.
SpectrumReport analyze(const Dessin& d, const AnalysisConfig& config = {});

}  // namespace parker
