#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "parker/ratpoly.hpp"

namespace parker {

std::uint64_t euler_phi(std::uint64_t n);

/// Q(zeta_N) = Q(zeta_{N/2}) for N = 2 mod 4; every conductor the library
/// stores has been passed through this.
std::uint64_t normalize_conductor(std::uint64_t n);

/// Residues in [1, n) coprime to n, ascending; {1} for n = 1 and n = 2.
std::vector<std::uint64_t> unit_group(std::uint64_t n);

/// j mod n as a representative of (Z/n)^*, with n = 1 mapped to residue 1.
std::uint64_t unit_residue(std::int64_t j, std::uint64_t n);

/// Coefficients of the n-th cyclotomic polynomial, ascending. Cached; safe to
/// call concurrently.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n);

/// An element of Q(zeta_N) as rational coordinates on the power basis
/// 1, z, ..., z^(phi(N)-1), z = zeta_N = exp(2 pi i / N).
///
/// N is always normalized (never 2 mod 4). Arithmetic requires equal N; lift
/// with embed() first.
class CycloNum {
 public:
  /// Zero in Q (N = 1).
  CycloNum();

  static CycloNum rational(const mpq_class& q, std::uint64_t n = 1);
  /// Coordinates on the power basis of Q(zeta_n); n must already be normalized.
  static CycloNum from_coords(std::uint64_t n, std::vector<mpq_class> coords);

  std::uint64_t conductor() const { return n_; }
  const std::vector<mpq_class>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws InputError when not rational.
  mpq_class rational_value() const;
  /// True iff all coordinates are integers (algebraic integer test on Z[zeta_N]).
  bool has_integral_coords() const;

  CycloNum operator-() const;
  friend CycloNum operator+(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator-(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator*(const CycloNum& x, const CycloNum& y);
  friend CycloNum operator*(const mpq_class& c, const CycloNum& x);
  /// Equality of canonical forms; values at different conductors compare by
  /// lifting to the lcm.
  friend bool operator==(const CycloNum& x, const CycloNum& y);

  /// "c0 + c1*z + c2*z^2 ..." with z = zeta_N, rationals as p/q.
  std::string to_string() const;

 private:
  CycloNum(std::uint64_t n, std::vector<mpq_class> coords);

  friend CycloNum reduce_power_series(std::uint64_t n, std::vector<mpq_class> series);

  std::uint64_t n_;
  std::vector<mpq_class> coords_;
};

/// Orders values at a common conductor lexicographically by coordinates.
std::strong_ordering lex_compare(const CycloNum& x, const CycloNum& y);

/// zeta_N^k in canonical coordinates (k may be negative or exceed phi(N)).
CycloNum root_of_unity(std::int64_t k, std::uint64_t n);

/// Multiplicative inverse; throws InputError for zero.
CycloNum invert(const CycloNum& x);

/// The same number in Q(zeta_M); requires N | M (before normalization of M).
CycloNum embed(const CycloNum& x, std::uint64_t m);

/// Inverse of embed: coordinates in Q(zeta_d) for d | N; throws InputError if
/// x does not lie in Q(zeta_d).
CycloNum project(const CycloNum& x, std::uint64_t d);

/// sigma_j : zeta_N -> zeta_N^j; throws InputError unless gcd(j, N) = 1.
CycloNum galois_apply(std::int64_t j, const CycloNum& x);

/// Complex conjugate (sigma_{-1}).
CycloNum conj(const CycloNum& x);

/// Monic minimal polynomial over Q, the product over distinct Galois conjugates.
RatPoly min_poly(const CycloNum& x);

/// f(x) evaluated exactly in Q(zeta_N).
CycloNum evaluate(const RatPoly& f, const CycloNum& x);

}  // namespace parker
