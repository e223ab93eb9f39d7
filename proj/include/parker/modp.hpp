#pragma once

#include <cstdint>
#include <vector>

// Word-size prime field arithmetic and dense polynomials over F_p.
// Moduli are primes below 2^32 so that products fit in 64 bits.

namespace parker::modp {

using u64 = std::uint64_t;

inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) { return a * b % p; }
inline u64 neg(u64 a, u64 p) { return a ? p - a : 0; }

u64 pow(u64 base, u64 e, u64 p);
/// Inverse of a nonzero residue.
u64 inv(u64 a, u64 p);
/// Residue of a signed integer.
u64 reduce(std::int64_t a, u64 p);

bool is_prime(u64 n);
/// Smallest prime q >= start with q = residue (mod modulus); gcd(residue, modulus) = 1.
u64 next_prime_in_progression(u64 start, u64 residue, u64 modulus);
/// Largest prime below n (n > 2).
u64 prev_prime(u64 n);
/// Least generator of F_p^*.
u64 primitive_root(u64 p);

/// Dense polynomial over F_p, ascending coefficients, no trailing zeros
/// (the zero polynomial is empty).
using Poly = std::vector<u64>;

void trim(Poly& f);
inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& f, const Poly& g, u64 p);
Poly sub(const Poly& f, const Poly& g, u64 p);
Poly mul(const Poly& f, const Poly& g, u64 p);
Poly scale(const Poly& f, u64 c, u64 p);
/// Quotient and remainder; g nonzero.
void divmod(const Poly& f, const Poly& g, Poly& q, Poly& r, u64 p);
Poly rem(const Poly& f, const Poly& g, u64 p);
Poly monic(const Poly& f, u64 p);
Poly gcd(Poly f, Poly g, u64 p);
/// Returns gcd and Bezout coefficients s, t with s f + t g = gcd (monic).
Poly ext_gcd(const Poly& f, const Poly& g, Poly& s, Poly& t, u64 p);
Poly derivative(const Poly& f, u64 p);
u64 eval(const Poly& f, u64 x, u64 p);
/// base^e mod m.
Poly powmod(const Poly& base, u64 e, const Poly& m, u64 p);

/// True iff f (nonzero, deg >= 1) has no repeated factor.
bool is_squarefree(const Poly& f, u64 p);
/// True iff f divides t^p - t, i.e. f is squarefree and splits into distinct linear factors.
bool splits_completely(const Poly& f, u64 p);

/// Distinct roots of f in F_p, ascending. Deterministic equal-degree splitting.
std::vector<u64> roots(const Poly& f, u64 p);

/// Monic irreducible factors of a monic squarefree f, sorted by (degree, coefficients).
std::vector<Poly> factor_squarefree(const Poly& f, u64 p);

/// Characteristic polynomial det(tI - A) of a square matrix (row-major, dim x dim), monic.
Poly charpoly(std::vector<u64> a, std::size_t dim, u64 p);

/// Basis of the right kernel {v : A v = 0} of a rows x cols matrix, as column vectors.
std::vector<std::vector<u64>> kernel(std::vector<u64> a, std::size_t rows, std::size_t cols, u64 p);

}  // namespace parker::modp
