#include "parker/modp.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "parker/error.hpp"

namespace parker::modp {

u64 pow(u64 base, u64 e, u64 p) {
  u64 result = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    e >>= 1;
  }
  return result;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw InternalError("inverse of zero modulo p");
  return pow(a, p - 2, p);
}

u64 reduce(std::int64_t a, u64 p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  return static_cast<u64>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

namespace {

u64 mulmod128(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod128(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod128(r, b, m);
    b = mulmod128(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic for all 64-bit n.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod128(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime_in_progression(u64 start, u64 residue, u64 modulus) {
  if (modulus == 0) throw InternalError("zero modulus");
  residue %= modulus;
  if (std::gcd(residue, modulus) != 1 && modulus > 1) throw InternalError("residue not coprime to modulus");
  u64 q = start;
  u64 r = q % modulus;
  q += (residue + modulus - r) % modulus;
  for (; q < (1ULL << 32); q += modulus) {
    if (is_prime(q)) return q;
  }
  throw InternalError("no word-size prime found in progression");
}

u64 prev_prime(u64 n) {
  if (n <= 2) throw InternalError("no prime below 2");
  for (u64 q = n - 1;; --q)
    if (is_prime(q)) return q;
}

u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors) {
      if (pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root");
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly add(const Poly& f, const Poly& g, u64 p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = add(r[i], g[i], p);
  trim(r);
  return r;
}

Poly sub(const Poly& f, const Poly& g, u64 p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = sub(r[i], g[i], p);
  trim(r);
  return r;
}

Poly mul(const Poly& f, const Poly& g, u64 p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f[i]) continue;
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + f[i] * g[j]) % p;
  }
  trim(r);
  return r;
}

Poly scale(const Poly& f, u64 c, u64 p) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mul(f[i], c, p);
  trim(r);
  return r;
}

void divmod(const Poly& f, const Poly& g, Poly& q, Poly& r, u64 p) {
  if (g.empty()) throw InternalError("polynomial division by zero");
  r = f;
  if (f.size() < g.size()) {
    q.clear();
    return;
  }
  q.assign(f.size() - g.size() + 1, 0);
  const u64 lead_inv = inv(g.back(), p);
  for (std::size_t k = f.size() - 1;; --k) {
    const u64 c = mul(r[k], lead_inv, p);
    const std::size_t shift = k - (g.size() - 1);
    q[shift] = c;
    if (c) {
      for (std::size_t j = 0; j < g.size(); ++j) r[shift + j] = sub(r[shift + j], mul(c, g[j], p), p);
    }
    if (k == g.size() - 1) break;
  }
  trim(q);
  trim(r);
}

Poly rem(const Poly& f, const Poly& g, u64 p) {
  Poly q, r;
  divmod(f, g, q, r, p);
  return r;
}

Poly monic(const Poly& f, u64 p) {
  if (f.empty()) return f;
  return scale(f, inv(f.back(), p), p);
}

Poly gcd(Poly f, Poly g, u64 p) {
  while (!g.empty()) {
    Poly r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f, p);
}

Poly ext_gcd(const Poly& f, const Poly& g, Poly& s, Poly& t, u64 p) {
  Poly r0 = f, r1 = g;
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r, p);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = {};
    t = {};
    return r0;
  }
  const u64 c = inv(r0.back(), p);
  s = scale(s0, c, p);
  t = scale(t0, c, p);
  return scale(r0, c, p);
}

Poly derivative(const Poly& f, u64 p) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mul(f[i], i % p, p);
  trim(d);
  return d;
}

u64 eval(const Poly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, x, p), f[i], p);
  return acc;
}

Poly powmod(const Poly& base, u64 e, const Poly& m, u64 p) {
  Poly result = rem(Poly{1}, m, p);
  Poly b = rem(base, m, p);
  while (e) {
    if (e & 1) result = rem(mul(result, b, p), m, p);
    e >>= 1;
    if (e) b = rem(mul(b, b, p), m, p);
  }
  return result;
}

bool is_squarefree(const Poly& f, u64 p) {
  if (f.size() <= 1) return true;
  Poly d = derivative(f, p);
  if (d.empty()) return false;
  return degree(gcd(f, d, p)) == 0;
}

bool splits_completely(const Poly& f, u64 p) {
  if (f.empty()) return false;
  if (f.size() == 1) return true;
  Poly tp = powmod(Poly{0, 1}, p, f, p);
  return tp == rem(Poly{0, 1}, f, p) && is_squarefree(f, p);
}

namespace {

// Splits a monic squarefree product of distinct degree-d irreducibles.
void equal_degree_split(const Poly& f, int d, u64 p, std::mt19937_64& rng, std::vector<Poly>& out) {
  const int n = degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  for (;;) {
    Poly a(static_cast<std::size_t>(n));
    std::uniform_int_distribution<u64> dist(0, p - 1);
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly g;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      Poly tr = a, cur = a;
      for (int i = 1; i < d; ++i) {
        cur = rem(mul(cur, cur, p), f, p);
        tr = add(tr, cur, p);
      }
      g = gcd(f, tr, p);
    } else {
      // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
      Poly norm = a, frob = a;
      for (int i = 1; i < d; ++i) {
        frob = powmod(frob, p, f, p);
        norm = rem(mul(norm, frob, p), f, p);
      }
      Poly h = powmod(norm, (p - 1) / 2, f, p);
      g = gcd(f, sub(h, Poly{1}, p), p);
    }
    if (degree(g) > 0 && degree(g) < n) {
      Poly q, r;
      divmod(f, g, q, r, p);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(monic(q, p), d, p, rng, out);
      return;
    }
  }
}

bool poly_less(const Poly& x, const Poly& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

}  // namespace

std::vector<u64> roots(const Poly& f, u64 p) {
  Poly g = monic(f, p);
  if (degree(g) < 1) return {};
  // Product of the distinct linear factors: gcd(f, t^p - t).
  Poly tp = powmod(Poly{0, 1}, p, g, p);
  Poly lin = gcd(g, sub(tp, Poly{0, 1}, p), p);
  std::vector<u64> out;
  if (degree(lin) < 1) return out;
  if (p < 64) {
    for (u64 x = 0; x < p; ++x)
      if (eval(lin, x, p) == 0) out.push_back(x);
    return out;
  }
  std::mt19937_64 rng(0x5eedULL ^ p);
  std::vector<Poly> factors;
  equal_degree_split(lin, 1, p, rng, factors);
  for (const auto& fac : factors) out.push_back(neg(fac[0], p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Poly> factor_squarefree(const Poly& f, u64 p) {
  Poly rest = monic(f, p);
  std::vector<Poly> out;
  std::mt19937_64 rng(0xfac7ULL ^ p);
  Poly xpow{0, 1};  // t^(p^d) mod rest
  for (int d = 1; 2 * d <= degree(rest); ++d) {
    xpow = powmod(xpow, p, rest, p);
    Poly g = gcd(rest, sub(xpow, Poly{0, 1}, p), p);
    if (degree(g) > 0) {
      std::vector<Poly> parts;
      equal_degree_split(g, d, p, rng, parts);
      out.insert(out.end(), parts.begin(), parts.end());
      Poly q, r;
      divmod(rest, g, q, r, p);
      rest = monic(q, p);
      xpow = rem(xpow, rest, p);
    }
  }
  if (degree(rest) > 0) out.push_back(rest);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

Poly charpoly(std::vector<u64> a, std::size_t n, u64 p) {
  // Reduce to upper Hessenberg form by similarity, then use the standard recurrence.
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return a[i * n + j]; };
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t piv = m;
    while (piv < n && at(piv, m - 1) == 0) ++piv;
    if (piv == n) continue;
    if (piv != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(m, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, m));
    }
    const u64 pinv = inv(at(m, m - 1), p);
    for (std::size_t i = m + 1; i < n; ++i) {
      const u64 f = mul(at(i, m - 1), pinv, p);
      if (!f) continue;
      for (std::size_t j = 0; j < n; ++j) at(i, j) = sub(at(i, j), mul(f, at(m, j), p), p);
      for (std::size_t r = 0; r < n; ++r) at(r, m) = add(at(r, m), mul(f, at(r, i), p), p);
    }
  }
  // chi_k = (t - h_kk) chi_{k-1} - sum_{i<k} h_ik (prod_{j=i+1..k} h_{j,j-1}) chi_{i-1}
  std::vector<Poly> chi(n + 1);
  chi[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t kk = k - 1;
    Poly cur = mul(Poly{neg(at(kk, kk), p), 1}, chi[k - 1], p);
    u64 prod = 1;
    for (std::size_t i = kk; i-- > 0;) {
      prod = mul(prod, at(i + 1, i), p);
      if (!prod) break;
      const u64 c = mul(at(i, kk), prod, p);
      if (c) cur = sub(cur, scale(chi[i], c, p), p);
    }
    chi[k] = std::move(cur);
  }
  return chi[n];
}

std::vector<std::vector<u64>> kernel(std::vector<u64> a, std::size_t rows, std::size_t cols, u64 p) {
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return a[i * cols + j]; };
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const u64 s = inv(at(r, c), p);
    for (std::size_t j = 0; j < cols; ++j) at(r, j) = mul(at(r, j), s, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const u64 f = at(i, c);
      for (std::size_t j = 0; j < cols; ++j) at(i, j) = sub(at(i, j), mul(f, at(r, j), p), p);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<u64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = neg(at(i, free), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace parker::modp
