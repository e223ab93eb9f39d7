#include "parker/zfactor.hpp"

#include <algorithm>
#include <cstdint>

#include "parker/error.hpp"
#include "parker/modp.hpp"

namespace parker {

namespace {

using ZPoly = std::vector<mpz_class>;  // ascending

void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void reduce_mod(ZPoly& f, const mpz_class& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(f);
}

ZPoly zadd(const ZPoly& f, const ZPoly& g, const mpz_class& m) {
  ZPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] += g[i];
  reduce_mod(r, m);
  return r;
}

ZPoly zsub(const ZPoly& f, const ZPoly& g, const mpz_class& m) {
  ZPoly r(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] -= g[i];
  reduce_mod(r, m);
  return r;
}

ZPoly zmul(const ZPoly& f, const ZPoly& g, const mpz_class& m) {
  if (f.empty() || g.empty()) return {};
  ZPoly r(f.size() + g.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] += f[i] * g[j];
  reduce_mod(r, m);
  return r;
}

// Division by a monic h modulo m.
void zdivmod(const ZPoly& f, const ZPoly& h, ZPoly& q, ZPoly& r, const mpz_class& m) {
  r = f;
  reduce_mod(r, m);
  q.clear();
  if (r.size() < h.size()) return;
  q.assign(r.size() - h.size() + 1, 0);
  for (std::size_t k = r.size(); k-- >= h.size();) {
    const mpz_class c = r[k] % m;
    q[k - h.size() + 1] = c;
    if (c != 0)
      for (std::size_t i = 0; i < h.size(); ++i) r[k - h.size() + 1 + i] -= c * h[i];
    if (k == h.size() - 1) break;
  }
  r.resize(h.size() - 1);
  reduce_mod(r, m);
  reduce_mod(q, m);
}

ZPoly from_modp(const modp::Poly& f) {
  ZPoly r;
  for (auto c : f) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// Symmetric representative in (-m/2, m/2].
ZPoly symmetric(ZPoly f, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : f)
    if (c > half) c -= m;
  return f;
}

struct HenselState {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2 (von zur Gathen-Gerhard 15.10).
void hensel_step(const ZPoly& f, HenselState& st, const mpz_class& m) {
  const mpz_class m2 = m * m;
  ZPoly e = zsub(f, zmul(st.g, st.h, m2), m2);
  ZPoly q, r;
  zdivmod(zmul(st.s, e, m2), st.h, q, r, m2);
  ZPoly g2 = zadd(zadd(st.g, zmul(st.t, e, m2), m2), zmul(q, st.g, m2), m2);
  ZPoly h2 = zadd(st.h, r, m2);
  ZPoly b = zsub(zadd(zmul(st.s, g2, m2), zmul(st.t, h2, m2), m2), ZPoly{1}, m2);
  ZPoly c, d;
  zdivmod(zmul(st.s, b, m2), h2, c, d, m2);
  st.s = zsub(st.s, d, m2);
  st.t = zsub(zsub(st.t, zmul(st.t, b, m2), m2), zmul(c, g2, m2), m2);
  st.g = std::move(g2);
  st.h = std::move(h2);
}

// Lifts f = prod(factors) mod p to modulus `target` = p^(2^k).
std::vector<ZPoly> multifactor_lift(ZPoly f, const std::vector<modp::Poly>& factors, std::uint64_t p,
                                    const mpz_class& target) {
  std::vector<ZPoly> out;
  reduce_mod(f, target);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    modp::Poly rest{1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = modp::mul(rest, factors[j], p);
    modp::Poly s, t;
    const modp::Poly one = modp::ext_gcd(factors[i], rest, s, t, p);
    if (one != modp::Poly{1}) throw InternalError("modular factors are not coprime");
    HenselState st{from_modp(factors[i]), from_modp(rest), from_modp(s), from_modp(t)};
    mpz_class m = p;
    while (m < target) {
      hensel_step(f, st, m);
      m *= m;
    }
    out.push_back(st.g);
    f = st.h;
  }
  out.push_back(f);
  return out;
}

ZPoly integral_coeffs(const RatPoly& f) {
  ZPoly r;
  for (const auto& c : f.coeffs()) r.push_back(c.get_num());
  return r;
}

RatPoly to_ratpoly(const ZPoly& f) {
  std::vector<mpq_class> c;
  for (const auto& x : f) c.emplace_back(x);
  return RatPoly(std::move(c));
}

// Exact division of monic integer polynomials over Z; false if g does not divide f.
bool divides_exactly(const ZPoly& f, const ZPoly& g, ZPoly& quotient) {
  if (g.size() > f.size()) return false;
  ZPoly r = f;
  quotient.assign(f.size() - g.size() + 1, 0);
  for (std::size_t k = r.size(); k-- >= g.size();) {
    const mpz_class c = r[k];
    quotient[k - g.size() + 1] = c;
    if (c != 0)
      for (std::size_t i = 0; i < g.size(); ++i) r[k - g.size() + 1 + i] -= c * g[i];
    if (k == g.size() - 1) break;
  }
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

}  // namespace

std::vector<RatPoly> factor_over_q(const RatPoly& f) {
  if (f.degree() < 1 || !f.is_monic() || !f.is_integral()) throw InputError("factor_over_q needs a monic integral polynomial");
  if (derivative(f).is_zero() || gcd(f, derivative(f)).degree() > 0) throw InputError("factor_over_q needs a squarefree polynomial");
  if (f.degree() == 1) return {f};

  const ZPoly fz = integral_coeffs(f);
  const std::size_t n = fz.size() - 1;

  // Choose the good prime with fewest modular factors among the first few.
  std::uint64_t best_p = 0;
  std::vector<modp::Poly> best;
  int good_seen = 0;
  for (std::uint64_t p = 3; good_seen < 8; p += 2) {
    if (!modp::is_prime(p)) continue;
    modp::Poly fp;
    for (const auto& c : fz) {
      mpz_class r = c % p;
      if (r < 0) r += p;
      fp.push_back(r.get_ui());
    }
    modp::trim(fp);
    if (modp::degree(fp) != static_cast<int>(n) || !modp::is_squarefree(fp, p)) continue;
    ++good_seen;
    auto facs = modp::factor_squarefree(fp, p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  // Any monic factor of degree k <= n has |coeff| <= C(k, i) R^i <= (1 + R)^n,
  // with R a bound on the moduli of the roots.
  mpz_class root_bound = 0;
  for (std::size_t i = 0; i < n; ++i) root_bound = std::max(root_bound, mpz_class(abs(fz[i])));
  root_bound += 1;
  mpz_class coeff_bound;
  mpz_pow_ui(coeff_bound.get_mpz_t(), mpz_class(root_bound + 1).get_mpz_t(), n);
  mpz_class target = best_p;
  while (target <= 2 * coeff_bound) target *= target;

  std::vector<ZPoly> lifted = multifactor_lift(fz, best, best_p, target);
  // Each lifted factor is monic; keep them reduced mod target.

  std::vector<RatPoly> result;
  ZPoly rest = fz;
  std::vector<ZPoly> pool = lifted;
  for (std::size_t k = 1; 2 * k <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      ZPoly prod{1};
      for (auto i : idx) prod = zmul(prod, pool[i], target);
      ZPoly cand = symmetric(prod, target);
      ZPoly quotient;
      if (divides_exactly(rest, cand, quotient)) {
        result.push_back(to_ratpoly(cand));
        rest = std::move(quotient);
        for (std::size_t i = k; i-- > 0;) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx[i]));
        found = true;
        break;
      }
      // next combination
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++k;
  }
  if (rest.size() > 1) result.push_back(to_ratpoly(rest));

  std::sort(result.begin(), result.end(), [](const RatPoly& x, const RatPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return std::lexicographical_compare(x.coeffs().begin(), x.coeffs().end(), y.coeffs().begin(), y.coeffs().end());
  });
  return result;
}

}  // namespace parker
