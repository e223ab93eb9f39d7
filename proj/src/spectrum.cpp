#include "parker/spectrum.hpp"

#include <functional>

#include "crt.hpp"
#include "parker/error.hpp"
#include "parker/modp.hpp"

namespace parker {

namespace {

using modp::u64;

// Primes just below 2^31, descending; products of two residues fit in 64 bits.
class PrimeStream {
 public:
  u64 next() { return p_ = modp::prev_prime(p_); }

 private:
  u64 p_ = 1ULL << 31;
};

// Minimal annihilating polynomial of v0 under `apply`, monic, over F_p.
// Incremental elimination keeps each stored vector reduced against earlier
// pivots, together with the polynomial that produced it.
modp::Poly krylov_annihilator(std::vector<u64> v, const std::function<void(const std::vector<u64>&, std::vector<u64>&)>& apply,
                              u64 p) {
  struct Row {
    std::vector<u64> vec;
    std::size_t pivot;
    modp::Poly comb;
  };
  std::vector<Row> rows;
  std::vector<u64> next(v.size());
  for (std::size_t k = 0;; ++k) {
    std::vector<u64> w = v;
    modp::Poly comb(k + 1, 0);
    comb[k] = 1;
    for (const auto& r : rows) {
      const u64 c = w[r.pivot];
      if (!c) continue;
      const u64 nc = modp::neg(c, p);
      for (std::size_t i = 0; i < w.size(); ++i)
        if (r.vec[i]) w[i] = (w[i] + nc * r.vec[i]) % p;
      for (std::size_t i = 0; i < r.comb.size(); ++i) comb[i] = (comb[i] + nc * r.comb[i]) % p;
    }
    std::size_t pivot = 0;
    while (pivot < w.size() && w[pivot] == 0) ++pivot;
    if (pivot == w.size()) return comb;
    const u64 s = modp::inv(w[pivot], p);
    for (auto& c : w) c = modp::mul(c, s, p);
    for (auto& c : comb) c = modp::mul(c, s, p);
    rows.push_back({std::move(w), pivot, std::move(comb)});
    apply(v, next);
    v.swap(next);
  }
}

RatPoly poly_from_integers(const std::vector<mpz_class>& c) {
  std::vector<mpq_class> q;
  for (const auto& x : c) q.emplace_back(x);
  return RatPoly(std::move(q));
}

std::vector<u64> padded(const modp::Poly& f, std::size_t len) {
  std::vector<u64> out(f.begin(), f.end());
  out.resize(len, 0);
  return out;
}

mpz_class power(std::uint64_t base, std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Sparse integer matrix by rows: (column, value) pairs.
using SparseRows = std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>;

// Entries are positive and at most |G| per row in total, so with p < 2^31 a
// row sum stays far below 2^64 and needs a single reduction.
void sparse_apply_mod(const SparseRows& rows, const std::vector<u64>& x, std::vector<u64>& y, u64 p) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    u64 acc = 0;
    for (const auto& [c, v] : rows[r]) acc += static_cast<u64>(v) * x[c];
    y[r] = acc % p;
  }
}

// Recovers the minimal polynomial from per-prime annihilators. `compute(p)`
// returns the polynomial over F_p; degree drops mean an unlucky prime. The
// candidate is accepted once `certified(candidate, modulus)` holds.
RatPoly multimodular_min_poly(const std::function<modp::Poly(u64)>& compute,
                              const std::function<bool(const std::vector<mpz_class>&, const mpz_class&)>& certified,
                              const char* what) {
  PrimeStream primes;
  detail::CrtAccumulator crt;
  int best_degree = -1;
  for (int attempt = 0; attempt < 4096; ++attempt) {
    const u64 p = primes.next();
    const modp::Poly f = compute(p);
    const int deg = modp::degree(f);
    if (deg < best_degree) continue;
    if (deg > best_degree) {
      best_degree = deg;
      crt.reset();
    }
    crt.add(padded(f, static_cast<std::size_t>(deg) + 1), p);
    const auto coeffs = crt.symmetric();
    if (certified(coeffs, crt.modulus())) return poly_from_integers(coeffs);
  }
  throw InternalError(std::string(what) + ": multimodular reconstruction did not certify");
}

}  // namespace

AlgebraElement::AlgebraElement(const GroupTable& group, std::map<ElementPair, std::int64_t> support)
    : group_(&group), support_(std::move(support)) {
  for (const auto& [pair, c] : support_) {
    if (pair.first >= group.order() || pair.second >= group.order())
      throw InputError("algebra element refers to an index outside the group");
    if (c == 0) throw InputError("algebra element support holds a zero coefficient");
  }
}

std::int64_t AlgebraElement::coefficient_sum() const {
  std::int64_t s = 0;
  for (const auto& [pair, c] : support_) s += c;
  return s;
}

AlgebraElement parker_element(const Dessin& d, const GroupTable& group) {
  const std::size_t ia = group.index_of(d.a());
  const std::size_t ib = group.index_of(d.b());
  std::map<ElementPair, std::int64_t> support;
  for (std::size_t g = 0; g < group.order(); ++g) ++support[{group.conj(ia, g), group.conj(ib, g)}];
  return AlgebraElement(group, std::move(support));
}

DenseMatrix dense_action_matrix(const AlgebraElement& x, std::size_t dense_cap) {
  const GroupTable& g = x.group();
  const std::size_t n = g.order();
  if (n > dense_cap) throw SizeError("dense_cap", dense_cap, n);
  DenseMatrix m;
  m.dim = n * n;
  m.entries.assign(m.dim * m.dim, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (const auto& [st, c] : x.support())
        m.at(pair_index(g.mul(st.first, u), g.mul(st.second, v), n), pair_index(u, v, n)) += c;
  return m;
}

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Auto: return "auto";
    case Strategy::Dense: return "dense";
    case Strategy::Krylov: return "krylov";
  }
  return "?";
}

Strategy parse_strategy(const std::string& text) {
  if (text == "auto") return Strategy::Auto;
  if (text == "dense") return Strategy::Dense;
  if (text == "krylov") return Strategy::Krylov;
  throw InputError("unknown strategy '" + text + "' (expected auto, dense or krylov)");
}

Strategy resolve_strategy(Strategy requested, std::size_t group_order, const Caps& caps) {
  switch (requested) {
    case Strategy::Dense:
      if (group_order > caps.dense_cap) throw SizeError("dense_cap", caps.dense_cap, group_order);
      return Strategy::Dense;
    case Strategy::Krylov:
      if (group_order > caps.krylov_cap) throw SizeError("krylov_cap", caps.krylov_cap, group_order);
      return Strategy::Krylov;
    case Strategy::Auto:
      if (group_order <= caps.dense_cap) return Strategy::Dense;
      if (group_order <= caps.krylov_cap) return Strategy::Krylov;
      throw SizeError("krylov_cap", caps.krylov_cap, group_order);
  }
  throw InternalError("unhandled strategy");
}

RatPoly min_poly_dense(const AlgebraElement& x, std::size_t dense_cap) {
  const DenseMatrix m = dense_action_matrix(x, dense_cap);
  const std::size_t dim = m.dim;
  const std::uint64_t order = x.group().order();

  SparseRows rows(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (m.at(r, c)) rows[r].push_back({c, m.at(r, c)});

  auto compute = [&](u64 p) {
    auto apply = [&](const std::vector<u64>& in, std::vector<u64>& out) { sparse_apply_mod(rows, in, out, p); };
    modp::Poly f{1};
    std::vector<u64> y(dim), tmp(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      // y = f(M) e_i by Horner.
      std::fill(y.begin(), y.end(), 0);
      y[i] = f.back();
      for (std::size_t k = f.size() - 1; k-- > 0;) {
        apply(y, tmp);
        tmp[i] = modp::add(tmp[i], f[k], p);
        y.swap(tmp);
      }
      bool zero = true;
      for (auto c : y)
        if (c) {
          zero = false;
          break;
        }
      if (zero) continue;
      std::vector<u64> e(dim, 0);
      e[i] = 1;
      const modp::Poly g = krylov_annihilator(std::move(e), apply, p);
      modp::Poly q, r;
      modp::divmod(g, modp::gcd(f, g, p), q, r, p);
      f = modp::mul(f, q, p);
    }
    return f;
  };

  // Each accepted prime has f(M) = 0 mod p. Entries of f(M) are bounded by
  // B = sum |f_k| |G|^k (column sums of M equal |G|), so f(M) = 0 over Z once
  // the modulus exceeds 2B; then the minimal polynomial divides f and, having
  // degree at least deg f, equals it.
  auto certified = [&](const std::vector<mpz_class>& c, const mpz_class& modulus) {
    const std::size_t d = c.size() - 1;
    if (modulus <= 2 * power(2 * order, d)) return false;
    mpz_class bound = 0, pw = 1;
    for (const auto& ck : c) {
      bound += abs(ck) * pw;
      pw *= order;
    }
    return modulus > 2 * bound;
  };
  return multimodular_min_poly(compute, certified, "min_poly_dense");
}

RatPoly min_poly_krylov(const AlgebraElement& x, std::size_t krylov_cap) {
  const GroupTable& g = x.group();
  const std::size_t n = g.order();
  if (n > krylov_cap) throw SizeError("krylov_cap", krylov_cap, n);

  // Orbits of G on G x G under simultaneous conjugation.
  std::vector<std::size_t> gens;
  for (const auto& h : g.generators()) gens.push_back(g.index_of(h));
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit(n * n, kUnset);
  std::vector<ElementPair> reps;
  std::vector<ElementPair> stack;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (orbit[pair_index(u, v, n)] != kUnset) continue;
      const std::size_t id = reps.size();
      reps.push_back({u, v});
      orbit[pair_index(u, v, n)] = id;
      stack.push_back({u, v});
      while (!stack.empty()) {
        const auto [s, t] = stack.back();
        stack.pop_back();
        for (auto h : gens) {
          const std::size_t s2 = g.conj(s, h), t2 = g.conj(t, h);
          auto& slot = orbit[pair_index(s2, t2, n)];
          if (slot == kUnset) {
            slot = id;
            stack.push_back({s2, t2});
          }
        }
      }
    }

  // (x f)(w) = sum_{(s,t)} c f(s^-1 w1, t^-1 w2), read at one representative per orbit.
  const std::size_t len = reps.size();
  SparseRows rows(len);
  for (std::size_t o = 0; o < len; ++o) {
    std::map<std::size_t, std::int64_t> acc;
    for (const auto& [st, c] : x.support())
      acc[orbit[pair_index(g.mul(g.inv(st.first), reps[o].first), g.mul(g.inv(st.second), reps[o].second), n)]] += c;
    for (const auto& [col, c] : acc) rows[o].push_back({col, c});
  }
  const std::size_t start = orbit[pair_index(0, 0, n)];

  auto compute = [&](u64 p) {
    std::vector<u64> e(len, 0);
    e[start] = 1;
    return krylov_annihilator(std::move(e),
                              [&](const std::vector<u64>& in, std::vector<u64>& out) { sparse_apply_mod(rows, in, out, p); }, p);
  };

  // Coefficients of a monic factor of the characteristic polynomial are
  // bounded by (1 + |G|)^d, since every eigenvalue has modulus at most |G|.
  // The candidate is then confirmed by evaluating f(x) 1 over Z: the minimal
  // polynomial divides it and has degree at least deg f.
  auto certified = [&](const std::vector<mpz_class>& c, const mpz_class& modulus) {
    const std::size_t d = c.size() - 1;
    if (modulus <= 2 * power(n + 1, d)) return false;
    std::vector<mpz_class> w(len, 0), tmp(len);
    w[start] = c[d];
    for (std::size_t k = d; k-- > 0;) {
      for (std::size_t r = 0; r < len; ++r) {
        mpz_class acc = 0;
        for (const auto& [col, v] : rows[r])
          if (w[col] != 0) acc += w[col] * v;
        tmp[r] = std::move(acc);
      }
      w.swap(tmp);
      w[start] += c[k];
    }
    for (const auto& v : w)
      if (v != 0) return false;
    return true;
  };
  return multimodular_min_poly(compute, certified, "min_poly_krylov");
}

RatPoly min_poly_of_x(const AlgebraElement& x, Strategy strategy, const Caps& caps) {
  switch (resolve_strategy(strategy, x.group().order(), caps)) {
    case Strategy::Dense: return min_poly_dense(x, caps.dense_cap);
    case Strategy::Krylov: return min_poly_krylov(x, caps.krylov_cap);
    case Strategy::Auto: break;
  }
  throw InternalError("strategy did not resolve");
}

CheckOutcome verify_commutation(const AlgebraElement& x) {
  const GroupTable& g = x.group();
  for (const auto& h : g.generators()) {
    const std::size_t ih = g.index_of(h);
    for (const auto& [st, c] : x.support()) {
      const ElementPair image{g.conj(st.first, ih), g.conj(st.second, ih)};
      const auto it = x.support().find(image);
      if (it == x.support().end() || it->second != c)
        return {false, "conjugation by " + to_cycle_string(h) + " moves (" + to_cycle_string(g.element(st.first)) + ", " +
                           to_cycle_string(g.element(st.second)) + ") outside the support"};
    }
  }
  return {};
}

}  // namespace parker
