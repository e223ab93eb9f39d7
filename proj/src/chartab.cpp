#include "parker/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "parker/error.hpp"
#include "parker/modp.hpp"

namespace parker {

using modp::u64;

std::vector<ClassMatrix> class_matrices(const GroupTable& group) {
  const auto& classes = group.classes();
  const std::size_t r = classes.size();
  std::vector<ClassMatrix> m(r, ClassMatrix(r, std::vector<std::int64_t>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t target = classes[k].representative;
    for (std::size_t u = 0; u < group.order(); ++u) {
      // v = u^-1 rep_k, so that u v = rep_k
      const std::size_t v = group.mul(group.inv(u), target);
      ++m[group.class_of(u)][group.class_of(v)][k];
    }
  }
  return m;
}

namespace {

constexpr int kMaxPrimeAttempts = 64;

// A subspace of F_p^r spanned by `basis` (each an r-vector) with
// basis[c][pivots[c']] = delta_{c c'}.
struct Subspace {
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> pivots;
};

Subspace echelon(std::vector<std::vector<u64>> vecs, std::size_t r, u64 p) {
  Subspace s;
  std::size_t row = 0;
  for (std::size_t c = 0; c < r && row < vecs.size(); ++c) {
    std::size_t piv = row;
    while (piv < vecs.size() && vecs[piv][c] == 0) ++piv;
    if (piv == vecs.size()) continue;
    std::swap(vecs[piv], vecs[row]);
    const u64 sc = modp::inv(vecs[row][c], p);
    for (auto& x : vecs[row]) x = modp::mul(x, sc, p);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (i == row || vecs[i][c] == 0) continue;
      const u64 f = vecs[i][c];
      for (std::size_t j = 0; j < r; ++j) vecs[i][j] = modp::sub(vecs[i][j], modp::mul(f, vecs[row][j], p), p);
    }
    s.pivots.push_back(c);
    ++row;
  }
  vecs.resize(row);
  s.basis = std::move(vecs);
  return s;
}

// Common eigenvectors of the class matrices mod p, normalized so the identity
// coordinate is 1. nullopt when the prime does not separate the characters.
std::optional<std::vector<std::vector<u64>>> common_eigenvectors(const std::vector<ClassMatrix>& mats,
                                                                 u64 p) {
  const std::size_t r = mats.size();
  std::vector<std::vector<u64>> ident(r, std::vector<u64>(r, 0));
  for (std::size_t i = 0; i < r; ++i) ident[i][i] = 1;
  std::vector<Subspace> spaces{echelon(ident, r, p)};

  for (std::size_t ci = 0; ci < r; ++ci) {
    bool all_split = std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; });
    if (all_split) break;
    std::vector<std::vector<u64>> mat(r, std::vector<u64>(r));
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) mat[j][k] = modp::reduce(mats[ci][j][k], p);

    std::vector<Subspace> next;
    for (auto& space : spaces) {
      const std::size_t d = space.basis.size();
      if (d == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Restriction A (d x d) with M B = B A, read off at the pivot rows.
      std::vector<u64> a(d * d);
      for (std::size_t c = 0; c < d; ++c) {
        std::vector<u64> y(r, 0);
        for (std::size_t j = 0; j < r; ++j) {
          u64 acc = 0;
          for (std::size_t k = 0; k < r; ++k) acc = (acc + mat[j][k] * space.basis[c][k]) % p;
          y[j] = acc;
        }
        for (std::size_t rr = 0; rr < d; ++rr) a[rr * d + c] = y[space.pivots[rr]];
      }
      const auto eigen = modp::roots(modp::charpoly(a, d, p), p);
      std::size_t total = 0;
      for (u64 lambda : eigen) {
        std::vector<u64> shifted = a;
        for (std::size_t i = 0; i < d; ++i) shifted[i * d + i] = modp::sub(shifted[i * d + i], lambda, p);
        auto ker = modp::kernel(std::move(shifted), d, d, p);
        std::vector<std::vector<u64>> vecs;
        for (const auto& kv : ker) {
          std::vector<u64> v(r, 0);
          for (std::size_t c = 0; c < d; ++c) {
            if (!kv[c]) continue;
            for (std::size_t j = 0; j < r; ++j) v[j] = (v[j] + kv[c] * space.basis[c][j]) % p;
          }
          vecs.push_back(std::move(v));
        }
        total += vecs.size();
        next.push_back(echelon(std::move(vecs), r, p));
      }
      if (total != d) return std::nullopt;
    }
    spaces = std::move(next);
  }

  std::vector<std::vector<u64>> out;
  for (auto& s : spaces) {
    if (s.basis.size() != 1) return std::nullopt;
    auto v = s.basis.front();
    if (v[0] == 0) return std::nullopt;
    const u64 sc = modp::inv(v[0], p);
    for (auto& x : v) x = modp::mul(x, sc, p);
    out.push_back(std::move(v));
  }
  return out;
}

struct Attempt {
  std::vector<std::vector<CycloNum>> rows;
  std::vector<std::uint64_t> degrees;
};

std::optional<Attempt> attempt_with_prime(const GroupTable& group, const std::vector<ClassMatrix>& mats, u64 p) {
  const auto& classes = group.classes();
  const std::size_t r = classes.size();
  const std::uint64_t e = group.exponent();
  const std::uint64_t order = group.order();

  auto omegas = common_eigenvectors(mats, p);
  if (!omegas || omegas->size() != r) return std::nullopt;

  std::vector<std::size_t> inverse_class(r);
  std::vector<u64> class_size(r);
  for (std::size_t k = 0; k < r; ++k) {
    inverse_class[k] = group.class_of(group.inv(classes[k].representative));
    class_size[k] = classes[k].members.size();
  }

  const u64 z = modp::pow(modp::primitive_root(p), (p - 1) / e, p);
  const auto max_degree = static_cast<u64>(std::sqrt(static_cast<double>(order))) + 1;

  Attempt out;
  for (const auto& omega : *omegas) {
    u64 s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      s = modp::add(s, modp::mul(modp::mul(omega[k], omega[inverse_class[k]], p), modp::inv(class_size[k] % p, p), p), p);
    }
    if (s == 0) return std::nullopt;
    const u64 d2 = modp::mul(order % p, modp::inv(s, p), p);
    u64 deg = 0;
    for (u64 d = 1; d <= max_degree && d * d <= order; ++d) {
      if (d * d % p == d2) {
        deg = d;
        break;
      }
    }
    if (deg == 0 || order % deg != 0) return std::nullopt;

    std::vector<u64> chi(r);
    for (std::size_t k = 0; k < r; ++k) {
      chi[k] = modp::mul(modp::mul(omega[k], deg, p), modp::inv(class_size[k] % p, p), p);
    }

    std::vector<CycloNum> row;
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t g = classes[k].representative;
      const std::uint64_t o = group.element_order(g);
      const u64 zo = modp::pow(z, e / o, p);
      const u64 zo_inv = modp::inv(zo, p);
      const u64 o_inv = modp::inv(o % p, p);
      std::vector<u64> powers_chi(o);
      for (std::uint64_t s2 = 0; s2 < o; ++s2) {
        powers_chi[s2] = chi[group.class_of(group.pow(g, static_cast<std::int64_t>(s2)))];
      }
      CycloNum value = CycloNum::rational(0, e);
      u64 total = 0;
      for (std::uint64_t l = 0; l < o; ++l) {
        // multiplicity of zeta_o^l as an eigenvalue of the representing matrix
        const u64 step = modp::pow(zo_inv, l, p);
        u64 acc = 0, w = 1;
        for (std::uint64_t s2 = 0; s2 < o; ++s2) {
          acc = modp::add(acc, modp::mul(powers_chi[s2], w, p), p);
          w = modp::mul(w, step, p);
        }
        const u64 mult = modp::mul(acc, o_inv, p);
        if (mult > deg) return std::nullopt;
        total += mult;
        if (mult) {
          value = value + mpq_class(static_cast<unsigned long>(mult)) *
                              root_of_unity(static_cast<std::int64_t>(l * (e / o)), e);
        }
      }
      if (total != deg) return std::nullopt;
      row.push_back(std::move(value));
    }
    out.rows.push_back(std::move(row));
    out.degrees.push_back(deg);
  }
  return out;
}

bool is_trivial_row(const std::vector<CycloNum>& row) {
  for (const auto& v : row)
    if (!(v.is_rational() && v.rational_value() == 1)) return false;
  return true;
}

}  // namespace

CharacterTable character_table(const GroupTable& group, std::size_t cap) {
  if (group.order() > cap) throw SizeError("chartab_cap", cap, group.order());
  const auto mats = class_matrices(group);
  const std::uint64_t e = group.exponent();
  const std::uint64_t order = group.order();

  std::uint64_t lower = 2;
  while (lower * lower <= 4 * order) ++lower;  // p > 2 sqrt|G|

  u64 p = modp::next_prime_in_progression(lower, 1, e);
  for (int attempt = 0; attempt < kMaxPrimeAttempts; ++attempt) {
    auto result = attempt_with_prime(group, mats, p);
    if (result) {
      CharacterTable t;
      t.group_ = &group;
      t.conductor_ = normalize_conductor(e);
      t.prime_ = p;
      std::vector<std::size_t> perm(result->rows.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) {
        const bool tx = is_trivial_row(result->rows[x]);
        const bool ty = is_trivial_row(result->rows[y]);
        if (tx != ty) return tx;
        if (result->degrees[x] != result->degrees[y]) return result->degrees[x] < result->degrees[y];
        const auto& rx = result->rows[x];
        const auto& ry = result->rows[y];
        for (std::size_t k = 0; k < rx.size(); ++k) {
          auto c = lex_compare(rx[k], ry[k]);
          if (c != 0) return c < 0;
        }
        return false;
      });
      for (auto i : perm) {
        t.rows_.push_back(std::move(result->rows[i]));
        t.degrees_.push_back(result->degrees[i]);
      }
      std::uint64_t sum_sq = 0;
      for (auto d : t.degrees_) sum_sq += d * d;
      if (sum_sq == order && is_trivial_row(t.rows_.front()) && rows_orthogonal(t) && columns_orthogonal(t)) {
        return t;
      }
    }
    p = modp::next_prime_in_progression(p + 1, 1, e);
  }
  throw InternalError("character table: no prime produced a consistent table");
}

std::vector<CycloNum> char_values_at(const CharacterTable& table, const Perm& g) {
  const std::size_t cls = table.group().class_of(table.group().index_of(g));
  std::vector<CycloNum> col;
  for (const auto& row : table.rows()) col.push_back(row[cls]);
  return col;
}

bool rows_orthogonal(const CharacterTable& table) {
  const auto& classes = table.group().classes();
  const std::uint64_t n = table.conductor();
  const std::size_t r = table.size();
  std::vector<std::vector<CycloNum>> conj_rows;
  for (const auto& row : table.rows()) {
    std::vector<CycloNum> c;
    for (const auto& v : row) c.push_back(conj(v));
    conj_rows.push_back(std::move(c));
  }
  const CycloNum zero = CycloNum::rational(0, n);
  const CycloNum order = CycloNum::rational(static_cast<unsigned long>(table.group().order()), n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      CycloNum acc = zero;
      for (std::size_t k = 0; k < classes.size(); ++k) {
        acc = acc + mpq_class(static_cast<unsigned long>(classes[k].members.size())) * (table.row(i)[k] * conj_rows[j][k]);
      }
      if (!(acc == (i == j ? order : zero))) return false;
    }
  }
  return true;
}

bool columns_orthogonal(const CharacterTable& table) {
  const auto& classes = table.group().classes();
  const std::uint64_t n = table.conductor();
  const std::size_t r = classes.size();
  const CycloNum zero = CycloNum::rational(0, n);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t l = 0; l < r; ++l) {
      CycloNum acc = zero;
      for (const auto& row : table.rows()) acc = acc + row[k] * conj(row[l]);
      const CycloNum expected =
          k == l ? CycloNum::rational(mpq_class(static_cast<unsigned long>(table.group().order()),
                                                static_cast<unsigned long>(classes[k].members.size())),
                                      n)
                 : zero;
      if (!(acc == expected)) return false;
    }
  }
  return true;
}

}  // namespace parker
