#include <numeric>
#include <set>

#include "parker/error.hpp"
#include "parker/modp.hpp"
#include "parker/spectrum.hpp"

namespace parker {

namespace {

modp::Poly reduce_poly(const RatPoly& f, modp::u64 p) {
  modp::Poly out;
  for (const auto& c : f.coeffs()) {
    mpz_class r = c.get_num() % p;
    if (r < 0) r += p;
    out.push_back(r.get_ui());
  }
  modp::trim(out);
  return out;
}

// A prime is good for monic integral s when s stays squarefree mod p, i.e. p
// does not divide the discriminant.
bool good_prime(const RatPoly& s, modp::u64 p, std::uint64_t n) {
  if (n % p == 0) return false;
  const modp::Poly sp = reduce_poly(s, p);
  if (sp.size() <= 1) return true;
  return modp::is_squarefree(sp, p);
}

modp::u64 good_prime_in_class(const RatPoly& s, std::uint64_t residue, std::uint64_t n, modp::u64 start) {
  for (modp::u64 q = start;;) {
    const modp::u64 p = modp::next_prime_in_progression(q, residue, n);
    if (good_prime(s, p, n)) return p;
    q = p + 1;
  }
}

bool closed(const std::set<std::uint64_t>& h, std::uint64_t n) {
  for (auto x : h)
    for (auto y : h)
      if (!h.contains(n <= 2 ? 1 : x * y % n)) return false;
  return true;
}

constexpr int kExtraIdentityPrimes = 8;

std::set<std::uint64_t> frobenius_pass(const RatPoly& s, std::uint64_t n, const std::vector<modp::u64>& start,
                                       std::vector<modp::u64>& used, std::vector<FrobeniusTest>& trace) {
  const auto units = unit_group(n);
  std::set<std::uint64_t> h;
  used.assign(units.size(), 0);
  for (std::size_t i = 0; i < units.size(); ++i) {
    const modp::u64 p = good_prime_in_class(s, units[i], n, start[i]);
    used[i] = p;
    const modp::Poly sp = reduce_poly(s, p);
    const bool splits = sp.size() <= 1 || modp::splits_completely(sp, p);
    trace.push_back({units[i], p, splits});
    if (splits) h.insert(units[i]);
  }
  return h;
}

}  // namespace

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() < 1) return p.is_zero() ? p : RatPoly{1};
  const RatPoly m = monic(p);
  // Cheap certificate: squarefree modulo a prime not dividing the leading
  // coefficient or denominators implies squarefree over Q.
  if (m.is_integral()) {
    for (modp::u64 q : {2147483647ULL, 2147483629ULL, 2147483587ULL}) {
      const modp::Poly mp = reduce_poly(m, q);
      if (modp::degree(mp) == m.degree() && modp::is_squarefree(mp, q)) return m;
    }
  }
  return monic(exact_div(m, gcd(m, derivative(m))));
}

std::vector<mpz_class> integer_roots(const RatPoly& p, std::uint64_t bound) {
  std::vector<mpz_class> out;
  if (p.degree() < 1) return out;
  const auto b = static_cast<long>(bound);
  for (long r = -b; r <= b; ++r)
    if (p(mpq_class(r)) == 0) out.emplace_back(r);
  return out;
}

Subfield field_L(const RatPoly& s, std::uint64_t n, std::vector<FrobeniusTest>* trace) {
  if (!s.is_monic() || !s.is_integral()) throw InputError("field_L needs a monic integral polynomial");
  n = normalize_conductor(n);
  const auto units = unit_group(n);
  std::vector<FrobeniusTest> local;
  std::vector<modp::u64> used;
  std::set<std::uint64_t> h = frobenius_pass(s, n, std::vector<modp::u64>(units.size(), 2), used, local);
  if (h.contains(1)) {
    // Under the containment hypothesis the splitting depends only on p mod N,
    // so a second prime per class has to reproduce the same set, and every
    // good p = 1 mod N has to split. An escaping root makes each of those
    // primes split with density at most 1/2, so the extra ones catch it.
    std::vector<modp::u64> next(used.size());
    for (std::size_t i = 0; i < used.size(); ++i) next[i] = used[i] + 1;
    std::vector<modp::u64> used2;
    const auto h2 = frobenius_pass(s, n, next, used2, local);
    bool consistent = h2 == h && closed(h, n);
    modp::u64 start = used2.front() + 1;
    for (int i = 0; consistent && i < kExtraIdentityPrimes; ++i) {
      const modp::u64 p = good_prime_in_class(s, 1, n, start);
      const modp::Poly sp = reduce_poly(s, p);
      consistent = sp.size() <= 1 || modp::splits_completely(sp, p);
      local.push_back({1, p, consistent});
      start = p + 1;
    }
    if (!consistent) {
      if (trace) *trace = local;
      throw EigenvalueFieldError("splitting pattern modulo primes is not a function of p mod " + std::to_string(n) +
                                 ": some eigenvalue is not in Q(zeta_" + std::to_string(n) + ")");
    }
  }
  if (trace) *trace = local;
  if (!h.contains(1)) {
    throw EigenvalueFieldError("the squarefree minimal polynomial does not split modulo " + std::to_string(local.front().prime) +
                               " = 1 mod " + std::to_string(n) + ": some eigenvalue is not in Q(zeta_" +
                               std::to_string(n) + ")");
  }
  return make_subfield(n, {h.begin(), h.end()});
}

Subfield field_k_power_maps(const GroupTable& group, const Perm& a, const Perm& b) {
  const std::uint64_t e = group.exponent();
  const std::size_t ia = group.index_of(a), ib = group.index_of(b);
  std::vector<std::uint64_t> h;
  for (auto j : unit_group(e)) {
    const auto k = static_cast<std::int64_t>(j);
    if (group.class_of(group.pow(ia, k)) == group.class_of(ia) && group.class_of(group.pow(ib, k)) == group.class_of(ib))
      h.push_back(j);
  }
  return make_subfield(e, std::move(h));
}

Subfield field_k_table(const CharacterTable& table, const Perm& a, const Perm& b) {
  std::vector<CycloNum> values = char_values_at(table, a);
  for (auto& v : char_values_at(table, b)) values.push_back(std::move(v));
  return stabilizer_subgroup(values, table.conductor());
}

Subfield field_k(const GroupTable& group, const Perm& a, const Perm& b, const CharacterTable* table) {
  const Subfield k = field_k_power_maps(group, a, b);
  if (table && !(field_k_table(*table, a, b) == k))
    throw InternalError("power maps and character values give different fields k");
  return k;
}

std::vector<PredictedEigenvalue> predicted_eigenvalues(const CharacterTable& table, const Perm& a, const Perm& b) {
  const std::uint64_t order = table.group().order();
  std::vector<PredictedEigenvalue> out;
  auto add = [&](const std::vector<CycloNum>& col, char which) {
    for (std::size_t i = 0; i < col.size(); ++i) {
      mpq_class scale(static_cast<unsigned long>(order), static_cast<unsigned long>(table.degree(i)));
      scale.canonicalize();
      const CycloNum v = scale * col[i];
      bool merged = false;
      for (auto& e : out)
        if (e.value == v) {
          e.sources.push_back({i, which});
          merged = true;
          break;
        }
      if (!merged) out.push_back({v, {{i, which}}});
    }
  };
  add(char_values_at(table, a), 'a');
  add(char_values_at(table, b), 'b');
  return out;
}

CheckOutcome verify_predicted_are_roots(const RatPoly& m, std::span<const PredictedEigenvalue> predicted) {
  for (const auto& e : predicted)
    if (!evaluate(m, e.value).is_zero()) return {false, "predicted eigenvalue " + e.value.to_string() + " is not a root"};
  return {};
}

std::array<bool, 3> verify_tower(const Subfield& k, const Subfield& l, const Subfield& k_exp, const Subfield& k_ord) {
  return {subfield_leq(k, l), subfield_leq(l, k_exp), subfield_leq(k_exp, k_ord)};
}

AbelianGroup galois_group_of_L(const Subfield& l) { return galois_group(l); }

std::optional<Subfield> quadratic_field(const RatPoly& f, std::uint64_t max_conductor) {
  if (f.degree() != 2 || !f.is_monic() || !f.is_integral()) throw InputError("quadratic_field: need a monic integral quadratic");
  const mpz_class b = f.coeff(1).get_num(), c = f.coeff(0).get_num();
  mpz_class disc = b * b - 4 * c;
  if (disc == 0 || mpz_perfect_square_p(disc.get_mpz_t())) throw InputError("quadratic_field: reducible quadratic");

  // Squarefree kernel of disc, keeping the sign.
  mpz_class kernel = sgn(disc) < 0 ? -1 : 1, rest = abs(disc);
  for (unsigned long p = 2; p < 1000000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned parity = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      parity ^= 1;
    }
    if (parity) kernel *= p;
  }
  if (rest != 1 && !mpz_perfect_square_p(rest.get_mpz_t())) {
    if (!mpz_probab_prime_p(rest.get_mpz_t(), 30)) return std::nullopt;
    kernel *= rest;
  }
  const mpz_class fundamental = mpz_class(kernel % 4 + 4) % 4 == 1 ? kernel : mpz_class(4 * kernel);
  const mpz_class cond = abs(fundamental);
  if (cond > max_conductor) return std::nullopt;

  const std::uint64_t n = cond.get_ui();
  std::vector<std::uint64_t> h;
  for (auto j : unit_group(n))
    if (mpz_kronecker_ui(fundamental.get_mpz_t(), j) == 1) h.push_back(j);
  return conductor_reduce(make_subfield(n, std::move(h)));
}

}  // namespace parker
