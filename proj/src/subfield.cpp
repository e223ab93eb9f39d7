#include "parker/subfield.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "parker/error.hpp"

namespace parker {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return n <= 2 ? 1 : a * b % n;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return n <= 2 ? 1 : r;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> image_mod(const std::vector<std::uint64_t>& h, std::uint64_t d) {
  std::set<std::uint64_t> img;
  for (auto x : h) img.insert(unit_residue(static_cast<std::int64_t>(x), d));
  return {img.begin(), img.end()};
}

}  // namespace

Subfield conductor_reduce(const Subfield& field) {
  const std::uint64_t n = field.conductor;
  const std::set<std::uint64_t> h(field.subgroup.begin(), field.subgroup.end());
  const auto units = unit_group(n);
  for (std::uint64_t d : divisors(n)) {
    bool contained = true;
    for (auto j : units) {
      if (unit_residue(static_cast<std::int64_t>(j), d) == 1 && !h.contains(j)) {
        contained = false;
        break;
      }
    }
    if (!contained) continue;
    Subfield out;
    out.conductor = d;
    out.subgroup = image_mod(field.subgroup, d);
    out.degree = euler_phi(d) / out.subgroup.size();
    if (out.degree * h.size() != euler_phi(n)) throw InternalError("conductor_reduce changed the degree");
    return out;
  }
  throw InternalError("conductor_reduce found no conductor");
}

Subfield make_subfield(std::uint64_t n, std::vector<std::uint64_t> subgroup) {
  if (n == 0) throw InputError("subfield conductor must be positive");
  std::set<std::uint64_t> h;
  for (auto x : subgroup) {
    const std::uint64_t r = unit_residue(static_cast<std::int64_t>(x), n);
    if (std::gcd(r, n) != 1) throw InputError("subgroup element " + std::to_string(x) + " not coprime to N");
    h.insert(r);
  }
  if (!h.contains(1)) throw InputError("subgroup must contain 1");
  for (auto x : h)
    for (auto y : h)
      if (!h.contains(mulmod(x, y, n))) throw InputError("subgroup is not closed under multiplication");
  Subfield f;
  f.conductor = normalize_conductor(n);
  f.subgroup = image_mod({h.begin(), h.end()}, f.conductor);
  f.degree = euler_phi(f.conductor) / f.subgroup.size();
  return conductor_reduce(f);
}

Subfield rational_field() { return Subfield{}; }

Subfield cyclotomic_field(std::uint64_t n) { return make_subfield(n, {1}); }

std::vector<std::uint64_t> lift_subgroup(const Subfield& field, std::uint64_t m) {
  if (m % field.conductor != 0) throw InputError("lift_subgroup: conductor must divide m");
  const std::set<std::uint64_t> h(field.subgroup.begin(), field.subgroup.end());
  std::vector<std::uint64_t> out;
  for (auto j : unit_group(m))
    if (h.contains(unit_residue(static_cast<std::int64_t>(j), field.conductor))) out.push_back(j);
  return out;
}

Subfield compositum(const Subfield& f1, const Subfield& f2) {
  const std::uint64_t m = std::lcm(f1.conductor, f2.conductor);
  const auto h1 = lift_subgroup(f1, m);
  const auto h2 = lift_subgroup(f2, m);
  std::vector<std::uint64_t> h;
  std::set_intersection(h1.begin(), h1.end(), h2.begin(), h2.end(), std::back_inserter(h));
  return conductor_reduce(make_subfield(m, std::move(h)));
}

bool subfield_leq(const Subfield& f1, const Subfield& f2) {
  const std::uint64_t m = std::lcm(f1.conductor, f2.conductor);
  const auto h1 = lift_subgroup(f1, m);
  const auto h2 = lift_subgroup(f2, m);
  return std::includes(h1.begin(), h1.end(), h2.begin(), h2.end());
}

Subfield stabilizer_subgroup(std::span<const CycloNum> values, std::uint64_t n) {
  n = normalize_conductor(n);
  std::vector<CycloNum> lifted;
  for (const auto& v : values) lifted.push_back(v.conductor() == n ? v : embed(v, n));
  std::vector<std::uint64_t> h;
  for (auto j : unit_group(n)) {
    bool fixes = true;
    for (const auto& v : lifted) {
      if (!(galois_apply(static_cast<std::int64_t>(j), v) == v)) {
        fixes = false;
        break;
      }
    }
    if (fixes) h.push_back(j);
  }
  return make_subfield(n, std::move(h));
}

std::string describe(const Subfield& field) {
  if (field.degree == 1) return "Q";
  std::ostringstream os;
  os << "Q(zeta_" << field.conductor << ")";
  if (field.subgroup.size() > 1) {
    // Greedy generators: each residue not yet reached, in ascending order.
    const std::uint64_t n = field.conductor;
    std::set<std::uint64_t> reached{1};
    std::vector<std::uint64_t> gens;
    for (auto j : field.subgroup) {
      if (reached.contains(j)) continue;
      gens.push_back(j);
      std::vector<std::uint64_t> frontier(reached.begin(), reached.end());
      while (!frontier.empty()) {
        const std::uint64_t x = frontier.back() * j % n;
        frontier.pop_back();
        for (std::uint64_t y = x; !reached.contains(y); y = y * j % n) {
          reached.insert(y);
          frontier.push_back(y);
        }
      }
    }
    os << "^<";
    for (std::size_t i = 0; i < gens.size(); ++i) os << (i ? "," : "") << gens[i];
    os << ">";
  }
  return os.str();
}

std::uint64_t AbelianGroup::order() const {
  std::uint64_t o = 1;
  for (auto d : invariant_factors) o *= d;
  return o;
}

std::string AbelianGroup::to_string() const {
  if (invariant_factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) os << (i ? " x " : "") << "Z/" << invariant_factors[i];
  return os.str();
}

AbelianGroup galois_group(const Subfield& field) {
  const std::uint64_t n = field.conductor;
  const std::set<std::uint64_t> h(field.subgroup.begin(), field.subgroup.end());
  const auto units = unit_group(n);
  const std::uint64_t order = units.size() / h.size();

  // For each prime p of the order, the p-primary part has type lambda with
  // #{x : x^(p^k) = 1} = p^(sum_i min(lambda_i, k)).
  std::vector<std::vector<std::uint64_t>> prime_parts;  // per prime: p^lambda_i, descending
  for (std::uint64_t p : prime_factors(order)) {
    std::vector<std::uint64_t> jumps;  // #{i : lambda_i >= k}, k = 1, 2, ...
    std::uint64_t prev_log = 0;
    std::uint64_t pk = 1;
    for (;;) {
      pk *= p;
      std::uint64_t count = 0;
      for (auto j : units)
        if (h.contains(powmod(j, pk, n))) ++count;
      count /= h.size();
      std::uint64_t lg = 0;
      for (std::uint64_t c = count; c > 1; c /= p) ++lg;
      if (lg == prev_log) break;
      jumps.push_back(lg - prev_log);
      prev_log = lg;
    }
    std::vector<std::uint64_t> powers;
    const std::uint64_t parts = jumps.empty() ? 0 : jumps.front();
    for (std::uint64_t i = 1; i <= parts; ++i) {
      std::uint64_t e = 0;
      for (auto m : jumps)
        if (m >= i) ++e;
      std::uint64_t v = 1;
      for (std::uint64_t k = 0; k < e; ++k) v *= p;
      powers.push_back(v);
    }
    prime_parts.push_back(std::move(powers));
  }
  std::size_t count = 0;
  for (const auto& pp : prime_parts) count = std::max(count, pp.size());
  AbelianGroup g;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t d = 1;
    for (const auto& pp : prime_parts)
      if (i < pp.size()) d *= pp[i];
    g.invariant_factors.push_back(d);
  }
  std::reverse(g.invariant_factors.begin(), g.invariant_factors.end());
  if (g.order() != order) throw InternalError("invariant factors do not multiply to the group order");
  return g;
}

}  // namespace parker
