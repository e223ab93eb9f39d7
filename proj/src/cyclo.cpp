#include "parker/cyclo.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "parker/error.hpp"
#include "parker/qlinalg.hpp"

namespace parker {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::uint64_t normalize_conductor(std::uint64_t n) {
  if (n == 0) throw InputError("conductor must be positive");
  return n % 4 == 2 ? n / 2 : n;
}

std::vector<std::uint64_t> unit_group(std::uint64_t n) {
  if (n <= 2) return {1};
  std::vector<std::uint64_t> out;
  for (std::uint64_t j = 1; j < n; ++j)
    if (std::gcd(j, n) == 1) out.push_back(j);
  return out;
}

std::uint64_t unit_residue(std::int64_t j, std::uint64_t n) {
  if (n <= 2) return 1;
  const auto m = static_cast<std::int64_t>(n);
  std::int64_t r = j % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

namespace {

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<std::int64_t> compute_cyclotomic(std::uint64_t n) {
  // Phi_n = prod_{d | n} (t^d - 1)^mu(n/d): multiply first, then divide exactly.
  std::vector<std::int64_t> poly{1};
  std::vector<std::uint64_t> divisors_out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 1) {
      std::vector<std::int64_t> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] += poly[i];
        next[i] -= poly[i];
      }
      poly = std::move(next);
    } else if (mu == -1) {
      divisors_out.push_back(d);
    }
  }
  for (std::uint64_t d : divisors_out) {
    // poly = q (t^d - 1)  =>  q_k = q_{k-d} - p_k
    std::vector<std::int64_t> q(poly.size() - d, 0);
    for (std::size_t k = 0; k < q.size(); ++k) q[k] = (k >= d ? q[k - d] : 0) - poly[k];
    poly = std::move(q);
  }
  return poly;
}

std::vector<mpq_class> reduce_series(std::uint64_t n, std::vector<mpq_class> series) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const std::size_t phi = phi_poly.size() - 1;
  for (std::size_t k = series.size(); k-- > phi;) {
    if (sgn(series[k]) == 0) continue;
    const mpq_class c = series[k];
    const std::size_t shift = k - phi;
    for (std::size_t i = 0; i < phi; ++i) {
      if (phi_poly[i]) series[shift + i] -= c * phi_poly[i];
    }
    series[k] = 0;
  }
  series.resize(phi);
  return series;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

void require_same(const CycloNum& x, const CycloNum& y) {
  if (x.conductor() != y.conductor()) {
    throw InputError("cyclotomic arithmetic across conductors " + std::to_string(x.conductor()) +
                     " and " + std::to_string(y.conductor()) + "; embed first");
  }
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex mutex;
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_cyclotomic(n)).first;
  return it->second;
}

CycloNum reduce_power_series(std::uint64_t n, std::vector<mpq_class> series) {
  return CycloNum(n, reduce_series(n, std::move(series)));
}

CycloNum::CycloNum() : n_(1), coords_(1) {}

CycloNum::CycloNum(std::uint64_t n, std::vector<mpq_class> coords) : n_(n), coords_(std::move(coords)) {}

CycloNum CycloNum::rational(const mpq_class& q, std::uint64_t n) {
  n = normalize_conductor(n);
  std::vector<mpq_class> c(euler_phi(n));
  c[0] = q;
  c[0].canonicalize();
  return CycloNum(n, std::move(c));
}

CycloNum CycloNum::from_coords(std::uint64_t n, std::vector<mpq_class> coords) {
  if (n == 0 || normalize_conductor(n) != n) throw InputError("conductor must be normalized (not 2 mod 4)");
  if (coords.size() != euler_phi(n)) throw InputError("coordinate count must equal phi(N)");
  for (auto& c : coords) c.canonicalize();
  return CycloNum(n, std::move(coords));
}

bool CycloNum::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

mpq_class CycloNum::rational_value() const {
  if (!is_rational()) throw InputError("cyclotomic number is not rational");
  return coords_[0];
}

bool CycloNum::has_integral_coords() const {
  for (const auto& c : coords_)
    if (c.get_den() != 1) return false;
  return true;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycloNum operator+(const CycloNum& x, const CycloNum& y) {
  require_same(x, y);
  CycloNum r = x;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += y.coords_[i];
  return r;
}

CycloNum operator-(const CycloNum& x, const CycloNum& y) {
  require_same(x, y);
  CycloNum r = x;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= y.coords_[i];
  return r;
}

CycloNum operator*(const CycloNum& x, const CycloNum& y) {
  require_same(x, y);
  const std::size_t phi = x.coords_.size();
  std::vector<mpq_class> prod(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (sgn(x.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (sgn(y.coords_[j]) == 0) continue;
      prod[i + j] += x.coords_[i] * y.coords_[j];
    }
  }
  return reduce_power_series(x.n_, std::move(prod));
}

CycloNum operator*(const mpq_class& c, const CycloNum& x) {
  CycloNum r = x;
  for (auto& v : r.coords_) v *= c;
  return r;
}

bool operator==(const CycloNum& x, const CycloNum& y) {
  if (x.n_ == y.n_) return x.coords_ == y.coords_;
  const std::uint64_t m = checked_lcm(x.n_, y.n_);
  return embed(x, m).coords_ == embed(y, m).coords_;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const mpq_class& c = coords_[i];
    if (sgn(c) == 0) continue;
    const mpq_class mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) return "0";
  return os.str();
}

std::strong_ordering lex_compare(const CycloNum& x, const CycloNum& y) {
  if (auto c = x.conductor() <=> y.conductor(); c != 0) return c;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    const int c = cmp(x.coords()[i], y.coords()[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

CycloNum root_of_unity(std::int64_t k, std::uint64_t n) {
  if (n == 0) throw InputError("root_of_unity needs N >= 1");
  if (n % 4 == 2) {
    // zeta_{2m} = -zeta_m^((m+1)/2) for odd m.
    const std::uint64_t m = n / 2;
    const auto half = static_cast<std::int64_t>((m + 1) / 2);
    const auto mm = static_cast<std::int64_t>(m);
    const std::int64_t e = ((k % mm) * (half % mm)) % mm;
    CycloNum z = root_of_unity(e, m);
    return (k % 2 == 0) ? z : -z;
  }
  const auto nn = static_cast<std::int64_t>(n);
  std::int64_t e = k % nn;
  if (e < 0) e += nn;
  std::vector<mpq_class> series(static_cast<std::size_t>(e) + 1);
  series[static_cast<std::size_t>(e)] = 1;
  return reduce_power_series(n, std::move(series));
}

CycloNum invert(const CycloNum& x) {
  if (x.is_zero()) throw InputError("division by zero in Q(zeta_N)");
  const std::size_t phi = x.coords().size();
  // Column i of the multiplication-by-x matrix is x * z^i.
  qlinalg::Matrix m(phi, qlinalg::Vector(phi));
  for (std::size_t i = 0; i < phi; ++i) {
    CycloNum col = x * root_of_unity(static_cast<std::int64_t>(i), x.conductor());
    for (std::size_t r = 0; r < phi; ++r) m[r][i] = col.coords()[r];
  }
  qlinalg::Vector one(phi);
  one[0] = 1;
  auto sol = qlinalg::solve(std::move(m), std::move(one));
  if (!sol) throw InternalError("multiplication matrix of a nonzero element is singular");
  return CycloNum::from_coords(x.conductor(), std::move(*sol));
}

CycloNum embed(const CycloNum& x, std::uint64_t m) {
  if (m == 0 || m % x.conductor() != 0) {
    throw InputError("cannot embed Q(zeta_" + std::to_string(x.conductor()) + ") into Q(zeta_" +
                     std::to_string(m) + ")");
  }
  m = normalize_conductor(m);
  if (m == x.conductor()) return x;
  const std::uint64_t step = m / x.conductor();
  std::vector<mpq_class> series((x.coords().size() - 1) * step + 1);
  for (std::size_t i = 0; i < x.coords().size(); ++i) series[i * step] = x.coords()[i];
  return reduce_power_series(m, std::move(series));
}

CycloNum project(const CycloNum& x, std::uint64_t d) {
  d = normalize_conductor(d);
  if (x.conductor() % d != 0) throw InputError("project: target conductor must divide N");
  if (d == x.conductor()) return x;
  const std::size_t phi_d = euler_phi(d);
  const std::size_t phi_n = x.coords().size();
  qlinalg::Matrix m(phi_n, qlinalg::Vector(phi_d));
  for (std::size_t i = 0; i < phi_d; ++i) {
    CycloNum col = embed(root_of_unity(static_cast<std::int64_t>(i), d), x.conductor());
    for (std::size_t r = 0; r < phi_n; ++r) m[r][i] = col.coords()[r];
  }
  auto sol = qlinalg::solve(std::move(m), x.coords());
  if (!sol) throw InputError("value does not lie in Q(zeta_" + std::to_string(d) + ")");
  return CycloNum::from_coords(d, std::move(*sol));
}

CycloNum galois_apply(std::int64_t j, const CycloNum& x) {
  const std::uint64_t n = x.conductor();
  const std::uint64_t r = unit_residue(j, n);
  if (std::gcd(r, n) != 1) {
    throw InputError("galois_apply: " + std::to_string(j) + " is not coprime to " + std::to_string(n));
  }
  if (n == 1) return x;
  std::vector<mpq_class> series(n);
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (sgn(x.coords()[i]) == 0) continue;
    series[(i * r) % n] += x.coords()[i];
  }
  return reduce_power_series(n, std::move(series));
}

CycloNum conj(const CycloNum& x) { return galois_apply(-1, x); }

RatPoly min_poly(const CycloNum& x) {
  std::vector<CycloNum> orbit;
  for (std::uint64_t j : unit_group(x.conductor())) {
    CycloNum y = galois_apply(static_cast<std::int64_t>(j), x);
    bool seen = false;
    for (const auto& o : orbit) {
      if (o == y) {
        seen = true;
        break;
      }
    }
    if (!seen) orbit.push_back(std::move(y));
  }
  // prod (t - o) with coefficients in Q(zeta_N), ascending.
  const std::uint64_t n = x.conductor();
  std::vector<CycloNum> coeffs{CycloNum::rational(1, n)};
  for (const auto& o : orbit) {
    std::vector<CycloNum> next(coeffs.size() + 1, CycloNum::rational(0, n));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] - o * coeffs[i];
    }
    coeffs = std::move(next);
  }
  std::vector<mpq_class> rat;
  for (const auto& c : coeffs) {
    if (!c.is_rational()) throw InternalError("Galois orbit product has irrational coefficient");
    rat.push_back(c.rational_value());
  }
  return RatPoly(std::move(rat));
}

CycloNum evaluate(const RatPoly& f, const CycloNum& x) {
  CycloNum acc = CycloNum::rational(0, x.conductor());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = acc * x + CycloNum::rational(f.coeffs()[i], x.conductor());
  }
  return acc;
}

}  // namespace parker
