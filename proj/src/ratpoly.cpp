#include "parker/ratpoly.hpp"

#include <sstream>

#include "parker/error.hpp"

namespace parker {

RatPoly::RatPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly(std::vector<mpq_class>{c}); }

RatPoly RatPoly::linear(const mpq_class& root) {
  return RatPoly(std::vector<mpq_class>{-root, mpq_class(1)});
}

RatPoly RatPoly::monomial(std::size_t deg, const mpq_class& c) {
  std::vector<mpq_class> v(deg + 1);
  v[deg] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool RatPoly::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

mpq_class RatPoly::operator()(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

RatPoly operator+(const RatPoly& f, const RatPoly& g) {
  std::vector<mpq_class> r(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) r[i] += f.coeffs_[i];
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) r[i] += g.coeffs_[i];
  return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& f, const RatPoly& g) {
  std::vector<mpq_class> r(std::max(f.coeffs_.size(), g.coeffs_.size()));
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) r[i] += f.coeffs_[i];
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) r[i] -= g.coeffs_[i];
  return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<mpq_class> r(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (sgn(f.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) r[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return RatPoly(std::move(r));
}

RatPoly operator*(const mpq_class& c, const RatPoly& f) {
  std::vector<mpq_class> r(f.coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = c * f.coeffs_[i];
  return RatPoly(std::move(r));
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

std::string RatPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpq_class& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    mpq_class mag = abs(c);
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
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

void divmod(const RatPoly& f, const RatPoly& g, RatPoly& q, RatPoly& r) {
  if (g.is_zero()) throw InternalError("polynomial division by zero");
  std::vector<mpq_class> rem = f.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) {
    q = RatPoly();
    r = f;
    return;
  }
  std::vector<mpq_class> quo(static_cast<std::size_t>(f.degree() - dg + 1));
  const mpq_class lead_inv = 1 / g.leading();
  for (int k = f.degree(); k >= dg; --k) {
    const mpq_class c = rem[static_cast<std::size_t>(k)] * lead_inv;
    const auto shift = static_cast<std::size_t>(k - dg);
    quo[shift] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dg; ++j) rem[shift + static_cast<std::size_t>(j)] -= c * g.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dg));
  q = RatPoly(std::move(quo));
  r = RatPoly(std::move(rem));
}

RatPoly monic(const RatPoly& f) {
  if (f.is_zero()) return f;
  return mpq_class(1 / f.leading()) * f;
}

RatPoly derivative(const RatPoly& f) {
  if (f.degree() <= 0) return {};
  std::vector<mpq_class> d(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) d[i - 1] = f.coeffs()[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(d));
}

RatPoly gcd(RatPoly f, RatPoly g) {
  while (!g.is_zero()) {
    RatPoly q, r;
    divmod(f, g, q, r);
    f = std::move(g);
    g = monic(r);
  }
  return monic(f);
}

RatPoly exact_div(const RatPoly& f, const RatPoly& g) {
  RatPoly q, r;
  divmod(f, g, q, r);
  if (!r.is_zero()) throw InternalError("polynomial division is not exact");
  return q;
}

}  // namespace parker
