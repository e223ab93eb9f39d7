#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace parker {

/// Univariate polynomial over Q, ascending coefficients, no trailing zeros.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coeffs);
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(const mpq_class& c);
  /// t - root
  static RatPoly linear(const mpq_class& root);
  static RatPoly monomial(std::size_t deg, const mpq_class& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// True iff every coefficient is an integer.
  bool is_integral() const;

  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  mpq_class coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }
  const mpq_class& leading() const { return coeffs_.back(); }

  mpq_class operator()(const mpq_class& x) const;

  friend RatPoly operator+(const RatPoly& f, const RatPoly& g);
  friend RatPoly operator-(const RatPoly& f, const RatPoly& g);
  friend RatPoly operator*(const RatPoly& f, const RatPoly& g);
  friend RatPoly operator*(const mpq_class& c, const RatPoly& f);
  friend bool operator==(const RatPoly& f, const RatPoly& g) { return f.coeffs_ == g.coeffs_; }

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// f = q g + r with deg r < deg g; g nonzero.
void divmod(const RatPoly& f, const RatPoly& g, RatPoly& q, RatPoly& r);
RatPoly monic(const RatPoly& f);
RatPoly derivative(const RatPoly& f);
/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly f, RatPoly g);
/// Exact quotient f / g; throws InternalError if g does not divide f.
RatPoly exact_div(const RatPoly& f, const RatPoly& g);

/// "p/q" or "p".
std::string rational_string(const mpq_class& q);

}  // namespace parker
