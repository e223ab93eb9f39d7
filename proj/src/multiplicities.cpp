#include "crt.hpp"
#include "parker/error.hpp"
#include "parker/modp.hpp"
#include "parker/spectrum.hpp"
#include "parker/zfactor.hpp"

namespace parker {

RatPoly dense_charpoly(const DenseMatrix& m, std::uint64_t spectral_bound) {
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), spectral_bound + 1, m.dim);
  detail::CrtAccumulator crt;
  modp::u64 p = 1ULL << 31;
  while (crt.modulus() <= 2 * bound) {
    p = modp::prev_prime(p);
    std::vector<modp::u64> a(m.entries.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = modp::reduce(m.entries[i], p);
    modp::Poly f = modp::charpoly(std::move(a), m.dim, p);
    f.resize(m.dim + 1, 0);
    crt.add(f, p);
  }
  std::vector<mpq_class> c;
  for (const auto& x : crt.symmetric()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

std::vector<EigenvalueClass> eigenvalue_multiplicities(const AlgebraElement& x, const RatPoly& squarefree, std::size_t dense_cap) {
  const DenseMatrix m = dense_action_matrix(x, dense_cap);
  RatPoly chi = dense_charpoly(m, x.group().order());
  std::vector<EigenvalueClass> out;
  std::size_t total = 0;
  for (const auto& g : factor_over_q(squarefree)) {
    EigenvalueClass cls;
    cls.factor = g;
    if (g.degree() == 1) cls.root = -g.coeff(0);
    for (;;) {
      RatPoly q, r;
      divmod(chi, g, q, r);
      if (!r.is_zero()) break;
      chi = std::move(q);
      ++cls.multiplicity;
    }
    if (cls.multiplicity == 0) throw InternalError("factor " + g.to_string() + " of the minimal polynomial missing from the characteristic polynomial");
    total += cls.multiplicity * static_cast<std::size_t>(g.degree());
    out.push_back(std::move(cls));
  }
  if (chi.degree() != 0 || total != m.dim)
    throw InternalError("multiplicities do not account for the whole characteristic polynomial");
  return out;
}

}  // namespace parker
