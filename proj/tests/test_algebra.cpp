#include <doctest.h>

#include <random>

#include "parker/modp.hpp"
#include "parker/qlinalg.hpp"
#include "parker/ratpoly.hpp"
#include "parker/zfactor.hpp"

using namespace parker;

TEST_CASE("modp scalars") {
  CHECK(modp::is_prime(2147483647));
  CHECK_FALSE(modp::is_prime(2147483649ULL));
  CHECK(modp::prev_prime(2147483647) == 2147483629);
  CHECK(modp::inv(3, 7) == 5);
  CHECK(modp::pow(2, 10, 1000003) == 1024);
  CHECK(modp::reduce(-1, 7) == 6);
  const auto p = modp::next_prime_in_progression(2, 1, 3);
  CHECK(p == 7);
  const auto g = modp::primitive_root(7);
  CHECK((g == 3 || g == 5));
}

TEST_CASE("modp polynomials") {
  const modp::u64 p = 7;
  const modp::Poly cyclo3{1, 1, 1};  // t^2 + t + 1
  CHECK(modp::splits_completely(cyclo3, 7));
  CHECK_FALSE(modp::splits_completely(cyclo3, 5));
  CHECK(modp::roots(cyclo3, p) == std::vector<modp::u64>{2, 4});
  CHECK(modp::is_squarefree(cyclo3, p));
  CHECK_FALSE(modp::is_squarefree(modp::Poly{1, 2, 1}, p));  // (t+1)^2
  modp::Poly q, r;
  modp::divmod(modp::Poly{6, 0, 0, 1}, modp::Poly{6, 1}, q, r, p);  // (t^3 - 1) / (t - 1)
  CHECK(q == cyclo3);
  CHECK(r.empty());
  // t^4 - 1 over F_5 is a product of four linear factors.
  CHECK(modp::factor_squarefree(modp::Poly{4, 0, 0, 0, 1}, 5).size() == 4);
  CHECK(modp::factor_squarefree(modp::Poly{6, 0, 0, 0, 1}, 7).size() == 3);  // t^2 + 1 stays irreducible
}

TEST_CASE("modp charpoly and kernel") {
  const modp::u64 p = 1000003;
  // Companion matrix of t^3 - 2t + 5.
  std::vector<modp::u64> a{0, 0, modp::reduce(-5, p), 1, 0, 2, 0, 1, 0};
  CHECK(modp::charpoly(a, 3, p) == modp::Poly{5, modp::reduce(-2, p), 0, 1});
  std::vector<modp::u64> m{1, 2, 3, 2, 4, 6};
  const auto ker = modp::kernel(m, 2, 3, p);
  CHECK(ker.size() == 2);
}

TEST_CASE("RatPoly arithmetic") {
  const RatPoly f{-1, 0, 1};  // t^2 - 1
  const RatPoly g{1, 1};
  CHECK(exact_div(f, g) == RatPoly{-1, 1});
  CHECK(gcd(f, RatPoly{1, 2, 1}) == g);
  CHECK(derivative(RatPoly{0, 0, 0, 1}) == RatPoly{0, 0, 3});
  CHECK(f(mpq_class(1, 2)) == mpq_class(-3, 4));
  CHECK(monic(RatPoly{2, 4}) == RatPoly::linear(mpq_class(-1, 2)));
  CHECK(f.to_string() == "t^2 - 1");
  CHECK(rational_string(mpq_class(-1, 2)) == "-1/2");
  CHECK(rational_string(mpq_class(4)) == "4");
  RatPoly q, r;
  divmod(RatPoly{1, 0, 0, 1}, RatPoly{1, 1}, q, r);
  CHECK(q == RatPoly{1, -1, 1});
  CHECK(r.is_zero());
}

TEST_CASE("qlinalg") {
  using qlinalg::Matrix;
  const Matrix a{{1, 2}, {3, 4}};
  const auto x = qlinalg::solve(a, {5, 6});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == -4);
  CHECK((*x)[1] == mpq_class(9, 2));
  CHECK_FALSE(qlinalg::solve(Matrix{{1, 1}, {1, 1}}, {1, 2}).has_value());
  CHECK(qlinalg::rank(Matrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
  const auto ker = qlinalg::kernel(Matrix{{1, 2, 3}, {2, 4, 6}}, 3);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}

namespace {
RatPoly product(const std::vector<RatPoly>& fs) {
  RatPoly out{1};
  for (const auto& f : fs) out = out * f;
  return out;
}
}  // namespace

TEST_CASE("factor_over_q") {
  // (t - 5)(t^4 + 5t^3 + 25t^2 + 125t + 625) = t^5 - 3125
  auto fs = factor_over_q(RatPoly{-3125, 0, 0, 0, 0, 1});
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == RatPoly{-5, 1});
  CHECK(fs[1] == RatPoly{625, 125, 25, 5, 1});

  // Swinnerton-Dyer style: t^4 - 10t^2 + 1 is irreducible but splits mod every prime.
  fs = factor_over_q(RatPoly{1, 0, -10, 0, 1});
  CHECK(fs.size() == 1);

  const std::vector<RatPoly> parts{RatPoly{-24, 0, 1}, RatPoly{-12, -2, 1}, RatPoly{-9, -5, 1}, RatPoly{0, 1},
                                   RatPoly{60, 1}, RatPoly{1, 1, 1}};
  fs = factor_over_q(product(parts));
  CHECK(fs.size() == parts.size());
  CHECK(product(fs) == product(parts));
  for (const auto& f : fs) CHECK(f.is_monic());

  // Random products of small irreducible pieces.
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RatPoly> pieces;
    std::vector<long> used;
    for (int i = 0; i < 4; ++i) {
      long c = coef(rng);
      if (std::find(used.begin(), used.end(), c) != used.end()) continue;
      used.push_back(c);
      pieces.push_back(RatPoly{c, 1});
    }
    pieces.push_back(RatPoly{2, 0, 0, 1});  // t^3 + 2, irreducible
    const RatPoly f = product(pieces);
    fs = factor_over_q(f);
    CHECK(fs.size() == pieces.size());
    CHECK(product(fs) == f);
  }
}
