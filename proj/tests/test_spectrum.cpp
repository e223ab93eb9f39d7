#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "parker/chartab.hpp"
#include "parker/corpus.hpp"
#include "parker/error.hpp"
#include "parker/qlinalg.hpp"
#include "parker/spectrum.hpp"
#include "support.hpp"

using namespace parker;
using parker::test::cyc;

namespace {

struct Setup {
  Dessin d;
  GroupTable g;
  explicit Setup(const std::string& text) : d(parse_dessin(text)), g(monodromy_group(d)) {}
  AlgebraElement x() const { return parker_element(d, g); }
};

RatPoly from_longs(const std::vector<long>& c) {
  std::vector<mpq_class> q(c.begin(), c.end());
  return RatPoly(q);
}

// Random transitive pair on n points: a random permutation and a random
// permutation, retried until connected.
Dessin random_dessin(std::mt19937& rng, std::size_t n) {
  std::vector<Point> ia(n), ib(n);
  for (;;) {
    std::iota(ia.begin(), ia.end(), 0);
    std::iota(ib.begin(), ib.end(), 0);
    std::shuffle(ia.begin(), ia.end(), rng);
    std::shuffle(ib.begin(), ib.end(), rng);
    Dessin d{Perm(ia), Perm(ib)};
    if (validate_connected(d)) return d;
  }
}

std::map<std::string, std::size_t> multiplicity_map(const std::vector<EigenvalueClass>& classes) {
  std::map<std::string, std::size_t> out;
  for (const auto& c : classes) out[c.factor.to_string()] = c.multiplicity;
  return out;
}

}  // namespace

TEST_CASE("parker_element support") {
  const Setup t("n=1 a=() b=()");
  const auto xt = t.x();
  CHECK(xt.support() == std::map<ElementPair, std::int64_t>{{{0, 0}, 1}});

  const Setup z("n=4 a=(1 2 3 4) b=(1 2 3 4)");
  const auto xz = z.x();
  REQUIRE(xz.support().size() == 1);
  const auto& [pair, coef] = *xz.support().begin();
  CHECK(pair == ElementPair{z.g.index_of(z.d.a()), z.g.index_of(z.d.b())});
  CHECK(coef == 4);

  const Setup s("n=3 a=(1 2 3) b=(1 2)");
  const auto xs = s.x();
  CHECK(xs.support().size() == 6);
  for (const auto& [p, c] : xs.support()) CHECK(c == 1);

  for (const auto& entry : corpus()) {
    const Setup e(entry.text);
    CHECK_MESSAGE(e.x().coefficient_sum() == static_cast<std::int64_t>(e.g.order()), entry.name);
  }
  // Brute-force sum over g for D5.
  const Setup d5("n=5 a=(1 2 3 4 5) b=(2 5)(3 4)");
  std::map<ElementPair, std::int64_t> brute;
  for (const auto& h : d5.g.elements())
    ++brute[{d5.g.index_of(conjugate(d5.d.a(), h)), d5.g.index_of(conjugate(d5.d.b(), h))}];
  CHECK(d5.x().support() == brute);
}

TEST_CASE("dense action matrix") {
  const Setup t("n=1 a=() b=()");
  const auto mt = dense_action_matrix(t.x());
  CHECK(mt.dim == 1);
  CHECK(mt.entries == std::vector<std::int64_t>{1});

  const Setup z2("n=2 a=(1 2) b=(1 2)");
  const auto m2 = dense_action_matrix(z2.x());
  REQUIRE(m2.dim == 4);
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t v = 0; v < 2; ++v)
      for (std::size_t r = 0; r < 4; ++r)
        CHECK(m2.at(r, pair_index(u, v, 2)) == (r == pair_index(1 - u, 1 - v, 2) ? 2 : 0));

  for (const auto& entry : select_corpus("dense")) {
    const Setup e(entry->text);
    const auto m = dense_action_matrix(e.x());
    const auto order = static_cast<std::int64_t>(e.g.order());
    for (std::size_t i = 0; i < m.dim; ++i) {
      std::int64_t row = 0, col = 0;
      for (std::size_t j = 0; j < m.dim; ++j) {
        row += m.at(i, j);
        col += m.at(j, i);
      }
      CHECK(row == order);
      CHECK(col == order);
    }
  }
  const Setup s5("n=5 a=(1 2 3 4 5) b=(1 2)");
  CHECK_THROWS_AS(dense_action_matrix(s5.x()), SizeError);
}

TEST_CASE("strategy selection") {
  CHECK(parse_strategy("krylov") == Strategy::Krylov);
  CHECK(std::string(to_string(Strategy::Dense)) == "dense");
  CHECK_THROWS_AS(parse_strategy("fast"), InputError);
  CHECK(resolve_strategy(Strategy::Auto, 24, {}) == Strategy::Dense);
  CHECK(resolve_strategy(Strategy::Auto, 25, {}) == Strategy::Krylov);
  CHECK_THROWS_AS(resolve_strategy(Strategy::Dense, 60, {}), SizeError);
  CHECK_THROWS_AS(resolve_strategy(Strategy::Auto, 400, {}), SizeError);
}

TEST_CASE("minimal polynomial closed forms") {
  CHECK(min_poly_of_x(Setup("n=1 a=() b=()").x(), Strategy::Auto) == RatPoly{-1, 1});
  CHECK(min_poly_of_x(Setup("n=3 a=(1 2 3) b=(1 2 3)").x(), Strategy::Krylov) == RatPoly{-27, 0, 0, 1});
  CHECK(min_poly_of_x(Setup("n=3 a=(1 2 3) b=(1 2 3)").x(), Strategy::Dense) == RatPoly{-27, 0, 0, 1});
  const Setup s3s("n=3 a=(1 2 3) b=(1 2)");
  const auto s3 = s3s.x();
  CHECK(min_poly_dense(s3) == min_poly_krylov(s3));
  CHECK(min_poly_dense(s3) == RatPoly{0, 324, 0, -45, 0, 1});
}

TEST_CASE("dense and Krylov agree on the corpus and on random small dessins") {
  for (const auto& entry : select_corpus("dense")) {
    const Setup e(entry->text);
    const auto x = e.x();
    const auto md = min_poly_dense(x);
    CHECK_MESSAGE(md == min_poly_krylov(x), entry->name);
    REQUIRE(entry->min_poly.has_value());
    CHECK_MESSAGE(md == from_longs(*entry->min_poly), entry->name);
  }
  std::mt19937 rng(99);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 25; ++trial) {
    const Dessin d = random_dessin(rng, 3 + trial % 3);
    GroupTable g = monodromy_group(d);
    if (g.order() > 24) continue;
    ++tested;
    const auto x = parker_element(d, g);
    CHECK_MESSAGE(min_poly_dense(x) == min_poly_krylov(x), to_dessin_string(d));
  }
  CHECK(tested >= 12);
}

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(RatPoly{1, -2, 1}) == RatPoly{-1, 1});
  CHECK(squarefree_part(RatPoly{-27, 0, 0, 1}) == RatPoly{-27, 0, 0, 1});
  CHECK(squarefree_part(RatPoly{0, 0, 2, 1}) == RatPoly{0, 2, 1});
  CHECK(squarefree_part(RatPoly{0, 0, 4, 2}) == RatPoly{0, 2, 1});
}

TEST_CASE("integer_roots") {
  const RatPoly f{0, 324, 0, -45, 0, 1};
  const auto roots = integer_roots(f, 6);
  std::vector<mpz_class> want{-6, -3, 0, 3, 6};
  CHECK(roots == want);
  CHECK(integer_roots(RatPoly{-24, 0, 1}, 24).empty());
}

TEST_CASE("field_L by Frobenius splitting") {
  std::vector<FrobeniusTest> trace;
  const auto l3 = field_L(RatPoly{1, 1, 1}, 3, &trace);
  CHECK(l3 == cyclotomic_field(3));
  REQUIRE(trace.size() >= 2);
  CHECK(trace[0].residue == 1);
  CHECK(trace[0].prime == 7);
  CHECK(trace[0].splits);
  CHECK(trace[1].residue == 2);
  CHECK(trace[1].prime % 3 == 2);
  CHECK_FALSE(trace[1].splits);

  CHECK(field_L(RatPoly{-1, 1}, 12) == rational_field());
  CHECK(field_L(RatPoly{-27, 0, 0, 1}, 3) == cyclotomic_field(3));
  CHECK(field_L(RatPoly{-5, 0, 1}, 5) == conductor_reduce(make_subfield(5, {1, 4})));
  CHECK(field_L(RatPoly{1, 0, 1}, 12) == cyclotomic_field(4));
  // sqrt 2 is not in Q(zeta_3).
  CHECK_THROWS_AS(field_L(RatPoly{-2, 0, 1}, 3), EigenvalueFieldError);
  // 2^(1/3) is not in any cyclotomic field.
  CHECK_THROWS_AS(field_L(RatPoly{-2, 0, 0, 1}, 24), EigenvalueFieldError);
}

TEST_CASE("quadratic fields from discriminants") {
  const auto sqrt6 = quadratic_field(RatPoly{-24, 0, 1}, 1000);
  REQUIRE(sqrt6.has_value());
  CHECK(*sqrt6 == make_subfield(24, {1, 5, 19, 23}));
  CHECK(*quadratic_field(RatPoly{1, 1, 1}, 1000) == cyclotomic_field(3));
  CHECK(*quadratic_field(RatPoly{1, 0, 1}, 1000) == cyclotomic_field(4));
  CHECK(*quadratic_field(RatPoly{-1, -1, 1}, 1000) == conductor_reduce(make_subfield(5, {1, 4})));
  const auto sqrt13 = quadratic_field(RatPoly{-12, -2, 1}, 1000);  // roots 1 +- sqrt 13
  REQUIRE(sqrt13.has_value());
  CHECK(sqrt13->conductor == 13);
  CHECK(sqrt13->degree == 2);
  CHECK(*quadratic_field(RatPoly{-2, 0, 1}, 1000) == conductor_reduce(make_subfield(8, {1, 7})));
  CHECK_FALSE(quadratic_field(RatPoly{-1009, 0, 1}, 1000).has_value());  // conductor 4036
  CHECK_THROWS_AS(quadratic_field(RatPoly{-4, 0, 1}, 1000), InputError);
  // Against the Frobenius route where both apply.
  for (long c : {-2L, -3L, -5L, -6L, 1L, 2L, 3L, 7L}) {
    const RatPoly f{c, 0, 1};
    const auto q = quadratic_field(f, 1000);
    REQUIRE(q.has_value());
    CHECK(field_L(f, q->conductor) == *q);
  }
}

TEST_CASE("field_k by both methods") {
  const Setup s3("n=3 a=(1 2 3) b=(1 2)");
  CHECK(field_k_power_maps(s3.g, s3.d.a(), s3.d.b()) == rational_field());
  const Setup z4("n=4 a=(1 2 3 4) b=(1 2 3 4)");
  CHECK(field_k_power_maps(z4.g, z4.d.a(), z4.d.b()) == cyclotomic_field(4));
  const Setup t("n=1 a=() b=()");
  CHECK(field_k_power_maps(t.g, t.d.a(), t.d.b()) == rational_field());
  for (const auto& entry : corpus()) {
    const Setup e(entry.text);
    const auto table = character_table(e.g);
    const auto k1 = field_k_power_maps(e.g, e.d.a(), e.d.b());
    CHECK_MESSAGE(k1 == field_k_table(table, e.d.a(), e.d.b()), entry.name);
    CHECK_MESSAGE(describe(k1) == entry.field_k, entry.name);
    CHECK(field_k(e.g, e.d.a(), e.d.b(), &table) == k1);
  }
}

TEST_CASE("predicted eigenvalues") {
  const Setup t("n=1 a=() b=()");
  const auto pt = predicted_eigenvalues(character_table(t.g), t.d.a(), t.d.b());
  REQUIRE(pt.size() == 1);
  CHECK(pt[0].value == CycloNum::rational(1));

  const Setup s3("n=3 a=(1 2 3) b=(1 2)");
  const auto ps = predicted_eigenvalues(character_table(s3.g), s3.d.a(), s3.d.b());
  std::set<long> values;
  for (const auto& p : ps) {
    REQUIRE(p.value.is_rational());
    values.insert(p.value.rational_value().get_num().get_si());
  }
  CHECK(values == std::set<long>{6, -6, 0, -3});

  const Setup z3("n=3 a=(1 2 3) b=(1 2 3)");
  const auto pz = predicted_eigenvalues(character_table(z3.g), z3.d.a(), z3.d.b());
  CHECK(pz.size() == 3);
  for (std::int64_t m = 0; m < 3; ++m) {
    const auto want = mpq_class(3) * root_of_unity(m, 3);
    CHECK(std::any_of(pz.begin(), pz.end(), [&](const auto& p) { return p.value == want; }));
  }
  const auto roots = verify_predicted_are_roots(RatPoly{-27, 0, 0, 1}, pz);
  CHECK(roots.passed);
  CHECK_FALSE(verify_predicted_are_roots(RatPoly{-8, 0, 0, 1}, pz).passed);
  CHECK(verify_predicted_are_roots(RatPoly{-1, 1}, pt).passed);
  CHECK(verify_predicted_are_roots(RatPoly{0, 324, 0, -45, 0, 1}, ps).passed);
}

TEST_CASE("commutation with the diagonal") {
  for (const char* text : {"n=1 a=() b=()", "n=4 a=(1 2 3 4) b=(1 2 3 4)", "n=3 a=(1 2 3) b=(1 2)",
                           "n=5 a=(1 2 3 4 5) b=(1 2 3)", "n=5 a=(1 2 3 4 5) b=(1 2)"})
    CHECK_MESSAGE(verify_commutation(Setup(text).x()).passed, text);

  // A support that is not conjugation-stable is caught.
  const Setup s3("n=3 a=(1 2 3) b=(1 2)");
  std::map<ElementPair, std::int64_t> lopsided{{{s3.g.index_of(s3.d.a()), s3.g.index_of(s3.d.b())}, 6}};
  const auto bad = verify_commutation(AlgebraElement(s3.g, lopsided));
  CHECK_FALSE(bad.passed);
  CHECK_FALSE(bad.detail.empty());
}

TEST_CASE("rational eigenspaces are stable under the diagonal") {
  for (const auto& entry : corpus()) {
    if (entry.group_order > 12) continue;
    const Setup e(entry.text);
    const auto x = e.x();
    const auto m = dense_action_matrix(x);
    const std::size_t n = e.g.order();
    const auto sq = squarefree_part(min_poly_dense(x));
    for (const auto& rho : integer_roots(sq, n)) {
      qlinalg::Matrix a(m.dim, qlinalg::Vector(m.dim));
      for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) a[i][j] = m.at(i, j) - (i == j ? mpq_class(rho) : mpq_class(0));
      const auto space = qlinalg::kernel(a, m.dim);
      CHECK(!space.empty());
      for (const auto& h : e.g.generators()) {
        const std::size_t hi = e.g.index_of(h);
        for (const auto& v : space) {
          // (h, h) acting on the left: basis (u, v) goes to (hu, hv).
          qlinalg::Vector w(m.dim);
          for (std::size_t u = 0; u < n; ++u)
            for (std::size_t vv = 0; vv < n; ++vv) w[pair_index(e.g.mul(hi, u), e.g.mul(hi, vv), n)] = v[pair_index(u, vv, n)];
          for (std::size_t i = 0; i < m.dim; ++i) {
            mpq_class acc = 0;
            for (std::size_t j = 0; j < m.dim; ++j) acc += a[i][j] * w[j];
            CHECK(acc == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("subfield tower and Galois descriptor") {
  const auto q = rational_field();
  CHECK(verify_tower(q, q, q, q) == std::array<bool, 3>{true, true, true});
  const auto c3 = cyclotomic_field(3);
  CHECK(verify_tower(c3, c3, c3, c3) == std::array<bool, 3>{true, true, true});
  CHECK(verify_tower(q, q, c3, cyclotomic_field(6)) == std::array<bool, 3>{true, true, true});
  CHECK(verify_tower(c3, q, c3, c3) == std::array<bool, 3>{false, true, true});
  CHECK(galois_group_of_L(q).is_trivial());
  CHECK(galois_group_of_L(c3).invariant_factors == std::vector<std::uint64_t>{2});
  CHECK(galois_group_of_L(cyclotomic_field(5)).invariant_factors == std::vector<std::uint64_t>{4});
}

TEST_CASE("eigenvalue multiplicities") {
  const auto mult = [](const std::string& text) {
    const Setup e(text);
    const auto x = e.x();
    return multiplicity_map(eigenvalue_multiplicities(x, squarefree_part(min_poly_dense(x))));
  };
  CHECK(mult("n=1 a=() b=()") == std::map<std::string, std::size_t>{{"t - 1", 1}});
  CHECK(mult("n=2 a=(1 2) b=(1 2)") == std::map<std::string, std::size_t>{{"t - 2", 2}, {"t + 2", 2}});
  CHECK(mult("n=3 a=(1 2 3) b=(1 2)") ==
        std::map<std::string, std::size_t>{{"t", 24}, {"t - 6", 2}, {"t + 6", 2}, {"t - 3", 4}, {"t + 3", 4}});
  // Characteristic polynomials from the dense oracle over Q.
  CHECK(mult("n=4 a=(1 2 3) b=(1 2)(3 4)") ==
        std::map<std::string, std::size_t>{{"t", 108}, {"t - 12", 3}, {"t + 4", 9}, {"t^2 - 4*t + 16", 9},
                                           {"t^2 + 12*t + 144", 3}});
  CHECK(mult("n=5 a=(1 2 3 4 5) b=(2 5)(3 4)") ==
        std::map<std::string, std::size_t>{{"t", 80}, {"t - 10", 2}, {"t + 10", 2}, {"t^2 - 5*t - 25", 4},
                                           {"t^2 + 5*t - 25", 4}});
  // Dense charpoly against a hand-written one.
  DenseMatrix m{2, {1, 2, 3, 4}};
  CHECK(dense_charpoly(m, 10) == RatPoly{-2, -5, 1});
}

TEST_CASE("analyze small dessins") {
  const auto t = analyze(parse_dessin("n=1 a=() b=()"));
  CHECK(t.group_order == 1);
  CHECK(t.all_passed());
  CHECK(t.field_L == rational_field());
  CHECK(t.field_k == rational_field());
  CHECK(t.field_K_exponent == rational_field());

  const auto z3 = analyze(parse_dessin("n=3 a=(1 2 3) b=(1 2 3)"));
  CHECK(z3.group_order == 3);
  CHECK(z3.genus == 1);
  CHECK(z3.all_passed());
  CHECK(z3.field_L == cyclotomic_field(3));
  CHECK(z3.field_k == cyclotomic_field(3));
  CHECK(z3.field_K_order == cyclotomic_field(3));

  AnalysisConfig cfg;
  cfg.multiplicities = true;
  const auto s3 = analyze(parse_dessin("n=3 a=(1 2 3) b=(1 2)"), cfg);
  CHECK(s3.group_order == 6);
  CHECK(s3.genus == 0);
  CHECK(s3.field_k == rational_field());
  CHECK(s3.field_L == rational_field());
  CHECK(s3.all_passed());
  REQUIRE(s3.multiplicities.has_value());
  std::size_t total = 0;
  for (const auto& c : *s3.multiplicities) total += c.multiplicity * static_cast<std::size_t>(c.factor.degree());
  CHECK(total == 36);
  CHECK(s3.distinct_eigenvalues == 5);
  CHECK(s3.min_poly_is_squarefree);
}

TEST_CASE("analyze locates L outside the exponent field when it is quadratic") {
  const auto r = analyze(parse_dessin("n=5 a=(1 2 3 4 5) b=(1 2)"));
  CHECK(r.min_poly.degree() == 37);
  REQUIRE(r.factors_outside_exponent_field.size() == 1);
  CHECK(r.factors_outside_exponent_field[0] == RatPoly{-24, 0, 1});
  REQUIRE(r.field_L.has_value());
  CHECK(*r.field_L == *quadratic_field(RatPoly{-24, 0, 1}, 1000));
  CHECK(r.find_check("eigenvalues_in_exponent_field")->status == CheckStatus::Fail);
  CHECK(r.find_check("L_in_K_exponent")->status == CheckStatus::Fail);
  CHECK(r.find_check("L_in_K_order")->status == CheckStatus::Pass);
  CHECK(r.find_check("predicted_are_roots")->status == CheckStatus::Pass);
  CHECK(r.find_check("commutes_with_diagonal")->status == CheckStatus::Pass);
}

TEST_CASE("analyze respects caps") {
  AnalysisConfig cfg;
  cfg.group_cap = 50;
  CHECK_THROWS_AS(analyze(parse_dessin("n=5 a=(1 2 3 4 5) b=(1 2)"), cfg), SizeError);
  cfg = {};
  cfg.krylov_cap = 100;
  CHECK_THROWS_AS(analyze(parse_dessin("n=5 a=(1 2 3 4 5) b=(1 2)"), cfg), SizeError);
}

TEST_CASE("corpus expectations for the small entries") {
  for (const auto& entry : select_corpus("dense")) {
    const auto r = analyze(parse_dessin(entry->text));
    INFO(entry->name);
    CHECK(r.group_order == entry->group_order);
    CHECK(r.min_poly.degree() == static_cast<int>(entry->min_poly_degree));
    REQUIRE(r.field_L.has_value());
    CHECK(describe(*r.field_L) == entry->field_L);
    CHECK(describe(r.field_k) == entry->field_k);
    CHECK(r.all_passed());
  }
}
