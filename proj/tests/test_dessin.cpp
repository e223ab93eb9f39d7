#include <doctest.h>

#include <numeric>
#include <random>

#include "parker/corpus.hpp"
#include "parker/error.hpp"
#include "parker/group.hpp"
#include "support.hpp"

using namespace parker;
using parker::test::cyc;

TEST_CASE("parse_dessin accepts the input grammar") {
  const Dessin d = parse_dessin("n=3 a=(1 2 3) b=(1 2)");
  CHECK(d.degree() == 3);
  CHECK(d.a() == cyc(3, {{1, 2, 3}}));
  CHECK(d.b() == cyc(3, {{1, 2}}));
  CHECK(compose(d.a(), compose(d.b(), d.c())).is_identity());

  const Dessin t = parse_dessin("n=1 a=() b=()");
  CHECK(t.degree() == 1);
  CHECK(t.a().is_identity());

  // Whitespace and statement order are free.
  CHECK(to_dessin_string(parse_dessin("  b=(1 2)\n a=(1 2 3)\tn=3\n")) == to_dessin_string(d));
  CHECK_THROWS_AS(parse_dessin("n=3 a=( 1 2 3) b=()"), ParseError);
  CHECK(parse_dessin("n=4 a=(1 2)(3 4) b=(2 3)").a() == cyc(4, {{1, 2}, {3, 4}}));
}

TEST_CASE("parse_dessin errors") {
  CHECK_THROWS_AS(parse_dessin("n=3 a=(1 2 4) b=()"), InputError);
  CHECK_THROWS_AS(parse_dessin("n=3 a=(1 2) b=(1 2)"), InputError);  // disconnected
  CHECK_THROWS_AS(parse_dessin("n=3 a=(1 2 2) b=()"), InputError);
  CHECK_THROWS_AS(parse_dessin("n=3 a=(1 2) (2 3) b=()"), InputError);
  CHECK_THROWS_AS(parse_dessin("n=0 a=() b=()"), ParseError);
  CHECK_THROWS_AS(parse_dessin(""), ParseError);
  CHECK_THROWS_AS(parse_dessin("n=3 a=(1 2 3)"), ParseError);
  CHECK_THROWS_AS(parse_dessin("n=3 n=3 a=() b=()"), ParseError);
  CHECK_THROWS_AS(parse_dessin("n=3 a=(1 2 3) c=()"), ParseError);
  try {
    parse_dessin("n=3 a=(1 x) b=()");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("validate_connected") {
  CHECK(validate_connected(Dessin(cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2}}))));
  CHECK_FALSE(validate_connected(Dessin(cyc(3, {{1, 2}}), cyc(3, {{1, 2}}))));
  CHECK(validate_connected(Dessin(Perm(1), Perm(1))));
}

TEST_CASE("passport") {
  using P = std::array<Partition, 3>;
  CHECK(passport(parse_dessin("n=3 a=(1 2 3) b=(1 2)")) == P{Partition{3}, Partition{2, 1}, Partition{2, 1}});
  CHECK(passport(parse_dessin("n=3 a=(1 2 3) b=(1 2 3)")) == P{Partition{3}, Partition{3}, Partition{3}});
  CHECK(passport(parse_dessin("n=1 a=() b=()")) == P{Partition{1}, Partition{1}, Partition{1}});
  CHECK(parse_dessin("n=3 a=(1 2 3) b=(1 2)").c() == cyc(3, {{1, 3}}));
}

TEST_CASE("genus") {
  CHECK(genus(parse_dessin("n=3 a=(1 2 3) b=(1 2)")) == 0);
  CHECK(genus(parse_dessin("n=3 a=(1 2 3) b=(1 2 3)")) == 1);
  CHECK(genus(parse_dessin("n=1 a=() b=()")) == 0);
  CHECK(genus(parse_dessin("n=8 a=(1 2 3 4)(5 6 7 8) b=(1 5 3 7)(2 8 4 6)")) == 2);
  CHECK_THROWS_AS(genus(Dessin(cyc(3, {{1, 2}}), cyc(3, {{1, 2}}))), InputError);
}

TEST_CASE("genus and passport are invariant under relabeling") {
  std::mt19937 rng(20261016);
  for (const auto& entry : corpus()) {
    const Dessin d = parse_dessin(entry.text);
    const auto g0 = genus(d);
    const auto pp = passport(d);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Point> img(d.degree());
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      const Dessin r = test::relabel(d, Perm(img));
      CHECK(genus(r) == g0);
      CHECK(passport(r) == pp);
    }
  }
}

TEST_CASE("to_dessin_string round-trips") {
  for (const auto& entry : corpus()) {
    const Dessin d = parse_dessin(entry.text);
    const Dessin back = parse_dessin(to_dessin_string(d));
    CHECK(back.a() == d.a());
    CHECK(back.b() == d.b());
  }
}

TEST_CASE("monodromy_group") {
  CHECK(monodromy_group(parse_dessin("n=3 a=(1 2 3) b=(1 2)")).order() == 6);
  CHECK(monodromy_group(parse_dessin("n=3 a=(1 2 3) b=(1 2 3)")).order() == 3);
  CHECK(monodromy_group(parse_dessin("n=5 a=(1 2 3 4 5) b=(1 2)")).order() == 120);
  CHECK_THROWS_AS(monodromy_group(parse_dessin("n=5 a=(1 2 3 4 5) b=(1 2)"), 50), SizeError);
  for (const auto& entry : corpus()) {
    const auto g = monodromy_group(parse_dessin(entry.text));
    CHECK_MESSAGE(g.order() == entry.group_order, entry.name);
  }
}
