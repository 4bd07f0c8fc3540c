#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crn/graph.hpp"
#include "crn/network.hpp"
#include "crn/parser.hpp"
#include "support/generators.hpp"

using namespace crn;

namespace {

NetworkDocument fixture(const std::string& name) {
  return parse_network_file(std::string(CRN_DATA_DIR) + "/" + name);
}

RationalMatrix rational_matrix(std::initializer_list<std::initializer_list<int>> rows) {
  RationalMatrix m(static_cast<Index>(rows.size()),
                   static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

// The network of the embedded-deficiency-zero example, built with species
// order A, B, C.
Network table1_network_abc() {
  NetworkBuilder b;
  int a = b.species("A"), bb = b.species("B"), c = b.species("C");
  b.reaction(Complex().add(bb), Complex().add(c, 2));
  b.reaction(Complex().add(bb).add(a), Complex().add(a));
  b.reaction(Complex().add(a), Complex().add(bb).add(a));
  b.reaction(Complex().add(bb), Complex());
  return b.build();
}

}  // namespace

TEST_CASE("Baccam matrices match the reference values entrywise") {
  Network net = fixture("baccam.crn").network;
  REQUIRE(net.species_count() == 4);   // T, V, I1, I2
  REQUIRE(net.complex_count() == 7);   // T+V, I1+V, I1, I2, 0, I2+V, V
  REQUIRE(net.reaction_count() == 5);

  NetworkMatrices mats = build_matrices(net);

  RationalMatrix y = rational_matrix({{1, 0, 0, 0, 0, 0, 0},
                                      {1, 1, 0, 0, 0, 1, 1},
                                      {0, 1, 1, 0, 0, 0, 0},
                                      {0, 0, 0, 1, 0, 1, 0}});
  CHECK(exactly_equal(mats.Y, y));

  IntMatrix ia(7, 5);
  ia << -1, 0, 0, 0, 0,
         1, 0, 0, 0, 0,
         0, -1, 0, 0, 0,
         0, 1, -1, -1, 0,
         0, 0, 1, 0, 1,
         0, 0, 0, 1, 0,
         0, 0, 0, 0, -1;
  CHECK(mats.Ia == ia);

  RationalMatrix n = rational_matrix({{-1, 0, 0, 0, 0},
                                      {0, 0, 0, 1, -1},
                                      {1, -1, 0, 0, 0},
                                      {0, 1, -1, 0, 0}});
  CHECK(exactly_equal(mats.N, n));
}

TEST_CASE("single reaction A -> B") {
  NetworkBuilder b;
  Complex reactant = Complex().add(b.species("A"));
  Complex product = Complex().add(b.species("B"));
  b.reaction(reactant, product);
  Network net = b.build();
  NetworkMatrices mats = build_matrices(net);
  CHECK(exactly_equal(mats.Y, rational_matrix({{1, 0}, {0, 1}})));
  CHECK(mats.Ia(0, 0) == -1);
  CHECK(mats.Ia(1, 0) == 1);
  CHECK(exactly_equal(mats.N, rational_matrix({{-1}, {1}})));
}

TEST_CASE("stoichiometric columns of the embedded-deficiency-zero network") {
  Network net = table1_network_abc();
  NetworkMatrices mats = build_matrices(net);
  RationalMatrix expected = rational_matrix({{0, 0, 0, 0},
                                             {-1, -1, 1, -1},
                                             {2, 0, 0, 0}});
  CHECK(exactly_equal(mats.N, expected));
  CHECK(exactly_equal(mats.N, RationalMatrix(mats.Y * to_rational(mats.Ia))));

  NetworkStats stats = network_stats(net);
  CHECK(stats.n == 5);
  CHECK(stats.l == 2);
  CHECK(stats.s == 2);
  CHECK(stats.deficiency == 1);
}

TEST_CASE("Baccam network statistics") {
  NetworkStats stats = network_stats(fixture("baccam.crn").network);
  CHECK(stats.n == 7);
  CHECK(stats.m == 4);
  CHECK(stats.r == 5);
  CHECK(stats.l == 2);
  CHECK(stats.s == 4);
  CHECK(stats.deficiency == 1);
  CHECK_FALSE(stats.weakly_reversible);
  CHECK_FALSE(stats.reversible);
  // The complex digraph is acyclic on 7 complexes, so every strong linkage
  // class is a singleton.
  CHECK(stats.sl == 7);
  CHECK(stats.t == 3);
}

TEST_CASE("reversible pair statistics") {
  NetworkDocument doc = parse_network("A <-> B\n");
  NetworkStats stats = network_stats(doc.network);
  CHECK(stats.n == 2);
  CHECK(stats.l == 1);
  CHECK(stats.sl == 1);
  CHECK(stats.s == 1);
  CHECK(stats.deficiency == 0);
  CHECK(stats.weakly_reversible);
  CHECK(stats.reversible);
}

TEST_CASE("builder rejects invalid networks") {
  SUBCASE("self-loop") {
    NetworkBuilder b;
    Complex a = Complex().add(b.species("A"));
    CHECK_THROWS_AS(b.reaction(a, a), NetworkError);
  }
  SUBCASE("accumulated self-loop: A + A equals 2A") {
    NetworkBuilder b;
    int a = b.species("A");
    Complex twice = Complex().add(a).add(a);
    CHECK_THROWS_AS(b.reaction(twice, Complex().add(a, 2)), NetworkError);
  }
  SUBCASE("duplicate reaction") {
    NetworkBuilder b;
    Complex a = Complex().add(b.species("A"));
    Complex bb = Complex().add(b.species("B"));
    b.reaction(a, bb);
    CHECK_THROWS_AS(b.reaction(a, bb), NetworkError);
  }
  SUBCASE("unused species") {
    NetworkBuilder b;
    Complex a = Complex().add(b.species("A"));
    Complex bb = Complex().add(b.species("B"));
    b.species("UNUSED");
    b.reaction(a, bb);
    CHECK_THROWS_AS(b.build(), NetworkError);
  }
  SUBCASE("nonpositive coefficient") {
    NetworkBuilder b;
    CHECK_THROWS_AS(Complex().add(b.species("A"), 0), NetworkError);
    CHECK_THROWS_AS(Complex().add(b.species("A"), Rational(-1)), NetworkError);
  }
  SUBCASE("no reactions") {
    NetworkBuilder b;
    CHECK_THROWS_AS(b.build(), NetworkError);
  }
}

TEST_CASE("matrix identities hold on random networks") {
  testing::Rng rng(0xC0FFEE);
  for (int trial = 0; trial < 80; ++trial) {
    Network net = testing::random_network(rng);
    NetworkMatrices mats = build_matrices(net);

    // N = Y * Ia, entrywise.
    CHECK(exactly_equal(mats.N, RationalMatrix(mats.Y * to_rational(mats.Ia))));

    // Every reaction moves the state: no zero stoichiometric column.
    for (int j = 0; j < net.reaction_count(); ++j) {
      bool nonzero = false;
      for (int i = 0; i < net.species_count(); ++i) nonzero = nonzero || mats.N(i, j) != 0;
      CHECK(nonzero);
    }

    // rank(Ia) = n - l, and the deficiency is nonnegative.
    NetworkStats stats = network_stats(net);
    CHECK(rank(mats.Ia) == stats.n - stats.l);
    CHECK(stats.deficiency >= 0);

    // Incidence columns carry exactly one -1 and one +1.
    for (int j = 0; j < net.reaction_count(); ++j) {
      int minus = 0, plus = 0, other = 0;
      for (int i = 0; i < net.complex_count(); ++i) {
        if (mats.Ia(i, j) == -1) ++minus;
        else if (mats.Ia(i, j) == 1) ++plus;
        else if (mats.Ia(i, j) != 0) ++other;
      }
      CHECK(minus == 1);
      CHECK(plus == 1);
      CHECK(other == 0);
    }
  }
}
