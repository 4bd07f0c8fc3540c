#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crn/parser.hpp"
#include "support/generators.hpp"

using namespace crn;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(CRN_DATA_DIR) + "/" + name;
}

const char* kExample2 =
    "R1: 2 A + B -> A + 2 B\n"
    "R2: 2 B + C -> A + B + C\n"
    "R3: 2 A -> A + C\n"
    "R4: B + C -> B + A\n";

}  // namespace

TEST_CASE("four-reaction mass-action network") {
  NetworkDocument doc = parse_network(kExample2);
  CHECK(doc.network.species_count() == 3);
  CHECK(doc.network.complex_count() == 8);
  CHECK(doc.network.reaction_count() == 4);
  CHECK_FALSE(doc.rates.has_value());
  CHECK(doc.network.species_at(0).name == "A");
  CHECK(doc.network.species_at(1).name == "B");
  CHECK(doc.network.species_at(2).name == "C");
}

TEST_CASE("reversible arrow expands forward then reverse") {
  NetworkDocument doc = parse_network("B + A <-> A\n");
  REQUIRE(doc.network.reaction_count() == 2);
  CHECK(doc.network.reaction_text(0) == "B + A -> A");
  CHECK(doc.network.reaction_text(1) == "A -> B + A");

  NetworkDocument labeled = parse_network("R2: B + A <-> A\n");
  CHECK(labeled.network.reaction_at(0).label == "R2_f");
  CHECK(labeled.network.reaction_at(1).label == "R2_b");
}

TEST_CASE("reversible arrow carries two rate constants") {
  NetworkDocument doc = parse_network("A <-> B [k=2,3/2]\n");
  REQUIRE(doc.rates.has_value());
  CHECK((*doc.rates)[0] == Rational(2));
  CHECK((*doc.rates)[1] == Rational(3, 2));
  CHECK_THROWS_AS(parse_network("A <-> B [k=2]\n"), ParseError);
  CHECK_THROWS_AS(parse_network("A -> B [k=2,3]\n"), ParseError);
}

TEST_CASE("rejected inputs") {
  CHECK_THROWS_AS(parse_network("A -> A\n"), ParseError);              // self-loop
  CHECK_THROWS_AS(parse_network("A + A -> 2 A\n"), ParseError);        // same complex
  CHECK_THROWS_AS(parse_network("A -> B\nA -> B\n"), ParseError);      // duplicate
  CHECK_THROWS_AS(parse_network("0 A -> B\n"), ParseError);            // zero coefficient
  CHECK_THROWS_AS(parse_network("0/3 A -> B\n"), ParseError);          // zero coefficient
  CHECK_THROWS_AS(parse_network("A -> B [k=0]\n"), ParseError);        // nonpositive rate
  CHECK_THROWS_AS(parse_network("A -> B [k=0.5]\n"), ParseError);      // decimal literal
  CHECK_THROWS_AS(parse_network("1/2.5 A -> B\n"), ParseError);        // decimal literal
  CHECK_THROWS_AS(parse_network("A -> \n"), ParseError);               // missing product
  CHECK_THROWS_AS(parse_network("A B -> C\n"), ParseError);            // missing '+'
  CHECK_THROWS_AS(parse_network("-> B\n"), ParseError);                // missing reactant
  CHECK_THROWS_AS(parse_network(""), ParseError);                      // no reactions
  CHECK_THROWS_AS(parse_network("# only a comment\n"), ParseError);    // no reactions
  CHECK_THROWS_AS(parse_network("A -> B ? C\n"), ParseError);          // stray character
  CHECK_THROWS_AS(parse_network("X: A -> B\nX: B -> C\n"), ParseError);  // duplicate label
  CHECK_THROWS_AS(parse_network("0 -> 0\n"), ParseError);              // zero self-loop
  CHECK_THROWS_AS(parse_network("0 + A -> B\n"), ParseError);          // zero in a sum
}

TEST_CASE("partial rate annotation is rejected") {
  CHECK_THROWS_AS(parse_network("A -> B [k=1]\nB -> C\n"), ParseError);
  CHECK_THROWS_AS(parse_network("A -> B\nB -> C [k=1]\n"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_network("A -> B\nA -> B + 0 C\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column > 1);
  }
}

TEST_CASE("whitespace and inline comments are free") {
  NetworkDocument a = parse_network("R1:2A+ B ->A +2B # note\n\n  \nR2: 2A->A+ C\n");
  NetworkDocument b = parse_network("R1: 2 A + B -> A + 2 B\nR2: 2 A -> A + C\n");
  CHECK(format_network(a) == format_network(b));
}

TEST_CASE("fraction coefficients stay exact") {
  NetworkDocument doc = parse_network("1/2 A -> 3/4 B\n");
  const Complex& reactant = doc.network.complex_at(0);
  CHECK(reactant.coeff(0) == Rational(1, 2));
  CHECK(format_network(doc) == "1/2 A -> 3/4 B\n");
}

TEST_CASE("round-trip on fixtures") {
  for (const char* name : {"baccam.crn", "example2.crn", "targetcell.crn", "table1.crn",
                           "example8.crn", "twostep.crn", "ssystem.crn", "revpair.crn",
                           "twocycles.crn"}) {
    CAPTURE(name);
    NetworkDocument doc = parse_network_file(fixture_path(name));
    std::string text = format_network(doc);
    NetworkDocument again = parse_network(text);

    REQUIRE(again.network.reaction_count() == doc.network.reaction_count());
    CHECK(again.network.species_count() == doc.network.species_count());
    for (int s = 0; s < doc.network.species_count(); ++s)
      CHECK(again.network.species_at(s).name == doc.network.species_at(s).name);
    for (int i = 0; i < doc.network.reaction_count(); ++i) {
      CHECK(again.network.reaction_at(i).label == doc.network.reaction_at(i).label);
      CHECK(again.network.reaction_text(i) == doc.network.reaction_text(i));
    }
    CHECK(again.rates == doc.rates);
    // One formatting pass is a fixed point.
    CHECK(format_network(again) == text);
  }
}

TEST_CASE("baccam fixture formats the empty complex") {
  NetworkDocument doc = parse_network_file(fixture_path("baccam.crn"));
  std::string text = format_network(doc);
  CHECK(text.find("R5: V -> 0\n") != std::string::npos);
}

TEST_CASE("rates are preserved verbatim") {
  NetworkDocument doc = parse_network("a: A -> B [k=1]\nb: B -> A [k=2]\n");
  std::string text = format_network(doc);
  CHECK(text == "a: A -> B [k=1]\nb: B -> A [k=2]\n");
}

TEST_CASE("round-trip on random networks") {
  testing::Rng rng(0xF00D);
  for (int trial = 0; trial < 100; ++trial) {
    Network net = testing::random_network(rng);
    NetworkDocument doc{net, std::nullopt};
    if (trial % 2 == 0)
      doc.rates = testing::random_rates(rng, net.reaction_count());

    NetworkDocument again = parse_network(format_network(doc));
    REQUIRE(again.network.reaction_count() == net.reaction_count());
    for (int s = 0; s < net.species_count(); ++s)
      CHECK(again.network.species_at(s).name == net.species_at(s).name);
    for (int i = 0; i < net.reaction_count(); ++i)
      CHECK(again.network.reaction_text(i) == net.reaction_text(i));
    CHECK(again.rates == doc.rates);
    CHECK(format_network(again) == format_network(doc));
  }
}
