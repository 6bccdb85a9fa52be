#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "util.hpp"
#include "weft/io.hpp"
#include "weft/partition.hpp"

using namespace weft;

TEST_CASE("energy json round trips") {
  for (const EnergyMatrix& e :
       {overpartition_matrix(), twister_matrix(),
        chi_less_matrix({"c1", "c2", "c3"})}) {
    EnergyMatrix back = energy_from_json(energy_to_json(e));
    CHECK(back.states().labels() == e.states().labels());
    for (int c = 0; c < e.states().size(); ++c)
      for (int d = 0; d < e.states().size(); ++d)
        CHECK(back.eps(c, d) == e.eps(c, d));
  }
}

TEST_CASE("energy json rejects malformed input") {
  CHECK_THROWS_AS(energy_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(energy_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(energy_from_json(R"({"states": ["a"]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(energy_from_json(R"({"matrix": [[0]]})"),
                  std::invalid_argument);
  // entries must be 0/1 and the matrix square over the states
  CHECK_THROWS_AS(
      energy_from_json(R"({"states": ["a"], "matrix": [[2]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      energy_from_json(R"({"states": ["a","b"], "matrix": [[0,0]]})"),
      std::invalid_argument);
}

TEST_CASE("energy files load from disk") {
  std::string path = "weft_test_energy.json";
  {
    std::ofstream out(path);
    out << energy_to_json(overpartition_matrix());
  }
  EnergyMatrix e = load_energy_file(path);
  CHECK(e.states().labels() ==
        std::vector<std::string>{"bbar", "abar", "a", "b"});
  CHECK(e.eps(0, 0) == 1);
  CHECK(e.eps(3, 3) == 0);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_energy_file("no/such/file.json"),
                  std::invalid_argument);
}

TEST_CASE("particle tokens") {
  EnergyMatrix e = overpartition_matrix();
  auto roundtrip = [&](const std::string& tok) {
    CHECK(particle_token(e, parse_particle_token(e, tok)) == tok);
  };
  roundtrip("5:bbar");
  roundtrip("0:a");
  roundtrip("-3:abar");
  roundtrip("5*b.a");
  roundtrip("-1*b.b");
  roundtrip("0*abar.a");

  Particle p = parse_particle_token(e, "5*b.a");
  REQUIRE(p.is_secondary());
  CHECK(p.secondary().k == 5);
  CHECK(e.states().label(p.secondary().upper) == "b");
  CHECK(e.states().label(p.secondary().lower) == "a");

  CHECK_THROWS_AS(parse_particle_token(e, "5:zebra"), std::invalid_argument);
  CHECK_THROWS_AS(parse_particle_token(e, "5*b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_particle_token(e, "x:a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_particle_token(e, ""), std::invalid_argument);
}

TEST_CASE("partition token lists") {
  EnergyMatrix e = overpartition_matrix();
  std::string tokens = "11:bbar,5*b.a,3*a.abar,4:a";
  ColoredPartition p = parse_partition_tokens(e, Side::E, tokens);
  CHECK(p.side == Side::E);
  CHECK(p.particles.size() == 4);
  CHECK(partition_tokens(e, p) == tokens);

  // whitespace separators parse to the same partition
  ColoredPartition q =
      parse_partition_tokens(e, Side::E, "11:bbar 5*b.a\t3*a.abar\n4:a");
  CHECK(q == p);

  ColoredPartition empty = parse_partition_tokens(e, Side::O, "");
  CHECK(empty.side == Side::O);
  CHECK(empty.particles.empty());
  CHECK(partition_tokens(e, empty) == "");
}

TEST_CASE("partition json round trips") {
  EnergyMatrix e = overpartition_matrix();
  ColoredPartition lambda = parse_partition_tokens(
      e, Side::O,
      "11:bbar,5:b,5:a,5:a,4:abar,2:a,1:b,1:abar,0:a,0:bbar,-1:b,-2:b");
  ColoredPartition back = partition_from_json(e, partition_to_json(e, lambda));
  CHECK(back == lambda);

  ColoredPartition nu = parse_partition_tokens(
      e, Side::E, "11:bbar,5*b.a,3*a.abar,4:a,2:b,0*abar.a,-1:bbar,-1*b.b");
  back = partition_from_json(e, partition_to_json(e, nu, 2));
  CHECK(back == nu);

  CHECK_THROWS_AS(partition_from_json(e, R"({"flavor":"X","particles":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(partition_from_json(e, "not json"), std::invalid_argument);
  CHECK_THROWS_AS(
      partition_from_json(
          e, R"({"flavor":"O","particles":[{"k":1,"state":"zebra"}]})"),
      std::invalid_argument);
}

TEST_CASE("difference matrix json round trips") {
  DifferenceMatrix d = difference_matrix(overpartition_matrix());
  DifferenceMatrix back =
      difference_matrix_from_json(difference_matrix_to_json(d));
  CHECK(back.labels == d.labels);
  CHECK(back.entries == d.entries);
  CHECK(back.secondary_parity == d.secondary_parity);
  CHECK(back.primaries == d.primaries);

  CHECK_THROWS_AS(difference_matrix_from_json("{}"), std::invalid_argument);
}
