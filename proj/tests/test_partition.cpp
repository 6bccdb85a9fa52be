#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "util.hpp"
#include "weft/io.hpp"
#include "weft/partition.hpp"

using namespace weft;

TEST_CASE("validation") {
  EnergyMatrix d = overpartition_matrix();
  ColoredPartition lam = parse_partition_tokens(
      d, Side::O,
      "11:bbar 5:b 5:a 5:a 4:abar 2:a 1:b 1:abar 0:a 0:bbar -1:b -2:b");
  CHECK(validate(d, lam, Bound::none()));
  CHECK(energy(d, lam) == 31);
  CHECK(color_word(lam) ==
        word_of(d, {"bbar", "b", "a", "a", "abar", "a", "b", "abar", "a",
                    "bbar", "b", "b"}));

  // O-side partitions are chains of primaries
  ColoredPartition bad_o = parse_partition_tokens(d, Side::O, "5:a 5:a");
  bad_o.particles.push_back(Secondary{1, 2, 2});
  CHECK(!validate(d, bad_o, Bound::none()));
  ColoredPartition gap = parse_partition_tokens(d, Side::O, "3:a 3:b");
  CHECK(!validate(d, gap, Bound::none())); // eps(a,b)=1 needs a real drop
  CHECK(!validate(d, gap, Bound::none()).reason.empty());

  // E-side needs the strict mixed-degree relation between blocks
  ColoredPartition nu =
      parse_partition_tokens(d, Side::E, "6:bbar,1*abar.b,1:a");
  CHECK(validate(d, nu, Bound::none()));
  ColoredPartition tight =
      parse_partition_tokens(d, Side::E, "2:bbar,1:bbar");
  CHECK(!validate(d, tight, Bound::none())); // weakly related, not >>

  // standard vs dual: the boundary pair is valid only on one side
  ColoredPartition mixed =
      parse_partition_tokens(d, Side::E, "5:bbar,1*abar.b");
  CHECK(validate(d, mixed, Bound::none(), Relation::standard));
  CHECK(!validate(d, mixed, Bound::none(), Relation::dual));
}

TEST_CASE("potential windows") {
  EnergyMatrix d = overpartition_matrix();
  auto one = [&](const char* tok) {
    return parse_partition_tokens(d, Side::E, tok);
  };
  // at_least(rho): every half k >= rho
  CHECK(validate(d, one("1*abar.b"), Bound::at_least(1)));
  CHECK(!validate(d, one("0*abar.b"), Bound::at_least(1)));
  CHECK(validate(d, one("0*abar.b"), Bound::at_least(0)));
  CHECK(validate(d, one("1:a"), Bound::at_least(1)));
  CHECK(!validate(d, one("0:a"), Bound::at_least(1)));
  // at_most(rho): primaries k <= rho, secondaries k + eps <= rho
  CHECK(validate(d, one("0*abar.b"), Bound::at_most(1))); // 0+1 <= 1
  CHECK(!validate(d, one("1*abar.b"), Bound::at_most(1)));
  CHECK(validate(d, one("-1*b.a"), Bound::at_most(0)));
  CHECK(validate(d, one("1:a"), Bound::at_most(1)));
  CHECK(!validate(d, one("1:a"), Bound::at_most(0)));
}

namespace {

void check_table(const EnergyMatrix& e, Side side, const char* word_labels[],
                 int word_len, long long n, Bound bound,
                 std::vector<std::string> expect) {
  std::vector<std::string> labels(word_labels, word_labels + word_len);
  auto got = enumerate_partitions(e, side, word_of(e, labels), n, bound);
  CHECK(token_set(e, got) == sorted(expect));
}

const char* kWord[] = {"bbar", "abar", "b", "a"};

} // namespace

TEST_CASE("enumeration tables, n = 10") {
  EnergyMatrix d = overpartition_matrix();
  check_table(d, Side::O, kWord, 4, 10, Bound::at_least(0),
              {"9:bbar,1:abar,0:b,0:a", "8:bbar,2:abar,0:b,0:a",
               "7:bbar,3:abar,0:b,0:a", "7:bbar,2:abar,1:b,0:a",
               "6:bbar,4:abar,0:b,0:a", "6:bbar,3:abar,1:b,0:a",
               "6:bbar,2:abar,1:b,1:a", "5:bbar,4:abar,1:b,0:a",
               "5:bbar,3:abar,2:b,0:a", "5:bbar,3:abar,1:b,1:a",
               "4:bbar,3:abar,2:b,1:a"});
  check_table(d, Side::O, kWord, 4, 10, Bound::at_least(1),
              {"6:bbar,2:abar,1:b,1:a", "5:bbar,3:abar,1:b,1:a",
               "4:bbar,3:abar,2:b,1:a"});
  check_table(d, Side::E, kWord, 4, 10, Bound::at_least(0),
              {"9:bbar,1:abar,0*b.a", "8:bbar,2:abar,0*b.a",
               "7:bbar,3:abar,0*b.a", "7:bbar,1*abar.b,0:a",
               "6:bbar,4:abar,0*b.a", "6:bbar,3:abar,1:b,0:a",
               "6:bbar,1*abar.b,1:a", "4*bbar.abar,1:b,0:a",
               "3*bbar.abar,3:b,0:a", "5:bbar,3:abar,1*b.a",
               "3*bbar.abar,2:b,1:a"});
  check_table(d, Side::E, kWord, 4, 10, Bound::at_least(1),
              {"6:bbar,1*abar.b,1:a", "5:bbar,3:abar,1*b.a",
               "3*bbar.abar,2:b,1:a"});
  // out-of-window combinations are empty
  check_table(d, Side::O, kWord, 4, 10, Bound::at_most(1), {});
  check_table(d, Side::E, kWord, 4, 10, Bound::at_most(1), {});
  check_table(d, Side::O, kWord, 4, -8, Bound::at_least(0), {});
  check_table(d, Side::E, kWord, 4, -8, Bound::at_least(0), {});
}

TEST_CASE("enumeration tables, n = -8") {
  EnergyMatrix d = overpartition_matrix();
  check_table(d, Side::O, kWord, 4, -8, Bound::at_most(1),
              {"1:bbar,0:abar,-1:b,-8:a", "1:bbar,0:abar,-2:b,-7:a",
               "1:bbar,0:abar,-3:b,-6:a", "1:bbar,-1:abar,-2:b,-6:a",
               "1:bbar,0:abar,-4:b,-5:a", "1:bbar,-1:abar,-3:b,-5:a",
               "0:bbar,-1:abar,-2:b,-5:a", "1:bbar,-1:abar,-4:b,-4:a",
               "1:bbar,-2:abar,-3:b,-4:a", "0:bbar,-1:abar,-3:b,-4:a",
               "0:bbar,-2:abar,-3:b,-3:a"});
  check_table(d, Side::O, kWord, 4, -8, Bound::at_most(0),
              {"0:bbar,-1:abar,-2:b,-5:a", "0:bbar,-1:abar,-3:b,-4:a",
               "0:bbar,-2:abar,-3:b,-3:a"});
  check_table(d, Side::E, kWord, 4, -8, Bound::at_most(1),
              {"1:bbar,-1*abar.b,-8:a", "0*bbar.abar,-2:b,-7:a",
               "0*bbar.abar,-3:b,-6:a", "1:bbar,-2*abar.b,-6:a",
               "0*bbar.abar,-4:b,-5:a", "1:bbar,-1:abar,-3:b,-5:a",
               "0:bbar,-2*abar.b,-5:a", "1:bbar,-1:abar,-4*b.a",
               "1:bbar,-3:abar,-3*b.a", "-1:bbar,-3:abar,-2*b.a",
               "0:bbar,-2:abar,-3*b.a"});
  check_table(d, Side::E, kWord, 4, -8, Bound::at_most(0),
              {"0:bbar,-2*abar.b,-5:a", "-1:bbar,-3:abar,-2*b.a",
               "0:bbar,-2:abar,-3*b.a"});
}

TEST_CASE("enumeration order and edges") {
  EnergyMatrix d = overpartition_matrix();
  auto rows = enumerate_partitions(
      d, Side::O, word_of(d, {"bbar", "abar", "b", "a"}), 10,
      Bound::at_least(0));
  REQUIRE(rows.size() == 11);
  // canonical order: descending by potential sequence
  CHECK(partition_tokens(d, rows.front()) == "9:bbar,1:abar,0:b,0:a");
  CHECK(partition_tokens(d, rows.back()) == "4:bbar,3:abar,2:b,1:a");

  auto empty_word = enumerate_partitions(d, Side::O, {}, 0, Bound::at_least(0));
  REQUIRE(empty_word.size() == 1);
  CHECK(empty_word[0].particles.empty());
  CHECK(enumerate_partitions(d, Side::E, {}, 3, Bound::at_least(0)).empty());

  CHECK_THROWS_WITH_AS(
      enumerate_partitions(d, Side::O, word_of(d, {"a"}), 1, Bound::none()),
      "enumerate_partitions: unbounded enumeration is infinite",
      std::invalid_argument);
}

TEST_CASE("dual enumeration keeps the reflected window") {
  // Single state with eps = 1, word of four letters, n = 15. The standard
  // order has matching O/E counts at both windows; the dual E count matches
  // only at rho = 0. These five numbers are deliberate regressions.
  EnergyMatrix e = constant_matrix({"c1"}, 1);
  ColorWord w{0, 0, 0, 0};
  auto count = [&](Side s, Bound b, Relation r) {
    return enumerate_partitions(e, s, w, 15, b, r).size();
  };
  CHECK(count(Side::O, Bound::at_least(1), Relation::standard) == 6);
  CHECK(count(Side::E, Bound::at_least(1), Relation::standard) == 6);
  CHECK(count(Side::E, Bound::at_least(1), Relation::dual) == 7);
  CHECK(count(Side::O, Bound::at_least(0), Relation::standard) == 18);
  CHECK(count(Side::E, Bound::at_least(0), Relation::dual) == 18);

  // reflection carries the dual E-side onto the standard one exactly
  EnergyMatrix et = e.transposed();
  auto dual = enumerate_partitions(e, Side::E, w, 15, Bound::at_least(1),
                                   Relation::dual);
  std::vector<ColoredPartition> mapped;
  for (const auto& p : dual) {
    ColoredPartition q{Side::E, {}};
    for (auto it = p.particles.rbegin(); it != p.particles.rend(); ++it)
      q.particles.push_back(reflect(e, *it));
    mapped.push_back(q);
  }
  auto std_side = enumerate_partitions(et, Side::E, w, -15, Bound::at_most(-1),
                                       Relation::standard);
  CHECK(token_set(et, mapped) == token_set(et, std_side));
}

namespace {

// clang-format off
const int kDPrime[20][20] = {
  {2,2,2,2, 2,2,2,2, 1,2,2,2, 1,1,1,2, 1,1,1,1},
  {1,2,2,2, 1,1,1,1, 1,2,2,2, 1,1,1,2, 1,1,1,1},
  {1,1,1,2, 1,1,1,1, 0,1,1,1, 0,0,0,1, 1,1,1,1},
  {1,1,1,1, 1,1,1,1, 0,1,1,1, 0,0,0,1, 0,0,0,0},
  {3,3,3,3, 4,4,4,4, 3,4,4,4, 3,3,3,4, 3,3,3,3},
  {2,3,3,3, 2,2,2,2, 3,4,4,4, 3,3,3,4, 3,3,3,3},
  {2,2,2,3, 2,2,2,2, 1,2,2,2, 1,1,1,2, 3,3,3,3},
  {2,2,2,2, 2,2,2,2, 1,2,2,2, 1,1,1,2, 1,1,1,1},
  {2,2,2,2, 3,3,3,3, 2,3,3,3, 2,2,2,3, 2,2,2,2},
  {2,3,3,3, 2,2,2,2, 3,4,4,4, 3,3,3,4, 3,3,3,3},
  {2,2,2,3, 2,2,2,2, 1,2,2,2, 1,1,1,2, 3,3,3,3},
  {2,2,2,2, 2,2,2,2, 1,2,2,2, 1,1,1,2, 1,1,1,1},
  {2,2,2,2, 3,3,3,3, 2,3,3,3, 2,2,2,3, 2,2,2,2},
  {1,2,2,2, 1,1,1,1, 2,3,3,3, 2,2,2,3, 2,2,2,2},
  {1,1,1,2, 1,1,1,1, 0,1,1,1, 0,0,0,1, 2,2,2,2},
  {2,2,2,2, 2,2,2,2, 1,2,2,2, 1,1,1,2, 1,1,1,1},
  {2,2,2,2, 3,3,3,3, 2,3,3,3, 2,2,2,3, 2,2,2,2},
  {1,2,2,2, 1,1,1,1, 2,3,3,3, 2,2,2,3, 2,2,2,2},
  {1,1,1,2, 1,1,1,1, 0,1,1,1, 0,0,0,1, 2,2,2,2},
  {1,1,1,1, 1,1,1,1, 0,1,1,1, 0,0,0,1, 0,0,0,0},
};
// clang-format on

} // namespace

TEST_CASE("difference matrix of the overpartition alphabet") {
  EnergyMatrix d = overpartition_matrix();
  DifferenceMatrix dm = difference_matrix(d);
  CHECK(dm.primaries == 4);
  REQUIRE(dm.labels.size() == 20);
  CHECK(dm.labels ==
        std::vector<std::string>{
            "bbar", "abar", "a", "b", "bbar.bbar", "bbar.abar", "bbar.a",
            "bbar.b", "abar.bbar", "abar.abar", "abar.a", "abar.b", "a.bbar",
            "a.abar", "a.a", "a.b", "b.bbar", "b.abar", "b.a", "b.b"});
  REQUIRE(dm.entries.size() == 20);
  for (int i = 0; i < 20; ++i) {
    REQUIRE(dm.entries[i].size() == 20);
    for (int j = 0; j < 20; ++j) {
      INFO("row " << dm.labels[i] << " col " << dm.labels[j]);
      CHECK(dm.entries[i][j] == kDPrime[i][j]);
    }
  }
  CHECK(dm.secondary_parity ==
        std::vector<int>{1, 1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0});
  // primary block is eps + 1 (the relation there is strict)
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(dm.entries[i][j] == d.eps(i, j) + 1);
}

TEST_CASE("difference matrix of a free singleton") {
  EnergyMatrix e = constant_matrix({"a"}, 0);
  DifferenceMatrix dm = difference_matrix(e);
  CHECK(dm.labels == std::vector<std::string>{"a", "a.a"});
  CHECK(dm.entries == std::vector<std::vector<int>>{{1, 0}, {1, 0}});
  CHECK(dm.secondary_parity == std::vector<int>{0});
}
