#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "util.hpp"
#include "weft/io.hpp"
#include "weft/transfer.hpp"

using namespace weft;

namespace {

const char* kLambda =
    "11:bbar 5:b 5:a 5:a 4:abar 2:a 1:b 1:abar 0:a 0:bbar -1:b -2:b";
const char* kNu =
    "11:bbar,5*b.a,3*a.abar,4:a,2:b,0*abar.a,-1:bbar,-1*b.b";

} // namespace

TEST_CASE("crossing one pair") {
  EnergyMatrix d = overpartition_matrix();
  const int a = d.states().index_of("a"), b = d.states().index_of("b");
  Particle p{Primary{5, a}};
  Particle s{Secondary{2, b, a}};
  auto [left, right] = lambda_cross(d, p, s);
  REQUIRE(left.is_secondary());
  REQUIRE(right.is_primary());
  CHECK(left.secondary() == Secondary{2, a, b});
  CHECK(right.primary() == Primary{4, a});
  // conservation
  CHECK(left.potential(d) + right.potential(d) ==
        p.potential(d) + s.potential(d));
  // involution
  auto [back_l, back_r] = lambda_cross(d, left, right);
  CHECK(back_l == p);
  CHECK(back_r == s);

  CHECK_THROWS_AS(lambda_cross(d, p, Particle{Primary{1, b}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lambda_cross(d, s, Particle{Secondary{0, a, a}}),
                  std::invalid_argument);
}

TEST_CASE("the worked map") {
  EnergyMatrix d = overpartition_matrix();
  ColoredPartition lam = parse_partition_tokens(d, Side::O, kLambda);

  TransferOptions opt;
  opt.record_trace = true;
  TransferResult r = phi(d, lam, opt);
  CHECK(partition_tokens(d, r.image) == kNu);
  CHECK(r.image.side == Side::E);
  CHECK(r.crossings == 4);
  CHECK(energy(d, r.image) == energy(d, lam));
  CHECK(color_word(r.image) == color_word(lam));

  // slot decomposition of the intermediate sequence
  CHECK(r.decomposition.s == 12);
  CHECK(r.decomposition.I == std::vector<int>{2, 5, 7, 9});
  CHECK(r.decomposition.J == std::vector<int>{0, 1, 4, 11});

  // sigma is a permutation of the twelve slots
  std::vector<int> seen = r.sigma.to_final;
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < 12; ++i) CHECK(seen[i] == i);

  // each trace event is one energy transfer, conserving degree pair
  REQUIRE(r.trace.size() == 4);
  for (const TraceEvent& ev : r.trace) {
    auto [al, ar] = lambda_cross(d, ev.before_left, ev.before_right);
    CHECK(al == ev.after_left);
    CHECK(ar == ev.after_right);
    CHECK(ev.before_left.potential(d) + ev.before_right.potential(d) ==
          ev.after_left.potential(d) + ev.after_right.potential(d));
  }

  // the inverse map
  TransferResult back = psi(d, r.image);
  CHECK(back.image == lam);
  CHECK(back.crossings == 4);
}

TEST_CASE("step one fuses right to left") {
  EnergyMatrix d = overpartition_matrix();
  ColoredPartition lam = parse_partition_tokens(d, Side::O, kLambda);
  auto [mixed, dec] = phi_step1(d, lam);
  CHECK(partition_tokens(d, ColoredPartition{Side::E, mixed}) ==
        "11:bbar,5:b,5*a.a,4:abar,1*a.b,0*abar.a,-1*bbar.b,-2:b");
  CHECK(dec.s == 12);
  CHECK(dec.I == std::vector<int>{2, 5, 7, 9});
  CHECK(dec.J == std::vector<int>{0, 1, 4, 11});
}

TEST_CASE("strategies agree on the image") {
  EnergyMatrix d = overpartition_matrix();
  ColoredPartition lam = parse_partition_tokens(d, Side::O, kLambda);
  TransferResult base = phi(d, lam);

  TransferOptions o;
  o.strategy = CrossingStrategy::rightmost();
  TransferResult rm = phi(d, lam, o);
  CHECK(rm.image == base.image);
  CHECK(rm.crossings == base.crossings);

  for (uint64_t seed : {0ULL, 1ULL, 7ULL, 99ULL, 2026ULL}) {
    o.strategy = CrossingStrategy::seeded_random(seed);
    TransferResult rr = phi(d, lam, o);
    CHECK(rr.image == base.image);
    CHECK(rr.crossings == base.crossings);
    TransferResult bb = psi(d, rr.image, o);
    CHECK(bb.image == lam);
  }

  // the other pairing scan changes bookkeeping, never the image
  TransferOptions lr;
  lr.scan = PairScan::left_to_right;
  lr.strategy = CrossingStrategy::rightmost();
  CHECK(phi(d, lam, lr).image == base.image);
}

TEST_CASE("predictors match the run") {
  EnergyMatrix d = overpartition_matrix();
  ColoredPartition lam = parse_partition_tokens(d, Side::O, kLambda);
  TransferResult r = phi(d, lam);

  Prediction p = predict_phi(d, lam);
  CHECK(p.crossings == 4);
  CHECK(p.sigma.to_final == r.sigma.to_final);
  CHECK(p.decomposition.J == std::vector<int>{0, 1, 4, 11});
  CHECK(p.decomposition.I == std::vector<int>{2, 5, 7, 9});
  CHECK(p.table == std::vector<std::vector<int>>{{0, 4, 5, 6},
                                                 {-5, -1, 1, 2},
                                                 {-6, -1, 0, 1},
                                                 {-8, -2, -1, 0}});
  CHECK(p.crossing_pairs ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 5}, {4, 5}, {11, 9}});

  Prediction q = predict_psi(d, r.image);
  CHECK(q.crossings == 4);
  CHECK(q.decomposition.J == std::vector<int>{0, 5, 6, 9});
  CHECK(q.decomposition.I == std::vector<int>{1, 3, 7, 10});
  CHECK(q.table == std::vector<std::vector<int>>{{5, 7, 7, 7},
                                                 {0, 2, 2, 2},
                                                 {-1, 1, 1, 1},
                                                 {-3, -1, -1, -1}});
  CHECK(q.crossing_pairs ==
        std::vector<std::pair<int, int>>{{5, 1}, {5, 3}, {6, 3}, {9, 10}});
}

TEST_CASE("slot expansion of the image") {
  EnergyMatrix d = overpartition_matrix();
  ColoredPartition nu = parse_partition_tokens(d, Side::E, kNu);
  auto [slots, dec] = expand_slots(d, nu);
  std::vector<int> l;
  for (const Primary& p : slots) l.push_back(p.k);
  CHECK(l == std::vector<int>{11, 5, 5, 3, 3, 4, 2, 1, 0, -1, -1, -1});
  CHECK(dec.I == std::vector<int>{1, 3, 7, 10});
  CHECK(dec.J == std::vector<int>{0, 5, 6, 9});
  CHECK(dec.s == 12);

  ColorWord w;
  for (const Primary& p : slots) w.push_back(p.state);
  const std::vector<int> delta{1, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0};
  const std::vector<int> etas{0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 0};
  for (int k = 0; k + 1 < static_cast<int>(w.size()); ++k) {
    CHECK(word_delta(d, w, k, k + 1) == delta[static_cast<size_t>(k)]);
    CHECK(eta(dec, k, k + 1) == etas[static_cast<size_t>(k)]);
  }

  // alpha/beta bookkeeping: Chasles, antisymmetry, index shift
  for (int x = -2; x <= 13; ++x)
    for (int y = -2; y <= 13; ++y) {
      CHECK(alpha(dec, x, y) == -alpha(dec, y, x));
      CHECK(beta(dec, x, y) == -beta(dec, y, x));
      CHECK(alpha(dec, x, y) == beta(dec, x + 1, y + 1));
      CHECK(alpha(dec, 0, x) + alpha(dec, x, y) == alpha(dec, 0, y));
    }
}

TEST_CASE("degenerate inputs") {
  EnergyMatrix d = overpartition_matrix();
  ColoredPartition empty{Side::O, {}};
  TransferResult r = phi(d, empty);
  CHECK(r.image.particles.empty());
  CHECK(r.crossings == 0);
  ColoredPartition one = parse_partition_tokens(d, Side::O, "3:a");
  TransferResult r1 = phi(d, one);
  CHECK(partition_tokens(d, r1.image) == "3:a");
  CHECK(psi(d, r1.image).image == one);

  CHECK_THROWS_AS(phi(d, parse_partition_tokens(d, Side::E, "3:a")),
                  std::invalid_argument);
  CHECK_THROWS_AS(psi(d, parse_partition_tokens(d, Side::O, "3:a")),
                  std::invalid_argument);
  // invalid chains are rejected, not mapped
  CHECK_THROWS_AS(phi(d, parse_partition_tokens(d, Side::O, "3:a 3:b")),
                  std::invalid_argument);
  CHECK_THROWS_AS(psi(d, parse_partition_tokens(d, Side::E, "2:bbar,1:bbar")),
                  std::invalid_argument);
}
