#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "util.hpp"
#include "weft/particle.hpp"

using namespace weft;

namespace {

// every primary and secondary over e with k in [-kr, kr]
std::vector<Particle> all_particles(const EnergyMatrix& e, int kr) {
  std::vector<Particle> out;
  for (int k = -kr; k <= kr; ++k)
    for (int c = 0; c < e.size(); ++c) out.push_back(Primary{k, c});
  for (int k = -kr; k <= kr; ++k)
    for (int c = 0; c < e.size(); ++c)
      for (int c2 = 0; c2 < e.size(); ++c2)
        out.push_back(Secondary{k, c, c2});
  return out;
}

} // namespace

TEST_CASE("potentials and degrees") {
  EnergyMatrix d = overpartition_matrix();
  const int a = d.states().index_of("a"), b = d.states().index_of("b"),
            abar = d.states().index_of("abar");
  Particle p{Primary{5, a}};
  CHECK(p.degree() == 1);
  CHECK(p.potential(d) == 5);
  Particle s{Secondary{5, b, a}}; // eps(b,a) = 0
  CHECK(s.degree() == 2);
  CHECK(s.potential(d) == 10);
  Particle s1{Secondary{0, abar, a}}; // eps(abar,a) = 1
  CHECK(s1.potential(d) == 1);
  Particle s2{Secondary{-1, b, b}};
  CHECK(s2.potential(d) == -2);
}

TEST_CASE("energy order on primaries") {
  EnergyMatrix d = overpartition_matrix();
  const int bbar = d.states().index_of("bbar");
  CHECK(rel_succ(d, Primary{3, bbar}, Primary{1, bbar}));
  CHECK(rel_succ(d, Primary{2, bbar}, Primary{1, bbar})); // weak: gap == eps
  CHECK(!rel_succ(d, Primary{1, bbar}, Primary{1, bbar}));
  CHECK(is_troublesome(d, Primary{2, bbar}, Primary{1, bbar}));
  CHECK(!is_troublesome(d, Primary{3, bbar}, Primary{1, bbar}));
}

TEST_CASE("fusing troublesome pairs") {
  EnergyMatrix d = overpartition_matrix();
  const int abar = d.states().index_of("abar"), a = d.states().index_of("a");
  Primary up{3, abar}, lo{2, a}; // eps(abar,a) = 1, gap 1
  REQUIRE(is_troublesome(d, up, lo));
  Secondary s = make_secondary(d, up, lo);
  CHECK(s.k == 2);
  CHECK(s.upper == abar);
  CHECK(s.lower == a);
  CHECK(Particle{s}.potential(d) == 5); // 3 + 2
  CHECK(gamma(d, s) == up);
  CHECK(mu(s) == lo);
  auto [g, m] = split_secondary(d, s);
  CHECK(g == up);
  CHECK(m == lo);
  CHECK_THROWS_AS(make_secondary(d, Primary{4, abar}, lo),
                  std::invalid_argument);
}

TEST_CASE("difference conditions, case by case") {
  EnergyMatrix d = overpartition_matrix();
  const int bbar = d.states().index_of("bbar"),
            abar = d.states().index_of("abar"), a = d.states().index_of("a"),
            b = d.states().index_of("b");

  // primary/primary is strict, unlike rel_succ
  CHECK(rel_gg(d, Particle{Primary{3, bbar}}, Particle{Primary{1, bbar}}));
  CHECK(rel_gg_dual(d, Particle{Primary{3, bbar}}, Particle{Primary{1, bbar}}));
  CHECK(!rel_gg(d, Particle{Primary{2, bbar}}, Particle{Primary{1, bbar}}));
  CHECK(!rel_gg_dual(d, Particle{Primary{2, bbar}}, Particle{Primary{1, bbar}}));
  CHECK(rel_succ(d, Primary{2, bbar}, Primary{1, bbar}));

  // primary/secondary: weak in the standard order, strict in the dual
  Particle y{Secondary{1, abar, b}}; // potential 3
  CHECK(rel_gg(d, Particle{Primary{5, bbar}}, y));
  CHECK(!rel_gg_dual(d, Particle{Primary{5, bbar}}, y));
  CHECK(rel_gg_dual(d, Particle{Primary{6, bbar}}, y));
  CHECK(!rel_gg(d, Particle{Primary{4, bbar}}, y));

  // secondary/primary: strict in the standard order, weak in the dual
  Particle x{Secondary{2, abar, a}}; // potential 5
  CHECK(!rel_gg(d, x, Particle{Primary{4, bbar}}));
  CHECK(rel_gg_dual(d, x, Particle{Primary{4, bbar}}));
  CHECK(rel_gg(d, x, Particle{Primary{3, bbar}}));

  // secondary/secondary agrees across the two orders
  Particle s1{Secondary{1, abar, a}}; // potential 3
  Particle s2{Secondary{1, a, a}};    // potential 2
  CHECK(rel_gg(d, s1, s2));
  CHECK(rel_gg_dual(d, s1, s2));
  Particle s0{Secondary{0, abar, a}}; // potential 1
  CHECK(!rel_gg(d, s0, s2));
  CHECK(!rel_gg_dual(d, s0, s2));

  // dispatch helper
  CHECK(rel(d, Relation::standard, Particle{Primary{5, bbar}}, y));
  CHECK(!rel(d, Relation::dual, Particle{Primary{5, bbar}}, y));
}

TEST_CASE("reflection") {
  EnergyMatrix d = overpartition_matrix();
  EnergyMatrix dt = d.transposed();
  const int abar = d.states().index_of("abar"), a = d.states().index_of("a");

  Particle p{Primary{3, a}};
  Particle rp = reflect(d, p);
  REQUIRE(rp.is_primary());
  CHECK(rp.primary() == Primary{-3, a});

  Particle s{Secondary{2, abar, a}}; // eps = 1, potential 5
  Particle rs = reflect(d, s);
  REQUIRE(rs.is_secondary());
  CHECK(rs.secondary() == Secondary{-3, a, abar});
  // eps(a,abar) in the transpose is eps(abar,a) = 1: potential -5
  CHECK(rs.potential(dt) == -s.potential(d));

  for (const Particle& x : all_particles(d, 3)) {
    Particle back = reflect(dt, reflect(d, x));
    CHECK(back == x);
    CHECK(reflect(d, x).potential(dt) == -x.potential(d));
  }
}

TEST_CASE("duality is reflection across the transpose") {
  EnergyMatrix d = overpartition_matrix();
  EnergyMatrix dt = d.transposed();
  auto ps = all_particles(d, 3);
  for (const Particle& x : ps)
    for (const Particle& y : ps)
      CHECK(rel_gg_dual(d, x, y) ==
            rel_gg(dt, reflect(d, y), reflect(d, x)));
}
