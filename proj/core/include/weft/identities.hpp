#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "weft/energy.hpp"
#include "weft/series.hpp"

namespace weft {

// Desk-scale verification of the classical identities the transfer bijection
// settles: the two mod-16 theorems and the two-color overpartition
// corollary with its refined generating function. Every check counts both
// sides independently; nothing here reuses the bijection itself.

enum class SiladicVariant {
  distinct_odd, // distinct odd parts vs parts != 2, gaps >= 5, mod-16 rules
  odd_parts     // odd parts vs gap 0..3 mod-16 rules
};

// partitions of n into distinct odd parts / odd parts, weakly decreasing
std::vector<std::vector<int>> siladic_euler_side(SiladicVariant variant,
                                                 int n);
// partitions of n satisfying the variant's gap-plus-congruence conditions
std::vector<std::vector<int>> siladic_condition_side(SiladicVariant variant,
                                                     int n);

struct SiladicRow {
  int n;
  long long lhs; // Euler-type side
  long long rhs; // gap-condition side
};

struct SiladicReport {
  SiladicVariant variant;
  std::vector<SiladicRow> rows; // n = 1..n_max
  bool ok = false;              // every row has lhs == rhs
};

SiladicReport check_siladic(SiladicVariant variant, int n_max);

// The overpartition reading of a secondary state over the doubled two-letter
// alphabet: base symbol (a2, ab, ba, b2), overline flag, potential parity.
// e must be the overline doubling of {a, b}.
struct SecondaryClass {
  std::string symbol;
  bool overlined = false;
  int parity = 0; // 0 even, 1 odd
};

SecondaryClass overpartition_secondary_class(const EnergyMatrix& e, int upper,
                                             int lower);

struct OverpartitionReport {
  int n_max = 0;
  bool counts_ok = false; // A(n;u,v,w) == B(n;u,v,w) for every class
  bool gf_ok = false;     // refined series == the Pochhammer quotient
  // (n,u,v,w) -> (A,B); classes absent on both sides are not listed
  std::map<std::array<int, 4>, std::pair<long long, long long>> classes;
  std::vector<std::string> failures;

  bool ok() const { return counts_ok && gf_ok; }
};

// A counts positive-potential overpartitions over {a,b}; B counts the
// difference-condition side with the statistic read off the parity classes
// of the secondary states. Also assembles sum A q^n a^u b^v c^w d^(u+v-w)
// and compares it with (-acq;q)oo (-bcq;q)oo / ((adq;q)oo (bdq;q)oo).
OverpartitionReport check_overpartition_corollary(int n_max);

// the Pochhammer quotient above, over symbols a,b,c,d, truncated at q_order
TruncatedSeries overpartition_product_series(int q_order);

// (-q;q^2)oo and 1/(q;q^2)oo: distinct-odd-parts and odd-parts partitions
TruncatedSeries distinct_odd_series(int q_order);
TruncatedSeries odd_parts_series(int q_order);

} // namespace weft
