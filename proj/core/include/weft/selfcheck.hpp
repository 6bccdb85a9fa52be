#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weft/energy.hpp"
#include "weft/partition.hpp"

namespace weft {

// Randomized structural property suites: the involution laws of the crossing
// step, the crossing-criterion equivalences, the slot/potential bookkeeping
// identities, predictor monotonicity, the index-function Chasles relations,
// count symmetry under both relations, and bound preservation. Every suite
// is deterministic for a fixed seed. Failures carry a replayable description
// (matrix rows, word, n, particle tokens).

struct PropertyResult {
  std::string name;
  int trials = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

struct SelfCheckReport {
  std::uint64_t seed = 0;
  std::vector<PropertyResult> suites;

  bool ok() const {
    for (const auto& s : suites)
      if (!s.ok()) return false;
    return true;
  }
};

SelfCheckReport run_selfcheck(std::uint64_t seed, int trials = 200);

// Random generators shared with the test binaries. States are labeled
// c1, c2, ...; partitions are built valid by construction.
EnergyMatrix random_energy_matrix(std::mt19937_64& rng, int min_states,
                                  int max_states);
ColoredPartition random_o_partition(const EnergyMatrix& e,
                                    std::mt19937_64& rng, int max_len,
                                    int k_hi);
ColoredPartition random_e_partition(const EnergyMatrix& e,
                                    std::mt19937_64& rng, int max_len,
                                    int k_hi);

// Energy of the extremal valid all-primary partition on a word: the least
// total with all potentials >= rho, and the greatest with all <= rho. Used
// to aim enumeration windows at feasible n.
long long minimal_o_energy(const EnergyMatrix& e, const ColorWord& word,
                           int rho);
long long maximal_o_energy(const EnergyMatrix& e, const ColorWord& word,
                           int rho);

} // namespace weft
