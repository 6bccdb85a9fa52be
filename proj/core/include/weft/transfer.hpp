#pragma once

#include <cstdint>
#include <utility>

#include "weft/partition.hpp"

// The two mutually inverse maps between the all-primary (O) and mixed (E)
// partition flavors: fuse troublesome pairs and bubble particles past each
// other with the energy-transfer crossing until every neighbour pair is
// well-ordered, or undo exactly that.

namespace weft {

// Energy-transfer crossing of one adjacent mixed-degree pair. The state word
// and the total potential are preserved; applying it twice restores the pair.
//   (k,c), (k',c',c'')  ->  (k'+eps(c',c''), c, c'), (k-eps(c,c')-eps(c',c''), c'')
//   (k,c,c'), (k'',c''') -> (k''+eps(c,c')+eps(c',c''), c), (k-eps(c',c''), c', c'')
// Throws unless exactly one of the two particles is secondary.
std::pair<Particle, Particle> lambda_cross(const EnergyMatrix& e, const Particle& x,
                                           const Particle& y);

struct CrossingStrategy {
    enum class Kind { leftmost, rightmost, seeded_random };

    Kind kind = Kind::leftmost;
    uint64_t seed = 0;

    static CrossingStrategy leftmost() { return {}; }
    static CrossingStrategy rightmost() { return {Kind::rightmost, 0}; }
    static CrossingStrategy seeded_random(uint64_t seed) { return {Kind::seeded_random, seed}; }
};

// Which end the disjoint troublesome pairing is collected from. The final map
// image does not depend on it; the intermediate fused partition does.
enum class PairScan { right_to_left, left_to_right };

struct TransferOptions {
    CrossingStrategy strategy;
    PairScan scan = PairScan::right_to_left;
    bool record_trace = false;
    // Re-check the position/potential bookkeeping identity after every
    // crossing (cheap at desk scale, O(s) per step).
    bool check_invariants = true;
};

struct TraceEvent {
    int slot;  // leftmost word slot of the crossed pair (0-based)
    Particle before_left, before_right;
    Particle after_left, after_right;
};

// Fused-pair bookkeeping on the O side: I holds the upper slot of each fused
// pair, J the untouched slots. I, I+1, J partition {0..s-1}.
struct IndexDecomposition {
    std::vector<int> I;  // ascending
    std::vector<int> J;  // ascending
    int s = 0;
};

// Count of J-slots in the half-open interval; alpha over (k,k2], beta over
// [k,k2). Both antisymmetric: f(k2,k) = -f(k,k2) for k <= k2, and both satisfy
// the chain rule.
int alpha(const IndexDecomposition& d, int k, int k2);
int beta(const IndexDecomposition& d, int k, int k2);
// Same counting shape as alpha, used on the E-side decomposition.
int eta(const IndexDecomposition& d, int k, int k2);

// Final slot of each original slot after all crossings; fused pairs move as a
// unit, so sigma maps I-slots to adjacent final slots.
struct PositionMap {
    std::vector<int> to_final;  // to_final[original slot] = final slot, 0-based

    int operator()(int k) const { return to_final.at(static_cast<size_t>(k)); }
};

struct TransferResult {
    ColoredPartition image;
    PositionMap sigma;
    IndexDecomposition decomposition;
    int crossings = 0;
    std::vector<TraceEvent> trace;
};

// Step 1 of the forward map: greedily collect disjoint troublesome pairs
// (right-to-left by default), fuse each into a secondary. Returns the mixed
// sequence plus the I/J decomposition.
std::pair<std::vector<Particle>, IndexDecomposition> phi_step1(const EnergyMatrix& e,
                                                               const ColoredPartition& lambda,
                                                               PairScan scan = PairScan::right_to_left);

// Forward map O -> E: fuse, then cross mixed-degree neighbour pairs that
// violate rel_gg until none remain. Input must be a valid O-side partition
// (unbounded check); the image is a valid E-side partition with the same
// energy and state word, and is independent of the crossing strategy and the
// pairing scan.
TransferResult phi(const EnergyMatrix& e, const ColoredPartition& lambda,
                   const TransferOptions& opt = {});

// Inverse map E -> O: cross (primary,secondary) neighbours with
// !rel_succ(p, gamma(s)) and (secondary,primary) neighbours with
// !rel_gg(mu(s), p) until none remain, then split every secondary.
TransferResult psi(const EnergyMatrix& e, const ColoredPartition& nu,
                   const TransferOptions& opt = {});

// Closed-form predictions, no crossings performed.
struct Prediction {
    IndexDecomposition decomposition;
    // table[r][c] = predictor value for (J[r], I[c])
    std::vector<std::vector<int>> table;
    PositionMap sigma;
    int crossings = 0;
    std::vector<std::pair<int, int>> crossing_pairs;  // (j, i) slot pairs that cross
};

// For a valid O-side partition: phi-side predictor
//   table(j,i) = l_j - 2 l_{i+1} - Delta(j,i+1) - Delta(i+1-beta(j,i), i+1),
// predicted final positions and crossing count of phi.
Prediction predict_phi(const EnergyMatrix& e, const ColoredPartition& lambda);

// For a valid E-side partition: psi-side predictor over the expanded primary
// slots, table(j,i) = l_j - l_i - Delta(j,i), predicting psi's step-1
// positions and crossing count.
Prediction predict_psi(const EnergyMatrix& e, const ColoredPartition& nu);

// Expand an E-side partition to per-slot primaries (secondary -> gamma, mu)
// with the I/J decomposition induced by its blocks.
std::pair<std::vector<Primary>, IndexDecomposition> expand_slots(const EnergyMatrix& e,
                                                                 const ColoredPartition& nu);

}  // namespace weft
