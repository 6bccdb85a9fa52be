#pragma once

#include <string>
#include <vector>

#include "weft/particle.hpp"

// Colored partitions of the two flavors (O: all-primary chains under the
// energy order; E: mixed chains under the well-ordering), bound windows,
// finite enumeration, and the minimal-difference table between unit types.

namespace weft {

enum class Side { O, E };

struct Bound {
    enum class Kind { none, lower, upper };  // lower: rho+, upper: rho-

    Kind kind = Kind::none;
    int rho = 0;

    static Bound none() { return {}; }
    static Bound at_least(int rho) { return {Kind::lower, rho}; }
    static Bound at_most(int rho) { return {Kind::upper, rho}; }

    bool is_none() const { return kind == Kind::none; }
    bool operator==(const Bound&) const = default;
};

struct ColoredPartition {
    Side side = Side::O;
    std::vector<Particle> particles;

    bool operator==(const ColoredPartition&) const = default;
};

struct ValidationResult {
    bool ok = true;
    std::string reason;  // first violation when !ok

    explicit operator bool() const { return ok; }
};

// Checks flavor shape (O: primaries only), consecutive relations
// (O: rel_succ; E: rel under `r`), and the bound window on every particle
// (primaries by potential; secondaries by half-potential k, i.e. rho+ means
// k >= rho and rho- means k + eps <= rho).
ValidationResult validate(const EnergyMatrix& e, const ColoredPartition& p, Bound bound,
                          Relation r = Relation::standard);

// Sum of particle potentials (secondaries count 2k + eps).
long long energy(const EnergyMatrix& e, const ColoredPartition& p);

// Underlying state word: primaries contribute one letter, secondaries two
// (upper then lower).
ColorWord color_word(const ColoredPartition& p);

// All partitions of the given flavor with the given underlying word and total
// energy n inside the bound window. Requires a real bound (Kind::none throws:
// the set would be infinite). Output is sorted descending-lexicographically
// by potential sequence, tie-broken by block-length sequence.
std::vector<ColoredPartition> enumerate_partitions(const EnergyMatrix& e, Side side,
                                                   const ColorWord& word, long long n, Bound bound,
                                                   Relation r = Relation::standard);

// Minimal-difference table. Unit types are the |C| primary states followed by
// the |C|^2 secondary pairs in row-major state order; entry(x,y) is the least
// potential difference pot(x) - pot(y) admitted by rel_gg. Secondary
// potentials live on a fixed parity: parity(c,c') = eps(c,c').
struct DifferenceMatrix {
    std::vector<std::string> labels;       // size |C| + |C|^2
    std::vector<std::vector<int>> entries;
    std::vector<int> secondary_parity;     // size |C|^2, 0 = even, 1 = odd

    int primaries = 0;  // |C|
};

DifferenceMatrix difference_matrix(const EnergyMatrix& e);

}  // namespace weft
