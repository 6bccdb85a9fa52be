#pragma once

#include <variant>

#include "weft/energy.hpp"

// Primary particles (one colored part) and secondary particles (a fused
// troublesome pair, stored by half-potential), with the order relations
// between them.

namespace weft {

struct Primary {
    int k;      // potential
    int state;  // color index

    bool operator==(const Primary&) const = default;
};

// Fused pair with upper part (k + eps(upper,lower), upper) and lower part
// (k, lower). `k` is the half-potential: the full potential is 2k + eps,
// recomputed on demand and never stored.
struct Secondary {
    int k;
    int upper;
    int lower;

    bool operator==(const Secondary&) const = default;
};

class Particle {
public:
    Particle(Primary p) : v_(p) {}
    Particle(Secondary s) : v_(s) {}

    bool is_primary() const { return std::holds_alternative<Primary>(v_); }
    bool is_secondary() const { return !is_primary(); }
    int degree() const { return is_primary() ? 1 : 2; }

    const Primary& primary() const { return std::get<Primary>(v_); }
    const Secondary& secondary() const { return std::get<Secondary>(v_); }

    int potential(const EnergyMatrix& e) const {
        if (is_primary()) return primary().k;
        const Secondary& s = secondary();
        return 2 * s.k + e.eps(s.upper, s.lower);
    }

    bool operator==(const Particle&) const = default;

private:
    std::variant<Primary, Secondary> v_;
};

// k_c >= k'_c' in the energy order: k - k' >= eps(c,c').
bool rel_succ(const EnergyMatrix& e, const Primary& a, const Primary& b);

// Two consecutive primaries form a troublesome pair when the energy relation
// holds with equality: k - k' == eps(c,c').
bool is_troublesome(const EnergyMatrix& e, const Primary& a, const Primary& b);

// Fuse a troublesome pair (upper first). Throws if the pair is not troublesome.
Secondary make_secondary(const EnergyMatrix& e, const Primary& upper, const Primary& lower);

// The two halves of a secondary.
Primary gamma(const EnergyMatrix& e, const Secondary& s);  // (k + eps, upper)
Primary mu(const Secondary& s);                            // (k, lower)

// Split back into (gamma, mu).
std::pair<Primary, Primary> split_secondary(const EnergyMatrix& e, const Secondary& s);

// The strict well-ordering between mixed-degree neighbours. Case by case on
// the degrees of (x, y) = ((k,c)-side data):
//   primary, primary:     k - k' > eps(c,c')
//   primary, secondary:   k - pot(y) >= eps(c,c') + eps(c',c'')
//   secondary, primary:   pot(x) - k' > eps(c,c') + eps(c',c'')
//   secondary, secondary: mu(x) rel_succ gamma(y), i.e. k - k' >= eps(c',c'') + eps(c'',c''')
bool rel_gg(const EnergyMatrix& e, const Particle& x, const Particle& y);

// Dual ordering: identical for (p,p) and (s,s); the mixed cases swap
// strictness (p,s strict; s,p weak).
bool rel_gg_dual(const EnergyMatrix& e, const Particle& x, const Particle& y);

enum class Relation { standard, dual };

inline bool rel(const EnergyMatrix& e, Relation r, const Particle& x, const Particle& y) {
    return r == Relation::standard ? rel_gg(e, x, y) : rel_gg_dual(e, x, y);
}

// Potential negation composed with upper/lower swap; carries particles over
// the transposed matrix. rel_gg_dual(e,x,y) == rel_gg(e^T, reflect(y), reflect(x)).
Particle reflect(const EnergyMatrix& e, const Particle& p);

}  // namespace weft
