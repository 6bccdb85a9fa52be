#include "weft/particle.hpp"

namespace weft {

bool rel_succ(const EnergyMatrix& e, const Primary& a, const Primary& b) {
    return a.k - b.k >= e.eps(a.state, b.state);
}

bool is_troublesome(const EnergyMatrix& e, const Primary& a, const Primary& b) {
    return a.k - b.k == e.eps(a.state, b.state);
}

Secondary make_secondary(const EnergyMatrix& e, const Primary& upper, const Primary& lower) {
    if (!is_troublesome(e, upper, lower))
        throw std::invalid_argument("make_secondary: pair is not troublesome");
    return Secondary{lower.k, upper.state, lower.state};
}

Primary gamma(const EnergyMatrix& e, const Secondary& s) {
    return Primary{s.k + e.eps(s.upper, s.lower), s.upper};
}

Primary mu(const Secondary& s) { return Primary{s.k, s.lower}; }

std::pair<Primary, Primary> split_secondary(const EnergyMatrix& e, const Secondary& s) {
    return {gamma(e, s), mu(s)};
}

namespace {

enum class Strictness { weak, strict };

bool mixed_rel(const EnergyMatrix& e, const Particle& x, const Particle& y, Strictness ps,
               Strictness sp) {
    if (x.is_primary() && y.is_primary()) {
        const Primary &a = x.primary(), &b = y.primary();
        return a.k - b.k > e.eps(a.state, b.state);
    }
    if (x.is_primary() && y.is_secondary()) {
        const Primary& a = x.primary();
        const Secondary& s = y.secondary();
        const int bar = e.eps(a.state, s.upper) + e.eps(s.upper, s.lower);
        const int diff = a.k - y.potential(e);
        return ps == Strictness::weak ? diff >= bar : diff > bar;
    }
    if (x.is_secondary() && y.is_primary()) {
        const Secondary& s = x.secondary();
        const Primary& b = y.primary();
        const int bar = e.eps(s.upper, s.lower) + e.eps(s.lower, b.state);
        const int diff = x.potential(e) - b.k;
        return sp == Strictness::strict ? diff > bar : diff >= bar;
    }
    // secondary, secondary: mu(x) >= gamma(y) in the energy order.
    return rel_succ(e, mu(x.secondary()), gamma(e, y.secondary()));
}

}  // namespace

bool rel_gg(const EnergyMatrix& e, const Particle& x, const Particle& y) {
    return mixed_rel(e, x, y, Strictness::weak, Strictness::strict);
}

bool rel_gg_dual(const EnergyMatrix& e, const Particle& x, const Particle& y) {
    return mixed_rel(e, x, y, Strictness::strict, Strictness::weak);
}

Particle reflect(const EnergyMatrix& e, const Particle& p) {
    if (p.is_primary()) return Primary{-p.primary().k, p.primary().state};
    const Secondary& s = p.secondary();
    return Secondary{-s.k - e.eps(s.upper, s.lower), s.lower, s.upper};
}

}  // namespace weft
