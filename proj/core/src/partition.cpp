#include "weft/partition.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace weft {

namespace {

void check_word(const EnergyMatrix& e, const ColorWord& w) {
    for (int c : w)
        if (c < 0 || c >= e.size()) throw std::invalid_argument("invalid state index in word");
}

bool in_bound(const EnergyMatrix& e, const Particle& p, Bound b) {
    if (b.is_none()) return true;
    if (p.is_primary()) {
        return b.kind == Bound::Kind::lower ? p.primary().k >= b.rho : p.primary().k <= b.rho;
    }
    const Secondary& s = p.secondary();
    if (b.kind == Bound::Kind::lower) return s.k >= b.rho;
    return s.k + e.eps(s.upper, s.lower) <= b.rho;
}

}  // namespace

ValidationResult validate(const EnergyMatrix& e, const ColoredPartition& p, Bound bound,
                          Relation r) {
    auto fail = [](std::string why) { return ValidationResult{false, std::move(why)}; };

    for (size_t i = 0; i < p.particles.size(); ++i) {
        const Particle& x = p.particles[i];
        const int lo = x.is_primary() ? x.primary().state : x.secondary().upper;
        const int hi = x.is_primary() ? x.primary().state : x.secondary().lower;
        if (lo < 0 || lo >= e.size() || hi < 0 || hi >= e.size())
            return fail("particle " + std::to_string(i) + ": state index out of range");
        if (p.side == Side::O && x.is_secondary())
            return fail("particle " + std::to_string(i) + ": secondary particle on the O side");
        if (!in_bound(e, x, bound))
            return fail("particle " + std::to_string(i) + ": outside the bound window");
    }
    for (size_t i = 0; i + 1 < p.particles.size(); ++i) {
        const Particle& x = p.particles[i];
        const Particle& y = p.particles[i + 1];
        const bool ok = p.side == Side::O ? rel_succ(e, x.primary(), y.primary()) : rel(e, r, x, y);
        if (!ok)
            return fail("particles " + std::to_string(i) + "," + std::to_string(i + 1) +
                        ": consecutive pair not well-related");
    }
    return {};
}

long long energy(const EnergyMatrix& e, const ColoredPartition& p) {
    long long total = 0;
    for (const Particle& x : p.particles) total += x.potential(e);
    return total;
}

ColorWord color_word(const ColoredPartition& p) {
    ColorWord w;
    for (const Particle& x : p.particles) {
        if (x.is_primary()) {
            w.push_back(x.primary().state);
        } else {
            w.push_back(x.secondary().upper);
            w.push_back(x.secondary().lower);
        }
    }
    return w;
}

// ---- enumeration ----------------------------------------------------------

namespace {

long long ceil_div(long long a, long long m) {
    return a >= 0 ? (a + m - 1) / m : -((-a) / m);
}

// O side: potentials v_0 >= v_1 + eps >= ... along the word, summing to n.
void enumerate_o(const EnergyMatrix& e, const ColorWord& w, long long n, Bound b,
                 std::vector<ColoredPartition>& out) {
    const int s = static_cast<int>(w.size());
    std::vector<Primary> cur;
    cur.reserve(static_cast<size_t>(s));

    // suff_delta[t] = sum over u > t of Delta(t,u); max achievable suffix sum
    // from position t with v_t = v is (s-t)*v - suff_delta[t].
    std::vector<long long> suff_delta(static_cast<size_t>(s) + 1, 0);
    for (int t = s - 1; t >= 0; --t) {
        long long acc = 0, d = 0;
        for (int u = t + 1; u < s; ++u) {
            d += e.eps(w[static_cast<size_t>(u) - 1], w[static_cast<size_t>(u)]);
            acc += d;
        }
        suff_delta[static_cast<size_t>(t)] = acc;
    }

    auto rec = [&](auto&& self, int t, long long rest) -> void {
        if (t == s) {
            ColoredPartition p{Side::O, {}};
            p.particles.assign(cur.begin(), cur.end());
            out.push_back(std::move(p));
            return;
        }
        const long long m = s - t;
        long long hi, lo;
        if (b.kind == Bound::Kind::lower) {
            hi = rest - (m - 1) * b.rho;
            lo = b.rho;
        } else {
            hi = b.rho;
            lo = std::numeric_limits<long long>::min() / 4;
        }
        if (t > 0) {
            const long long chain = cur.back().k - e.eps(w[static_cast<size_t>(t) - 1], w[static_cast<size_t>(t)]);
            hi = std::min(hi, chain);
        }
        lo = std::max(lo, ceil_div(rest + suff_delta[static_cast<size_t>(t)], m));
        if (m == 1) {
            if (rest < lo || rest > hi) return;
            hi = lo = rest;
        }
        for (long long v = hi; v >= lo; --v) {
            cur.push_back(Primary{static_cast<int>(v), w[static_cast<size_t>(t)]});
            self(self, t + 1, rest - v);
            cur.pop_back();
        }
    };
    rec(rec, 0, n);
}

struct Block {
    int start = 0;
    int len = 1;       // 1 or 2
    int eps = 0;       // secondary fusion energy, 0 for primaries
    int state0 = 0;    // primary state / secondary upper
    int state1 = 0;    // secondary lower
};

Particle block_particle(const Block& blk, long long pot) {
    if (blk.len == 1) return Primary{static_cast<int>(pot), blk.state0};
    return Secondary{static_cast<int>((pot - blk.eps) / 2), blk.state0, blk.state1};
}

// Least potential difference pot(x) - pot(y) such that rel holds between unit
// types x and y.
int rel_threshold(const EnergyMatrix& e, Relation r, const Block& x, const Block& y) {
    if (x.len == 1 && y.len == 1) return e.eps(x.state0, y.state0) + 1;
    if (x.len == 1) {
        const int bar = e.eps(x.state0, y.state0) + y.eps;
        return r == Relation::standard ? bar : bar + 1;
    }
    if (y.len == 1) {
        const int bar = x.eps + e.eps(x.state1, y.state0);
        return r == Relation::standard ? bar + 1 : bar;
    }
    return 2 * e.eps(x.state1, y.state0) + x.eps + y.eps;
}

void enumerate_e_mask(const EnergyMatrix& e, const std::vector<Block>& blocks, long long n,
                      Bound b, Relation r, std::vector<ColoredPartition>& out) {
    const int T = static_cast<int>(blocks.size());

    std::vector<int> step(static_cast<size_t>(T), 0);  // threshold between t-1 and t
    for (int t = 1; t < T; ++t)
        step[static_cast<size_t>(t)] = rel_threshold(e, r, blocks[static_cast<size_t>(t) - 1],
                                                     blocks[static_cast<size_t>(t)]);

    // suff_thr[t] = sum over u > t of (chained threshold t -> u); max suffix
    // sum from block t at potential P is (T-t)*P - suff_thr[t].
    std::vector<long long> suff_thr(static_cast<size_t>(T) + 1, 0);
    for (int t = T - 1; t >= 0; --t) {
        long long acc = 0, d = 0;
        for (int u = t + 1; u < T; ++u) {
            d += step[static_cast<size_t>(u)];
            acc += d;
        }
        suff_thr[static_cast<size_t>(t)] = acc;
    }

    auto bound_hi = [&](const Block& blk) -> long long {
        return blk.len == 1 ? b.rho : 2LL * b.rho - blk.eps;
    };
    auto bound_lo = [&](const Block& blk) -> long long {
        return blk.len == 1 ? b.rho : 2LL * b.rho + blk.eps;
    };

    // min_rest[t] = least admissible sum of blocks t.. (lower bounds only).
    std::vector<long long> min_rest(static_cast<size_t>(T) + 1, 0);
    if (b.kind == Bound::Kind::lower)
        for (int t = T - 1; t >= 0; --t)
            min_rest[static_cast<size_t>(t)] =
                min_rest[static_cast<size_t>(t) + 1] + bound_lo(blocks[static_cast<size_t>(t)]);

    std::vector<Particle> cur;
    cur.reserve(static_cast<size_t>(T));

    auto rec = [&](auto&& self, int t, long long rest, long long prev) -> void {
        if (t == T) {
            out.push_back(ColoredPartition{Side::E, cur});
            return;
        }
        const Block& blk = blocks[static_cast<size_t>(t)];
        const long long m = T - t;
        long long hi = std::numeric_limits<long long>::max() / 4;
        long long lo = std::numeric_limits<long long>::min() / 4;
        if (t > 0) hi = prev - step[static_cast<size_t>(t)];
        if (b.kind == Bound::Kind::lower) {
            hi = std::min(hi, rest - min_rest[static_cast<size_t>(t) + 1]);
            lo = bound_lo(blk);
        } else {
            hi = std::min(hi, bound_hi(blk));
        }
        lo = std::max(lo, ceil_div(rest + suff_thr[static_cast<size_t>(t)], m));
        if (m == 1) {
            if (rest < lo || rest > hi) return;
            hi = lo = rest;
        }
        if (blk.len == 2) {
            // fixed parity: pot == eps (mod 2)
            if (((hi - blk.eps) & 1LL) != 0) --hi;
            if (((lo - blk.eps) & 1LL) != 0) ++lo;
            if (m == 1 && hi != lo) return;
        }
        const long long stride = blk.len == 2 ? 2 : 1;
        for (long long v = hi; v >= lo; v -= stride) {
            Particle p = block_particle(blk, v);
            assert(t == 0 || rel(e, r, cur.back(), p));
            cur.push_back(p);
            self(self, t + 1, rest - v, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, n, 0);
}

void masks_rec(const EnergyMatrix& e, const ColorWord& w, int pos, std::vector<Block>& blocks,
               long long n, Bound b, Relation r, std::vector<ColoredPartition>& out) {
    const int s = static_cast<int>(w.size());
    if (pos == s) {
        enumerate_e_mask(e, blocks, n, b, r, out);
        return;
    }
    Block one{pos, 1, 0, w[static_cast<size_t>(pos)], 0};
    blocks.push_back(one);
    masks_rec(e, w, pos + 1, blocks, n, b, r, out);
    blocks.pop_back();
    if (pos + 1 < s) {
        const int up = w[static_cast<size_t>(pos)], lo = w[static_cast<size_t>(pos) + 1];
        Block two{pos, 2, e.eps(up, lo), up, lo};
        blocks.push_back(two);
        masks_rec(e, w, pos + 2, blocks, n, b, r, out);
        blocks.pop_back();
    }
}

std::vector<int> potential_seq(const EnergyMatrix& e, const ColoredPartition& p) {
    std::vector<int> v;
    v.reserve(p.particles.size());
    for (const Particle& x : p.particles) v.push_back(x.potential(e));
    return v;
}

std::vector<int> block_lens(const ColoredPartition& p) {
    std::vector<int> v;
    v.reserve(p.particles.size());
    for (const Particle& x : p.particles) v.push_back(x.degree());
    return v;
}

}  // namespace

std::vector<ColoredPartition> enumerate_partitions(const EnergyMatrix& e, Side side,
                                                   const ColorWord& word, long long n, Bound bound,
                                                   Relation r) {
    check_word(e, word);
    if (bound.is_none())
        throw std::invalid_argument("enumerate_partitions: unbounded enumeration is infinite");

    std::vector<ColoredPartition> out;
    if (word.empty()) {
        if (n == 0) out.push_back(ColoredPartition{side, {}});
        return out;
    }
    if (side == Side::O) {
        enumerate_o(e, word, n, bound, out);
    } else {
        std::vector<Block> blocks;
        masks_rec(e, word, 0, blocks, n, bound, r, out);
    }

    std::sort(out.begin(), out.end(), [&](const ColoredPartition& a, const ColoredPartition& b2) {
        const auto pa = potential_seq(e, a), pb = potential_seq(e, b2);
        if (pa != pb) return pa > pb;  // descending by potential sequence
        return block_lens(a) < block_lens(b2);
    });
    return out;
}

DifferenceMatrix difference_matrix(const EnergyMatrix& e) {
    const int nc = e.size();
    DifferenceMatrix dm;
    dm.primaries = nc;

    std::vector<Block> units;
    for (int c = 0; c < nc; ++c) units.push_back(Block{0, 1, 0, c, 0});
    for (int c = 0; c < nc; ++c)
        for (int c2 = 0; c2 < nc; ++c2) units.push_back(Block{0, 2, e.eps(c, c2), c, c2});

    for (const Block& u : units) {
        if (u.len == 1) {
            dm.labels.push_back(e.states().label(u.state0));
        } else {
            dm.labels.push_back(e.states().label(u.state0) + "." + e.states().label(u.state1));
            dm.secondary_parity.push_back(u.eps & 1);
        }
    }

    const size_t total = units.size();
    dm.entries.assign(total, std::vector<int>(total, 0));
    for (size_t i = 0; i < total; ++i) {
        for (size_t j = 0; j < total; ++j) {
            const Block &x = units[i], &y = units[j];
            // Scan realizable potential differences for the least admissible
            // one; doubles as a check that rel_gg is a pure difference test.
            // A primary neighbour's potential is a free integer, so a parity
            // class only constrains d when both units are secondary.
            int found = 100;
            for (int d = 8; d >= -8; --d) {
                long long px, py;
                if (x.len == 2 && y.len == 2) {
                    if ((d - x.eps + y.eps) & 1) continue;  // no pair realizes this d
                    py = y.eps;
                    px = py + d;
                } else if (x.len == 2) {
                    px = x.eps;
                    py = px - d;
                } else {
                    py = y.len == 2 ? y.eps : 0;
                    px = py + d;
                }
                const bool ok = rel_gg(e, block_particle(x, px), block_particle(y, py));
                if (ok) found = d;
                else if (found != 100) break;  // monotone: no gaps below the threshold
            }
            assert(found == rel_threshold(e, Relation::standard, x, y));
            dm.entries[i][j] = found;
        }
    }
    return dm;
}

}  // namespace weft
