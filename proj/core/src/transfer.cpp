#include "weft/transfer.hpp"

#include <algorithm>
#include <random>

namespace weft {

std::pair<Particle, Particle> lambda_cross(const EnergyMatrix& e, const Particle& x,
                                           const Particle& y) {
    if (x.degree() == y.degree())
        throw std::invalid_argument("lambda_cross: needs one primary and one secondary");
    if (x.is_primary()) {
        const Primary& p = x.primary();
        const Secondary& s = y.secondary();
        Secondary s2{s.k + e.eps(s.upper, s.lower), p.state, s.upper};
        Primary p2{p.k - e.eps(p.state, s.upper) - e.eps(s.upper, s.lower), s.lower};
        return {Particle(s2), Particle(p2)};
    }
    const Secondary& s = x.secondary();
    const Primary& p = y.primary();
    Primary p2{p.k + e.eps(s.upper, s.lower) + e.eps(s.lower, p.state), s.upper};
    Secondary s2{s.k - e.eps(s.lower, p.state), s.lower, p.state};
    return {Particle(p2), Particle(s2)};
}

// ---- index bookkeeping ----------------------------------------------------

namespace {

int count_in(const std::vector<int>& sorted, int lo, int hi) {  // #elements in [lo, hi)
    auto a = std::lower_bound(sorted.begin(), sorted.end(), lo);
    auto b = std::lower_bound(sorted.begin(), sorted.end(), hi);
    return static_cast<int>(b - a);
}

}  // namespace

int alpha(const IndexDecomposition& d, int k, int k2) {
    if (k > k2) return -alpha(d, k2, k);
    return count_in(d.J, k + 1, k2 + 1);
}

int beta(const IndexDecomposition& d, int k, int k2) {
    if (k > k2) return -beta(d, k2, k);
    return count_in(d.J, k, k2);
}

int eta(const IndexDecomposition& d, int k, int k2) { return alpha(d, k, k2); }

// ---- shared crossing loop ---------------------------------------------------

namespace {

struct Elem {
    Particle p;
    int origin;  // original slot; a secondary owns (origin, origin+1)

    Elem(Particle p_, int o) : p(std::move(p_)), origin(o) {}
};

std::vector<int> slot_of(const std::vector<Elem>& seq) {
    std::vector<int> s;
    s.reserve(seq.size());
    int at = 0;
    for (const Elem& el : seq) {
        s.push_back(at);
        at += el.p.degree();
    }
    return s;
}

PositionMap final_positions(const std::vector<Elem>& seq, int s) {
    PositionMap pm;
    pm.to_final.assign(static_cast<size_t>(s), -1);
    int at = 0;
    for (const Elem& el : seq) {
        pm.to_final.at(static_cast<size_t>(el.origin)) = at;
        if (el.p.is_secondary()) pm.to_final.at(static_cast<size_t>(el.origin) + 1) = at + 1;
        at += el.p.degree();
    }
    return pm;
}

// The bookkeeping identity behind the whole construction: the matter that
// started at slot k sits at slot p carrying potential l0[k] + Delta(p, k).
void check_slot_identity(const EnergyMatrix& e, const std::vector<Elem>& seq,
                         const std::vector<int>& l0, const ColorWord& w0) {
    int at = 0;
    for (const Elem& el : seq) {
        if (el.p.is_primary()) {
            const int want = l0[static_cast<size_t>(el.origin)] + word_delta(e, w0, at, el.origin);
            if (el.p.primary().k != want || el.p.primary().state != w0[static_cast<size_t>(at)])
                throw std::logic_error("transfer: slot/potential identity broken");
        } else {
            const Secondary& s = el.p.secondary();
            const Primary g = gamma(e, s), m = mu(s);
            const int want_g = l0[static_cast<size_t>(el.origin)] + word_delta(e, w0, at, el.origin);
            const int want_m =
                l0[static_cast<size_t>(el.origin) + 1] + word_delta(e, w0, at + 1, el.origin + 1);
            if (g.k != want_g || m.k != want_m || g.state != w0[static_cast<size_t>(at)] ||
                m.state != w0[static_cast<size_t>(at) + 1])
                throw std::logic_error("transfer: slot/potential identity broken");
        }
        at += el.p.degree();
    }
}

int pick(const std::vector<int>& candidates, const CrossingStrategy& strat, std::mt19937_64& rng) {
    switch (strat.kind) {
        case CrossingStrategy::Kind::leftmost: return candidates.front();
        case CrossingStrategy::Kind::rightmost: return candidates.back();
        case CrossingStrategy::Kind::seeded_random: {
            std::uniform_int_distribution<size_t> d(0, candidates.size() - 1);
            return candidates[d(rng)];
        }
    }
    return candidates.front();
}

// Runs the crossing loop until `violates` admits no adjacent mixed pair.
// Returns the crossing count.
template <typename ViolatesFn>
int crossing_loop(const EnergyMatrix& e, std::vector<Elem>& seq, int s,
                  const TransferOptions& opt, const std::vector<int>& l0, const ColorWord& w0,
                  std::vector<TraceEvent>* trace, ViolatesFn violates) {
    std::mt19937_64 rng(opt.strategy.seed);
    const int cap = s * s + 1;
    int crossings = 0;
    std::vector<int> bad;
    while (true) {
        bad.clear();
        for (size_t q = 0; q + 1 < seq.size(); ++q) {
            if (seq[q].p.degree() == seq[q + 1].p.degree()) continue;
            if (violates(seq[q].p, seq[q + 1].p)) bad.push_back(static_cast<int>(q));
        }
        if (bad.empty()) break;
        if (++crossings > cap) throw std::logic_error("transfer: crossing cap exceeded");

        const int q = pick(bad, opt.strategy, rng);
        Elem& L = seq[static_cast<size_t>(q)];
        Elem& R = seq[static_cast<size_t>(q) + 1];
        auto [nl, nr] = lambda_cross(e, L.p, R.p);

        if (trace) {
            TraceEvent ev{slot_of(seq)[static_cast<size_t>(q)], L.p, R.p, nl, nr};
            trace->push_back(std::move(ev));
        }
        std::swap(L.origin, R.origin);  // matter keeps its role: the pair swaps wholesale
        L.p = nl;
        R.p = nr;
        if (opt.check_invariants) check_slot_identity(e, seq, l0, w0);
    }
    return crossings;
}

std::vector<int> primary_potentials(const ColoredPartition& p) {
    std::vector<int> l;
    l.reserve(p.particles.size());
    for (const Particle& x : p.particles) l.push_back(x.primary().k);
    return l;
}

}  // namespace

// ---- phi -------------------------------------------------------------------

std::pair<std::vector<Particle>, IndexDecomposition> phi_step1(const EnergyMatrix& e,
                                                               const ColoredPartition& lambda,
                                                               PairScan scan) {
    const int s = static_cast<int>(lambda.particles.size());
    std::vector<bool> fused_upper(static_cast<size_t>(s), false);
    auto trouble = [&](int k) {
        return is_troublesome(e, lambda.particles[static_cast<size_t>(k)].primary(),
                              lambda.particles[static_cast<size_t>(k) + 1].primary());
    };
    if (scan == PairScan::right_to_left) {
        for (int k = s - 2; k >= 0; --k)
            if (trouble(k)) {
                fused_upper[static_cast<size_t>(k)] = true;
                --k;  // pairs are disjoint
            }
    } else {
        for (int k = 0; k <= s - 2; ++k)
            if (trouble(k)) {
                fused_upper[static_cast<size_t>(k)] = true;
                ++k;
            }
    }

    std::vector<Particle> mixed;
    IndexDecomposition d;
    d.s = s;
    for (int k = 0; k < s; ++k) {
        if (fused_upper[static_cast<size_t>(k)]) {
            d.I.push_back(k);
            mixed.push_back(make_secondary(e, lambda.particles[static_cast<size_t>(k)].primary(),
                                           lambda.particles[static_cast<size_t>(k) + 1].primary()));
            ++k;
        } else {
            d.J.push_back(k);
            mixed.push_back(lambda.particles[static_cast<size_t>(k)]);
        }
    }
    return {std::move(mixed), std::move(d)};
}

TransferResult phi(const EnergyMatrix& e, const ColoredPartition& lambda,
                   const TransferOptions& opt) {
    if (lambda.side != Side::O) throw std::invalid_argument("phi: input must be O-side");
    if (auto v = validate(e, lambda, Bound::none()); !v)
        throw std::invalid_argument("phi: invalid input: " + v.reason);

    const int s = static_cast<int>(lambda.particles.size());
    const ColorWord w0 = color_word(lambda);
    const std::vector<int> l0 = primary_potentials(lambda);

    auto [mixed, decomp] = phi_step1(e, lambda, opt.scan);
    std::vector<Elem> seq;
    seq.reserve(mixed.size());
    {
        int at = 0;
        for (const Particle& p : mixed) {
            seq.emplace_back(p, at);
            at += p.degree();
        }
    }
    if (opt.check_invariants) check_slot_identity(e, seq, l0, w0);

    TransferResult res;
    res.crossings = crossing_loop(
        e, seq, s, opt, l0, w0, opt.record_trace ? &res.trace : nullptr,
        [&](const Particle& x, const Particle& y) { return !rel_gg(e, x, y); });

    res.image.side = Side::E;
    for (const Elem& el : seq) res.image.particles.push_back(el.p);
    res.sigma = final_positions(seq, s);
    res.decomposition = std::move(decomp);

    if (auto v = validate(e, res.image, Bound::none()); !v)
        throw std::logic_error("phi: image failed validation: " + v.reason);
    return res;
}

// ---- psi -------------------------------------------------------------------

std::pair<std::vector<Primary>, IndexDecomposition> expand_slots(const EnergyMatrix& e,
                                                                 const ColoredPartition& nu) {
    std::vector<Primary> slots;
    IndexDecomposition d;
    for (const Particle& x : nu.particles) {
        if (x.is_primary()) {
            d.J.push_back(static_cast<int>(slots.size()));
            slots.push_back(x.primary());
        } else {
            d.I.push_back(static_cast<int>(slots.size()));
            slots.push_back(gamma(e, x.secondary()));
            slots.push_back(mu(x.secondary()));
        }
    }
    d.s = static_cast<int>(slots.size());
    return {std::move(slots), std::move(d)};
}

TransferResult psi(const EnergyMatrix& e, const ColoredPartition& nu, const TransferOptions& opt) {
    if (nu.side != Side::E) throw std::invalid_argument("psi: input must be E-side");
    if (auto v = validate(e, nu, Bound::none()); !v)
        throw std::invalid_argument("psi: invalid input: " + v.reason);

    auto [slots, decomp] = expand_slots(e, nu);
    const int s = decomp.s;
    const ColorWord w0 = color_word(nu);
    std::vector<int> l0;
    l0.reserve(slots.size());
    for (const Primary& p : slots) l0.push_back(p.k);

    std::vector<Elem> seq;
    {
        int at = 0;
        for (const Particle& p : nu.particles) {
            seq.emplace_back(p, at);
            at += p.degree();
        }
    }

    TransferResult res;
    res.crossings = crossing_loop(
        e, seq, s, opt, l0, w0, opt.record_trace ? &res.trace : nullptr,
        [&](const Particle& x, const Particle& y) {
            if (x.is_primary())  // primary then secondary
                return !rel_succ(e, x.primary(), gamma(e, y.secondary()));
            return !rel_gg(e, Particle(mu(x.secondary())), y);
        });

    res.sigma = final_positions(seq, s);
    res.decomposition = std::move(decomp);
    res.image.side = Side::O;
    for (const Elem& el : seq) {
        if (el.p.is_primary()) {
            res.image.particles.push_back(el.p);
        } else {
            auto [g, m] = split_secondary(e, el.p.secondary());
            res.image.particles.push_back(g);
            res.image.particles.push_back(m);
        }
    }

    if (auto v = validate(e, res.image, Bound::none()); !v)
        throw std::logic_error("psi: image failed validation: " + v.reason);
    return res;
}

// ---- predictors -------------------------------------------------------------

namespace {

PositionMap merge_sigma(const IndexDecomposition& d, const std::vector<std::vector<int>>& table) {
    PositionMap pm;
    pm.to_final.assign(static_cast<size_t>(d.s), -1);
    size_t tj = 0, ti = 0;
    int at = 0;
    while (tj < d.J.size() || ti < d.I.size()) {
        bool take_j;
        if (tj == d.J.size()) take_j = false;
        else if (ti == d.I.size()) take_j = true;
        else take_j = table[tj][ti] >= 0;
        if (take_j) {
            pm.to_final[static_cast<size_t>(d.J[tj])] = at++;
            ++tj;
        } else {
            pm.to_final[static_cast<size_t>(d.I[ti])] = at;
            pm.to_final[static_cast<size_t>(d.I[ti]) + 1] = at + 1;
            at += 2;
            ++ti;
        }
    }
    return pm;
}

void count_crossings(Prediction& pred) {
    for (size_t r = 0; r < pred.decomposition.J.size(); ++r) {
        for (size_t c = 0; c < pred.decomposition.I.size(); ++c) {
            const int j = pred.decomposition.J[r], i = pred.decomposition.I[c];
            const int v = pred.table[r][c];
            if ((j > i && v >= 0) || (j < i && v < 0)) pred.crossing_pairs.emplace_back(j, i);
        }
    }
    pred.crossings = static_cast<int>(pred.crossing_pairs.size());
}

}  // namespace

Prediction predict_phi(const EnergyMatrix& e, const ColoredPartition& lambda) {
    if (lambda.side != Side::O) throw std::invalid_argument("predict_phi: input must be O-side");
    if (auto v = validate(e, lambda, Bound::none()); !v)
        throw std::invalid_argument("predict_phi: invalid input: " + v.reason);

    const ColorWord w = color_word(lambda);
    const std::vector<int> l = primary_potentials(lambda);

    Prediction pred;
    pred.decomposition = phi_step1(e, lambda).second;
    const auto& d = pred.decomposition;
    pred.table.assign(d.J.size(), std::vector<int>(d.I.size(), 0));
    for (size_t r = 0; r < d.J.size(); ++r) {
        for (size_t c = 0; c < d.I.size(); ++c) {
            const int j = d.J[r], i = d.I[c];
            pred.table[r][c] = l[static_cast<size_t>(j)] - 2 * l[static_cast<size_t>(i) + 1] -
                               word_delta(e, w, j, i + 1) -
                               word_delta(e, w, i + 1 - beta(d, j, i), i + 1);
        }
    }
    count_crossings(pred);
    pred.sigma = merge_sigma(d, pred.table);
    return pred;
}

Prediction predict_psi(const EnergyMatrix& e, const ColoredPartition& nu) {
    if (nu.side != Side::E) throw std::invalid_argument("predict_psi: input must be E-side");
    if (auto v = validate(e, nu, Bound::none()); !v)
        throw std::invalid_argument("predict_psi: invalid input: " + v.reason);

    auto [slots, d0] = expand_slots(e, nu);
    const ColorWord w = color_word(nu);

    Prediction pred;
    pred.decomposition = std::move(d0);
    const auto& d = pred.decomposition;
    pred.table.assign(d.J.size(), std::vector<int>(d.I.size(), 0));
    for (size_t r = 0; r < d.J.size(); ++r) {
        for (size_t c = 0; c < d.I.size(); ++c) {
            const int j = d.J[r], i = d.I[c];
            pred.table[r][c] = slots[static_cast<size_t>(j)].k - slots[static_cast<size_t>(i)].k -
                               word_delta(e, w, j, i);
        }
    }
    count_crossings(pred);
    pred.sigma = merge_sigma(d, pred.table);
    return pred;
}

}  // namespace weft
