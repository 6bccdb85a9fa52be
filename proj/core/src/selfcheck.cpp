#include "weft/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "weft/io.hpp"
#include "weft/series.hpp"
#include "weft/transfer.hpp"

namespace weft {

namespace {

using Rng = std::mt19937_64;

uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

int rint(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool rbool(Rng& rng) { return rint(rng, 0, 1) == 1; }

std::string matrix_desc(const EnergyMatrix& e) {
    std::ostringstream os;
    os << "states=";
    for (int i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e.states().label(i);
    }
    os << " eps=";
    for (int i = 0; i < e.size(); ++i) {
        if (i) os << '|';
        for (int j = 0; j < e.size(); ++j) os << e.eps(i, j);
    }
    return os.str();
}

std::string word_desc(const EnergyMatrix& e, const ColorWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << e.states().label(w[i]);
    }
    return os.str();
}

// One suite = `trials` independently seeded attempts of `fn`; a returned
// string is a failure. Stops collecting after a handful -- enough to replay.
PropertyResult run_suite(const std::string& name, uint64_t seed, int trials,
                         const std::function<std::optional<std::string>(Rng&)>& fn) {
    PropertyResult r;
    r.name = name;
    r.trials = trials;
    uint64_t base = mix(seed ^ mix(std::hash<std::string>{}(name)));
    for (int t = 0; t < trials; ++t) {
        Rng rng(mix(base + static_cast<uint64_t>(t)));
        std::optional<std::string> fail;
        try {
            fail = fn(rng);
        } catch (const std::exception& ex) {
            fail = std::string("unexpected exception: ") + ex.what();
        }
        if (fail) {
            r.failures.push_back("trial " + std::to_string(t) + ": " + *fail);
            if (r.failures.size() >= 8) break;
        }
    }
    return r;
}

Particle random_particle(Rng& rng, const EnergyMatrix& e, int k_lo, int k_hi) {
    int c = rint(rng, 0, e.size() - 1);
    if (rbool(rng)) return Primary{rint(rng, k_lo, k_hi), c};
    return Secondary{rint(rng, k_lo, k_hi), c, rint(rng, 0, e.size() - 1)};
}

ColorWord random_word(Rng& rng, const EnergyMatrix& e, int min_len, int max_len) {
    int len = rint(rng, min_len, max_len);
    ColorWord w(static_cast<size_t>(len));
    for (int& c : w) c = rint(rng, 0, e.size() - 1);
    return w;
}

ColorWord particle_word(const Particle& p) {
    if (p.is_primary()) return {p.primary().state};
    return {p.secondary().upper, p.secondary().lower};
}

std::vector<std::string> token_multiset(const EnergyMatrix& e,
                                        const std::vector<ColoredPartition>& ps) {
    std::vector<std::string> out;
    out.reserve(ps.size());
    for (const auto& p : ps) out.push_back(partition_tokens(e, p));
    std::sort(out.begin(), out.end());
    return out;
}

ColoredPartition reflect_partition(const EnergyMatrix& e, const ColoredPartition& p) {
    ColoredPartition out;
    out.side = p.side;
    for (auto it = p.particles.rbegin(); it != p.particles.rend(); ++it)
        out.particles.push_back(reflect(e, *it));
    return out;
}

// The count symmetry is a rho in {0,1} statement; outside that range it is
// simply false (e.g. single state, eps=1, word c^4, n=15 at 2+).
Bound random_bound(Rng& rng) {
    int rho = rint(rng, 0, 1);
    return rbool(rng) ? Bound::at_least(rho) : Bound::at_most(rho);
}

std::string bound_desc(const Bound& b) {
    return std::string(b.kind == Bound::Kind::lower ? "bound>=" : "bound<=") +
           std::to_string(b.rho);
}

// ---- suites ----------------------------------------------------------------

PropertyResult suite_lambda_involution(uint64_t seed, int trials) {
    return run_suite("lambda-involution", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        EnergyMatrix e = random_energy_matrix(rng, 1, 4);
        Particle p{Primary{rint(rng, -6, 6), rint(rng, 0, e.size() - 1)}};
        Particle s{Secondary{rint(rng, -6, 6), rint(rng, 0, e.size() - 1),
                             rint(rng, 0, e.size() - 1)}};
        bool ps = rbool(rng);
        Particle x = ps ? p : s;
        Particle y = ps ? s : p;
        auto [a, b] = lambda_cross(e, x, y);
        auto [x2, y2] = lambda_cross(e, a, b);
        std::string ctx = matrix_desc(e) + " x=" + particle_token(e, x) + " y=" + particle_token(e, y);
        if (!(x2 == x && y2 == y)) return "not an involution: " + ctx;
        if (a.degree() != y.degree() || b.degree() != x.degree())
            return "degrees did not swap: " + ctx;
        ColorWord before = particle_word(x), after = particle_word(a);
        ColorWord tail = particle_word(y), tail2 = particle_word(b);
        before.insert(before.end(), tail.begin(), tail.end());
        after.insert(after.end(), tail2.begin(), tail2.end());
        if (before != after) return "state word changed: " + ctx;
        if (x.potential(e) + y.potential(e) != a.potential(e) + b.potential(e))
            return "total potential changed: " + ctx;
        return std::nullopt;
    });
}

PropertyResult suite_crossing_criterion(uint64_t seed, int trials) {
    return run_suite("crossing-criterion", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        EnergyMatrix e = random_energy_matrix(rng, 1, 4);
        Primary p{rint(rng, -4, 4), rint(rng, 0, e.size() - 1)};
        Secondary s{rint(rng, -4, 4), rint(rng, 0, e.size() - 1), rint(rng, 0, e.size() - 1)};
        Particle P{p}, S{s};
        std::string ctx = matrix_desc(e) + " p=" + particle_token(e, P) + " s=" + particle_token(e, S);

        // A crossing fixes exactly the badly ordered pairs, in both relations.
        auto [a, b] = lambda_cross(e, P, S);
        if (rel_gg(e, P, S) == rel_gg(e, a, b)) return "ps crossing equivalence: " + ctx;
        if (rel_gg_dual(e, P, S) == rel_gg_dual(e, a, b)) return "ps dual equivalence: " + ctx;
        auto [a2, b2] = lambda_cross(e, S, P);  // primary out first on this side
        if (rel_gg(e, S, P) == rel_gg(e, a2, b2)) return "sp crossing equivalence: " + ctx;
        if (rel_gg_dual(e, S, P) == rel_gg_dual(e, a2, b2)) return "sp dual equivalence: " + ctx;

        // The half shared by input and output, and the refined criterion on it.
        if (!(mu(a.secondary()) == gamma(e, s))) return "ps shared half: " + ctx;
        if (rel_succ(e, p, gamma(e, s)) == rel_gg(e, Particle{mu(a.secondary())}, b))
            return "ps refined criterion: " + ctx;
        if (!(gamma(e, b2.secondary()) == mu(s))) return "sp shared half: " + ctx;
        if (rel_succ(e, a2.primary(), gamma(e, b2.secondary())) ==
            rel_gg(e, Particle{mu(s)}, P))
            return "sp refined criterion: " + ctx;
        return std::nullopt;
    });
}

PropertyResult suite_reflect_duality(uint64_t seed, int trials) {
    return run_suite("reflect-duality", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        EnergyMatrix e = random_energy_matrix(rng, 1, 4);
        EnergyMatrix et = e.transposed();
        Particle x = random_particle(rng, e, -6, 6);
        Particle y = random_particle(rng, e, -6, 6);
        std::string ctx = matrix_desc(e) + " x=" + particle_token(e, x) + " y=" + particle_token(e, y);
        if (rel_gg_dual(e, x, y) != rel_gg(et, reflect(e, y), reflect(e, x)))
            return "dual != reflected standard: " + ctx;
        if (rel(e, Relation::dual, x, y) != rel_gg_dual(e, x, y))
            return "rel() dispatch: " + ctx;
        if (!(reflect(et, reflect(e, x)) == x)) return "reflect not involutive: " + ctx;
        if (reflect(e, x).potential(et) != -x.potential(e))
            return "reflect potential: " + ctx;
        return std::nullopt;
    });
}

PropertyResult suite_transfer_roundtrip(uint64_t seed, int trials) {
    return run_suite("transfer-roundtrip", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        EnergyMatrix e = random_energy_matrix(rng, 1, 4);
        ColoredPartition lam = random_o_partition(e, rng, 8, 6);
        std::string ctx = matrix_desc(e) + " lam=" + partition_tokens(e, lam);
        if (auto v = validate(e, lam, Bound::none()); !v)
            return "generator made invalid O input (" + v.reason + "): " + ctx;

        TransferOptions a;
        a.strategy = CrossingStrategy::leftmost();
        a.record_trace = true;
        TransferOptions b;
        b.strategy = CrossingStrategy::rightmost();
        TransferOptions c;
        c.strategy = CrossingStrategy::seeded_random(mix(rng()));
        TransferOptions d;  // other pairing scan: same image, other bookkeeping
        d.scan = PairScan::left_to_right;

        TransferResult ra = phi(e, lam, a);
        TransferResult rb = phi(e, lam, b);
        TransferResult rc = phi(e, lam, c);
        TransferResult rd = phi(e, lam, d);
        if (!(ra.image == rb.image && ra.image == rc.image && ra.image == rd.image))
            return "image depends on strategy/scan: " + ctx;
        if (ra.crossings != rb.crossings || ra.crossings != rc.crossings)
            return "crossing count depends on strategy: " + ctx;
        if (ra.decomposition.I != rb.decomposition.I || ra.decomposition.I != rc.decomposition.I)
            return "pairing depends on strategy: " + ctx;
        if (auto v = validate(e, ra.image, Bound::none()); !v)
            return "phi image invalid (" + v.reason + "): " + ctx;
        if (energy(e, ra.image) != energy(e, lam)) return "phi changed energy: " + ctx;
        if (color_word(ra.image) != color_word(lam)) return "phi changed word: " + ctx;

        std::vector<int> perm = ra.sigma.to_final;
        std::sort(perm.begin(), perm.end());
        std::vector<int> iota(perm.size());
        std::iota(iota.begin(), iota.end(), 0);
        if (perm != iota) return "sigma is not a permutation: " + ctx;

        TransferResult back = psi(e, ra.image, c);
        if (!(back.image == lam)) return "psi(phi(lam)) != lam: " + ctx;

        ColoredPartition nu = random_e_partition(e, rng, 6, 6);
        std::string ctx2 = matrix_desc(e) + " nu=" + partition_tokens(e, nu);
        if (auto v = validate(e, nu, Bound::none()); !v)
            return "generator made invalid E input (" + v.reason + "): " + ctx2;
        TransferResult down = psi(e, nu, a);
        if (auto v = validate(e, down.image, Bound::none()); !v)
            return "psi image invalid (" + v.reason + "): " + ctx2;
        TransferResult up = phi(e, down.image, b);
        if (!(up.image == nu)) return "phi(psi(nu)) != nu: " + ctx2;
        return std::nullopt;
    });
}

PropertyResult suite_predictor_tables(uint64_t seed, int trials) {
    return run_suite("predictor-tables", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        EnergyMatrix e = random_energy_matrix(rng, 1, 4);

        auto monotone = [](const Prediction& pr) {
            for (size_t r = 0; r + 1 < pr.table.size(); ++r)
                for (size_t c = 0; c < pr.table[r].size(); ++c)
                    if (pr.table[r][c] < pr.table[r + 1][c]) return false;
            for (const auto& row : pr.table)
                for (size_t c = 0; c + 1 < row.size(); ++c)
                    if (row[c] > row[c + 1]) return false;
            return true;
        };

        ColoredPartition lam = random_o_partition(e, rng, 8, 6);
        std::string ctx = matrix_desc(e) + " lam=" + partition_tokens(e, lam);
        Prediction pp = predict_phi(e, lam);
        TransferResult rp = phi(e, lam);
        if (pp.sigma.to_final != rp.sigma.to_final) return "phi sigma mismatch: " + ctx;
        if (pp.crossings != rp.crossings) return "phi crossing count mismatch: " + ctx;
        if (static_cast<int>(pp.crossing_pairs.size()) != pp.crossings)
            return "phi crossing pair list inconsistent: " + ctx;
        if (!monotone(pp)) return "phi table not monotone: " + ctx;

        ColoredPartition nu = random_e_partition(e, rng, 6, 6);
        std::string ctx2 = matrix_desc(e) + " nu=" + partition_tokens(e, nu);
        Prediction pq = predict_psi(e, nu);
        TransferResult rq = psi(e, nu);
        if (pq.sigma.to_final != rq.sigma.to_final) return "psi sigma mismatch: " + ctx2;
        if (pq.crossings != rq.crossings) return "psi crossing count mismatch: " + ctx2;
        if (static_cast<int>(pq.crossing_pairs.size()) != pq.crossings)
            return "psi crossing pair list inconsistent: " + ctx2;
        if (!monotone(pq)) return "psi table not monotone: " + ctx2;
        return std::nullopt;
    });
}

PropertyResult suite_slot_expansion(uint64_t seed, int trials) {
    return run_suite("slot-expansion", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        EnergyMatrix e = random_energy_matrix(rng, 1, 4);
        ColoredPartition nu = random_e_partition(e, rng, 6, 6);
        std::string ctx = matrix_desc(e) + " nu=" + partition_tokens(e, nu);
        auto [slots, d] = expand_slots(e, nu);
        int s = static_cast<int>(slots.size());
        if (d.s != s) return "decomposition size mismatch: " + ctx;

        ColorWord w;
        for (const Primary& p : slots) w.push_back(p.state);
        if (w != color_word(nu)) return "expanded word mismatch: " + ctx;

        std::set<int> J(d.J.begin(), d.J.end());
        std::set<int> fused;
        for (int i : d.I) {
            fused.insert(i);
            fused.insert(i + 1);
        }
        if (static_cast<int>(J.size() + fused.size()) != s)
            return "I,I+1,J do not partition the slots: " + ctx;

        auto lp = [&](int k) {
            return J.count(k) ? slots[static_cast<size_t>(k)].k
                              : 2 * slots[static_cast<size_t>(k)].k;
        };
        for (int k = 0; k < s; ++k)
            for (int k2 = k; k2 < s; ++k2)
                if (lp(k) - lp(k2) < eta(d, k, k2) + word_delta(e, w, k, k2))
                    return "doubled-potential gap bound fails at (" + std::to_string(k) + "," +
                           std::to_string(k2) + "): " + ctx;
        std::vector<int> fv(fused.begin(), fused.end());
        for (size_t a = 0; a < fv.size(); ++a)
            for (size_t b = a; b < fv.size(); ++b)
                if (slots[static_cast<size_t>(fv[a])].k - slots[static_cast<size_t>(fv[b])].k <
                    word_delta(e, w, fv[a], fv[b]))
                    return "fused-slot gap bound fails at (" + std::to_string(fv[a]) + "," +
                           std::to_string(fv[b]) + "): " + ctx;
        return std::nullopt;
    });
}

PropertyResult suite_index_chasles(uint64_t seed, int trials) {
    return run_suite("index-chasles", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        EnergyMatrix e = random_energy_matrix(rng, 1, 4);
        ColorWord w = random_word(rng, e, 2, 10);
        int s = static_cast<int>(w.size());
        int a = rint(rng, 0, s - 1), b = rint(rng, 0, s - 1), c = rint(rng, 0, s - 1);
        std::string ctx = matrix_desc(e) + " word=" + word_desc(e, w) + " (" + std::to_string(a) +
                          "," + std::to_string(b) + "," + std::to_string(c) + ")";
        if (word_delta(e, w, a, c) != word_delta(e, w, a, b) + word_delta(e, w, b, c))
            return "word delta chain rule: " + ctx;
        if (word_delta(e, w, a, b) != -word_delta(e, w, b, a))
            return "word delta antisymmetry: " + ctx;

        // Random disjoint pairing of the slots.
        IndexDecomposition d;
        d.s = s;
        for (int k = 0; k < s;) {
            if (k + 1 < s && rbool(rng)) {
                d.I.push_back(k);
                k += 2;
            } else {
                d.J.push_back(k);
                k += 1;
            }
        }
        for (auto f : {alpha, beta, eta}) {
            if (f(d, a, c) != f(d, a, b) + f(d, b, c)) return "index count chain rule: " + ctx;
            if (f(d, a, b) != -f(d, b, a)) return "index count antisymmetry: " + ctx;
        }
        if (alpha(d, a, b) != beta(d, a + 1, b + 1)) return "alpha/beta interval shift: " + ctx;
        return std::nullopt;
    });
}

PropertyResult suite_count_symmetry(uint64_t seed, int trials) {
    return run_suite("count-symmetry", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        EnergyMatrix e = random_energy_matrix(rng, 1, 3);
        ColorWord w = random_word(rng, e, 1, 4);
        Bound bound = random_bound(rng);
        long long n = bound.kind == Bound::Kind::lower
                          ? minimal_o_energy(e, w, bound.rho) + rint(rng, 0, 10)
                          : maximal_o_energy(e, w, bound.rho) - rint(rng, 0, 10);
        auto os = enumerate_partitions(e, Side::O, w, n, bound);
        auto es = enumerate_partitions(e, Side::E, w, n, bound);
        if (os.size() != es.size())
            return "|O|=" + std::to_string(os.size()) + " |E|=" + std::to_string(es.size()) +
                   ": " + matrix_desc(e) + " word=" + word_desc(e, w) + " n=" + std::to_string(n) +
                   " " + bound_desc(bound);
        return std::nullopt;
    });
}

PropertyResult suite_dual_count_symmetry(uint64_t seed, int trials) {
    return run_suite("dual-count-symmetry", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        EnergyMatrix e = random_energy_matrix(rng, 1, 3);
        ColorWord w = random_word(rng, e, 1, 4);
        Bound bound = random_bound(rng);
        long long n = bound.kind == Bound::Kind::lower
                          ? minimal_o_energy(e, w, bound.rho) + rint(rng, 0, 10)
                          : maximal_o_energy(e, w, bound.rho) - rint(rng, 0, 10);
        std::string ctx = matrix_desc(e) + " word=" + word_desc(e, w) + " n=" + std::to_string(n) +
                          " " + bound_desc(bound);
        auto ed = enumerate_partitions(e, Side::E, w, n, bound, Relation::dual);

        // Reflection carries the dual E family onto the standard one over the
        // transposed matrix, with word reversed and the window negated. This
        // holds for every window.
        EnergyMatrix et = e.transposed();
        ColorWord wr(w.rbegin(), w.rend());
        Bound nb = bound.kind == Bound::Kind::lower ? Bound::at_most(-bound.rho)
                                                    : Bound::at_least(-bound.rho);
        auto et_set = enumerate_partitions(et, Side::E, wr, -n, nb);
        std::vector<ColoredPartition> mapped;
        mapped.reserve(ed.size());
        for (const auto& p : ed) mapped.push_back(reflect_partition(e, p));
        if (token_multiset(et, mapped) != token_multiset(et, et_set))
            return "reflected dual set != transposed standard set: " + ctx;

        // The count symmetry itself transports through the reflection only
        // where the window lands back in rho in {0,1}, i.e. at rho = 0.
        if (bound.rho == 0) {
            auto os = enumerate_partitions(e, Side::O, w, n, bound);
            if (os.size() != ed.size())
                return "|O|=" + std::to_string(os.size()) +
                       " |E dual|=" + std::to_string(ed.size()) + ": " + ctx;
        }
        return std::nullopt;
    });
}

PropertyResult suite_bound_preservation(uint64_t seed, int trials) {
    return run_suite("bound-preservation", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        EnergyMatrix e = random_energy_matrix(rng, 1, 3);
        ColorWord w = random_word(rng, e, 1, 4);
        Bound bound = random_bound(rng);
        long long n = bound.kind == Bound::Kind::lower
                          ? minimal_o_energy(e, w, bound.rho) + rint(rng, 0, 8)
                          : maximal_o_energy(e, w, bound.rho) - rint(rng, 0, 8);
        std::string ctx = matrix_desc(e) + " word=" + word_desc(e, w) + " n=" + std::to_string(n) +
                          " " + bound_desc(bound);
        auto os = enumerate_partitions(e, Side::O, w, n, bound);
        auto es = enumerate_partitions(e, Side::E, w, n, bound);
        if (os.size() > 60) os.resize(60);

        std::vector<ColoredPartition> images;
        for (const auto& lam : os) {
            TransferResult r = phi(e, lam);
            if (auto v = validate(e, r.image, bound); !v)
                return "phi image leaves the window (" + v.reason + "): " + ctx +
                       " lam=" + partition_tokens(e, lam);
            images.push_back(r.image);
        }
        if (os.size() == es.size() &&
            token_multiset(e, images) != token_multiset(e, es))
            return "phi image set != E set: " + ctx;

        if (es.size() > 60) es.resize(60);
        for (const auto& nu : es) {
            TransferResult r = psi(e, nu);
            if (auto v = validate(e, r.image, bound); !v)
                return "psi image leaves the window (" + v.reason + "): " + ctx +
                       " nu=" + partition_tokens(e, nu);
        }
        return std::nullopt;
    });
}

// Random truncated series over a non-negative q window, where dropping
// out-of-window terms is an ideal quotient and the ring laws hold exactly.
TruncatedSeries random_series(Rng& rng, const std::vector<std::string>& syms,
                              const SeriesBounds& b) {
    TruncatedSeries s(syms, b);
    int terms = rint(rng, 0, 6);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(syms.size());
        for (int& v : exps) v = rint(rng, 0, 2);
        s.add_term(Coeff(rint(rng, -3, 3)), rint(rng, 0, b.q_order), exps);
    }
    return s;
}

PropertyResult suite_series_ring_laws(uint64_t seed, int trials) {
    return run_suite("series-ring-laws", seed, trials, [](Rng& rng) -> std::optional<std::string> {
        const std::vector<std::string> syms{"u", "v"};
        SeriesBounds b{rint(rng, 2, 6), 0, rbool(rng) ? -1 : rint(rng, 2, 5)};
        TruncatedSeries a = random_series(rng, syms, b);
        TruncatedSeries c = random_series(rng, syms, b);
        TruncatedSeries d = random_series(rng, syms, b);
        TruncatedSeries one = TruncatedSeries::one(syms, b);

        if (!(a + c == c + a)) return "addition not commutative: " + a.str() + " vs " + c.str();
        if (!((a + c) + d == a + (c + d)))
            return "addition not associative: " + a.str() + " / " + c.str() + " / " + d.str();
        if (!(a * c == c * a))
            return "multiplication not commutative: " + a.str() + " vs " + c.str();
        if (!((a * c) * d == a * (c * d)))
            return "multiplication not associative: " + a.str() + " / " + c.str() + " / " + d.str();
        if (!(a * (c + d) == a * c + a * d))
            return "not distributive: " + a.str() + " / " + c.str() + " / " + d.str();
        if (!(a * one == a)) return "one is not a multiplicative identity: " + a.str();
        if (!(a + TruncatedSeries(syms, b) == a)) return "zero is not additive identity: " + a.str();
        if (!(a - a == TruncatedSeries(syms, b))) return "a - a != 0: " + a.str();

        Monomial m{Coeff(rint(rng, -2, 2)), rint(rng, 0, 2), {{"u", rint(rng, 0, 2)}}};
        TruncatedSeries ms(syms, b);
        ms.add_term(m);
        TruncatedSeries lhs = a;
        lhs.mul_monomial(m);
        if (!(lhs == a * ms)) return "mul_monomial disagrees with series product: " + a.str();
        return std::nullopt;
    });
}

}  // namespace

EnergyMatrix random_energy_matrix(std::mt19937_64& rng, int min_states, int max_states) {
    if (min_states < 1 || max_states < min_states)
        throw std::invalid_argument("random_energy_matrix: bad state range");
    int n = rint(rng, min_states, max_states);
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i + 1));
    std::vector<std::vector<int>> rows(static_cast<size_t>(n),
                                       std::vector<int>(static_cast<size_t>(n)));
    for (auto& row : rows)
        for (int& v : row) v = rint(rng, 0, 1);
    return EnergyMatrix(StateSet(std::move(labels)), rows);
}

ColoredPartition random_o_partition(const EnergyMatrix& e, std::mt19937_64& rng, int max_len,
                                    int k_hi) {
    int len = rint(rng, 1, std::max(1, max_len));
    ColoredPartition out;
    out.side = Side::O;
    int prev_k = 0, prev_c = 0;
    for (int i = 0; i < len; ++i) {
        int c = rint(rng, 0, e.size() - 1);
        // Biased toward tight gaps so fused pairs actually occur.
        int slack = std::max(0, rint(rng, -2, 2));
        int k = i == 0 ? k_hi - rint(rng, 0, 2) : prev_k - e.eps(prev_c, c) - slack;
        out.particles.push_back(Primary{k, c});
        prev_k = k;
        prev_c = c;
    }
    return out;
}

ColoredPartition random_e_partition(const EnergyMatrix& e, std::mt19937_64& rng, int max_len,
                                    int k_hi) {
    int len = rint(rng, 1, std::max(1, max_len));
    ColoredPartition out;
    out.side = Side::E;
    for (int i = 0; i < len; ++i) {
        bool sec = rbool(rng);
        int c = rint(rng, 0, e.size() - 1);
        int c2 = rint(rng, 0, e.size() - 1);
        auto with_k = [&](int k) -> Particle {
            if (sec) return Particle{Secondary{k, c, c2}};
            return Particle{Primary{k, c}};
        };
        int k;
        if (out.particles.empty()) {
            k = k_hi - rint(rng, 0, 2);
        } else {
            // rel is monotone in the follower's potential, so scan downward to
            // the largest admissible k, then back off a random amount.
            const Particle& prev = out.particles.back();
            int start = prev.potential(e) + 2;
            std::optional<int> found;
            for (int kk = start; kk >= start - 40; --kk) {
                if (rel_gg(e, prev, with_k(kk))) {
                    found = kk;
                    break;
                }
            }
            if (!found) throw std::logic_error("random_e_partition: no admissible follower");
            k = *found - std::max(0, rint(rng, -2, 2));
        }
        out.particles.push_back(with_k(k));
    }
    return out;
}

long long minimal_o_energy(const EnergyMatrix& e, const ColorWord& word, int rho) {
    long long total = 0;
    int k = rho;
    for (size_t i = word.size(); i-- > 0;) {
        if (i + 1 < word.size()) k += e.eps(word[i], word[i + 1]);
        total += k;
    }
    return total;
}

long long maximal_o_energy(const EnergyMatrix& e, const ColorWord& word, int rho) {
    long long total = 0;
    int k = rho;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i > 0) k -= e.eps(word[i - 1], word[i]);
        total += k;
    }
    return total;
}

SelfCheckReport run_selfcheck(uint64_t seed, int trials) {
    if (trials < 1) throw std::invalid_argument("run_selfcheck: trials must be positive");
    SelfCheckReport rep;
    rep.seed = seed;
    int heavy = std::max(10, trials / 5);
    int medium = std::max(10, trials / 2);
    rep.suites.push_back(suite_lambda_involution(seed, trials));
    rep.suites.push_back(suite_crossing_criterion(seed, trials));
    rep.suites.push_back(suite_reflect_duality(seed, trials));
    rep.suites.push_back(suite_transfer_roundtrip(seed, medium));
    rep.suites.push_back(suite_predictor_tables(seed, medium));
    rep.suites.push_back(suite_slot_expansion(seed, trials));
    rep.suites.push_back(suite_index_chasles(seed, trials));
    rep.suites.push_back(suite_count_symmetry(seed, heavy));
    rep.suites.push_back(suite_dual_count_symmetry(seed, heavy));
    rep.suites.push_back(suite_bound_preservation(seed, heavy));
    rep.suites.push_back(suite_series_ring_laws(seed, trials));
    return rep;
}

}  // namespace weft
