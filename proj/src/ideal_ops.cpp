#include "conelab/ideal_ops.hpp"

#include <algorithm>
#include <random>

#include "conelab/errors.hpp"

namespace conelab {

namespace {

// Generators of the elimination of the front `k` variables of `ext`, mapped
// back into `target`.
std::vector<Polynomial> eliminate_front(const RingPtr& ext, std::span<const Polynomial> gens,
                                        int k, const RingPtr& target,
                                        const BuchbergerOptions& opts) {
    GroebnerBasis gb = buchberger(ext, gens, opts);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.elements()) {
        bool free = true;
        for (int v = 0; v < k && free; ++v) free = !g.involves(v);
        if (free) kept.push_back(map_to_ring(g, target));
    }
    return kept;
}

} // namespace

Ideal intersect(const Ideal& I, const Ideal& J, const BuchbergerOptions& opts) {
    require_same_ring(I.ring(), J.ring(), "intersect");
    const RingPtr& R = I.ring();
    RingPtr E = extend_front(R, {fresh_name(*R, "w")});
    Polynomial w = Polynomial::variable(E, 0);
    Polynomial one_minus_w = Polynomial::constant(E, 1) - w;
    std::vector<Polynomial> gens;
    for (const Polynomial& f : I.generators()) gens.push_back(w * map_to_ring(f, E));
    for (const Polynomial& g : J.generators()) gens.push_back(one_minus_w * map_to_ring(g, E));
    return Ideal(R, eliminate_front(E, gens, 1, R, opts));
}

Ideal colon(const Ideal& I, const Polynomial& g, const BuchbergerOptions& opts) {
    require_same_ring(I.ring(), g.ring(), "colon");
    if (g.is_zero()) throw DomainError("colon by the zero polynomial");
    Ideal meet = intersect(I, Ideal(I.ring(), {g}), opts);
    std::vector<Polynomial> quotients;
    for (const Polynomial& h : meet.generators()) {
        auto q = divide_exact(h, g);
        if (!q) throw ConsistencyError("colon: intersection element not divisible by divisor");
        quotients.push_back(std::move(*q));
    }
    return Ideal(I.ring(), std::move(quotients));
}

Ideal colon(const Ideal& I, const Ideal& J, const BuchbergerOptions& opts) {
    require_same_ring(I.ring(), J.ring(), "colon");
    if (J.is_zero_ideal()) throw DomainError("colon by the zero ideal");
    bool first = true;
    Ideal acc;
    for (const Polynomial& g : J.generators()) {
        if (g.is_zero()) continue;
        Ideal part = colon(I, g, opts);
        acc = first ? std::move(part) : intersect(acc, part, opts);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& I, const Polynomial& f, const BuchbergerOptions& opts) {
    require_same_ring(I.ring(), f.ring(), "saturate");
    if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
    if (f.is_constant()) return I;
    const RingPtr& R = I.ring();
    RingPtr E = extend_front(R, {fresh_name(*R, "w")});
    Polynomial w = Polynomial::variable(E, 0);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators()) gens.push_back(map_to_ring(g, E));
    gens.push_back(Polynomial::constant(E, 1) - w * map_to_ring(f, E));
    return Ideal(R, eliminate_front(E, gens, 1, R, opts));
}

Ideal eliminate(const Ideal& I, std::span<const int> vars, const BuchbergerOptions& opts) {
    if (vars.empty()) return I;
    const RingPtr& R = I.ring();
    RingPtr E = with_order(R, MonomialOrder::elimination(std::vector<int>(vars.begin(), vars.end()),
                                                         R->order()));
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators()) gens.push_back(reorder(g, E));
    GroebnerBasis gb = buchberger(E, gens, opts);
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.elements()) {
        bool free = std::none_of(vars.begin(), vars.end(), [&](int v) { return g.involves(v); });
        if (free) kept.push_back(reorder(g, R));
    }
    return Ideal(R, std::move(kept));
}

int dimension(const Ideal& I, const BuchbergerOptions& opts) {
    const GroebnerBasis& G = I.groebner(opts);
    int n = I.ring()->nvars();
    if (!G.elements().empty() && G.elements().front().is_constant()) return kEmptyScheme;
    if (n > 24) throw ResourceLimitError("dimension: too many variables for subset search");
    std::vector<uint32_t> lead_support;
    for (const Polynomial& g : G.elements()) {
        uint32_t mask = 0;
        const Monomial& m = g.leading_monomial();
        for (int v = 0; v < n; ++v)
            if (m.e[v] > 0) mask |= (1u << v);
        lead_support.push_back(mask);
    }
    int best = 0;
    for (uint32_t s = 0; s < (1u << n); ++s) {
        int size = std::popcount(s);
        if (size <= best) continue;
        // s is independent iff no leading monomial is supported inside s
        bool independent = std::none_of(lead_support.begin(), lead_support.end(),
                                        [&](uint32_t m) { return (m & ~s) == 0; });
        if (independent) best = size;
    }
    return best;
}

int height(const Ideal& I, const BuchbergerOptions& opts) {
    int d = dimension(I, opts);
    if (d == kEmptyScheme) throw DomainError("height of the unit ideal");
    return I.ring()->nvars() - d;
}

TestIdeal build_test_ideal(const Ideal& I, uint64_t seed, const BuchbergerOptions& opts) {
    if (I.is_zero_ideal()) throw DomainError("test ideal of the zero ideal");
    int h = height(I, opts); // throws on the unit ideal
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.generators())
        if (!g.is_zero()) gens.push_back(g);
    int n_gens = static_cast<int>(gens.size());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nz(0, 5); // maps onto {-3..3} \ {0}
    auto draw_nonzero = [&]() {
        int v = nz(rng);
        return v < 3 ? v - 3 : v - 2;
    };
    // Sparse-first: genericity only has to beat a height check that is
    // verified anyway, and few-term combinations keep every downstream colon
    // computation tame.  Widen the support on retries.
    const int attempts_per_step = 96;
    std::vector<Polynomial> J;
    std::vector<TestIdealStep> cert;
    for (int step = 1; step <= h; ++step) {
        bool placed = false;
        for (int attempt = 0; attempt < attempts_per_step && !placed; ++attempt) {
            int support = std::min(1 + attempt / 6, n_gens);
            std::vector<int> coeffs(n_gens, 0);
            for (int k = 0; k < support; ++k) {
                int idx = std::uniform_int_distribution<int>(0, n_gens - 1)(rng);
                coeffs[idx] = draw_nonzero();
            }
            Polynomial cand = Polynomial::zero(I.ring());
            for (int k = 0; k < n_gens; ++k)
                if (coeffs[k] != 0) cand = cand + gens[k].scaled(coeffs[k]);
            if (cand.is_zero()) continue;
            std::vector<Polynomial> prefix = J;
            prefix.push_back(cand);
            int ht = height(Ideal(I.ring(), prefix), opts);
            if (ht == step) {
                J.push_back(std::move(cand));
                cert.push_back({step, std::move(coeffs), ht});
                placed = true;
            }
        }
        if (!placed)
            throw ResourceLimitError("build_test_ideal: retry budget exhausted at step " +
                                     std::to_string(step));
    }
    return TestIdeal{Ideal(I.ring(), std::move(J)), std::move(cert)};
}

TestIdeal make_test_ideal(const Ideal& I, const Ideal& J, const BuchbergerOptions& opts) {
    require_same_ring(I.ring(), J.ring(), "make_test_ideal");
    if (!ideal_contains(I, J, opts))
        throw DomainError("test ideal is not contained in the target ideal");
    int h = height(I, opts);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : J.generators())
        if (!g.is_zero()) gens.push_back(g);
    if (static_cast<int>(gens.size()) != h)
        throw DomainError("test ideal has " + std::to_string(gens.size()) +
                          " generators but height(I) = " + std::to_string(h));
    std::vector<Polynomial> prefix;
    for (int i = 0; i < h; ++i) {
        prefix.push_back(gens[i]);
        int ht = height(Ideal(I.ring(), prefix), opts);
        if (ht != i + 1)
            throw DomainError("test ideal prefix of length " + std::to_string(i + 1) +
                              " has height " + std::to_string(ht));
    }
    return TestIdeal{Ideal(I.ring(), std::move(gens)), {}};
}

} // namespace conelab
