#include "conelab/groebner.hpp"

#include <algorithm>
#include <list>

#include "conelab/errors.hpp"

namespace conelab {

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& lcm) {
    Monomial mf = lcm / f.leading_monomial();
    Monomial mg = lcm / g.leading_monomial();
    return f.times_term(1 / f.leading_coefficient(), mf) -
           g.times_term(1 / g.leading_coefficient(), mg);
}

Polynomial reduce_full(const Polynomial& f, std::span<const Polynomial> divisors) {
    Polynomial p = f;
    std::vector<Term> remainder;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        const Polynomial* red = nullptr;
        for (const Polynomial& g : divisors) {
            if (!g.is_zero() && g.leading_monomial().divides(lt.m)) {
                red = &g;
                break;
            }
        }
        if (red) {
            p = p.reduce_step(lt.c / red->leading_coefficient(), lt.m / red->leading_monomial(),
                              *red);
        } else {
            remainder.push_back(lt);
            p = p.without_leading_term();
        }
    }
    return Polynomial::from_terms(f.ring(), std::move(remainder));
}

struct Pair {
    int i, j;
    Monomial lcm;
    int deg;
};

// normal selection strategy: smallest lcm degree, ties by lex-smaller lcm
// exponent vector, then by index
bool pair_before(const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.lcm.e != b.lcm.e) return a.lcm.e < b.lcm.e;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

class PairQueue {
  public:
    explicit PairQueue(const BuchbergerOptions& opts) : opts_(opts) {}

    // Gebauer-Moeller update for a new basis element with index t.
    void add_element(const std::vector<Polynomial>& basis, int t, GroebnerStats& stats) {
        const Monomial& lmt = basis[t].leading_monomial();
        struct Cand {
            int i;
            Monomial lcm;
            bool keep = true;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (int i = 0; i < t; ++i)
            cands.push_back({i, Monomial::lcm(basis[i].leading_monomial(), lmt)});

        if (opts_.chain_criterion) {
            // keep (i,t) only if no other candidate lcm properly divides it;
            // among equal lcms keep the first
            for (size_t a = 0; a < cands.size(); ++a) {
                if (!cands[a].keep) continue;
                for (size_t b = 0; b < cands.size(); ++b) {
                    if (a == b || !cands[b].keep) continue;
                    if (cands[b].lcm.divides(cands[a].lcm)) {
                        if (!(cands[a].lcm == cands[b].lcm) || b < a) {
                            cands[a].keep = false;
                            break;
                        }
                    }
                }
            }
            // drop old pairs whose lcm is a proper multiple of lm(t)
            for (auto it = pairs_.begin(); it != pairs_.end();) {
                const Monomial& l = it->lcm;
                bool remove = lmt.divides(l) &&
                              !(Monomial::lcm(basis[it->i].leading_monomial(), lmt) == l) &&
                              !(Monomial::lcm(basis[it->j].leading_monomial(), lmt) == l);
                it = remove ? pairs_.erase(it) : std::next(it);
            }
        }
        for (const Cand& c : cands) {
            if (!c.keep) continue;
            if (opts_.coprime_criterion &&
                basis[c.i].leading_monomial().coprime(lmt))
                continue;
            pairs_.push_back({c.i, t, c.lcm, c.lcm.deg()});
            ++stats.pairs_enqueued;
        }
    }

    bool empty() const { return pairs_.empty(); }

    Pair pop() {
        auto best = pairs_.begin();
        for (auto it = std::next(pairs_.begin()); it != pairs_.end(); ++it)
            if (pair_before(*it, *best)) best = it;
        Pair p = *best;
        pairs_.erase(best);
        return p;
    }

  private:
    const BuchbergerOptions& opts_;
    std::list<Pair> pairs_;
};

std::vector<Polynomial> interreduce(const RingPtr& ring, std::vector<Polynomial> basis) {
    const MonomialOrder& ord = ring->order();
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    // minimal basis: leading monomials pairwise non-divisible
    std::vector<Polynomial> minimal;
    for (const Polynomial& g : basis) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
            return h.leading_monomial().divides(g.leading_monomial());
        });
        if (!redundant) minimal.push_back(g);
    }
    // tail-reduce each element against the rest; leading monomials are stable
    std::vector<Polynomial> reduced = minimal;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(reduced.size() - 1);
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = reduce_full(reduced[i], others).monic();
    }
    return reduced;
}

} // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         const BuchbergerOptions& opts, GroebnerStats* stats_out) {
    GroebnerStats stats;
    std::vector<Polynomial> basis;
    PairQueue queue(opts);
    for (const Polynomial& g : gens) {
        require_same_ring(ring, g.ring(), "buchberger");
        if (g.is_zero()) continue;
        basis.push_back(g.primitive_normalized());
        queue.add_element(basis, static_cast<int>(basis.size()) - 1, stats);
    }
    while (!queue.empty()) {
        Pair p = queue.pop();
        if (++stats.pairs_reduced > opts.max_pairs)
            throw ResourceLimitError("buchberger: pair cap exceeded");
        Polynomial s = s_polynomial(basis[p.i], basis[p.j], p.lcm);
        Polynomial r = reduce_full(s, basis);
        if (r.is_zero()) continue;
        basis.push_back(r.primitive_normalized());
        if (basis.size() > opts.max_basis)
            throw ResourceLimitError("buchberger: basis cap exceeded");
        queue.add_element(basis, static_cast<int>(basis.size()) - 1, stats);
    }
    std::vector<Polynomial> reduced = interreduce(ring, std::move(basis));
    stats.basis_size = reduced.size();
    if (stats_out) *stats_out = stats;
    return GroebnerBasis(ring, std::move(reduced));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (!G.ring()) return f;
    require_same_ring(f.ring(), G.ring(), "normal_form");
    return reduce_full(f, G.elements());
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
    return reduce_full(f, divisors);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const Polynomial& g : gens_) require_same_ring(ring_, g.ring(), "Ideal");
}

Ideal::Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
    std::lock_guard<std::mutex> hold(*o.lock_);
    gb_ = o.gb_;
}

Ideal& Ideal::operator=(const Ideal& o) {
    if (this == &o) return *this;
    std::lock_guard<std::mutex> hold(*o.lock_);
    ring_ = o.ring_;
    gens_ = o.gens_;
    gb_ = o.gb_;
    return *this;
}

bool Ideal::is_zero_ideal() const {
    return std::all_of(gens_.begin(), gens_.end(),
                       [](const Polynomial& g) { return g.is_zero(); });
}

const GroebnerBasis& Ideal::groebner(const BuchbergerOptions& opts) const {
    {
        std::lock_guard<std::mutex> hold(*lock_);
        if (gb_) return *gb_;
    }
    auto computed = std::make_shared<GroebnerBasis>(buchberger(ring_, gens_, opts));
    std::lock_guard<std::mutex> hold(*lock_);
    if (!gb_) gb_ = std::move(computed);
    return *gb_;
}

bool ideal_contains(const Ideal& I, const Ideal& J, const BuchbergerOptions& opts) {
    require_same_ring(I.ring(), J.ring(), "ideal_contains");
    const GroebnerBasis& G = I.groebner(opts);
    return std::all_of(J.generators().begin(), J.generators().end(),
                       [&](const Polynomial& g) { return normal_form(g, G).is_zero(); });
}

bool ideal_equal(const Ideal& I, const Ideal& J, const BuchbergerOptions& opts) {
    require_same_ring(I.ring(), J.ring(), "ideal_equal");
    // identical reduced bases under the common order
    return I.groebner(opts) == J.groebner(opts);
}

Ideal map_ideal(const Ideal& I, const RingPtr& target) {
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const Polynomial& g : I.generators()) gens.push_back(map_to_ring(g, target));
    return Ideal(target, std::move(gens));
}

} // namespace conelab
