#include "conelab/resolution.hpp"

#include <algorithm>

#include "conelab/errors.hpp"
#include "conelab/ideal_ops.hpp"

namespace conelab {

namespace {

struct ModuleTerm {
    Rational c;
    Monomial m;
    int comp;
};

// Module monomial order.  Three shapes: position-over-term with component 0
// ranked first (used to carve out kernels), the plain ring order with a
// component tie-break (rank-one modules), and the Schreyer order induced by
// the leading terms of the previous basis.  Leading terms at deeper levels
// carry components of their own, so the Schreyer comparison recurses through
// the parent order.
class ModuleOrder {
  public:
    static ModuleOrder pot(const RingPtr& ring) { return ModuleOrder(Kind::pot, ring); }
    static ModuleOrder base(const RingPtr& ring) { return ModuleOrder(Kind::base, ring); }
    static ModuleOrder schreyer(const RingPtr& ring, std::shared_ptr<const ModuleOrder> parent,
                                std::vector<std::pair<Monomial, int>> leads) {
        ModuleOrder o(Kind::schreyer, ring);
        o.parent_ = std::move(parent);
        o.leads_ = std::move(leads);
        return o;
    }

    // +1 if (m1,c1) > (m2,c2)
    int compare(const Monomial& m1, int c1, const Monomial& m2, int c2) const {
        switch (kind_) {
            case Kind::pot:
                if (c1 != c2) return c1 < c2 ? 1 : -1;
                return ring_->order().compare(m1, m2);
            case Kind::base: {
                int c = ring_->order().compare(m1, m2);
                if (c != 0) return c;
                if (c1 != c2) return c1 < c2 ? 1 : -1;
                return 0;
            }
            case Kind::schreyer: {
                int c = parent_->compare(m1 * leads_[c1].first, leads_[c1].second,
                                         m2 * leads_[c2].first, leads_[c2].second);
                if (c != 0) return c;
                if (c1 != c2) return c1 < c2 ? 1 : -1;
                return 0;
            }
        }
        return 0;
    }

  private:
    enum class Kind { pot, base, schreyer };
    ModuleOrder(Kind kind, RingPtr ring) : kind_(kind), ring_(std::move(ring)) {}
    Kind kind_;
    RingPtr ring_;
    std::shared_ptr<const ModuleOrder> parent_;
    std::vector<std::pair<Monomial, int>> leads_;
};

// Element of a free module, terms strictly descending under a ModuleOrder.
struct ModElement {
    std::vector<ModuleTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const ModuleTerm& lead() const { return terms.front(); }
};

ModElement normalize(std::vector<ModuleTerm> terms, const ModuleOrder& ord) {
    std::sort(terms.begin(), terms.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
        return ord.compare(a.m, a.comp, b.m, b.comp) > 0;
    });
    ModElement e;
    for (auto& t : terms) {
        if (t.c == 0) continue;
        if (!e.terms.empty() && e.terms.back().comp == t.comp && e.terms.back().m == t.m) {
            e.terms.back().c += t.c;
            if (e.terms.back().c == 0) e.terms.pop_back();
        } else {
            e.terms.push_back(std::move(t));
        }
    }
    return e;
}

ModElement axpy(const ModElement& e, const Rational& c, const Monomial& m, const ModElement& g,
                const ModuleOrder& ord) {
    // e - c * m * g
    std::vector<ModuleTerm> terms = e.terms;
    for (const ModuleTerm& t : g.terms) terms.push_back({-c * t.c, t.m * m, t.comp});
    return normalize(std::move(terms), ord);
}

ModElement scale(const ModElement& e, const Rational& c) {
    ModElement r = e;
    for (auto& t : r.terms) t.c *= c;
    return r;
}

// strip rational content, positive leading coefficient
ModElement primitive(const ModElement& e) {
    if (e.is_zero()) return e;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : e.terms) {
        mpz_class den = t.c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (const auto& t : e.terms) {
        mpz_class num = t.c.get_num() * (den_lcm / t.c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    Rational s(den_lcm, num_gcd);
    s.canonicalize();
    if (e.lead().c < 0) s = -s;
    return scale(e, s);
}

struct ModDivision {
    ModElement remainder;
    std::vector<Polynomial> quotients; // one per divisor
};

ModDivision module_divide(const ModElement& e, const std::vector<ModElement>& basis,
                          const ModuleOrder& ord, const RingPtr& ring, bool track) {
    ModDivision out;
    if (track) out.quotients.assign(basis.size(), Polynomial::zero(ring));
    ModElement p = e;
    std::vector<ModuleTerm> rem;
    while (!p.is_zero()) {
        const ModuleTerm& lt = p.lead();
        const ModElement* red = nullptr;
        size_t red_idx = 0;
        for (size_t k = 0; k < basis.size(); ++k) {
            const ModElement& g = basis[k];
            if (g.is_zero()) continue;
            if (g.lead().comp == lt.comp && g.lead().m.divides(lt.m)) {
                red = &g;
                red_idx = k;
                break;
            }
        }
        if (!red) {
            rem.push_back(lt);
            p.terms.erase(p.terms.begin());
            continue;
        }
        Rational c = lt.c / red->lead().c;
        Monomial m = lt.m / red->lead().m;
        if (track)
            out.quotients[red_idx] =
                out.quotients[red_idx] + Polynomial::from_terms(ring, {Term{c, m}});
        p = axpy(p, c, m, *red, ord);
    }
    out.remainder = normalize(std::move(rem), ord);
    return out;
}

// Buchberger for submodules; pairs only between elements with equal leading
// component.  No product criterion here: it is not valid for modules.
std::vector<ModElement> module_buchberger(std::vector<ModElement> basis, const ModuleOrder& ord,
                                          const RingPtr& ring, const BuchbergerOptions& opts) {
    std::vector<std::pair<size_t, size_t>> pairs;
    auto add_pairs = [&](size_t t) {
        for (size_t i = 0; i < t; ++i)
            if (basis[i].lead().comp == basis[t].lead().comp) pairs.emplace_back(i, t);
    };
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const ModElement& e) { return e.is_zero(); }),
                basis.end());
    for (auto& e : basis) e = primitive(e);
    for (size_t t = 0; t < basis.size(); ++t) add_pairs(t);
    size_t processed = 0;
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        if (++processed > opts.max_pairs)
            throw ResourceLimitError("module_buchberger: pair cap exceeded");
        const ModElement &f = basis[i], &g = basis[j];
        Monomial l = Monomial::lcm(f.lead().m, g.lead().m);
        ModElement s = axpy(ModElement{}, Rational(-1) / f.lead().c, l / f.lead().m, f, ord);
        s = axpy(s, Rational(1) / g.lead().c, l / g.lead().m, g, ord);
        ModDivision d = module_divide(s, basis, ord, ring, false);
        if (!d.remainder.is_zero()) {
            basis.push_back(primitive(d.remainder));
            if (basis.size() > opts.max_basis)
                throw ResourceLimitError("module_buchberger: basis cap exceeded");
            add_pairs(basis.size() - 1);
        }
    }
    return basis;
}

// inter-reduce a module GB: minimal leading terms, reduced tails, primitive
std::vector<ModElement> module_interreduce(std::vector<ModElement> basis, const ModuleOrder& ord,
                                           const RingPtr& ring) {
    std::sort(basis.begin(), basis.end(), [&](const ModElement& a, const ModElement& b) {
        return ord.compare(a.lead().m, a.lead().comp, b.lead().m, b.lead().comp) < 0;
    });
    std::vector<ModElement> minimal;
    for (const ModElement& g : basis) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const ModElement& h) {
            return h.lead().comp == g.lead().comp && h.lead().m.divides(g.lead().m);
        });
        if (!redundant) minimal.push_back(g);
    }
    std::vector<ModElement> reduced = minimal;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<ModElement> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = primitive(module_divide(reduced[i], others, ord, ring, false).remainder);
    }
    return reduced;
}

// Schreyer: the S-pair syzygies of a module GB form a GB of its first syzygy
// module under the induced order.
std::vector<ModElement> schreyer_syzygies(const std::vector<ModElement>& gb,
                                          const ModuleOrder& ord, const RingPtr& ring,
                                          ModuleOrder& syz_order_out) {
    std::vector<std::pair<Monomial, int>> leads;
    for (const auto& g : gb) leads.emplace_back(g.lead().m, g.lead().comp);
    syz_order_out =
        ModuleOrder::schreyer(ring, std::make_shared<const ModuleOrder>(ord), leads);

    std::vector<ModElement> syz;
    for (size_t i = 0; i < gb.size(); ++i) {
        for (size_t j = i + 1; j < gb.size(); ++j) {
            if (gb[i].lead().comp != gb[j].lead().comp) continue;
            Monomial l = Monomial::lcm(gb[i].lead().m, gb[j].lead().m);
            Monomial mi = l / gb[i].lead().m;
            Monomial mj = l / gb[j].lead().m;
            ModElement s = axpy(ModElement{}, Rational(-1) / gb[i].lead().c, mi, gb[i], ord);
            s = axpy(s, Rational(1) / gb[j].lead().c, mj, gb[j], ord);
            ModDivision d = module_divide(s, gb, ord, ring, true);
            if (!d.remainder.is_zero())
                throw ConsistencyError("schreyer_syzygies: input was not a Groebner basis");
            std::vector<ModuleTerm> terms;
            terms.push_back({Rational(1) / gb[i].lead().c, mi, static_cast<int>(i)});
            terms.push_back({Rational(-1) / gb[j].lead().c, mj, static_cast<int>(j)});
            for (size_t k = 0; k < gb.size(); ++k)
                for (const Term& t : d.quotients[k].terms())
                    terms.push_back({-t.c, t.m, static_cast<int>(k)});
            ModElement s_el = normalize(std::move(terms), syz_order_out);
            if (!s_el.is_zero()) syz.push_back(primitive(s_el));
        }
    }
    return syz;
}

std::vector<Polynomial> dense_column(const ModElement& e, const RingPtr& ring, int rank) {
    std::vector<std::vector<Term>> buckets(rank);
    for (const ModuleTerm& t : e.terms) buckets[t.comp].push_back({t.c, t.m});
    std::vector<Polynomial> col;
    col.reserve(rank);
    for (auto& b : buckets) col.push_back(Polynomial::from_terms(ring, std::move(b)));
    return col;
}

bool is_unit_constant(const Polynomial& p) {
    return !p.is_zero() && p.is_constant();
}

// strike out one unit entry of maps[k] at (r, c), adjusting neighbours
void strike(FreeResolution& res, size_t k, int r, int c) {
    PolyMatrix& M = res.maps[k];
    Rational a = M.a[r][c].leading_coefficient();
    // clear row r by column operations, mirrored as row operations on maps[k+1]
    for (int c2 = 0; c2 < M.cols; ++c2) {
        if (c2 == c || M.a[r][c2].is_zero()) continue;
        Polynomial lambda = M.a[r][c2].scaled(1 / a);
        for (int rr = 0; rr < M.rows; ++rr)
            M.a[rr][c2] = M.a[rr][c2] - lambda * M.a[rr][c];
        if (k + 1 < res.maps.size()) {
            PolyMatrix& N = res.maps[k + 1];
            for (int cc = 0; cc < N.cols; ++cc) N.a[c][cc] = N.a[c][cc] + lambda * N.a[c2][cc];
        }
    }
    // clear column c by row operations, mirrored as column operations on maps[k-1]
    for (int r2 = 0; r2 < M.rows; ++r2) {
        if (r2 == r || M.a[r2][c].is_zero()) continue;
        Polynomial mu = M.a[r2][c].scaled(1 / a);
        for (int cc = 0; cc < M.cols; ++cc)
            M.a[r2][cc] = M.a[r2][cc] - mu * M.a[r][cc];
        if (k > 0) {
            PolyMatrix& L = res.maps[k - 1];
            for (int rr = 0; rr < L.rows; ++rr) L.a[rr][r] = L.a[rr][r] + mu * L.a[rr][r2];
        }
    }
    // delete row r / column c of maps[k], row c of maps[k+1], column r of maps[k-1]
    M.a.erase(M.a.begin() + r);
    --M.rows;
    for (auto& row : M.a) row.erase(row.begin() + c);
    --M.cols;
    if (k + 1 < res.maps.size()) {
        res.maps[k + 1].a.erase(res.maps[k + 1].a.begin() + c);
        --res.maps[k + 1].rows;
    }
    if (k > 0) {
        for (auto& row : res.maps[k - 1].a) row.erase(row.begin() + r);
        --res.maps[k - 1].cols;
    }
    res.ranks[k] -= 1;
    res.ranks[k + 1] -= 1;
    if (res.graded) {
        res.shifts[k].erase(res.shifts[k].begin() + r);
        res.shifts[k + 1].erase(res.shifts[k + 1].begin() + c);
    }
}

void minimize(FreeResolution& res) {
    for (;;) {
        bool found = false;
        for (size_t k = 0; k < res.maps.size() && !found; ++k) {
            PolyMatrix& M = res.maps[k];
            for (int r = 0; r < M.rows && !found; ++r) {
                for (int c = 0; c < M.cols && !found; ++c) {
                    if (is_unit_constant(M.a[r][c])) {
                        strike(res, k, r, c);
                        found = true;
                    }
                }
            }
        }
        if (!found) break;
    }
    // drop trailing zero modules
    while (!res.ranks.empty() && res.ranks.back() == 0) {
        res.ranks.pop_back();
        res.maps.pop_back();
        if (res.graded) res.shifts.pop_back();
    }
    res.minimized = true;
}

// descending pure-lex sort of a basis by leading monomial; this is the
// element ordering behind the classical syzygy length bound
void sort_basis_for_syzygies(std::vector<ModElement>& basis) {
    std::sort(basis.begin(), basis.end(), [](const ModElement& a, const ModElement& b) {
        const auto& ea = a.lead().m.e;
        const auto& eb = b.lead().m.e;
        if (ea != eb) return ea > eb;
        return a.lead().comp < b.lead().comp;
    });
}

bool all_homogeneous(std::span<const Polynomial> polys) {
    for (const Polynomial& p : polys) {
        if (p.is_zero()) continue;
        int d = p.terms().front().m.deg();
        for (const Term& t : p.terms())
            if (t.m.deg() != d) return false;
    }
    return true;
}

} // namespace

PolyMatrix PolyMatrix::zero(const RingPtr& ring, int rows, int cols) {
    PolyMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.a.assign(rows, std::vector<Polynomial>(cols, Polynomial::zero(ring)));
    return m;
}

std::vector<std::vector<Polynomial>> syzygies(const RingPtr& ring,
                                              std::span<const Polynomial> gens,
                                              const BuchbergerOptions& opts) {
    int r = static_cast<int>(gens.size());
    // augmented elements g_i e_0 + e_{i+1} in R^{r+1} under component-first
    // order: basis elements with no e_0 part are exactly the syzygies
    ModuleOrder ord = ModuleOrder::pot(ring);
    std::vector<ModElement> aug;
    for (int i = 0; i < r; ++i) {
        std::vector<ModuleTerm> terms;
        for (const Term& t : gens[i].terms()) terms.push_back({t.c, t.m, 0});
        terms.push_back({Rational(1), Monomial(ring->nvars()), i + 1});
        aug.push_back(normalize(std::move(terms), ord));
    }
    std::vector<ModElement> gb = module_buchberger(std::move(aug), ord, ring, opts);
    std::vector<ModElement> kernel;
    for (const ModElement& e : gb)
        if (!e.is_zero() && e.lead().comp != 0) kernel.push_back(e);
    kernel = module_interreduce(std::move(kernel), ord, ring);

    // make the generating set irredundant
    for (size_t i = kernel.size(); i-- > 0;) {
        std::vector<ModElement> others;
        for (size_t j = 0; j < kernel.size(); ++j)
            if (j != i) others.push_back(kernel[j]);
        if (others.empty()) break;
        std::vector<ModElement> ogb = module_buchberger(others, ord, ring, opts);
        if (module_divide(kernel[i], ogb, ord, ring, false).remainder.is_zero())
            kernel.erase(kernel.begin() + i);
    }

    std::vector<std::vector<Polynomial>> out;
    for (const ModElement& e : kernel) {
        ModElement shifted = e;
        for (auto& t : shifted.terms) t.comp -= 1;
        out.push_back(dense_column(shifted, ring, r));
    }
    return out;
}

FreeResolution free_resolution(const Ideal& I, const BuchbergerOptions& opts) {
    const RingPtr& R = I.ring();
    FreeResolution res;
    res.ring = R;
    res.ranks = {1};
    res.shifts = {{0}};

    const GroebnerBasis& G = I.groebner(opts);
    if (G.elements().empty()) return res; // R itself is free
    if (G.elements().front().is_constant())
        throw DomainError("free_resolution: the unit ideal does not define a module");

    res.graded = all_homogeneous(I.generators()) && all_homogeneous(G.elements());

    // level 1: the reduced basis as elements of R^1
    ModuleOrder ord = ModuleOrder::base(R);
    std::vector<ModElement> current;
    for (const Polynomial& g : G.elements()) {
        std::vector<ModuleTerm> terms;
        for (const Term& t : g.terms()) terms.push_back({t.c, t.m, 0});
        current.push_back(normalize(std::move(terms), ord));
    }
    sort_basis_for_syzygies(current);

    {
        PolyMatrix d1 = PolyMatrix::zero(R, 1, static_cast<int>(current.size()));
        std::vector<int> sh;
        for (size_t c = 0; c < current.size(); ++c) {
            std::vector<Term> ts;
            for (const ModuleTerm& t : current[c].terms) ts.push_back({t.c, t.m});
            d1.a[0][c] = Polynomial::from_terms(R, std::move(ts));
            sh.push_back(current[c].lead().m.deg());
        }
        res.maps.push_back(std::move(d1));
        res.ranks.push_back(static_cast<int>(current.size()));
        if (res.graded) res.shifts.push_back(std::move(sh));
    }

    int guard = R->nvars() + 4;
    for (int level = 1;; ++level) {
        ModuleOrder next_ord = ord;
        std::vector<ModElement> syz = schreyer_syzygies(current, ord, R, next_ord);
        if (syz.empty()) break;
        if (level >= guard) throw ResourceLimitError("free_resolution: length guard exceeded");
        syz = module_interreduce(std::move(syz), next_ord, R);
        sort_basis_for_syzygies(syz);
        int rank_prev = static_cast<int>(current.size());
        PolyMatrix d = PolyMatrix::zero(R, rank_prev, static_cast<int>(syz.size()));
        for (size_t c = 0; c < syz.size(); ++c) {
            auto col = dense_column(syz[c], R, rank_prev);
            for (int r = 0; r < rank_prev; ++r) d.a[r][c] = col[r];
        }
        res.maps.push_back(std::move(d));
        res.ranks.push_back(static_cast<int>(syz.size()));
        if (res.graded) {
            std::vector<int> sh;
            for (const ModElement& e : syz)
                sh.push_back(e.lead().m.deg() + res.shifts[level][e.lead().comp]);
            res.shifts.push_back(std::move(sh));
        }
        current = std::move(syz);
        ord = next_ord;
    }

    if (res.graded) minimize(res);
    return res;
}

int projective_dimension(const FreeResolution& res) { return res.length(); }

CMReport is_cohen_macaulay(const Ideal& I, const BuchbergerOptions& opts) {
    CMReport rep;
    rep.height = height(I, opts);
    FreeResolution res = free_resolution(I, opts);
    rep.projective_dimension = projective_dimension(res);
    rep.pd_exact = res.graded;
    if (res.graded) rep.cohen_macaulay = (rep.projective_dimension == rep.height);
    return rep;
}

} // namespace conelab
