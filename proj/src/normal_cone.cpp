#include "conelab/normal_cone.hpp"

#include <algorithm>

#include "conelab/errors.hpp"
#include "conelab/poly_gcd.hpp"

namespace conelab {

ConeRingLayout make_cone_ring(const RingPtr& base, std::vector<std::string> dir_names) {
    std::vector<int> coords = base->coordinate_vars();
    int n = static_cast<int>(coords.size());
    if (dir_names.empty()) {
        for (int i = 0; i < n; ++i)
            dir_names.push_back(n == 1 ? std::string("u") : "u" + std::to_string(i + 1));
    }
    if (static_cast<int>(dir_names.size()) != n)
        throw DomainError("one direction name per coordinate variable is required");

    std::vector<std::string> names;
    for (int v : coords) names.push_back(base->name(v));
    for (const auto& d : dir_names) {
        if (std::find(names.begin(), names.end(), d) != names.end())
            throw DomainError("direction name '" + d + "' collides with a coordinate");
        names.push_back(d);
    }
    std::optional<std::string> param_name;
    if (base->param()) {
        param_name = base->name(*base->param());
        names.push_back(*param_name);
    }
    ConeRingLayout layout;
    layout.ring = PolyRing::make(names, param_name);
    for (int i = 0; i < n; ++i) {
        layout.base_vars.push_back(i);
        layout.dir_vars.push_back(n + i);
    }
    return layout;
}

Ideal initial_form_ideal(const Ideal& Q, std::span<const int> dir_vars,
                         const BuchbergerOptions& opts) {
    const RingPtr& R = Q.ring();
    RingPtr E = extend_front(R, {fresh_name(*R, "s")});
    Polynomial s = Polynomial::variable(E, 0);

    // g(x, u, t) -> g(x, s*u, t)
    std::map<int, Polynomial> rescale;
    for (int u : dir_vars) rescale.emplace(u, s * Polynomial::variable(E, u + 1));
    std::vector<Polynomial> deformed;
    for (const Polynomial& g : Q.generators()) {
        if (g.is_zero()) continue;
        deformed.push_back(substitute(g, rescale, E));
    }

    Ideal saturated = saturate(Ideal(E, std::move(deformed)), s, opts);

    std::map<int, Polynomial> at0{{0, Polynomial::zero(E)}};
    std::vector<Polynomial> out;
    for (const Polynomial& g : saturated.generators()) {
        Polynomial h = substitute(g, at0, E);
        if (!h.is_zero()) out.push_back(map_to_ring(h, R));
    }
    return Ideal(R, std::move(out));
}

ConePresentation tangent_star_ideal(const Ideal& IX, std::vector<std::string> dir_names,
                                    const BuchbergerOptions& opts) {
    ConeRingLayout layout = make_cone_ring(IX.ring(), std::move(dir_names));
    const RingPtr& C = layout.ring;

    // second copy of X moved off the diagonal: x -> x + u
    std::map<int, Polynomial> shift;
    for (size_t i = 0; i < layout.base_vars.size(); ++i)
        shift.emplace(layout.base_vars[i],
                      Polynomial::variable(C, layout.base_vars[i]) +
                          Polynomial::variable(C, layout.dir_vars[i]));

    std::vector<Polynomial> gens;
    for (const Polynomial& g : IX.generators()) {
        if (g.is_zero()) continue;
        Polynomial gc = map_to_ring(g, C);
        gens.push_back(gc);
        gens.push_back(substitute(gc, shift, C));
    }
    Ideal cone = initial_form_ideal(Ideal(C, std::move(gens)), layout.dir_vars, opts);
    return ConePresentation{C, layout.base_vars, layout.dir_vars, std::move(cone),
                            ConePresentation::Provenance::deformation};
}

Polynomial polarize(const Polynomial& f, std::span<const int> base_vars,
                    std::span<const int> dir_vars, int k) {
    if (k < 0) throw DomainError("polarize: negative iterate");
    Polynomial g = f;
    for (int round = 0; round < k; ++round) {
        Polynomial next = Polynomial::zero(f.ring());
        for (size_t i = 0; i < base_vars.size(); ++i)
            next = next + Polynomial::variable(f.ring(), dir_vars[i]) * g.derivative(base_vars[i]);
        g = std::move(next);
    }
    return g;
}

std::vector<Polynomial> hypersurface_ts_generators(const Polynomial& f,
                                                   std::vector<std::string> dir_names) {
    const RingPtr& base = f.ring();
    std::vector<int> xvars = base->coordinate_vars();
    if (f.is_zero() || f.degree_on(xvars) <= 0)
        throw DomainError("hypersurface generators need a nonconstant polynomial");

    ConeRingLayout layout = make_cone_ring(base, std::move(dir_names));
    const RingPtr& C = layout.ring;

    // multiplicity structure of f over the coordinate block; the parameter
    // only rides along in the coefficients
    auto parts = squarefree_decomposition(f, xvars);
    std::vector<std::pair<int, Polynomial>> mapped;
    for (auto& [m, g] : parts) mapped.emplace_back(m, map_to_ring(g, C));
    int max_mult = mapped.empty() ? 0 : mapped.back().first;

    std::vector<Polynomial> gens{map_to_ring(f, C)};
    for (int m = 1; m <= max_mult; ++m) {
        Polynomial lower = Polynomial::constant(C, 1);
        Polynomial upper = Polynomial::constant(C, 1);
        for (const auto& [mult, g] : mapped) {
            if (mult < m)
                lower = lower * g.pow(mult);
            else
                upper = upper * g.pow(mult + m - 1);
        }
        Polynomial s = lower * lower * polarize(upper, layout.base_vars, layout.dir_vars, 2 * m - 1);
        if (s.is_zero()) break;
        gens.push_back(std::move(s));
    }
    return gens;
}

ConePresentation hypersurface_ts_cone(const Polynomial& f, std::vector<std::string> dir_names,
                                      const BuchbergerOptions& opts) {
    (void)opts;
    ConeRingLayout layout = make_cone_ring(f.ring(), dir_names);
    std::vector<Polynomial> gens = hypersurface_ts_generators(f, std::move(dir_names));
    return ConePresentation{layout.ring, layout.base_vars, layout.dir_vars,
                            Ideal(layout.ring, std::move(gens)),
                            ConePresentation::Provenance::polarization};
}

Ideal rees_normal_cone(const Ideal& IY, std::span<const Polynomial> IZ_extra,
                       std::vector<std::string> fiber_names, const BuchbergerOptions& opts) {
    const RingPtr& R = IY.ring();
    int s = static_cast<int>(IZ_extra.size());
    if (fiber_names.empty())
        for (int i = 1; i <= s; ++i) fiber_names.push_back(fresh_name(*R, "y" + std::to_string(i)));
    if (static_cast<int>(fiber_names.size()) != s)
        throw DomainError("one fiber coordinate per center generator is required");

    RingPtr F = extend_back(R, fiber_names);
    RingPtr E = extend_front(F, {fresh_name(*F, "w")});
    Polynomial w = Polynomial::variable(E, 0);

    std::vector<Polynomial> gens;
    for (const Polynomial& g : IY.generators())
        if (!g.is_zero()) gens.push_back(map_to_ring(g, E));
    for (int i = 0; i < s; ++i) {
        require_same_ring(IZ_extra[i].ring(), R, "rees_normal_cone");
        Polynomial yi = Polynomial::variable(E, 1 + R->nvars() + i);
        gens.push_back(yi - w * map_to_ring(IZ_extra[i], E));
    }

    GroebnerBasis gb = buchberger(E, gens, opts);
    std::vector<Polynomial> result;
    for (const Polynomial& g : gb.elements())
        if (!g.involves(0)) result.push_back(map_to_ring(g, F));
    // the associated graded ring is the Rees algebra modulo the center
    for (const Polynomial& g : IY.generators())
        if (!g.is_zero()) result.push_back(map_to_ring(g, F));
    for (const Polynomial& g : IZ_extra) result.push_back(map_to_ring(g, F));
    return Ideal(F, std::move(result));
}

FiberCompareResult cone_fiber_compare(const ConePresentation& C, const Ideal& IX,
                                      const BuchbergerOptions& opts) {
    if (!C.ring->param() || !IX.ring()->param())
        throw DomainError("fiber comparison needs a declared family parameter");
    int tc = *C.ring->param();

    RingPtr CF = drop_vars(C.ring, {tc});
    std::map<int, Polynomial> cone_at0{{tc, Polynomial::zero(C.ring)}};
    std::vector<Polynomial> family_fiber_gens;
    for (const Polynomial& g : C.ideal.generators()) {
        Polynomial h = substitute(g, cone_at0, C.ring);
        if (!h.is_zero()) family_fiber_gens.push_back(map_to_ring(h, CF));
    }
    Ideal family_fiber(CF, std::move(family_fiber_gens));

    // cone of the fiber, built with the same direction names
    int tb = *IX.ring()->param();
    RingPtr BF = drop_vars(IX.ring(), {tb});
    std::map<int, Polynomial> base_at0{{tb, Polynomial::zero(IX.ring())}};
    std::vector<Polynomial> fiber_gens;
    for (const Polynomial& g : IX.generators()) {
        Polynomial h = substitute(g, base_at0, IX.ring());
        if (!h.is_zero()) fiber_gens.push_back(map_to_ring(h, BF));
    }
    std::vector<std::string> dir_names;
    for (int u : C.dir_vars) dir_names.push_back(C.ring->name(u));
    ConePresentation fiber_cone_pres =
        tangent_star_ideal(Ideal(BF, std::move(fiber_gens)), dir_names, opts);
    std::vector<Polynomial> fc_gens;
    for (const Polynomial& g : fiber_cone_pres.ideal.generators())
        fc_gens.push_back(map_to_ring(g, CF));
    Ideal fiber_cone(CF, std::move(fc_gens));

    FiberCompareResult res{FiberCompare::equal, std::nullopt, family_fiber, fiber_cone};
    if (ideal_equal(family_fiber, fiber_cone, opts)) return res;
    if (ideal_contains(fiber_cone, family_fiber, opts)) {
        res.outcome = FiberCompare::cone_fiber_strictly_larger;
        const GroebnerBasis& GA = family_fiber.groebner(opts);
        for (const Polynomial& g : fiber_cone.groebner(opts).elements()) {
            if (!normal_form(g, GA).is_zero()) {
                res.certificate = g;
                break;
            }
        }
        return res;
    }
    throw ConsistencyError("cone_fiber_compare: family fiber does not contain the fiber cone");
}

} // namespace conelab
