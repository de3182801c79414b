#include "conelab/segre.hpp"

#include "conelab/errors.hpp"
#include "conelab/poly_gcd.hpp"

namespace conelab {

namespace {

std::vector<int> coordinate_block(const Polynomial& f) {
    return f.ring()->coordinate_vars();
}

Polynomial at_param_zero(const Polynomial& f) {
    const RingPtr& R = f.ring();
    if (!R->param()) return f;
    std::map<int, Polynomial> at0{{*R->param(), Polynomial::zero(R)}};
    return substitute(f, at0, R);
}

} // namespace

CycleClass s0_tangent_star(const Polynomial& f) {
    std::vector<int> xvars = coordinate_block(f);
    if (f.is_zero() || f.degree_on(xvars) <= 0)
        throw DomainError("s0 needs a polynomial nonconstant in the coordinate block");
    CycleClass cls;
    for (auto& [m, g] : squarefree_decomposition(f, xvars))
        cls.terms.push_back({m * m, std::move(g)});
    return cls;
}

CoalescenceReport coalescence_check(const Polynomial& f) {
    const RingPtr& R = f.ring();
    if (!R->param()) throw DomainError("coalescence check needs a declared family parameter");
    std::vector<int> xvars = coordinate_block(f);
    if (f.is_zero() || f.degree_on(xvars) <= 0)
        throw DomainError("coalescence check needs a polynomial nonconstant in the coordinates");

    Polynomial f0 = at_param_zero(f);
    if (f0.is_zero())
        throw DomainError("degenerate family: f vanishes identically at parameter zero");
    if (f0.degree_on(xvars) != f.degree_on(xvars))
        throw DomainError("degenerate family: coordinate degree drops at parameter zero");

    auto parts = squarefree_decomposition(f, xvars);
    std::vector<Polynomial> specialized;
    for (const auto& [m, g] : parts) specialized.push_back(at_param_zero(g).primitive_normalized());

    CoalescenceReport rep;
    // criterion 1: every multiplicity class stays squarefree at t = 0 (this
    // also catches equal-multiplicity components merging into a square)
    for (const Polynomial& g0 : specialized) {
        Polynomial obstruction = squarefree_obstruction(g0, xvars);
        if (!obstruction.is_constant()) {
            rep.verdict = false;
            rep.failing_criterion = 1;
            rep.certificate = obstruction.primitive_normalized();
            return rep;
        }
    }
    // criterion 2: distinct multiplicity classes stay coprime at t = 0
    for (size_t i = 0; i < specialized.size(); ++i) {
        for (size_t j = i + 1; j < specialized.size(); ++j) {
            Polynomial common = multivariate_gcd(specialized[i], specialized[j]);
            if (!common.is_constant()) {
                rep.verdict = false;
                rep.failing_criterion = 2;
                rep.certificate = common;
                return rep;
            }
        }
    }
    rep.verdict = true;
    return rep;
}

SpecializationReport s0_specializes(const Polynomial& f) {
    SpecializationReport rep;
    rep.coalescence = coalescence_check(f); // validates the preconditions
    rep.verdict = rep.coalescence.verdict;
    rep.family_class = s0_tangent_star(f);
    rep.fiber_class = s0_tangent_star(at_param_zero(f));
    if (rep.verdict) {
        // no coalescence: the specialized family class must be the fiber class
        // term by term (components up to a scalar)
        if (rep.family_class.terms.size() != rep.fiber_class.terms.size())
            throw ConsistencyError("s0_specializes: class sizes differ on a true verdict");
        for (size_t i = 0; i < rep.family_class.terms.size(); ++i) {
            const auto& fam = rep.family_class.terms[i];
            const auto& fib = rep.fiber_class.terms[i];
            if (fam.weight != fib.weight ||
                !(at_param_zero(fam.component).primitive_normalized() ==
                  fib.component.primitive_normalized()))
                throw ConsistencyError("s0_specializes: classes disagree on a true verdict");
        }
    }
    return rep;
}

} // namespace conelab
