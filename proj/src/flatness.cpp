#include "conelab/flatness.hpp"

#include "conelab/errors.hpp"

namespace conelab {

namespace {

// First element of the canonical reduced basis of `expr` that fails to reduce
// to zero against I; nullopt when expr is contained in I.
std::optional<Polynomial> find_witness(const Ideal& I, const Ideal& expr,
                                       const BuchbergerOptions& opts) {
    const GroebnerBasis& GI = I.groebner(opts);
    for (const Polynomial& g : expr.groebner(opts).elements())
        if (!normal_form(g, GI).is_zero()) return g;
    return std::nullopt;
}

Polynomial parameter_poly(const Ideal& I) {
    if (!I.ring()->param())
        throw DomainError("criterion needs a declared family parameter");
    return Polynomial::variable(I.ring(), *I.ring()->param());
}

// The unmixed part J : (J : I), plus the one equidimensionality sanity check
// this tool performs.  Full equidimensional decomposition is out of reach
// here, so the hypothesis itself stays user-asserted.
Ideal unmixed_part(const Ideal& I, const TestIdeal& J, const FlatnessOptions& opts,
                   std::vector<std::string>& notes) {
    Ideal U = colon(J.ideal, colon(J.ideal, I, opts.gb), opts.gb);
    int dI = dimension(I, opts.gb);
    int dU = dimension(U, opts.gb);
    if (dI == dU) {
        notes.push_back("equidimensionality assumed (user-asserted); sanity check passed: "
                        "dim(I) = dim(J:(J:I)) = " +
                        std::to_string(dI));
    } else {
        notes.push_back("WARNING: dim(I) = " + std::to_string(dI) +
                        " but dim(J:(J:I)) = " + std::to_string(dU) +
                        "; the equidimensionality hypothesis looks violated");
    }
    return U;
}

} // namespace

FlatnessReport has_no_embedded_components(const Ideal& I, const TestIdeal& J,
                                          const FlatnessOptions& opts) {
    FlatnessReport rep;
    rep.criterion = FlatnessCriterion::no_embedded;
    rep.test_ideal_used = J;
    Ideal U = unmixed_part(I, J, opts, rep.hypothesis_notes);
    rep.witness = find_witness(I, U, opts.gb);
    rep.verdict = !rep.witness.has_value();
    return rep;
}

FlatnessReport is_flat_over_germ(const Ideal& I, const FlatnessOptions& opts) {
    FlatnessReport rep;
    rep.criterion = FlatnessCriterion::flat;
    Polynomial t = parameter_poly(I);
    Ideal Q = colon(I, t, opts.gb);
    rep.witness = find_witness(I, Q, opts.gb);
    rep.verdict = !rep.witness.has_value();
    if (opts.also_saturated) {
        Ideal S = saturate(I, t, opts.gb);
        rep.saturated_verdict = !find_witness(I, S, opts.gb).has_value();
        if (*rep.saturated_verdict != rep.verdict)
            rep.hypothesis_notes.push_back(
                "NOTE: single-colon and saturation variants disagree on this input");
    }
    return rep;
}

FlatnessReport is_internally_flat(const Ideal& I, const TestIdeal& J,
                                  const FlatnessOptions& opts) {
    FlatnessReport rep;
    rep.criterion = FlatnessCriterion::internally_flat;
    rep.test_ideal_used = J;
    Polynomial t = parameter_poly(I);
    Ideal U = unmixed_part(I, J, opts, rep.hypothesis_notes);
    Ideal E = intersect(colon(I, t, opts.gb), U, opts.gb);
    rep.witness = find_witness(I, E, opts.gb);
    rep.verdict = !rep.witness.has_value();
    if (opts.also_saturated) {
        Ideal Es = intersect(saturate(I, t, opts.gb), U, opts.gb);
        rep.saturated_verdict = !find_witness(I, Es, opts.gb).has_value();
        if (*rep.saturated_verdict != rep.verdict)
            rep.hypothesis_notes.push_back(
                "NOTE: single-colon and saturation variants disagree on this input");
    }
    return rep;
}

} // namespace conelab
