#include "conelab/runner.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <regex>

#include "conelab/errors.hpp"
#include "conelab/flatness.hpp"
#include "conelab/normal_cone.hpp"
#include "conelab/resolution.hpp"
#include "conelab/segre.hpp"

namespace conelab {

namespace {

using nlohmann::json;

struct Context {
    SessionScript script;
    const RunOptions* opts;
    BuchbergerOptions gb;
    json* report;

    const RingPtr& ring() const { return script.ring; }

    Ideal ideal_arg(const std::vector<std::string>& args, size_t idx) const {
        std::string name;
        if (idx < args.size()) {
            name = args[idx];
        } else if (opts->ideal_name) {
            name = *opts->ideal_name;
        } else if (script.ideals.size() == 1) {
            name = script.ideals[0].first;
        } else {
            throw DomainError("no ideal argument given and no unique ideal binding");
        }
        const auto* gens = script.find_ideal(name);
        if (!gens) throw DomainError("unknown ideal '" + name + "'");
        return Ideal(script.ring, *gens);
    }

    Polynomial poly_arg(const std::vector<std::string>& args, size_t idx) const {
        std::string name;
        if (idx < args.size()) {
            name = args[idx];
        } else if (script.polys.size() == 1) {
            name = script.polys[0].first;
        } else {
            throw DomainError("no polynomial argument given and no unique poly binding");
        }
        const auto* p = script.find_poly(name);
        if (!p) throw DomainError("unknown polynomial '" + name + "'");
        return *p;
    }
};

json poly_list_json(const std::vector<Polynomial>& polys) {
    json out = json::array();
    for (const auto& p : polys) out.push_back(p.to_string());
    return out;
}

json cycle_class_json(const CycleClass& cls) {
    json out = json::array();
    for (const auto& e : cls.terms)
        out.push_back({{"weight", e.weight}, {"component", e.component.to_string()}});
    return out;
}

void flatness_to_json(const FlatnessReport& rep, json& out) {
    out["verdict"] = rep.verdict;
    out["witness"] = rep.witness ? json(rep.witness->to_string()) : json(nullptr);
    for (const auto& n : rep.hypothesis_notes) out["notes"].push_back(n);
    if (rep.saturated_verdict) out["saturated_verdict"] = *rep.saturated_verdict;
    if (rep.test_ideal_used) {
        out["test_ideal"] = poly_list_json(rep.test_ideal_used->ideal.generators());
        json cert = json::array();
        for (const auto& s : rep.test_ideal_used->certificate)
            cert.push_back({{"step", s.index},
                            {"coefficients", s.coefficients},
                            {"height", s.verified_height}});
        out["test_ideal_certificate"] = cert;
    }
}

// test ideal for the colon criteria: explicit binding, file, or generated
TestIdeal resolve_test_ideal(const Context& ctx, const Ideal& I,
                             const std::vector<std::string>& args, size_t idx, json& out) {
    if (idx < args.size()) {
        const auto* gens = ctx.script.find_ideal(args[idx]);
        if (!gens) throw DomainError("unknown ideal '" + args[idx] + "'");
        out["test_ideal_source"] = "binding " + args[idx];
        return make_test_ideal(I, Ideal(ctx.ring(), *gens), ctx.gb);
    }
    if (ctx.opts->test_ideal_file) {
        SessionScript ts = parse_script_file(*ctx.opts->test_ideal_file);
        const std::vector<Polynomial>* gens = ts.find_ideal("J");
        if (!gens && ts.ideals.size() == 1) gens = &ts.ideals[0].second;
        if (!gens) throw DomainError("test-ideal file must bind an ideal (preferably 'J')");
        std::vector<Polynomial> mapped;
        for (const auto& g : *gens) mapped.push_back(map_to_ring(g, ctx.ring()));
        out["test_ideal_source"] = "file " + *ctx.opts->test_ideal_file;
        return make_test_ideal(I, Ideal(ctx.ring(), std::move(mapped)), ctx.gb);
    }
    out["test_ideal_source"] = "generated (seed " + std::to_string(ctx.opts->seed) + ")";
    return build_test_ideal(I, ctx.opts->seed, ctx.gb);
}

int bool_exit(bool verdict) { return verdict ? kExitTrue : kExitFalse; }

using Handler = std::function<int(Context&, const std::vector<std::string>&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"gb",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             const GroebnerBasis& G = I.groebner(ctx.gb);
             (*ctx.report)["basis"] = poly_list_json(G.elements());
             (*ctx.report)["gb_size"] = G.size();
             return kExitTrue;
         }},
        {"nf",
         [](Context& ctx, const std::vector<std::string>& args) {
             Polynomial f = ctx.poly_arg(args, 0);
             Ideal I = ctx.ideal_arg(args, 1);
             Polynomial r = normal_form(f, I.groebner(ctx.gb));
             (*ctx.report)["normal_form"] = r.to_string();
             (*ctx.report)["member"] = r.is_zero();
             (*ctx.report)["gb_size"] = I.groebner(ctx.gb).size();
             return kExitTrue;
         }},
        {"colon",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             Ideal J = ctx.ideal_arg(args, 1);
             Ideal Q = colon(I, J, ctx.gb);
             (*ctx.report)["generators"] = poly_list_json(Q.groebner(ctx.gb).elements());
             return kExitTrue;
         }},
        {"intersect",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             Ideal J = ctx.ideal_arg(args, 1);
             (*ctx.report)["generators"] =
                 poly_list_json(intersect(I, J, ctx.gb).groebner(ctx.gb).elements());
             return kExitTrue;
         }},
        {"saturate",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             Polynomial f = ctx.poly_arg(args, 1);
             (*ctx.report)["generators"] =
                 poly_list_json(saturate(I, f, ctx.gb).groebner(ctx.gb).elements());
             return kExitTrue;
         }},
        {"eliminate",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             std::vector<int> vars;
             for (size_t k = 1; k < args.size(); ++k) {
                 int v = ctx.ring()->index_of(args[k]);
                 if (v < 0) throw DomainError("unknown variable '" + args[k] + "'");
                 vars.push_back(v);
             }
             (*ctx.report)["generators"] =
                 poly_list_json(eliminate(I, vars, ctx.gb).generators());
             return kExitTrue;
         }},
        {"dim",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             int d = dimension(I, ctx.gb);
             if (d == kEmptyScheme) {
                 (*ctx.report)["dimension"] = nullptr;
                 (*ctx.report)["empty_scheme"] = true;
             } else {
                 (*ctx.report)["dimension"] = d;
                 (*ctx.report)["height"] = I.ring()->nvars() - d;
             }
             (*ctx.report)["gb_size"] = I.groebner(ctx.gb).size();
             return kExitTrue;
         }},
        {"tangent-star",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             ConePresentation C = tangent_star_ideal(I, ctx.opts->dirs, ctx.gb);
             (*ctx.report)["ring"] = C.ring->names();
             (*ctx.report)["generators"] = poly_list_json(C.ideal.generators());
             (*ctx.report)["gb_size"] = C.ideal.groebner(ctx.gb).size();
             return kExitTrue;
         }},
        {"smf",
         [](Context& ctx, const std::vector<std::string>& args) {
             Polynomial f = ctx.poly_arg(args, 0);
             auto gens = hypersurface_ts_generators(f, ctx.opts->dirs);
             (*ctx.report)["ring"] = gens.front().ring()->names();
             (*ctx.report)["generators"] = poly_list_json(gens);
             return kExitTrue;
         }},
        {"s0",
         [](Context& ctx, const std::vector<std::string>& args) {
             Polynomial f = ctx.poly_arg(args, 0);
             if (ctx.ring()->param()) {
                 SpecializationReport rep = s0_specializes(f);
                 (*ctx.report)["verdict"] = rep.verdict;
                 (*ctx.report)["family_class"] = cycle_class_json(rep.family_class);
                 (*ctx.report)["fiber_class"] = cycle_class_json(rep.fiber_class);
                 if (rep.coalescence.failing_criterion)
                     (*ctx.report)["failing_criterion"] = *rep.coalescence.failing_criterion;
                 if (rep.coalescence.certificate)
                     (*ctx.report)["certificate"] = rep.coalescence.certificate->to_string();
                 return bool_exit(rep.verdict);
             }
             (*ctx.report)["class"] = cycle_class_json(s0_tangent_star(f));
             return kExitTrue;
         }},
        {"coalesce",
         [](Context& ctx, const std::vector<std::string>& args) {
             Polynomial f = ctx.poly_arg(args, 0);
             CoalescenceReport rep = coalescence_check(f);
             (*ctx.report)["verdict"] = rep.verdict;
             if (rep.failing_criterion)
                 (*ctx.report)["failing_criterion"] = *rep.failing_criterion;
             (*ctx.report)["certificate"] =
                 rep.certificate ? json(rep.certificate->to_string()) : json(nullptr);
             return bool_exit(rep.verdict);
         }},
        {"embedded",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             TestIdeal J = resolve_test_ideal(ctx, I, args, 1, *ctx.report);
             FlatnessOptions fo;
             fo.gb = ctx.gb;
             FlatnessReport rep = has_no_embedded_components(I, J, fo);
             flatness_to_json(rep, *ctx.report);
             return bool_exit(rep.verdict);
         }},
        {"flat",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             FlatnessOptions fo;
             fo.gb = ctx.gb;
             fo.also_saturated = ctx.opts->saturate;
             FlatnessReport rep = is_flat_over_germ(I, fo);
             flatness_to_json(rep, *ctx.report);
             return bool_exit(rep.verdict);
         }},
        {"internal-flat",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             TestIdeal J = resolve_test_ideal(ctx, I, args, 1, *ctx.report);
             FlatnessOptions fo;
             fo.gb = ctx.gb;
             fo.also_saturated = ctx.opts->saturate;
             FlatnessReport rep = is_internally_flat(I, J, fo);
             flatness_to_json(rep, *ctx.report);
             return bool_exit(rep.verdict);
         }},
        {"fiber-compare",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal X = ctx.ideal_arg(args, 0);
             ConePresentation C = tangent_star_ideal(X, ctx.opts->dirs, ctx.gb);
             FiberCompareResult res = cone_fiber_compare(C, X, ctx.gb);
             bool equal = res.outcome == FiberCompare::equal;
             (*ctx.report)["outcome"] = equal ? "equal" : "cone_fiber_strictly_larger";
             (*ctx.report)["verdict"] = equal;
             (*ctx.report)["certificate"] =
                 res.certificate ? json(res.certificate->to_string()) : json(nullptr);
             return bool_exit(equal);
         }},
        {"pd",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             FreeResolution res = free_resolution(I, ctx.gb);
             (*ctx.report)["pd"] = projective_dimension(res);
             (*ctx.report)["pd_exact"] = res.graded;
             (*ctx.report)["graded"] = res.graded;
             (*ctx.report)["betti"] = res.ranks;
             if (!res.graded)
                 (*ctx.report)["notes"].push_back(
                     "input is not graded: pd is an upper bound from a non-minimal resolution");
             return kExitTrue;
         }},
        {"cm",
         [](Context& ctx, const std::vector<std::string>& args) {
             Ideal I = ctx.ideal_arg(args, 0);
             CMReport rep = is_cohen_macaulay(I, ctx.gb);
             (*ctx.report)["pd"] = rep.projective_dimension;
             (*ctx.report)["pd_exact"] = rep.pd_exact;
             (*ctx.report)["height"] = rep.height;
             if (!rep.cohen_macaulay) {
                 (*ctx.report)["verdict"] = nullptr;
                 (*ctx.report)["notes"].push_back(
                     "input is not graded: Cohen-Macaulay verdict is indeterminate");
                 return kExitTrue;
             }
             (*ctx.report)["verdict"] = *rep.cohen_macaulay;
             return bool_exit(*rep.cohen_macaulay);
         }},
        {"verdict",
         [](Context& ctx, const std::vector<std::string>& args) {
             Polynomial f = ctx.poly_arg(args, 0);
             CoalescenceReport rep = coalescence_check(f);
             (*ctx.report)["coalescence_free"] = rep.verdict;
             (*ctx.report)["verdict"] = rep.verdict;
             if (rep.verdict) {
                 (*ctx.report)["notes"].push_back(
                     "components do not coalesce: the relative tangent star cone is flat "
                     "over the germ and its fiber is the fiber's tangent star cone");
             } else {
                 if (rep.failing_criterion)
                     (*ctx.report)["failing_criterion"] = *rep.failing_criterion;
                 (*ctx.report)["certificate"] =
                     rep.certificate ? json(rep.certificate->to_string()) : json(nullptr);
                 (*ctx.report)["notes"].push_back(
                     "coalescence detected: no flatness conclusion from this criterion "
                     "(the implication is one-directional)");
             }
             if (ctx.opts->verify) {
                 ConePresentation C =
                     tangent_star_ideal(Ideal(ctx.ring(), {f}), ctx.opts->dirs, ctx.gb);
                 FlatnessOptions fo;
                 fo.gb = ctx.gb;
                 FlatnessReport flat = is_flat_over_germ(C.ideal, fo);
                 FiberCompareResult cmp = cone_fiber_compare(C, Ideal(ctx.ring(), {f}), ctx.gb);
                 (*ctx.report)["verified_cone_flat"] = flat.verdict;
                 (*ctx.report)["verified_fiber_equal"] = cmp.outcome == FiberCompare::equal;
                 if (rep.verdict && (!flat.verdict || cmp.outcome != FiberCompare::equal))
                     throw ConsistencyError(
                         "verdict: direct verification contradicts the coalescence criterion");
                 if (!rep.verdict)
                     (*ctx.report)["notes"].push_back(
                         "direct verification recorded for the coalescing case (observation "
                         "only)");
             }
             return bool_exit(rep.verdict);
         }},
    };
    return table;
}

SessionScript apply_overrides(SessionScript script, const RunOptions& opts) {
    if (!opts.order && !opts.param) return script;
    RingPtr ring = script.ring;
    std::optional<int> param = ring->param();
    if (opts.param) {
        int v = ring->index_of(*opts.param);
        if (v < 0) throw DomainError("parameter '" + *opts.param + "' is not a ring variable");
        param = v;
    }
    MonomialOrder order = ring->order();
    if (opts.order) {
        if (*opts.order == "lex")
            order = MonomialOrder::lex(ring->nvars());
        else if (*opts.order == "grevlex")
            order = MonomialOrder::grevlex(ring->nvars());
        else
            throw DomainError("unknown order '" + *opts.order + "'");
    }
    RingPtr fresh = std::make_shared<PolyRing>(ring->names(), param, order);
    SessionScript out;
    out.ring = fresh;
    for (const auto& [name, p] : script.polys) out.polys.emplace_back(name, map_to_ring(p, fresh));
    for (const auto& [name, gens] : script.ideals) {
        std::vector<Polynomial> mapped;
        for (const auto& g : gens) mapped.push_back(map_to_ring(g, fresh));
        out.ideals.emplace_back(name, std::move(mapped));
    }
    out.command = script.command;
    out.command_args = script.command_args;
    return out;
}

} // namespace

SessionScript script_from_inline_poly(const std::string& poly_text,
                                      const std::optional<std::string>& param) {
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    std::vector<std::string> vars;
    for (auto it = std::sregex_iterator(poly_text.begin(), poly_text.end(), ident);
         it != std::sregex_iterator(); ++it) {
        std::string name = it->str();
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
    }
    if (param && std::find(vars.begin(), vars.end(), *param) == vars.end())
        vars.push_back(*param);
    if (vars.empty()) throw DomainError("inline polynomial mentions no variables");
    SessionScript script;
    script.ring = PolyRing::make(vars, param);
    script.polys.emplace_back("f", parse_polynomial(script.ring, poly_text));
    return script;
}

RunResult run_command(const SessionScript& script_in, const std::string& command,
                      const std::vector<std::string>& args, const RunOptions& opts) {
    RunResult result;
    json& report = result.report;
    report["command"] = command;
    report["args"] = args;
    report["seed"] = opts.seed;
    report["notes"] = json::array();
    auto started = std::chrono::steady_clock::now();
    try {
        auto it = handlers().find(command);
        if (it == handlers().end()) throw DomainError("unknown command '" + command + "'");
        Context ctx{apply_overrides(script_in, opts), &opts, BuchbergerOptions{}, &report};
        ctx.gb.max_pairs = opts.max_pairs;
        result.exit_code = it->second(ctx, args);
    } catch (const ResourceLimitError& e) {
        report["error"] = e.what();
        result.exit_code = kExitResourceCap;
    } catch (const ConsistencyError& e) {
        report["error"] = e.what();
        result.exit_code = kExitInternalError;
    } catch (const std::exception& e) {
        report["error"] = e.what();
        result.exit_code = kExitInputError;
    }
    report["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
            .count();
    return result;
}

} // namespace conelab
