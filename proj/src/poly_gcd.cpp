#include "conelab/poly_gcd.hpp"

#include <algorithm>
#include <map>

#include "conelab/errors.hpp"

namespace conelab {

namespace {

int pick_main_var(const Polynomial& f) {
    int best = -1, best_deg = 0;
    int n = f.ring()->nvars();
    for (int v = 0; v < n; ++v) {
        int d = f.degree_in(v);
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    }
    return best;
}

Polynomial rebuild_from_coeffs(const std::vector<Polynomial>& coeffs, int var,
                               const RingPtr& ring) {
    std::vector<Term> terms;
    for (size_t d = 0; d < coeffs.size(); ++d) {
        for (const Term& t : coeffs[d].terms()) {
            Term nt = t;
            nt.m.e[var] = static_cast<int>(d);
            terms.push_back(std::move(nt));
        }
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

// gcd of the coefficients of f viewed univariately in `var`
Polynomial content_in(const Polynomial& f, int var) {
    Polynomial c = Polynomial::zero(f.ring());
    for (const Polynomial& coeff : coefficients_in(f, var)) {
        if (coeff.is_zero()) continue;
        c = multivariate_gcd(c, coeff);
        if (c.is_constant()) break;
    }
    return c;
}

Polynomial divide_exact_or_throw(const Polynomial& f, const Polynomial& g, const char* where) {
    auto q = divide_exact(f, g);
    if (!q) throw ConsistencyError(std::string(where) + ": expected exact division failed");
    return *q;
}

// pseudo-remainder of a by b in `var`: lc(b)^k * a reduced until deg < deg b
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, int var) {
    auto bc = coefficients_in(b, var);
    int db = static_cast<int>(bc.size()) - 1;
    const Polynomial& lb = bc.back();
    while (!a.is_zero()) {
        auto ac = coefficients_in(a, var);
        int da = static_cast<int>(ac.size()) - 1;
        if (da < db) break;
        const Polynomial& la = ac.back();
        // a = lb * a - la * x^(da-db) * b
        Monomial shift(a.ring()->nvars());
        shift.e[var] = da - db;
        a = lb * a - la.times_term(1, shift) * b;
    }
    return a;
}

// gcd of polynomials that are primitive with respect to `var`
Polynomial primitive_prs_gcd(Polynomial a, Polynomial b, int var) {
    if (a.degree_in(var) < b.degree_in(var)) std::swap(a, b);
    while (!b.is_zero()) {
        Polynomial r = pseudo_remainder(a, b, var);
        a = std::move(b);
        if (r.is_zero()) {
            b = Polynomial::zero(a.ring());
        } else {
            Polynomial cont = content_in(r, var);
            b = divide_exact_or_throw(r, cont, "primitive_prs_gcd");
        }
    }
    return a;
}

} // namespace

Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring(), "multivariate_gcd");
    if (f.is_zero()) return g.primitive_normalized();
    if (g.is_zero()) return f.primitive_normalized();
    if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.ring(), 1);

    // main variable: highest positive degree in f, ties to the earlier ring index
    int v = pick_main_var(f);
    if (g.degree_in(v) == 0) {
        // g is a coefficient as far as v is concerned
        return multivariate_gcd(content_in(f, v), g);
    }
    Polynomial cf = content_in(f, v);
    Polynomial cg = content_in(g, v);
    Polynomial c = multivariate_gcd(cf, cg);
    Polynomial fp = divide_exact_or_throw(f, cf, "multivariate_gcd");
    Polynomial gp = divide_exact_or_throw(g, cg, "multivariate_gcd");
    Polynomial h = primitive_prs_gcd(std::move(fp), std::move(gp), v);
    Polynomial hc = content_in(h, v);
    h = divide_exact_or_throw(h, hc, "multivariate_gcd");
    return (c * h).primitive_normalized();
}

namespace {

// Yun's algorithm in `var` for f primitive with respect to var.
void yun(const Polynomial& f, int var, std::map<int, Polynomial>& out) {
    Polynomial fp = f.derivative(var);
    Polynomial g = multivariate_gcd(f, fp);
    Polynomial c = divide_exact_or_throw(f, g, "yun");
    Polynomial d = divide_exact_or_throw(fp, g, "yun") - c.derivative(var);
    int m = 1;
    while (c.degree_in(var) > 0) {
        Polynomial a = multivariate_gcd(c, d);
        if (!a.is_constant()) {
            auto [it, fresh] = out.try_emplace(m, a);
            if (!fresh) it->second = it->second * a;
        }
        c = divide_exact_or_throw(c, a, "yun");
        d = divide_exact_or_throw(d, a, "yun") - c.derivative(var);
        ++m;
    }
}

void decompose(const Polynomial& f, std::vector<int> vars, std::map<int, Polynomial>& out) {
    // choose the main variable among `vars` with highest degree in f
    int v = -1, best = 0;
    for (int cand : vars) {
        int d = f.degree_in(cand);
        if (d > best) {
            best = d;
            v = cand;
        }
    }
    if (v < 0) return; // constant on vars: pure content, a unit here
    Polynomial cont = content_in(f, v);
    Polynomial pp = divide_exact_or_throw(f, cont, "squarefree_decomposition");
    yun(pp, v, out);
    vars.erase(std::find(vars.begin(), vars.end(), v));
    decompose(cont, std::move(vars), out);
}

} // namespace

std::vector<std::pair<int, Polynomial>> squarefree_decomposition(const Polynomial& f,
                                                                 std::span<const int> vars) {
    if (f.is_zero()) throw DomainError("squarefree_decomposition: zero input");
    std::map<int, Polynomial> parts;
    decompose(f, std::vector<int>(vars.begin(), vars.end()), parts);
    std::vector<std::pair<int, Polynomial>> out;
    out.reserve(parts.size());
    for (auto& [m, g] : parts) out.emplace_back(m, g.primitive_normalized());
    return out;
}

Polynomial squarefree_obstruction(const Polynomial& f, std::span<const int> vars) {
    Polynomial h = f;
    for (int v : vars) {
        if (h.is_constant()) break;
        h = multivariate_gcd(h, f.derivative(v));
    }
    return h;
}

} // namespace conelab
