#include "conelab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "conelab/errors.hpp"

namespace conelab {

int Monomial::deg() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int Monomial::deg_on(std::span<const int> vars) const {
    int d = 0;
    for (int v : vars) d += e[v];
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > other.e[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += other.e[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] -= other.e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& other) const {
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0 && other.e[i] > 0) return false;
    return true;
}

Polynomial Polynomial::zero(const RingPtr& ring) { return Polynomial(ring); }

Polynomial Polynomial::constant(const RingPtr& ring, const Rational& c) {
    Polynomial f(ring);
    if (c != 0) f.terms_.push_back({c, Monomial(ring->nvars())});
    return f;
}

Polynomial Polynomial::variable(const RingPtr& ring, int var, int power) {
    if (var < 0 || var >= ring->nvars()) throw DomainError("variable index out of range");
    Polynomial f(ring);
    Monomial m(ring->nvars());
    m.e[var] = power;
    if (power == 0) return constant(ring, 1);
    f.terms_.push_back({Rational(1), std::move(m)});
    return f;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
    const MonomialOrder& ord = ring->order();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
    Polynomial f(ring);
    for (auto& t : terms) {
        if (t.c == 0) continue;
        if (!f.terms_.empty() && f.terms_.back().m == t.m) {
            f.terms_.back().c += t.c;
            if (f.terms_.back().c == 0) f.terms_.pop_back();
        } else {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.m.deg());
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const Term& t : terms_) d = std::max(d, t.m.e[var]);
    return d;
}

int Polynomial::degree_on(std::span<const int> vars) const {
    int d = terms_.empty() ? -1 : 0;
    for (const Term& t : terms_) d = std::max(d, t.m.deg_on(vars));
    return d;
}

bool Polynomial::involves(int var) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.m.e[var] > 0; });
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_ring(ring_, g.ring_, "add");
    const MonomialOrder& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        int c = ord.compare(terms_[i].m, g.terms_[j].m);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(g.terms_[j++]);
        } else {
            Rational s = terms_[i].c + g.terms_[j].c;
            if (s != 0) r.terms_.push_back({std::move(s), terms_[i].m});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_ring(ring_, g.ring_, "mul");
    if (is_zero() || g.is_zero()) return zero(ring_);
    // Accumulate into an order-keyed map; fine at the scale this kernel serves.
    const MonomialOrder& ord = ring_->order();
    auto cmp = [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; };
    std::map<Monomial, Rational, decltype(cmp)> acc(cmp);
    for (const Term& a : terms_) {
        for (const Term& b : g.terms_) {
            Monomial m = a.m * b.m;
            auto [it, fresh] = acc.try_emplace(std::move(m), 0);
            it->second += a.c * b.c;
        }
    }
    Polynomial r(ring_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({std::move(c), m});
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (terms_.size() != g.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].c != g.terms_[i].c || !(terms_[i].m == g.terms_[i].m)) return false;
    return true;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return zero(ring_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.c *= c;
    return r;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
    if (c == 0) return zero(ring_);
    Polynomial r = *this;
    for (Term& t : r.terms_) {
        t.c *= c;
        t.m = t.m * m;
    }
    return r;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw DomainError("negative exponent");
    Polynomial r = constant(ring_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::reduce_step(const Rational& c, const Monomial& m,
                                   const Polynomial& g) const {
    return *this + g.times_term(-c, m);
}

Polynomial Polynomial::without_leading_term() const {
    Polynomial r(ring_);
    r.terms_.assign(terms_.begin() + 1, terms_.end());
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    // Every surviving monomial is divided by the same variable, so the term
    // order is preserved as-is.
    Polynomial r(ring_);
    for (const Term& t : terms_) {
        if (t.m.e[var] == 0) continue;
        Term d{t.c * t.m.e[var], t.m};
        d.m.e[var] -= 1;
        r.terms_.push_back(std::move(d));
    }
    return r;
}

Polynomial Polynomial::primitive_normalized() const {
    if (is_zero()) return *this;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const Term& t : terms_) {
        mpz_class den = t.c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (const Term& t : terms_) {
        mpz_class num = t.c.get_num() * (den_lcm / t.c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (leading_coefficient() < 0) scale = -scale;
    return scaled(scale);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / leading_coefficient());
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.c;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed = false;
        if (c != 1 || t.m.is_one()) {
            os << c.get_str();
            printed = true;
        }
        for (size_t i = 0; i < t.m.e.size(); ++i) {
            if (t.m.e[i] == 0) continue;
            if (printed) os << "*";
            os << ring_->name(static_cast<int>(i));
            if (t.m.e[i] > 1) os << "^" << t.m.e[i];
            printed = true;
        }
    }
    return os.str();
}

Polynomial operator*(const Rational& c, const Polynomial& f) { return f.scaled(c); }

Polynomial substitute(const Polynomial& f, const std::map<int, Polynomial>& assignments,
                      const RingPtr& target) {
    const RingPtr& src = f.ring();
    for (const auto& [v, img] : assignments) {
        if (v < 0 || v >= src->nvars()) throw DomainError("substitute: variable out of range");
        require_same_ring(img.ring(), target, "substitute");
    }
    // Images per source variable, with lazily grown power tables.
    std::vector<Polynomial> image(src->nvars());
    std::vector<std::vector<Polynomial>> powers(src->nvars());
    for (int v = 0; v < src->nvars(); ++v) {
        auto it = assignments.find(v);
        if (it != assignments.end()) {
            image[v] = it->second;
        } else {
            int tv = target->index_of(src->name(v));
            if (tv < 0)
                throw RingMismatchError("substitute: target ring lacks variable '" +
                                        src->name(v) + "'");
            image[v] = Polynomial::variable(target, tv);
        }
        powers[v].push_back(Polynomial::constant(target, 1));
    }
    auto power = [&](int v, int k) -> const Polynomial& {
        while (static_cast<int>(powers[v].size()) <= k)
            powers[v].push_back(powers[v].back() * image[v]);
        return powers[v][k];
    };
    Polynomial acc = Polynomial::zero(target);
    for (const Term& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, t.c);
        for (size_t v = 0; v < t.m.e.size(); ++v)
            if (t.m.e[v] > 0) prod = prod * power(static_cast<int>(v), t.m.e[v]);
        acc = acc + prod;
    }
    return acc;
}

Polynomial map_to_ring(const Polynomial& f, const RingPtr& target) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    std::vector<int> remap(f.ring()->nvars(), -1);
    for (int v = 0; v < f.ring()->nvars(); ++v) remap[v] = target->index_of(f.ring()->name(v));
    for (const Term& t : f.terms()) {
        Term nt{t.c, Monomial(target->nvars())};
        for (size_t v = 0; v < t.m.e.size(); ++v) {
            if (t.m.e[v] == 0) continue;
            if (remap[v] < 0)
                throw RingMismatchError("map_to_ring: polynomial involves '" +
                                        f.ring()->name(static_cast<int>(v)) +
                                        "' absent from the target ring");
            nt.m.e[remap[v]] = t.m.e[v];
        }
        terms.push_back(std::move(nt));
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Polynomial reorder(const Polynomial& f, const RingPtr& target) {
    std::vector<Term> terms(f.terms().begin(), f.terms().end());
    return Polynomial::from_terms(target, std::move(terms));
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring(), "divide_exact");
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    Polynomial q = Polynomial::zero(f.ring());
    Polynomial r = f;
    const Monomial& lmg = g.leading_monomial();
    const Rational& lcg = g.leading_coefficient();
    std::vector<Term> qterms;
    while (!r.is_zero()) {
        const Term& lt = r.leading_term();
        if (!lmg.divides(lt.m)) return std::nullopt;
        Rational c = lt.c / lcg;
        Monomial m = lt.m / lmg;
        qterms.push_back({c, m});
        r = r.reduce_step(c, m, g);
    }
    return Polynomial::from_terms(f.ring(), std::move(qterms));
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, int var) {
    int d = f.degree_in(var);
    std::vector<std::vector<Term>> buckets(static_cast<size_t>(d) + 1);
    for (const Term& t : f.terms()) {
        Term nt = t;
        int k = nt.m.e[var];
        nt.m.e[var] = 0;
        buckets[k].push_back(std::move(nt));
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Polynomial::from_terms(f.ring(), std::move(b)));
    return out;
}

} // namespace conelab
