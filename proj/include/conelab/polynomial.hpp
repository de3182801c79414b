#ifndef CONELAB_POLYNOMIAL_HPP
#define CONELAB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

#include "conelab/ring.hpp"

namespace conelab {

using Rational = mpq_class;

// Exponent vector, one entry per ring variable.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}

    int deg() const;
    int deg_on(std::span<const int> vars) const;
    bool is_one() const;
    bool divides(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    Monomial operator/(const Monomial& other) const; // assumes divisibility
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& other) const;

    bool operator==(const Monomial& other) const { return e == other.e; }
};

struct Term {
    Rational c;
    Monomial m;
};

// Exact multivariate polynomial over Q.  Terms are kept strictly descending in
// the ring's monomial order; zero is the empty term list.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring);
    static Polynomial constant(const RingPtr& ring, const Rational& c);
    static Polynomial variable(const RingPtr& ring, int var, int power = 1);
    // Normalizes (sorts, merges, strips zeros) an arbitrary term list.
    static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t size() const { return terms_.size(); }

    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().m; }
    const Rational& leading_coefficient() const { return terms_.front().c; }
    int total_degree() const; // -1 for zero
    int degree_in(int var) const;
    int degree_on(std::span<const int> vars) const;
    bool involves(int var) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator*(const Polynomial& g) const;
    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Rational& c, const Monomial& m) const;
    Polynomial pow(int k) const;

    // f - c * m * g, the Buchberger reduction step.
    Polynomial reduce_step(const Rational& c, const Monomial& m, const Polynomial& g) const;

    Polynomial without_leading_term() const;

    Polynomial derivative(int var) const;

    // Scale so that coefficients are coprime integers and the leading
    // coefficient is positive; zero stays zero.
    Polynomial primitive_normalized() const;
    Polynomial monic() const;

    std::string to_string() const;

  private:
    RingPtr ring_;
    std::vector<Term> terms_; // strictly descending in ring order
};

Polynomial operator*(const Rational& c, const Polynomial& f);

// Substitution: variable index (in f's ring) -> polynomial in `target`.
// Unassigned variables map to the like-named variable of `target`, which must
// exist.  A pure ring homomorphism.
Polynomial substitute(const Polynomial& f, const std::map<int, Polynomial>& assignments,
                      const RingPtr& target);

// Name-based change of ring (embedding or restriction).  Fails if f involves a
// variable absent from `target`.
Polynomial map_to_ring(const Polynomial& f, const RingPtr& target);

// Same variables, different order: re-sorts the term list.
Polynomial reorder(const Polynomial& f, const RingPtr& target);

// Partial derivative building block for the polarization operator lives in
// normal_cone.hpp; plain arithmetic helpers below.

// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

// Coefficients of f viewed as univariate in `var` (index = degree in var);
// entries live in the same ring with the var-exponent zeroed.
std::vector<Polynomial> coefficients_in(const Polynomial& f, int var);

} // namespace conelab

#endif
