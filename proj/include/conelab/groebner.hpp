#ifndef CONELAB_GROEBNER_HPP
#define CONELAB_GROEBNER_HPP

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "conelab/polynomial.hpp"

namespace conelab {

struct BuchbergerOptions {
    // Pair-elimination criteria; switching them off must not change the
    // reduced basis, only the work done.
    bool coprime_criterion = true;
    bool chain_criterion = true;
    // Caps; exceeding one raises ResourceLimitError, never a wrong answer.
    size_t max_pairs = 500000;
    size_t max_basis = 50000;
};

struct GroebnerStats {
    size_t pairs_enqueued = 0;
    size_t pairs_reduced = 0;
    size_t basis_size = 0;
};

// Reduced Groebner basis under the ring's own monomial order: monic elements,
// no term divisible by another element's leading monomial, sorted ascending by
// leading monomial.  Canonical for the ideal and order.
class GroebnerBasis {
  public:
    GroebnerBasis() = default;
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
        : ring_(std::move(ring)), elements_(std::move(elements)) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    size_t size() const { return elements_.size(); }
    bool operator==(const GroebnerBasis& o) const { return elements_ == o.elements_; }

  private:
    RingPtr ring_;
    std::vector<Polynomial> elements_;
};

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         const BuchbergerOptions& opts = {}, GroebnerStats* stats = nullptr);

// Complete remainder of f on division by G; zero iff f lies in the ideal of G.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

// Generator list plus a lazily computed reduced basis under the ring's order.
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const;

    const GroebnerBasis& groebner(const BuchbergerOptions& opts = {}) const;

    Ideal(const Ideal& o);
    Ideal& operator=(const Ideal& o);
    Ideal(Ideal&&) = default;
    Ideal& operator=(Ideal&&) = default;

  private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<const GroebnerBasis> gb_;
    mutable std::unique_ptr<std::mutex> lock_ = std::make_unique<std::mutex>();
};

// true iff J is contained in I (every generator of J reduces to zero).
bool ideal_contains(const Ideal& I, const Ideal& J, const BuchbergerOptions& opts = {});
bool ideal_equal(const Ideal& I, const Ideal& J, const BuchbergerOptions& opts = {});

// Name-based transport of all generators into another ring.
Ideal map_ideal(const Ideal& I, const RingPtr& target);

} // namespace conelab

#endif
