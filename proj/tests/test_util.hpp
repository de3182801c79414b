#ifndef CONELAB_TEST_UTIL_HPP
#define CONELAB_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "conelab/parser.hpp"
#include "conelab/polynomial.hpp"

namespace conelab::testutil {

inline RingPtr ring_xy() { return PolyRing::make({"x", "y"}); }
inline RingPtr ring_xyz() { return PolyRing::make({"x", "y", "z"}); }
inline RingPtr ring_xyzt() { return PolyRing::make({"x", "y", "z", "t"}, "t"); }

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

inline std::vector<Polynomial> PL(const RingPtr& r, const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss) out.push_back(parse_polynomial(r, s));
    return out;
}

// small random polynomial generator for property tests
class PolyGen {
  public:
    PolyGen(RingPtr ring, uint64_t seed, int max_terms = 4, int max_exp = 3, int max_coeff = 5)
        : ring_(std::move(ring)), rng_(seed), terms_(1, max_terms), exp_(0, max_exp),
          coeff_(-max_coeff, max_coeff) {}

    Polynomial next() {
        std::vector<Term> terms;
        int k = terms_(rng_);
        for (int i = 0; i < k; ++i) {
            Term t{Rational(coeff_(rng_)), Monomial(ring_->nvars())};
            for (int v = 0; v < ring_->nvars(); ++v) t.m.e[v] = exp_(rng_);
            terms.push_back(std::move(t));
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

    Polynomial next_nonzero() {
        for (;;) {
            Polynomial f = next();
            if (!f.is_zero()) return f;
        }
    }

  private:
    RingPtr ring_;
    std::mt19937_64 rng_;
    std::uniform_int_distribution<int> terms_, exp_, coeff_;
};

} // namespace conelab::testutil

#endif
