#ifndef CONELAB_POLY_GCD_HPP
#define CONELAB_POLY_GCD_HPP

#include <utility>
#include <vector>

#include "conelab/polynomial.hpp"

namespace conelab {

// Multivariate gcd over Q by recursive primitive pseudo-remainder sequences.
// The result has coprime integer coefficients and positive leading
// coefficient; gcd(f, 0) = normalized f, gcd of nonzero constants is 1.
Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g);

// Squarefree decomposition with respect to the given variables: pairs (m, g_m)
// with every g_m squarefree on `vars`, pairwise coprime, and
// prod g_m^m == f up to a content in the excluded variables.  Yun's algorithm
// on a main variable, recursing on the remaining ones.
std::vector<std::pair<int, Polynomial>> squarefree_decomposition(const Polynomial& f,
                                                                 std::span<const int> vars);

// gcd of f with all its partials on `vars`; constant exactly when f is
// squarefree there.
Polynomial squarefree_obstruction(const Polynomial& f, std::span<const int> vars);

} // namespace conelab

#endif
