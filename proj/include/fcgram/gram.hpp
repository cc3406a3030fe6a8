#pragma once

#include <vector>

#include "fcgram/polynomial.hpp"

namespace fcgram {

// Discrete-orthonormal Gram polynomial bases over the equispaced end-of-interval
// nodes. Construction happens once in the scaled variable u (integer nodes
// 0..d-1), so the basis is independent of the stride s and spacing h; the
// left/right polynomials in x are pure changes of variable.
struct GramBasis {
    int d = 0;
    // ptilde_ell^L(u), identity frame, degree ell.
    std::vector<Polynomial> scaled_left;
    // ptilde_ell^R(u) = ptilde_ell^L(u + d - 1), identity frame.
    std::vector<Polynomial> scaled_right;
    // node_values[ell][j] = ptilde_ell^L(j), cached for projections.
    std::vector<std::vector<double>> node_values;
};

// Classical Gram-Schmidt on monomials u^ell over nodes 0..d-1 with one
// re-orthogonalization sweep, then normalization. 2 <= d <= 10.
GramBasis build_gram_basis(int d);

// p_ell^L(x) = ptilde_ell^L(x/(s h)); frame (center 0, scale s*h).
Polynomial left_gram_poly(const GramBasis& basis, int ell, int s, double h);

// p_ell^R(x) = p_ell^L(x - 1 + (d-1) s h) = ptilde_ell^R((x-1)/(s h));
// frame (center 1, scale s*h).
Polynomial right_gram_poly(const GramBasis& basis, int ell, int s, double h);

// c_ell = sum_j f_nodes[j] * ptilde_ell^L(j); f_nodes[j] = f(x_{s j}).
std::vector<double> project_left(const std::vector<double>& f_nodes, const GramBasis& basis);

// c_ell = sum_j f_nodes[j] * ptilde_ell^L(d-1-j); f_nodes[j] = f(x_{n - s j}).
std::vector<double> project_right(const std::vector<double>& f_nodes, const GramBasis& basis);

}  // namespace fcgram
