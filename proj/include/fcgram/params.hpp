#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcgram/rational.hpp"

namespace fcgram {

/// How the continuation polynomial on [1, b] is produced.
enum class Method {
    hermite,       ///< two-point Hermite blend of the Gram projections (default)
    leastsquares,  ///< classical precomputed least-squares basis functions
    reference,     ///< Hermite blend driven by exact endpoint derivatives
};

Method parse_method(const std::string& name);
std::string method_name(Method m);

/// Grid geometry for the least-squares precomputation, all in h-units.
struct LsGrid {
    int d = 6;        ///< number of matching polynomials
    int s = 1;        ///< node stride
    int C = 25;       ///< continuation points
    int Z = 12;       ///< zero-window points
    int E = 25;       ///< blend-back points (E = C by default)
    int n_over = 20;  ///< oversampling factor for the collocation rows

    /// Period of the trigonometric basis in h-units.
    int period() const { return (d + Z - 1) * s + C + E + 1; }
};

/// Fully validated parameter set for one continuation run.
struct FcParams {
    int n = 64;  ///< interior grid spacing is h = 1/n
    int d = 5;   ///< Gram polynomial count (match order)
    int C = 0;   ///< number of appended continuation points
    int s = 1;   ///< node stride for the end-interval projections
    Rational b = Rational(1);  ///< period of the continued function
    Method method = Method::hermite;
    std::optional<LsGrid> ls;  ///< geometry for Method::leastsquares
    int M = 0;                 ///< trig modes k = -M..M in the LS basis
    double svd_cutoff = 1e-12;
    std::vector<std::string> warnings;

    double h() const { return 1.0 / n; }
    int num_samples() const { return n + C + 1; }  ///< N, one period of samples
};

/// Builds parameters with C derived from the period b: C = n*b - n - 1.
/// Throws DomainError unless n*b is an even integer (so that N is even).
FcParams params_from_b(int n, int d, const Rational& b, Method method = Method::hermite);

/// Builds parameters from an explicit C; b becomes 1 + (C+1)/n.
FcParams params_from_C(int n, int d, int C, Method method = Method::hermite);

/// Checks the admissibility rules shared by both constructors and fills
/// warnings (e.g. overlapping end stencils). Throws DomainError on violation.
void validate_params(FcParams& p);

}  // namespace fcgram
