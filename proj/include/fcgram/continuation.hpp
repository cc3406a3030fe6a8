#pragma once

#include <functional>
#include <vector>

#include "fcgram/gram.hpp"
#include "fcgram/hermite.hpp"
#include "fcgram/params.hpp"
#include "fcgram/polynomial.hpp"
#include "fcgram/rational.hpp"

namespace fcgram {

struct LsExtension;  // lsq.hpp

/// One period of samples of the continued function f^c on [0, b).
struct ContinuedSamples {
    std::vector<double> values;  ///< f^c_j for j = 0..n+C
    Rational period = Rational(1);
    int n = 0;
    int C = 0;
};

/// Optional capabilities handed to continue_samples.
struct Providers {
    /// Analytic endpoint derivatives for Method::reference: fills
    /// derivs[m] = f^(m)(at) for m = 0..d-1.
    std::function<void(double at, int d, std::vector<double>& derivs)> derivatives;
    /// Solved least-squares basis for Method::leastsquares (one entry per ell).
    const std::vector<LsExtension>* ls_basis = nullptr;
};

/// Collapses the two end projections into the single degree-(2d-1)
/// continuation polynomial on [1, b] via endpoint-derivative matching.
Polynomial blend_extension(const std::vector<double>& f_samples, const FcParams& params,
                           const GramBasis& basis, const HermiteBasis& hb_fwd,
                           const HermiteBasis& hb_rev);

/// Assembles f^c: the input samples on [0,1] followed by the extension
/// evaluated at x_j = j*h for j = n+1..n+C (x = b wraps around, not stored).
ContinuedSamples continue_samples(const std::vector<double>& f_samples, const FcParams& params,
                                  const Providers& providers = {});

}  // namespace fcgram
