#pragma once

#include <complex>
#include <vector>

#include "fcgram/continuation.hpp"
#include "fcgram/gram.hpp"
#include "fcgram/params.hpp"

namespace fcgram {

/// Trigonometric blend-to-zero extension of one end polynomial, solved once
/// per (grid, M, cutoff) and reused for every h: the system never sees h.
struct LsExtension {
    int ell = 0;
    int M = 0;
    int period = 0;  ///< P in h-units
    std::vector<std::complex<double>> coeffs;  ///< a_k, k = -M..M at index k+M
    double match_residual = 0.0;  ///< l2 residual on the refined match grid
    double zero_residual = 0.0;   ///< max |phi| on the refined zero grid

    /// phi_ell(y) = Re sum_k a_k exp(2 pi i k y / P), y in h-units.
    double eval(double y) const;
};

/// The over-determined collocation system shared by all d right-hand sides.
struct LsSystem {
    LsGrid grid;
    int M = 0;
    int match_rows = 0;  ///< leading rows collocate the Gram polynomial
    int zero_rows = 0;   ///< trailing rows pin the blend-to-zero window
    std::vector<std::vector<std::complex<double>>> rows;  ///< (2M+1) entries each
    std::vector<std::vector<double>> alpha;  ///< d match-grid value vectors
};

/// Rows: exp(2 pi i k z / P) at refined match nodes z = j*s/n_over
/// (j = 0..(d-1)*n_over) then refined zero nodes z = (d-1)*s + C + j*s/n_over
/// (j = 1..Z*n_over). alpha[ell][j] = scaled Gram polynomial at j/n_over.
LsSystem build_ls_system(const LsGrid& grid, int M);

/// Minimum-norm least squares through an SVD, discarding singular values
/// below svd_cutoff * sigma_max.
LsExtension solve_ls_extension(const LsSystem& system, int ell, double svd_cutoff);

/// All d extensions for a grid, memoized in-process and, when the
/// FC_CACHE_DIR environment variable is set, in a CSV file of
/// (ell, k, re, im) rows with 17-significant-digit round-trip.
std::vector<LsExtension> ls_basis_for(const LsGrid& grid, int M, double svd_cutoff);

/// Classical continuation: project both ends onto the Gram basis and sample
/// the shifted phi_ell at the extension nodes. If max_imag is non-null it
/// receives the largest imaginary magnitude discarded when taking real parts.
ContinuedSamples classic_continue(const std::vector<double>& f_samples, const FcParams& params,
                                  const GramBasis& basis, const std::vector<LsExtension>& ls,
                                  double* max_imag = nullptr);

}  // namespace fcgram
