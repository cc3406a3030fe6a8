#include "fcgram/continuation.hpp"

#include <cstddef>
#include <string>

#include "fcgram/errors.hpp"
#include "fcgram/lsq.hpp"

namespace fcgram {

namespace {

void end_stencils(const std::vector<double>& f_samples, int d, int s, int n,
                  std::vector<double>& left_nodes, std::vector<double>& right_nodes) {
    left_nodes.resize(static_cast<std::size_t>(d));
    right_nodes.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        left_nodes[static_cast<std::size_t>(j)] = f_samples[static_cast<std::size_t>(s * j)];
        right_nodes[static_cast<std::size_t>(j)] =
            f_samples[static_cast<std::size_t>(n - s * j)];
    }
}

}  // namespace

Polynomial blend_extension(const std::vector<double>& f_samples, const FcParams& params,
                           const GramBasis& basis, const HermiteBasis& hb_fwd,
                           const HermiteBasis& hb_rev) {
    const int d = params.d, n = params.n;
    if (static_cast<int>(f_samples.size()) != n + 1)
        throw DomainError("blend_extension: need n+1 samples, got " +
                          std::to_string(f_samples.size()));
    if (basis.d != d) throw DomainError("blend_extension: basis d mismatch");
    if (hb_fwd.r != d - 1 || hb_rev.r != d - 1)
        throw DomainError("blend_extension: Hermite order must be d-1");
    const double b = params.b.value();
    if (hb_fwd.u1 != 1.0 || hb_fwd.u2 != b || hb_rev.u1 != b || hb_rev.u2 != 1.0)
        throw DomainError("blend_extension: Hermite bases must span (1,b) and (b,1)");

    std::vector<double> left_nodes, right_nodes;
    end_stencils(f_samples, d, params.s, n, left_nodes, right_nodes);
    const std::vector<double> cL = project_left(left_nodes, basis);
    const std::vector<double> cR = project_right(right_nodes, basis);

    const double h = params.h();
    std::vector<double> DR(static_cast<std::size_t>(d), 0.0),
        DL(static_cast<std::size_t>(d), 0.0);
    for (int ell = 0; ell < d; ++ell) {
        const Polynomial pr = right_gram_poly(basis, ell, params.s, h);
        const Polynomial pl = left_gram_poly(basis, ell, params.s, h);
        for (int m = 0; m <= ell; ++m) {
            DR[static_cast<std::size_t>(m)] +=
                cR[static_cast<std::size_t>(ell)] * pr.derivative(m)(1.0);
            DL[static_cast<std::size_t>(m)] +=
                cL[static_cast<std::size_t>(ell)] * pl.derivative(m)(0.0);
        }
    }

    Polynomial p = Polynomial::zero(1.0, b - 1.0);
    for (int m = 0; m < d; ++m) {
        p.add_scaled(hb_fwd.basis[static_cast<std::size_t>(m)], DR[static_cast<std::size_t>(m)]);
        p.add_scaled(hb_rev.basis[static_cast<std::size_t>(m)].with_frame(1.0, b - 1.0),
                     DL[static_cast<std::size_t>(m)]);
    }
    return p;
}

ContinuedSamples continue_samples(const std::vector<double>& f_samples, const FcParams& params,
                                  const Providers& providers) {
    const int n = params.n, C = params.C, d = params.d;
    if (static_cast<int>(f_samples.size()) != n + 1)
        throw DomainError("continue_samples: need n+1 samples, got " +
                          std::to_string(f_samples.size()));

    const GramBasis basis = build_gram_basis(d);

    if (params.method == Method::leastsquares) {
        if (!params.ls) throw DomainError("continue_samples: missing least-squares grid");
        std::vector<LsExtension> owned;
        const std::vector<LsExtension>* ls = providers.ls_basis;
        if (!ls) {
            owned = ls_basis_for(*params.ls, params.M, params.svd_cutoff);
            ls = &owned;
        }
        return classic_continue(f_samples, params, basis, *ls);
    }

    const double b = params.b.value();
    Polynomial p;
    if (params.method == Method::reference) {
        if (!providers.derivatives)
            throw MethodError(
                "continue_samples: the reference method needs analytic derivative data, "
                "not sample-only input");
        std::vector<double> f0, f1;
        providers.derivatives(0.0, d, f0);
        providers.derivatives(1.0, d, f1);
        p = reference_extension(f0, f1, d, b);
    } else {
        const HermiteBasis hb_fwd = hermite_basis(d - 1, 1.0, b);
        const HermiteBasis hb_rev = hermite_basis(d - 1, b, 1.0);
        p = blend_extension(f_samples, params, basis, hb_fwd, hb_rev);
    }

    ContinuedSamples out;
    out.n = n;
    out.C = C;
    out.period = params.b;
    out.values = f_samples;
    out.values.resize(static_cast<std::size_t>(n + C + 1));
    for (int j = n + 1; j <= n + C; ++j)
        out.values[static_cast<std::size_t>(j)] = p(static_cast<double>(j) / n);
    return out;
}

}  // namespace fcgram
