#include "fcgram/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "fcgram/continuation.hpp"
#include "fcgram/errors.hpp"
#include "fcgram/gram.hpp"
#include "fcgram/hermite.hpp"

namespace fcgram {

namespace {

double median(std::vector<double> v) {
    if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Providers providers_for(const TestFunction& f) {
    Providers prov;
    prov.derivatives = [&f](double at, int d, std::vector<double>& derivs) {
        derivs.resize(static_cast<std::size_t>(d));
        for (int m = 0; m < d; ++m)
            derivs[static_cast<std::size_t>(m)] = f.derivative(m, at);
    };
    return prov;
}

}  // namespace

double relative_error(const TestFunction& f, const TrigInterpolant& t, int N_eval,
                      Execution exec) {
    if (N_eval < 1) throw DomainError("relative_error: N_eval must be positive");
    const std::vector<double> tau = eval_fine_grid(t, N_eval, exec);
    double num = 0.0, den = 0.0;
    const std::int64_t count = N_eval + 1;
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static) reduction(max : num) reduction(max : den)
        for (std::int64_t j = 0; j <= static_cast<std::int64_t>(N_eval); ++j) {
            const double fz = f.eval(static_cast<double>(j) / N_eval);
            num = std::max(num, std::abs(tau[static_cast<std::size_t>(j)] - fz));
            den = std::max(den, std::abs(fz));
        }
    } else {
        for (std::int64_t j = 0; j < count; ++j) {
            const double fz = f.eval(static_cast<double>(j) / N_eval);
            num = std::max(num, std::abs(tau[static_cast<std::size_t>(j)] - fz));
            den = std::max(den, std::abs(fz));
        }
    }
    if (den == 0.0) throw DivisionError("relative_error: max |f| is zero on the grid");
    return num / den;
}

double noc(double e_prev, double e_cur) {
    if (!(e_prev > 0.0) || !(e_cur > 0.0))
        throw DomainError("noc: both errors must be positive");
    return std::log2(e_prev / e_cur);
}

FcParams study_params(const StudyConfig& cfg, int n) {
    int C = 0;
    Rational b = cfg.b;
    if (cfg.c_rule == "from-b") {
        std::int64_t nb = 0;
        if (!cfg.b.times_is_integral(n, nb) || nb % 2 != 0)
            throw DomainError("inadmissible (n, b): n is outside N_b — n*b must be an even "
                              "integer (n=" + std::to_string(n) + ", b=" + cfg.b.str() + ")");
        C = static_cast<int>(nb - n - 1);
    } else if (cfg.c_rule == "quarter") {
        if (n % 4 != 0) throw DomainError("C rule 'quarter' needs n divisible by 4");
        C = n / 4 - 1;
        b = Rational(1) + Rational(C + 1, n);
    } else if (cfg.c_rule.rfind("fixed:", 0) == 0) {
        try {
            C = std::stoi(cfg.c_rule.substr(6));
        } catch (const std::exception&) {
            throw DomainError("bad C rule '" + cfg.c_rule + "'");
        }
        b = Rational(1) + Rational(C + 1, n);
    } else {
        throw DomainError("unknown C rule '" + cfg.c_rule +
                          "' (expected from-b, quarter, or fixed:<C>)");
    }

    FcParams p;
    p.n = n;
    p.d = cfg.d;
    p.C = C;
    p.s = cfg.s;
    p.b = b;
    p.method = cfg.method;
    if (cfg.method == Method::leastsquares) {
        LsGrid g;
        g.d = cfg.d;
        g.s = cfg.s;
        g.C = C;
        g.Z = cfg.Z;
        g.E = C;
        g.n_over = cfg.n_over;
        p.ls = g;
        p.M = cfg.M;
        p.svd_cutoff = cfg.svd_cutoff;
    }
    validate_params(p);
    return p;
}

std::vector<ConvergenceRow> run_study(const StudyConfig& cfg) {
    if (cfg.n_list.empty()) throw DomainError("run_study: n_list is empty");
    const TestFunction f = make_function(cfg.function_id, cfg.k, cfg.eps);
    const Providers prov = providers_for(f);

    std::vector<int> ns = cfg.n_list;
    std::sort(ns.begin(), ns.end());

    std::vector<ConvergenceRow> rows;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        const int n = ns[i];
        const FcParams params = study_params(cfg, n);
        std::vector<double> samples(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j)
            samples[static_cast<std::size_t>(j)] = f.eval(static_cast<double>(j) / n);
        const ContinuedSamples cont = continue_samples(samples, params, prov);
        const TrigInterpolant t = fit(cont);
        ConvergenceRow row;
        row.n = n;
        row.e_n = relative_error(f, t, cfg.N_eval, cfg.exec);
        if (i > 0 && ns[i - 1] * 2 == n && rows.back().e_n > 0.0 && row.e_n > 0.0)
            row.noc = noc(rows.back().e_n, row.e_n);
        rows.push_back(row);
    }
    return rows;
}

ProjectionRates run_projection_rate_study(const TestFunction& f, int d,
                                          const std::vector<double>& h_list) {
    if (h_list.size() < 2)
        throw DomainError("run_projection_rate_study: need at least two h levels");
    for (std::size_t i = 1; i < h_list.size(); ++i)
        if (std::abs(h_list[i - 1] / h_list[i] - 2.0) > 1e-12)
            throw DomainError("run_projection_rate_study: h_list must halve");

    const GramBasis basis = build_gram_basis(d);
    ProjectionRates out;
    out.d = d;
    out.h_list = h_list;

    constexpr int kGrid = 800;
    for (const double h : h_list) {
        std::vector<double> nodes(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) nodes[static_cast<std::size_t>(j)] = f.eval(j * h);
        const std::vector<double> c = project_left(nodes, basis);
        std::vector<double> errs(static_cast<std::size_t>(d), 0.0);
        for (int m = 0; m < d; ++m) {
            Polynomial proj_m = Polynomial::zero(0.0, h);
            for (int ell = 0; ell < d; ++ell)
                proj_m.add_scaled(left_gram_poly(basis, ell, 1, h).derivative(m),
                                  c[static_cast<std::size_t>(ell)]);
            double worst = 0.0;
            for (int g = 0; g <= kGrid; ++g) {
                const double x = (d - 1) * h * static_cast<double>(g) / kGrid;
                worst = std::max(worst, std::abs(proj_m(x) - f.derivative(m, x)));
            }
            errs[static_cast<std::size_t>(m)] = worst;
        }
        out.errors.push_back(std::move(errs));
    }

    const double eps_mach = std::numeric_limits<double>::epsilon();
    out.orders.assign(static_cast<std::size_t>(d),
                      std::numeric_limits<double>::quiet_NaN());
    out.saturated.assign(static_cast<std::size_t>(d), false);
    for (int m = 0; m < d; ++m) {
        std::vector<double> ratios;
        for (std::size_t i = 0; i + 1 < h_list.size(); ++i) {
            // Differentiating m times amplifies round-off like h^-(m+1); pairs
            // at that floor say nothing about the analytic rate.
            const double floor_i = 10.0 * eps_mach * std::pow(h_list[i], -(m + 1));
            const double floor_j = 10.0 * eps_mach * std::pow(h_list[i + 1], -(m + 1));
            const double ei = out.errors[i][static_cast<std::size_t>(m)];
            const double ej = out.errors[i + 1][static_cast<std::size_t>(m)];
            if (ei >= floor_i && ej >= floor_j && ei > 0.0 && ej > 0.0)
                ratios.push_back(std::log2(ei / ej));
        }
        if (ratios.empty())
            out.saturated[static_cast<std::size_t>(m)] = true;
        else
            out.orders[static_cast<std::size_t>(m)] = median(std::move(ratios));
    }
    return out;
}

ExtensionGapStudy run_extension_gap_study(const TestFunction& f, int d, int C,
                                          const std::vector<int>& n_list) {
    if (n_list.size() < 2)
        throw DomainError("run_extension_gap_study: need at least two n levels");
    const GramBasis basis = build_gram_basis(d);

    ExtensionGapStudy out;
    out.d = d;
    out.C = C;
    out.n_list = n_list;

    constexpr int kGrid = 2000;
    for (const int n : n_list) {
        FcParams params = params_from_C(n, d, C);
        const double b = params.b.value();
        std::vector<double> samples(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j)
            samples[static_cast<std::size_t>(j)] = f.eval(static_cast<double>(j) / n);
        const HermiteBasis hb_fwd = hermite_basis(d - 1, 1.0, b);
        const HermiteBasis hb_rev = hermite_basis(d - 1, b, 1.0);
        const Polynomial p = blend_extension(samples, params, basis, hb_fwd, hb_rev);

        std::vector<double> f0(static_cast<std::size_t>(d)), f1(static_cast<std::size_t>(d));
        for (int m = 0; m < d; ++m) {
            f0[static_cast<std::size_t>(m)] = f.derivative(m, 0.0);
            f1[static_cast<std::size_t>(m)] = f.derivative(m, 1.0);
        }
        const Polynomial p_ref = reference_extension(f0, f1, d, b);

        std::vector<double> gaps(static_cast<std::size_t>(d), 0.0);
        for (int m = 0; m < d; ++m) {
            const Polynomial dm = p.derivative(m);
            const Polynomial dm_ref = p_ref.derivative(m);
            double worst = 0.0;
            for (int g = 0; g <= kGrid; ++g) {
                const double x = 1.0 + (b - 1.0) * static_cast<double>(g) / kGrid;
                worst = std::max(worst, std::abs(dm(x) - dm_ref(x)));
            }
            gaps[static_cast<std::size_t>(m)] = worst;
        }
        out.gaps.push_back(std::move(gaps));
    }

    out.orders.assign(static_cast<std::size_t>(d),
                      std::numeric_limits<double>::quiet_NaN());
    for (int m = 0; m < d; ++m) {
        std::vector<double> ratios;
        for (std::size_t i = 0; i + 1 < n_list.size(); ++i) {
            if (n_list[i] * 2 != n_list[i + 1]) continue;
            const double ei = out.gaps[i][static_cast<std::size_t>(m)];
            const double ej = out.gaps[i + 1][static_cast<std::size_t>(m)];
            if (ei > 1e-13 && ej > 1e-13) ratios.push_back(std::log2(ei / ej));
        }
        if (!ratios.empty()) out.orders[static_cast<std::size_t>(m)] = median(std::move(ratios));
    }
    return out;
}

}  // namespace fcgram
