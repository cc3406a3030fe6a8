// fc: Fourier-continuation approximation toolkit.
//
// Subcommands:
//   approximate         approximate one function at one grid size, dump CSVs
//   convergence         run a refinement study and emit (n, e_n, noc_n)
//   compare-extensions  dump the classical and Hermite extensions of the
//                       Gram polynomials for plotting
//   verify              run the oracle-backed invariant suites

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "fcgram/continuation.hpp"
#include "fcgram/convergence.hpp"
#include "fcgram/csv.hpp"
#include "fcgram/errors.hpp"
#include "fcgram/hermite.hpp"
#include "fcgram/lsq.hpp"
#include "fcgram/study.hpp"
#include "fcgram/trig.hpp"
#include "fcgram/verify.hpp"

namespace {

using namespace fcgram;

constexpr int kExitBadParams = 2;
constexpr int kExitIo = 3;

struct CommonOpts {
    std::string function_id = "osc54";
    double k = 200.0;
    double eps = 0.1;
    int d = 5;
    std::string b_text = "2";
    std::string method_text = "hermite";
    int n_eval = 32768;
    int s = 1;
    int z = 12;
    int n_over = 20;
    int ls_m = 0;
    double svd_cutoff = 1e-12;
    bool serial = false;

    Execution exec() const { return serial ? Execution::serial : Execution::parallel; }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_method = true) {
    cmd->add_option("--function", o.function_id,
                    "Test function id (const1|osc54|expx|cosk|runge)");
    cmd->add_option("--k", o.k, "Frequency parameter for cosk");
    cmd->add_option("--eps", o.eps, "Width parameter for runge");
    cmd->add_option("--d", o.d, "Number of Gram polynomials (match order)");
    cmd->add_option("--b", o.b_text, "Period, rational 'p/q' or decimal (e.g. 2, 1.0625)");
    if (with_method)
        cmd->add_option("--method", o.method_text,
                        "Extension method: hermite|leastsquares|reference");
    cmd->add_option("--n-eval", o.n_eval, "Fine evaluation grid density");
    cmd->add_option("--s", o.s, "Skipping (stride) parameter, leastsquares only");
    cmd->add_option("--z", o.z, "Least-squares zero-window length Z");
    cmd->add_option("--n-over", o.n_over, "Least-squares oversampling factor");
    cmd->add_option("--ls-m", o.ls_m, "Least-squares mode half-count M (0 = default)");
    cmd->add_option("--svd-cutoff", o.svd_cutoff, "Relative SVD truncation threshold");
    cmd->add_flag("--serial", o.serial, "Use the serial reference kernels");
}

StudyConfig to_config(const CommonOpts& o, const std::string& c_rule,
                      const std::vector<int>& n_list) {
    StudyConfig cfg;
    cfg.function_id = o.function_id;
    cfg.k = o.k;
    cfg.eps = o.eps;
    cfg.d = o.d;
    cfg.b = Rational::parse(o.b_text);
    cfg.n_list = n_list;
    cfg.method = parse_method(o.method_text);
    cfg.c_rule = c_rule;
    cfg.s = o.s;
    cfg.N_eval = o.n_eval;
    cfg.Z = o.z;
    cfg.n_over = o.n_over;
    cfg.M = o.ls_m;
    cfg.svd_cutoff = o.svd_cutoff;
    cfg.exec = o.exec();
    return cfg;
}

std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        if (!tok.empty()) {
            try {
                out.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw DomainError("bad n-list entry '" + tok + "'");
            }
        }
        pos = comma + 1;
    }
    return out;
}

std::string stem_of(const std::string& path) {
    const std::size_t dot = path.rfind('.');
    const std::size_t slash = path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path;
    return path.substr(0, dot);
}

void print_warnings(const FcParams& params) {
    for (const auto& w : params.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_approximate(const CommonOpts& o, int n, const std::string& out_path,
                    const std::string& coeff_path) {
    StudyConfig cfg = to_config(o, "from-b", {n});
    const TestFunction f = make_function(cfg.function_id, cfg.k, cfg.eps);
    const FcParams params = study_params(cfg, n);
    print_warnings(params);

    std::vector<double> samples(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        samples[static_cast<std::size_t>(j)] = f.eval(static_cast<double>(j) / n);

    Providers prov;
    prov.derivatives = [&f](double at, int d, std::vector<double>& derivs) {
        derivs.resize(static_cast<std::size_t>(d));
        for (int m = 0; m < d; ++m) derivs[static_cast<std::size_t>(m)] = f.derivative(m, at);
    };
    const ContinuedSamples cont = continue_samples(samples, params, prov);
    const TrigInterpolant t = fit(cont);

    const std::vector<double> tau = eval_fine_grid(t, cfg.N_eval, cfg.exec);
    std::vector<double> xs(tau.size()), fv(tau.size());
    for (std::size_t j = 0; j < tau.size(); ++j) {
        xs[j] = static_cast<double>(j) / cfg.N_eval;
        fv[j] = f.eval(xs[j]);
    }
    write_approx_csv(out_path, xs, fv, tau);
    write_samples_csv(stem_of(out_path) + ".extension.csv", cont);
    if (!coeff_path.empty()) write_coeff_csv(coeff_path, t);
    std::cout << "wrote " << out_path << " and " << stem_of(out_path) << ".extension.csv\n";
    return 0;
}

int cmd_convergence(const CommonOpts& o, const std::string& n_list_text,
                    const std::string& c_rule, const std::string& out_path,
                    const std::string& format, const std::string& manifest_path) {
    const std::vector<int> n_list = parse_n_list(n_list_text);
    if (n_list.empty()) throw DomainError("empty n-list");
    if (format != "csv" && format != "md")
        throw DomainError("format must be csv or md, got '" + format + "'");
    StudyConfig cfg = to_config(o, c_rule, n_list);
    const auto rows = run_study(cfg);
    if (format == "csv")
        write_convergence_csv(out_path, rows);
    else
        write_convergence_md(out_path, rows);
    if (!manifest_path.empty()) save_manifest(manifest_path, cfg);
    std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
    return 0;
}

int cmd_compare_extensions(int d, int C, int Z, int E, const std::string& h_text, int ell,
                           int n_over, int ls_m, double svd_cutoff,
                           const std::string& out_path) {
    const Rational h_rat = Rational::parse(h_text);
    const double h = h_rat.value();
    if (!(h > 0.0)) throw DomainError("h must be positive");
    if (ell >= d) throw DomainError("ell must be below d");

    LsGrid grid;
    grid.d = d;
    grid.s = 1;
    grid.C = C;
    grid.Z = Z;
    grid.E = E;
    grid.n_over = n_over;
    const int M = ls_m > 0 ? ls_m : d + Z - 3;
    const auto ls = ls_basis_for(grid, M, svd_cutoff);
    const GramBasis basis = build_gram_basis(d);

    const int W = d + C + Z + E;  // window length in h-units
    const int per_h = 20;
    std::vector<double> xs(static_cast<std::size_t>(W * per_h) + 1);
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = static_cast<double>(i) * h / per_h;

    auto emit_one = [&](int l, const std::string& path) {
        const PiecewiseExtension phi_h = build_phi_H(basis, l, d, C, Z, E, h);
        std::vector<double> v_ls(xs.size()), v_h(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            v_ls[i] = ls[static_cast<std::size_t>(l)].eval(xs[i] / h);
            v_h[i] = phi_h(xs[i]);
        }
        write_compare_csv(path, xs, v_ls, v_h);
        std::cout << "wrote " << path << "\n";
    };

    if (ell >= 0) {
        emit_one(ell, out_path);
    } else {
        const std::string stem = stem_of(out_path);
        for (int l = 0; l < d; ++l) emit_one(l, stem + ".ell" + std::to_string(l) + ".csv");
    }
    return 0;
}

int cmd_verify(const std::string& level) {
    const auto start = std::chrono::steady_clock::now();
    const auto checks = run_verify(level);
    bool all_ok = true;
    for (const auto& c : checks) {
        std::printf("[%s] %-38s %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        all_ok = all_ok && c.passed;
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start).count();
    std::printf("%s: %zu checks in %.2fs\n", all_ok ? "OK" : "FAILED", checks.size(), secs);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-continuation approximation toolkit"};
    app.require_subcommand(1);

    CommonOpts ap_opts;
    int ap_n = 64;
    std::string ap_out = "approx.csv", ap_coeffs;
    auto* ap = app.add_subcommand("approximate", "Approximate one function at one grid size");
    add_common(ap, ap_opts);
    ap->add_option("--n", ap_n, "Interior grid count (h = 1/n)");
    ap->add_option("--out", ap_out, "Output CSV path");
    ap->add_option("--dump-coefficients", ap_coeffs, "Optional coefficient CSV path");

    CommonOpts cv_opts;
    std::string cv_nlist = "512,1024,2048", cv_rule = "from-b", cv_out = "convergence.csv",
                cv_format = "csv", cv_manifest;
    auto* cv = app.add_subcommand("convergence", "Run a refinement study");
    add_common(cv, cv_opts);
    cv->add_option("--n-list", cv_nlist, "Comma-separated n values (doubling for noc)");
    cv->add_option("--c-rule", cv_rule, "C rule: from-b | fixed:<C> | quarter");
    cv->add_option("--out", cv_out, "Output path");
    cv->add_option("--format", cv_format, "Output format: csv | md");
    cv->add_option("--manifest", cv_manifest, "Optional JSON manifest path");

    int cx_d = 5, cx_C = 25, cx_Z = 12, cx_E = 25, cx_ell = -1, cx_n_over = 20, cx_m = 0;
    double cx_cut = 1e-12;
    std::string cx_h = "1/256", cx_out = "extensions.csv";
    auto* cx = app.add_subcommand("compare-extensions",
                                  "Dump classical vs Hermite Gram extensions");
    cx->add_option("--d", cx_d, "Number of Gram polynomials");
    cx->add_option("--c", cx_C, "Continuation length C");
    cx->add_option("--z", cx_Z, "Zero-window length Z");
    cx->add_option("--e", cx_E, "Blend-back length E");
    cx->add_option("--spacing", cx_h, "Grid spacing h, rational or decimal (e.g. 1/256)");
    cx->add_option("--ell", cx_ell, "Single Gram index (default: all)");
    cx->add_option("--n-over", cx_n_over, "Least-squares oversampling factor");
    cx->add_option("--ls-m", cx_m, "Least-squares mode half-count M (0 = default)");
    cx->add_option("--svd-cutoff", cx_cut, "Relative SVD truncation threshold");
    cx->add_option("--out", cx_out, "Output CSV path (stem for per-ell files)");

    std::string vf_level = "fast";
    auto* vf = app.add_subcommand("verify", "Run the invariant suites");
    vf->add_option("level", vf_level, "fast | full");

    CLI11_PARSE(app, argc, argv);

    try {
        if (ap->parsed()) return cmd_approximate(ap_opts, ap_n, ap_out, ap_coeffs);
        if (cv->parsed())
            return cmd_convergence(cv_opts, cv_nlist, cv_rule, cv_out, cv_format, cv_manifest);
        if (cx->parsed())
            return cmd_compare_extensions(cx_d, cx_C, cx_Z, cx_E, cx_h, cx_ell, cx_n_over,
                                          cx_m, cx_cut, cx_out);
        if (vf->parsed()) return cmd_verify(vf_level);
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return 0;
}
