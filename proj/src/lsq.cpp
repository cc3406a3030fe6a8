#include "fcgram/lsq.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <string>

#include "fcgram/errors.hpp"

namespace fcgram {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::complex<double> unit_mode(int k, double y, int period) {
    const double phase = kTwoPi * static_cast<double>(k) * y / static_cast<double>(period);
    return {std::cos(phase), std::sin(phase)};
}

}  // namespace

double LsExtension::eval(double y) const {
    std::complex<double> acc = 0.0;
    for (int k = -M; k <= M; ++k)
        acc += coeffs[static_cast<std::size_t>(k + M)] * unit_mode(k, y, period);
    return acc.real();
}

LsSystem build_ls_system(const LsGrid& grid, int M) {
    if (grid.d < 2 || grid.d > 10) throw DomainError("build_ls_system: d must be in 2..10");
    if (grid.Z < grid.d) throw DomainError("build_ls_system: Z must be at least d");
    if (grid.s < 1 || grid.C < 1 || grid.E < 1 || grid.n_over < 1)
        throw DomainError("build_ls_system: s, C, E, n_over must be positive");
    if (M < 1) throw DomainError("build_ls_system: M must be positive");

    LsSystem sys;
    sys.grid = grid;
    sys.M = M;
    sys.match_rows = (grid.d - 1) * grid.n_over + 1;
    sys.zero_rows = grid.Z * grid.n_over;
    const int rows = sys.match_rows + sys.zero_rows;
    if (2 * M + 1 > rows)
        throw DomainError("build_ls_system: under-determined, 2M+1=" + std::to_string(2 * M + 1) +
                          " exceeds " + std::to_string(rows) + " rows");

    const int P = grid.period();
    sys.rows.reserve(static_cast<std::size_t>(rows));
    auto push_row = [&](double z) {
        std::vector<std::complex<double>> row(static_cast<std::size_t>(2 * M + 1));
        for (int k = -M; k <= M; ++k) row[static_cast<std::size_t>(k + M)] = unit_mode(k, z, P);
        sys.rows.push_back(std::move(row));
    };
    for (int j = 0; j < sys.match_rows; ++j)
        push_row(static_cast<double>(j) * grid.s / grid.n_over);
    for (int j = 1; j <= sys.zero_rows; ++j)
        push_row((grid.d - 1) * static_cast<double>(grid.s) + grid.C +
                 static_cast<double>(j) * grid.s / grid.n_over);

    const GramBasis basis = build_gram_basis(grid.d);
    for (int ell = 0; ell < grid.d; ++ell) {
        std::vector<double> a(static_cast<std::size_t>(sys.match_rows));
        const Polynomial& p = basis.scaled_left[static_cast<std::size_t>(ell)];
        for (int j = 0; j < sys.match_rows; ++j)
            a[static_cast<std::size_t>(j)] = p(static_cast<double>(j) / grid.n_over);
        sys.alpha.push_back(std::move(a));
    }
    return sys;
}

LsExtension solve_ls_extension(const LsSystem& system, int ell, double svd_cutoff) {
    if (ell < 0 || ell >= system.grid.d) throw DomainError("solve_ls_extension: ell out of range");
    if (!(svd_cutoff > 0.0 && svd_cutoff < 1.0))
        throw DomainError("solve_ls_extension: svd_cutoff must lie in (0, 1)");

    const int rows = system.match_rows + system.zero_rows;
    const int cols = 2 * system.M + 1;
    Eigen::MatrixXcd A(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            A(i, j) = system.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(rows);
    for (int i = 0; i < system.match_rows; ++i)
        rhs(i) = system.alpha[static_cast<std::size_t>(ell)][static_cast<std::size_t>(i)];

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sing = svd.singularValues();
    const double sigma_max = sing.size() > 0 ? sing(0) : 0.0;
    if (sigma_max == 0.0) throw NumericalError("solve_ls_extension: zero matrix");

    Eigen::VectorXcd proj = svd.matrixU().adjoint() * rhs;
    for (int i = 0; i < sing.size(); ++i) {
        if (sing(i) >= svd_cutoff * sigma_max)
            proj(i) /= sing(i);
        else
            proj(i) = 0.0;
    }
    Eigen::VectorXcd a = svd.matrixV() * proj;

    LsExtension ext;
    ext.ell = ell;
    ext.M = system.M;
    ext.period = system.grid.period();
    ext.coeffs.resize(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) ext.coeffs[static_cast<std::size_t>(j)] = a(j);

    ext.match_residual = (A.topRows(system.match_rows) * a -
                          rhs.head(system.match_rows)).norm();
    for (int j = 1; j <= system.zero_rows; ++j) {
        const double z = (system.grid.d - 1) * static_cast<double>(system.grid.s) +
                         system.grid.C + static_cast<double>(j) * system.grid.s /
                         system.grid.n_over;
        ext.zero_residual = std::max(ext.zero_residual, std::abs(ext.eval(z)));
    }
    return ext;
}

namespace {

std::string cache_key(const LsGrid& g, int M, double cutoff) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "ls_d%d_s%d_C%d_Z%d_E%d_no%d_M%d_cut%.9g", g.d, g.s, g.C,
                  g.Z, g.E, g.n_over, M, cutoff);
    return buf;
}

bool load_cache_file(const std::string& path, const LsGrid& g, int M,
                     std::vector<LsExtension>& out) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line != "ell,k,re,im") return false;
    std::vector<LsExtension> exts(static_cast<std::size_t>(g.d));
    for (int ell = 0; ell < g.d; ++ell) {
        exts[static_cast<std::size_t>(ell)].ell = ell;
        exts[static_cast<std::size_t>(ell)].M = M;
        exts[static_cast<std::size_t>(ell)].period = g.period();
        exts[static_cast<std::size_t>(ell)].coeffs.assign(static_cast<std::size_t>(2 * M + 1),
                                                          0.0);
    }
    int count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string tok;
        int vals_i[2];
        double vals_d[2];
        for (int c = 0; c < 2; ++c) {
            if (!std::getline(row, tok, ',')) return false;
            vals_i[c] = std::atoi(tok.c_str());
        }
        for (int c = 0; c < 2; ++c) {
            if (!std::getline(row, tok, ',')) return false;
            vals_d[c] = std::strtod(tok.c_str(), nullptr);
        }
        const int ell = vals_i[0], k = vals_i[1];
        if (ell < 0 || ell >= g.d || k < -M || k > M) return false;
        exts[static_cast<std::size_t>(ell)].coeffs[static_cast<std::size_t>(k + M)] = {
            vals_d[0], vals_d[1]};
        ++count;
    }
    if (count != g.d * (2 * M + 1)) return false;
    out = std::move(exts);
    return true;
}

void store_cache_file(const std::string& path, const std::vector<LsExtension>& exts) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream outf(tmp);
        if (!outf) return;  // caching is best-effort
        outf << "ell,k,re,im\n";
        char buf[96];
        for (const auto& e : exts) {
            for (int k = -e.M; k <= e.M; ++k) {
                const auto& c = e.coeffs[static_cast<std::size_t>(k + e.M)];
                std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g\n", e.ell, k, c.real(),
                              c.imag());
                outf << buf;
            }
        }
    }
    std::rename(tmp.c_str(), path.c_str());
}

void fill_residuals(const LsSystem& sys, LsExtension& e) {
    double acc = 0.0;
    for (int j = 0; j < sys.match_rows; ++j) {
        const double z = static_cast<double>(j) * sys.grid.s / sys.grid.n_over;
        const double r = e.eval(z) - sys.alpha[static_cast<std::size_t>(e.ell)]
                                               [static_cast<std::size_t>(j)];
        // Imaginary part on the match grid also counts against the fit.
        std::complex<double> full = 0.0;
        for (int k = -e.M; k <= e.M; ++k)
            full += e.coeffs[static_cast<std::size_t>(k + e.M)] *
                    std::complex<double>(std::cos(kTwoPi * k * z / e.period),
                                         std::sin(kTwoPi * k * z / e.period));
        const double im = full.imag();
        acc += r * r + im * im;
    }
    e.match_residual = std::sqrt(acc);
    e.zero_residual = 0.0;
    for (int j = 1; j <= sys.zero_rows; ++j) {
        const double z = (sys.grid.d - 1) * static_cast<double>(sys.grid.s) + sys.grid.C +
                         static_cast<double>(j) * sys.grid.s / sys.grid.n_over;
        e.zero_residual = std::max(e.zero_residual, std::abs(e.eval(z)));
    }
}

std::mutex g_ls_mutex;
std::map<std::string, std::vector<LsExtension>> g_ls_memo;

}  // namespace

std::vector<LsExtension> ls_basis_for(const LsGrid& grid, int M, double svd_cutoff) {
    const std::string key = cache_key(grid, M, svd_cutoff);
    {
        std::lock_guard<std::mutex> lock(g_ls_mutex);
        auto it = g_ls_memo.find(key);
        if (it != g_ls_memo.end()) return it->second;
    }

    const char* dir = std::getenv("FC_CACHE_DIR");
    const std::string path = dir ? std::string(dir) + "/" + key + ".csv" : std::string();

    std::vector<LsExtension> exts;
    bool from_file = false;
    if (!path.empty() && load_cache_file(path, grid, M, exts)) from_file = true;
    if (!from_file) {
        const LsSystem sys = build_ls_system(grid, M);
        for (int ell = 0; ell < grid.d; ++ell)
            exts.push_back(solve_ls_extension(sys, ell, svd_cutoff));
        if (!path.empty()) store_cache_file(path, exts);
    } else {
        const LsSystem sys = build_ls_system(grid, M);
        for (auto& e : exts) fill_residuals(sys, e);
    }

    std::lock_guard<std::mutex> lock(g_ls_mutex);
    g_ls_memo.emplace(key, exts);
    return exts;
}

ContinuedSamples classic_continue(const std::vector<double>& f_samples, const FcParams& params,
                                  const GramBasis& basis, const std::vector<LsExtension>& ls,
                                  double* max_imag) {
    if (params.method != Method::leastsquares)
        throw DomainError("classic_continue: params must use the leastsquares method");
    if (static_cast<int>(f_samples.size()) != params.n + 1)
        throw DomainError("classic_continue: need n+1 samples");
    if (static_cast<int>(ls.size()) != params.d)
        throw DomainError("classic_continue: need one LsExtension per ell");
    if (!params.ls || params.ls->E != params.ls->C)
        throw DomainError("classic_continue: grid must satisfy E = C");

    const int d = params.d, s = params.s, n = params.n, C = params.C;
    const int Z = params.ls->Z;
    std::vector<double> left_nodes(static_cast<std::size_t>(d)),
        right_nodes(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        left_nodes[static_cast<std::size_t>(j)] = f_samples[static_cast<std::size_t>(s * j)];
        right_nodes[static_cast<std::size_t>(j)] = f_samples[static_cast<std::size_t>(n - s * j)];
    }
    const std::vector<double> cL = project_left(left_nodes, basis);
    const std::vector<double> cR = project_right(right_nodes, basis);

    ContinuedSamples out;
    out.n = n;
    out.C = C;
    out.period = params.b;
    out.values = f_samples;
    out.values.resize(static_cast<std::size_t>(n + C + 1));
    double imag_acc = 0.0;
    for (int j = n + 1; j <= n + C; ++j) {
        const double yR = static_cast<double>(j - n) + (d - 1) * static_cast<double>(s);
        const double yL = static_cast<double>(j - n) + (d - 1 + Z) * static_cast<double>(s) + C;
        std::complex<double> acc = 0.0;
        for (int ell = 0; ell < d; ++ell) {
            const LsExtension& e = ls[static_cast<std::size_t>(ell)];
            std::complex<double> vR = 0.0, vL = 0.0;
            for (int k = -e.M; k <= e.M; ++k) {
                const auto& a = e.coeffs[static_cast<std::size_t>(k + e.M)];
                vR += a * unit_mode(k, yR, e.period);
                vL += a * unit_mode(k, yL, e.period);
            }
            acc += cR[static_cast<std::size_t>(ell)] * vR + cL[static_cast<std::size_t>(ell)] * vL;
        }
        out.values[static_cast<std::size_t>(j)] = acc.real();
        imag_acc = std::max(imag_acc, std::abs(acc.imag()));
    }
    if (max_imag) *max_imag = imag_acc;
    return out;
}

}  // namespace fcgram
