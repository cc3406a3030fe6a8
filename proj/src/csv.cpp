#include "fcgram/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "fcgram/errors.hpp"

namespace fcgram {

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_convergence_csv(const std::string& path, const std::vector<ConvergenceRow>& rows) {
    auto out = open_or_throw(path);
    out << "n,e_n,noc_n\n";
    for (const auto& r : rows) {
        out << r.n << ',' << num(r.e_n) << ',';
        if (r.noc) out << num(*r.noc);
        out << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string render_convergence_md(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    out << "| n | e_n | noc_n |\n|---:|---:|---:|\n";
    for (const auto& r : rows) {
        char e_buf[32];
        std::snprintf(e_buf, sizeof e_buf, "%.2e", r.e_n);
        out << "| " << r.n << " | " << e_buf << " | ";
        if (r.noc) {
            char n_buf[32];
            std::snprintf(n_buf, sizeof n_buf, "%.2f", *r.noc);
            out << n_buf;
        } else {
            out << "—";
        }
        out << " |\n";
    }
    return out.str();
}

void write_convergence_md(const std::string& path, const std::vector<ConvergenceRow>& rows) {
    auto out = open_or_throw(path);
    out << render_convergence_md(rows);
    if (!out) throw IoError("write failed for '" + path + "'");
}

void write_approx_csv(const std::string& path, const std::vector<double>& xs,
                      const std::vector<double>& f_vals, const std::vector<double>& tau_vals) {
    if (xs.size() != f_vals.size() || xs.size() != tau_vals.size())
        throw DomainError("write_approx_csv: column length mismatch");
    auto out = open_or_throw(path);
    out << "x,f,tau_n_f,error\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << num(xs[i]) << ',' << num(f_vals[i]) << ',' << num(tau_vals[i]) << ','
            << num(tau_vals[i] - f_vals[i]) << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

void write_samples_csv(const std::string& path, const ContinuedSamples& samples) {
    auto out = open_or_throw(path);
    out << "j,x_j,value\n";
    for (std::size_t j = 0; j < samples.values.size(); ++j)
        out << j << ',' << num(static_cast<double>(j) / samples.n) << ','
            << num(samples.values[j]) << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

void write_compare_csv(const std::string& path, const std::vector<double>& xs,
                       const std::vector<double>& phi_ls, const std::vector<double>& phi_h) {
    if (xs.size() != phi_ls.size() || xs.size() != phi_h.size())
        throw DomainError("write_compare_csv: column length mismatch");
    auto out = open_or_throw(path);
    out << "x,phi_LS,phi_H\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << num(xs[i]) << ',' << num(phi_ls[i]) << ',' << num(phi_h[i]) << '\n';
    if (!out) throw IoError("write failed for '" + path + "'");
}

void write_coeff_csv(const std::string& path, const TrigInterpolant& t) {
    auto out = open_or_throw(path);
    out << "l,re,im\n";
    for (int l = -t.N / 2; l < t.N / 2; ++l) {
        const auto c = t.coeff(l);
        out << l << ',' << num(c.real()) << ',' << num(c.imag()) << '\n';
    }
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace fcgram
