#include "fcgram/gram.hpp"

#include <cmath>
#include <string>

#include "fcgram/errors.hpp"

namespace fcgram {

namespace {

double node_inner(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * b[j];
    return acc;
}

std::vector<double> eval_at_nodes(const std::vector<double>& coeffs, int d) {
    std::vector<double> vals(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        double acc = 0.0;
        for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
            acc = acc * j + coeffs[static_cast<std::size_t>(k)];
        vals[static_cast<std::size_t>(j)] = acc;
    }
    return vals;
}

}  // namespace

GramBasis build_gram_basis(int d) {
    if (d < 2 || d > 10)
        throw DomainError("build_gram_basis: d must be in 2..10, got " + std::to_string(d));

    GramBasis basis;
    basis.d = d;
    std::vector<std::vector<double>> coeffs;  // orthonormal coefficient vectors
    std::vector<std::vector<double>> values;  // their node values

    for (int ell = 0; ell < d; ++ell) {
        std::vector<double> q(static_cast<std::size_t>(ell) + 1, 0.0);
        q[static_cast<std::size_t>(ell)] = 1.0;  // monomial u^ell
        std::vector<double> qv = eval_at_nodes(q, d);
        // Classical Gram-Schmidt plus one re-orthogonalization sweep; the
        // second pass recovers the orthogonality lost to rounding at d near 7.
        for (int sweep = 0; sweep < 2; ++sweep) {
            for (int k = 0; k < ell; ++k) {
                const double proj = node_inner(qv, values[static_cast<std::size_t>(k)]);
                const auto& ck = coeffs[static_cast<std::size_t>(k)];
                for (std::size_t i = 0; i < ck.size(); ++i) q[i] -= proj * ck[i];
                const auto& vk = values[static_cast<std::size_t>(k)];
                for (std::size_t j = 0; j < qv.size(); ++j) qv[j] -= proj * vk[j];
            }
        }
        const double norm = std::sqrt(node_inner(qv, qv));
        if (!(norm > 0.0))
            throw NumericalError("build_gram_basis: zero norm in Gram-Schmidt");
        for (auto& c : q) c /= norm;
        for (auto& v : qv) v /= norm;
        coeffs.push_back(std::move(q));
        values.push_back(std::move(qv));
    }

    for (int ell = 0; ell < d; ++ell) {
        const auto& c = coeffs[static_cast<std::size_t>(ell)];
        basis.scaled_left.emplace_back(c);
        // ptilde^R(u) = ptilde^L(u + d - 1): the same coefficients read over the
        // frame t = u + (d-1), re-expanded to the identity frame.
        basis.scaled_right.push_back(
            Polynomial(c, -(static_cast<double>(d) - 1.0), 1.0).to_monomial());
        basis.node_values.push_back(values[static_cast<std::size_t>(ell)]);
    }
    return basis;
}

namespace {

void check_ell(const GramBasis& basis, int ell, const char* who) {
    if (ell < 0 || ell >= basis.d)
        throw DomainError(std::string(who) + ": ell out of range 0.." + std::to_string(basis.d - 1));
}

void check_scale(int s, double h, const char* who) {
    if (s < 1) throw DomainError(std::string(who) + ": s must be >= 1");
    if (!(h > 0.0)) throw DomainError(std::string(who) + ": h must be positive");
}

}  // namespace

Polynomial left_gram_poly(const GramBasis& basis, int ell, int s, double h) {
    check_ell(basis, ell, "left_gram_poly");
    check_scale(s, h, "left_gram_poly");
    return Polynomial(basis.scaled_left[static_cast<std::size_t>(ell)].coeffs(), 0.0, s * h);
}

Polynomial right_gram_poly(const GramBasis& basis, int ell, int s, double h) {
    check_ell(basis, ell, "right_gram_poly");
    check_scale(s, h, "right_gram_poly");
    return Polynomial(basis.scaled_right[static_cast<std::size_t>(ell)].coeffs(), 1.0, s * h);
}

std::vector<double> project_left(const std::vector<double>& f_nodes, const GramBasis& basis) {
    if (static_cast<int>(f_nodes.size()) != basis.d)
        throw DomainError("project_left: expected " + std::to_string(basis.d) + " node values");
    std::vector<double> c(static_cast<std::size_t>(basis.d));
    for (int ell = 0; ell < basis.d; ++ell) {
        const auto& pv = basis.node_values[static_cast<std::size_t>(ell)];
        double acc = 0.0;
        for (int j = 0; j < basis.d; ++j)
            acc += f_nodes[static_cast<std::size_t>(j)] * pv[static_cast<std::size_t>(j)];
        c[static_cast<std::size_t>(ell)] = acc;
    }
    return c;
}

std::vector<double> project_right(const std::vector<double>& f_nodes, const GramBasis& basis) {
    if (static_cast<int>(f_nodes.size()) != basis.d)
        throw DomainError("project_right: expected " + std::to_string(basis.d) + " node values");
    std::vector<double> c(static_cast<std::size_t>(basis.d));
    for (int ell = 0; ell < basis.d; ++ell) {
        const auto& pv = basis.node_values[static_cast<std::size_t>(ell)];
        double acc = 0.0;
        // f_nodes[j] samples x_{n-sj}; the right Gram polynomial there takes the
        // value ptilde_ell^L(d-1-j).
        for (int j = 0; j < basis.d; ++j)
            acc += f_nodes[static_cast<std::size_t>(j)] * pv[static_cast<std::size_t>(basis.d - 1 - j)];
        c[static_cast<std::size_t>(ell)] = acc;
    }
    return c;
}

}  // namespace fcgram
