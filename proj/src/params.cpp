#include "fcgram/params.hpp"

#include <string>

#include "fcgram/errors.hpp"

namespace fcgram {

Method parse_method(const std::string& name) {
    if (name == "hermite") return Method::hermite;
    if (name == "leastsquares") return Method::leastsquares;
    if (name == "reference") return Method::reference;
    throw DomainError("unknown method '" + name + "' (expected hermite|leastsquares|reference)");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::hermite: return "hermite";
        case Method::leastsquares: return "leastsquares";
        case Method::reference: return "reference";
    }
    return "?";
}

void validate_params(FcParams& p) {
    if (p.n < 2) throw DomainError("n must be at least 2");
    if (p.d < 2 || p.d > 10) throw DomainError("d must be in 2..10");
    if (p.C < 1) throw DomainError("C must be at least 1");
    if (p.s < 1) throw DomainError("s must be at least 1");
    if (p.s * (p.d - 1) > p.n + 1)
        throw DomainError("stencil too wide: s(d-1)=" + std::to_string(p.s * (p.d - 1)) +
                          " > n+1=" + std::to_string(p.n + 1));
    if ((p.n + p.C) % 2 == 0)
        throw DomainError("n+C must be odd so that the sample count n+C+1 is even");
    const Rational expect = Rational(1) + Rational(p.C + 1, p.n);
    if (!(p.b == expect))
        throw DomainError("period mismatch: b must equal 1+(C+1)/n = " + expect.str() +
                          ", got " + p.b.str());
    if ((p.method == Method::hermite || p.method == Method::reference) && p.s != 1)
        throw DomainError("s must be 1 for the " + method_name(p.method) + " method");
    if (p.method == Method::leastsquares) {
        if (!p.ls) {
            LsGrid g;
            g.d = p.d;
            g.s = p.s;
            g.C = p.C;
            g.E = p.C;
            p.ls = g;
        }
        if (p.ls->d != p.d || p.ls->s != p.s || p.ls->C != p.C)
            throw DomainError("least-squares grid (d,s,C) must match the run parameters");
        if (p.ls->E != p.ls->C)
            throw DomainError("least-squares blend-back length must satisfy E = C");
        if (p.ls->Z < 2 || p.ls->n_over < 1)
            throw DomainError("least-squares grid needs Z >= 2 and n_over >= 1");
        if (p.M < 1) p.M = p.d + p.ls->Z - 3;
    }
    if (2 * p.s * (p.d - 1) >= p.n)
        p.warnings.push_back("end stencils overlap: 2s(d-1)=" +
                             std::to_string(2 * p.s * (p.d - 1)) +
                             " >= n=" + std::to_string(p.n) +
                             "; both projections read shared interior samples");
}

FcParams params_from_C(int n, int d, int C, Method method) {
    FcParams p;
    p.n = n;
    p.d = d;
    p.C = C;
    p.b = Rational(1) + Rational(C + 1, n);
    p.method = method;
    validate_params(p);
    return p;
}

FcParams params_from_b(int n, int d, const Rational& b, Method method) {
    std::int64_t nb = 0;
    if (n < 1 || !b.times_is_integral(n, nb) || nb % 2 != 0)
        throw DomainError("inadmissible (n, b): n is outside N_b — n*b must be an even integer "
                          "(n=" + std::to_string(n) + ", b=" + b.str() + ")");
    const long long C = nb - n - 1;
    if (C < 1) throw DomainError("inadmissible (n, b): C = n*b - n - 1 = " + std::to_string(C) +
                                 " must be at least 1");
    FcParams p;
    p.n = n;
    p.d = d;
    p.C = static_cast<int>(C);
    p.b = b;
    p.method = method;
    validate_params(p);
    return p;
}

}  // namespace fcgram
