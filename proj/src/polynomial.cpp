#include "fcgram/polynomial.hpp"

#include <cmath>

#include "fcgram/errors.hpp"

namespace fcgram {

Polynomial::Polynomial(std::vector<double> coeffs, double center, double scale)
    : coeffs_(std::move(coeffs)), center_(center), scale_(scale) {
    if (coeffs_.empty()) coeffs_ = {0.0};
    if (scale_ == 0.0) throw DomainError("Polynomial: zero frame scale");
}

double Polynomial::eval_frame(double t) const {
    double acc = 0.0;
    for (int k = degree(); k >= 0; --k) acc = acc * t + coeffs_[static_cast<std::size_t>(k)];
    return acc;
}

double Polynomial::operator()(double x) const { return eval_frame((x - center_) / scale_); }

Polynomial Polynomial::derivative(int m) const {
    if (m < 0) throw DomainError("Polynomial::derivative: negative order");
    if (m == 0) return *this;
    if (m > degree()) return Polynomial({0.0}, center_, scale_);
    std::vector<double> cur = coeffs_;
    for (int pass = 0; pass < m; ++pass) {
        std::vector<double> next(cur.size() - 1);
        for (std::size_t k = 1; k < cur.size(); ++k)
            next[k - 1] = static_cast<double>(k) * cur[k] / scale_;
        cur = std::move(next);
    }
    return Polynomial(std::move(cur), center_, scale_);
}

Polynomial Polynomial::with_frame(double center, double scale) const {
    if (scale == 0.0) throw DomainError("Polynomial::with_frame: zero frame scale");
    // t_old = a * t_new + b with a = scale/scale_, b = (center - center_)/scale_.
    const double a = scale / scale_;
    const double b = (center - center_) / scale_;
    // Horner composition: result = (((c_n * s + c_{n-1}) * s + ...) with s(t) = a t + b.
    std::vector<double> acc{coeffs_.back()};
    for (int k = degree() - 1; k >= 0; --k) {
        std::vector<double> next(acc.size() + 1, 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i] * a;
            next[i] += acc[i] * b;
        }
        next[0] += coeffs_[static_cast<std::size_t>(k)];
        acc = std::move(next);
    }
    return Polynomial(std::move(acc), center, scale);
}

Polynomial& Polynomial::add_scaled(const Polynomial& other, double w) {
    if (other.center_ != center_ || other.scale_ != scale_)
        throw DomainError("Polynomial::add_scaled: frame mismatch");
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += w * other.coeffs_[k];
    return *this;
}

Polynomial poly_derivative(const Polynomial& p, int m) { return p.derivative(m); }

}  // namespace fcgram
