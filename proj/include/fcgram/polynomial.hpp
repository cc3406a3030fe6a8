#pragma once

#include <vector>

namespace fcgram {

// Dense polynomial over an affine frame: coefficient k multiplies t^k with
// t = (x - center)/scale. The default frame (center 0, scale 1) is the plain
// monomial basis in x. Carrying the frame keeps evaluation stable for
// polynomials naturally expressed on short or shifted intervals (e.g. the
// Hermite blends on [1, 1+1/16], whose plain monomial-in-x coefficients would
// cancel catastrophically); re-expansion is available via to_monomial().
class Polynomial {
  public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> coeffs, double center = 0.0, double scale = 1.0);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    double center() const { return center_; }
    double scale() const { return scale_; }

    // Value at x (Horner in the frame variable).
    double operator()(double x) const;
    // Value at the frame variable t directly.
    double eval_frame(double t) const;

    // m-th derivative with respect to x (exact monomial rule in the frame,
    // divided by scale^m). m greater than the degree yields the zero polynomial.
    Polynomial derivative(int m = 1) const;

    // The same function re-expressed over a new frame (binomial expansion;
    // exact for pure rescaling, conditioning degrades with large shift/scale
    // ratios -- see to_monomial callers).
    Polynomial with_frame(double center, double scale) const;
    // Plain monomial-in-x coefficients (identity frame).
    Polynomial to_monomial() const { return with_frame(0.0, 1.0); }

    // this += w * other; other must share this polynomial's frame.
    Polynomial& add_scaled(const Polynomial& other, double w);

    static Polynomial zero(double center = 0.0, double scale = 1.0) {
        return Polynomial({0.0}, center, scale);
    }

  private:
    std::vector<double> coeffs_;
    double center_ = 0.0;
    double scale_ = 1.0;
};

// m-th derivative with respect to x. Free-function spelling of
// Polynomial::derivative, kept for call sites that read better with a verb.
Polynomial poly_derivative(const Polynomial& p, int m);

}  // namespace fcgram
