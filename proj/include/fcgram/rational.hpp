#pragma once

#include <cstdint>
#include <string>

namespace fcgram {

// Exact rational on int64, used for the period b and grid admissibility checks.
// Accepts "p/q" and plain decimal strings ("2", "1.0625"); always stored in
// lowest terms with a positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(std::int64_t num) : num_(num), den_(1) {}

    static Rational parse(const std::string& text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // True when n * (this) is an integer; the product via out.
    bool times_is_integral(std::int64_t n, std::int64_t& out) const;

    Rational operator*(const Rational& o) const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const;  // "p/q", or "p" when q == 1

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    void normalize();
};

}  // namespace fcgram
