#include "fcgram/rational.hpp"

#include <cmath>
#include <numeric>

#include "fcgram/errors.hpp"

namespace fcgram {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw DomainError("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw DomainError("Rational: empty string");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            std::size_t p1 = 0, p2 = 0;
            const std::int64_t p = std::stoll(text.substr(0, slash), &p1);
            const std::string den_part = text.substr(slash + 1);
            const std::int64_t q = std::stoll(den_part, &p2);
            if (p1 != slash || p2 != den_part.size())
                throw DomainError("Rational: trailing characters in '" + text + "'");
            return Rational(p, q);
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) {
            std::size_t pos = 0;
            const std::int64_t p = std::stoll(text, &pos);
            if (pos != text.size())
                throw DomainError("Rational: trailing characters in '" + text + "'");
            return Rational(p);
        }
        // Decimal: scale the fractional part by a power of ten.
        const std::string frac = text.substr(dot + 1);
        if (frac.size() > 15) throw DomainError("Rational: too many decimal digits in '" + text + "'");
        const std::string digits = text.substr(0, dot) + frac;
        std::size_t pos = 0;
        const std::int64_t p = std::stoll(digits.empty() ? "0" : digits, &pos);
        if (pos != digits.size())
            throw DomainError("Rational: trailing characters in '" + text + "'");
        std::int64_t q = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) q *= 10;
        return Rational(p, q);
    } catch (const std::invalid_argument&) {
        throw DomainError("Rational: cannot parse '" + text + "'");
    } catch (const std::out_of_range&) {
        throw DomainError("Rational: value out of range '" + text + "'");
    }
}

bool Rational::times_is_integral(std::int64_t n, std::int64_t& out) const {
    const std::int64_t prod = n * num_;
    if (prod % den_ != 0) return false;
    out = prod / den_;
    return true;
}

Rational Rational::operator*(const Rational& o) const { return Rational(num_ * o.num_, den_ * o.den_); }
Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace fcgram
