#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace hypfloquet {

/// Exact rational with a positive, reduced denominator. Only what the counting
/// code needs; overflow is not checked (all uses stay far below 2^62).
class Rational {
   public:
    constexpr Rational() = default;
    constexpr Rational(int64_t value) : num_(value), den_(1) {  // NOLINT(google-explicit-constructor)
    }
    Rational(int64_t num, int64_t den) : num_(num), den_(den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        normalize();
    }

    int64_t num() const noexcept {
        return num_;
    }
    int64_t den() const noexcept {
        return den_;
    }
    bool is_integer() const noexcept {
        return den_ == 1;
    }
    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    friend Rational operator+(const Rational &a, const Rational &b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator-(const Rational &a, const Rational &b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }
    friend Rational operator*(const Rational &a, const Rational &b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend Rational operator/(const Rational &a, const Rational &b) {
        if (b.num_ == 0) {
            throw std::domain_error("Rational: division by zero");
        }
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    Rational operator-() const {
        return {-num_, den_};
    }

    friend bool operator==(const Rational &a, const Rational &b) = default;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    friend std::ostream &operator<<(std::ostream &out, const Rational &r) {
        return out << r.str();
    }

   private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    int64_t num_ = 0;
    int64_t den_ = 1;
};

}  // namespace hypfloquet
