#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace affbranch {

struct ArithmeticOverflow : std::runtime_error {
    ArithmeticOverflow() : std::runtime_error("exact arithmetic overflow") {}
};

namespace detail {
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}
inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
    return r;
}
} // namespace detail

// Exact rational with int64 numerator/denominator, always normalized
// (den > 0, gcd(num,den) = 1). Overflow throws instead of wrapping.
class Rat {
  public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    long long as_integer() const {
        if (den_ != 1) throw std::runtime_error("Rat: not an integer: " + str());
        return num_;
    }

    Rat operator-() const { return Rat(-num_, den_, raw_tag{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        long long g = std::gcd(a.den_, b.den_);
        long long ad = a.den_ / g, bd = b.den_ / g;
        long long n = detail::checked_add(detail::checked_mul(a.num_, bd),
                                          detail::checked_mul(b.num_, ad));
        long long d = detail::checked_mul(a.den_, bd);
        return Rat(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        long long g1 = std::gcd(std::abs(a.num_), b.den_);
        long long g2 = std::gcd(a.den_, std::abs(b.num_));
        long long n = detail::checked_mul(a.num_ / g1, b.num_ / g2);
        long long d = detail::checked_mul(a.den_ / g2, b.den_ / g1);
        return Rat(n, d, raw_tag{});
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::runtime_error("Rat: division by zero");
        return a * Rat(b.den_, b.num_);
    }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        // cross multiply in 128 bits; denominators are positive
        return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    struct raw_tag {};
    Rat(long long n, long long d, raw_tag) : num_(n), den_(d) {}
    void normalize() {
        if (den_ == 0) throw std::runtime_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(std::abs(num_), den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }
    long long num_, den_;
};

} // namespace affbranch
