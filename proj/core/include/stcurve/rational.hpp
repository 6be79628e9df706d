#ifndef STCURVE_RATIONAL_HPP
#define STCURVE_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stcurve {

/// Exact rational on int64 with reduction after every operation. The values
/// in this project stay tiny (sums of a few hundred unit fractions), so a
/// checked fixed-width type is enough; overflow throws instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        reduce();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked(a.num_, b.den_) + checked(b.num_, a.den_),
                        checked(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked(a.num_, b.den_) - checked(b.num_, a.den_),
                        checked(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked(a.num_, b.num_), checked(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: divide by zero");
        return Rational(checked(a.num_, b.den_), checked(a.den_, b.num_));
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }

    /// "p/q"; integers render without the denominator.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void reduce() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    }
    static long long checked(long long a, long long b) {
        __int128 r = static_cast<__int128>(a) * b;
        if (r > INT64_MAX || r < INT64_MIN)
            throw std::overflow_error("Rational: overflow");
        return static_cast<long long>(r);
    }

    long long num_;
    long long den_;
};

}  // namespace stcurve

#endif
