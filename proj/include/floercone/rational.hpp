#pragma once

// Exact rational arithmetic on 64-bit numerator/denominator, always kept in
// lowest terms with a positive denominator.  Denominators arising in this
// project divide 4pq for small surgery slopes p/q, so 64 bits is ample;
// intermediate products are widened to 128 bits and overflow is checked.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace floercone {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const { return -(-*this).floor(); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational operator+(const Rational& o) const {
        __int128 n = (__int128)num_ * o.den_ + (__int128)o.num_ * den_;
        __int128 d = (__int128)den_ * o.den_;
        return from_wide(n, d);
    }
    Rational operator-(const Rational& o) const { return *this + (-o); }
    Rational operator*(const Rational& o) const {
        return from_wide((__int128)num_ * o.num_, (__int128)den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from_wide((__int128)num_ * o.den_, (__int128)den_ * o.num_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    std::strong_ordering operator<=>(const Rational& o) const {
        __int128 l = (__int128)num_ * o.den_;
        __int128 r = (__int128)o.num_ * den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Serialized form is always "num/den" in lowest terms, den >= 1.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            size_t used = 0;
            if (slash == std::string::npos) {
                long long n = std::stoll(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
                return Rational(n);
            }
            long long n = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw std::invalid_argument(s);
            std::string dp = s.substr(slash + 1);
            long long d = std::stoll(dp, &used);
            if (used != dp.size()) throw std::invalid_argument(s);
            return Rational(n, d);
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        }
    }

private:
    static Rational from_wide(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = wide_gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: overflow");
        Rational r;
        r.num_ = (long long)n;
        r.den_ = (long long)d;
        return r;
    }
    static __int128 wide_gcd(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_;
    long long den_;
};

inline Rational operator+(long long a, const Rational& b) { return Rational(a) + b; }
inline Rational operator-(long long a, const Rational& b) { return Rational(a) - b; }
inline Rational operator*(long long a, const Rational& b) { return Rational(a) * b; }

// floor(a/b) toward minus infinity; b may be any nonzero integer.
inline long long floor_div(long long a, long long b) {
    if (b == 0) throw std::domain_error("floor_div: zero divisor");
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace floercone
