#pragma once

// Surgery slopes p/q and d-invariants of lens spaces.
//
// L(p, q) is p/q-surgery on the unknot; its d-invariants follow the
// recursion
//   d(L(1, 0), 0) = 0,
//   d(L(p, q), i) = ((2i + 1 - p - q)^2 - pq) / (4pq) - d(L(q, p mod q), i mod q)
// for 0 < q < p, with q reduced mod p first when q >= p, and
// d(L(-p, q), i) = -d(L(p, q), i).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "floercone/rational.hpp"

namespace floercone {

struct Slope {
    long long p = 0;  // carries the sign
    long long q = 1;  // >= 1

    Slope() = default;
    Slope(long long pp, long long qq) : p(pp), q(qq) {
        if (q == 0) throw std::invalid_argument("Slope: zero denominator");
        if (q < 0) { p = -p; q = -q; }
        long long g = std::gcd(p < 0 ? -p : p, q);
        if (g > 1) { p /= g; q /= g; }
    }

    static Slope parse(const std::string& s) {
        auto r = Rational::parse(s);
        return Slope(r.num(), r.den());
    }

    Rational value() const { return Rational(p, q); }
    std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
    long long structure_count() const { return p < 0 ? -p : p; }  // 0 for the zero slope

    bool operator==(const Slope&) const = default;
};

// Alexander-grading index of cone slot n for Spin^c label i at slope p/q.
inline long long cone_index(long long i, long long p, long long q, long long n) {
    return floor_div(i + p * n, q);
}

inline Rational lens_d(long long p, long long q, long long i) {
    if (p == 0) throw std::invalid_argument("lens_d: p must be nonzero");
    if (p < 0) return -lens_d(-p, q, i);
    if (i < 0 || i >= p) throw std::invalid_argument("lens_d: Spin^c index out of range");
    if (p == 1) return Rational(0);
    if (q < 1) throw std::invalid_argument("lens_d: q must be positive");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("lens_d: p and q must be coprime");
    if (q >= p) q %= p;
    long long s = 2 * i + 1 - p - q;
    Rational head(s * s - p * q, 4 * p * q);
    return head - lens_d(q, p % q, i % q);
}

}  // namespace floercone
