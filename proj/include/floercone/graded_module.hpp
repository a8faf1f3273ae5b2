#pragma once

// Graded modules over F[U], where F is the field with two elements and U has
// degree -2.  Everything we need decomposes as a finite direct sum of
//   - towers  T(d):    F[U, U^{-1}] / U*F[U], bottom generator in grading d,
//   - finites tau(d, N): F[U] / U^N, bottom generator in grading d,
// so a module is stored as a normalized multiset of summands.  A summand
// tau(d, N) occupies gradings d, d+2, ..., d+2(N-1).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "floercone/rational.hpp"

namespace floercone {

struct Tower {
    Rational d;
    bool operator==(const Tower&) const = default;
    auto operator<=>(const Tower&) const = default;
};

struct Finite {
    Rational d;
    long long len = 0;
    bool operator==(const Finite&) const = default;
    auto operator<=>(const Finite&) const = default;
};

class GradedModule {
public:
    GradedModule() = default;

    void add_tower(const Rational& d) {
        towers_.push_back({d});
        std::sort(towers_.begin(), towers_.end());
    }
    void add_finite(const Rational& d, long long len) {
        if (len < 0) throw std::invalid_argument("GradedModule: negative length");
        if (len == 0) return;
        finites_.push_back({d, len});
        std::sort(finites_.begin(), finites_.end());
    }

    const std::vector<Tower>& towers() const { return towers_; }
    const std::vector<Finite>& finites() const { return finites_; }

    bool operator==(const GradedModule&) const = default;

    GradedModule direct_sum(const GradedModule& o) const {
        GradedModule r = *this;
        for (const auto& t : o.towers_) r.towers_.push_back(t);
        for (const auto& f : o.finites_) r.finites_.push_back(f);
        std::sort(r.towers_.begin(), r.towers_.end());
        std::sort(r.finites_.begin(), r.finites_.end());
        return r;
    }

    long long total_finite_dim() const {
        long long s = 0;
        for (const auto& f : finites_) s += f.len;
        return s;
    }

    // Least e >= 0 with U^e annihilating the finite part.
    long long u_annihilation_exponent() const {
        long long e = 0;
        for (const auto& f : finites_) e = std::max(e, f.len);
        return e;
    }

    // Euler characteristic of the finite part with respect to the Z/2 grading
    // in which `ref` is even.  All finite summands must sit in gradings
    // differing from ref by an integer.
    long long z2_euler_characteristic(const Rational& ref) const {
        long long chi = 0;
        for (const auto& f : finites_) {
            Rational diff = f.d - ref;
            if (!diff.is_integer())
                throw std::domain_error("z2_euler_characteristic: non-integer grading offset");
            long long sign = (diff.num() % 2 == 0) ? 1 : -1;
            chi += sign * f.len;
        }
        return chi;
    }

    // If every finite summand sits in the same Z/2 grading relative to ref,
    // return that parity (0 even, 1 odd); nullopt for mixed parity, a
    // non-integer offset, or an empty finite part.
    std::optional<int> finite_parity(const Rational& ref) const {
        std::optional<int> p;
        for (const auto& f : finites_) {
            Rational diff = f.d - ref;
            if (!diff.is_integer()) return std::nullopt;
            int par = (int)(((diff.num() % 2) + 2) % 2);
            if (p && *p != par) return std::nullopt;
            p = par;
        }
        return p;
    }

    // Dimension of each graded piece with grading in [lo, hi], stepping
    // through every grading that actually supports something.
    std::map<Rational, long long> dims_in_range(const Rational& lo, const Rational& hi) const {
        std::map<Rational, long long> out;
        for (const auto& t : towers_)
            for (Rational g = t.d < lo ? first_at_or_above(t.d, lo) : t.d; g <= hi; g += Rational(2))
                out[g] += 1;
        for (const auto& f : finites_) {
            Rational top = f.d + Rational(2 * (f.len - 1));
            for (Rational g = f.d; g <= top; g += Rational(2))
                if (lo <= g && g <= hi) out[g] += 1;
        }
        return out;
    }

    // Remove one finite summand exactly equal to tau(d, len); false if absent.
    bool remove_finite(const Rational& d, long long len) {
        Finite target{d, len};
        auto it = std::find(finites_.begin(), finites_.end(), target);
        if (it == finites_.end()) return false;
        finites_.erase(it);
        return true;
    }

private:
    static Rational first_at_or_above(const Rational& d, const Rational& lo) {
        // Smallest grading of the form d + 2k (k >= 0) that is >= lo.
        Rational diff = lo - d;
        if (diff <= Rational(0)) return d;
        long long k = (diff / Rational(2)).ceil();
        return d + Rational(2 * k);
    }

    std::vector<Tower> towers_;
    std::vector<Finite> finites_;
};

}  // namespace floercone
