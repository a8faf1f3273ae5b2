#pragma once

// Symmetrized Alexander polynomials Delta(T) = a_0 + sum_{i>0} a_i (T^i + T^-i),
// normalized so that Delta(1) = 1, together with the torsion coefficients
// t_i = sum_{j>i} (j - i) a_j.  The two encodings determine each other:
//   a_i = t_{i-1} - 2 t_i + t_{i+1}   for i >= 1,
//   a_0 = 1 - 2 * sum_{i>=1} a_i.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace floercone {

class AlexanderPolynomial {
public:
    AlexanderPolynomial() { coeffs_[0] = 1; }  // unknot

    // coeffs maps i >= 0 to a_i; zero entries are dropped.
    explicit AlexanderPolynomial(const std::map<long long, long long>& coeffs) {
        for (const auto& [i, a] : coeffs) {
            if (i < 0) throw std::invalid_argument("AlexanderPolynomial: negative exponent");
            if (a != 0) coeffs_[i] = a;
        }
        if (at_one() != 1)
            throw std::invalid_argument("AlexanderPolynomial: Delta(1) != 1");
    }

    static AlexanderPolynomial from_torsion(const std::vector<long long>& t) {
        // t holds t_0 .. t_{L-1}; t_i = 0 for i >= L.
        auto tt = [&](long long i) -> long long {
            if (i < 0) throw std::invalid_argument("from_torsion: negative index");
            return i < (long long)t.size() ? t[i] : 0;
        };
        std::map<long long, long long> c;
        long long sum = 0;
        for (long long i = 1; i <= (long long)t.size(); ++i) {
            long long a = tt(i - 1) - 2 * tt(i) + tt(i + 1);
            if (a != 0) c[i] = a;
            sum += a;
        }
        c[0] = 1 - 2 * sum;
        return AlexanderPolynomial(c);
    }

    long long coeff(long long i) const {
        auto it = coeffs_.find(i < 0 ? -i : i);
        return it == coeffs_.end() ? 0 : it->second;
    }

    long long degree() const {
        long long d = 0;
        for (const auto& [i, a] : coeffs_)
            if (a != 0) d = std::max(d, i);
        return d;
    }

    // Torsion coefficients t_0 .. t_{deg-1} (empty for the unknot).
    std::vector<long long> torsion_coefficients() const {
        long long g = degree();
        std::vector<long long> t;
        for (long long i = 0; i < g; ++i) {
            long long s = 0;
            for (long long j = i + 1; j <= g; ++j) s += (j - i) * coeff(j);
            t.push_back(s);
        }
        return t;
    }

    long long torsion(long long i) const {
        if (i < 0) i = -i;
        long long s = 0;
        for (long long j = i + 1; j <= degree(); ++j) s += (j - i) * coeff(j);
        return s;
    }

    long long at_one() const {
        long long s = coeff(0);
        for (long long i = 1; i <= max_exp(); ++i) s += 2 * coeff(i);
        return s;
    }

    // |Delta(-1)|, the determinant of the knot.
    long long determinant() const {
        long long s = coeff(0);
        for (long long i = 1; i <= max_exp(); ++i)
            s += 2 * ((i % 2 == 0) ? coeff(i) : -coeff(i));
        return s < 0 ? -s : s;
    }

    bool operator==(const AlexanderPolynomial&) const = default;
    auto operator<=>(const AlexanderPolynomial&) const = default;

    // "a_0 + a_1*(T+T^-1) + ..." rendered compactly, e.g. "-1+2(T^1+T^-1)-1(T^2+T^-2)".
    std::string str() const {
        std::string out = std::to_string(coeff(0));
        for (long long i = 1; i <= max_exp(); ++i) {
            long long a = coeff(i);
            if (a == 0) continue;
            out += (a > 0 ? "+" : "-");
            out += std::to_string(a > 0 ? a : -a);
            out += "(T^" + std::to_string(i) + "+T^-" + std::to_string(i) + ")";
        }
        return out;
    }

    const std::map<long long, long long>& coeffs() const { return coeffs_; }

private:
    long long max_exp() const {
        return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
    }

    std::map<long long, long long> coeffs_;  // i >= 0 -> a_i, nonzero (plus possibly a_0 = 0)
};

}  // namespace floercone
