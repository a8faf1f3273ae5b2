#pragma once

// Shared helpers for the test suite: a randomized model generator whose
// output always satisfies validate(), random slopes, and an independent
// coefficient-space enumerator used to cross-check the candidate search.

#include <map>
#include <random>
#include <set>
#include <vector>

#include "floercone/knot_model.hpp"
#include "floercone/lens.hpp"
#include "floercone/obstructions.hpp"

namespace floercone::testsupport {

inline long long pick(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + (long long)(rng() % (std::uint64_t)(hi - lo + 1));
}

// A consistent random model: genus 1..5, V-window capped by ceil((g-k)/2)
// (so every hook length stays <= g), up to 3 reduced summands mirrored to
// negative k, Alexander polynomial derived from t_k = V_k + chi(red_k),
// zero mirror window.
inline KnotSurgeryModel random_model(std::mt19937_64& rng) {
    long long g = pick(rng, 1, 5);
    std::vector<long long> V(g);
    V[g - 1] = pick(rng, 0, 1);
    for (long long k = g - 2; k >= 0; --k) {
        long long cap = (g - k + 1) / 2;
        V[k] = std::min(V[k + 1] + pick(rng, 0, 1), cap);
    }
    std::vector<long long> window;
    for (long long k = -(g - 1); k <= g - 1; ++k)
        window.push_back(k >= 0 ? V[k] : V[-k] - k);

    std::map<long long, std::vector<ReducedGroupTable::Summand>> table;
    long long nsum = pick(rng, 0, 3);
    for (long long s = 0; s < nsum; ++s) {
        long long k = pick(rng, 0, g - 1);
        long long off = pick(rng, -3, 3);
        long long len = pick(rng, 1, std::min<long long>(g, 3));
        table[k].push_back({off, len});
        if (k != 0) table[-k].push_back({off, len});
    }

    KnotSurgeryModel m;
    m.name = "random";
    m.vh = VHData(g, window);
    m.red = ReducedGroupTable(table);
    std::vector<long long> t(g);
    for (long long k = 0; k < g; ++k) t[k] = V[k] + m.red.euler_at(k);
    m.alexander = AlexanderPolynomial::from_torsion(t);
    m.mirror_v = VHData(g, std::vector<long long>(2 * g - 1, 0));
    return m;
}

inline Slope random_slope(std::mt19937_64& rng, long long pmax, long long qmax,
                          bool allow_negative = true) {
    long long p = 0;
    while (p == 0) p = pick(rng, allow_negative ? -pmax : 1, pmax);
    return Slope(p, pick(rng, 1, qmax));
}

// Independent enumeration of the alternating candidates: depth-first search
// directly over symmetric-polynomial coefficients a_deg .. a_1 (all nonzero),
// computing torsion coefficients on the fly via t_{i-1} = 2 t_i - t_{i+1} + a_i
// and pruning on the running torsion budget.  Returns the set of trimmed
// torsion sequences.
inline std::set<std::vector<long long>> brute_force_alternating(const Rational& c) {
    long long budget = std::max<long long>(c.floor(), 0);
    long long L = 0;
    while (Rational(L) < Rational(3) * c) ++L;

    std::set<std::vector<long long>> out;
    out.insert(std::vector<long long>{});  // deg 0: Delta = 1

    for (long long deg = 1; deg <= L; ++deg) {
        // t[i] filled from i = deg-1 downwards; t[deg] = t[deg+1] = 0.
        std::vector<long long> a(deg + 1, 0), t(deg + 2, 0);
        auto dfs = [&](auto&& self, long long i, long long used) -> void {
            if (i == 0) {
                long long a0 = 1;
                for (long long j = 1; j <= deg; ++j) a0 -= 2 * a[j];
                if (a0 == 0) return;  // Murasugi needs every coefficient nonzero
                std::vector<long long> seq(t.begin(), t.begin() + deg);
                if (!detail::no_three_zero_torsion_below_degree(seq, deg)) return;
                out.insert(seq);
                return;
            }
            for (long long v = -4 * budget - 4; v <= 4 * budget + 4; ++v) {
                if (v == 0) continue;
                a[i] = v;
                long long ti1 = 2 * t[i] - t[i + 1] + v;  // t_{i-1}
                long long cost = ti1 < 0 ? -ti1 : ti1;
                if (used + cost > budget) continue;
                t[i - 1] = ti1;
                self(self, i - 1, used + cost);
            }
        };
        dfs(dfs, deg, 0);
    }
    return out;
}

}  // namespace floercone::testsupport
