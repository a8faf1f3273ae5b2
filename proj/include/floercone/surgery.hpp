#pragma once

// Closed-form surgery formulas.  For slope p/q and Spin^c label i the mapping
// cone has upper slots (n, A_{k(n)}) with k(n) = floor((i + pn)/q) and lower
// slots (n, B); writing b_n for the grading of the bottom tower generator of
// the B-slot n and a_n for the A-slot, the chain rule is
//   a_n     = b_n + 1 - 2 V_{k(n)},
//   b_{n+1} = b_n + 2 (H_{k(n)} - V_{k(n)}),
// anchored at b_0 = d(L(p,q), i) - 1 for p > 0 and at b_1 = d(L(p,q), i) for
// p < 0 (slot 1 hosts the generator of the cokernel tower).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "floercone/graded_module.hpp"
#include "floercone/knot_model.hpp"
#include "floercone/lens.hpp"
#include "floercone/rational.hpp"

namespace floercone {

struct inconsistent_model_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Z2Table {
    long long even = 0;
    long long odd = 0;
    bool operator==(const Z2Table&) const = default;
};

struct SpincHF {
    long long index = 0;               // i in [0,|p|) for p != 0; Alexander label k for slope 0
    std::optional<Rational> d;         // d-invariant (absent for zero surgery)
    GradedModule module;
    std::optional<Z2Table> z2;         // zero surgery, k != 0: Z/2-graded dimensions only

    long long reduced_dim() const {
        if (z2) return z2->even + z2->odd;
        return module.total_finite_dim();
    }
};

struct ManifoldHF {
    Slope slope;
    std::vector<SpincHF> structures;

    long long total_reduced_dim() const {
        long long s = 0;
        for (const auto& st : structures) s += st.reduced_dim();
        return s;
    }
    long long u_annihilation_exponent() const {
        long long e = 0;
        for (const auto& st : structures)
            e = std::max(e, st.module.u_annihilation_exponent());
        return e;
    }
};

namespace detail {

// b_n for a given slot, walking the chain rule from the anchor slot.
inline Rational b_slot(const VHData& vh, long long p, long long q, long long i,
                       long long anchor_slot, const Rational& anchor_val, long long n) {
    Rational b = anchor_val;
    if (n >= anchor_slot) {
        for (long long m = anchor_slot; m < n; ++m) {
            long long k = cone_index(i, p, q, m);
            b += Rational(2 * (vh.h_at(k) - vh.v_at(k)));
        }
    } else {
        for (long long m = anchor_slot - 1; m >= n; --m) {
            long long k = cone_index(i, p, q, m);
            b -= Rational(2 * (vh.h_at(k) - vh.v_at(k)));
        }
    }
    return b;
}

inline Rational a_slot(const VHData& vh, long long p, long long q, long long i,
                       long long anchor_slot, const Rational& anchor_val, long long n) {
    Rational b = b_slot(vh, p, q, i, anchor_slot, anchor_val, n);
    return b + Rational(1 - 2 * vh.v_at(cone_index(i, p, q, n)));
}

// A symmetric slot range guaranteed to contain every n with |k(n)| <= K.
inline std::pair<long long, long long> slot_range(long long p, long long q, long long i, long long K) {
    long long bound = (K * q + q + (i < 0 ? -i : i)) / (p < 0 ? -p : p) + 2;
    return {-bound, bound};
}

inline VHData mirror_window(const KnotSurgeryModel& m) {
    if (m.mirror_v) return *m.mirror_v;
    if (m.red.total_dim() == 0) {
        long long g = m.vh.g();
        return VHData(g, std::vector<long long>(g == 0 ? 0 : 2 * g - 1, 0));
    }
    throw std::invalid_argument(
        "surgery: mirror V window required (model has a reduced part)");
}

}  // namespace detail

inline SpincHF positive_surgery(const KnotSurgeryModel& model, const Slope& s, long long i) {
    long long p = s.p, q = s.q;
    if (p <= 0) throw std::invalid_argument("positive_surgery: slope must be positive");
    if (i < 0 || i >= p) throw std::invalid_argument("positive_surgery: Spin^c index out of range");
    const VHData& vh = model.vh;

    long long k0 = floor_div(i, q);
    long long km1 = floor_div(i - p, q);
    Rational dL = lens_d(p, q, i);
    Rational d = dL - Rational(2 * std::max(vh.v_at(k0), vh.h_at(km1)));
    bool case1 = (k0 <= -km1);
    // Bottom grading of the slot-0 upper tower; both finite families walk the
    // chain rule from here.  In case 1 this coincides with the tower bottom d.
    Rational a0 = dL - Rational(2 * vh.v_at(k0));

    GradedModule mod;
    mod.add_tower(d);

    // Left family: tau_{d^-_n}(H_{floor((i - n p)/q)}).
    {
        Rational dm = a0;
        for (long long n = 1;; ++n) {
            long long k_prev = floor_div(i - (n - 1) * p, q);
            long long k = floor_div(i - n * p, q);
            dm += Rational(2 * (vh.v_at(k_prev) - vh.h_at(k)));
            if (k <= -vh.g() && n > 1) break;  // h_at vanishes from here on
            if (case1 ? n >= 1 : n >= 2) mod.add_finite(dm, vh.h_at(k));
            if (k <= -vh.g()) break;
        }
    }
    // Right family: tau_{d^+_n}(V_{floor((i + n p)/q)}); n >= 0 in case 2.
    {
        if (!case1) mod.add_finite(a0, vh.v_at(k0));
        Rational dp = a0;
        for (long long n = 1;; ++n) {
            long long k_prev = floor_div(i + (n - 1) * p, q);
            long long k = floor_div(i + n * p, q);
            dp += Rational(2 * (vh.h_at(k_prev) - vh.v_at(k)));
            if (k >= vh.g()) break;  // v_at vanishes from here on
            mod.add_finite(dp, vh.v_at(k));
        }
    }

    // Reduced summands: red[k(n)] placed at a_n + offset.
    if (model.red.total_dim() > 0) {
        Rational b0 = dL - Rational(1);
        auto [nlo, nhi] = detail::slot_range(p, q, i, model.red.max_abs_key());
        for (long long n = nlo; n <= nhi; ++n) {
            auto summands = model.red.at(cone_index(i, p, q, n));
            if (summands.empty()) continue;
            Rational a = detail::a_slot(vh, p, q, i, 0, b0, n);
            for (const auto& [off, len] : summands)
                mod.add_finite(a + Rational(off), len);
        }
    }

    return SpincHF{i, d, mod, std::nullopt};
}

inline SpincHF negative_surgery(const KnotSurgeryModel& model, const Slope& s, long long i) {
    long long p = s.p, q = s.q;
    if (p >= 0) throw std::invalid_argument("negative_surgery: slope must be negative");
    if (i < 0 || i >= -p) throw std::invalid_argument("negative_surgery: Spin^c index out of range");
    const VHData& vh = model.vh;
    VHData mv = detail::mirror_window(model);

    Rational dL = lens_d(p, q, i);
    long long N = std::max(mv.v_at(floor_div(i, q)), mv.h_at(floor_div(i + p, q)));
    Rational d = dL + Rational(2 * N);

    GradedModule mod;
    mod.add_tower(d);
    Rational anchor = dL;  // b_1

    // Kernel of the truncated map: per slot, tau_{a_n}(min(V_{k(n)}, H_{k(n)})).
    {
        auto [nlo, nhi] = detail::slot_range(p, q, i, std::max<long long>(vh.g(), 1));
        for (long long n = nlo; n <= nhi; ++n) {
            long long k = cone_index(i, p, q, n);
            long long len = std::min(vh.v_at(k), vh.h_at(k));
            if (len <= 0) continue;
            mod.add_finite(detail::a_slot(vh, p, q, i, 1, anchor, n), len);
        }
    }

    // Reduced summands, minus the tau(N) swallowed by the tower shift.
    GradedModule redpart;
    if (model.red.total_dim() > 0) {
        auto [nlo, nhi] = detail::slot_range(p, q, i, model.red.max_abs_key());
        for (long long n = nlo; n <= nhi; ++n) {
            auto summands = model.red.at(cone_index(i, p, q, n));
            if (summands.empty()) continue;
            Rational a = detail::a_slot(vh, p, q, i, 1, anchor, n);
            for (const auto& [off, len] : summands)
                redpart.add_finite(a + Rational(off), len);
        }
    }
    if (N > 0) {
        if (!redpart.remove_finite(dL + Rational(1), N))
            throw inconsistent_model_error(
                "negative_surgery: reduced part lacks the tau(" + std::to_string(N) +
                ") summand at d(L)+1 required by the tower shift");
    }
    mod = mod.direct_sum(redpart);

    return SpincHF{i, d, mod, std::nullopt};
}

inline SpincHF zero_surgery(const KnotSurgeryModel& model, long long k) {
    const VHData& vh = model.vh;
    if (k != 0) {
        long long ka = k < 0 ? -k : k;
        Z2Table t;
        t.even += vh.v_at(ka);  // tau(V_|k|) sits in the even grading
        for (const auto& [off, len] : model.red.at(ka))
            (((off % 2) + 2) % 2 == 0 ? t.even : t.odd) += len;
        return SpincHF{k, std::nullopt, GradedModule{}, t};
    }
    long long v0bar = detail::mirror_window(model).v_at(0);
    long long v0 = vh.v_at(0);
    GradedModule mod;
    mod.add_tower(Rational(-1, 2) + Rational(2 * v0bar));
    Rational lower = Rational(1, 2) - Rational(2 * v0);
    mod.add_tower(lower);
    GradedModule redpart;
    for (const auto& [off, len] : model.red.at(0))
        redpart.add_finite(lower + Rational(off), len);
    if (v0bar > 0) {
        if (!redpart.remove_finite(Rational(1, 2), v0bar))
            throw inconsistent_model_error(
                "zero_surgery: reduced part lacks the tau(" + std::to_string(v0bar) +
                ") summand at grading 1/2 required by the tower shift");
    }
    mod = mod.direct_sum(redpart);
    return SpincHF{0, std::nullopt, mod, std::nullopt};
}

inline ManifoldHF full_surgery(const KnotSurgeryModel& model, const Slope& s) {
    ManifoldHF out;
    out.slope = s;
    if (s.p > 0) {
        for (long long i = 0; i < s.p; ++i)
            out.structures.push_back(positive_surgery(model, s, i));
    } else if (s.p < 0) {
        for (long long i = 0; i < -s.p; ++i)
            out.structures.push_back(negative_surgery(model, s, i));
    } else {
        long long g = model.vh.g();
        for (long long k = -(g - 1); k <= std::max<long long>(g - 1, 0); ++k)
            out.structures.push_back(zero_surgery(model, k));
        if (g == 0 && out.structures.empty())
            out.structures.push_back(zero_surgery(model, 0));
    }
    return out;
}

// Predicted total reduced rank of p/q surgery (p != 0):
//   q (delta + V_0 + 2 sum_{i=1}^{g-1} V_i) - sum_{i=0}^{|p|-1} C_i,
// where C_i = max(V_{floor(i/q)}, H_{floor((i-p)/q)}) for p > 0 and
// C_i = max(Vbar_{floor(i/q)}, Hbar_{floor((i+p)/q)}) for p < 0.
inline long long reduced_rank_formula(const KnotSurgeryModel& model, const Slope& s) {
    long long p = s.p, q = s.q;
    if (p == 0) throw std::invalid_argument("reduced_rank_formula: slope must be nonzero");
    long long total = q * model.total_reduced_rank_input();
    long long corr = 0;
    if (p > 0) {
        for (long long i = 0; i < p; ++i)
            corr += std::max(model.vh.v_at(floor_div(i, q)), model.vh.h_at(floor_div(i - p, q)));
    } else {
        VHData mv = detail::mirror_window(model);
        for (long long i = 0; i < -p; ++i)
            corr += std::max(mv.v_at(floor_div(i, q)), mv.h_at(floor_div(i + p, q)));
    }
    return total - corr;
}

}  // namespace floercone
