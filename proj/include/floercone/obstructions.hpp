#pragma once

// Derived bounds and necessary-condition predicates, applicable to a computed
// surgery description or to externally supplied manifold data.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "floercone/alexander.hpp"
#include "floercone/knot_model.hpp"
#include "floercone/lens.hpp"
#include "floercone/rational.hpp"
#include "floercone/surgery.hpp"

namespace floercone {

enum class CheckStatus { pass, fail, inapplicable };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::inapplicable;
    std::string witness;  // concrete values; required for every failure
    std::string rule;     // what the check enforces
};

struct ObstructionReport {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

// n(Y) = |H_1(Y)| + dim HF_red(Y): every realizing slope p/q has |q| <= n(Y).
inline long long slope_denominator_bound(const ManifoldHF& Y) {
    long long p = (long long)Y.structures.size();
    if (p == 0) throw std::invalid_argument("slope_denominator_bound: |H_1| must be nonzero");
    return p + Y.total_reduced_dim();
}

// M(Y, q) = (sum_i d(L(p,q), i) - sum_s d(Y, s)) / 2.  Defined for q coprime
// to p = |H_1(Y)| (the lens-space d-invariants in the definition require a
// genuine L(p, q)); other q are rejected.
inline Rational m_invariant(const ManifoldHF& Y, long long q) {
    long long p = (long long)Y.structures.size();
    if (p == 0) throw std::invalid_argument("m_invariant: |H_1| must be nonzero");
    if (q < 1) throw std::invalid_argument("m_invariant: q must be positive");
    if (p > 1 && std::gcd(p, q) != 1)
        throw std::invalid_argument("m_invariant: q must be coprime to |H_1|");
    Rational s;
    for (long long i = 0; i < p; ++i) s += lens_d(p, q, i);
    for (const auto& st : Y.structures) {
        if (!st.d) throw std::invalid_argument("m_invariant: structure lacks a d-invariant");
        s -= *st.d;
    }
    return s / Rational(2);
}

// c(Y) = max over 1 <= q <= n(Y), gcd(q, |H_1|) = 1, of (dim HF_red + M(Y,q)) / q.
inline Rational c_invariant(const ManifoldHF& Y) {
    long long p = (long long)Y.structures.size();
    if (p == 0) throw std::invalid_argument("c_invariant: |H_1| must be nonzero");
    long long n = slope_denominator_bound(Y);
    Rational dim((long long)Y.total_reduced_dim());
    std::optional<Rational> best;
    for (long long q = 1; q <= n; ++q) {
        if (std::gcd(p, q) != 1) continue;
        Rational cand = (dim + m_invariant(Y, q)) / Rational(q);
        if (!best || cand > *best) best = cand;
    }
    return *best;  // q = 1 always qualifies
}

inline CheckResult torsion_sum_check(const KnotSurgeryModel& model, const ManifoldHF& Y) {
    CheckResult r{"torsion_sum", CheckStatus::pass, "",
                  "sum of |t_i| bounded by the surgery invariant c(Y)"};
    Rational c = c_invariant(Y);
    long long s = 0;
    auto t = model.alexander.torsion_coefficients();
    for (long long v : t) s += v < 0 ? -v : v;
    r.witness = "sum|t| = " + std::to_string(s) + ", c(Y) = " + c.str();
    if (Rational(s) > c) {
        r.status = CheckStatus::fail;
        for (size_t i = 0; i < t.size(); ++i)
            if (t[i] != 0) {
                r.witness += ", first nonzero t_" + std::to_string(i) + " = " + std::to_string(t[i]);
                break;
            }
    }
    return r;
}

// g(K) <= 3 c(Y) for alternating K surgering to Y.
inline long long alternating_genus_bound(const ManifoldHF& Y) {
    Rational b = Rational(3) * c_invariant(Y);
    long long f = b.floor();
    return f < 0 ? 0 : f;
}

struct AlexCandidate {
    std::vector<long long> torsion;  // trailing zeros trimmed
    AlexanderPolynomial alexander;
    long long determinant = 0;
    bool operator==(const AlexCandidate&) const = default;
};

struct AlexEnumeration {
    std::vector<AlexCandidate> candidates;
    bool truncated = false;
    Rational c;
};

namespace detail {

inline bool murasugi_ok(const AlexanderPolynomial& a) {
    long long d = a.degree();
    for (long long i = 0; i <= d; ++i)
        if (a.coeff(i) == 0) return false;
    return true;
}

inline bool no_three_zero_torsion_below_degree(const std::vector<long long>& t, long long deg) {
    auto tt = [&](long long i) { return i < (long long)t.size() ? t[i] : 0; };
    for (long long i = 0; i + 2 <= deg - 1; ++i)
        if (tt(i) == 0 && tt(i + 1) == 0 && tt(i + 2) == 0) return false;
    return true;
}

inline void enumerate_torsion_rec(std::vector<long long>& t, size_t pos, long long budget,
                                  long long L, std::vector<std::vector<long long>>& out) {
    if ((long long)pos == L) {
        std::vector<long long> trimmed = t;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        out.push_back(std::move(trimmed));
        return;
    }
    for (long long v = -budget; v <= budget; ++v) {
        t.push_back(v);
        enumerate_torsion_rec(t, pos + 1, budget - (v < 0 ? -v : v), L, out);
        t.pop_back();
    }
}

}  // namespace detail

// All torsion sequences {t_i}, i < 3c(Y), with sum|t_i| <= c(Y), converted to
// symmetric polynomials and filtered by the alternating-knot conditions.
inline AlexEnumeration enumerate_alternating_alexander(const ManifoldHF& Y,
                                                       long long max_candidates = -1) {
    AlexEnumeration res;
    res.c = c_invariant(Y);
    long long budget = res.c.floor();
    if (budget < 0) budget = 0;
    // index range: i < 3c
    long long L = 0;
    while (Rational(L) < Rational(3) * res.c) ++L;
    std::vector<std::vector<long long>> seqs;
    std::vector<long long> t;
    detail::enumerate_torsion_rec(t, 0, budget, L, seqs);
    // Canonical deterministic order: by length, then lexicographic; sequences
    // differing only in trailing zeros collapse to one candidate.
    std::sort(seqs.begin(), seqs.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());
    for (const auto& seq : seqs) {
        AlexanderPolynomial poly = AlexanderPolynomial::from_torsion(seq);
        long long deg = poly.degree();
        if (!detail::murasugi_ok(poly)) continue;
        if (!detail::no_three_zero_torsion_below_degree(seq, deg)) continue;
        if (max_candidates >= 0 && (long long)res.candidates.size() >= max_candidates) {
            res.truncated = true;
            break;
        }
        res.candidates.push_back({seq, poly, poly.determinant()});
    }
    return res;
}

// u_annihilation_exponent(Y) <= g + V_0 (the operational form of the genus
// bound, using V_0 <= ceil(g_4 / 2)).
inline CheckResult genus_bound_check(const KnotSurgeryModel& model, const Slope& s,
                                     const ManifoldHF& Y) {
    (void)s;
    CheckResult r{"genus_bound", CheckStatus::pass, "",
                  "U^(g + V_0) annihilates the reduced homology of the surgery"};
    long long e = Y.u_annihilation_exponent();
    long long bound = model.vh.g() + model.vh.v_at(0);
    r.witness = "u_exp = " + std::to_string(e) + ", g + V_0 = " + std::to_string(bound);
    if (e > bound) r.status = CheckStatus::fail;
    return r;
}

namespace detail {

// 2m <= n - sqrt(n), decided by integer squaring.
inline bool sqrt_bound_ok(long long m, long long n) {
    long long s = n - 2 * m;
    return s >= 0 && s * s >= n;
}
inline long long sqrt_threshold(long long n) {
    // max m >= 0 with 2m <= n - sqrt(n)
    for (long long m = n / 2; m > 0; --m)
        if (sqrt_bound_ok(m, n)) return m;
    return 0;
}

inline std::optional<int> red_table_parity(const KnotSurgeryModel& m) {
    std::optional<int> par;
    for (const auto& [k, v] : m.red.table()) {
        (void)k;
        for (const auto& [off, len] : v) {
            (void)len;
            int p = (int)(((off % 2) + 2) % 2);
            if (par && *par != p) return std::nullopt;
            par = p;
        }
    }
    return par;  // nullopt when the table is empty
}

inline std::optional<int> top_parity(const KnotSurgeryModel& m) {
    long long g = m.vh.g();
    if (g >= 1 && !m.red.at(g - 1).empty()) {
        std::optional<int> par;
        for (const auto& [off, len] : m.red.at(g - 1)) {
            (void)len;
            int p = (int)(((off % 2) + 2) % 2);
            if (par && *par != p) return std::nullopt;
            par = p;
        }
        return par;
    }
    if (m.hfk_top_parity) return *m.hfk_top_parity;
    return std::nullopt;
}

}  // namespace detail

// Necessary conditions for p/q-surgery (p/q > 0) to be a negatively oriented
// Seifert fibred space.
inline ObstructionReport seifert_negative_checks(const KnotSurgeryModel& model, const Slope& s,
                                                 const ManifoldHF& Y) {
    if (s.p <= 0) throw std::invalid_argument("seifert_negative_checks: slope must be positive");
    ObstructionReport rep;
    long long g = model.vh.g();
    long long degd = model.alexander.degree();
    long long n = (Rational(s.p, s.q)).ceil();
    long long thr = detail::sqrt_threshold(n);
    long long gt = model.vh.first_vanishing();
    long long uexp = Y.u_annihilation_exponent();

    {
        CheckResult r{"u_annihilation", CheckStatus::pass, "",
                      "U^g kills the reduced homology of the surgery"};
        r.witness = "u_exp = " + std::to_string(uexp) + ", g = " + std::to_string(g);
        if (uexp > g) r.status = CheckStatus::fail;
        rep.checks.push_back(r);
    }
    {
        CheckResult r{"mccoy_genus", CheckStatus::pass, "",
                      "2 gtilde <= n - sqrt(n) for n = ceil(p/q) (negative-definite bounding)"};
        r.witness = "gtilde = " + std::to_string(gt) + ", n = " + std::to_string(n);
        if (!detail::sqrt_bound_ok(gt, n)) r.status = CheckStatus::fail;
        rep.checks.push_back(r);
    }
    {
        CheckResult r{"small_slope_torsion", CheckStatus::inapplicable, "",
                      "for 0 < p/q <= 3 all torsion coefficients are non-positive and deg = g"};
        if (Rational(s.p, s.q) <= Rational(3)) {
            r.status = CheckStatus::pass;
            for (long long i = 0; i <= std::max(g, degd); ++i)
                if (model.alexander.torsion(i) > 0) {
                    r.status = CheckStatus::fail;
                    r.witness = "t_" + std::to_string(i) + " = " +
                                std::to_string(model.alexander.torsion(i));
                    break;
                }
            if (r.status == CheckStatus::pass && degd != g) {
                r.status = CheckStatus::fail;
                r.witness = "deg = " + std::to_string(degd) + ", g = " + std::to_string(g);
            }
        }
        rep.checks.push_back(r);
    }
    {
        CheckResult r{"torsion_above_threshold", CheckStatus::pass, "",
                      "t_i <= 0 for all i >= floor((n - sqrt(n))/2)"};
        r.witness = "threshold = " + std::to_string(thr);
        for (long long i = thr; i <= std::max(g, degd); ++i)
            if (model.alexander.torsion(i) > 0) {
                r.status = CheckStatus::fail;
                r.witness += ", t_" + std::to_string(i) + " = " +
                             std::to_string(model.alexander.torsion(i));
                break;
            }
        rep.checks.push_back(r);
    }
    {
        CheckResult r{"degree_if_genus_large", CheckStatus::inapplicable, "",
                      "if g > floor((n - sqrt(n))/2) then deg = g"};
        if (g > thr) {
            r.status = degd == g ? CheckStatus::pass : CheckStatus::fail;
            r.witness = "deg = " + std::to_string(degd) + ", g = " + std::to_string(g);
        }
        rep.checks.push_back(r);
    }
    {
        CheckResult r{"degree_if_deep_u", CheckStatus::inapplicable, "",
                      "if U^floor(|H1|/2) does not kill the reduced part then deg = g"};
        if (uexp > s.p / 2) {
            r.status = degd == g ? CheckStatus::pass : CheckStatus::fail;
            r.witness = "u_exp = " + std::to_string(uexp) + ", floor(|H1|/2) = " +
                        std::to_string(s.p / 2) + ", deg = " + std::to_string(degd) +
                        ", g = " + std::to_string(g);
        }
        rep.checks.push_back(r);
    }
    {
        CheckResult r{"red_parity_odd", CheckStatus::inapplicable, "",
                      "all reduced summands of the hook complexes sit in odd parity"};
        if (model.red.total_dim() > 0) {
            auto par = detail::red_table_parity(model);
            if (!par) {
                r.status = CheckStatus::fail;
                r.witness = "mixed parity offsets";
            } else {
                r.status = *par == 1 ? CheckStatus::pass : CheckStatus::fail;
                r.witness = "offset parity = " + std::to_string(*par);
            }
        }
        rep.checks.push_back(r);
    }
    {
        CheckResult r{"top_parity_odd", CheckStatus::inapplicable, "",
                      "when a deg = g conclusion applies, the top knot group has odd parity"};
        bool deg_concl = (Rational(s.p, s.q) <= Rational(3)) || g > thr || uexp > s.p / 2;
        if (deg_concl) {
            auto par = detail::top_parity(model);
            if (par) {
                r.status = *par == 1 ? CheckStatus::pass : CheckStatus::fail;
                r.witness = "top parity = " + std::to_string(*par);
            }
        }
        rep.checks.push_back(r);
    }
    return rep;
}

// Necessary conditions for some positive surgery to be a positively oriented
// Seifert fibred space.
inline ObstructionReport seifert_positive_checks(const KnotSurgeryModel& model) {
    ObstructionReport rep;
    long long g = model.vh.g();
    long long degd = model.alexander.degree();
    {
        CheckResult r{"torsion_nonneg", CheckStatus::pass, "",
                      "all torsion coefficients are non-negative"};
        for (long long i = 0; i <= std::max(g, degd); ++i)
            if (model.alexander.torsion(i) < 0) {
                r.status = CheckStatus::fail;
                r.witness = "t_" + std::to_string(i) + " = " +
                            std::to_string(model.alexander.torsion(i));
                break;
            }
        rep.checks.push_back(r);
    }
    {
        CheckResult r{"degree", CheckStatus::pass, "", "deg of the symmetric polynomial equals g"};
        r.witness = "deg = " + std::to_string(degd) + ", g = " + std::to_string(g);
        if (degd != g) r.status = CheckStatus::fail;
        rep.checks.push_back(r);
    }
    {
        CheckResult r{"top_parity_even", CheckStatus::inapplicable, "",
                      "top knot group supported in even parity"};
        auto par = detail::top_parity(model);
        if (par) {
            r.status = *par == 0 ? CheckStatus::pass : CheckStatus::fail;
            r.witness = "top parity = " + std::to_string(*par);
        }
        rep.checks.push_back(r);
    }
    return rep;
}

// Manifold version: reduced homology concentrated in a single Z/2 grading.
inline std::optional<bool> property_s(const ManifoldHF& Y) {
    std::optional<int> par;
    for (const auto& st : Y.structures) {
        if (st.z2) {
            if (st.z2->even > 0 && st.z2->odd > 0) return false;
            if (st.z2->even + st.z2->odd > 0) {
                int p = st.z2->odd > 0 ? 1 : 0;
                if (par && *par != p) return false;
                par = p;
            }
            continue;
        }
        if (!st.d) return std::nullopt;
        auto p = st.module.finite_parity(*st.d);
        if (!p && !st.module.finites().empty()) return false;
        if (p) {
            if (par && *par != *p) return false;
            par = *p;
        }
    }
    return true;
}

// Knot version: all reduced-table offsets share one parity.
inline bool property_s(const KnotSurgeryModel& m) {
    if (m.red.total_dim() == 0) return true;
    return detail::red_table_parity(m).has_value();
}

inline CheckResult cosmetic_exclusion(const KnotSurgeryModel& model) {
    CheckResult r{"cosmetic_exclusion", CheckStatus::inapplicable, "",
                  "no purely cosmetic surgeries on a nontrivial knot with uniform reduced parity, "
                  "and any cosmetic pair forces V_0 = V_0bar = 0"};
    bool trivial = model.alexander.degree() == 0 && model.vh.g() == 0 &&
                   model.red.total_dim() == 0;
    if (trivial) {
        r.status = CheckStatus::inapplicable;
        r.witness = "trivial model: not excluded";
        return r;
    }
    if (model.vh.v_at(0) > 0) {
        r.status = CheckStatus::pass;
        r.witness = "excluded: V_0 = " + std::to_string(model.vh.v_at(0)) + " != 0";
        return r;
    }
    if (model.mirror_v && model.mirror_v->v_at(0) > 0) {
        r.status = CheckStatus::pass;
        r.witness = "excluded: V_0bar = " + std::to_string(model.mirror_v->v_at(0)) + " != 0";
        return r;
    }
    if (property_s(model)) {
        r.status = CheckStatus::pass;
        r.witness = "excluded: nontrivial with uniform reduced parity";
        return r;
    }
    r.status = CheckStatus::fail;
    r.witness = "not excluded by these criteria";
    return r;
}

}  // namespace floercone
