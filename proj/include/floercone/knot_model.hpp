#pragma once

// The surgery input data for a knot: the window of V-values, the table of
// reduced summands of the hook complexes A_k, the Alexander polynomial, and
// (optionally) the mirror's V-window.
//
// Conventions:
//  - V_k is stored for |k| <= g-1 (empty window when g = 0); outside the
//    window V_k = 0 for k >= g and V_k = -k for k <= -g.  H_k = V_{-k}.
//  - red[k] is a list of (offset, length) pairs: a summand tau(len) whose
//    bottom generator sits `offset` above the bottom of the tower of A_k.
//  - hfk_top_parity, when present, is the common parity of the offsets in
//    red[g-1] (0 even, 1 odd).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "floercone/alexander.hpp"
#include "floercone/graded_module.hpp"

namespace floercone {

class VHData {
public:
    VHData() : g_(0) {}  // unknot

    // window holds V_{-(g-1)} .. V_{g-1}, so size 2g-1 (empty for g = 0).
    VHData(long long g, std::vector<long long> window) : g_(g), window_(std::move(window)) {
        if (g_ < 0) throw std::invalid_argument("VHData: negative genus");
        long long want = g_ == 0 ? 0 : 2 * g_ - 1;
        if ((long long)window_.size() != want)
            throw std::invalid_argument("VHData: window size must be 2g-1");
        for (long long v : window_)
            if (v < 0) throw std::invalid_argument("VHData: negative V value");
        for (size_t i = 0; i + 1 < window_.size(); ++i)
            if (window_[i] < window_[i + 1])
                throw std::invalid_argument("VHData: V values must be non-increasing");
    }

    long long g() const { return g_; }
    const std::vector<long long>& window() const { return window_; }

    long long v_at(long long k) const {
        if (k >= g_) return 0;
        if (k <= -g_) return -k;
        return window_[k + g_ - 1];
    }
    long long h_at(long long k) const { return v_at(-k); }

    // Least i >= 0 with V_i = 0 (the "fibered-ness horizon" used by the
    // Seifert checks); always <= g.
    long long first_vanishing() const {
        for (long long i = 0; i <= g_; ++i)
            if (v_at(i) == 0) return i;
        return g_;
    }

private:
    long long g_;
    std::vector<long long> window_;
};

// red[k]: list of (offset, length) summands; keys with empty lists dropped.
class ReducedGroupTable {
public:
    using Summand = std::pair<long long, long long>;  // (offset, length)

    ReducedGroupTable() = default;
    explicit ReducedGroupTable(std::map<long long, std::vector<Summand>> table)
        : table_(std::move(table)) {
        for (auto it = table_.begin(); it != table_.end();) {
            auto& v = it->second;
            for (const auto& [off, len] : v) {
                (void)off;
                if (len <= 0) throw std::invalid_argument("ReducedGroupTable: length must be positive");
            }
            std::sort(v.begin(), v.end());
            it = v.empty() ? table_.erase(it) : std::next(it);
        }
    }

    const std::map<long long, std::vector<Summand>>& table() const { return table_; }

    std::vector<Summand> at(long long k) const {
        auto it = table_.find(k);
        return it == table_.end() ? std::vector<Summand>{} : it->second;
    }
    long long dim_at(long long k) const {
        long long s = 0;
        for (const auto& [off, len] : at(k)) { (void)off; s += len; }
        return s;
    }
    long long total_dim() const {
        long long s = 0;
        for (const auto& [k, v] : table_) { (void)v; s += dim_at(k); }
        return s;
    }
    long long euler_at(long long k) const {
        long long chi = 0;
        for (const auto& [off, len] : at(k))
            chi += (((off % 2) + 2) % 2 == 0) ? len : -len;
        return chi;
    }
    long long max_length() const {
        long long m = 0;
        for (const auto& [k, v] : table_)
            for (const auto& [off, len] : v) { (void)off; (void)k; m = std::max(m, len); }
        return m;
    }
    long long max_abs_key() const {
        long long m = 0;
        for (const auto& [k, v] : table_) { (void)v; m = std::max(m, k < 0 ? -k : k); }
        return m;
    }

    bool operator==(const ReducedGroupTable&) const = default;

private:
    std::map<long long, std::vector<Summand>> table_;
};

struct KnotSurgeryModel {
    std::string name;
    VHData vh;
    ReducedGroupTable red;
    AlexanderPolynomial alexander;
    std::optional<VHData> mirror_v;
    std::optional<int> hfk_top_parity;  // 0 even, 1 odd
    std::optional<long long> slice_genus;

    long long delta() const { return red.dim_at(0); }  // dim A_0^red
    long long total_reduced_rank_input() const {
        // q-independent part of the reduced rank of a surgery: the total
        // reduced dimension over all hook complexes plus V_0 + 2 sum V_i.
        long long s = red.total_dim() + vh.v_at(0);
        for (long long i = 1; i < vh.g(); ++i) s += 2 * vh.v_at(i);
        return s;
    }
};

struct ValidationIssue {
    std::string check;
    std::string detail;
};

inline std::vector<ValidationIssue> validate(const KnotSurgeryModel& m) {
    std::vector<ValidationIssue> issues;
    const auto& vh = m.vh;
    long long g = vh.g();

    if (m.alexander.at_one() != 1)
        issues.push_back({"alexander_normalized", "Delta(1) != 1"});

    // V window monotone and non-negative is enforced at construction; check
    // the drop-by-at-most-one property V_k - V_{k+1} <= 1 on the
    // non-negative side (the stored negative side is convention-laden).
    for (long long k = 0; k < g; ++k)
        if (vh.v_at(k) - vh.v_at(k + 1) > 1)
            issues.push_back({"v_step", "V_" + std::to_string(k) + " drops by more than 1"});

    // Reduced summands only inside the window, symmetric under k <-> -k,
    // lengths bounded by the genus.
    for (const auto& [k, v] : m.red.table()) {
        if (g == 0 || k >= g || k <= -g)
            issues.push_back({"red_support", "red[" + std::to_string(k) + "] outside |k| < g"});
        for (const auto& [off, len] : v) {
            (void)off;
            if (g > 0 && len > g)
                issues.push_back({"red_length", "summand longer than genus at k=" + std::to_string(k)});
        }
        if (m.red.at(k) != m.red.at(-k))
            issues.push_back({"red_symmetry", "red[" + std::to_string(k) + "] != red[" + std::to_string(-k) + "]"});
    }

    // Euler-characteristic consistency: t_k = V_k + chi(red_k) for k >= 0.
    long long kmax = std::max(m.alexander.degree(), g);
    for (long long k = 0; k <= kmax; ++k) {
        long long want = m.alexander.torsion(k);
        long long got = vh.v_at(k) + m.red.euler_at(k);
        if (want != got)
            issues.push_back({"euler", "t_" + std::to_string(k) + " = " + std::to_string(want) +
                                           " but V + chi(red) = " + std::to_string(got)});
    }

    // Top-group parity flag vs red[g-1] offsets.
    if (m.hfk_top_parity && g >= 1) {
        auto top = m.red.at(g - 1);
        for (const auto& [off, len] : top) {
            (void)len;
            if ((((off % 2) + 2) % 2) != *m.hfk_top_parity)
                issues.push_back({"hfk_top_parity", "offset parity at k=g-1 disagrees with flag"});
        }
    }

    if (m.mirror_v && m.mirror_v->g() != g)
        issues.push_back({"mirror_genus", "mirror window genus differs"});

    if (m.slice_genus) {
        if (*m.slice_genus < 0)
            issues.push_back({"slice_genus", "negative slice genus"});
        else if (vh.v_at(0) > (*m.slice_genus + 1) / 2)
            issues.push_back({"slice_genus", "V_0 exceeds ceil(g4/2)"});
    }

    return issues;
}

// Mirror model: swaps the V window with the mirror window and transports the
// reduced table unchanged (dimensions only; offsets are not recalibrated).
// When no mirror window is stored it is forced to zero if the model has no
// reduced part at all (L-space shape), otherwise the mirror is unavailable.
inline KnotSurgeryModel mirror(const KnotSurgeryModel& m) {
    KnotSurgeryModel out = m;
    out.name = m.name + "_mirror";
    VHData mv;
    if (m.mirror_v) {
        mv = *m.mirror_v;
    } else if (m.red.total_dim() == 0) {
        long long g = m.vh.g();
        mv = VHData(g, std::vector<long long>(g == 0 ? 0 : 2 * g - 1, 0));
    } else {
        throw std::invalid_argument("mirror: no mirror V window stored and model has reduced part");
    }
    out.vh = mv;
    out.mirror_v = m.vh;
    return out;
}

// An L-space-shaped model built from torsion coefficients: V_i = t_i on the
// non-negative side, V_{-k} = V_k + k, no reduced part, zero mirror window.
inline KnotSurgeryModel lspace_model(const AlexanderPolynomial& alex, const std::string& name = "lspace") {
    auto t = alex.torsion_coefficients();
    long long g = alex.degree();
    // L-space shape: t non-increasing, drops at most 1, t_{g-1} > 0.
    for (size_t i = 0; i + 1 < t.size(); ++i) {
        long long drop = t[i] - t[i + 1];
        if (drop < 0 || drop > 1)
            throw std::invalid_argument("lspace_model: torsion coefficients not of L-space shape");
    }
    if (g > 0 && (t.empty() || t.back() <= 0))
        throw std::invalid_argument("lspace_model: t_{g-1} must be positive");
    std::vector<long long> window;
    for (long long k = -(g - 1); k <= g - 1; ++k)
        window.push_back(k >= 0 ? t[k] : t[-k] - k);
    KnotSurgeryModel m;
    m.name = name;
    m.vh = VHData(g, window);
    m.alexander = alex;
    m.mirror_v = VHData(g, std::vector<long long>(g == 0 ? 0 : 2 * g - 1, 0));
    if (g >= 1) m.hfk_top_parity = 0;
    return m;
}

}  // namespace floercone
