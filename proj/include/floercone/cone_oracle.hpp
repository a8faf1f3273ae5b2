#pragma once

// Independent check of the closed-form surgery answers: build a finite
// truncation of the mapping cone as an explicit graded complex over a prime
// field, take homology by Gaussian elimination, and compare dimensions per
// grading against the closed form on the grading range where the truncation
// is provably exact.
//
// The cone keeps upper (A) slots n in [-W, W] and lower (B) slots
// n in [-W, W+1], each tower cut to its bottom rungs.  Both rows have zero
// internal differential, so the only map is D : A -> B (degree -1) and
//   dim H_g = (dim A_g - rank D_g) + (dim B_g - rank D_{g+1}).
// Deleting material above grading G or in slots beyond the window only
// disturbs homology at gradings >= G - 1, which gives the validity ceiling.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "floercone/knot_model.hpp"
#include "floercone/lens.hpp"
#include "floercone/surgery.hpp"

namespace floercone {

struct OracleOptions {
    long long window = 0;      // 0 = auto
    long long height = 0;      // 0 = auto
    int characteristic = 2;
    std::uint64_t seed = 1;
};

namespace fp {

inline int inv_mod(int a, int p) {
    // p is a small prime; Fermat.
    int r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline long long rank_mod_p(std::vector<std::vector<int>> m, int p) {
    long long rank = 0;
    size_t rows = m.size();
    if (rows == 0) return 0;
    size_t cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        int inv = inv_mod(((m[r][c] % p) + p) % p, p);
        for (size_t rr = r + 1; rr < rows; ++rr) {
            int f = ((m[rr][c] % p) + p) % p;
            if (f == 0) continue;
            int mult = (int)((long long)f * inv % p);
            for (size_t cc = c; cc < cols; ++cc)
                m[rr][cc] = (int)(((m[rr][cc] - (long long)mult * m[r][cc]) % p + p) % p);
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace fp

class TruncatedCone {
public:
    // Gradings are stored as integer offsets from d(L(p,q), i); every basis
    // element of the cone sits at such an offset.
    TruncatedCone(const KnotSurgeryModel& model, const Slope& s, long long i,
                  long long W, long long M, int charp, std::uint64_t seed)
        : model_(model), slope_(s), i_(i), W_(W), M_(M), charp_(charp) {
        if (s.p == 0) throw std::invalid_argument("TruncatedCone: slope must be nonzero");
        if (M < 1 || W < 1) throw std::invalid_argument("TruncatedCone: window/height must be positive");
        if (charp < 2) throw std::invalid_argument("TruncatedCone: characteristic must be a prime >= 2");
        anchor_ = lens_d(s.p, s.q, i);
        build(seed);
    }

    // Exact-range bounds (inclusive), as offsets from the anchor grading.
    long long valid_lo() const { return lo_; }
    long long valid_hi() const { return hi_; }
    bool red_support_covered() const { return red_covered_; }
    // For p < 0: whether the window clears the V/H support so the discarded
    // tails cancel in pairs.  Always true for p > 0.
    bool tails_acyclic() const { return tails_ok_; }
    const Rational& anchor() const { return anchor_; }

    // dim H at each grading anchor+key for key in [lo, hi].
    std::map<long long, long long> homology_dims(long long lo, long long hi) const {
        std::map<long long, long long> rank;
        std::map<long long, std::vector<std::vector<int>>> mats;
        for (long long gk = lo; gk <= hi + 1; ++gk) {
            auto ait = a_at_.find(gk);
            if (ait == a_at_.end()) continue;
            auto bit = b_at_.find(gk - 1);
            size_t ncols = bit == b_at_.end() ? 0 : bit->second.size();
            if (ncols == 0) { rank[gk] = 0; continue; }
            std::map<int, size_t> colof;
            for (size_t c = 0; c < ncols; ++c) colof[bit->second[c]] = c;
            std::vector<std::vector<int>> m;
            for (int aid : ait->second) {
                std::vector<int> row(ncols, 0);
                for (const auto& [bid, coeff] : images_[aid]) {
                    auto f = colof.find(bid);
                    if (f != colof.end()) row[f->second] = coeff;
                }
                m.push_back(std::move(row));
            }
            rank[gk] = fp::rank_mod_p(std::move(m), charp_);
        }
        auto dimv = [](const std::map<long long, std::vector<int>>& at, long long k) -> long long {
            auto it = at.find(k);
            return it == at.end() ? 0 : (long long)it->second.size();
        };
        auto rk = [&](long long k) -> long long {
            auto it = rank.find(k);
            return it == rank.end() ? 0 : it->second;
        };
        std::map<long long, long long> out;
        for (long long gk = lo; gk <= hi; ++gk) {
            long long h = (dimv(a_at_, gk) - rk(gk)) + (dimv(b_at_, gk) - rk(gk + 1));
            if (h != 0) out[gk] = h;
        }
        return out;
    }

private:
    void build(std::uint64_t seed) {
        long long p = slope_.p, q = slope_.q;
        const VHData& vh = model_.vh;

        // Bottom gradings (as integer offsets from the anchor) for a wide
        // range of slots; for p > 0, widened until the out-of-window bottoms
        // climb.  For p < 0 the bottoms sink in both directions, but there the
        // slot truncation is exact at every grading: the discarded right tail
        // pairs A_n with B_{n+1} through the h-isomorphism and the left tail
        // pairs A_n with B_n through the v-isomorphism, so both tails are
        // acyclic once the window clears the support of V, H and the reduced
        // part.  Record that clearance in tails_ok_ instead of a grading bound.
        long long wide = 3 * W_ + 12;
        for (int attempt = 0; attempt < 8; ++attempt) {
            bkey_.clear();
            akey_.clear();
            long long banchor_slot = p > 0 ? 0 : 1;
            long long banchor_off = p > 0 ? -1 : 0;  // b relative to d(L)
            bkey_[banchor_slot] = banchor_off;
            for (long long n = banchor_slot; n < wide + 1; ++n) {
                long long k = cone_index(i_, p, q, n);
                bkey_[n + 1] = bkey_[n] + 2 * (vh.h_at(k) - vh.v_at(k));
            }
            for (long long n = banchor_slot; n > -wide; --n) {
                long long k = cone_index(i_, p, q, n - 1);
                bkey_[n - 1] = bkey_[n] - 2 * (vh.h_at(k) - vh.v_at(k));
            }
            for (long long n = -wide; n <= wide; ++n)
                akey_[n] = bkey_[n] + 1 - 2 * vh.v_at(cone_index(i_, p, q, n));

            if (p < 0) {
                outside_bottom_ = LLONG_MAX;
                // k(n) is non-increasing, so the boundary slots decide.
                tails_ok_ = vh.h_at(cone_index(i_, p, q, W_ + 1)) == 0 &&
                            vh.v_at(cone_index(i_, p, q, -W_ - 1)) == 0;
                break;
            }
            long long outside = LLONG_MAX, edge = LLONG_MAX;
            for (long long n = -wide; n <= wide; ++n) {
                if (n >= -W_ && n <= W_) continue;
                long long bot = std::min(akey_[n], bkey_[n]);
                outside = std::min(outside, bot);
                if (n <= -wide + 2 || n >= wide - 2) edge = std::min(edge, bot);
            }
            outside_bottom_ = outside;
            if (edge > outside + 4 || wide > 1000000) break;
            wide *= 2;
        }

        // Reduced support must fall inside the window.
        red_covered_ = true;
        if (model_.red.total_dim() > 0) {
            auto [nlo, nhi] = detail::slot_range(p, q, i_, model_.red.max_abs_key());
            for (long long n = nlo; n <= nhi; ++n)
                if (!model_.red.at(cone_index(i_, p, q, n)).empty() && (n < -W_ || n > W_))
                    red_covered_ = false;
        }

        // Extra B-height so every image of a reduced generator is representable.
        long long pad = 2;
        for (const auto& [k, v] : model_.red.table())
            for (const auto& [off, len] : v) {
                (void)k;
                pad = std::max(pad, (off + 2 * len) / 2 + vh.g() + 2);
            }
        long long MB = M_ + pad;

        // For p > 0 every kept tower keeps M rungs from its own bottom; the
        // validity ceiling then comes from the out-of-window bottoms.  For
        // p < 0 the kept bottoms sink toward the window edges, so instead cut
        // all towers at a common absolute ceiling reaching M rungs above the
        // highest kept bottom.
        long long ceil_a = LLONG_MIN, ceil_b = LLONG_MIN;
        if (p < 0) {
            for (long long n = -W_; n <= W_; ++n) ceil_a = std::max(ceil_a, akey_[n]);
            for (long long n = -W_; n <= W_ + 1; ++n) ceil_b = std::max(ceil_b, bkey_[n]);
            ceil_a += 2 * (M_ - 1);
            ceil_b = std::max(ceil_b, ceil_a) + 2 * pad;
        }

        std::mt19937_64 rng(seed);
        auto rnd_scalar = [&]() { return (int)(rng() % (std::uint64_t)charp_); };
        auto rnd_nonzero = [&]() { return (int)(1 + rng() % (std::uint64_t)(charp_ - 1)); };

        // B basis.
        std::map<std::pair<long long, long long>, int> bid;  // (slot, grading key) -> id
        int nb = 0;
        for (long long n = -W_; n <= W_ + 1; ++n)
            for (long long t = 0;; ++t) {
                long long gk = bkey_[n] + 2 * t;
                if (p > 0 ? t >= MB : gk > ceil_b) break;
                bid[{n, gk}] = nb;
                b_at_[gk].push_back(nb);
                ++nb;
            }
        auto b_lookup = [&](long long slot, long long gk) -> std::optional<int> {
            if (slot < -W_ || slot > W_ + 1) return std::nullopt;
            if (gk < bkey_[slot]) return std::nullopt;  // killed by the U-power
            if ((gk - bkey_[slot]) % 2 != 0) return std::nullopt;  // off the tower parity
            auto it = bid.find({slot, gk});
            if (it == bid.end())
                throw std::logic_error("TruncatedCone: image above kept B height");
            return it->second;
        };

        // A basis: tower rungs plus reduced summands, with their D-images.
        int na = 0;
        auto add_a = [&](long long gk, std::vector<std::pair<int, int>> img) {
            a_at_[gk].push_back(na);
            images_.push_back(std::move(img));
            ++na;
        };
        for (long long n = -W_; n <= W_; ++n) {
            long long k = cone_index(i_, p, q, n);
            for (long long t = 0;; ++t) {
                long long gk = akey_[n] + 2 * t;
                if (p > 0 ? t >= M_ : gk > ceil_a) break;
                std::vector<std::pair<int, int>> img;
                if (auto b = b_lookup(n, gk - 1)) img.push_back({*b, 1});
                if (auto b = b_lookup(n + 1, gk - 1)) img.push_back({*b, 1});
                (void)k;
                add_a(gk, std::move(img));
            }
            for (const auto& [off, len] : model_.red.at(k)) {
                int cv = 0, ch = 0;
                if (p > 0) {
                    cv = rnd_scalar();
                    ch = rnd_scalar();
                } else if (off >= 0 && off % 2 == 0 && off / 2 < M_) {
                    // Attach through the tower so the image of the reduced part
                    // stays inside the image of the truncated map.
                    cv = ch = rnd_nonzero();
                }
                for (long long t = 0; t < len; ++t) {
                    long long gk = akey_[n] + off + 2 * t;
                    std::vector<std::pair<int, int>> img;
                    if (cv)
                        if (auto b = b_lookup(n, gk - 1)) img.push_back({*b, cv});
                    if (ch)
                        if (auto b = b_lookup(n + 1, gk - 1)) img.push_back({*b, ch});
                    add_a(gk, std::move(img));
                }
            }
        }

        // Validity range.
        long long inside_top;
        if (p < 0) {
            inside_top = ceil_a;
        } else {
            inside_top = LLONG_MAX;
            for (long long n = -W_; n <= W_; ++n)
                inside_top = std::min(inside_top, akey_[n] + 2 * (M_ - 1));
            for (long long n = -W_; n <= W_ + 1; ++n)
                inside_top = std::min(inside_top, bkey_[n] + 2 * (MB - 1));
        }
        hi_ = std::min(inside_top + 2, outside_bottom_) - 2;
        lo_ = LLONG_MAX;
        for (const auto& [gk, v] : a_at_) { (void)v; lo_ = std::min(lo_, gk); }
        for (const auto& [gk, v] : b_at_) { (void)v; lo_ = std::min(lo_, gk); }
    }

    KnotSurgeryModel model_;
    Slope slope_;
    long long i_;
    long long W_, M_;
    int charp_;
    Rational anchor_;
    std::map<long long, long long> akey_, bkey_;
    std::map<long long, std::vector<int>> a_at_, b_at_;
    std::vector<std::vector<std::pair<int, int>>> images_;
    long long lo_ = 0, hi_ = 0, outside_bottom_ = 0;
    bool red_covered_ = true;
    bool tails_ok_ = true;
};

struct OracleSpincResult {
    long long index = 0;
    bool conclusive = false;
    bool match = false;
    bool stable = false;
    long long window = 0, height = 0;
    Rational lo, hi;
    std::vector<Rational> mismatch_gradings;
};

struct OracleReport {
    Slope slope;
    int characteristic = 2;
    std::uint64_t seed = 1;
    std::vector<OracleSpincResult> structures;
    bool all_match() const {
        for (const auto& r : structures)
            if (!(r.conclusive && r.match && r.stable)) return false;
        return !structures.empty();
    }
};

namespace detail {

inline std::map<long long, long long> closed_form_dims(const SpincHF& hf, const Rational& anchor,
                                                       long long lo, long long hi) {
    auto dims = hf.module.dims_in_range(anchor + Rational(lo), anchor + Rational(hi));
    std::map<long long, long long> out;
    for (const auto& [g, n] : dims) {
        Rational off = g - anchor;
        if (!off.is_integer()) throw std::logic_error("closed_form_dims: non-integer offset");
        out[off.num()] = n;
    }
    return out;
}

}  // namespace detail

inline OracleSpincResult oracle_compare_spinc(const KnotSurgeryModel& model, const Slope& s,
                                              long long i, const OracleOptions& opt) {
    OracleSpincResult res;
    res.index = i;
    if (s.p < 0) {
        // The generated attaching maps factor through the truncated map's
        // image, which realizes a cone with vanishing tower shift; models
        // declaring a nonzero mirror window cannot be cross-checked this way.
        VHData mv = detail::mirror_window(model);
        if (std::max(mv.v_at(floor_div(i, s.q)), mv.h_at(floor_div(i + s.p, s.q))) > 0)
            return res;  // inconclusive
    }
    SpincHF closed = s.p > 0 ? positive_surgery(model, s, i) : negative_surgery(model, s, i);
    Rational anchor = lens_d(s.p, s.q, i);

    // Grading ceiling the comparison must reach: a bit above everything the
    // closed form contains, to catch spurious extra classes too.
    long long need_hi = 2;
    for (const auto& f : closed.module.finites()) {
        Rational top = f.d + Rational(2 * f.len) - anchor;
        if (top.is_integer()) need_hi = std::max(need_hi, top.num() + 2);
    }
    {
        Rational dt = *closed.d - anchor;
        need_hi = std::max(need_hi, dt.num() + 4);
    }

    long long g = model.vh.g();
    long long W = opt.window;
    long long M = opt.height;
    if (W == 0) W = std::max<long long>({2, (g * s.q) / (s.p < 0 ? -s.p : s.p) + 2,
                                         model.red.max_abs_key() * s.q / (s.p < 0 ? -s.p : s.p) + 2});
    if (M == 0) M = need_hi / 2 + g + model.red.max_length() + 4;

    for (int attempt = 0; attempt < 5; ++attempt, W += 2, M += need_hi / 2 + 4) {
        TruncatedCone cone(model, s, i, W, M, opt.characteristic, opt.seed);
        if (!cone.red_support_covered() || !cone.tails_acyclic() || cone.valid_hi() < need_hi)
            continue;
        long long lo = cone.valid_lo();
        long long hi = cone.valid_hi();
        auto got = cone.homology_dims(lo, hi);
        auto want = detail::closed_form_dims(closed, anchor, lo, hi);
        res.conclusive = true;
        res.window = W;
        res.height = M;
        res.lo = anchor + Rational(lo);
        res.hi = anchor + Rational(hi);
        res.match = true;
        for (long long gk = lo; gk <= hi; ++gk) {
            long long a = got.count(gk) ? got.at(gk) : 0;
            long long b = want.count(gk) ? want.at(gk) : 0;
            if (a != b) {
                res.match = false;
                res.mismatch_gradings.push_back(anchor + Rational(gk));
            }
        }
        // Stability: same answers from a strictly larger truncation.
        TruncatedCone bigger(model, s, i, W + 1, M + 2, opt.characteristic, opt.seed + 1);
        res.stable = bigger.red_support_covered() && bigger.tails_acyclic() &&
                     bigger.valid_hi() >= hi && bigger.homology_dims(lo, hi) == got;
        break;
    }
    return res;
}

inline OracleReport oracle_compare(const KnotSurgeryModel& model, const Slope& s,
                                   const OracleOptions& opt = {}) {
    if (s.p == 0) throw std::invalid_argument("oracle_compare: zero slope not supported");
    OracleReport rep;
    rep.slope = s;
    rep.characteristic = opt.characteristic;
    rep.seed = opt.seed;
    for (long long i = 0; i < s.structure_count(); ++i)
        rep.structures.push_back(oracle_compare_spinc(model, s, i, opt));
    return rep;
}

}  // namespace floercone
