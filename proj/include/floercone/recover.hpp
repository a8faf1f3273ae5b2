#pragma once

// Recover the Alexander polynomial of an L-space knot from the Heegaard Floer
// homology of one of its surgeries with slope p/q <= 1, p != 0.
//
// Across all Spin^c structures the finite summands of the surgery (together
// with, for p > 0, the per-structure maximum recovered from the d-invariant
// deficit against the lens-space value) form the multiset
//   q copies of t_0  and  2q copies of t_j for each j >= 1,
// with zero values dropped; sorting in non-increasing order therefore reads
// off the torsion coefficients directly.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "floercone/alexander.hpp"
#include "floercone/lens.hpp"
#include "floercone/surgery.hpp"

namespace floercone {

struct not_lspace_surgery_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline AlexanderPolynomial recover_alexander_lspace(const ManifoldHF& Y) {
    long long p = Y.slope.p, q = Y.slope.q;
    if (p == 0) throw std::invalid_argument("recover_alexander_lspace: slope must be nonzero");
    if (Rational(p, q) > Rational(1))
        throw std::invalid_argument("recover_alexander_lspace: slope must be <= 1");
    if ((long long)Y.structures.size() != (p < 0 ? -p : p))
        throw std::invalid_argument("recover_alexander_lspace: wrong number of Spin^c structures");

    std::vector<long long> lengths;
    for (const auto& st : Y.structures) {
        if (!st.d || st.z2)
            throw std::invalid_argument("recover_alexander_lspace: structure lacks graded data");
        for (const auto& f : st.module.finites()) lengths.push_back(f.len);
        Rational dL = lens_d(p, q, st.index);
        if (p > 0) {
            Rational m = (dL - *st.d) / Rational(2);
            if (!m.is_integer() || m.num() < 0)
                throw not_lspace_surgery_error(
                    "d-invariant deficit at structure " + std::to_string(st.index) +
                    " is not a non-negative even integer");
            if (m.num() > 0) lengths.push_back(m.num());
        } else if (*st.d != dL) {
            throw not_lspace_surgery_error(
                "d-invariant at structure " + std::to_string(st.index) +
                " differs from the lens-space value");
        }
    }

    if (lengths.empty()) {
        if (Y.total_reduced_dim() != 0)
            throw not_lspace_surgery_error("reduced part present but no finite lengths collected");
        return AlexanderPolynomial();  // unknot
    }

    long long total = (long long)lengths.size();
    if (total % q != 0 || (total / q) % 2 != 1)
        throw not_lspace_surgery_error("summand count " + std::to_string(total) +
                                       " is not q * (2g - 1) for any g");
    long long g = (total / q + 1) / 2;

    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    std::vector<long long> t;
    t.push_back(lengths[0]);
    for (long long j = 1; j < g; ++j) t.push_back(lengths[q + 2 * q * (j - 1)]);

    // L-space shape: non-increasing with drops of at most 1, t_{g-1} >= 1.
    for (long long j = 0; j + 1 < g; ++j) {
        long long drop = t[j] - t[j + 1];
        if (drop < 0 || drop > 1)
            throw not_lspace_surgery_error("recovered torsion sequence is not of L-space shape");
    }
    if (t.back() < 1)
        throw not_lspace_surgery_error("recovered top torsion coefficient vanishes");

    // The claimed multiplicities must reproduce the collected multiset exactly.
    std::vector<long long> rebuilt;
    for (long long c = 0; c < q; ++c) rebuilt.push_back(t[0]);
    for (long long j = 1; j < g; ++j)
        for (long long c = 0; c < 2 * q; ++c) rebuilt.push_back(t[j]);
    std::sort(rebuilt.begin(), rebuilt.end(), std::greater<>());
    if (rebuilt != lengths)
        throw not_lspace_surgery_error("summand multiset inconsistent with a monotone sequence");

    return AlexanderPolynomial::from_torsion(t);
}

}  // namespace floercone
