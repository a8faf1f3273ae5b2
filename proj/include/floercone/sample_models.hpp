#pragma once

// Curated knot models used by the bundled examples and the test suite.

#include <map>
#include <string>
#include <vector>

#include "floercone/knot_model.hpp"

namespace floercone {

inline KnotSurgeryModel unknot_model() {
    KnotSurgeryModel m;
    m.name = "unknot";
    return m;
}

// T_{p,2} torus knots (p odd >= 3): genus (p-1)/2, Delta alternating,
// L-space shape with V read off the torsion coefficients.
inline KnotSurgeryModel torus_2_model(long long p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("torus_2_model: p must be odd and >= 3");
    long long g = (p - 1) / 2;
    std::map<long long, long long> c;
    for (long long i = 0; i <= g; ++i) c[i] = ((g - i) % 2 == 0) ? 1 : -1;
    return lspace_model(AlexanderPolynomial(c), "torus_" + std::to_string(p) + "_2");
}

inline KnotSurgeryModel trefoil_model() { return torus_2_model(3); }

// The K_n family: genus 2n+2, zero V window, reduced summands tau(1) at
// k = +-(2n+1) with offset -1 (calibrated so that slope -4 reproduces the
// known surgery description), lens-space-equal correction terms (zero mirror
// window).  K_0 is the mirror of 9_42.
inline KnotSurgeryModel k_family_model(long long n) {
    if (n < 0) throw std::invalid_argument("k_family_model: n must be >= 0");
    long long g = 2 * n + 2;
    KnotSurgeryModel m;
    m.name = "k" + std::to_string(n);
    m.vh = VHData(g, std::vector<long long>(2 * g - 1, 0));
    m.red = ReducedGroupTable({{2 * n + 1, {{-1, 1}}}, {-(2 * n + 1), {{-1, 1}}}});
    std::map<long long, long long> c;
    if (n == 0) {
        c = {{0, -1}, {1, 2}, {2, -1}};
    } else {
        c = {{0, 1}, {2 * n, -1}, {2 * n + 1, 2}, {2 * n + 2, -1}};
    }
    m.alexander = AlexanderPolynomial(c);
    m.mirror_v = VHData(g, std::vector<long long>(2 * g - 1, 0));
    m.hfk_top_parity = 1;
    return m;
}

// Figure-eight: genus 1, V = 0, one reduced generator at offset -1,
// amphichiral (mirror window equals the window).
inline KnotSurgeryModel figure_eight_model() {
    KnotSurgeryModel m;
    m.name = "figure_eight";
    m.vh = VHData(1, {0});
    m.red = ReducedGroupTable({{0, {{-1, 1}}}});
    m.alexander = AlexanderPolynomial({{0, 3}, {1, -1}});
    m.mirror_v = m.vh;
    m.hfk_top_parity = 1;
    return m;
}

}  // namespace floercone
