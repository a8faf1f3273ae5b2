#include <catch2/catch_amalgamated.hpp>

#include "floercone/knot_model.hpp"
#include "floercone/sample_models.hpp"

using namespace floercone;

TEST_CASE("V window accessors and out-of-window extension") {
    VHData vh(2, {2, 1, 1});  // V_{-1}, V_0, V_1
    CHECK(vh.g() == 2);
    CHECK(vh.v_at(-1) == 2);
    CHECK(vh.v_at(0) == 1);
    CHECK(vh.v_at(1) == 1);
    CHECK(vh.v_at(2) == 0);   // k >= g
    CHECK(vh.v_at(5) == 0);
    CHECK(vh.v_at(-2) == 2);  // k <= -g: V_k = -k
    CHECK(vh.v_at(-7) == 7);
    CHECK(vh.h_at(1) == 2);   // H_k = V_{-k}
    CHECK(vh.h_at(-3) == 0);  // H_{-3} = V_3, and 3 >= g
    CHECK(vh.first_vanishing() == 2);

    VHData zero;  // unknot
    CHECK(zero.g() == 0);
    CHECK(zero.v_at(0) == 0);
    CHECK(zero.v_at(-3) == 3);
    CHECK(zero.first_vanishing() == 0);

    CHECK_THROWS_AS(VHData(2, {1, 1}), std::invalid_argument);      // wrong size
    CHECK_THROWS_AS(VHData(1, {-1}), std::invalid_argument);        // negative
    CHECK_THROWS_AS(VHData(2, {1, 2, 0}), std::invalid_argument);   // increasing
}

TEST_CASE("reduced group table") {
    ReducedGroupTable red({{1, {{0, 2}, {-1, 1}}}, {-1, {{-1, 1}, {0, 2}}}, {0, {}}});
    CHECK(red.at(1) == std::vector<ReducedGroupTable::Summand>{{-1, 1}, {0, 2}});
    CHECK(red.at(0).empty());  // empty entries dropped
    CHECK(red.table().count(0) == 0);
    CHECK(red.dim_at(1) == 3);
    CHECK(red.total_dim() == 6);
    CHECK(red.euler_at(1) == 1);   // +2 (even offset) - 1 (odd offset)
    CHECK(red.max_length() == 2);
    CHECK(red.max_abs_key() == 1);
    CHECK_THROWS_AS(ReducedGroupTable({{0, {{0, 0}}}}), std::invalid_argument);
}

TEST_CASE("validation accepts the curated models") {
    for (const auto& m : {unknot_model(), trefoil_model(), torus_2_model(5), torus_2_model(7),
                          k_family_model(0), k_family_model(1), k_family_model(2),
                          figure_eight_model()}) {
        auto issues = validate(m);
        INFO(m.name);
        for (const auto& i : issues) INFO(i.check << ": " << i.detail);
        CHECK(issues.empty());
    }
}

TEST_CASE("validation flags inconsistencies") {
    KnotSurgeryModel m = trefoil_model();

    SECTION("euler mismatch") {
        m.alexander = AlexanderPolynomial({{0, 3}, {1, -1}});  // figure-eight polynomial
        auto issues = validate(m);
        bool found = false;
        for (const auto& i : issues) found = found || i.check == "euler";
        CHECK(found);
    }
    SECTION("red support outside the window") {
        m.red = ReducedGroupTable({{1, {{0, 1}}}, {-1, {{0, 1}}}});  // g = 1: |k| < 1 fails
        auto issues = validate(m);
        bool found = false;
        for (const auto& i : issues) found = found || i.check == "red_support";
        CHECK(found);
    }
    SECTION("red symmetry") {
        KnotSurgeryModel f = figure_eight_model();
        f.vh = VHData(2, {1, 0, 0});
        f.mirror_v = f.vh;
        f.red = ReducedGroupTable({{1, {{-1, 1}}}});
        auto issues = validate(f);
        bool found = false;
        for (const auto& i : issues) found = found || i.check == "red_symmetry";
        CHECK(found);
    }
    SECTION("top parity flag") {
        KnotSurgeryModel f = figure_eight_model();
        f.hfk_top_parity = 0;  // offsets at k = g-1 are odd
        auto issues = validate(f);
        bool found = false;
        for (const auto& i : issues) found = found || i.check == "hfk_top_parity";
        CHECK(found);
    }
    SECTION("slice genus bound") {
        KnotSurgeryModel t = trefoil_model();
        t.slice_genus = 0;  // V_0 = 1 > ceil(0/2)
        auto issues = validate(t);
        bool found = false;
        for (const auto& i : issues) found = found || i.check == "slice_genus";
        CHECK(found);
        t.slice_genus = 1;
        CHECK(validate(t).empty());
    }
}

TEST_CASE("L-space model construction") {
    KnotSurgeryModel t = trefoil_model();
    CHECK(t.vh.g() == 1);
    CHECK(t.vh.v_at(0) == 1);
    CHECK(t.red.total_dim() == 0);
    CHECK(t.hfk_top_parity == 0);

    KnotSurgeryModel t52 = torus_2_model(5);
    CHECK(t52.vh.g() == 2);
    CHECK(t52.vh.window() == std::vector<long long>{2, 1, 1});
    CHECK(t52.alexander.torsion_coefficients() == std::vector<long long>{1, 1});

    // Non-L-space-shaped input is rejected.
    CHECK_THROWS_AS(lspace_model(AlexanderPolynomial({{0, 3}, {1, -1}})),
                    std::invalid_argument);  // t_0 = -1 < 0 shape
}

TEST_CASE("mirror models") {
    KnotSurgeryModel mt = mirror(trefoil_model());
    CHECK(mt.vh.v_at(0) == 0);
    CHECK(mt.mirror_v->v_at(0) == 1);
    CHECK(mt.name == "torus_3_2_mirror");
    CHECK(mirror(mirror(trefoil_model())).vh.window() == trefoil_model().vh.window());

    // Amphichiral model mirrors to itself on the window.
    KnotSurgeryModel f = mirror(figure_eight_model());
    CHECK(f.vh.window() == figure_eight_model().vh.window());

    // A model with a reduced part but no stored mirror window cannot mirror.
    KnotSurgeryModel broken = figure_eight_model();
    broken.mirror_v.reset();
    CHECK_THROWS_AS(mirror(broken), std::invalid_argument);
}

TEST_CASE("reduced rank input counts the full table") {
    KnotSurgeryModel k0 = k_family_model(0);
    CHECK(k0.delta() == 0);                       // nothing at k = 0
    CHECK(k0.total_reduced_rank_input() == 2);    // tau(1) at k = 1 and k = -1
    CHECK(trefoil_model().total_reduced_rank_input() == 1);  // V_0 = 1
    CHECK(torus_2_model(5).total_reduced_rank_input() == 3); // 1 + 2*1
    CHECK(figure_eight_model().total_reduced_rank_input() == 1);
}

TEST_CASE("k family data") {
    KnotSurgeryModel k1 = k_family_model(1);
    CHECK(k1.vh.g() == 4);
    CHECK(k1.red.at(3) == std::vector<ReducedGroupTable::Summand>{{-1, 1}});
    CHECK(k1.alexander.torsion(3) == -1);
    CHECK(k1.alexander.torsion(0) == 0);
    CHECK(k1.alexander.torsion(2) == 0);
    CHECK_THROWS_AS(k_family_model(-1), std::invalid_argument);
}
