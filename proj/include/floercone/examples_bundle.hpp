#pragma once

// The bundled example set: sample models, one external manifold, and the
// golden outputs regenerated by `floercone examples`.  Everything here is
// deterministic, so the emitted tree is byte-stable.

#include <filesystem>
#include <string>

#include "floercone/io.hpp"
#include "floercone/obstructions.hpp"
#include "floercone/recover.hpp"
#include "floercone/sample_models.hpp"

namespace floercone {

inline std::string slope_tag(const Slope& s) {
    std::string t = std::to_string(s.p) + "_" + std::to_string(s.q);
    for (auto& c : t)
        if (c == '-') c = 'm';
    return t;
}

inline void write_examples(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(dir) / "models");
    fs::create_directories(fs::path(dir) / "manifolds");
    fs::create_directories(fs::path(dir) / "outputs");

    auto put = [&](const fs::path& rel, const std::string& content) {
        write_file((fs::path(dir) / rel).string(), content);
    };

    std::vector<KnotSurgeryModel> models = {
        unknot_model(),        trefoil_model(),      torus_2_model(5), torus_2_model(7),
        k_family_model(0),     k_family_model(1),    figure_eight_model(),
    };
    for (const auto& m : models)
        put(fs::path("models") / (m.name + ".json"), dump_doc(model_to_json(m)));

    ManifoldHF teragaito = full_surgery(k_family_model(0), Slope(-4, 1));
    put(fs::path("manifolds") / "teragaito_y.json", dump_doc(manifold_to_json(teragaito)));

    auto compute_out = [&](const KnotSurgeryModel& m, const Slope& s) {
        ManifoldHF Y = full_surgery(m, s);
        put(fs::path("outputs") / (m.name + "_slope_" + slope_tag(s) + ".json"),
            dump_doc(manifold_to_json(Y)));
        return Y;
    };

    compute_out(k_family_model(0), Slope(-4, 1));
    compute_out(trefoil_model(), Slope(1, 1));
    compute_out(trefoil_model(), Slope(-1, 1));
    compute_out(trefoil_model(), Slope(0, 1));
    compute_out(torus_2_model(5), Slope(-3, 2));
    compute_out(unknot_model(), Slope(7, 3));
    compute_out(figure_eight_model(), Slope(1, 1));

    // Human table for the headline example.
    put(fs::path("outputs") / "k0_slope_m4_1.txt",
        manifold_table(full_surgery(k_family_model(0), Slope(-4, 1))));

    // Obstruction suite on the external manifold with the K_0 model.
    {
        json j;
        j["schema"] = 1;
        j["type"] = "obstruction_report";
        j["manifold_slope"] = teragaito.slope.str();
        j["n_bound"] = slope_denominator_bound(teragaito);
        j["m_invariant_q1"] = m_invariant(teragaito, 1).str();
        j["c_invariant"] = c_invariant(teragaito).str();
        j["alternating_genus_bound"] = alternating_genus_bound(teragaito);
        std::vector<CheckResult> checks;
        checks.push_back(torsion_sum_check(k_family_model(0), teragaito));
        checks.push_back(genus_bound_check(k_family_model(0), Slope(-4, 1), teragaito));
        checks.push_back(cosmetic_exclusion(k_family_model(0)));
        auto wu = seifert_positive_checks(k_family_model(0));
        for (const auto& c : wu.checks) checks.push_back(c);
        KnotSurgeryModel mk0 = mirror(k_family_model(0));
        ManifoldHF minusY = full_surgery(mk0, Slope(4, 1));
        auto neg = seifert_negative_checks(mk0, Slope(4, 1), minusY);
        for (const auto& c : neg.checks) checks.push_back(c);
        j["checks"] = checks_to_json(checks);
        put(fs::path("outputs") / "teragaito_obstruct.json", dump_doc(j));
    }

    // Alternating-candidate enumeration for the external manifold.
    put(fs::path("outputs") / "teragaito_enumerate.json",
        dump_doc(enumeration_to_json(enumerate_alternating_alexander(teragaito))));

    // Recovery roundtrip document.
    {
        ManifoldHF Y = full_surgery(torus_2_model(5), Slope(-3, 2));
        AlexanderPolynomial a = recover_alexander_lspace(Y);
        json j;
        j["schema"] = 1;
        j["type"] = "recovered_alexander";
        j["slope"] = Y.slope.str();
        j["alexander"] = alexander_to_json(a);
        j["torsion"] = a.torsion_coefficients();
        put(fs::path("outputs") / "torus_5_2_recover_m3_2.json", dump_doc(j));
    }

    // Oracle report for the headline example (fixed seed).
    {
        OracleOptions opt;
        opt.seed = 7;
        put(fs::path("outputs") / "k0_oracle_m4_1.json",
            dump_doc(oracle_report_to_json(oracle_compare(k_family_model(0), Slope(-4, 1), opt))));
    }
}

}  // namespace floercone
