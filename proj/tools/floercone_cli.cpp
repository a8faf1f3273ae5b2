// Command-line front end: surgery computations, oracle comparisons,
// obstruction suites, candidate enumeration, L-space recovery, and
// regeneration of the bundled examples.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "floercone/examples_bundle.hpp"
#include "floercone/io.hpp"
#include "floercone/obstructions.hpp"
#include "floercone/recover.hpp"

using namespace floercone;
namespace fs = std::filesystem;

namespace {

void emit(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content;
    } else {
        if (fs::path(out).has_parent_path())
            fs::create_directories(fs::path(out).parent_path());
        write_file(out, content);
    }
}

std::string render_manifold(const ManifoldHF& Y, const std::string& format) {
    return format == "table" ? manifold_table(Y) : dump_doc(manifold_to_json(Y));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surgery calculator for knot Floer data"};
    app.require_subcommand(1);

    std::string input, manifold_path, out, format = "doc";
    std::vector<std::string> slopes;
    long long spinc = -1, window = 0, height = 0, max_candidates = -1;
    int characteristic = 2;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* c, bool needs_model) {
        if (needs_model) c->add_option("--input", input, "knot model JSON path");
        c->add_option("--slope", slopes, "surgery slope p/q (repeatable)");
        c->add_option("--spinc", spinc, "restrict to one Spin^c structure");
        c->add_option("--format", format, "output format: doc | table");
        c->add_option("--out", out, "output path (stdout when omitted)");
    };

    auto* ccompute = app.add_subcommand("compute", "closed-form surgery description");
    add_common(ccompute, true);

    auto* coracle = app.add_subcommand("oracle", "truncated-cone homology comparison");
    add_common(coracle, true);
    coracle->add_option("--window", window, "cone slot window half-width (0 = auto)");
    coracle->add_option("--height", height, "tower truncation height (0 = auto)");
    coracle->add_option("--char", characteristic, "field characteristic (prime)");
    coracle->add_option("--seed", seed, "attaching-map RNG seed");

    auto* cobstruct = app.add_subcommand("obstruct", "obstruction suite");
    add_common(cobstruct, true);
    cobstruct->add_option("--manifold", manifold_path, "external manifold JSON path");

    auto* cenum = app.add_subcommand("enumerate", "alternating Alexander candidates");
    cenum->add_option("--manifold", manifold_path, "manifold JSON path")->required();
    cenum->add_option("--max-candidates", max_candidates, "truncate the candidate list");
    cenum->add_option("--format", format, "output format: doc | table");
    cenum->add_option("--out", out, "output path");

    auto* crecover = app.add_subcommand("recover", "recover an L-space knot's polynomial");
    crecover->add_option("--manifold", manifold_path, "manifold JSON path")->required();
    crecover->add_option("--out", out, "output path");

    auto* cexamples = app.add_subcommand("examples", "regenerate the bundled golden outputs");
    cexamples->add_option("--out", out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(cexamples)) {
            write_examples(out);
            return 0;
        }

        if (app.got_subcommand(cenum)) {
            ManifoldHF Y = manifold_from_json(load_json(manifold_path));
            auto e = enumerate_alternating_alexander(Y, max_candidates);
            if (format == "table") {
                std::ostringstream o;
                o << "c(Y) = " << e.c.str() << (e.truncated ? "   (truncated)" : "") << "\n";
                for (const auto& c : e.candidates)
                    o << c.alexander.str() << "   det " << c.determinant << "\n";
                emit(out, o.str());
            } else {
                emit(out, dump_doc(enumeration_to_json(e)));
            }
            return 0;
        }

        if (app.got_subcommand(crecover)) {
            ManifoldHF Y = manifold_from_json(load_json(manifold_path));
            try {
                AlexanderPolynomial a = recover_alexander_lspace(Y);
                json j;
                j["schema"] = 1;
                j["type"] = "recovered_alexander";
                j["slope"] = Y.slope.str();
                j["alexander"] = alexander_to_json(a);
                j["torsion"] = a.torsion_coefficients();
                emit(out, dump_doc(j));
                return 0;
            } catch (const not_lspace_surgery_error& e) {
                json j;
                j["schema"] = 1;
                j["type"] = "error";
                j["error_kind"] = "not_lspace_surgery";
                j["message"] = e.what();
                emit(out, dump_doc(j));
                return 2;
            }
        }

        // Remaining subcommands need a model and at least one slope.
        KnotSurgeryModel model = model_from_json(load_json(input));
        std::vector<Slope> parsed;
        for (const auto& s : slopes) parsed.push_back(Slope::parse(s));
        if (parsed.empty() && manifold_path.empty())
            throw std::invalid_argument("at least one --slope is required");

        bool multi = parsed.size() > 1;
        auto emit_one = [&](const Slope& s, const std::string& content, const std::string& ext) {
            if (multi && !out.empty()) {
                fs::create_directories(out);
                write_file((fs::path(out) / (model.name + "_slope_" + slope_tag(s) + ext)).string(),
                           content);
            } else {
                emit(out, content);
            }
        };

        if (app.got_subcommand(ccompute)) {
            for (const auto& s : parsed) {
                ManifoldHF Y;
                Y.slope = s;
                if (spinc >= 0 && s.p != 0) {
                    Y.structures.push_back(s.p > 0 ? positive_surgery(model, s, spinc)
                                                   : negative_surgery(model, s, spinc));
                } else {
                    Y = full_surgery(model, s);
                }
                emit_one(s, render_manifold(Y, format), format == "table" ? ".txt" : ".json");
            }
            return 0;
        }

        if (app.got_subcommand(coracle)) {
            OracleOptions opt;
            opt.window = window;
            opt.height = height;
            opt.characteristic = characteristic;
            opt.seed = seed;
            bool ok = true;
            for (const auto& s : parsed) {
                OracleReport rep;
                if (spinc >= 0) {
                    rep.slope = s;
                    rep.characteristic = characteristic;
                    rep.seed = seed;
                    rep.structures.push_back(oracle_compare_spinc(model, s, spinc, opt));
                } else {
                    rep = oracle_compare(model, s, opt);
                }
                ok = ok && rep.all_match();
                emit_one(s, dump_doc(oracle_report_to_json(rep)), ".json");
            }
            return ok ? 0 : 1;
        }

        if (app.got_subcommand(cobstruct)) {
            if (parsed.empty()) throw std::invalid_argument("obstruct requires --slope");
            const Slope& s = parsed.front();
            ManifoldHF Y = manifold_path.empty()
                               ? full_surgery(model, s)
                               : manifold_from_json(load_json(manifold_path));
            json j;
            j["schema"] = 1;
            j["type"] = "obstruction_report";
            j["manifold_slope"] = Y.slope.str();
            std::vector<CheckResult> checks;
            if (!Y.structures.empty() && Y.slope.p != 0) {
                j["n_bound"] = slope_denominator_bound(Y);
                j["c_invariant"] = c_invariant(Y).str();
                j["alternating_genus_bound"] = alternating_genus_bound(Y);
                checks.push_back(torsion_sum_check(model, Y));
            }
            checks.push_back(genus_bound_check(model, s, Y));
            checks.push_back(cosmetic_exclusion(model));
            for (const auto& c : seifert_positive_checks(model).checks) checks.push_back(c);
            if (s.p > 0) {
                for (const auto& c : seifert_negative_checks(model, s, Y).checks)
                    checks.push_back(c);
            } else if (s.p < 0) {
                // Evaluate the negative-orientation bullets on the mirror at |slope|.
                KnotSurgeryModel mm = mirror(model);
                Slope ms(-s.p, s.q);
                ManifoldHF mY = full_surgery(mm, ms);
                for (const auto& c : seifert_negative_checks(mm, ms, mY).checks)
                    checks.push_back(c);
            }
            j["checks"] = checks_to_json(checks);
            if (format == "table")
                emit(out, checks_table(checks));
            else
                emit(out, dump_doc(j));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
