#pragma once

// JSON (de)serialization for every document the tool consumes or emits, plus
// plain-text table rendering.  All documents carry "schema": 1; rationals are
// serialized as "num/den" strings in lowest terms.  nlohmann::json keeps
// object keys sorted, so dumps are byte-deterministic.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "floercone/cone_oracle.hpp"
#include "floercone/knot_model.hpp"
#include "floercone/obstructions.hpp"
#include "floercone/surgery.hpp"

namespace floercone {

using nlohmann::json;

inline void require_schema(const json& j, const std::string& type) {
    if (!j.is_object() || !j.contains("schema") || j.at("schema") != 1)
        throw std::invalid_argument("document must carry schema: 1");
    if (!j.contains("type") || j.at("type") != type)
        throw std::invalid_argument("expected document type '" + type + "'");
}

// ---- knot model ----

inline json model_to_json(const KnotSurgeryModel& m) {
    json j;
    j["schema"] = 1;
    j["type"] = "knot_model";
    j["name"] = m.name;
    j["genus"] = m.vh.g();
    j["v_window"] = m.vh.window();
    json red = json::object();
    for (const auto& [k, v] : m.red.table()) {
        json lst = json::array();
        for (const auto& [off, len] : v) lst.push_back(json::array({off, len}));
        red[std::to_string(k)] = lst;
    }
    j["reduced"] = red;
    json alex = json::object();
    for (const auto& [i, a] : m.alexander.coeffs())
        if (a != 0 || i == 0) alex[std::to_string(i)] = a;
    j["alexander"] = alex;
    if (m.mirror_v) j["mirror_v_window"] = m.mirror_v->window();
    if (m.hfk_top_parity) j["hfk_top_parity"] = *m.hfk_top_parity;
    if (m.slice_genus) j["slice_genus"] = *m.slice_genus;
    return j;
}

inline KnotSurgeryModel model_from_json(const json& j) {
    require_schema(j, "knot_model");
    KnotSurgeryModel m;
    m.name = j.value("name", "");
    long long g = j.at("genus").get<long long>();
    m.vh = VHData(g, j.at("v_window").get<std::vector<long long>>());
    std::map<long long, std::vector<ReducedGroupTable::Summand>> table;
    const json red = j.value("reduced", json::object());
    for (const auto& [key, lst] : red.items()) {
        long long k = std::stoll(key);
        for (const auto& e : lst)
            table[k].push_back({e.at(0).get<long long>(), e.at(1).get<long long>()});
    }
    m.red = ReducedGroupTable(table);
    std::map<long long, long long> alex;
    for (const auto& [key, v] : j.at("alexander").items())
        alex[std::stoll(key)] = v.get<long long>();
    m.alexander = AlexanderPolynomial(alex);
    if (j.contains("mirror_v_window"))
        m.mirror_v = VHData(g, j.at("mirror_v_window").get<std::vector<long long>>());
    if (j.contains("hfk_top_parity")) m.hfk_top_parity = j.at("hfk_top_parity").get<int>();
    if (j.contains("slice_genus")) m.slice_genus = j.at("slice_genus").get<long long>();
    return m;
}

// ---- manifold ----

inline json manifold_to_json(const ManifoldHF& Y) {
    json j;
    j["schema"] = 1;
    j["type"] = "manifold_hf";
    j["slope"] = Y.slope.str();
    json sts = json::array();
    for (const auto& st : Y.structures) {
        json s;
        s["index"] = st.index;
        if (st.z2) {
            s["z2"] = {{"even", st.z2->even}, {"odd", st.z2->odd}};
        } else {
            if (st.d) s["d"] = st.d->str();
            json tw = json::array();
            for (const auto& t : st.module.towers()) tw.push_back(t.d.str());
            s["towers"] = tw;
            json fin = json::array();
            for (const auto& f : st.module.finites())
                fin.push_back(json::array({f.d.str(), f.len}));
            s["reduced"] = fin;
        }
        sts.push_back(s);
    }
    j["structures"] = sts;
    j["total_reduced_dim"] = Y.total_reduced_dim();
    return j;
}

inline ManifoldHF manifold_from_json(const json& j) {
    require_schema(j, "manifold_hf");
    ManifoldHF Y;
    Y.slope = Slope::parse(j.at("slope").get<std::string>());
    for (const auto& s : j.at("structures")) {
        SpincHF st;
        st.index = s.at("index").get<long long>();
        if (s.contains("z2")) {
            Z2Table t;
            t.even = s.at("z2").at("even").get<long long>();
            t.odd = s.at("z2").at("odd").get<long long>();
            st.z2 = t;
        } else {
            if (s.contains("d")) st.d = Rational::parse(s.at("d").get<std::string>());
            for (const auto& t : s.value("towers", json::array()))
                st.module.add_tower(Rational::parse(t.get<std::string>()));
            for (const auto& f : s.value("reduced", json::array()))
                st.module.add_finite(Rational::parse(f.at(0).get<std::string>()),
                                     f.at(1).get<long long>());
        }
        Y.structures.push_back(std::move(st));
    }
    return Y;
}

// ---- oracle report ----

inline json oracle_report_to_json(const OracleReport& r) {
    json j;
    j["schema"] = 1;
    j["type"] = "oracle_report";
    j["slope"] = r.slope.str();
    j["characteristic"] = r.characteristic;
    j["seed"] = r.seed;
    json sts = json::array();
    for (const auto& s : r.structures) {
        json e;
        e["index"] = s.index;
        e["conclusive"] = s.conclusive;
        e["match"] = s.match;
        e["stable"] = s.stable;
        if (s.conclusive) {
            e["window"] = s.window;
            e["height"] = s.height;
            e["valid_lo"] = s.lo.str();
            e["valid_hi"] = s.hi.str();
        }
        json mm = json::array();
        for (const auto& g : s.mismatch_gradings) mm.push_back(g.str());
        e["mismatch_gradings"] = mm;
        sts.push_back(e);
    }
    j["structures"] = sts;
    j["all_match"] = r.all_match();
    return j;
}

// ---- obstruction report ----

inline std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        default: return "inapplicable";
    }
}

inline json checks_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        json e;
        e["name"] = c.name;
        e["status"] = status_str(c.status);
        e["witness"] = c.witness;
        e["rule"] = c.rule;
        arr.push_back(e);
    }
    return arr;
}

// ---- enumeration / recovery ----

inline json alexander_to_json(const AlexanderPolynomial& a) {
    json alex = json::object();
    for (const auto& [i, c] : a.coeffs())
        if (c != 0 || i == 0) alex[std::to_string(i)] = c;
    if (!alex.contains("0")) alex["0"] = a.coeff(0);
    return alex;
}

inline json enumeration_to_json(const AlexEnumeration& e) {
    json j;
    j["schema"] = 1;
    j["type"] = "alexander_enumeration";
    j["c"] = e.c.str();
    j["truncated"] = e.truncated;
    json cands = json::array();
    for (const auto& c : e.candidates) {
        json x;
        x["torsion"] = c.torsion;
        x["alexander"] = alexander_to_json(c.alexander);
        x["degree"] = c.alexander.degree();
        x["determinant"] = c.determinant;
        cands.push_back(x);
    }
    j["candidates"] = cands;
    j["count"] = e.candidates.size();
    return j;
}

// ---- human-readable tables ----

inline std::string manifold_table(const ManifoldHF& Y) {
    std::ostringstream o;
    o << "slope " << Y.slope.str() << "   total reduced dim " << Y.total_reduced_dim() << "\n";
    o << "spinc  d          summands\n";
    for (const auto& st : Y.structures) {
        std::ostringstream line;
        line << st.index << "      ";
        if (st.z2) {
            line << "-          Z/2 dims: even " << st.z2->even << ", odd " << st.z2->odd;
        } else {
            line << (st.d ? st.d->str() : std::string("-")) << "    ";
            for (const auto& t : st.module.towers()) line << "T[" << t.d.str() << "] ";
            for (const auto& f : st.module.finites())
                line << "tau[" << f.d.str() << "](" << f.len << ") ";
        }
        o << line.str() << "\n";
    }
    return o.str();
}

inline std::string checks_table(const std::vector<CheckResult>& checks) {
    std::ostringstream o;
    for (const auto& c : checks) {
        o << c.name;
        for (size_t i = c.name.size(); i < 26; ++i) o << ' ';
        o << status_str(c.status);
        if (!c.witness.empty()) o << "   " << c.witness;
        o << "\n";
    }
    return o.str();
}

// ---- file helpers ----

inline std::string dump_doc(const json& j) { return j.dump(2) + "\n"; }

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline json load_json(const std::string& path) { return json::parse(read_file(path)); }

}  // namespace floercone
