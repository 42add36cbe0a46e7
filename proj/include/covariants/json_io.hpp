#pragma once

// JSON views of every exported object; shapes match docs/schemas/.

#include <json.hpp>

#include "covariants/hilbert.hpp"
#include "covariants/oracle.hpp"
#include "covariants/paths.hpp"
#include "covariants/poset.hpp"
#include "covariants/stanley.hpp"
#include "covariants/tableaux.hpp"

namespace cov {

using json = nlohmann::json;

inline json to_json(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return static_cast<long long>(x);
    return x.str();
}

inline json to_json(const GroupCase& cs) {
    json j{{"group", to_string(cs.group)}, {"k", cs.k}};
    if (cs.group == Group::GL) {
        j["p"] = cs.p;
        j["q"] = cs.q;
    } else {
        j["n"] = cs.n;
    }
    return j;
}

inline json to_json(const WallachCase& wc) {
    json j{{"wallach", to_string(wc.family)}, {"level", wc.level}};
    if (wc.family == WallachFamily::Dn) j["n"] = wc.n;
    return j;
}

inline json to_json(const Poset& P) {
    json pts = json::array();
    bool starred = P.kind() == Poset::Kind::Classical && P.group_case().group == Group::GL;
    for (auto& u : P.points()) {
        if (starred)
            pts.push_back({u.row, u.col, true});
        else
            pts.push_back({u.row, u.col});
    }
    json covers = json::array();
    for (auto& [a, b] : P.covers()) covers.push_back({a, b});
    json c = P.kind() == Poset::Kind::Classical ? to_json(P.group_case())
                                                : to_json(P.wallach_case());
    return {{"case", c}, {"points", pts}, {"covers", covers}};
}

inline json to_json(const EndpointSet& E) {
    json labels = json::array();
    for (int i : E.starred) labels.push_back(std::to_string(i) + "*");
    for (int j : E.plain) labels.push_back(std::to_string(j));
    return labels;
}

inline json to_json(const Tableau& T) {
    json rows = json::array();
    for (auto& r : T.rows) rows.push_back(r);
    return rows;
}

inline json to_json(const Tentacles& T, const GroupCase& cs) {
    if (cs.group == Group::GL) return {{"plus", to_json(T.plus)}, {"minus", to_json(T.minus)}};
    return to_json(T.plus);
}

inline json to_json(const PathFamily& F) {
    json paths = json::array();
    for (auto& p : F.paths) {
        json pts = json::array();
        for (auto& u : p.pts) pts.push_back({u.row, u.col});
        paths.push_back(pts);
    }
    json corners = json::array();
    for (auto& c : F.corners) corners.push_back({c.row, c.col});
    return {{"paths", paths},
            {"endpoints", to_json(F.endpoints)},
            {"corners", corners},
            {"size", F.size_d},
            {"label", F.label()}};
}

inline json to_json(const RationalSeries& s) {
    json num = json::array();
    for (auto& [e, v] : s.numerator().coeffs()) num.push_back({e, to_json(v)});
    json den = json::array();
    for (auto& f : s.denominator()) den.push_back({f.base, f.mult});
    return {{"numerator", num}, {"denominator", den}};
}

inline json to_json(const CovariantSeries& cov) {
    json terms = json::array();
    for (auto& t : cov.terms)
        terms.push_back({{"endpoints", to_json(t.endpoints)},
                         {"bin_size", to_json(t.bin_size)},
                         {"p_series", to_json(t.p)}});
    return {{"case", to_json(cov.cs)},
            {"tau", cov.tau.parts()},
            {"terms", terms},
            {"sum", to_json(cov.sum())},
            {"reduced", to_json(cov.reduced())}};
}

inline json to_json(const SLSeries& s) {
    auto term = [](const SLTerm& t) {
        return json{{"endpoints", to_json(t.endpoints)},
                    {"p_series", to_json(t.p)},
                    {"q_series", to_json(t.q)}};
    };
    json plain = json::array(), starred = json::array();
    for (auto& t : s.plain_terms) plain.push_back(term(t));
    for (auto& t : s.starred_terms) starred.push_back(term(t));
    return {{"invariant_part", to_json(s.invariant_part)},
            {"plain_terms", plain},
            {"starred_terms", starred},
            {"total", to_json(s.total())},
            {"reduced", to_json(s.total().reduced())}};
}

inline json to_json(const StanleySpace& s, const GroupCase& cs) {
    json freegen = json::array(), corners = json::array();
    for (auto& u : s.free_generators) freegen.push_back({u.row, u.col});
    for (auto& u : s.coefficient_corners) corners.push_back({u.row, u.col});
    return {{"free", freegen},
            {"corners", corners},
            {"tableau", to_json(s.tableau, cs)},
            {"degree", s.degree}};
}

inline json to_json(const WeightVector& w) {
    return {{"num", w.num}, {"den", w.den}, {"display", w.str()}};
}

inline json to_json(const ArcDiagram& d) {
    json arcs = json::array();
    for (auto& [arc, mult] : d.arcs) arcs.push_back({arc.first, arc.second, mult});
    json hp = json::array(), hm = json::array();
    for (auto& h : d.hyperedges_plus) hp.push_back(h);
    for (auto& h : d.hyperedges_minus) hm.push_back(h);
    json j{{"case", to_json(d.cs)}, {"arcs", arcs}, {"hyperedges", hp}};
    if (d.cs.group == Group::GL) {
        j["hyperedges_starred"] = hm;
        j["degrees_starred"] = d.deg_starred;
    }
    j["degrees"] = d.deg_plain;
    return j;
}

inline json to_json(const EquivalenceReport& r) {
    json rows = json::array();
    for (auto& row : r.rows)
        rows.push_back({{"D", row.degree},
                        {"oracle", to_json(row.oracle)},
                        {"series", to_json(row.series)},
                        {"ok", row.ok}});
    return {{"case", to_json(r.cs)}, {"tau", r.tau.parts()}, {"per_degree", rows},
            {"all_ok", r.all_ok}};
}

inline json error_json(const std::string& kind, const std::string& message) {
    return {{"error", kind}, {"message", message}};
}

}  // namespace cov
