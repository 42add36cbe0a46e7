#pragma once

// Jellyfish (F => T), Stanley spaces as explicit generator data, locating a
// monomial in its unique Stanley space, arc diagrams, and g-weights.

#include <map>
#include <stdexcept>
#include <vector>

#include "covariants/paths.hpp"
#include "covariants/poset.hpp"
#include "covariants/tableaux.hpp"

namespace cov {

struct Jellyfish {
    PathFamily family;
    Tentacles tentacles;
    Shape shape;
};

inline std::vector<Jellyfish> enumerate_jellyfish(const GroupCase& cs, const Shape& tau) {
    cs.require_range();
    tau.require_in_sigma(cs);
    std::vector<Jellyfish> out;
    for (auto& [E, members] : bins(cs, tau)) {
        if (members.empty()) continue;
        auto fams = enumerate_families(E, cs);
        for (auto& T : members)
            for (auto& F : fams) out.push_back({F, T, tau});
    }
    return out;
}

struct StanleySpace {
    std::vector<PosetPoint> free_generators;  // the f_ij with (i,j) in F
    std::vector<PosetPoint> coefficient_corners;
    Tentacles tableau;
    int degree = 0;  // degree of the coefficient element: 2#cor + |tau|
};

inline StanleySpace stanley_space(const Jellyfish& j) {
    StanleySpace s;
    auto pts = j.family.point_set();
    s.free_generators.assign(pts.begin(), pts.end());
    s.coefficient_corners = j.family.corners;
    s.tableau = j.tentacles;
    s.degree = 2 * static_cast<int>(s.coefficient_corners.size()) + j.shape.degree();
    return s;
}

// A monomial m * f_cor(F) * phi_T in total-exponent view: exps holds the full
// exponent of each f_ij including the corner contributions.
struct Monomial {
    std::map<PosetPoint, int> exps;
    Tentacles tentacles;

    int f_degree() const {
        int s = 0;
        for (auto& [u, d] : exps) s += d;
        return s;
    }
    int degree() const {
        return 2 * f_degree() + tentacles.plus.size() + tentacles.minus.size();
    }
    std::vector<PosetPoint> support() const {
        std::vector<PosetPoint> s;
        for (auto& [u, d] : exps)
            if (d > 0) s.push_back(u);
        return s;
    }
};

struct LocatedMonomial {
    Jellyfish jellyfish;
    std::map<PosetPoint, int> free_exponents;  // exps minus one per corner
};

// The unique jellyfish whose Stanley space contains m; throws if the monomial
// lies in no space (equivalently, is not standard).
inline LocatedMonomial locate(const Monomial& m, const GroupCase& cs, const Shape& tau) {
    cs.require_range();
    tau.require_in_sigma(cs);
    auto sh = m.tentacles.plus.shape();
    if (Shape(cs.group == Group::GL
                  ? [&] {
                        std::vector<int> t = sh;
                        auto mshape = m.tentacles.minus.shape();
                        for (auto it = mshape.rbegin(); it != mshape.rend(); ++it)
                            t.push_back(-*it);
                        return t;
                    }()
                  : sh) != tau)
        throw std::invalid_argument("tableau shape does not match tau");
    if (!m.tentacles.plus.is_semistandard() || !m.tentacles.minus.is_semistandard())
        throw std::invalid_argument("tableau factor is not semistandard");

    EndpointSet E = assign_bin(m.tentacles, cs, tau);
    auto supp = m.support();
    const Poset P = Poset::build(cs);
    for (auto& u : supp)
        if (!P.contains(u)) throw std::invalid_argument("monomial support outside the lattice");

    std::vector<const PathFamily*> hits;
    auto fams = enumerate_families(E, cs);
    for (auto& F : fams) {
        auto pts = F.point_set();
        bool ok = true;
        for (auto& u : supp)
            if (!pts.count(u)) ok = false;
        for (auto& c : F.corners) {
            auto it = m.exps.find(c);
            if (it == m.exps.end() || it->second < 1) ok = false;
        }
        if (ok) hits.push_back(&F);
    }
    if (hits.empty())
        throw std::invalid_argument("monomial lies in no Stanley space (not standard)");
    if (hits.size() > 1) throw std::logic_error("monomial lies in several Stanley spaces");

    LocatedMonomial out{{*hits.front(), m.tentacles, tau}, m.exps};
    for (auto& c : hits.front()->corners) {
        auto it = out.free_exponents.find(c);
        if (--it->second == 0) out.free_exponents.erase(it);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Arc diagrams and weights

struct ArcDiagram {
    GroupCase cs;
    // GL: arcs run from starred vertex i to plain vertex j; Sp/O: i to j.
    std::map<std::pair<int, int>, int> arcs;
    std::vector<std::vector<int>> hyperedges_plus;   // columns of T (T+ for GL)
    std::vector<std::vector<int>> hyperedges_minus;  // columns of T- (GL only)
    std::vector<int> deg_starred;                    // GL only, size p
    std::vector<int> deg_plain;                      // size q (GL) or n

    int arc_count() const {
        int s = 0;
        for (auto& [a, m] : arcs) s += m;
        return s;
    }
};

inline ArcDiagram arc_diagram(const Monomial& m, const GroupCase& cs) {
    cs.validate();
    ArcDiagram d;
    d.cs = cs;
    bool gl = cs.group == Group::GL;
    d.deg_starred.assign(gl ? cs.p : 0, 0);
    d.deg_plain.assign(gl ? cs.q : cs.n, 0);
    for (auto& [u, mult] : m.exps) {
        if (mult == 0) continue;
        d.arcs[{u.row, u.col}] += mult;
        if (gl) {
            d.deg_starred[u.row - 1] += mult;
            d.deg_plain[u.col - 1] += mult;
        } else {
            // a diagonal arc (i,i) is a loop and counts twice
            d.deg_plain[u.row - 1] += mult;
            d.deg_plain[u.col - 1] += mult;
        }
    }
    const Tableau& tp = m.tentacles.plus;
    for (int c = 0; c < tp.n_cols(); ++c) {
        auto col = tp.column(c);
        d.hyperedges_plus.push_back(col);
        for (int v : col) d.deg_plain[v - 1] += 1;
    }
    if (gl) {
        const Tableau& tm = m.tentacles.minus;
        for (int c = 0; c < tm.n_cols(); ++c) {
            auto col = tm.column(c);
            d.hyperedges_minus.push_back(col);
            for (int v : col) d.deg_starred[v - 1] += 1;
        }
    }
    return d;
}

// Integer or half-integer tuple: entries num[i]/den with den in {1, 2}.
struct WeightVector {
    std::vector<int> num;
    int den = 1;
    friend bool operator==(const WeightVector&, const WeightVector&) = default;

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < num.size(); ++i) {
            if (i) s += ",";
            if (den == 1 || num[i] % den == 0)
                s += std::to_string(num[i] / den);
            else
                s += std::to_string(num[i]) + "/" + std::to_string(den);
        }
        return s + ")";
    }
};

// wt_g from the degree sequence of the arc diagram.
inline WeightVector weight(const Monomial& m, const GroupCase& cs) {
    ArcDiagram d = arc_diagram(m, cs);
    WeightVector w;
    switch (cs.group) {
        case Group::GL:
            for (int i = 0; i < cs.p; ++i) w.num.push_back(-d.deg_starred[i] - cs.k);
            for (int j = 0; j < cs.q; ++j) w.num.push_back(d.deg_plain[j]);
            w.den = 1;
            break;
        case Group::Sp:
            for (int i = 0; i < cs.n; ++i) w.num.push_back(-d.deg_plain[i] - cs.k);
            w.den = 1;
            break;
        case Group::O:
            for (int i = 0; i < cs.n; ++i) w.num.push_back(-2 * d.deg_plain[i] - cs.k);
            w.den = 2;
            break;
    }
    return w;
}

// The highest weight lambda corresponding to tau under the dual pair.
inline WeightVector lambda_from_tau(const GroupCase& cs, const Shape& tau) {
    cs.validate();
    tau.require_in_sigma(cs);
    WeightVector w;
    switch (cs.group) {
        case Group::GL: {
            // starred side: -(reverse of tau- padded to length p) - k
            auto tm = tau.tau_minus();
            std::vector<int> rev(cs.p, 0);
            for (size_t i = 0; i < tm.size(); ++i) rev[cs.p - tm.size() + i] = tm[tm.size() - 1 - i];
            for (int i = 0; i < cs.p; ++i) w.num.push_back(-rev[i] - cs.k);
            auto tp = tau.tau_plus();
            for (int j = 0; j < cs.q; ++j)
                w.num.push_back(j < static_cast<int>(tp.size()) ? tp[j] : 0);
            w.den = 1;
            break;
        }
        case Group::Sp: {
            std::vector<int> padded(cs.n, 0);
            auto parts = tau.parts();
            for (size_t i = 0; i < parts.size(); ++i)
                padded[cs.n - parts.size() + i] = parts[parts.size() - 1 - i];
            for (int i = 0; i < cs.n; ++i) w.num.push_back(-padded[i] - cs.k);
            w.den = 1;
            break;
        }
        case Group::O: {
            std::vector<int> padded(cs.n, 0);
            auto parts = tau.parts();
            for (size_t i = 0; i < parts.size(); ++i)
                padded[cs.n - parts.size() + i] = parts[parts.size() - 1 - i];
            for (int i = 0; i < cs.n; ++i) w.num.push_back(-2 * padded[i] - cs.k);
            w.den = 2;
            break;
        }
    }
    return w;
}

}  // namespace cov
