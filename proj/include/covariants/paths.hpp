#pragma once

// Endpoint sets E, nonintersecting lattice-path families F => E, corners with
// their shadow rules, family sizes d_E, shelling labels, and the facet
// families of the ADE order complexes.

#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "covariants/poset.hpp"

namespace cov {

// GL: starred right-edge rows plus bottom-edge columns; Sp: rows in [n-1];
// O: rows in [n].  Sp/O use only `plain`.
struct EndpointSet {
    std::vector<int> starred;  // ascending
    std::vector<int> plain;    // ascending

    int size() const { return static_cast<int>(starred.size() + plain.size()); }

    // Canonical label sequence: starred labels precede unstarred ones.
    std::vector<std::pair<int, int>> keys() const {
        std::vector<std::pair<int, int>> ks;
        for (int i : starred) ks.push_back({0, i});
        for (int j : plain) ks.push_back({1, j});
        return ks;
    }
    friend bool operator==(const EndpointSet&, const EndpointSet&) = default;
    friend bool operator<(const EndpointSet& a, const EndpointSet& b) {
        return a.keys() < b.keys();
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int i : starred) {
            if (!first) s += ",";
            s += std::to_string(i) + "*";
            first = false;
        }
        for (int j : plain) {
            if (!first) s += ",";
            s += std::to_string(j);
            first = false;
        }
        return s + "}";
    }
};

inline EndpointSet e_max(const GroupCase& cs) {
    EndpointSet E;
    switch (cs.group) {
        case Group::GL:
            for (int j = cs.q - cs.k + 1; j <= cs.q; ++j) E.plain.push_back(j);
            break;
        case Group::Sp:
            for (int i = 0; i < cs.k; ++i) E.plain.push_back(cs.n - 2 * cs.k + 1 + 2 * i);
            break;
        case Group::O:
            for (int i = 1; i <= cs.k; ++i) E.plain.push_back(i);
            break;
    }
    return E;
}

// Lemma-style feasibility: GL requires #E_ell <= ell for all ell; Sp requires
// E <= E_max entrywise (tableau order); any k-subset works for O.
inline bool endpoint_set_valid(const EndpointSet& E, const GroupCase& cs) {
    if (E.size() != cs.k) return false;
    switch (cs.group) {
        case Group::GL: {
            for (int i : E.starred)
                if (i < 1 || i > cs.p) return false;
            for (int j : E.plain)
                if (j < 1 || j > cs.q) return false;
            for (int ell = 1; ell <= cs.k; ++ell) {
                int cnt = 0;
                for (int i : E.starred)
                    if (i > cs.p - ell) ++cnt;
                for (int j : E.plain)
                    if (j > cs.q - ell) ++cnt;
                if (cnt > ell) return false;
            }
            return true;
        }
        case Group::Sp: {
            if (!E.starred.empty()) return false;
            EndpointSet M = e_max(cs);
            for (int i = 0; i < cs.k; ++i) {
                if (E.plain[i] < 1 || E.plain[i] > M.plain[i]) return false;
                if (i > 0 && E.plain[i] <= E.plain[i - 1]) return false;
            }
            return true;
        }
        case Group::O: {
            if (!E.starred.empty()) return false;
            for (int i = 0; i < cs.k; ++i) {
                if (E.plain[i] < 1 || E.plain[i] > cs.n) return false;
                if (i > 0 && E.plain[i] <= E.plain[i - 1]) return false;
            }
            return true;
        }
    }
    return false;
}

inline std::vector<EndpointSet> valid_endpoint_sets(const GroupCase& cs) {
    cs.require_range();
    std::vector<EndpointSet> out;
    switch (cs.group) {
        case Group::GL: {
            // choose starred subset then plain subset, filter by the ell-condition
            std::vector<int> star, plain;
            auto rec_plain = [&](auto&& self, int next) -> void {
                if (static_cast<int>(star.size() + plain.size()) == cs.k) {
                    EndpointSet E{star, plain};
                    if (endpoint_set_valid(E, cs)) out.push_back(E);
                    return;
                }
                for (int j = next; j <= cs.q; ++j) {
                    plain.push_back(j);
                    self(self, j + 1);
                    plain.pop_back();
                }
            };
            auto enum_star = [&](auto&& self, int next) -> void {
                plain.clear();
                rec_plain(rec_plain, 1);
                for (int i = next; i <= cs.p && static_cast<int>(star.size()) < cs.k; ++i) {
                    star.push_back(i);
                    self(self, i + 1);
                    star.pop_back();
                }
            };
            enum_star(enum_star, 1);
            break;
        }
        case Group::Sp:
        case Group::O: {
            std::vector<int> cur;
            int top = (cs.group == Group::Sp) ? cs.n - 1 : cs.n;
            auto rec = [&](auto&& self, int next) -> void {
                if (static_cast<int>(cur.size()) == cs.k) {
                    EndpointSet E{{}, cur};
                    if (endpoint_set_valid(E, cs)) out.push_back(E);
                    return;
                }
                for (int i = next; i <= top; ++i) {
                    cur.push_back(i);
                    self(self, i + 1);
                    cur.pop_back();
                }
            };
            rec(rec, 1);
            break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct LatticePath {
    std::vector<PosetPoint> pts;
    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

struct PathFamily {
    std::vector<LatticePath> paths;    // [0] = path ending at the topmost endpoint
    EndpointSet endpoints;
    std::vector<PosetPoint> corners;   // sorted
    std::vector<std::string> labels;   // per-path shelling labels, same order as paths
    int size_d = 0;

    std::set<PosetPoint> point_set() const {
        std::set<PosetPoint> s;
        for (auto& p : paths) s.insert(p.pts.begin(), p.pts.end());
        return s;
    }
    // Concatenated label, bottom path first (the shelling reads southwest to
    // northeast); per-path chunks separated by a space.
    std::string label() const {
        std::string s;
        for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
            if (!s.empty()) s += ' ';
            s += *it;
        }
        return s;
    }
};

namespace detail {

// start/target pairs in path order ([0] = topmost endpoint)
struct Route {
    PosetPoint start;
    PosetPoint target;
};

inline std::vector<Route> routes(const EndpointSet& E, const GroupCase& cs) {
    std::vector<Route> r;
    switch (cs.group) {
        case Group::GL: {
            // boundary order: right edge top to bottom, then bottom edge right to left
            for (int i : E.starred) r.push_back({{0, 0}, {i, cs.q}});
            for (auto it = E.plain.rbegin(); it != E.plain.rend(); ++it)
                r.push_back({{0, 0}, {cs.p, *it}});
            for (int ell = 0; ell < cs.k; ++ell) r[ell].start = {ell + 1, 1};
            break;
        }
        case Group::Sp:
            for (int i = 0; i < cs.k; ++i)
                r.push_back({{1, 2 * (cs.k - i)}, {E.plain[i], cs.n}});
            break;
        case Group::O:
            // starts vary along the diagonal; recorded as the target itself here
            for (int i = 0; i < cs.k; ++i) r.push_back({{0, 0}, {E.plain[i], cs.n}});
            break;
    }
    return r;
}

inline bool east_available(const Poset& P, const std::set<PosetPoint>& fam, PosetPoint u) {
    PosetPoint e{u.row, u.col + 1};
    return P.contains(e) && !fam.count(e);
}

}  // namespace detail

// L-turns (GL/Sp: south-in east-out; O: east-in north-out) and the shadow
// bookkeeping.  Returns the sorted corner set.
inline std::vector<PosetPoint> corners(const PathFamily& F, const GroupCase& cs) {
    std::set<PosetPoint> turns;
    if (cs.group == Group::O) {
        std::set<PosetPoint> out;
        for (auto& path : F.paths) {
            auto& v = path.pts;
            for (size_t m = 0; m + 1 < v.size(); ++m) {
                if (m > 0 && v[m - 1].col + 1 == v[m].col && v[m + 1].row + 1 == v[m].row)
                    out.insert(v[m]);  // reflected-L turn
            }
            if (v.size() >= 2 && v[0].row == v[0].col && v[1].row + 1 == v[0].row)
                out.insert(v[0]);  // vertical starting point
        }
        return {out.begin(), out.end()};
    }
    for (auto& path : F.paths) {
        auto& v = path.pts;
        for (size_t m = 1; m + 1 < v.size(); ++m)
            if (v[m - 1].row + 1 == v[m].row && v[m + 1].col == v[m].col + 1) turns.insert(v[m]);
    }
    // shadows: diagonal runs of L-turns southwest of right-edge endpoints
    // (and, for Sp, of the starting points)
    std::vector<PosetPoint> sources;
    int east_col = (cs.group == Group::GL) ? cs.q : cs.n;
    for (auto& path : F.paths) {
        PosetPoint end = path.pts.back();
        if (end.col == east_col) sources.push_back(end);
        if (cs.group == Group::Sp) sources.push_back(path.pts.front());
    }
    std::set<PosetPoint> shadowed;
    for (PosetPoint s : sources) {
        for (int ell = 1;; ++ell) {
            PosetPoint u{s.row + ell, s.col - ell};
            if (!turns.count(u)) break;
            shadowed.insert(u);
        }
    }
    std::vector<PosetPoint> out;
    for (PosetPoint u : turns)
        if (!shadowed.count(u)) out.push_back(u);
    return out;
}

// Binary edge labels: '0' = east step or forced south step, '1' = south step
// with east available.  For O the path is read from the east edge toward the
// diagonal ('0' = west, '1' = south).
inline std::vector<std::string> shelling_labels(const PathFamily& F, const GroupCase& cs) {
    Poset P = Poset::build(cs);
    std::set<PosetPoint> fam = F.point_set();
    std::vector<std::string> out;
    for (auto& path : F.paths) {
        auto& v = path.pts;
        std::string lab;
        if (cs.group == Group::O) {
            // reversed walk: east steps become west ('0'), north steps south ('1')
            for (size_t m = v.size(); m-- > 1;)
                lab += (v[m - 1].col + 1 == v[m].col) ? '0' : '1';
        } else {
            for (size_t m = 0; m + 1 < v.size(); ++m) {
                if (v[m + 1].col == v[m].col + 1)
                    lab += '0';
                else
                    lab += detail::east_available(P, fam, v[m]) ? '1' : '0';
            }
        }
        out.push_back(lab);
    }
    return out;
}

inline std::string shelling_label(const PathFamily& F, const GroupCase& cs) {
    PathFamily tmp = F;
    tmp.labels = shelling_labels(F, cs);
    return tmp.label();
}

// Every nonintersecting family with the prescribed starts and endpoints,
// sorted by shelling label (the shelling order).
inline std::vector<PathFamily> enumerate_families(const EndpointSet& E, const GroupCase& cs) {
    cs.require_range();
    if (!endpoint_set_valid(E, cs)) throw std::invalid_argument("not a valid endpoint set");
    Poset P = Poset::build(cs);
    auto routes = detail::routes(E, cs);
    std::vector<PathFamily> out;
    std::set<PosetPoint> used;
    std::vector<LatticePath> cur(cs.k);

    // paths are placed topmost first; within a path, east steps are explored
    // before south steps (O: west before south on the reversed walk)
    auto place = [&](auto&& self, int idx) -> void {
        if (idx == cs.k) {
            PathFamily F;
            F.paths = cur;
            F.endpoints = E;
            out.push_back(std::move(F));
            return;
        }
        auto& route = routes[idx];
        std::vector<PosetPoint> walk;
        if (cs.group != Group::O) {
            auto dfs = [&](auto&& me, PosetPoint u) -> void {
                if (used.count(u)) return;
                if (u.row > route.target.row || u.col > route.target.col) return;
                walk.push_back(u);
                used.insert(u);
                if (u == route.target) {
                    cur[idx].pts = walk;
                    self(self, idx + 1);
                } else {
                    PosetPoint e{u.row, u.col + 1}, s{u.row + 1, u.col};
                    if (P.contains(e)) me(me, e);
                    if (P.contains(s)) me(me, s);
                }
                used.erase(u);
                walk.pop_back();
            };
            dfs(dfs, route.start);
        } else {
            // reversed walk from the east edge; west first, then south
            auto dfs = [&](auto&& me, PosetPoint u) -> void {
                if (used.count(u)) return;
                walk.push_back(u);
                used.insert(u);
                if (u.row == u.col) {
                    cur[idx].pts.assign(walk.rbegin(), walk.rend());
                    self(self, idx + 1);
                } else {
                    PosetPoint w{u.row, u.col - 1}, s{u.row + 1, u.col};
                    if (P.contains(w)) me(me, w);
                    if (P.contains(s)) me(me, s);
                }
                used.erase(u);
                walk.pop_back();
            };
            dfs(dfs, route.target);
        }
    };
    place(place, 0);

    for (auto& F : out) {
        F.labels = shelling_labels(F, cs);
        F.corners = corners(F, cs);
        int d = 0;
        for (auto& p : F.paths) d += static_cast<int>(p.pts.size());
        F.size_d = d;
    }
    std::sort(out.begin(), out.end(), [](const PathFamily& a, const PathFamily& b) {
        auto la = a.label(), lb = b.label();
        if (la != lb) return la < lb;
        return a.paths < b.paths;
    });
    return out;
}

// d_E, from one greedily constructed family.
inline int family_size(const EndpointSet& E, const GroupCase& cs) {
    cs.require_range();
    if (!endpoint_set_valid(E, cs)) throw std::invalid_argument("not a valid endpoint set");
    switch (cs.group) {
        case Group::GL: {
            int d = 0, ell = 1;
            for (int i : E.starred) d += cs.q + (i - ell), ++ell;
            // bottom endpoints pair with the deepest starts, rightmost first
            int start_row = cs.k;
            for (int j : E.plain) {
                d += (cs.p - start_row) + j;
                --start_row;
            }
            return d;
        }
        case Group::Sp: {
            int d = 0;
            for (int i = 0; i < cs.k; ++i) d += cs.n - 2 * (cs.k - i) + E.plain[i];
            return d;
        }
        case Group::O: {
            int d = 0;
            for (int e : E.plain) d += cs.n - e + 1;
            return d;
        }
    }
    return 0;
}

inline int d_max(const GroupCase& cs) {
    cs.validate();
    switch (cs.group) {
        case Group::GL: return cs.p * cs.q - (cs.p - cs.k) * (cs.q - cs.k);
        case Group::Sp: return cs.k * (2 * cs.n - 2 * cs.k - 1);
        case Group::O: return cs.k * (2 * cs.n - cs.k + 1) / 2;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// ADE facets: families of `level` maximal nonintersecting paths in the Hasse
// diagram.  Corners are the shelling restrictions, computed directly from the
// label-lexicographic order (and verified to be a shelling).

namespace detail {

inline std::vector<std::vector<int>> maximal_chains(const Poset& P, const std::set<int>& ground) {
    // ground: vertex indices of the induced subposet
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    auto leq = [&](int a, int b) { return P.leq(P.points()[a], P.points()[b]); };
    auto covers_in = [&](int u) {
        std::vector<int> out;
        for (int v : ground) {
            if (v == u || !leq(u, v)) continue;
            bool mid = false;
            for (int w : ground)
                if (w != u && w != v && leq(u, w) && leq(w, v)) mid = true;
            if (!mid) out.push_back(v);
        }
        return out;
    };
    auto dfs = [&](auto&& self, int u) -> void {
        cur.push_back(u);
        auto nexts = covers_in(u);
        if (nexts.empty())
            chains.push_back(cur);
        else
            for (int v : nexts) self(self, v);
        cur.pop_back();
    };
    for (int u : ground) {
        bool minimal = true;
        for (int w : ground)
            if (w != u && leq(w, u)) minimal = false;
        if (minimal) dfs(dfs, u);
    }
    return chains;
}

inline std::string ade_path_label(const Poset& P, const std::set<PosetPoint>& fam,
                                  const std::vector<PosetPoint>& path) {
    std::string lab;
    for (size_t m = 0; m + 1 < path.size(); ++m) {
        PosetPoint u = path[m], v = path[m + 1];
        if (v.col == u.col + 1) {
            lab += '0';
        } else {
            auto e = P.east_of(u);
            lab += (e && !fam.count(*e)) ? '1' : '0';
        }
    }
    return lab;
}

}  // namespace detail

inline std::vector<PathFamily> wallach_facets(const WallachCase& wc) {
    wc.validate();
    Poset P = Poset::build(wc);
    int k = wc.level;
    std::set<int> all;
    for (int i = 0; i < P.size(); ++i) all.insert(i);

    auto outer_chains = detail::maximal_chains(P, all);
    std::map<std::set<PosetPoint>, std::vector<LatticePath>> found;
    auto record = [&](const std::vector<std::vector<int>>& chains_by_path) {
        std::vector<LatticePath> paths;
        std::set<PosetPoint> pts;
        for (auto& c : chains_by_path) {
            LatticePath lp;
            for (int i : c) lp.pts.push_back(P.points()[i]);
            pts.insert(lp.pts.begin(), lp.pts.end());
            paths.push_back(std::move(lp));
        }
        auto it = found.find(pts);
        if (it == found.end()) found[pts] = paths;
    };

    if (k == 1) {
        for (auto& c : outer_chains) record({c});
    } else {
        for (auto& c1 : outer_chains) {
            std::set<int> rest = all;
            for (int i : c1) rest.erase(i);
            for (auto& c2 : detail::maximal_chains(P, rest)) record({c1, c2});
        }
    }

    // keep faces that cannot absorb any further vertex within width k
    auto incomparable = [&](PosetPoint a, PosetPoint b) {
        return !P.leq(a, b) && !P.leq(b, a);
    };
    std::vector<PathFamily> facets;
    for (auto& [pts, paths] : found) {
        bool maximal = true;
        for (PosetPoint v : P.points()) {
            if (pts.count(v)) continue;
            // adding v must create a (k+1)-antichain through v
            bool widens = false;
            if (k == 1) {
                for (PosetPoint u : pts)
                    if (incomparable(u, v)) widens = true;
            } else {
                for (PosetPoint u : pts)
                    for (PosetPoint w : pts)
                        if (u < w && incomparable(u, v) && incomparable(w, v) &&
                            incomparable(u, w))
                            widens = true;
            }
            if (!widens) {
                maximal = false;
                break;
            }
        }
        if (!maximal) continue;
        PathFamily F;
        F.paths = paths;
        F.size_d = static_cast<int>(pts.size());
        facets.push_back(std::move(F));
    }

    // shelling order: lexicographic on concatenated labels, outer path first
    for (auto& F : facets) {
        std::set<PosetPoint> fam = F.point_set();
        F.labels.clear();
        for (auto& path : F.paths) F.labels.push_back(detail::ade_path_label(P, fam, path.pts));
    }
    auto concat = [](const PathFamily& F) {
        std::string s;
        for (auto& l : F.labels) s += l + " ";
        return s;
    };
    std::sort(facets.begin(), facets.end(), [&](const PathFamily& a, const PathFamily& b) {
        auto la = concat(a), lb = concat(b);
        if (la != lb) return la < lb;
        return a.paths < b.paths;
    });

    // restriction of each facet relative to the order above
    std::vector<std::set<PosetPoint>> sets;
    for (auto& F : facets) sets.push_back(F.point_set());
    for (size_t j = 0; j < facets.size(); ++j) {
        std::set<PosetPoint> restr;
        for (size_t i = 0; i < j; ++i) {
            std::vector<PosetPoint> diff;
            for (auto& u : sets[j])
                if (!sets[i].count(u)) diff.push_back(u);
            if (diff.size() == 1) restr.insert(diff[0]);
        }
        // shelling condition: every earlier facet is dominated through a
        // single-element difference
        for (size_t i = 0; i < j; ++i) {
            bool ok = false;
            for (auto& v : restr)
                if (!sets[i].count(v)) ok = true;
            if (!ok) throw std::logic_error("facet order is not a shelling");
        }
        facets[j].corners.assign(restr.begin(), restr.end());
    }
    return facets;
}

}  // namespace cov
