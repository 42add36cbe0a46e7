#pragma once

// The lattice P underlying each dual pair, plus the ADE Hasse diagrams used
// for the Wallach representations.  Points are (row, col), 1-based, rows
// increasing downward to match the usual pictures.  For GL the row labels are
// starred (1*..p*) and the columns run over 1..q; for Sp the points are pairs
// (i, j) with i < j; for O pairs with i <= j under the flipped column order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cov {

enum class Group { GL, Sp, O };

inline std::string to_string(Group g) {
    switch (g) {
        case Group::GL: return "gl";
        case Group::Sp: return "sp";
        case Group::O: return "o";
    }
    return "?";
}

struct GroupCase {
    Group group = Group::GL;
    int k = 0;
    int p = 0, q = 0;  // GL only
    int n = 0;         // Sp / O only

    static GroupCase gl(int k, int p, int q) { return {Group::GL, k, p, q, 0}; }
    static GroupCase sp(int k, int n) { return {Group::Sp, k, 0, 0, n}; }
    static GroupCase o(int k, int n) { return {Group::O, k, 0, 0, n}; }

    int rank() const {
        switch (group) {
            case Group::GL: return std::min(p, q);
            case Group::Sp: return n / 2;
            case Group::O: return n;
        }
        return 0;
    }
    bool in_range() const { return k <= rank(); }
    bool free_range() const { return k >= rank(); }

    // Basic parameter sanity; the working range k <= rank is checked
    // separately where an operation requires it.
    void validate() const {
        if (k <= 0) throw std::invalid_argument("k must be positive");
        if (group == Group::GL) {
            if (p <= 0 || q <= 0) throw std::invalid_argument("p, q must be positive");
        } else {
            if (n <= 0) throw std::invalid_argument("n must be positive");
        }
    }
    void require_range() const {
        validate();
        if (!in_range())
            throw std::invalid_argument(name() + ": k exceeds the working range k <= " +
                                        std::to_string(rank()));
    }

    std::string name() const {
        switch (group) {
            case Group::GL:
                return "GL(k=" + std::to_string(k) + ",p=" + std::to_string(p) +
                       ",q=" + std::to_string(q) + ")";
            case Group::Sp: return "Sp(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
            case Group::O: return "O(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
        }
        return "?";
    }

    friend bool operator==(const GroupCase&, const GroupCase&) = default;
};

struct PosetPoint {
    int row = 0;
    int col = 0;
    friend bool operator==(const PosetPoint&, const PosetPoint&) = default;
    friend auto operator<=>(const PosetPoint&, const PosetPoint&) = default;
};

enum class WallachFamily { Dn, E6, E7 };

inline std::string to_string(WallachFamily f) {
    switch (f) {
        case WallachFamily::Dn: return "Dn";
        case WallachFamily::E6: return "E6";
        case WallachFamily::E7: return "E7";
    }
    return "?";
}

struct WallachCase {
    WallachFamily family = WallachFamily::Dn;
    int n = 0;      // Dn only
    int level = 1;  // the k of the kth Wallach representation

    static WallachCase dn(int n, int level = 1) { return {WallachFamily::Dn, n, level}; }
    static WallachCase e6(int level = 1) { return {WallachFamily::E6, 0, level}; }
    static WallachCase e7(int level) { return {WallachFamily::E7, 0, level}; }

    void validate() const {
        switch (family) {
            case WallachFamily::Dn:
                if (n < 4) throw std::invalid_argument("Dn requires n >= 4");
                if (level != 1) throw std::invalid_argument("Dn supports level 1 only");
                break;
            case WallachFamily::E6:
                if (level != 1) throw std::invalid_argument("E6 supports level 1 only");
                break;
            case WallachFamily::E7:
                if (level != 1 && level != 2)
                    throw std::invalid_argument("E7 supports levels 1 and 2 only");
                break;
        }
    }
    std::string name() const {
        std::string s = to_string(family);
        if (family == WallachFamily::Dn) s += "(n=" + std::to_string(n) + ")";
        return s + " level " + std::to_string(level);
    }
    friend bool operator==(const WallachCase&, const WallachCase&) = default;
};

class Poset {
public:
    enum class Kind { Classical, ADE };

    static Poset build(const GroupCase& cs) {
        cs.validate();
        Poset P;
        P.kind_ = Kind::Classical;
        P.gc_ = cs;
        switch (cs.group) {
            case Group::GL:
                for (int i = 1; i <= cs.p; ++i)
                    for (int j = 1; j <= cs.q; ++j) P.points_.push_back({i, j});
                break;
            case Group::Sp:
                for (int i = 1; i < cs.n; ++i)
                    for (int j = i + 1; j <= cs.n; ++j) P.points_.push_back({i, j});
                break;
            case Group::O:
                for (int i = 1; i <= cs.n; ++i)
                    for (int j = i; j <= cs.n; ++j) P.points_.push_back({i, j});
                break;
        }
        P.finish();
        return P;
    }

    static Poset build(const WallachCase& wc);

    Kind kind() const { return kind_; }
    const GroupCase& group_case() const { return gc_; }
    const WallachCase& wallach_case() const { return wc_; }
    const std::vector<PosetPoint>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }

    bool contains(PosetPoint u) const { return index_.count(u) > 0; }
    int index_of(PosetPoint u) const {
        auto it = index_.find(u);
        return it == index_.end() ? -1 : it->second;
    }

    bool leq(PosetPoint a, PosetPoint b) const {
        if (kind_ == Kind::ADE) {
            int ia = index_of(a), ib = index_of(b);
            if (ia < 0 || ib < 0) throw std::invalid_argument("point not in poset");
            return (reach_[ia] >> ib) & 1u;
        }
        if (gc_.group == Group::O) return a.row <= b.row && a.col >= b.col;
        return a.row <= b.row && a.col <= b.col;
    }

    // Hasse diagram as index pairs (a covers nothing above it; pair = (lower, upper)).
    std::vector<std::pair<int, int>> covers() const {
        if (kind_ == Kind::ADE) return edges_;
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < size(); ++i) {
            for (PosetPoint v : upper_covers(points_[i])) out.push_back({i, index_of(v)});
        }
        return out;
    }

    // Immediate successors in the order (east/south steps of a lattice path).
    std::vector<PosetPoint> upper_covers(PosetPoint u) const {
        std::vector<PosetPoint> out;
        if (kind_ == Kind::ADE) {
            int i = index_of(u);
            for (auto& [a, b] : edges_)
                if (a == i) out.push_back(points_[b]);
            return out;
        }
        switch (gc_.group) {
            case Group::GL:
            case Group::Sp: {
                PosetPoint e{u.row, u.col + 1}, s{u.row + 1, u.col};
                if (contains(e)) out.push_back(e);
                if (contains(s)) out.push_back(s);
                break;
            }
            case Group::O: {
                PosetPoint s{u.row + 1, u.col}, w{u.row, u.col - 1};
                if (contains(s)) out.push_back(s);
                if (contains(w)) out.push_back(w);
                break;
            }
        }
        return out;
    }

    // The ell-th antidiagonal, counted from the corner where the paths end
    // (an antichain; for GL its size is ell while it fits in the grid).
    std::vector<PosetPoint> antidiagonal(int ell) const {
        if (kind_ == Kind::ADE) throw std::invalid_argument("antidiagonal: classical posets only");
        if (ell < 1 || ell > max_antidiagonal())
            throw std::invalid_argument("antidiagonal index out of range");
        std::vector<PosetPoint> out;
        for (PosetPoint u : points_) {
            bool in = false;
            switch (gc_.group) {
                case Group::GL: in = (gc_.p - u.row) + (gc_.q - u.col) == ell - 1; break;
                case Group::Sp: in = u.row + u.col == 2 * gc_.n + 1 - 2 * ell; break;
                case Group::O: in = u.col - u.row == gc_.n - ell; break;
            }
            if (in) out.push_back(u);
        }
        return out;
    }
    int max_antidiagonal() const {
        switch (gc_.group) {
            case Group::GL: return gc_.p + gc_.q - 1;
            case Group::Sp: return gc_.n - 1;
            case Group::O: return gc_.n;
        }
        return 0;
    }

    // ADE helpers
    std::optional<PosetPoint> east_of(PosetPoint u) const {
        PosetPoint e{u.row, u.col + 1};
        if (kind_ == Kind::ADE ? has_edge(u, e) : contains(e)) return e;
        return std::nullopt;
    }
    std::optional<PosetPoint> south_of(PosetPoint u) const {
        PosetPoint s{u.row + 1, u.col};
        if (kind_ == Kind::ADE ? has_edge(u, s) : contains(s)) return s;
        return std::nullopt;
    }
    const std::vector<int>& shadow_vertices() const { return shadows_; }
    PosetPoint minimum() const;
    PosetPoint maximum() const;

private:
    Kind kind_ = Kind::Classical;
    GroupCase gc_;
    WallachCase wc_;
    std::vector<PosetPoint> points_;
    std::map<PosetPoint, int> index_;
    std::vector<std::pair<int, int>> edges_;  // ADE Hasse diagram, (lower, upper)
    std::vector<uint32_t> reach_;             // ADE reachability masks (reflexive)
    std::vector<int> shadows_;                // ADE permanent-shadow vertices

    bool has_edge(PosetPoint a, PosetPoint b) const {
        int ia = index_of(a), ib = index_of(b);
        if (ia < 0 || ib < 0) return false;
        for (auto& [x, y] : edges_)
            if (x == ia && y == ib) return true;
        return false;
    }

    void finish() {
        std::sort(points_.begin(), points_.end());
        for (int i = 0; i < size(); ++i) index_[points_[i]] = i;
    }

    void finish_ade(const std::vector<std::pair<PosetPoint, PosetPoint>>& raw_edges,
                    const std::vector<PosetPoint>& raw_shadows) {
        finish();
        for (auto& [a, b] : raw_edges) edges_.push_back({index_of(a), index_of(b)});
        for (auto& s : raw_shadows) shadows_.push_back(index_of(s));
        if (size() > 31) throw std::logic_error("ADE poset too large for reach masks");
        reach_.assign(size(), 0);
        for (int i = 0; i < size(); ++i) reach_[i] = 1u << i;
        // points_ are (row, col)-sorted, which is a linear extension for east/south edges
        for (int i = size() - 1; i >= 0; --i)
            for (auto& [a, b] : edges_)
                if (a == i) reach_[i] |= reach_[b];
    }

    friend Poset build_dn_poset(int n, Poset base);
    friend Poset build_e6_poset(Poset base);
    friend Poset build_e7_poset(Poset base);
};

inline Poset build_dn_poset(int n, Poset P) {
    // Two chains of length n-2 joined through a diamond: the first chain runs
    // south down column 1, splits at (n-2, 1) into the diamond points
    // (n-1, 1) and (n-2, 2), which rejoin at (n-1, 2); the second chain runs
    // east along row n-1.
    std::vector<std::pair<PosetPoint, PosetPoint>> edges;
    for (int r = 1; r <= n - 2; ++r) P.points_.push_back({r, 1});
    P.points_.push_back({n - 1, 1});
    P.points_.push_back({n - 2, 2});
    for (int c = 2; c <= n - 1; ++c) P.points_.push_back({n - 1, c});
    for (int r = 1; r + 1 <= n - 2; ++r) edges.push_back({{r, 1}, {r + 1, 1}});
    edges.push_back({{n - 2, 1}, {n - 1, 1}});
    edges.push_back({{n - 2, 1}, {n - 2, 2}});
    edges.push_back({{n - 1, 1}, {n - 1, 2}});
    edges.push_back({{n - 2, 2}, {n - 1, 2}});
    for (int c = 2; c + 1 <= n - 1; ++c) edges.push_back({{n - 1, c}, {n - 1, c + 1}});
    P.finish_ade(edges, {});
    return P;
}

inline Poset build_e6_poset(Poset P) {
    P.points_ = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                 {3, 4}, {3, 5}, {3, 6}, {4, 4}, {4, 5}, {4, 6}, {5, 6}, {6, 6}};
    std::vector<std::pair<PosetPoint, PosetPoint>> edges = {
        {{1, 1}, {1, 2}}, {{1, 2}, {1, 3}}, {{1, 3}, {1, 4}}, {{1, 4}, {1, 5}},
        {{1, 3}, {2, 3}}, {{1, 4}, {2, 4}}, {{1, 5}, {2, 5}}, {{2, 3}, {2, 4}},
        {{2, 4}, {2, 5}}, {{2, 4}, {3, 4}}, {{2, 5}, {3, 5}}, {{3, 4}, {3, 5}},
        {{3, 5}, {3, 6}}, {{3, 4}, {4, 4}}, {{3, 5}, {4, 5}}, {{3, 6}, {4, 6}},
        {{4, 4}, {4, 5}}, {{4, 5}, {4, 6}}, {{4, 6}, {5, 6}}, {{5, 6}, {6, 6}}};
    P.finish_ade(edges, {{3, 5}});
    return P;
}

inline Poset build_e7_poset(Poset P) {
    P.points_ = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                 {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}, {4, 8}, {4, 9}, {5, 5},
                 {5, 6}, {5, 7}, {5, 8}, {5, 9}, {6, 8}, {6, 9}, {7, 9}, {8, 9}, {9, 9}};
    std::vector<std::pair<PosetPoint, PosetPoint>> edges = {
        {{1, 1}, {1, 2}}, {{1, 2}, {1, 3}}, {{1, 3}, {1, 4}}, {{1, 4}, {1, 5}},
        {{1, 5}, {1, 6}}, {{1, 6}, {2, 6}}, {{2, 6}, {3, 6}}, {{3, 6}, {3, 7}},
        {{3, 7}, {4, 7}}, {{4, 7}, {5, 7}}, {{1, 4}, {2, 4}}, {{2, 4}, {2, 5}},
        {{2, 5}, {3, 5}}, {{3, 5}, {4, 5}}, {{4, 5}, {4, 6}}, {{4, 6}, {4, 7}},
        {{1, 5}, {2, 5}}, {{2, 5}, {2, 6}}, {{3, 5}, {3, 6}}, {{3, 6}, {4, 6}},
        {{4, 6}, {5, 6}}, {{4, 5}, {5, 5}}, {{5, 5}, {5, 6}}, {{5, 6}, {5, 7}},
        {{5, 7}, {5, 8}}, {{5, 8}, {5, 9}}, {{5, 9}, {6, 9}}, {{6, 9}, {7, 9}},
        {{7, 9}, {8, 9}}, {{8, 9}, {9, 9}}, {{4, 7}, {4, 8}}, {{4, 8}, {4, 9}},
        {{4, 9}, {5, 9}}, {{4, 8}, {5, 8}}, {{5, 8}, {6, 8}}, {{6, 8}, {6, 9}}};
    P.finish_ade(edges, {{3, 6}, {4, 7}});
    return P;
}

inline Poset Poset::build(const WallachCase& wc) {
    wc.validate();
    Poset P;
    P.kind_ = Kind::ADE;
    P.wc_ = wc;
    switch (wc.family) {
        case WallachFamily::Dn: return build_dn_poset(wc.n, std::move(P));
        case WallachFamily::E6: return build_e6_poset(std::move(P));
        case WallachFamily::E7: return build_e7_poset(std::move(P));
    }
    throw std::invalid_argument("unsupported Wallach case");
}

inline PosetPoint Poset::minimum() const {
    for (int i = 0; i < size(); ++i) {
        bool has_lower = false;
        for (auto& [a, b] : edges_)
            if (b == i) has_lower = true;
        if (kind_ == Kind::Classical) return points_.front();
        if (!has_lower) return points_[i];
    }
    throw std::logic_error("no minimum");
}

inline PosetPoint Poset::maximum() const {
    if (kind_ == Kind::Classical) return points_.back();
    for (int i = 0; i < size(); ++i) {
        bool has_upper = false;
        for (auto& [a, b] : edges_)
            if (a == i) has_upper = true;
        if (!has_upper) return points_[i];
    }
    throw std::logic_error("no maximum");
}

}  // namespace cov
