#pragma once

// Deterministic text renderings of posets, jellyfish, jellyfish diagrams, and
// arc diagrams.  The ascii form is parseable: cell characters encode the step
// structure of each path ('-', '|' straights, '+' plain turns, '#' corners,
// '~' shadowed turns, 'e' endpoints, 'o' tentacle dots).

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "covariants/paths.hpp"
#include "covariants/poset.hpp"
#include "covariants/stanley.hpp"

namespace cov {

namespace detail {

struct CharGrid {
    std::vector<std::string> lines;
    void put(int row, int col, char c) {  // 1-based cells, two columns per cell
        int y = row - 1, x = (col - 1) * 2;
        if (y < 0 || x < 0) throw std::logic_error("grid underflow");
        if (y >= static_cast<int>(lines.size())) lines.resize(y + 1);
        if (x >= static_cast<int>(lines[y].size())) lines[y].resize(x + 1, ' ');
        lines[y][x] = c;
    }
    char get(int row, int col) const {
        int y = row - 1, x = (col - 1) * 2;
        if (y < 0 || y >= static_cast<int>(lines.size())) return ' ';
        if (x < 0 || x >= static_cast<int>(lines[y].size())) return ' ';
        return lines[y][x];
    }
    std::string str() const {
        std::string s;
        for (auto& l : lines) {
            s += l;
            s += '\n';
        }
        return s;
    }
    static CharGrid from_text(const std::string& text) {
        CharGrid g;
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) g.lines.push_back(line);
        return g;
    }
};

enum class Dir { East, South, North, West, None };

inline Dir step_dir(PosetPoint from, PosetPoint to) {
    if (to.row == from.row && to.col == from.col + 1) return Dir::East;
    if (to.row == from.row + 1 && to.col == from.col) return Dir::South;
    if (to.row == from.row - 1 && to.col == from.col) return Dir::North;
    if (to.row == from.row && to.col == from.col - 1) return Dir::West;
    return Dir::None;
}

}  // namespace detail

inline std::string render_poset_ascii(const Poset& P) {
    detail::CharGrid g;
    for (auto& u : P.points()) g.put(u.row, u.col, '.');
    return g.str();
}

// the set of (row, col) cells marked as points
inline std::vector<PosetPoint> parse_poset_ascii(const std::string& text) {
    auto g = detail::CharGrid::from_text(text);
    std::vector<PosetPoint> pts;
    for (int y = 0; y < static_cast<int>(g.lines.size()); ++y)
        for (int x = 0; x < static_cast<int>(g.lines[y].size()); ++x)
            if (g.lines[y][x] == '.') pts.push_back({y + 1, x / 2 + 1});
    return pts;
}

inline std::string render_jellyfish_ascii(const PathFamily& F, const Tentacles& T,
                                          const GroupCase& cs) {
    detail::CharGrid g;
    Poset P = Poset::build(cs);
    for (auto& u : P.points()) g.put(u.row, u.col, '.');
    std::set<PosetPoint> corner_set(F.corners.begin(), F.corners.end());

    for (auto& path : F.paths) {
        auto& v = path.pts;
        for (size_t m = 0; m < v.size(); ++m) {
            detail::Dir in = m ? detail::step_dir(v[m - 1], v[m]) : detail::Dir::None;
            detail::Dir out =
                m + 1 < v.size() ? detail::step_dir(v[m], v[m + 1]) : detail::Dir::None;
            char c;
            if (out == detail::Dir::None) {
                c = 'e';
            } else if (in == detail::Dir::None) {
                if (cs.group == Group::O && out == detail::Dir::North)
                    c = '#';  // vertical starting point
                else
                    c = (out == detail::Dir::East) ? '-' : '|';
            } else if (in == out) {
                c = (in == detail::Dir::East) ? '-' : '|';
            } else if (corner_set.count(v[m])) {
                c = '#';
            } else if (cs.group != Group::O && in == detail::Dir::South &&
                       out == detail::Dir::East) {
                c = '~';  // shadowed L-turn
            } else {
                c = '+';
            }
            g.put(v[m].row, v[m].col, c);
        }
    }

    // tentacles: row tableaux dangle right (Sp/O and GL's T-), column entries
    // of T+ dangle below for GL
    int east = (cs.group == Group::GL) ? cs.q : cs.n;
    const Tableau& right = (cs.group == Group::GL) ? T.minus : T.plus;
    for (auto& row : right.rows)
        for (size_t j = 0; j < row.size(); ++j) g.put(row[j], east + 1 + static_cast<int>(j), 'o');
    if (cs.group == Group::GL)
        for (auto& row : T.plus.rows)
            for (size_t j = 0; j < row.size(); ++j)
                g.put(cs.p + 1 + static_cast<int>(j), row[j], 'o');
    return g.str();
}

struct ParsedJellyfish {
    PathFamily family;
    Tentacles tentacles;
};

inline ParsedJellyfish parse_jellyfish_ascii(const std::string& text, const GroupCase& cs) {
    auto g = detail::CharGrid::from_text(text);
    Poset P = Poset::build(cs);
    int east = (cs.group == Group::GL) ? cs.q : cs.n;
    ParsedJellyfish out;

    auto is_path_cell = [&](PosetPoint u) {
        char c = g.get(u.row, u.col);
        return c == '-' || c == '|' || c == '+' || c == '#' || c == '~' || c == 'e';
    };

    if (cs.group != Group::O) {
        // forward trace from the fixed starts
        std::vector<PosetPoint> starts;
        for (int ell = 1; ell <= cs.k; ++ell)
            starts.push_back(cs.group == Group::GL ? PosetPoint{ell, 1} : PosetPoint{1, 2 * ell});
        for (PosetPoint s : starts) {
            LatticePath path;
            PosetPoint u = s;
            detail::Dir dir = detail::Dir::None;
            while (true) {
                path.pts.push_back(u);
                char c = g.get(u.row, u.col);
                if (c == 'e') break;
                detail::Dir next;
                if (c == '-')
                    next = detail::Dir::East;
                else if (c == '|')
                    next = detail::Dir::South;
                else  // turn cell
                    next = (dir == detail::Dir::East) ? detail::Dir::South : detail::Dir::East;
                dir = next;
                u = (next == detail::Dir::East) ? PosetPoint{u.row, u.col + 1}
                                                : PosetPoint{u.row + 1, u.col};
            }
            out.family.paths.push_back(std::move(path));
        }
    } else {
        // backward trace from each endpoint on the east edge
        for (int r = 1; r <= cs.n; ++r) {
            if (!is_path_cell({r, east})) continue;
            // endpoint cells are exactly the 'e' cells on the east edge
            if (g.get(r, east) != 'e') continue;
            std::vector<PosetPoint> rev;
            PosetPoint u{r, east};
            while (true) {
                rev.push_back(u);
                if (u.row == u.col) {
                    char c = g.get(u.row, u.col);
                    bool vertical = (c == '#') && rev.size() >= 2 &&
                                    rev[rev.size() - 2].row + 1 == u.row;
                    (void)vertical;
                    break;
                }
                PosetPoint west{u.row, u.col - 1}, south{u.row + 1, u.col};
                char cw = g.get(west.row, west.col);
                char cS = g.get(south.row, south.col);
                bool from_west = (cw == '-' || cw == '+');
                bool from_south = (cS == '|' || cS == '#');
                if (from_west == from_south)
                    throw std::invalid_argument("ambiguous or broken path at " +
                                                std::to_string(u.row) + "," +
                                                std::to_string(u.col));
                u = from_west ? west : south;
            }
            LatticePath path;
            path.pts.assign(rev.rbegin(), rev.rend());
            out.family.paths.push_back(std::move(path));
        }
    }

    // endpoints from the traced paths
    for (auto& path : out.family.paths) {
        PosetPoint end = path.pts.back();
        if (cs.group == Group::GL && end.col != cs.q)
            out.family.endpoints.plain.push_back(end.col);
        else if (cs.group == Group::GL)
            out.family.endpoints.starred.push_back(end.row);
        else
            out.family.endpoints.plain.push_back(end.row);
    }
    std::sort(out.family.endpoints.starred.begin(), out.family.endpoints.starred.end());
    std::sort(out.family.endpoints.plain.begin(), out.family.endpoints.plain.end());

    // tentacles: depth j dots on the right give column j of the row tableau
    auto collect_columns = [&](bool right_side) {
        Tableau T;
        for (int j = 0;; ++j) {
            std::vector<int> col;
            if (right_side) {
                for (int r = 1; r <= std::max({cs.p, cs.n, cs.q}); ++r)
                    if (g.get(r, east + 1 + j) == 'o') col.push_back(r);
            } else {
                for (int c = 1; c <= cs.q; ++c)
                    if (g.get(cs.p + 1 + j, c) == 'o') col.push_back(c);
            }
            if (col.empty()) break;
            for (size_t r = 0; r < col.size(); ++r) {
                if (T.rows.size() <= r) T.rows.resize(r + 1);
                T.rows[r].push_back(col[r]);
            }
        }
        return T;
    };
    if (cs.group == Group::GL) {
        out.tentacles.minus = collect_columns(true);
        out.tentacles.plus = collect_columns(false);
    } else {
        out.tentacles.plus = collect_columns(true);
    }

    out.family.labels = shelling_labels(out.family, cs);
    out.family.corners = corners(out.family, cs);
    int d = 0;
    for (auto& p : out.family.paths) d += static_cast<int>(p.pts.size());
    out.family.size_d = d;
    return out;
}

// Jellyfish diagram of a monomial: the jellyfish plus an exponent legend.
inline std::string render_monomial_ascii(const LocatedMonomial& lm, const GroupCase& cs) {
    std::string s = render_jellyfish_ascii(lm.jellyfish.family, lm.jellyfish.tentacles, cs);
    for (auto& [u, d] : lm.free_exponents)
        if (d > 0)
            s += "d[" + std::to_string(u.row) + "," + std::to_string(u.col) +
                 "]=" + std::to_string(d) + "\n";
    return s;
}

inline std::string render_arc_ascii(const ArcDiagram& d) {
    std::ostringstream os;
    bool gl = d.cs.group == Group::GL;
    os << "vertices:";
    if (gl) {
        for (int i = 1; i <= d.cs.p; ++i) os << " " << i << "*";
        os << " |";
        for (int j = 1; j <= d.cs.q; ++j) os << " " << j;
    } else {
        for (int i = 1; i <= d.cs.n; ++i) os << " " << i;
    }
    os << "\n";
    for (auto& [arc, mult] : d.arcs) {
        os << "arc " << arc.first << (gl ? "*-" : "-") << arc.second;
        if (mult != 1) os << " x" << mult;
        os << "\n";
    }
    for (auto& h : d.hyperedges_minus) {
        os << "hyperedge";
        for (int v : h) os << " " << v << "*";
        os << "\n";
    }
    for (auto& h : d.hyperedges_plus) {
        os << "hyperedge";
        for (int v : h) os << " " << v;
        os << "\n";
    }
    return os.str();
}

struct ParsedArc {
    std::map<std::pair<int, int>, int> arcs;
    std::vector<std::vector<int>> hyperedges_plus;
    std::vector<std::vector<int>> hyperedges_minus;
};

inline ParsedArc parse_arc_ascii(const std::string& text) {
    ParsedArc out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "arc") {
            std::string body;
            ls >> body;
            int mult = 1;
            std::string xs;
            if (ls >> xs && xs.size() > 1 && xs[0] == 'x') mult = std::stoi(xs.substr(1));
            auto dash = body.find('-');
            std::string left = body.substr(0, dash), right = body.substr(dash + 1);
            if (!left.empty() && left.back() == '*') left.pop_back();
            out.arcs[{std::stoi(left), std::stoi(right)}] = mult;
        } else if (tag == "hyperedge") {
            std::vector<int> plus, minus;
            std::string tok;
            bool starred = false;
            while (ls >> tok) {
                if (!tok.empty() && tok.back() == '*') {
                    tok.pop_back();
                    minus.push_back(std::stoi(tok));
                    starred = true;
                } else {
                    plus.push_back(std::stoi(tok));
                }
            }
            if (starred)
                out.hyperedges_minus.push_back(minus);
            else
                out.hyperedges_plus.push_back(plus);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// TikZ and SVG emitters

inline std::string render_jellyfish_tikz(const PathFamily& F, const Tentacles& T,
                                         const GroupCase& cs) {
    Poset P = Poset::build(cs);
    std::ostringstream os;
    auto X = [&](PosetPoint u) { return u.col; };
    auto Y = [&](PosetPoint u) { return -u.row; };
    os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n"
       << "\\begin{tikzpicture}[scale=.45]\n";
    for (auto& [a, b] : P.covers()) {
        PosetPoint u = P.points()[a], v = P.points()[b];
        os << "\\draw[lightgray] (" << X(u) << "," << Y(u) << ") -- (" << X(v) << "," << Y(v)
           << ");\n";
    }
    for (auto& u : P.points())
        os << "\\fill[lightgray] (" << X(u) << "," << Y(u) << ") circle (3pt);\n";
    for (auto& path : F.paths) {
        os << "\\draw[very thick] ";
        for (size_t m = 0; m < path.pts.size(); ++m) {
            if (m) os << " -- ";
            os << "(" << X(path.pts[m]) << "," << Y(path.pts[m]) << ")";
        }
        os << ";\n";
    }
    for (auto& c : F.corners)
        os << "\\node[rectangle,draw=black,fill=red!70!gray,minimum size=5pt,inner sep=0pt] at ("
           << X(c) << "," << Y(c) << ") {};\n";
    int east = (cs.group == Group::GL) ? cs.q : cs.n;
    const Tableau& right = (cs.group == Group::GL) ? T.minus : T.plus;
    for (auto& row : right.rows)
        for (size_t j = 0; j < row.size(); ++j)
            os << "\\fill ( " << east + 1 + j << "," << -row[j] << ") circle (2.5pt);\n";
    if (cs.group == Group::GL)
        for (auto& row : T.plus.rows)
            for (size_t j = 0; j < row.size(); ++j)
                os << "\\fill ( " << row[j] << "," << -(cs.p + 1 + static_cast<int>(j))
                   << ") circle (2.5pt);\n";
    os << "\\end{tikzpicture}\n\\end{document}\n";
    return os.str();
}

inline std::string render_poset_tikz(const Poset& P) {
    std::ostringstream os;
    os << "\\documentclass[tikz]{standalone}\n\\begin{document}\n"
       << "\\begin{tikzpicture}[scale=.45]\n";
    for (auto& [a, b] : P.covers()) {
        PosetPoint u = P.points()[a], v = P.points()[b];
        os << "\\draw[lightgray] (" << u.col << "," << -u.row << ") -- (" << v.col << ","
           << -v.row << ");\n";
    }
    for (auto& u : P.points())
        os << "\\fill[lightgray] (" << u.col << "," << -u.row << ") circle (3pt);\n";
    os << "\\end{tikzpicture}\n\\end{document}\n";
    return os.str();
}

// 24px grid, squares for corners, filled dots for tentacle nodes.
inline std::string render_jellyfish_svg(const PathFamily& F, const Tentacles& T,
                                        const GroupCase& cs) {
    Poset P = Poset::build(cs);
    const int G = 24;
    int east = (cs.group == Group::GL) ? cs.q : cs.n;
    int depth = (cs.group == Group::GL ? cs.p : cs.n);
    int w = (east + 8) * G, h = (depth + 8) * G;
    auto X = [&](int col) { return col * G; };
    auto Y = [&](int row) { return row * G; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\">\n";
    for (auto& [a, b] : P.covers()) {
        PosetPoint u = P.points()[a], v = P.points()[b];
        os << "<line x1=\"" << X(u.col) << "\" y1=\"" << Y(u.row) << "\" x2=\"" << X(v.col)
           << "\" y2=\"" << Y(v.row) << "\" stroke=\"#cccccc\"/>\n";
    }
    for (auto& u : P.points())
        os << "<circle cx=\"" << X(u.col) << "\" cy=\"" << Y(u.row)
           << "\" r=\"3\" fill=\"#bbbbbb\"/>\n";
    for (auto& path : F.paths) {
        os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"3\" points=\"";
        for (auto& u : path.pts) os << X(u.col) << "," << Y(u.row) << " ";
        os << "\"/>\n";
    }
    for (auto& c : F.corners)
        os << "<rect x=\"" << X(c.col) - 5 << "\" y=\"" << Y(c.row) - 5
           << "\" width=\"10\" height=\"10\" fill=\"#b03040\" stroke=\"black\"/>\n";
    const Tableau& right = (cs.group == Group::GL) ? T.minus : T.plus;
    for (auto& row : right.rows)
        for (size_t j = 0; j < row.size(); ++j)
            os << "<circle cx=\"" << X(east + 1 + static_cast<int>(j)) << "\" cy=\"" << Y(row[j])
               << "\" r=\"4\" fill=\"black\"/>\n";
    if (cs.group == Group::GL)
        for (auto& row : T.plus.rows)
            for (size_t j = 0; j < row.size(); ++j)
                os << "<circle cx=\"" << X(row[j]) << "\" cy=\""
                   << Y(cs.p + 1 + static_cast<int>(j)) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace cov
