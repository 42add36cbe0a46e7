#pragma once

// Independent brute-force verifier: split monomials, standardness tests, and
// graded standard-monomial counting.  Everything here works from first
// principles (divisibility by split monomials) and never touches the lattice
// path machinery, so it can certify the series coefficients.

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "covariants/hilbert.hpp"
#include "covariants/stanley.hpp"

namespace cov {

// --------------------------------------------------------------------------
// Splits.  Each split is an arrangement of indices whose monomial is a
// forbidden leading term; its f-support is an antichain of size r in the
// case's order, and its column part must match a column of the tableau
// factor.

struct SpSplit {
    int k = 0;
    std::vector<int> a;  // a_1 > ... > a_s, sitting above d_1
    std::vector<int> b;  // b_r > ... > b_1 stored ascending: b[i] pairs with c[i]
    std::vector<int> c;  // c_1 > ... > c_r stored descending
    std::vector<int> d;  // d_1 > ... > d_t stored descending

    void validate() const {
        int r = static_cast<int>(b.size()), s = static_cast<int>(a.size());
        int t = static_cast<int>(d.size());
        if (static_cast<int>(c.size()) != r) throw std::invalid_argument("|b| != |c|");
        if (r < s || s + t > 2 * k || r + t != k + 1)
            throw std::invalid_argument("split parameter constraints violated");
        auto desc = [](const std::vector<int>& v) {
            for (size_t i = 1; i < v.size(); ++i)
                if (v[i] >= v[i - 1]) return false;
            return true;
        };
        std::vector<int> a_desc = a, b_asc = b;
        if (!desc(a_desc) || !desc(c) || !desc(d)) throw std::invalid_argument("not decreasing");
        for (size_t i = 1; i < b.size(); ++i)
            if (b[i] <= b[i - 1]) throw std::invalid_argument("b not increasing");
        if (r > 0 && t > 0 && c.back() <= d.front()) throw std::invalid_argument("c_r <= d_1");
        if (r > 0 && b.front() <= c.front()) throw std::invalid_argument("b_1 <= c_1");
        if (s > 0 && t > 0 && a.back() <= d.front()) throw std::invalid_argument("a_s <= d_1");
        for (int i = 0; i < r; ++i)
            if (c[i] >= b[i]) throw std::invalid_argument("pair (c_i, b_i) not above diagonal");
    }

    Monomial monomial() const {
        validate();
        Monomial m;
        for (size_t i = 0; i < b.size(); ++i) m.exps[{c[i], b[i]}] += 1;
        std::vector<int> col(d.rbegin(), d.rend());
        col.insert(col.end(), a.rbegin(), a.rend());
        for (int x : col) m.tentacles.plus.rows.push_back({x});
        return m;  // column stored as a one-column tableau
    }
};

struct OSplit {
    int k = 0, m = 0;
    std::vector<int> a;  // a_1 < ... < a_s, below d_1
    std::vector<int> b;  // b_1 < ... < b_r
    std::vector<int> c;  // c_1 < ... < c_r, with b_i <= c_i
    std::vector<int> d;  // d_1 < ... < d_t

    void validate() const {
        int r = static_cast<int>(b.size()), s = static_cast<int>(a.size());
        int t = static_cast<int>(d.size());
        if (static_cast<int>(c.size()) != r) throw std::invalid_argument("|b| != |c|");
        if (r < s || s + t != m || r + t != k + 1)
            throw std::invalid_argument("split parameter constraints violated");
        auto asc = [](const std::vector<int>& v) {
            for (size_t i = 1; i < v.size(); ++i)
                if (v[i] <= v[i - 1]) return false;
            return true;
        };
        if (!asc(a) || !asc(b) || !asc(c) || !asc(d)) throw std::invalid_argument("not increasing");
        if (r > 0 && t > 0 && b.back() >= d.front()) throw std::invalid_argument("b_r >= d_1");
        if (s > 0 && t > 0 && a.back() >= d.front()) throw std::invalid_argument("a_s >= d_1");
        for (int i = 0; i < r; ++i)
            if (b[i] > c[i]) throw std::invalid_argument("b_i > c_i");
    }

    Monomial monomial() const {
        validate();
        Monomial mo;
        for (size_t i = 0; i < b.size(); ++i) mo.exps[{b[i], c[i]}] += 1;
        std::vector<int> col(a);
        col.insert(col.end(), d.begin(), d.end());
        for (int x : col) mo.tentacles.plus.rows.push_back({x});
        return mo;
    }
};

struct GLSplit {
    int k = 0;
    // starred arrangement: pairs (c*_i, b_i); column {d*_t..d*_1, a*_s..a*_1}
    std::vector<int> a_star, b_plain, c_star, d_star;
    // unstarred arrangement: pairs (b*_i, c_i); column {d_w..d_1, a_v..a_1}
    std::vector<int> a_plain, b_star, c_plain, d_plain;

    void validate() const {
        int r = static_cast<int>(b_plain.size()), s = static_cast<int>(a_star.size());
        int t = static_cast<int>(d_star.size());
        int u = static_cast<int>(b_star.size()), v = static_cast<int>(a_plain.size());
        int w = static_cast<int>(d_plain.size());
        if (static_cast<int>(c_star.size()) != r || static_cast<int>(c_plain.size()) != u)
            throw std::invalid_argument("pair sequences mismatched");
        if (r < s || u < v) throw std::invalid_argument("r >= s and u >= v required");
        if (s + t > k || v + w > k) throw std::invalid_argument("column too long");
        if (r + t + u + w != k + 1) throw std::invalid_argument("r+t+u+w must be k+1");
        if (r + u == 0) throw std::invalid_argument("r+u must be positive");
        if (r > 0 && t > 0 && c_star.back() <= d_star.front())
            throw std::invalid_argument("c*_r <= d*_1");
        if (u > 0 && w > 0 && c_plain.back() <= d_plain.front())
            throw std::invalid_argument("c_u <= d_1");
        // condition (6), vacuous when the corresponding leg is empty
        if (r > 0 && u > 0) {
            if (b_plain.front() <= c_plain.front()) throw std::invalid_argument("b_1 <= c_1");
            if (b_star.front() <= c_star.front()) throw std::invalid_argument("b*_1 <= c*_1");
        }
    }

    Monomial monomial() const {
        validate();
        Monomial m;
        for (size_t i = 0; i < b_plain.size(); ++i) m.exps[{c_star[i], b_plain[i]}] += 1;
        for (size_t i = 0; i < b_star.size(); ++i) m.exps[{b_star[i], c_plain[i]}] += 1;
        std::vector<int> colp(d_plain.rbegin(), d_plain.rend());
        colp.insert(colp.end(), a_plain.rbegin(), a_plain.rend());
        for (int x : colp) m.tentacles.plus.rows.push_back({x});
        std::vector<int> colm(d_star.rbegin(), d_star.rend());
        colm.insert(colm.end(), a_star.rbegin(), a_star.rend());
        for (int x : colm) m.tentacles.minus.rows.push_back({x});
        return m;
    }
};

// --------------------------------------------------------------------------
// Standardness.  Divisibility by the monomial of a split depends only on the
// support of the f-part (the f-part of a split is squarefree) and on whole
// columns of the tableau factor.

namespace detail {

// longest antichain (strictly increasing rows, strictly decreasing columns)
// among points with row > row_min
inline int max_antichain_product_order(const std::vector<PosetPoint>& pts, int row_min) {
    std::vector<PosetPoint> v;
    for (auto& u : pts)
        if (u.row > row_min) v.push_back(u);
    std::sort(v.begin(), v.end());  // row asc, col asc
    int n = static_cast<int>(v.size());
    std::vector<int> best(n, 1);
    int overall = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            if (v[j].row < v[i].row && v[j].col > v[i].col) best[i] = std::max(best[i], best[j] + 1);
        overall = std::max(overall, best[i]);
    }
    return overall;
}

// longest chain strictly increasing in both coordinates among points with row < row_max
inline int max_se_chain(const std::vector<PosetPoint>& pts, int row_max) {
    std::vector<PosetPoint> v;
    for (auto& u : pts)
        if (u.row < row_max) v.push_back(u);
    std::sort(v.begin(), v.end());
    int n = static_cast<int>(v.size());
    std::vector<int> best(n, 1);
    int overall = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            if (v[j].row < v[i].row && v[j].col < v[i].col) best[i] = std::max(best[i], best[j] + 1);
        overall = std::max(overall, best[i]);
    }
    return overall;
}

// GL: is there an antichain p_1..p_N (rows strictly asc, cols strictly desc)
// splitting into a prefix of size >= s_min with rows > theta_star and a
// suffix of size >= v_min with cols > theta?
inline bool gl_split_antichain(const std::vector<PosetPoint>& pts, int N, int theta_star,
                               int theta, int s_min, int v_min) {
    if (N < std::max(1, s_min + v_min)) return false;
    std::vector<PosetPoint> v(pts);
    std::sort(v.begin(), v.end());
    int n = static_cast<int>(v.size());
    // rec(i, taken_prefix, taken_suffix, in_suffix, last point index)
    auto rec = [&](auto&& self, int i, int pre, int suf, bool in_suffix, int last) -> bool {
        if (pre + suf == N) return pre >= s_min && suf >= v_min;
        if (n - i < N - pre - suf) return false;
        for (int j = i; j < n; ++j) {
            if (last >= 0 && !(v[j].row > v[last].row && v[j].col < v[last].col)) continue;
            // as prefix element (only while no suffix element chosen)
            if (!in_suffix && v[j].row > theta_star &&
                self(self, j + 1, pre + 1, suf, false, j))
                return true;
            // as suffix element
            if (v[j].col > theta && self(self, j + 1, pre, suf + 1, true, j)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0, 0, false, -1);
}

}  // namespace detail

// True iff the monomial is not divisible by the monomial of any split; the
// tableau factor must already be semistandard over the case's alphabet.
inline bool is_standard(const Monomial& m, const GroupCase& cs) {
    cs.require_range();
    if (!m.tentacles.plus.is_semistandard() || !m.tentacles.minus.is_semistandard())
        return false;
    auto supp = m.support();
    switch (cs.group) {
        case Group::Sp: {
            // thresholds: none (t=0), or the t-th lowest entry of a column
            if (detail::max_antichain_product_order(supp, 0) >= cs.k + 1) return false;
            const Tableau& T = m.tentacles.plus;
            for (int c = 0; c < T.n_cols(); ++c) {
                auto col = T.column(c);
                for (int t = 1; t <= static_cast<int>(col.size()); ++t) {
                    int theta = col[t - 1];
                    if (detail::max_antichain_product_order(supp, theta) >= cs.k + 1 - t)
                        return false;
                }
            }
            return true;
        }
        case Group::O: {
            if (detail::max_se_chain(supp, cs.n + 1) >= cs.k + 1) return false;
            const Tableau& T = m.tentacles.plus;
            auto col = T.first_column();
            int mm = static_cast<int>(col.size());
            for (int t = 1; t <= mm; ++t) {
                int theta = col[mm - t];  // d_1, the smallest of the top t entries
                if (detail::max_se_chain(supp, theta) >= cs.k + 1 - t) return false;
            }
            return true;
        }
        case Group::GL: {
            // thresholds from columns of T- (starred side) and T+ (plain side)
            std::vector<std::tuple<int, int, int>> star_th{{0, 0, 0}};   // (t, theta*, s_min)
            std::vector<std::tuple<int, int, int>> plain_th{{0, 0, 0}};  // (w, theta, v_min)
            const Tableau& tm = m.tentacles.minus;
            for (int c = 0; c < tm.n_cols(); ++c) {
                auto col = tm.column(c);
                int len = static_cast<int>(col.size());
                for (int t = 1; t <= len; ++t) star_th.push_back({t, col[t - 1], len - t});
            }
            const Tableau& tp = m.tentacles.plus;
            for (int c = 0; c < tp.n_cols(); ++c) {
                auto col = tp.column(c);
                int len = static_cast<int>(col.size());
                for (int w = 1; w <= len; ++w) plain_th.push_back({w, col[w - 1], len - w});
            }
            for (auto& [t, ths, smin] : star_th) {
                for (auto& [w, th, vmin] : plain_th) {
                    int N = cs.k + 1 - t - w;
                    if (N < 1) continue;
                    if (detail::gl_split_antichain(supp, N, ths, th, smin, vmin)) return false;
                }
            }
            return true;
        }
    }
    return false;
}

// --------------------------------------------------------------------------
// Counting

// number of standard monomials of total degree exactly D
inline Int count_standard(const GroupCase& cs, const Shape& tau, int D) {
    cs.require_range();
    tau.require_in_sigma(cs);
    if (D < 0) return 0;
    int tdeg = tau.degree();
    if (D < tdeg || (D - tdeg) % 2 != 0) return 0;
    int budget = (D - tdeg) / 2;

    Poset P = Poset::build(cs);
    const auto& pts = P.points();
    int npts = P.size();

    std::vector<Tentacles> tabs;
    if (cs.group == Group::GL) {
        for (auto& mt : enumerate_ssyt(tau.tau_minus(), cs.p))
            for (auto& pt : enumerate_ssyt(tau.tau_plus(), cs.q)) tabs.push_back({pt, mt});
    } else {
        for (auto& t : enumerate_ssyt(tau.parts(), cs.n)) tabs.push_back({t, {}});
    }

    std::vector<Int> per_tab(tabs.size(), 0);
    parallel_for(static_cast<int>(tabs.size()), [&](int ti) {
        Monomial m;
        m.tentacles = tabs[ti];
        Int total = 0;
        // supports of each size contribute compositions of the exponent budget
        auto rec = [&](auto&& self, int next, int size) -> void {
            if (size > 0) total += binomial(budget - 1, size - 1);
            if (size == budget) return;
            for (int i = next; i < npts; ++i) {
                m.exps[pts[i]] = 1;
                if (is_standard(m, cs)) self(self, i + 1, size + 1);
                m.exps.erase(pts[i]);
            }
        };
        if (is_standard(m, cs)) {
            if (budget == 0)
                total += 1;
            else
                rec(rec, 0, 0);
        }
        per_tab[ti] = total;
    });
    Int total = 0;
    for (auto& x : per_tab) total += x;
    return total;
}

struct DegreeRow {
    int degree = 0;
    Int oracle = 0;
    Int series = 0;
    bool ok = false;
};

struct EquivalenceReport {
    GroupCase cs;
    Shape tau;
    std::vector<DegreeRow> rows;
    bool all_ok = true;
    std::optional<int> first_mismatch;
};

// count_standard against the expanded covariant series, degree by degree.
inline EquivalenceReport check_equivalence(const GroupCase& cs, const Shape& tau, int d_max_deg) {
    EquivalenceReport rep{cs, tau, {}, true, std::nullopt};
    auto series = covariant_series(cs, tau).sum().expand(d_max_deg);
    for (int D = 0; D <= d_max_deg; ++D) {
        DegreeRow row;
        row.degree = D;
        row.oracle = count_standard(cs, tau, D);
        row.series = series[D];
        row.ok = row.oracle == row.series;
        if (!row.ok && !rep.first_mismatch) {
            rep.all_ok = false;
            rep.first_mismatch = D;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

// The support characterization: m standard iff supp(m) fits inside a family
// F => T.  Returns a witness monomial on failure.
inline std::optional<Monomial> verify_support_characterization(const GroupCase& cs,
                                                               const Shape& tau,
                                                               int max_support) {
    Poset P = Poset::build(cs);
    const auto& pts = P.points();
    int npts = P.size();
    std::vector<Tentacles> tabs;
    if (cs.group == Group::GL) {
        for (auto& mt : enumerate_ssyt(tau.tau_minus(), cs.p))
            for (auto& pt : enumerate_ssyt(tau.tau_plus(), cs.q)) tabs.push_back({pt, mt});
    } else {
        for (auto& t : enumerate_ssyt(tau.parts(), cs.n)) tabs.push_back({t, {}});
    }
    std::optional<Monomial> witness;
    for (auto& T : tabs) {
        EndpointSet E = assign_bin(T, cs, tau);
        auto fams = enumerate_families(E, cs);
        std::vector<std::set<PosetPoint>> fam_sets;
        for (auto& F : fams) fam_sets.push_back(F.point_set());
        Monomial m;
        m.tentacles = T;
        auto rec = [&](auto&& self, int next, int size) -> bool {
            bool standard = is_standard(m, cs);
            bool contained = false;
            for (auto& fs : fam_sets) {
                bool all = true;
                for (auto& [u, d] : m.exps)
                    if (!fs.count(u)) all = false;
                if (all) contained = true;
            }
            if (standard != contained) {
                witness = m;
                return false;
            }
            if (size == max_support) return true;
            // only standard supports can extend to standard ones, but the
            // check must also cover nonstandard supports once
            if (!standard) return true;
            for (int i = next; i < npts; ++i) {
                m.exps[pts[i]] = 1;
                if (!self(self, i + 1, size + 1)) return false;
                m.exps.erase(pts[i]);
            }
            return true;
        };
        if (!rec(rec, 0, 0)) return witness;
    }
    return std::nullopt;
}

}  // namespace cov
