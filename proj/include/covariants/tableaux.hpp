#pragma once

// Semistandard, rational, and symplectic tableaux; shapes tau; the assignment
// of each tableau to its endpoint bin; dimension counts.

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "covariants/paths.hpp"
#include "covariants/poset.hpp"
#include "covariants/series.hpp"

namespace cov {

struct Tableau {
    std::vector<std::vector<int>> rows;

    bool empty() const { return rows.empty(); }
    int n_rows() const { return static_cast<int>(rows.size()); }
    std::vector<int> shape() const {
        std::vector<int> s;
        for (auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return s;
    }
    int size() const {
        int s = 0;
        for (auto& r : rows) s += static_cast<int>(r.size());
        return s;
    }
    std::vector<int> column(int c) const {  // 0-based
        std::vector<int> col;
        for (auto& r : rows)
            if (c < static_cast<int>(r.size())) col.push_back(r[c]);
        return col;
    }
    std::vector<int> first_column() const { return column(0); }
    int n_cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }

    bool is_semistandard() const {
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
            for (size_t c = 0; c < rows[r].size(); ++c) {
                if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
                if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
            }
        }
        return true;
    }

    std::vector<int> row_reading_word() const {
        std::vector<int> w;
        for (auto& r : rows) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend bool operator<(const Tableau& a, const Tableau& b) {
        return a.row_reading_word() < b.row_reading_word();
    }
};

// Occurrence counts of 1..alphabet.
inline std::vector<int> content(const Tableau& T, int alphabet) {
    std::vector<int> c(alphabet, 0);
    for (auto& r : T.rows)
        for (int x : r) {
            if (x < 1 || x > alphabet) throw std::invalid_argument("entry out of alphabet");
            ++c[x - 1];
        }
    return c;
}

// Weakly decreasing integer tuple; negatives allowed for GL.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] > parts_[i - 1])
                throw std::invalid_argument("shape must be weakly decreasing");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        while (!parts_.empty() && parts_.front() == 0) parts_.erase(parts_.begin());
    }

    const std::vector<int>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }
    bool is_partition() const { return parts_.empty() || parts_.back() >= 0; }

    std::vector<int> tau_plus() const {
        std::vector<int> p;
        for (int x : parts_)
            if (x > 0) p.push_back(x);
        return p;
    }
    // negative parts, reversed and made positive
    std::vector<int> tau_minus() const {
        std::vector<int> m;
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
            if (*it < 0) m.push_back(-*it);
        return m;
    }
    int size_plus() const {
        auto p = tau_plus();
        return std::accumulate(p.begin(), p.end(), 0);
    }
    int size_minus() const {
        auto m = tau_minus();
        return std::accumulate(m.begin(), m.end(), 0);
    }
    // degree of phi_T: |tau+| + |tau-|
    int degree() const { return size_plus() + size_minus(); }

    // membership in the spectrum Sigma for the given case
    void require_in_sigma(const GroupCase& cs) const {
        switch (cs.group) {
            case Group::GL: {
                int lp = static_cast<int>(tau_plus().size());
                int lm = static_cast<int>(tau_minus().size());
                if (lp > cs.q) throw std::invalid_argument("length of tau+ exceeds q");
                if (lm > cs.p) throw std::invalid_argument("length of tau- exceeds p");
                if (lp + lm > cs.k)
                    throw std::invalid_argument("tau is not in Sigma: l(tau+)+l(tau-) > k");
                return;
            }
            case Group::Sp: {
                if (!is_partition()) throw std::invalid_argument("Sp shapes are partitions");
                int l = static_cast<int>(parts_.size());
                if (l > cs.k || l > cs.n)
                    throw std::invalid_argument("tau is not in Sigma: too many rows");
                return;
            }
            case Group::O: {
                for (int x : parts_)
                    if (x != 1)
                        throw std::invalid_argument(
                            "O shapes are restricted to single columns (1^m)");
                int m = static_cast<int>(parts_.size());
                if (m > cs.k || m > cs.n) throw std::invalid_argument("m exceeds k (or n)");
                return;
            }
        }
    }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<int> parts_;
};

// All SSYT of the given partition shape over [alphabet], in row-reading
// lexicographic order.  row_mins[i] (1-based value) bounds row i from below.
inline std::vector<Tableau> enumerate_ssyt(const std::vector<int>& shape, int alphabet,
                                           const std::vector<int>& row_mins = {}) {
    for (size_t i = 1; i < shape.size(); ++i)
        if (shape[i] > shape[i - 1]) throw std::invalid_argument("not a partition");
    std::vector<Tableau> out;
    if (shape.empty()) {
        out.push_back({});
        return out;
    }
    Tableau T;
    T.rows.resize(shape.size());
    for (size_t r = 0; r < shape.size(); ++r) T.rows[r].assign(shape[r], 0);

    auto fill = [&](auto&& self, int r, int c) -> void {
        if (r == static_cast<int>(shape.size())) {
            out.push_back(T);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= shape[r]) nr = r + 1, nc = 0;
        int lo = 1;
        if (c > 0) lo = std::max(lo, T.rows[r][c - 1]);
        if (r > 0 && c < shape[r - 1]) lo = std::max(lo, T.rows[r - 1][c] + 1);
        if (r < static_cast<int>(row_mins.size())) lo = std::max(lo, row_mins[r]);
        for (int v = lo; v <= alphabet; ++v) {
            T.rows[r][c] = v;
            self(self, nr, nc);
        }
    };
    fill(fill, 0, 0);
    return out;
}

struct RationalTableau {
    Tableau plus;   // SSYT(tau+, k)
    Tableau minus;  // SSYT(tau-, k)
    friend bool operator==(const RationalTableau&, const RationalTableau&) = default;
};

inline bool stembridge_condition(const Tableau& plus, const Tableau& minus, int k) {
    auto cp = plus.first_column();
    auto cm = minus.first_column();
    for (int ell = 1; ell <= k; ++ell) {
        int cnt = 0;
        for (int x : cp)
            if (x <= ell) ++cnt;
        for (int x : cm)
            if (x <= ell) ++cnt;
        if (cnt > ell) return false;
    }
    return true;
}

inline std::vector<RationalTableau> enumerate_rational_tableaux(const Shape& tau, int k) {
    auto plus = enumerate_ssyt(tau.tau_plus(), k);
    auto minus = enumerate_ssyt(tau.tau_minus(), k);
    std::vector<RationalTableau> out;
    for (auto& m : minus)
        for (auto& p : plus)
            if (stembridge_condition(p, m, k)) out.push_back({p, m});
    return out;
}

// King's semistandard symplectic tableaux: alphabet 1 < 1' < ... < k < k'
// encoded as 1..2k, with row-i entries >= the unbarred i (encoded 2i-1).
inline Int count_symplectic_tableaux(const Shape& tau, int k) {
    if (!tau.is_partition()) throw std::invalid_argument("symplectic shapes are partitions");
    std::vector<int> mins;
    for (size_t i = 0; i < tau.parts().size(); ++i) mins.push_back(2 * static_cast<int>(i) + 1);
    return Int(enumerate_ssyt(tau.parts(), 2 * k, mins).size());
}

inline Int binomial(int n, int m) {
    if (m < 0 || m > n) return 0;
    Int r = 1;
    for (int i = 0; i < m; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Int dim_u_tau(const GroupCase& cs, const Shape& tau) {
    tau.require_in_sigma(cs);
    switch (cs.group) {
        case Group::GL: return Int(enumerate_rational_tableaux(tau, cs.k).size());
        case Group::Sp: return count_symplectic_tableaux(tau, cs.k);
        case Group::O: return binomial(cs.k, static_cast<int>(tau.parts().size()));
    }
    return 0;
}

// Tableau data attached to a case: a single tableau for Sp/O, a pair for GL.
struct Tentacles {
    Tableau plus;   // Sp/O: the tableau T; GL: T+
    Tableau minus;  // GL: T-
    friend bool operator==(const Tentacles&, const Tentacles&) = default;
    friend bool operator<(const Tentacles& a, const Tentacles& b) {
        if (a.minus != b.minus) return a.minus < b.minus;
        return a.plus < b.plus;
    }
};

namespace detail {

// E' of the GL recipe: starred part fixed, unstarred labels pushed as far
// right as the antidiagonal condition allows.
inline std::vector<int> gl_greedy_plain(const std::vector<int>& starred, int k, int p, int q) {
    int need = k - static_cast<int>(starred.size());
    std::vector<int> plain;
    int count = 0;  // endpoints with antidiagonal index <= ell
    for (int ell = 1; need > 0; ++ell) {
        int star_label = p - ell + 1;
        if (star_label >= 1 &&
            std::find(starred.begin(), starred.end(), star_label) != starred.end())
            ++count;
        int j = q - ell + 1;
        if (j >= 1 && count < ell) {
            plain.push_back(j);
            ++count;
            --need;
        }
        if (j < 1 && star_label < 1)
            throw std::invalid_argument("starred endpoint set is not extendable");
    }
    std::sort(plain.begin(), plain.end());
    return plain;
}

}  // namespace detail

// The unique E with E => T, per the case's jellyfish definition.
inline EndpointSet assign_bin(const Tentacles& T, const GroupCase& cs, const Shape& tau) {
    cs.require_range();
    tau.require_in_sigma(cs);
    switch (cs.group) {
        case Group::GL: {
            EndpointSet E;
            E.starred = T.minus.first_column();
            auto plain = detail::gl_greedy_plain(E.starred, cs.k, cs.p, cs.q);
            auto fc = T.plus.first_column();
            for (size_t i = 0; i < fc.size(); ++i) plain[i] = std::min(plain[i], fc[i]);
            E.plain = plain;
            if (!endpoint_set_valid(E, cs)) throw std::logic_error("bin assignment failed");
            return E;
        }
        case Group::Sp: {
            EndpointSet M = e_max(cs);
            EndpointSet E = M;
            auto fc = T.plus.first_column();
            for (size_t i = 0; i < fc.size(); ++i) E.plain[i] = std::min(E.plain[i], fc[i]);
            return E;
        }
        case Group::O: {
            // lexicographically minimal k-subset containing T
            std::vector<int> t = T.plus.first_column();
            std::set<int> chosen(t.begin(), t.end());
            for (int v = 1; static_cast<int>(chosen.size()) < cs.k; ++v) chosen.insert(v);
            EndpointSet E;
            E.plain.assign(chosen.begin(), chosen.end());
            return E;
        }
    }
    throw std::invalid_argument("unsupported case");
}

// All tableaux (or pairs) of shape tau, grouped into their bins.
inline std::map<EndpointSet, std::vector<Tentacles>> bins(const GroupCase& cs, const Shape& tau) {
    cs.require_range();
    tau.require_in_sigma(cs);
    std::map<EndpointSet, std::vector<Tentacles>> out;
    for (auto& E : valid_endpoint_sets(cs)) out[E] = {};
    std::vector<Tentacles> all;
    if (cs.group == Group::GL) {
        auto plus = enumerate_ssyt(tau.tau_plus(), cs.q);
        auto minus = enumerate_ssyt(tau.tau_minus(), cs.p);
        for (auto& m : minus)
            for (auto& p : plus) all.push_back({p, m});
    } else {
        for (auto& t : enumerate_ssyt(tau.parts(), cs.n)) all.push_back({t, {}});
    }
    for (auto& T : all) out[assign_bin(T, cs, tau)].push_back(T);
    for (auto& [E, v] : out) std::sort(v.begin(), v.end());
    return out;
}

inline std::map<EndpointSet, Int> bin_sizes(const GroupCase& cs, const Shape& tau) {
    std::map<EndpointSet, Int> out;
    for (auto& [E, v] : bins(cs, tau)) out[E] = Int(v.size());
    return out;
}

// #tau_max (union of bins at maximal family size) against the independent
// dimension count.
inline bool tau_max_check(const GroupCase& cs, const Shape& tau) {
    Int total = 0;
    int dm = d_max(cs);
    for (auto& [E, sz] : bin_sizes(cs, tau))
        if (family_size(E, cs) == dm) total += sz;
    return total == dim_u_tau(cs, tau);
}

}  // namespace cov
