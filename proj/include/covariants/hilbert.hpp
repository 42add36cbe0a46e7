#pragma once

// The rational series attached to a dual pair: P_E(t), covariant and
// invariant series, the SL/SO extensions, Bernstein degrees, and the ADE
// Wallach series.

#include <map>
#include <stdexcept>
#include <vector>

#include "covariants/parallel.hpp"
#include "covariants/paths.hpp"
#include "covariants/poset.hpp"
#include "covariants/series.hpp"
#include "covariants/tableaux.hpp"

namespace cov {

// P_E(t) = sum_{F => E} (t^2)^{#cor(F)} / (1-t^2)^{d_E}
inline RationalSeries p_e_series(const EndpointSet& E, const GroupCase& cs) {
    auto fams = enumerate_families(E, cs);
    SparsePoly num;
    for (auto& F : fams) num.add_term(2 * static_cast<int>(F.corners.size()), 1);
    return {num, {{2, family_size(E, cs)}}};
}

struct CovariantTerm {
    EndpointSet endpoints;
    Int bin_size;
    RationalSeries p;  // P_E(t)
};

// The positive-combination form of the Hilbert series of a module of
// covariants, plus its reduced single fraction.
struct CovariantSeries {
    GroupCase cs;
    Shape tau;
    std::vector<CovariantTerm> terms;  // over all E in canonical order

    // t^{deg tau} * sum #tau_E P_E, over the common denominator
    RationalSeries sum() const {
        RationalSeries s = RationalSeries::zero();
        for (auto& t : terms)
            if (t.bin_size != 0) s += t.p.scaled(t.bin_size);
        return s.shifted(tau.degree());
    }
    RationalSeries reduced() const { return sum().reduced(); }

    // Bare sub-sums grouped by family size d_E (largest d first), without the
    // t^{deg tau} prefactor.
    std::vector<std::pair<int, RationalSeries>> components_by_size() const {
        std::map<int, RationalSeries> by_d;
        for (auto& t : terms) {
            if (t.bin_size == 0) continue;
            int d = t.p.denominator().at(0).mult;
            auto it = by_d.find(d);
            if (it == by_d.end())
                by_d.emplace(d, t.p.scaled(t.bin_size));
            else
                it->second += t.p.scaled(t.bin_size);
        }
        std::vector<std::pair<int, RationalSeries>> out(by_d.rbegin(), by_d.rend());
        return out;
    }
};

inline CovariantSeries covariant_series(const GroupCase& cs, const Shape& tau) {
    cs.require_range();
    tau.require_in_sigma(cs);
    auto sizes = bin_sizes(cs, tau);
    std::vector<EndpointSet> es;
    for (auto& [E, sz] : sizes) es.push_back(E);
    std::vector<RationalSeries> ps(es.size());
    parallel_for(static_cast<int>(es.size()),
                 [&](int i) { ps[i] = p_e_series(es[i], cs); });
    CovariantSeries out{cs, tau, {}};
    for (size_t i = 0; i < es.size(); ++i)
        out.terms.push_back({es[i], sizes.at(es[i]), ps[i]});
    return out;
}

// 1/(1-t^2)^{|P|} in the free range, otherwise P_{E_max}.
inline RationalSeries invariant_series(const GroupCase& cs) {
    cs.validate();
    if (cs.free_range()) {
        int pts = Poset::build(cs).size();
        return {SparsePoly::one(), {{2, pts}}};
    }
    return p_e_series(e_max(cs), cs);
}

// ---------------------------------------------------------------------------
// Maximal chains of tableau columns (used by the SL invariants)

struct MaximalChain {
    std::vector<std::vector<int>> columns;  // strictly increasing k-columns
    std::vector<int> increments;            // 1-based entry index raised at each cover
    std::vector<int> corner_positions;      // chain elements with in-index < out-index

    int length() const { return static_cast<int>(columns.size()); }
};

// All maximal chains in C_{>=E}: columns over [alphabet] that dominate E
// entrywise, each cover raising one entry by 1.
inline std::vector<MaximalChain> maximal_chains(const std::vector<int>& E, int alphabet, int k) {
    if (static_cast<int>(E.size()) != k) throw std::invalid_argument("column size must be k");
    for (int i = 0; i < k; ++i) {
        if (E[i] < 1 || E[i] > alphabet || (i > 0 && E[i] <= E[i - 1]))
            throw std::invalid_argument("not a strictly increasing column");
    }
    std::vector<int> top(k);
    for (int i = 0; i < k; ++i) top[i] = alphabet - k + 1 + i;

    std::vector<MaximalChain> out;
    MaximalChain cur;
    cur.columns.push_back(E);
    auto rec = [&](auto&& self) -> void {
        const std::vector<int>& c = cur.columns.back();
        if (c == top) {
            MaximalChain mc = cur;
            for (size_t m = 1; m + 1 < mc.columns.size(); ++m)
                if (mc.increments[m - 1] < mc.increments[m])
                    mc.corner_positions.push_back(static_cast<int>(m));
            out.push_back(std::move(mc));
            return;
        }
        for (int i = 0; i < k; ++i) {
            std::vector<int> nxt = c;
            ++nxt[i];
            if (nxt[i] > alphabet) continue;
            if (i + 1 < k && nxt[i] >= nxt[i + 1]) continue;
            cur.columns.push_back(nxt);
            cur.increments.push_back(i + 1);
            self(self);
            cur.columns.pop_back();
            cur.increments.pop_back();
        }
    };
    rec(rec);
    return out;
}

// c_E: the number of chain elements (covers + 1)
inline int chain_size(const std::vector<int>& E, int alphabet, int k) {
    int s = 0;
    for (int i = 0; i < k; ++i) s += (alphabet - k + 1 + i) - E[i];
    return s + 1;
}

// Q_E(t) = sum_C (t^k)^{#cor(C)} / (1-t^k)^{c_E}
inline RationalSeries q_e_series(const std::vector<int>& E, int alphabet, int k) {
    auto chains = maximal_chains(E, alphabet, k);
    int c_e = chain_size(E, alphabet, k);
    SparsePoly num;
    for (auto& C : chains) {
        if (C.length() != c_e) throw std::logic_error("chain sizes disagree");
        num.add_term(k * static_cast<int>(C.corner_positions.size()), 1);
    }
    return {num, {{k, c_e}}};
}

// ---------------------------------------------------------------------------
// SL and SO invariants

struct SLTerm {
    EndpointSet endpoints;  // all-plain or all-starred
    RationalSeries p;       // P_E
    RationalSeries q;       // Q_E
};

struct SLSeries {
    RationalSeries invariant_part;  // P_{E_max}
    std::vector<SLTerm> plain_terms;
    std::vector<SLTerm> starred_terms;
    int k = 0;

    RationalSeries total() const {
        RationalSeries s = invariant_part;
        for (auto& t : plain_terms) s += (t.p * t.q).shifted(k);
        for (auto& t : starred_terms) s += (t.p * t.q).shifted(k);
        return s;
    }
};

inline SLSeries sl_invariant_series(int k, int p, int q) {
    GroupCase cs = GroupCase::gl(k, p, q);
    cs.require_range();
    SLSeries out;
    out.k = k;
    out.invariant_part = p_e_series(e_max(cs), cs);
    for (auto& E : valid_endpoint_sets(cs)) {
        if (E.starred.empty()) {
            out.plain_terms.push_back({E, p_e_series(E, cs), q_e_series(E.plain, q, k)});
        } else if (E.plain.empty()) {
            out.starred_terms.push_back({E, p_e_series(E, cs), q_e_series(E.starred, p, k)});
        }
    }
    return out;
}

// P_{1..k}(t) + t^k sum_E P_E(t)
inline RationalSeries so_invariant_series(int k, int n) {
    GroupCase cs = GroupCase::o(k, n);
    cs.require_range();
    RationalSeries s = p_e_series(e_max(cs), cs);
    RationalSeries semi = RationalSeries::zero();
    auto es = valid_endpoint_sets(cs);
    std::vector<RationalSeries> ps(es.size());
    parallel_for(static_cast<int>(es.size()),
                 [&](int i) { ps[i] = p_e_series(es[i], cs); });
    for (auto& pe : ps) semi += pe;
    return s + semi.shifted(k);
}

// ---------------------------------------------------------------------------
// Bernstein degree

// #tau_max times the numerator of P_{E_max} at t=1; cross-checked against the
// numerator of the reduced covariant series over (1-t^2)^{d_max}.
inline Int bernstein_degree(const GroupCase& cs, const Shape& tau) {
    cs.validate();
    tau.require_in_sigma(cs);
    if (!cs.in_range()) return dim_u_tau(cs, tau);  // free module over the polynomial ring
    int dm = d_max(cs);
    Int tau_max_size = 0;
    auto series = covariant_series(cs, tau);
    for (auto& t : series.terms)
        if (t.p.denominator().at(0).mult == dm) tau_max_size += t.bin_size;
    Int via_emax = tau_max_size * p_e_series(e_max(cs), cs).numerator().eval_at_one();
    Int via_series = series.sum().numerator_over({{2, dm}}).eval_at_one();
    if (via_emax != via_series) throw std::logic_error("Bernstein degree routes disagree");
    return via_emax;
}

// ---------------------------------------------------------------------------
// Wallach series: sum_F t^{#cor(F)} / (1-t)^d over the ADE facets
inline RationalSeries wallach_series(const WallachCase& wc) {
    auto facets = wallach_facets(wc);
    if (facets.empty()) throw std::logic_error("no facets");
    int d = facets.front().size_d;
    SparsePoly num;
    for (auto& F : facets) {
        if (F.size_d != d) throw std::logic_error("facet sizes disagree");
        num.add_term(static_cast<int>(F.corners.size()), 1);
    }
    return {num, {{1, d}}};
}

}  // namespace cov
