#pragma once

// Exact rational generating functions: integer polynomials over factored
// denominators of the form prod (1 - t^a)^e.  All arithmetic is exact;
// coefficients are arbitrary-precision integers.

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cov {

using Int = boost::multiprecision::cpp_int;

// Sparse univariate polynomial in t with Int coefficients.
class SparsePoly {
public:
    SparsePoly() = default;
    explicit SparsePoly(Int constant) {
        if (constant != 0) c_[0] = std::move(constant);
    }
    static SparsePoly term(int exp, Int coeff) {
        SparsePoly p;
        if (coeff != 0) p.c_[exp] = std::move(coeff);
        return p;
    }
    static SparsePoly one() { return SparsePoly(Int(1)); }

    const std::map<int, Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
    Int coeff(int e) const {
        auto it = c_.find(e);
        return it == c_.end() ? Int(0) : it->second;
    }

    void add_term(int exp, const Int& coeff) {
        if (coeff == 0) return;
        auto it = c_.find(exp);
        if (it == c_.end()) {
            c_[exp] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) c_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (auto& [e, v] : o.c_) add_term(e, v);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) {
        for (auto& [e, v] : o.c_) add_term(e, -v);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (auto& [ea, va] : a.c_)
            for (auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
        return r;
    }

    SparsePoly shifted(int dexp) const {
        SparsePoly r;
        for (auto& [e, v] : c_) r.c_[e + dexp] = v;
        return r;
    }
    SparsePoly scaled(const Int& s) const {
        SparsePoly r;
        if (s == 0) return r;
        for (auto& [e, v] : c_) r.c_[e] = v * s;
        return r;
    }

    Int eval_at_one() const {
        Int s = 0;
        for (auto& [e, v] : c_) s += v;
        return s;
    }

    // Exact division by (1 - t^a); returns false if not divisible.
    bool divide_by_one_minus(int a, SparsePoly& quotient) const {
        // q satisfies q_i = n_i + q_{i-a}; remainder must vanish.
        if (is_zero()) {
            quotient = SparsePoly();
            return true;
        }
        int d = degree();
        std::vector<Int> dense(d + 1);
        for (auto& [e, v] : c_) dense[e] = v;
        std::vector<Int> q(d + 1);
        for (int i = 0; i <= d; ++i) {
            q[i] = dense[i];
            if (i >= a) q[i] += q[i - a];
        }
        // quotient degree must be <= d - a, so the top a entries carry the remainder
        for (int i = std::max(0, d - a + 1); i <= d; ++i)
            if (q[i] != 0) return false;
        SparsePoly out;
        for (int i = 0; i <= d - a; ++i) out.add_term(i, q[i]);
        quotient = std::move(out);
        return true;
    }

    bool operator==(const SparsePoly& o) const { return c_ == o.c_; }

    bool is_palindromic() const {
        if (is_zero()) return true;
        int lo = c_.begin()->first, hi = c_.rbegin()->first;
        for (int e = lo; e <= hi; ++e)
            if (coeff(e) != coeff(lo + hi - e)) return false;
        return true;
    }

    // "70t^3 - 14t^5 - 14t^7 + 6t^9"
    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [e, v] : c_) {
            Int a = v;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (a != 1 || e == 0) os << a.str();
            if (e == 1)
                os << "t";
            else if (e > 1)
                os << "t^" << e;
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, Int> c_;
};

struct DenomFactor {
    int base = 1;   // the a in (1 - t^a)
    int mult = 0;   // the exponent e
    friend bool operator==(const DenomFactor&, const DenomFactor&) = default;
};

inline SparsePoly one_minus_power(int a) {
    SparsePoly p = SparsePoly::one();
    p.add_term(a, Int(-1));
    return p;
}

inline SparsePoly denominator_poly(const std::vector<DenomFactor>& den) {
    SparsePoly p = SparsePoly::one();
    for (auto& f : den)
        for (int i = 0; i < f.mult; ++i) p = p * one_minus_power(f.base);
    return p;
}

// numerator / prod (1 - t^base)^mult, held in factored form.
class RationalSeries {
public:
    RationalSeries() = default;
    RationalSeries(SparsePoly num, std::vector<DenomFactor> den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize_factors();
    }
    static RationalSeries zero() { return RationalSeries(); }
    static RationalSeries whole(SparsePoly p) { return RationalSeries(std::move(p), {}); }

    const SparsePoly& numerator() const { return num_; }
    const std::vector<DenomFactor>& denominator() const { return den_; }

    RationalSeries shifted(int dexp) const { return {num_.shifted(dexp), den_}; }
    RationalSeries scaled(const Int& s) const { return {num_.scaled(s), den_}; }

    friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
        if (a.num_.is_zero()) return b;
        if (b.num_.is_zero()) return a;
        std::vector<DenomFactor> den = merge_max(a.den_, b.den_);
        SparsePoly na = a.num_ * denominator_poly(quotient_factors(den, a.den_));
        SparsePoly nb = b.num_ * denominator_poly(quotient_factors(den, b.den_));
        return {na + nb, den};
    }
    RationalSeries& operator+=(const RationalSeries& o) { return *this = *this + o; }

    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
        std::vector<DenomFactor> den = merge_sum(a.den_, b.den_);
        return {a.num_ * b.num_, den};
    }

    // Cancels (1 - t^a) factors of the denominator that divide the numerator.
    RationalSeries reduced() const {
        SparsePoly n = num_;
        std::vector<DenomFactor> den;
        for (auto f : den_) {
            while (f.mult > 0) {
                SparsePoly q;
                if (!n.divide_by_one_minus(f.base, q)) break;
                n = std::move(q);
                --f.mult;
            }
            if (f.mult > 0) den.push_back(f);
        }
        return {std::move(n), std::move(den)};
    }

    // Rewrites the series over the given denominator; throws if that is not exact.
    SparsePoly numerator_over(const std::vector<DenomFactor>& target) const {
        std::vector<DenomFactor> mul, div;
        factor_delta(target, den_, mul, div);
        SparsePoly n = num_ * denominator_poly(mul);
        for (auto& f : div) {
            for (int i = 0; i < f.mult; ++i) {
                SparsePoly q;
                if (!n.divide_by_one_minus(f.base, q))
                    throw std::invalid_argument("series does not admit the requested denominator");
                n = std::move(q);
            }
        }
        return n;
    }

    // Exact Taylor coefficients c_0..c_D.
    std::vector<Int> expand(int D) const {
        if (D < 0) throw std::invalid_argument("expand requires D >= 0");
        std::vector<Int> acc(D + 1);
        for (auto& [e, v] : num_.coeffs())
            if (e <= D && e >= 0) acc[e] = v;
        for (auto& f : den_) {
            for (int rep = 0; rep < f.mult; ++rep) {
                // multiply by 1/(1-t^a) = sum_j t^{aj}
                for (int i = f.base; i <= D; ++i) acc[i] += acc[i - f.base];
            }
        }
        return acc;
    }

    bool equals(const RationalSeries& o) const {
        return num_ * denominator_poly(o.den_) == o.num_ * denominator_poly(den_);
    }
    bool operator==(const RationalSeries& o) const { return equals(o); }

    // "\frac{70t^3 - 14t^5 - 14t^7 + 6t^9}{(1-t^2)^{14}}"
    std::string latex() const {
        if (den_.empty()) return num_.str();
        std::ostringstream os;
        os << "\\frac{" << num_.str() << "}{";
        for (auto& f : den_) {
            os << "(1-t";
            if (f.base != 1) os << "^" << f.base;
            os << ")";
            if (f.mult != 1) os << "^{" << f.mult << "}";
        }
        os << "}";
        return os.str();
    }

    std::string str() const {
        if (den_.empty()) return num_.str();
        std::ostringstream os;
        os << "(" << num_.str() << ") / ";
        for (auto& f : den_) {
            os << "(1-t";
            if (f.base != 1) os << "^" << f.base;
            os << ")";
            if (f.mult != 1) os << "^" << f.mult;
        }
        return os.str();
    }

private:
    SparsePoly num_;
    std::vector<DenomFactor> den_;

    void normalize_factors() {
        std::map<int, int> m;
        for (auto& f : den_) {
            if (f.base <= 0) throw std::invalid_argument("denominator base must be positive");
            if (f.mult < 0) throw std::invalid_argument("denominator multiplicity must be >= 0");
            m[f.base] += f.mult;
        }
        den_.clear();
        for (auto& [b, e] : m)
            if (e > 0) den_.push_back({b, e});
    }

    static std::vector<DenomFactor> merge_max(const std::vector<DenomFactor>& a,
                                              const std::vector<DenomFactor>& b) {
        std::map<int, int> m;
        for (auto& f : a) m[f.base] = std::max(m[f.base], f.mult);
        for (auto& f : b) m[f.base] = std::max(m[f.base], f.mult);
        std::vector<DenomFactor> r;
        for (auto& [base, mult] : m) r.push_back({base, mult});
        return r;
    }
    static std::vector<DenomFactor> merge_sum(const std::vector<DenomFactor>& a,
                                              const std::vector<DenomFactor>& b) {
        std::map<int, int> m;
        for (auto& f : a) m[f.base] += f.mult;
        for (auto& f : b) m[f.base] += f.mult;
        std::vector<DenomFactor> r;
        for (auto& [base, mult] : m) r.push_back({base, mult});
        return r;
    }
    // big / small, assuming small <= big componentwise
    static std::vector<DenomFactor> quotient_factors(const std::vector<DenomFactor>& big,
                                                     const std::vector<DenomFactor>& small) {
        std::map<int, int> m;
        for (auto& f : big) m[f.base] += f.mult;
        for (auto& f : small) m[f.base] -= f.mult;
        std::vector<DenomFactor> r;
        for (auto& [base, mult] : m) {
            if (mult < 0) throw std::logic_error("denominator mismatch");
            if (mult > 0) r.push_back({base, mult});
        }
        return r;
    }
    // target/current split into a multiply part and a divide part
    static void factor_delta(const std::vector<DenomFactor>& target,
                             const std::vector<DenomFactor>& current,
                             std::vector<DenomFactor>& mul, std::vector<DenomFactor>& div) {
        std::map<int, int> m;
        for (auto& f : target) m[f.base] += f.mult;
        for (auto& f : current) m[f.base] -= f.mult;
        for (auto& [base, mult] : m) {
            if (mult > 0) mul.push_back({base, mult});
            if (mult < 0) div.push_back({base, -mult});
        }
    }
};

}  // namespace cov
