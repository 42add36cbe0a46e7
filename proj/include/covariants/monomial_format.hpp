#pragma once

// Text form of monomials: "f[1,2]^3 * f[2,5] * phi[2 3 3; 4 4; 5]".
// phi[...] holds the tableau rows separated by ';' (for GL this is T+, and a
// second factor phi*[...] holds T-).

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "covariants/stanley.hpp"

namespace cov {

namespace detail {

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

// '*' separates factors except directly after "phi"
inline std::vector<std::string> split_factors(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '*') {
            std::string t = strip(cur);
            if (t.size() >= 3 && t.compare(t.size() - 3, 3, "phi") == 0) {
                cur += c;
                continue;
            }
            out.push_back(cur);
            cur.clear();
            continue;
        }
        cur += c;
    }
    if (!strip(cur).empty()) out.push_back(cur);
    return out;
}

inline std::vector<int> parse_ints(const std::string& s, char sep) {
    std::vector<int> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, sep)) {
        tok = strip(tok);
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

inline Tableau parse_tableau_rows(const std::string& body) {
    Tableau T;
    std::string row;
    std::istringstream is(body);
    while (std::getline(is, row, ';')) {
        row = strip(row);
        if (row.empty()) continue;
        std::vector<int> entries;
        std::istringstream rs(row);
        int v;
        while (rs >> v) entries.push_back(v);
        T.rows.push_back(entries);
    }
    return T;
}

}  // namespace detail

inline Monomial parse_monomial(const std::string& text) {
    Monomial m;
    for (std::string factor : detail::split_factors(text)) {
        factor = detail::strip(factor);
        if (factor.empty()) continue;
        if (factor.rfind("f[", 0) == 0) {
            auto close = factor.find(']');
            if (close == std::string::npos) throw std::invalid_argument("unterminated f[...]");
            auto idx = detail::parse_ints(factor.substr(2, close - 2), ',');
            if (idx.size() != 2) throw std::invalid_argument("f expects two indices");
            int exp = 1;
            auto caret = factor.find('^', close);
            if (caret != std::string::npos) exp = std::stoi(factor.substr(caret + 1));
            if (exp < 1) throw std::invalid_argument("exponent must be positive");
            m.exps[{idx[0], idx[1]}] += exp;
        } else if (factor.rfind("phi*[", 0) == 0) {
            auto close = factor.find(']');
            m.tentacles.minus = detail::parse_tableau_rows(factor.substr(5, close - 5));
        } else if (factor.rfind("phi[", 0) == 0) {
            auto close = factor.find(']');
            m.tentacles.plus = detail::parse_tableau_rows(factor.substr(4, close - 4));
        } else {
            throw std::invalid_argument("unrecognized factor: " + factor);
        }
    }
    return m;
}

inline std::string format_monomial(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " * ";
        first = false;
    };
    for (auto& [u, d] : m.exps) {
        if (d == 0) continue;
        sep();
        os << "f[" << u.row << "," << u.col << "]";
        if (d > 1) os << "^" << d;
    }
    auto emit_tab = [&](const Tableau& T, const char* name) {
        if (T.empty()) return;
        sep();
        os << name << "[";
        for (size_t r = 0; r < T.rows.size(); ++r) {
            if (r) os << "; ";
            for (size_t c = 0; c < T.rows[r].size(); ++c) {
                if (c) os << " ";
                os << T.rows[r][c];
            }
        }
        os << "]";
    };
    emit_tab(m.tentacles.plus, "phi");
    emit_tab(m.tentacles.minus, "phi*");
    if (first) os << "1";
    return os.str();
}

}  // namespace cov
