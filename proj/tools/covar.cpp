// Command-line front end: posets, endpoint sets, families, bins, Hilbert
// series, Bernstein degrees, Stanley decompositions, monomial location,
// weights, diagrams, and the brute-force oracle check.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "covariants/hilbert.hpp"
#include "covariants/json_io.hpp"
#include "covariants/monomial_format.hpp"
#include "covariants/oracle.hpp"
#include "covariants/parallel.hpp"
#include "covariants/render.hpp"

namespace {

using namespace cov;

struct Options {
    std::string group;
    int k = 0, p = 0, q = 0, n = 0;
    std::string tau_text;
    std::string wallach;
    int level = 1;
    std::string format = "json";
    std::string out;
    std::string endpoints;
    std::string monomial;
    std::string object = "poset";
    int index = 0;
    int max_degree = 8;
    int threads = 1;
};

GroupCase group_case(const Options& o) {
    if (o.group == "gl") return GroupCase::gl(o.k, o.p, o.q);
    if (o.group == "sp") return GroupCase::sp(o.k, o.n);
    if (o.group == "o") return GroupCase::o(o.k, o.n);
    throw std::invalid_argument("--group must be gl, sp, or o");
}

WallachCase wallach_case(const Options& o) {
    if (o.wallach == "Dn" || o.wallach == "dn") return WallachCase::dn(o.n, o.level);
    if (o.wallach == "E6" || o.wallach == "e6") return WallachCase::e6(o.level);
    if (o.wallach == "E7" || o.wallach == "e7") return WallachCase::e7(o.level);
    throw std::invalid_argument("--wallach must be Dn, E6, or E7");
}

Shape parse_tau(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoi(tok));
    return Shape(parts);
}

EndpointSet parse_endpoints(const std::string& text) {
    EndpointSet E;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        if (tok.back() == '*') {
            tok.pop_back();
            E.starred.push_back(std::stoi(tok));
        } else {
            E.plain.push_back(std::stoi(tok));
        }
    }
    std::sort(E.starred.begin(), E.starred.end());
    std::sort(E.plain.begin(), E.plain.end());
    return E;
}

void emit(const Options& o, const std::string& text) {
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw std::invalid_argument("cannot open output file " + o.out);
        f << text;
    } else {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << "\n";
    }
}

void emit_series(const Options& o, const RationalSeries& s) {
    if (o.format == "latex")
        emit(o, s.reduced().latex());
    else if (o.format == "ascii")
        emit(o, s.reduced().str());
    else
        emit(o, to_json(s).dump(2));
}

int run(const Options& o, const std::string& verb, const std::string& sub) {
    set_max_threads(o.threads);
    if (verb == "poset") {
        Poset P = o.wallach.empty() ? Poset::build(group_case(o)) : Poset::build(wallach_case(o));
        if (o.format == "ascii")
            emit(o, render_poset_ascii(P));
        else if (o.format == "tikz")
            emit(o, render_poset_tikz(P));
        else
            emit(o, to_json(P).dump(2));
        return 0;
    }
    if (verb == "endpoints") {
        GroupCase cs = group_case(o);
        json arr = json::array();
        for (auto& E : valid_endpoint_sets(cs)) arr.push_back(to_json(E));
        emit(o, arr.dump(2));
        return 0;
    }
    if (verb == "families") {
        GroupCase cs = group_case(o);
        EndpointSet E = parse_endpoints(o.endpoints);
        json arr = json::array();
        for (auto& F : enumerate_families(E, cs)) arr.push_back(to_json(F));
        emit(o, arr.dump(2));
        return 0;
    }
    if (verb == "bins") {
        GroupCase cs = group_case(o);
        Shape tau = parse_tau(o.tau_text);
        json arr = json::array();
        for (auto& [E, members] : bins(cs, tau)) {
            json tabs = json::array();
            for (auto& T : members) tabs.push_back(to_json(T, cs));
            arr.push_back({{"endpoints", to_json(E)},
                           {"size", members.size()},
                           {"tableaux", tabs}});
        }
        emit(o, arr.dump(2));
        return 0;
    }
    if (verb == "series") {
        if (sub == "covariants") {
            auto s = covariant_series(group_case(o), parse_tau(o.tau_text));
            if (o.format == "json")
                emit(o, to_json(s).dump(2));
            else
                emit_series(o, s.sum());
        } else if (sub == "invariants") {
            emit_series(o, invariant_series(group_case(o)));
        } else if (sub == "sl") {
            auto s = sl_invariant_series(o.k, o.p, o.q);
            if (o.format == "json")
                emit(o, to_json(s).dump(2));
            else
                emit_series(o, s.total());
        } else if (sub == "so") {
            emit_series(o, so_invariant_series(o.k, o.n));
        } else if (sub == "wallach") {
            emit_series(o, wallach_series(wallach_case(o)));
        } else {
            throw std::invalid_argument("unknown series kind");
        }
        return 0;
    }
    if (verb == "bernstein") {
        GroupCase cs = group_case(o);
        Shape tau = parse_tau(o.tau_text);
        Int deg = bernstein_degree(cs, tau);
        if (o.format == "json") {
            json j{{"case", to_json(cs)},
                   {"tau", tau.parts()},
                   {"bernstein_degree", to_json(deg)},
                   {"lambda", to_json(lambda_from_tau(cs, tau))}};
            emit(o, j.dump(2));
        } else {
            emit(o, deg.str());
        }
        return 0;
    }
    if (verb == "stanley") {
        GroupCase cs = group_case(o);
        Shape tau = parse_tau(o.tau_text);
        json arr = json::array();
        for (auto& j : enumerate_jellyfish(cs, tau))
            arr.push_back(to_json(stanley_space(j), cs));
        emit(o, arr.dump(2));
        return 0;
    }
    if (verb == "locate") {
        GroupCase cs = group_case(o);
        Shape tau = parse_tau(o.tau_text);
        Monomial m = parse_monomial(o.monomial);
        auto lm = locate(m, cs, tau);
        json fe = json::array();
        for (auto& [u, d] : lm.free_exponents) fe.push_back({u.row, u.col, d});
        json j{{"family", to_json(lm.jellyfish.family)},
               {"tableau", to_json(lm.jellyfish.tentacles, cs)},
               {"free_exponents", fe}};
        emit(o, j.dump(2));
        return 0;
    }
    if (verb == "weight") {
        GroupCase cs = group_case(o);
        Monomial m = parse_monomial(o.monomial);
        emit(o, to_json(weight(m, cs)).dump(2));
        return 0;
    }
    if (verb == "diagram") {
        if (o.object == "poset") {
            Poset P =
                o.wallach.empty() ? Poset::build(group_case(o)) : Poset::build(wallach_case(o));
            if (o.format == "tikz")
                emit(o, render_poset_tikz(P));
            else
                emit(o, render_poset_ascii(P));
            return 0;
        }
        GroupCase cs = group_case(o);
        if (o.object == "jellyfish") {
            Shape tau = parse_tau(o.tau_text);
            auto all = enumerate_jellyfish(cs, tau);
            if (o.index < 0 || o.index >= static_cast<int>(all.size()))
                throw std::invalid_argument("--index out of range");
            auto& j = all[o.index];
            if (o.format == "svg")
                emit(o, render_jellyfish_svg(j.family, j.tentacles, cs));
            else if (o.format == "tikz")
                emit(o, render_jellyfish_tikz(j.family, j.tentacles, cs));
            else
                emit(o, render_jellyfish_ascii(j.family, j.tentacles, cs));
            return 0;
        }
        if (o.object == "monomial" || o.object == "arc") {
            Monomial m = parse_monomial(o.monomial);
            if (o.object == "arc") {
                emit(o, render_arc_ascii(arc_diagram(m, cs)));
                return 0;
            }
            Shape tau = parse_tau(o.tau_text);
            auto lm = locate(m, cs, tau);
            if (o.format == "svg")
                emit(o, render_jellyfish_svg(lm.jellyfish.family, lm.jellyfish.tentacles, cs));
            else if (o.format == "tikz")
                emit(o, render_jellyfish_tikz(lm.jellyfish.family, lm.jellyfish.tentacles, cs));
            else
                emit(o, render_monomial_ascii(lm, cs));
            return 0;
        }
        throw std::invalid_argument("--object must be poset, jellyfish, monomial, or arc");
    }
    if (verb == "oracle") {
        GroupCase cs = group_case(o);
        Shape tau = parse_tau(o.tau_text);
        auto rep = check_equivalence(cs, tau, o.max_degree);
        emit(o, to_json(rep).dump(2));
        return rep.all_ok ? 0 : 3;
    }
    throw std::invalid_argument("unknown verb");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley decompositions, Hilbert series, and Bernstein degrees of "
                 "modules of covariants for the classical groups"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--group", o.group, "gl | sp | o");
        cmd->add_option("--k", o.k, "rank parameter");
        cmd->add_option("--p", o.p, "number of covectors (GL)");
        cmd->add_option("--q", o.q, "number of vectors (GL)");
        cmd->add_option("--n", o.n, "number of vectors (Sp/O), or n for Dn");
        cmd->add_option("--tau", o.tau_text, "shape, e.g. 2,1 (negatives allowed for GL)");
        cmd->add_option("--wallach", o.wallach, "Dn | E6 | E7");
        cmd->add_option("--level", o.level, "Wallach level k");
        cmd->add_option("--format", o.format, "json | latex | ascii | svg | tikz");
        cmd->add_option("--out", o.out, "write output to a file");
        cmd->add_option("--threads", o.threads, "worker thread cap");
        cmd->add_option("--endpoints", o.endpoints, "endpoint labels, e.g. 1,5 or 2*,5*,3");
        cmd->add_option("--monomial", o.monomial, "e.g. \"f[1,2]^3 * f[2,5] * phi[2 3; 4]\"");
        cmd->add_option("--object", o.object, "poset | jellyfish | monomial | arc");
        cmd->add_option("--index", o.index, "jellyfish index within stanley list order");
        cmd->add_option("--max-degree", o.max_degree, "largest degree the oracle checks");
    };

    std::vector<std::pair<std::string, std::string>> verbs = {
        {"poset", "show"},     {"endpoints", "list"}, {"families", "enum"}, {"bins", ""},
        {"series", ""},        {"bernstein", ""},     {"stanley", "list"},  {"locate", ""},
        {"weight", ""},        {"diagram", ""},       {"oracle", "check"}};
    std::map<CLI::App*, std::pair<std::string, std::string>> dispatch;
    for (auto& [verb, sub] : verbs) {
        CLI::App* cmd = app.add_subcommand(verb);
        if (verb == "series") {
            for (std::string kind : {"covariants", "invariants", "sl", "so", "wallach"}) {
                CLI::App* sc = cmd->add_subcommand(kind);
                add_common(sc);
                dispatch[sc] = {verb, kind};
            }
            cmd->require_subcommand(1);
        } else if (!sub.empty()) {
            CLI::App* sc = cmd->add_subcommand(sub);
            add_common(sc);
            dispatch[sc] = {verb, sub};
            cmd->require_subcommand(1);
        } else {
            add_common(cmd);
            dispatch[cmd] = {verb, ""};
        }
    }

    CLI11_PARSE(app, argc, argv);

    try {
        for (auto& [cmd, name] : dispatch)
            if (cmd->parsed() && (cmd->get_parent() == &app || cmd->get_parent()->parsed()))
                return run(o, name.first, name.second);
        std::cerr << "no verb given\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n"
                  << cov::error_json("invalid_parameters", e.what()).dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << cov::error_json("internal_error", e.what()).dump() << "\n";
        return 1;
    }
}
