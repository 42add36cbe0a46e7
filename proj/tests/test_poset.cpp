#include <catch2/catch_amalgamated.hpp>

#include "covariants/poset.hpp"

using namespace cov;

TEST_CASE("poset point counts match the closed forms") {
    CHECK(Poset::build(GroupCase::gl(3, 3, 4)).size() == 12);
    CHECK(Poset::build(GroupCase::sp(3, 8)).size() == 28);
    CHECK(Poset::build(GroupCase::o(3, 7)).size() == 28);
    for (int p = 1; p <= 12; ++p)
        for (int q = 1; q <= 12; ++q)
            CHECK(Poset::build(GroupCase::gl(1, p, q)).size() == p * q);
    for (int n = 2; n <= 12; ++n) {
        CHECK(Poset::build(GroupCase::sp(1, n)).size() == n * (n - 1) / 2);
        CHECK(Poset::build(GroupCase::o(1, n)).size() == n * (n + 1) / 2);
    }
}

TEST_CASE("ADE posets match the drawn vertex counts") {
    for (int n = 4; n <= 10; ++n) CHECK(Poset::build(WallachCase::dn(n)).size() == 2 * (n - 1));
    CHECK(Poset::build(WallachCase::e6()).size() == 16);
    CHECK(Poset::build(WallachCase::e7(1)).size() == 27);
    CHECK(Poset::build(WallachCase::e7(2)).size() == 27);
}

TEST_CASE("order relation examples") {
    Poset gl = Poset::build(GroupCase::gl(2, 3, 4));
    CHECK(gl.leq({1, 1}, {2, 3}));
    CHECK_FALSE(gl.leq({2, 3}, {1, 1}));

    Poset o = Poset::build(GroupCase::o(3, 7));
    CHECK(o.leq({1, 5}, {2, 3}));  // flipped column order
    CHECK_FALSE(o.leq({2, 3}, {1, 5}));

    Poset sp = Poset::build(GroupCase::sp(3, 8));
    CHECK_FALSE(sp.leq({2, 5}, {3, 4}));
    CHECK_FALSE(sp.leq({3, 4}, {2, 5}));
}

TEST_CASE("order_leq is a partial order on small posets") {
    std::vector<GroupCase> cases = {GroupCase::gl(2, 4, 5), GroupCase::sp(2, 7),
                                    GroupCase::o(2, 6)};
    for (auto& cs : cases) {
        Poset P = Poset::build(cs);
        REQUIRE(P.size() <= 50);
        auto& pts = P.points();
        for (auto& a : pts) CHECK(P.leq(a, a));
        for (auto& a : pts)
            for (auto& b : pts) {
                if (P.leq(a, b) && P.leq(b, a)) CHECK(a == b);
                for (auto& c : pts)
                    if (P.leq(a, b) && P.leq(b, c)) CHECK(P.leq(a, c));
            }
    }
}

TEST_CASE("covers are the transitive reduction of the order") {
    std::vector<Poset> posets = {Poset::build(GroupCase::gl(2, 3, 4)),
                                 Poset::build(GroupCase::sp(2, 6)),
                                 Poset::build(GroupCase::o(2, 5)),
                                 Poset::build(WallachCase::e6())};
    for (auto& P : posets) {
        auto& pts = P.points();
        std::set<std::pair<int, int>> covers;
        for (auto& e : P.covers()) covers.insert(e);
        for (int a = 0; a < P.size(); ++a) {
            for (int b = 0; b < P.size(); ++b) {
                if (a == b || !P.leq(pts[a], pts[b])) continue;
                bool has_mid = false;
                for (int c = 0; c < P.size(); ++c)
                    if (c != a && c != b && P.leq(pts[a], pts[c]) && P.leq(pts[c], pts[b]))
                        has_mid = true;
                CHECK(covers.count({a, b}) == (has_mid ? 0u : 1u));
            }
        }
    }
}

TEST_CASE("antidiagonals") {
    Poset gl = Poset::build(GroupCase::gl(5, 8, 10));
    CHECK(gl.antidiagonal(1) == std::vector<PosetPoint>{{8, 10}});
    CHECK(gl.antidiagonal(3).size() == 3);

    // derived oracle: points at lattice distance 2(ell-1) from the corner,
    // along the antidiagonal direction
    Poset sp = Poset::build(GroupCase::sp(2, 6));
    std::vector<PosetPoint> expect;
    for (auto& u : sp.points())
        if ((5 - u.row) + (6 - u.col) == 2) expect.push_back(u);
    CHECK(sp.antidiagonal(2) == expect);
    CHECK(sp.antidiagonal(2).size() == 2);

    // |A_ell| = ell in the graded range, and every antidiagonal is an antichain
    for (auto cs : {GroupCase::gl(3, 6, 7), GroupCase::sp(3, 8)}) {
        Poset P = Poset::build(cs);
        for (int ell = 1; ell <= cs.k; ++ell) {
            auto A = P.antidiagonal(ell);
            CHECK(static_cast<int>(A.size()) == ell);
            for (auto& a : A)
                for (auto& b : A)
                    if (a != b) CHECK_FALSE(P.leq(a, b));
        }
    }
    Poset o = Poset::build(GroupCase::o(3, 7));
    for (int ell = 1; ell <= 3; ++ell) {
        auto A = o.antidiagonal(ell);
        CHECK(static_cast<int>(A.size()) == ell);
        for (auto& a : A)
            for (auto& b : A)
                if (a != b) CHECK_FALSE(o.leq(a, b));
    }
    CHECK_THROWS_AS(o.antidiagonal(0), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(GroupCase::gl(0, 3, 4).validate(), std::invalid_argument);
    CHECK_THROWS_AS(GroupCase::sp(4, 6).require_range(), std::invalid_argument);
    CHECK_THROWS_AS(GroupCase::o(8, 7).require_range(), std::invalid_argument);
    CHECK_NOTHROW(GroupCase::sp(3, 6).require_range());
    CHECK_THROWS_AS(WallachCase::e7(3).validate(), std::invalid_argument);
    CHECK_THROWS_AS(WallachCase::dn(5, 2).validate(), std::invalid_argument);
}
