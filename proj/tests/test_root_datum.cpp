#include <catch2/catch_amalgamated.hpp>

#include "alcove/root_datum.hpp"

using namespace alcove;

TEST_CASE("GL_2 preset") {
    RootDatum d = build_root_datum("GL_2");
    REQUIRE(d.rank() == 2);
    REQUIRE(d.positive_roots().size() == 1);
    REQUIRE(d.positive_roots()[0] == IVec{1, -1});
    REQUIRE(d.simple_coroots()[0] == IVec{1, -1});
    REQUIRE(d.rho() == IVec{1, 0});
    REQUIRE(d.weyl().size() == 2);
}

TEST_CASE("GL_1 torus case") {
    RootDatum d = build_root_datum("GL1");
    REQUIRE(d.positive_roots().empty());
    REQUIRE(d.weyl().size() == 1);
    REQUIRE(d.h_rho() == 0);
}

TEST_CASE("GL_3 Weyl group and positive roots") {
    RootDatum d = build_root_datum("GL3");
    REQUIRE(d.weyl().size() == 6);
    std::set<IVec> pos(d.positive_roots().begin(), d.positive_roots().end());
    std::set<IVec> expect{{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
    REQUIRE(pos == expect);
}

TEST_CASE("GSp_4 preset") {
    RootDatum d = build_root_datum("GSp4");
    REQUIRE(d.rank() == 3);
    REQUIRE(d.weyl().size() == 8);
    REQUIRE(d.positive_roots().size() == 4);
    REQUIRE(d.h_rho() == 3);
    RootDatum alias = build_root_datum("Sp_4-similitude");
    REQUIRE(alias.positive_roots() == d.positive_roots());
    RootDatum g6 = build_root_datum("Sp_6-similitude");
    REQUIRE(g6.rank() == 4);
    REQUIRE(g6.weyl().size() == 48);
    REQUIRE(g6.positive_roots().size() == 9);
}

TEST_CASE("height") {
    RootDatum d2 = build_root_datum("GL2");
    REQUIRE(d2.height(IVec{1, 0}) == 1);
    REQUIRE(d2.height(IVec{0, 0}) == 0);
    RootDatum d3 = build_root_datum("GL3");
    REQUIRE(d3.height(IVec{2, 0, -1}) == 3);
}

TEST_CASE("weyl_orbit") {
    RootDatum d = build_root_datum("GL2");
    auto orb = d.weyl_orbit(IVec{1, 0});
    REQUIRE(orb.size() == 2);
    REQUIRE(d.weyl_orbit(IVec{1, 1}).size() == 1);
    RootDatum d3 = build_root_datum("GL3");
    REQUIRE(d3.weyl_orbit(IVec{1, 0, 0}).size() == 3);
}

TEST_CASE("orbit size equals |W|/|Stab| (brute force)") {
    for (const char* name : {"GL2", "GL3", "GSp4"}) {
        RootDatum d = build_root_datum(name);
        std::vector<Weight> probes;
        probes.push_back(d.rho());
        probes.push_back(IVec(d.rank(), 0));
        probes.push_back(d.simple_coroots()[0]);
        for (const auto& lam : probes) {
            size_t stab = 0;
            for (const auto& w : d.weyl())
                if (d.w_act(w, lam) == lam) ++stab;
            REQUIRE(d.weyl_orbit(lam).size() == d.weyl().size() / stab);
        }
    }
}

TEST_CASE("Weyl elements permute the roots; word lengths count inversions") {
    for (const char* name : {"GL2", "GL3", "GSp4"}) {
        RootDatum d = build_root_datum(name);
        for (const auto& w : d.weyl()) {
            size_t inversions = 0;
            for (const auto& a : d.positive_roots()) {
                IVec img = d.w_act_root(w, a);
                REQUIRE(d.is_root(img));
                if (!d.is_positive_root(img)) ++inversions;
            }
            REQUIRE(inversions == w.length());
            // stored word multiplies out to the matrix
            IMat m = IMat::identity(d.rank());
            for (int i : w.word) m = m * d.simple_reflection(i).mat;
            REQUIRE(m == w.mat);
        }
    }
}

TEST_CASE("pi must permute the simple roots") {
    RootDatum d = build_root_datum("GL2");
    IMat bad(2, 2);
    bad(0, 0) = 1;
    bad(0, 1) = 1;
    bad(1, 1) = 1;
    REQUIRE_THROWS_AS(RootDatum(2, d.simple_roots(), d.simple_coroots(), d.rho(), bad), error);
    // the swap automorphism of GL_2 maps alpha -> -alpha, not a simple-root permutation
    IMat swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    REQUIRE_THROWS_AS(RootDatum(2, d.simple_roots(), d.simple_coroots(), d.rho(), swap), error);
}

TEST_CASE("Cartan validation rejects invalid data") {
    // <coroot, root> = 2 on the diagonal fails here
    std::vector<IVec> roots{{1, 0}};
    std::vector<IVec> coroots{{1, 0}};
    REQUIRE_THROWS_AS(RootDatum(2, roots, coroots, IVec{1, 0}, IMat::identity(2)), error);
    // affine A_1 Cartan matrix (rank 2, not finite type)
    std::vector<IVec> r2{{2, -2}, {-2, 2}};
    std::vector<IVec> c2{{1, 0}, {0, 1}};
    REQUIRE_THROWS_AS(RootDatum(2, r2, c2, IVec{1, 1}, IMat::identity(2)), error);
}

TEST_CASE("explicit datum equals preset") {
    std::vector<IVec> roots{{1, -1}};
    std::vector<IVec> coroots{{1, -1}};
    RootDatum d(2, roots, coroots, IVec{1, 0}, IMat::identity(2));
    RootDatum p = build_root_datum("GL2");
    REQUIRE(d.positive_roots() == p.positive_roots());
    REQUIRE(d.weyl().size() == p.weyl().size());
}

TEST_CASE("fundamental coweights") {
    RootDatum d = build_root_datum("GL3");
    for (size_t i = 0; i < d.ss_rank(); ++i) {
        const IVec& om = d.fundamental_coweight(i);
        for (size_t j = 0; j < d.ss_rank(); ++j)
            REQUIRE(dot(om, d.simple_roots()[j]) == (i == j ? 1 : 0));
    }
    RootDatum g = build_root_datum("GSp4");
    for (size_t i = 0; i < g.ss_rank(); ++i)
        for (size_t j = 0; j < g.ss_rank(); ++j)
            REQUIRE(dot(g.fundamental_coweight(i), g.simple_roots()[j]) == (i == j ? 1 : 0));
}

TEST_CASE("simply-connected plus torus presets") {
    RootDatum a1 = build_root_datum("SC-A1+GL1");
    REQUIRE(a1.weyl().size() == 2);
    RootDatum c2 = build_root_datum("SC-C2+GL1");
    REQUIRE(c2.weyl().size() == 8);
    RootDatum g2 = build_root_datum("SC-G2+GL1");
    REQUIRE(g2.weyl().size() == 12);
    REQUIRE(g2.positive_roots().size() == 6);
}
