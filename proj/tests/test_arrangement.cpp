#include "doctest.h"

#include "rootoidlab/arrangement.hpp"
#include "rootoidlab/cat.hpp"
#include "rootoidlab/classify.hpp"
#include "rootoidlab/coxeter.hpp"
#include "test_support.hpp"

using namespace rootoidlab;
using namespace testsupport;

namespace {

RationalArrangement arr(int dim, std::vector<std::vector<long long>> normals) {
    return RationalArrangement{dim, std::move(normals)};
}

// Deterministic rational sample points; every sign vector realized by a
// sample must be a chamber, and every chamber's stored sample must realize
// its sign vector.
void cross_check_samples(const ArrangementBundle& B) {
    const auto& A = B.arrangement;
    for (size_t c = 0; c < B.chambers.size(); ++c) {
        for (size_t i = 0; i < A.normals.size(); ++i) {
            Rational v = 0;
            for (int j = 0; j < A.dim; ++j)
                v += Rational(A.normals[i][static_cast<size_t>(j)]) * B.samples[c][static_cast<size_t>(j)];
            CHECK(((v > 0) == (B.chambers[c][i] > 0)));
            CHECK(v != 0);
        }
    }
    // Pseudo-random integer points (seeded LCG).
    unsigned long long state = 88172645463325252ull;
    auto next = [&] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<long long>(state % 41) - 20;
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<long long> pt(static_cast<size_t>(A.dim));
        for (auto& v : pt) v = next();
        std::vector<int> signs;
        bool on_hyperplane = false;
        for (const auto& nrm : A.normals) {
            long long dot = 0;
            for (int j = 0; j < A.dim; ++j) dot += nrm[static_cast<size_t>(j)] * pt[static_cast<size_t>(j)];
            if (dot == 0) { on_hyperplane = true; break; }
            signs.push_back(dot > 0 ? 1 : -1);
        }
        if (on_hyperplane) continue;
        CHECK(B.chamber_index(signs) >= 0);
    }
}

}  // namespace

TEST_CASE("one line in one dimension: two chambers, weak orders are 2-chains") {
    auto B = build_arrangement(arr(1, {{1}}));
    CHECK(B.chambers.size() == 2);
    CHECK(B.simplicial);
    for (int a = 0; a < 2; ++a) {
        WeakOrder wo(*B.prd, a);
        CHECK(wo.size() == 2);
        CHECK(wo.leq(0, 1));
    }
    auto r = classify(*B.prd);
    CHECK(r.rootoid);
    CHECK(r.complete);
    CHECK(r.principal);
}

TEST_CASE("three generic lines in the plane: hexagon of chambers") {
    auto B = build_arrangement(arr(2, {{1, 0}, {0, 1}, {1, 1}}));
    CHECK(B.chambers.size() == 6);
    CHECK(B.simplicial);
    cross_check_samples(B);

    // Every chamber has exactly two walls; wall flips are chambers.
    for (const auto& w : B.walls) CHECK(w.size() == 2);

    auto r = classify(*B.prd);
    CHECK(r.rootoid);
    CHECK(r.complete);
    CHECK(r.principal);
    CHECK(is_connected(B.G));
    CHECK(is_simply_connected(B.G));

    // Simple morphisms go between adjacent chambers (combinatorial
    // distance one).
    for (int s : r.simple_morphisms) {
        int d = B.prd->N(s).rank();
        CHECK(d == 1);
    }
    // Weak order at any base chamber: poset of regions, here a hexagon
    // lattice of size 6 with longest element the opposite chamber.
    WeakOrder wo(*B.prd, 0);
    CHECK(wo.size() == 6);
    CHECK(wo.max_index() >= 0);
    CHECK(wo.elem(wo.max_index()).rank() == 3);
}

TEST_CASE("four generic planes in three dimensions: 14 chambers, not simplicial") {
    auto B = build_arrangement(arr(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));

    // Chamber-count oracle for n central hyperplanes in general position in
    // dimension d: 2 * sum_{k<d} C(n-1, k); all 3-subsets of the normals
    // here are independent, so the formula applies.
    CHECK(B.chambers.size() == 14);
    CHECK(!B.simplicial);
    cross_check_samples(B);

    // Some chamber has more than three walls.
    bool has_big = false;
    for (const auto& w : B.walls)
        if (w.size() > 3) has_big = true;
    CHECK(has_big);

    auto verdict = is_rootoid(*B.prd);
    CHECK(!verdict.ok);
    CHECK(!verdict.witness.empty());
    auto slc = slc_check(*B.prd);
    CHECK(!slc.ok);
}

TEST_CASE("flip adjacency agrees with the facet oracle") {
    for (auto A : {arr(2, {{1, 0}, {0, 1}, {1, 1}}),
                   arr(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}})}) {
        auto B = build_arrangement(A);
        for (size_t c = 0; c < B.chambers.size(); ++c)
            for (size_t i = 0; i < A.normals.size(); ++i) {
                std::vector<int> flipped = B.chambers[c];
                flipped[i] = -flipped[i];
                bool adjacent = B.chamber_index(flipped) >= 0;
                CHECK(adjacent == chambers_share_facet(A, B.chambers[c], flipped));
            }
    }
}

TEST_CASE("inversion sets count separating hyperplanes symmetrically") {
    auto B = build_arrangement(arr(2, {{1, 0}, {0, 1}, {1, 1}}));
    const auto& G = B.G;
    for (int g = 0; g < G.num_morphisms(); ++g) {
        SetElem phi = B.signed_set->phi(g);
        int sep = 0;
        int E = G.cod(g), D = G.dom(g);
        for (size_t i = 0; i < B.arrangement.normals.size(); ++i)
            if (B.chambers[static_cast<size_t>(E)][i] != B.chambers[static_cast<size_t>(D)][i]) ++sep;
        CHECK(phi.rank() == sep);
        // Symmetry: the reverse morphism crosses the same walls.
        CHECK(B.signed_set->phi(G.inv(g)).rank() == sep);
    }
    // Combinatorial distance is a metric; adjacency <=> distance one.
    const int nc = static_cast<int>(B.chambers.size());
    auto dist = [&](int a, int b) {
        int d = 0;
        for (size_t i = 0; i < B.arrangement.normals.size(); ++i)
            if (B.chambers[static_cast<size_t>(a)][i] != B.chambers[static_cast<size_t>(b)][i]) ++d;
        return d;
    };
    for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b) {
            CHECK((dist(a, b) == 0) == (a == b));
            for (int c = 0; c < nc; ++c) CHECK(dist(a, c) <= dist(a, b) + dist(b, c));
        }
}

TEST_CASE("the B3 reflection arrangement is simplicial with B3 weak orders") {
    // The nine reflecting hyperplanes of the order-48 hyperoctahedral group:
    // coordinate planes and the diagonals e_i ± e_j.
    auto B = build_arrangement(arr(3, {{1, 0, 0},
                                       {0, 1, 0},
                                       {0, 0, 1},
                                       {1, 1, 0},
                                       {1, -1, 0},
                                       {1, 0, 1},
                                       {1, 0, -1},
                                       {0, 1, 1},
                                       {0, 1, -1}}));
    CHECK(B.chambers.size() == 48);
    CHECK(B.simplicial);
    auto r = classify(*B.prd);
    CHECK(r.principal);
    CHECK(r.complete);
    CHECK(r.rootoid);

    auto cox = build_coxeter(CoxeterMatrix::named("B3"));
    WeakOrder reference(*cox.prd, 0);
    for (int a : {0, 17, 47}) {
        WeakOrder wo(*B.prd, a);
        CHECK(posets_isomorphic(weak_order_leq_matrix(wo), weak_order_leq_matrix(reference)));
    }
}

TEST_CASE("invalid arrangements are rejected") {
    CHECK_THROWS_AS(build_arrangement(arr(2, {{2, 0}})), std::invalid_argument);           // not primitive
    CHECK_THROWS_AS(build_arrangement(arr(2, {{1, 0}, {-1, 0}})), std::invalid_argument);  // parallel
    CHECK_THROWS_AS(build_arrangement(arr(2, {{1, 0}})), std::invalid_argument);           // not essential
    CHECK_THROWS_AS(build_arrangement(arr(0, {})), std::invalid_argument);
}

TEST_CASE("reflection arrangement of A2: component weak orders match the Coxeter cover") {
    // The three-line arrangement is combinatorially the A2 reflection
    // arrangement; its weak orders at each base chamber must be isomorphic
    // to the weak orders of the universal cover of the A2 protorootoid.
    auto B = build_arrangement(arr(2, {{1, 0}, {0, 1}, {1, 1}}));
    auto cv = cover(s3_protorootoid());
    CHECK(B.G.num_objects() == cv.prd.groupoid().num_objects());
    CHECK(B.G.num_morphisms() == cv.prd.groupoid().num_morphisms());
    for (int a = 0; a < B.G.num_objects(); ++a) {
        WeakOrder wo(*B.prd, a);
        WeakOrder ref(cv.prd, a);
        CHECK(posets_isomorphic(weak_order_leq_matrix(wo), weak_order_leq_matrix(ref)));
    }
}
