#include "doctest.h"

#include <random>

#include "rootoidlab/setalg.hpp"

using namespace rootoidlab;

namespace {

GroundPtr xyzw() { return make_ground("G", {"x", "y", "z", "w"}); }

// All elements of the power set over a ground of size <= 16.
std::vector<SetElem> all_elems(const GroundPtr& g) {
    std::vector<SetElem> out;
    for (unsigned mask = 0; mask < (1u << g->size()); ++mask) {
        SetElem e(g);
        for (int i = 0; i < g->size(); ++i)
            if (mask & (1u << i)) e.set(i);
        out.push_back(e);
    }
    return out;
}

// Closure of gens under + and ∩, as an independent oracle for
// generated_subring (membership keyed by the bit pattern).
std::vector<SetElem> subring_closure(const GroundPtr& g, std::vector<SetElem> gens) {
    std::vector<SetElem> ring{SetElem(g)};
    auto push = [&](const SetElem& e) {
        for (const auto& r : ring)
            if (r == e) return false;
        ring.push_back(e);
        return true;
    };
    for (const auto& e : gens) push(e);
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < ring.size(); ++i)
            for (size_t j = 0; j < ring.size(); ++j) {
                if (push(ring[i] + ring[j])) grew = true;
                if (push(ring[i] & ring[j])) grew = true;
            }
    }
    return ring;
}

}  // namespace

TEST_CASE("element operations on a common ground") {
    auto g = xyzw();
    SetElem x(g, {"x"}), y(g, {"y"}), xy(g, {"x", "y"}), yz(g, {"y", "z"});

    CHECK((x + x).empty());                       // characteristic 2
    CHECK((xy & yz) == SetElem(g, {"y"}));
    CHECK(x.unite(y) == xy);                      // x+y+xy
    CHECK(x.unite(y) == (x + y + (x & y)));
    CHECK(x.subset_of(xy));
    CHECK(!xy.subset_of(x));
    CHECK(x.subset_of(xy) == ((x & xy) == x));
}

TEST_CASE("ground-set mismatch raises an incompatible-rings error") {
    auto g1 = make_ground("A", {"x"});
    auto g2 = make_ground("B", {"x"});
    SetElem a(g1, {"x"}), b(g2, {"x"});
    CHECK_THROWS_AS((void)(a + b), RingMismatch);
    CHECK_THROWS_AS((void)(a & b), RingMismatch);
    CHECK_THROWS_AS((void)a.subset_of(b), RingMismatch);
}

TEST_CASE("rank is cardinality and satisfies the modular rank identity") {
    auto g = xyzw();
    CHECK(SetElem(g).rank() == 0);
    CHECK(SetElem(g, {"x", "y"}).rank() == 2);

    SetElem a(g, {"x", "y"}), b(g, {"y", "z"});
    CHECK(a.rank() + b.rank() == (a & b).rank() + a.unite(b).rank());
    CHECK(a.rank() + b.rank() == 1 + 3);

    for (const auto& x : all_elems(g))
        for (const auto& y : all_elems(g))
            CHECK(x.rank() + y.rank() == (x & y).rank() + x.unite(y).rank());
}

TEST_CASE("Boolean ring laws, exhaustively on size <= 4") {
    auto g = xyzw();
    auto elems = all_elems(g);
    for (const auto& x : elems) {
        CHECK((x & x) == x);
        CHECK((x + x).empty());
        for (const auto& y : elems) {
            CHECK((x + y) == (y + x));
            CHECK((x & y) == (y & x));
            for (const auto& z : elems) {
                CHECK(((x + y) + z) == (x + (y + z)));
                CHECK(((x & y) & z) == (x & (y & z)));
                CHECK((x & (y + z)) == ((x & y) + (x & z)));
            }
        }
    }
}

TEST_CASE("Boolean ring laws, randomized on a larger ground") {
    std::vector<std::string> labels;
    for (int i = 0; i < 40; ++i) labels.push_back("p" + std::to_string(i));
    auto g = make_ground("big", labels);
    std::mt19937 rng(20240817);
    auto rand_elem = [&] {
        SetElem e(g);
        for (int i = 0; i < g->size(); ++i)
            if (rng() & 1) e.set(i);
        return e;
    };
    for (int trial = 0; trial < 200; ++trial) {
        SetElem x = rand_elem(), y = rand_elem(), z = rand_elem();
        CHECK((x + y) == (y + x));
        CHECK(((x + y) + z) == (x + (y + z)));
        CHECK((x & (y + z)) == ((x & y) + (x & z)));
        CHECK(x.rank() + y.rank() == (x & y).rank() + x.unite(y).rank());
    }
}

TEST_CASE("generated subring: empty, singleton and overlapping generators") {
    auto g = xyzw();

    auto empty = generated_subring(g, {});
    CHECK(empty.support.empty());
    CHECK(empty.blocks.empty());

    auto single = generated_subring(g, {SetElem(g, {"x", "y"})});
    CHECK(single.support == SetElem(g, {"x", "y"}));
    REQUIRE(single.blocks.size() == 1);
    CHECK(single.blocks[0] == SetElem(g, {"x", "y"}));

    auto two = generated_subring(g, {SetElem(g, {"x", "y"}), SetElem(g, {"y", "z"})});
    CHECK(two.support == SetElem(g, {"x", "y", "z"}));
    REQUIRE(two.blocks.size() == 3);
    CHECK(two.contains(SetElem(g, {"x"})));
    CHECK(two.contains(SetElem(g, {"y"})));
    CHECK(two.contains(SetElem(g, {"z"})));
    CHECK(!two.contains(SetElem(g, {"w"})));
}

TEST_CASE("generated subring equals the +/∩ closure oracle") {
    auto g = xyzw();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<SetElem> gens;
        int k = static_cast<int>(rng() % 3);
        for (int i = 0; i <= k; ++i) {
            SetElem e(g);
            for (int j = 0; j < g->size(); ++j)
                if (rng() & 1) e.set(j);
            gens.push_back(e);
        }
        auto part = generated_subring(g, gens);
        auto ring = subring_closure(g, gens);
        // Every closure element is a union of blocks and vice versa.
        for (const auto& e : ring) CHECK(part.contains(e));
        CHECK(ring.size() == (1u << part.blocks.size()));
        for (const auto& gen : gens) CHECK(part.contains(gen));
    }
}

TEST_CASE("generated subring is idempotent over its block unions") {
    auto g = xyzw();
    auto part = generated_subring(g, {SetElem(g, {"x", "y"}), SetElem(g, {"y", "z"})});
    // Regenerate from all unions of blocks.
    std::vector<SetElem> unions;
    for (unsigned mask = 0; mask < (1u << part.blocks.size()); ++mask) {
        SetElem u(g);
        for (size_t i = 0; i < part.blocks.size(); ++i)
            if (mask & (1u << i)) u = u.unite(part.blocks[i]);
        unions.push_back(u);
    }
    auto again = generated_subring(g, unions);
    CHECK(again.same_as(part));
}

TEST_CASE("apply_hom computes preimages and is a ring homomorphism") {
    auto X = make_ground("X", {"x", "y"});
    PartialMap id = PartialMap::identity(X);
    CHECK(id.apply(SetElem(X, {"x"})) == SetElem(X, {"x"}));

    auto Y = make_ground("Y", {"p", "q"});
    auto X1 = make_ground("X1", {"x"});
    PartialMap h{Y, X1, {0, -1}};  // p -> x, q undefined
    CHECK(h.apply(SetElem(X1, {"x"})) == SetElem(Y, {"p"}));
    CHECK(h.apply(SetElem(X1)).empty());

    // Preimage preserves +, ∩ and ∅ for random partial maps.
    auto A = make_ground("A", {"a0", "a1", "a2", "a3", "a4"});
    auto B = make_ground("B", {"b0", "b1", "b2", "b3", "b4", "b5"});
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        PartialMap pm{B, A, {}};
        for (int i = 0; i < B->size(); ++i)
            pm.map.push_back(static_cast<int>(rng() % (A->size() + 1)) - 1);
        pm.validate();
        SetElem u(A), v(A);
        for (int i = 0; i < A->size(); ++i) {
            if (rng() & 1) u.set(i);
            if (rng() & 1) v.set(i);
        }
        CHECK(pm.apply(u + v) == (pm.apply(u) + pm.apply(v)));
        CHECK(pm.apply(u & v) == (pm.apply(u) & pm.apply(v)));
        CHECK(pm.apply(SetElem(A)).empty());
    }

    CHECK_THROWS_AS(h.apply(SetElem(Y, {"p"})), RingMismatch);
}
