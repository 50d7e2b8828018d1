#ifndef ROOTOIDLAB_TEST_SUPPORT_HPP
#define ROOTOIDLAB_TEST_SUPPORT_HPP

// Shared fixtures and independent oracles for the test suites. The S3
// fixtures below are built from explicit permutation tables, so they do not
// depend on the engine's group machinery.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "rootoidlab/groupoid.hpp"
#include "rootoidlab/prd.hpp"
#include "rootoidlab/setalg.hpp"

namespace testsupport {

using namespace rootoidlab;

using Perm = std::array<int, 3>;

struct S3Tables {
    std::vector<std::string> names;       // e, r, s, rs, sr, rsr
    std::vector<Perm> perms;
    std::vector<int> length;              // word length over {r,s}
    std::vector<std::vector<int>> mult;   // mult[i][j] = index of perms[i] o perms[j] ("j then i")
    std::vector<int> reflections;         // indices of r, s, rsr
    int idx(const std::string& n) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == n) return static_cast<int>(i);
        return -1;
    }
};

inline Perm compose_perm(const Perm& f, const Perm& g) {  // x -> f(g(x))
    return {f[static_cast<size_t>(g[0])], f[static_cast<size_t>(g[1])], f[static_cast<size_t>(g[2])]};
}

inline const S3Tables& s3_tables() {
    static S3Tables t = [] {
        S3Tables t;
        t.names = {"e", "r", "s", "rs", "sr", "rsr"};
        t.perms = {Perm{0, 1, 2}, Perm{1, 0, 2}, Perm{0, 2, 1},
                   Perm{1, 2, 0}, Perm{2, 0, 1}, Perm{2, 1, 0}};
        t.length = {0, 1, 1, 2, 2, 3};
        t.mult.assign(6, std::vector<int>(6, -1));
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                Perm p = compose_perm(t.perms[static_cast<size_t>(i)], t.perms[static_cast<size_t>(j)]);
                for (int k = 0; k < 6; ++k)
                    if (t.perms[static_cast<size_t>(k)] == p) t.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
            }
        t.reflections = {1, 2, 5};
        return t;
    }();
    return t;
}

inline Groupoid make_s3() {
    const auto& t = s3_tables();
    return group_as_groupoid("pt", t.names, t.mult, 0);
}

// Reflection-cocycle values from the length oracle: N(w) = {t : l(tw) < l(w)}.
inline std::vector<std::vector<std::string>> s3_inversion_sets() {
    const auto& t = s3_tables();
    std::vector<std::vector<std::string>> out(6);
    for (int w = 0; w < 6; ++w)
        for (int tr : t.reflections) {
            int tw = t.mult[static_cast<size_t>(tr)][static_cast<size_t>(w)];
            if (t.length[static_cast<size_t>(tw)] < t.length[static_cast<size_t>(w)])
                out[static_cast<size_t>(w)].push_back(t.names[static_cast<size_t>(tr)]);
        }
    return out;
}

// The standard S3 protorootoid over the power set of T = {r, s, rsr},
// with the conjugation action; all data from the permutation oracle.
inline Protorootoid s3_protorootoid() {
    const auto& t = s3_tables();
    std::vector<std::string> tlabels;
    for (int tr : t.reflections) tlabels.push_back(t.names[static_cast<size_t>(tr)]);
    GroundPtr T = make_ground("T", tlabels);

    std::vector<std::vector<int>> act;
    for (int w = 0; w < 6; ++w) {
        std::vector<int> perm(3);
        int winv = -1;
        for (int v = 0; v < 6; ++v)
            if (t.mult[static_cast<size_t>(w)][static_cast<size_t>(v)] == 0) winv = v;
        for (int i = 0; i < 3; ++i) {
            int tr = t.reflections[static_cast<size_t>(i)];
            int conj = t.mult[static_cast<size_t>(t.mult[static_cast<size_t>(w)][static_cast<size_t>(tr)])]
                             [static_cast<size_t>(winv)];
            for (int j = 0; j < 3; ++j)
                if (t.reflections[static_cast<size_t>(j)] == conj) perm[static_cast<size_t>(i)] = j;
        }
        act.push_back(perm);
    }
    PowerSetRep rep(std::vector<GroundPtr>{T}, std::move(act));

    Cocycle N;
    auto inv_sets = s3_inversion_sets();
    for (int w = 0; w < 6; ++w) N.value.emplace_back(T, inv_sets[static_cast<size_t>(w)]);
    return Protorootoid(make_s3(), std::move(rep), std::move(N));
}

inline Groupoid make_z3() {
    std::vector<std::vector<int>> mult(3, std::vector<int>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % 3;
    return group_as_groupoid("pt", {"e", "g", "gg"}, mult, 0);
}

// Poset isomorphism by backtracking on down-set cardinality classes;
// adequate for the desk-scale posets in these suites.
inline bool posets_isomorphic(const std::vector<std::vector<bool>>& leqA,
                              const std::vector<std::vector<bool>>& leqB) {
    const size_t n = leqA.size();
    if (leqB.size() != n) return false;
    auto profile = [](const std::vector<std::vector<bool>>& leq, size_t v) {
        int down = 0, up = 0;
        for (size_t j = 0; j < leq.size(); ++j) {
            if (leq[j][v]) ++down;
            if (leq[v][j]) ++up;
        }
        return std::pair<int, int>(down, up);
    };
    std::vector<int> assign(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(size_t)> rec = [&](size_t v) -> bool {
        if (v == n) return true;
        for (size_t w = 0; w < n; ++w) {
            if (used[w] || profile(leqA, v) != profile(leqB, w)) continue;
            bool ok = true;
            for (size_t u = 0; u < v && ok; ++u) {
                size_t wu = static_cast<size_t>(assign[u]);
                if (leqA[u][v] != leqB[wu][w] || leqA[v][u] != leqB[w][wu]) ok = false;
            }
            if (!ok) continue;
            assign[v] = static_cast<int>(w);
            used[w] = true;
            if (rec(v + 1)) return true;
            used[w] = false;
            assign[v] = -1;
        }
        return false;
    };
    return rec(0);
}

inline std::vector<std::vector<bool>> weak_order_leq_matrix(const WeakOrder& wo) {
    std::vector<std::vector<bool>> m(static_cast<size_t>(wo.size()),
                                     std::vector<bool>(static_cast<size_t>(wo.size()), false));
    for (int i = 0; i < wo.size(); ++i)
        for (int j = 0; j < wo.size(); ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = wo.leq(i, j);
    return m;
}

}  // namespace testsupport

#endif
