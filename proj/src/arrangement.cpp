#include "rootoidlab/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rootoidlab {

namespace {

using Row = std::vector<Rational>;

int rank_of(std::vector<Row> rows, int nvars) {
    int rank = 0;
    for (int col = 0; col < nvars; ++col) {
        int pivot = -1;
        for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
            if (rows[r][static_cast<size_t>(col)] != 0) { pivot = static_cast<int>(r); break; }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank || rows[r][static_cast<size_t>(col)] == 0) continue;
            Rational f = rows[r][static_cast<size_t>(col)] / rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            for (int c = 0; c < nvars; ++c)
                rows[r][static_cast<size_t>(c)] -= f * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

bool all_zero(const Row& row) {
    for (const auto& c : row)
        if (c != 0) return false;
    return true;
}

// Scale so the first nonzero coefficient is ±1; used only to deduplicate.
Row normalized(Row row) {
    for (const auto& c : row)
        if (c != 0) {
            Rational f = c > 0 ? c : Rational(-c);
            for (auto& x : row) x /= f;
            return row;
        }
    return row;
}

}  // namespace

void RationalArrangement::validate() const {
    if (dim < 1) throw std::invalid_argument("arrangement: dimension must be at least 1");
    if (normals.empty()) throw std::invalid_argument("arrangement: at least one normal required");
    for (const auto& n : normals) {
        if (static_cast<int>(n.size()) != dim)
            throw std::invalid_argument("arrangement: normal has wrong dimension");
        long long g = 0;
        for (long long c : n) g = std::gcd(g, c < 0 ? -c : c);
        if (g == 0) throw std::invalid_argument("arrangement: zero normal");
        if (g != 1) throw std::invalid_argument("arrangement: normals must be primitive integer vectors");
    }
    for (size_t i = 0; i < normals.size(); ++i)
        for (size_t j = i + 1; j < normals.size(); ++j) {
            // Parallel primitive vectors agree up to sign.
            bool plus = true, minus = true;
            for (int c = 0; c < dim; ++c) {
                if (normals[i][static_cast<size_t>(c)] != normals[j][static_cast<size_t>(c)]) plus = false;
                if (normals[i][static_cast<size_t>(c)] != -normals[j][static_cast<size_t>(c)]) minus = false;
            }
            if (plus || minus) throw std::invalid_argument("arrangement: normals must be pairwise non-parallel");
        }
    std::vector<Row> rows;
    for (const auto& n : normals) {
        Row r;
        for (long long c : n) r.emplace_back(c);
        rows.push_back(std::move(r));
    }
    if (rank_of(rows, dim) != dim)
        throw std::invalid_argument("arrangement: not essential (normals do not span)");
}

std::optional<std::vector<Rational>> fm_feasible(const std::vector<std::vector<Rational>>& rows, int nvars) {
    // levels[v]: constraints on variables 0..v-1.
    std::vector<std::vector<Row>> levels(static_cast<size_t>(nvars) + 1);
    levels[static_cast<size_t>(nvars)] = rows;
    for (const auto& r : rows)
        if (all_zero(r)) return std::nullopt;

    for (int v = nvars; v >= 1; --v) {
        std::vector<Row> next;
        std::map<Row, bool> seen;
        auto push = [&](Row r) {
            r.resize(static_cast<size_t>(v) - 1);
            if (all_zero(r) && !r.empty()) return false;  // 0 > 0
            if (r.empty()) return false;                  // 0 > 0 at the last level
            Row key = normalized(r);
            if (seen.emplace(key, true).second) next.push_back(std::move(r));
            return true;
        };
        std::vector<const Row*> pos, neg;
        bool infeasible = false;
        for (const auto& r : levels[static_cast<size_t>(v)]) {
            const Rational& c = r[static_cast<size_t>(v) - 1];
            if (c > 0) pos.push_back(&r);
            else if (c < 0) neg.push_back(&r);
            else if (!push(r)) infeasible = true;
        }
        if (v == 1 && !pos.empty() && !neg.empty()) return std::nullopt;  // derived 0 > 0
        for (const auto* p : pos)
            for (const auto* q : neg) {
                // Positive combination cancelling variable v-1.
                Row r(static_cast<size_t>(v));
                const Rational pc = (*p)[static_cast<size_t>(v) - 1];
                const Rational qc = (*q)[static_cast<size_t>(v) - 1];
                for (int c = 0; c < v; ++c)
                    r[static_cast<size_t>(c)] =
                        (*p)[static_cast<size_t>(c)] * (-qc) + (*q)[static_cast<size_t>(c)] * pc;
                if (v > 1 && !push(r)) infeasible = true;
            }
        if (infeasible) return std::nullopt;
        levels[static_cast<size_t>(v) - 1] = std::move(next);
    }

    // Back-substitute an interior point.
    std::vector<Rational> x(static_cast<size_t>(nvars), 0);
    for (int v = 1; v <= nvars; ++v) {
        bool has_lo = false, has_hi = false;
        Rational lo = 0, hi = 0;
        for (const auto& r : levels[static_cast<size_t>(v)]) {
            const Rational& c = r[static_cast<size_t>(v) - 1];
            if (c == 0) continue;
            Rational partial = 0;
            for (int j = 0; j + 1 < v; ++j) partial += r[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
            Rational bound = -partial / c;
            if (c > 0) {
                if (!has_lo || bound > lo) { lo = bound; has_lo = true; }
            } else {
                if (!has_hi || bound < hi) { hi = bound; has_hi = true; }
            }
        }
        Rational val = 0;
        if (has_lo && has_hi) {
            if (!(lo < hi)) throw std::logic_error("fm_feasible: empty interval after elimination");
            val = (lo + hi) / 2;
        } else if (has_lo) {
            val = lo + 1;
        } else if (has_hi) {
            val = hi - 1;
        }
        x[static_cast<size_t>(v) - 1] = val;
    }
    return x;
}

namespace {

std::vector<Row> sign_system(const RationalArrangement& A, const std::vector<int>& signs) {
    std::vector<Row> rows;
    for (size_t i = 0; i < A.normals.size(); ++i) {
        Row r;
        for (long long c : A.normals[i]) r.emplace_back(signs[i] * c);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string signs_to_name(const std::vector<int>& signs) {
    std::string s;
    for (int v : signs) s += v > 0 ? '+' : '-';
    return s;
}

}  // namespace

bool chambers_share_facet(const RationalArrangement& A, const std::vector<int>& signs1,
                          const std::vector<int>& signs2) {
    int diff = -1;
    for (size_t i = 0; i < signs1.size(); ++i)
        if (signs1[i] != signs2[i]) {
            if (diff >= 0) return false;
            diff = static_cast<int>(i);
        }
    if (diff < 0) return false;
    // Substitute the equality <n_diff, x> = 0 into the common strict system
    // by eliminating a pivot variable, then run the elimination.
    const auto& eq = A.normals[static_cast<size_t>(diff)];
    int pivot = -1;
    for (int c = 0; c < A.dim; ++c)
        if (eq[static_cast<size_t>(c)] != 0) { pivot = c; break; }
    std::vector<Row> rows;
    for (size_t i = 0; i < A.normals.size(); ++i) {
        if (static_cast<int>(i) == diff) continue;
        Row full;
        for (long long c : A.normals[i]) full.emplace_back(signs1[i] * c);
        Row reduced;
        Rational epc(eq[static_cast<size_t>(pivot)]);
        for (int c = 0; c < A.dim; ++c) {
            if (c == pivot) continue;
            reduced.push_back(full[static_cast<size_t>(c)] -
                              full[static_cast<size_t>(pivot)] * Rational(eq[static_cast<size_t>(c)]) / epc);
        }
        rows.push_back(std::move(reduced));
    }
    return fm_feasible(rows, A.dim - 1).has_value();
}

ArrangementBundle build_arrangement(const RationalArrangement& A, long long budget) {
    A.validate();
    const int n = static_cast<int>(A.normals.size());
    if ((1LL << n) > budget)
        throw std::invalid_argument("arrangement: too many hyperplanes for the sign-vector budget");

    ArrangementBundle B;
    B.arrangement = A;
    for (long long mask = 0; mask < (1LL << n); ++mask) {
        std::vector<int> signs(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) signs[static_cast<size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        auto sample = fm_feasible(sign_system(A, signs), A.dim);
        if (sample) {
            B.chambers.push_back(signs);
            B.samples.push_back(*sample);
        }
    }
    const int nc = static_cast<int>(B.chambers.size());

    // Walls by flipped-sign adjacency.
    B.walls.assign(static_cast<size_t>(nc), {});
    for (int c = 0; c < nc; ++c)
        for (int i = 0; i < n; ++i) {
            std::vector<int> flipped = B.chambers[static_cast<size_t>(c)];
            flipped[static_cast<size_t>(i)] = -flipped[static_cast<size_t>(i)];
            if (B.chamber_index(flipped) >= 0) B.walls[static_cast<size_t>(c)].push_back(i);
        }

    B.simplicial = true;
    for (int c = 0; c < nc; ++c) {
        const auto& w = B.walls[static_cast<size_t>(c)];
        if (static_cast<int>(w.size()) != A.dim) { B.simplicial = false; break; }
        std::vector<Row> rows;
        for (int i : w) {
            Row r;
            for (long long v : A.normals[static_cast<size_t>(i)]) r.emplace_back(v);
            rows.push_back(std::move(r));
        }
        if (rank_of(rows, A.dim) != A.dim) { B.simplicial = false; break; }
    }

    // Simply connected groupoid on the chambers.
    std::vector<std::string> names;
    for (int c = 0; c < nc; ++c) names.push_back(B.chamber_name(c));
    B.G = simply_connected_groupoid(names, [&](int to, int from) {
        return "(" + names[static_cast<size_t>(to)] + "<" + names[static_cast<size_t>(from)] + ")";
    });

    // Signed set: roots are the two orientations of each normal, the action
    // of every morphism is the identity on the underlying root set, and the
    // positive half at a chamber consists of the orientations positive on it.
    std::vector<std::string> rlabels;
    for (int i = 0; i < n; ++i) rlabels.push_back("+h" + std::to_string(i));
    for (int i = 0; i < n; ++i) rlabels.push_back("-h" + std::to_string(i));
    GroundPtr roots = make_ground("roots", rlabels);
    std::vector<int> neg(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        neg[static_cast<size_t>(i)] = n + i;
        neg[static_cast<size_t>(n + i)] = i;
    }
    std::vector<GroundPtr> rgrounds(static_cast<size_t>(nc), roots);
    std::vector<std::vector<int>> rneg(static_cast<size_t>(nc), neg);
    std::vector<SetElem> positive;
    for (int c = 0; c < nc; ++c) {
        SetElem pos(roots);
        for (int i = 0; i < n; ++i) {
            if (B.chambers[static_cast<size_t>(c)][static_cast<size_t>(i)] > 0) pos.set(i);
            else pos.set(n + i);
        }
        positive.push_back(pos);
    }
    std::vector<int> idperm(static_cast<size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) idperm[static_cast<size_t>(i)] = i;
    std::vector<std::vector<int>> ract(static_cast<size_t>(B.G.num_morphisms()), idperm);
    B.signed_set.emplace(B.G, std::move(rgrounds), std::move(rneg), std::move(positive), std::move(ract));

    B.set_prd = L_functor(*B.signed_set);
    B.prd.emplace(I_functor(*B.set_prd));
    return B;
}

int ArrangementBundle::chamber_index(const std::vector<int>& signs) const {
    for (size_t c = 0; c < chambers.size(); ++c)
        if (chambers[c] == signs) return static_cast<int>(c);
    return -1;
}

std::string ArrangementBundle::chamber_name(int chamber) const {
    return signs_to_name(chambers.at(static_cast<size_t>(chamber)));
}

}  // namespace rootoidlab
