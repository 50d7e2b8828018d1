#include "rootoidlab/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "rootoidlab/numberring.hpp"

namespace rootoidlab {

void CoxeterMatrix::validate() const {
    const size_t n = generators.size();
    if (n == 0) throw std::invalid_argument("coxeter matrix needs at least one generator");
    if (m.size() != n) throw std::invalid_argument("coxeter matrix has wrong row count");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("coxeter matrix is not square");
    for (size_t i = 0; i < n; ++i) {
        if (m[i][i] != 1) throw std::invalid_argument("coxeter matrix diagonal must be 1");
        for (size_t j = 0; j < n; ++j) {
            if (m[i][j] != m[j][i]) throw std::invalid_argument("coxeter matrix not symmetric");
            if (i != j && m[i][j] != 0 && m[i][j] < 2)
                throw std::invalid_argument("coxeter matrix off-diagonal entries must be >= 2 or infinity");
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (generators[i] == generators[j])
                throw std::invalid_argument("coxeter generator labels must be distinct");
}

CoxeterMatrix CoxeterMatrix::named(const std::string& type) {
    auto mk = [](std::vector<std::string> gens, std::vector<std::vector<int>> m) {
        CoxeterMatrix M{std::move(gens), std::move(m)};
        M.validate();
        return M;
    };
    if (type == "A1") return mk({"r"}, {{1}});
    if (type == "A1xA1") return mk({"r", "s"}, {{1, 2}, {2, 1}});
    if (type == "A2") return mk({"r", "s"}, {{1, 3}, {3, 1}});
    if (type == "B2") return mk({"r", "s"}, {{1, 4}, {4, 1}});
    if (type == "G2") return mk({"r", "s"}, {{1, 6}, {6, 1}});
    if (type == "H2") return mk({"r", "s"}, {{1, 5}, {5, 1}});
    if (type == "A3") return mk({"r", "s", "t"}, {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
    if (type == "B3") return mk({"r", "s", "t"}, {{1, 4, 2}, {4, 1, 3}, {2, 3, 1}});
    if (type == "H3") return mk({"r", "s", "t"}, {{1, 5, 2}, {5, 1, 3}, {2, 3, 1}});
    if (type == "Atilde1") return mk({"r", "s"}, {{1, 0}, {0, 1}});
    throw std::invalid_argument("unknown coxeter type '" + type + "'");
}

namespace {

using Elem = NumberRing::Elem;
using Matrix = std::vector<Elem>;  // row-major d x d

struct MatrixKey {
    std::vector<long long> flat;
    bool operator==(const MatrixKey& o) const { return flat == o.flat; }
};

struct MatrixKeyHash {
    size_t operator()(const MatrixKey& k) const {
        size_t h = 1469598103934665603ull;
        for (long long v : k.flat) {
            h ^= static_cast<size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

MatrixKey key_of(const Matrix& m) {
    MatrixKey k;
    for (const auto& e : m) k.flat.insert(k.flat.end(), e.begin(), e.end());
    return k;
}

Matrix mat_mul(const NumberRing& R, const Matrix& A, const Matrix& B, int d) {
    Matrix C(static_cast<size_t>(d) * static_cast<size_t>(d), R.zero());
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const Elem& a = A[static_cast<size_t>(i * d + k)];
            if (R.is_zero(a)) continue;
            for (int j = 0; j < d; ++j) {
                const Elem& b = B[static_cast<size_t>(k * d + j)];
                if (R.is_zero(b)) continue;
                C[static_cast<size_t>(i * d + j)] = R.add(C[static_cast<size_t>(i * d + j)], R.mul(a, b));
            }
        }
    return C;
}

// Geometric representation: s sends alpha_t to alpha_t + 2cos(pi/m_st) alpha_s
// for t != s, and alpha_s to -alpha_s (column convention: column t holds the
// image of alpha_t).
std::vector<Matrix> generator_matrices(const NumberRing& R, const CoxeterMatrix& M) {
    const int d = static_cast<int>(M.generators.size());
    std::vector<Matrix> out;
    for (int s = 0; s < d; ++s) {
        Matrix mat(static_cast<size_t>(d) * static_cast<size_t>(d), R.zero());
        for (int i = 0; i < d; ++i) mat[static_cast<size_t>(i * d + i)] = R.integer(1);
        mat[static_cast<size_t>(s * d + s)] = R.integer(-1);
        for (int t = 0; t < d; ++t)
            if (t != s)
                mat[static_cast<size_t>(s * d + t)] =
                    R.two_cos_pi_over(M.m[static_cast<size_t>(s)][static_cast<size_t>(t)]);
        out.push_back(std::move(mat));
    }
    return out;
}

std::string join_word(const CoxeterMatrix& M, const std::vector<int>& letters) {
    if (letters.empty()) return "e";
    bool dotted = false;
    for (const auto& g : M.generators)
        if (g.size() != 1) dotted = true;
    std::string w;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (dotted && i > 0) w += ".";
        w += M.generators[static_cast<size_t>(letters[i])];
    }
    return w;
}

}  // namespace

CoxeterBundle build_coxeter(const CoxeterMatrix& M, std::optional<int> cutoff, long long budget) {
    M.validate();
    const int d = static_cast<int>(M.generators.size());
    int L = 1;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            int mij = M.m[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (mij >= 3) L = static_cast<int>(std::lcm(L, mij));
        }
    NumberRing R(L);
    auto gens = generator_matrices(R, M);

    CoxeterBundle B;
    B.matrix = M;

    std::unordered_map<MatrixKey, int, MatrixKeyHash> index;
    std::vector<Matrix> mats;
    std::vector<int> parent_elem, parent_gen;

    auto letters_of = [&](int w) {
        std::vector<int> letters;
        while (w != 0) {
            letters.push_back(parent_gen[static_cast<size_t>(w)]);
            w = parent_elem[static_cast<size_t>(w)];
        }
        std::reverse(letters.begin(), letters.end());
        return letters;
    };

    auto add_element = [&](const Matrix& mat, int from, int gen, int len) {
        int id = static_cast<int>(mats.size());
        index.emplace(key_of(mat), id);
        mats.push_back(mat);
        parent_elem.push_back(from);
        parent_gen.push_back(gen);
        B.length.push_back(len);
        B.right.emplace_back(static_cast<size_t>(d), -1);
        return id;
    };

    Matrix ident(static_cast<size_t>(d) * static_cast<size_t>(d), R.zero());
    for (int i = 0; i < d; ++i) ident[static_cast<size_t>(i * d + i)] = R.integer(1);
    add_element(ident, -1, -1, 0);

    std::deque<int> frontier{0};
    bool truncated = false;
    while (!frontier.empty()) {
        int w = frontier.front();
        frontier.pop_front();
        if (cutoff && B.length[static_cast<size_t>(w)] >= *cutoff) {
            truncated = true;
            continue;
        }
        for (int s = 0; s < d; ++s) {
            Matrix ws = mat_mul(R, mats[static_cast<size_t>(w)], gens[static_cast<size_t>(s)], d);
            MatrixKey k = key_of(ws);
            auto it = index.find(k);
            int id;
            if (it != index.end()) {
                id = it->second;
            } else {
                if (static_cast<long long>(mats.size()) >= budget)
                    throw std::runtime_error(
                        "coxeter enumeration exceeded the element budget without closing; "
                        "the group may be infinite — pass a cutoff for a ball enumeration");
                id = add_element(ws, w, s, B.length[static_cast<size_t>(w)] + 1);
                frontier.push_back(id);
            }
            B.right[static_cast<size_t>(w)][static_cast<size_t>(s)] = id;
        }
    }
    B.complete = !truncated;
    const int n = static_cast<int>(mats.size());

    for (int w = 0; w < n; ++w) B.names.push_back(join_word(M, letters_of(w)));

    // Inverse of w: compose w's letters in reverse. Every prefix of the
    // reversed reduced word is again reduced, so the walk stays in the ball.
    B.inverse.assign(static_cast<size_t>(n), -1);
    for (int w = 0; w < n; ++w) {
        auto letters = letters_of(w);
        std::reverse(letters.begin(), letters.end());
        int id = 0;
        for (int s : letters) {
            id = B.right[static_cast<size_t>(id)][static_cast<size_t>(s)];
            if (id < 0) break;
        }
        if (id < 0) throw std::logic_error("coxeter: inverse walk left the enumerated ball");
        B.inverse[static_cast<size_t>(w)] = id;
    }

    // Reflection registry: conjugates w s w^-1 over all enumerated w. In a
    // ball enumeration some conjugates lie outside the ball; they are
    // registered by matrix with a palindromic word as the label.
    std::unordered_map<MatrixKey, int, MatrixKeyHash> refl_pos_by_key;
    std::vector<std::string> refl_names;
    std::vector<int> refl_elem;  // element id or -1 (outside the ball)
    auto register_refl = [&](const Matrix& conj, int w, int s) {
        MatrixKey k = key_of(conj);
        auto it = refl_pos_by_key.find(k);
        if (it != refl_pos_by_key.end()) return it->second;
        int pos = static_cast<int>(refl_names.size());
        refl_pos_by_key.emplace(k, pos);
        auto eit = index.find(k);
        if (eit != index.end()) {
            refl_elem.push_back(eit->second);
            refl_names.push_back(B.names[static_cast<size_t>(eit->second)]);
        } else {
            refl_elem.push_back(-1);
            auto letters = letters_of(w);
            std::vector<int> pal = letters;
            pal.push_back(s);
            for (size_t i = letters.size(); i-- > 0;) pal.push_back(letters[i]);
            refl_names.push_back(join_word(M, pal));
        }
        return pos;
    };
    for (int w = 0; w < n; ++w)
        for (int s = 0; s < d; ++s) {
            Matrix conj = mat_mul(R, mat_mul(R, mats[static_cast<size_t>(w)], gens[static_cast<size_t>(s)], d),
                                  mats[static_cast<size_t>(B.inverse[static_cast<size_t>(w)])], d);
            register_refl(conj, w, s);
        }

    // In a complete enumeration, order T by element id for determinism.
    std::vector<int> order(refl_names.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    if (B.complete)
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return refl_elem[static_cast<size_t>(a)] < refl_elem[static_cast<size_t>(b)]; });
    std::vector<int> newpos(order.size());
    for (size_t i = 0; i < order.size(); ++i) newpos[static_cast<size_t>(order[i])] = static_cast<int>(i);
    {
        std::vector<std::string> rn(order.size());
        std::vector<int> re(order.size());
        for (size_t i = 0; i < order.size(); ++i) {
            rn[i] = refl_names[static_cast<size_t>(order[i])];
            re[i] = refl_elem[static_cast<size_t>(order[i])];
        }
        refl_names = std::move(rn);
        refl_elem = std::move(re);
        for (auto& [k, p] : refl_pos_by_key) p = newpos[static_cast<size_t>(p)];
    }
    B.reflection_names = refl_names;
    B.reflections = refl_elem;

    // Cocycle recursion along BFS tree edges: N(e) = {}, and for
    // l(ws) = l(w) + 1, N(ws) = N(w) + {w s w^-1}.
    B.inversions.assign(static_cast<size_t>(n), {});
    for (int w = 1; w < n; ++w) {
        int p = parent_elem[static_cast<size_t>(w)];
        Matrix conj = mat_mul(R, mats[static_cast<size_t>(w)],
                              mats[static_cast<size_t>(B.inverse[static_cast<size_t>(p)])], d);
        auto it = refl_pos_by_key.find(key_of(conj));
        if (it == refl_pos_by_key.end()) throw std::logic_error("coxeter: unregistered reflection");
        int t = it->second;
        auto v = B.inversions[static_cast<size_t>(p)];
        auto pos = std::lower_bound(v.begin(), v.end(), t);
        if (pos != v.end() && *pos == t) v.erase(pos);
        else v.insert(pos, t);
        B.inversions[static_cast<size_t>(w)] = std::move(v);
    }

    if (!B.complete) return B;  // ball mode: raw tables only

    B.mult.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    for (int w = 0; w < n; ++w)
        for (int v = 0; v < n; ++v) {
            Matrix wv = mat_mul(R, mats[static_cast<size_t>(w)], mats[static_cast<size_t>(v)], d);
            auto it = index.find(key_of(wv));
            if (it == index.end()) throw std::logic_error("coxeter: multiplication escaped closure");
            B.mult[static_cast<size_t>(w)][static_cast<size_t>(v)] = it->second;
        }

    // Postconditions: the inversion-set characterization of N, the length
    // parity, and the strong exchange condition.
    const int nt = static_cast<int>(B.reflection_names.size());
    for (int w = 0; w < n; ++w) {
        if (static_cast<int>(B.inversions[static_cast<size_t>(w)].size()) != B.length[static_cast<size_t>(w)])
            throw std::logic_error("coxeter: |N(w)| != l(w)");
        for (int p = 0; p < nt; ++p) {
            int t = B.reflections[static_cast<size_t>(p)];
            int tw = B.mult[static_cast<size_t>(t)][static_cast<size_t>(w)];
            bool in_n = std::binary_search(B.inversions[static_cast<size_t>(w)].begin(),
                                           B.inversions[static_cast<size_t>(w)].end(), p);
            if (in_n != (B.length[static_cast<size_t>(tw)] < B.length[static_cast<size_t>(w)]))
                throw std::logic_error("coxeter: N(w) != {t : l(tw) < l(w)}");
            if ((B.length[static_cast<size_t>(tw)] - B.length[static_cast<size_t>(w)]) % 2 == 0)
                throw std::logic_error("coxeter: l(tw) parity violation");
        }
    }
    for (int w = 0; w < n; ++w)
        for (int s = 0; s < d; ++s) {
            int wr = B.right[static_cast<size_t>(w)][static_cast<size_t>(s)];
            for (int p = 0; p < nt; ++p) {
                int t = B.reflections[static_cast<size_t>(p)];
                int tw = B.mult[static_cast<size_t>(t)][static_cast<size_t>(w)];
                int twr = B.mult[static_cast<size_t>(t)][static_cast<size_t>(wr)];
                if (B.length[static_cast<size_t>(tw)] >= B.length[static_cast<size_t>(w)] &&
                    B.length[static_cast<size_t>(twr)] <= B.length[static_cast<size_t>(wr)] && tw != wr)
                    throw std::logic_error("coxeter: strong exchange fails");
            }
        }

    // Groupoid, protorootoid over P(T), and the standard signed set.
    B.W = group_as_groupoid("pt", B.names, B.mult, 0);

    GroundPtr T = make_ground("T", B.reflection_names);
    std::vector<int> refl_pos(static_cast<size_t>(n), -1);
    for (int p = 0; p < nt; ++p) refl_pos[static_cast<size_t>(B.reflections[static_cast<size_t>(p)])] = p;

    std::vector<std::vector<int>> act;
    for (int w = 0; w < n; ++w) {
        std::vector<int> perm(static_cast<size_t>(nt));
        int winv = B.inverse[static_cast<size_t>(w)];
        for (int p = 0; p < nt; ++p) {
            int t = B.reflections[static_cast<size_t>(p)];
            int conj = B.mult[static_cast<size_t>(B.mult[static_cast<size_t>(w)][static_cast<size_t>(t)])]
                             [static_cast<size_t>(winv)];
            perm[static_cast<size_t>(p)] = refl_pos[static_cast<size_t>(conj)];
        }
        act.push_back(std::move(perm));
    }
    Cocycle N;
    for (int w = 0; w < n; ++w) {
        SetElem v(T);
        for (int p : B.inversions[static_cast<size_t>(w)]) v.set(p);
        N.value.push_back(v);
    }
    B.prd.emplace(*B.W, PowerSetRep({T}, act), N);

    std::vector<std::string> rlabels;
    for (int p = 0; p < nt; ++p) rlabels.push_back("+" + B.reflection_names[static_cast<size_t>(p)]);
    for (int p = 0; p < nt; ++p) rlabels.push_back("-" + B.reflection_names[static_cast<size_t>(p)]);
    GroundPtr roots = make_ground("roots", rlabels);
    std::vector<int> neg(static_cast<size_t>(2 * nt));
    for (int p = 0; p < nt; ++p) {
        neg[static_cast<size_t>(p)] = nt + p;
        neg[static_cast<size_t>(nt + p)] = p;
    }
    SetElem pos(roots);
    for (int p = 0; p < nt; ++p) pos.set(p);
    std::vector<std::vector<int>> ract;
    for (int w = 0; w < n; ++w) {
        std::vector<int> perm(static_cast<size_t>(2 * nt));
        for (int p = 0; p < nt; ++p) {
            int t = B.reflections[static_cast<size_t>(p)];
            int img = act[static_cast<size_t>(w)][static_cast<size_t>(p)];
            bool flips = B.length[static_cast<size_t>(B.mult[static_cast<size_t>(w)][static_cast<size_t>(t)])] <
                         B.length[static_cast<size_t>(w)];
            perm[static_cast<size_t>(p)] = flips ? nt + img : img;
            perm[static_cast<size_t>(nt + p)] = flips ? img : nt + img;
        }
        ract.push_back(std::move(perm));
    }
    B.signed_set.emplace(*B.W, std::vector<GroundPtr>{roots}, std::vector<std::vector<int>>{neg},
                         std::vector<SetElem>{pos}, std::move(ract));
    return B;
}

int CoxeterBundle::element(const std::string& word) const {
    for (int i = 0; i < num_elements(); ++i)
        if (names[static_cast<size_t>(i)] == word) return i;
    return -1;
}

ReflectionSubgroup reflection_subgroup(const CoxeterBundle& B, const std::vector<int>& tgens) {
    if (!B.complete) throw std::invalid_argument("reflection_subgroup: requires a fully enumerated group");
    for (int t : tgens)
        if (!std::binary_search(B.reflections.begin(), B.reflections.end(), t))
            throw std::invalid_argument("reflection_subgroup: generator is not a reflection");

    ReflectionSubgroup out;
    std::vector<int> in_wp(static_cast<size_t>(B.num_elements()), 0);
    std::deque<int> queue{0};
    in_wp[0] = 1;
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        for (int t : tgens) {
            int wt = B.mult[static_cast<size_t>(w)][static_cast<size_t>(t)];
            if (!in_wp[static_cast<size_t>(wt)]) {
                in_wp[static_cast<size_t>(wt)] = 1;
                queue.push_back(wt);
            }
        }
    }
    for (int w = 0; w < B.num_elements(); ++w)
        if (in_wp[static_cast<size_t>(w)]) out.elements.push_back(w);
    for (int t : B.reflections)
        if (t >= 0 && in_wp[static_cast<size_t>(t)]) out.tprime.push_back(t);

    const int np = static_cast<int>(out.elements.size());
    std::vector<int> pos_of(static_cast<size_t>(B.num_elements()), -1);
    for (int i = 0; i < np; ++i) pos_of[static_cast<size_t>(out.elements[static_cast<size_t>(i)])] = i;

    std::vector<std::string> names;
    std::vector<std::vector<int>> mult(static_cast<size_t>(np), std::vector<int>(static_cast<size_t>(np)));
    for (int i = 0; i < np; ++i) names.push_back(B.names[static_cast<size_t>(out.elements[static_cast<size_t>(i)])]);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) {
            int prod = B.mult[static_cast<size_t>(out.elements[static_cast<size_t>(i)])]
                             [static_cast<size_t>(out.elements[static_cast<size_t>(j)])];
            if (pos_of[static_cast<size_t>(prod)] < 0) throw std::logic_error("reflection_subgroup: closure failure");
            mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = pos_of[static_cast<size_t>(prod)];
        }
    out.Wp = group_as_groupoid("pt", names, mult, 0);

    std::vector<std::string> tlabels;
    for (int t : out.tprime) tlabels.push_back(B.names[static_cast<size_t>(t)]);
    GroundPtr Tp = make_ground("T'", tlabels);
    const int ntp = static_cast<int>(out.tprime.size());
    std::vector<int> tpos(static_cast<size_t>(B.num_elements()), -1);
    for (int p = 0; p < ntp; ++p) tpos[static_cast<size_t>(out.tprime[static_cast<size_t>(p)])] = p;

    std::vector<std::vector<int>> act;
    for (int i = 0; i < np; ++i) {
        int w = out.elements[static_cast<size_t>(i)];
        int winv = B.inverse[static_cast<size_t>(w)];
        std::vector<int> perm(static_cast<size_t>(ntp));
        for (int p = 0; p < ntp; ++p) {
            int t = out.tprime[static_cast<size_t>(p)];
            int conj = B.mult[static_cast<size_t>(B.mult[static_cast<size_t>(w)][static_cast<size_t>(t)])]
                             [static_cast<size_t>(winv)];
            if (tpos[static_cast<size_t>(conj)] < 0)
                throw std::logic_error("reflection_subgroup: T' is not conjugation stable");
            perm[static_cast<size_t>(p)] = tpos[static_cast<size_t>(conj)];
        }
        act.push_back(std::move(perm));
    }
    Cocycle Np;
    for (int i = 0; i < np; ++i) {
        int w = out.elements[static_cast<size_t>(i)];
        SetElem v(Tp);
        for (int p : B.inversions[static_cast<size_t>(w)]) {
            int t = B.reflections[static_cast<size_t>(p)];
            if (t >= 0 && tpos[static_cast<size_t>(t)] >= 0) v.set(tpos[static_cast<size_t>(t)]);
        }
        Np.value.push_back(v);
    }
    out.prd.emplace(out.Wp, PowerSetRep({Tp}, act), Np);  // validates N' as a cocycle

    for (int i = 0; i < np; ++i)
        if (out.prd->N(i).rank() == 1) out.sprime.push_back(out.elements[static_cast<size_t>(i)]);

    std::vector<int> sgen;
    for (int s : out.sprime) sgen.push_back(pos_of[static_cast<size_t>(s)]);
    auto gen = generated_subgroupoid(out.Wp, sgen);
    out.sprime_generates = gen.generates_all;

    // Exchange condition for (W', S'), in the SEC form over T'.
    out.exchange_condition = gen.generates_all;
    if (gen.generates_all) {
        const auto& lp = gen.length;
        for (int i = 0; i < np && out.exchange_condition; ++i)
            for (int sp : sgen) {
                int ir = mult[static_cast<size_t>(i)][static_cast<size_t>(sp)];
                for (int t : out.tprime) {
                    int tp = pos_of[static_cast<size_t>(t)];
                    int ti = mult[static_cast<size_t>(tp)][static_cast<size_t>(i)];
                    int tir = mult[static_cast<size_t>(tp)][static_cast<size_t>(ir)];
                    if (lp[static_cast<size_t>(ti)] >= lp[static_cast<size_t>(i)] &&
                        lp[static_cast<size_t>(tir)] <= lp[static_cast<size_t>(ir)] && ti != ir) {
                        out.exchange_condition = false;
                        break;
                    }
                }
                if (!out.exchange_condition) break;
            }
    }

    out.order_preserving = true;
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < np; ++j) {
            int wi = out.elements[static_cast<size_t>(i)], wj = out.elements[static_cast<size_t>(j)];
            bool amb = std::includes(B.inversions[static_cast<size_t>(wj)].begin(),
                                     B.inversions[static_cast<size_t>(wj)].end(),
                                     B.inversions[static_cast<size_t>(wi)].begin(),
                                     B.inversions[static_cast<size_t>(wi)].end());
            bool res = out.prd->N(i).subset_of(out.prd->N(j));
            if (amb && !res) out.order_preserving = false;
            if (res && !amb && !out.non_iso_witness) out.non_iso_witness = {wi, wj};
        }
    return out;
}

}  // namespace rootoidlab
