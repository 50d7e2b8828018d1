#include "rootoidlab/signed.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rootoidlab/classify.hpp"

namespace rootoidlab {

SignedGroupoidSet::SignedGroupoidSet(Groupoid G, std::vector<GroundPtr> roots,
                                     std::vector<std::vector<int>> neg, std::vector<SetElem> positive,
                                     std::vector<std::vector<int>> act)
    : G_(std::move(G)), roots_(std::move(roots)), neg_(std::move(neg)), positive_(std::move(positive)),
      act_(std::move(act)) {
    if (static_cast<int>(roots_.size()) != G_.num_objects() || roots_.size() != neg_.size() ||
        roots_.size() != positive_.size() || static_cast<int>(act_.size()) != G_.num_morphisms())
        throw std::invalid_argument("signed set: size mismatch with groupoid");
    for (int a = 0; a < G_.num_objects(); ++a) {
        const auto& nv = neg_[static_cast<size_t>(a)];
        int n = roots_[static_cast<size_t>(a)]->size();
        if (static_cast<int>(nv.size()) != n)
            throw std::invalid_argument("signed set: involution size mismatch");
        for (int i = 0; i < n; ++i) {
            if (nv[static_cast<size_t>(i)] == i)
                throw std::invalid_argument("signed set: involution has a fixed point");
            if (nv[static_cast<size_t>(nv[static_cast<size_t>(i)])] != i)
                throw std::invalid_argument("signed set: negation is not an involution");
        }
        const SetElem& pos = positive_[static_cast<size_t>(a)];
        for (int i = 0; i < n; ++i) {
            bool p = pos.has(i), q = pos.has(nv[static_cast<size_t>(i)]);
            if (p == q) throw std::invalid_argument("signed set: positive part is not one per orbit");
        }
    }
    // Action: bijective, functorial, commuting with negation.
    for (int g = 0; g < G_.num_morphisms(); ++g) {
        const auto& perm = act_[static_cast<size_t>(g)];
        int ns = roots_[static_cast<size_t>(G_.dom(g))]->size();
        int nd = roots_[static_cast<size_t>(G_.cod(g))]->size();
        if (static_cast<int>(perm.size()) != ns || ns != nd)
            throw std::invalid_argument("signed set: action size mismatch");
        std::vector<bool> hit(static_cast<size_t>(nd), false);
        for (int v : perm) {
            if (v < 0 || v >= nd || hit[static_cast<size_t>(v)])
                throw std::invalid_argument("signed set: action not bijective");
            hit[static_cast<size_t>(v)] = true;
        }
        const auto& negd = neg_[static_cast<size_t>(G_.dom(g))];
        const auto& negc = neg_[static_cast<size_t>(G_.cod(g))];
        for (int i = 0; i < ns; ++i)
            if (perm[static_cast<size_t>(negd[static_cast<size_t>(i)])] !=
                negc[static_cast<size_t>(perm[static_cast<size_t>(i)])])
                throw std::invalid_argument("signed set: action does not commute with negation");
    }
    for (int a = 0; a < G_.num_objects(); ++a) {
        const auto& perm = act_[static_cast<size_t>(G_.identity(a))];
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i))
                throw std::invalid_argument("signed set: identity acts nontrivially");
    }
    for (int g = 0; g < G_.num_morphisms(); ++g)
        for (int h = 0; h < G_.num_morphisms(); ++h) {
            if (!G_.composable(g, h)) continue;
            const auto& pg = act_[static_cast<size_t>(g)];
            const auto& ph = act_[static_cast<size_t>(h)];
            const auto& pgh = act_[static_cast<size_t>(G_.compose(g, h))];
            for (size_t i = 0; i < ph.size(); ++i)
                if (pg[static_cast<size_t>(ph[i])] != pgh[i])
                    throw std::invalid_argument("signed set: action not functorial");
        }
}

SetElem SignedGroupoidSet::negative(int object) const {
    SetElem neg = SetElem::full(roots(object)) + positive(object);
    return neg;
}

SetElem SignedGroupoidSet::act(int mor, const SetElem& x) const {
    const GroundPtr& src = roots(G_.dom(mor));
    const GroundPtr& dst = roots(G_.cod(mor));
    if (!x.ground()->same_as(*src)) throw RingMismatch("signed act: wrong ground");
    const auto& perm = act_perm(mor);
    SetElem r(dst);
    for (int i = 0; i < src->size(); ++i)
        if (x.has(i)) r.set(perm[static_cast<size_t>(i)]);
    return r;
}

SetElem SignedGroupoidSet::phi(int g) const {
    return positive(G_.cod(g)) & act(g, negative(G_.dom(g)));
}

namespace {

// Per-object positive root indices in ascending order; the orbit ground of
// the L construction lists their labels.
std::vector<int> positive_indices(const SignedGroupoidSet& R, int a) {
    std::vector<int> out;
    for (int i = 0; i < R.roots(a)->size(); ++i)
        if (R.positive(a).has(i)) out.push_back(i);
    return out;
}

}  // namespace

SetProtorootoid L_functor(const SignedGroupoidSet& R) {
    const Groupoid& G = R.groupoid();
    std::vector<GroundPtr> grounds;
    std::vector<std::vector<std::vector<int>>> dummy;
    std::vector<std::vector<int>> orbit_of(static_cast<size_t>(G.num_objects()));  // root idx -> orbit idx
    for (int a = 0; a < G.num_objects(); ++a) {
        auto pos = positive_indices(R, a);
        std::vector<std::string> labels;
        orbit_of[static_cast<size_t>(a)].assign(static_cast<size_t>(R.roots(a)->size()), -1);
        for (size_t k = 0; k < pos.size(); ++k) {
            labels.push_back(R.roots(a)->label(pos[k]));
            orbit_of[static_cast<size_t>(a)][static_cast<size_t>(pos[k])] = static_cast<int>(k);
            orbit_of[static_cast<size_t>(a)][static_cast<size_t>(R.neg(a)[static_cast<size_t>(pos[k])])] =
                static_cast<int>(k);
        }
        grounds.push_back(make_ground("orbits:" + G.object_name(a), labels));
    }
    std::vector<std::vector<int>> act;
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int a = G.dom(g), b = G.cod(g);
        auto pos = positive_indices(R, a);
        std::vector<int> perm(pos.size());
        for (size_t k = 0; k < pos.size(); ++k) {
            int img = R.act_perm(g)[static_cast<size_t>(pos[k])];
            perm[k] = orbit_of[static_cast<size_t>(b)][static_cast<size_t>(img)];
        }
        act.push_back(perm);
    }
    SetProtorootoid T{G, PowerSetRep(std::move(grounds), std::move(act)), Cocycle{}};
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int b = G.cod(g);
        SetElem phi = R.phi(g);
        SetElem n(T.rep.ground(b));
        for (int i = 0; i < R.roots(b)->size(); ++i)
            if (phi.has(i)) n.set(orbit_of[static_cast<size_t>(b)][static_cast<size_t>(i)]);
        T.N.value.push_back(n);
    }
    return T;
}

SignedGroupoidSet K_functor(const SetProtorootoid& T) {
    const Groupoid& G = T.G;
    std::vector<GroundPtr> roots;
    std::vector<std::vector<int>> neg;
    std::vector<SetElem> positive;
    for (int a = 0; a < G.num_objects(); ++a) {
        const GroundPtr& L = T.rep.ground(a);
        std::vector<std::string> labels;
        for (int i = 0; i < L->size(); ++i) labels.push_back("+" + L->label(i));
        for (int i = 0; i < L->size(); ++i) labels.push_back("-" + L->label(i));
        GroundPtr root = make_ground("signed:" + G.object_name(a), labels);
        std::vector<int> nv(static_cast<size_t>(2 * L->size()));
        for (int i = 0; i < L->size(); ++i) {
            nv[static_cast<size_t>(i)] = L->size() + i;
            nv[static_cast<size_t>(L->size() + i)] = i;
        }
        SetElem pos(root);
        for (int i = 0; i < L->size(); ++i) pos.set(i);
        roots.push_back(root);
        neg.push_back(std::move(nv));
        positive.push_back(pos);
    }
    std::vector<std::vector<int>> act;
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int a = G.dom(g), b = G.cod(g);
        const int na = T.rep.ground(a)->size();
        const SetElem& flip = T.N.value[static_cast<size_t>(G.inv(g))];  // N(g*), over ground(a)
        std::vector<int> perm(static_cast<size_t>(2 * na));
        for (int i = 0; i < na; ++i) {
            int img = T.rep.act_perm(g)[static_cast<size_t>(i)];
            bool flips = flip.has(i);
            int nb = T.rep.ground(b)->size();
            perm[static_cast<size_t>(i)] = flips ? nb + img : img;
            perm[static_cast<size_t>(na + i)] = flips ? img : nb + img;
        }
        act.push_back(std::move(perm));
    }
    return SignedGroupoidSet(G, std::move(roots), std::move(neg), std::move(positive), std::move(act));
}

Protorootoid I_functor(const SetProtorootoid& T) { return Protorootoid(T.G, T.rep, T.N); }

SignedGroupoidSet with_positive_parts(const SignedGroupoidSet& R, std::vector<SetElem> positive) {
    const Groupoid& G = R.groupoid();
    std::vector<GroundPtr> roots;
    std::vector<std::vector<int>> neg, act;
    for (int a = 0; a < G.num_objects(); ++a) {
        roots.push_back(R.roots(a));
        neg.push_back(R.neg(a));
    }
    for (int g = 0; g < G.num_morphisms(); ++g) act.push_back(R.act_perm(g));
    return SignedGroupoidSet(G, std::move(roots), std::move(neg), std::move(positive), std::move(act));
}

SignedCheck rootoidal_signed_check(const SignedGroupoidSet& R) {
    const Groupoid& G = R.groupoid();
    // (i) strongly faithful on inversion sets.
    for (int g = 0; g < G.num_morphisms(); ++g)
        if (R.phi(g).empty() && !G.is_identity(g))
            return {false, "Phi(" + G.morphism(g).name + ") is empty but g is not an identity"};
    for (int a = 0; a < G.num_objects(); ++a) {
        // Distinct inversion sets at a, ordered by inclusion.
        std::vector<SetElem> L;
        for (int g : G.star(a)) {
            SetElem p = R.phi(g);
            bool seen = false;
            for (const auto& q : L)
                if (q == p) { seen = true; break; }
            if (!seen) L.push_back(p);
        }
        auto leq = [&](size_t i, size_t j) { return L[i].subset_of(L[j]); };
        auto meet = [&](size_t i, size_t j) -> int {
            int best = -1;
            for (size_t k = 0; k < L.size(); ++k)
                if (leq(k, i) && leq(k, j) && (best < 0 || leq(static_cast<size_t>(best), k)))
                    best = static_cast<int>(k);
            // best is a maximal common lower bound; verify it dominates all.
            if (best >= 0)
                for (size_t k = 0; k < L.size(); ++k)
                    if (leq(k, i) && leq(k, j) && !leq(k, static_cast<size_t>(best))) return -1;
            return best;
        };
        auto join = [&](size_t i, size_t j) -> int {
            int best = -1;
            for (size_t k = 0; k < L.size(); ++k)
                if (leq(i, k) && leq(j, k) && (best < 0 || leq(k, static_cast<size_t>(best))))
                    best = static_cast<int>(k);
            if (best >= 0)
                for (size_t k = 0; k < L.size(); ++k)
                    if (leq(i, k) && leq(j, k) && !leq(static_cast<size_t>(best), k)) return -1;
            return best;
        };
        for (size_t i = 0; i < L.size(); ++i)
            for (size_t j = i + 1; j < L.size(); ++j)
                if (meet(i, j) < 0)
                    return {false, "no meet of inversion sets " + L[i].to_string() + " and " +
                                       L[j].to_string() + " at '" + G.object_name(a) + "'"};
        for (size_t i = 0; i < L.size(); ++i)
            for (size_t j = i; j < L.size(); ++j) {
                int jn = join(i, j);
                if (jn < 0) continue;
                for (size_t k = 0; k < L.size(); ++k)
                    if ((L[i] & L[k]).empty() && (L[j] & L[k]).empty() &&
                        !(L[static_cast<size_t>(jn)] & L[k]).empty())
                        return {false, "JOP fails on inversion sets at '" + G.object_name(a) + "'"};
            }
    }
    return {true, ""};
}

bool verify_lk_roundtrip(const SetProtorootoid& T, std::string* diagnostic) {
    SetProtorootoid T2 = L_functor(K_functor(T));
    const Groupoid& G = T.G;
    auto fail = [&](const std::string& msg) {
        if (diagnostic) *diagnostic = msg;
        return false;
    };
    // Pairing per object: orbit "+x" of the doubled set corresponds to x.
    std::vector<std::vector<int>> pair_idx(static_cast<size_t>(G.num_objects()));
    for (int a = 0; a < G.num_objects(); ++a) {
        const GroundPtr& g2 = T2.rep.ground(a);
        const GroundPtr& g1 = T.rep.ground(a);
        if (g2->size() != g1->size()) return fail("orbit ground size mismatch");
        for (int i = 0; i < g2->size(); ++i) {
            std::string lab = g2->label(i);
            if (lab.empty() || lab[0] != '+') return fail("unexpected orbit label " + lab);
            int j = g1->find(lab.substr(1));
            if (j < 0) return fail("orbit label " + lab + " has no preimage");
            pair_idx[static_cast<size_t>(a)].push_back(j);
        }
    }
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int a = G.dom(g), b = G.cod(g);
        // Equivariance of the pairing.
        for (int i = 0; i < T2.rep.ground(a)->size(); ++i) {
            int via2 = pair_idx[static_cast<size_t>(b)][static_cast<size_t>(
                T2.rep.act_perm(g)[static_cast<size_t>(i)])];
            int via1 = T.rep.act_perm(g)[static_cast<size_t>(pair_idx[static_cast<size_t>(a)][static_cast<size_t>(i)])];
            if (via2 != via1) return fail("pairing is not equivariant at " + G.morphism(g).name);
        }
        // Cocycle transport.
        SetElem mapped(T.rep.ground(b));
        for (int i = 0; i < T2.rep.ground(b)->size(); ++i)
            if (T2.N.value[static_cast<size_t>(g)].has(i))
                mapped.set(pair_idx[static_cast<size_t>(b)][static_cast<size_t>(i)]);
        if (mapped != T.N.value[static_cast<size_t>(g)])
            return fail("pairing does not carry N at " + G.morphism(g).name);
    }
    return true;
}

bool verify_kl_roundtrip(const SignedGroupoidSet& R, std::string* diagnostic) {
    SignedGroupoidSet R2 = K_functor(L_functor(R));
    const Groupoid& G = R.groupoid();
    auto fail = [&](const std::string& msg) {
        if (diagnostic) *diagnostic = msg;
        return false;
    };
    // Pairing: "+l" -> the positive root labelled l, "-l" -> its negative.
    std::vector<std::vector<int>> pair_idx(static_cast<size_t>(G.num_objects()));
    for (int a = 0; a < G.num_objects(); ++a) {
        const GroundPtr& r2 = R2.roots(a);
        for (int i = 0; i < r2->size(); ++i) {
            std::string lab = r2->label(i);
            int j = R.roots(a)->find(lab.substr(1));
            if (j < 0) return fail("root label " + lab + " has no preimage");
            if (lab[0] == '-') j = R.neg(a)[static_cast<size_t>(j)];
            pair_idx[static_cast<size_t>(a)].push_back(j);
        }
        // Components are positivity preserving and commute with negation.
        for (int i = 0; i < r2->size(); ++i) {
            int j = pair_idx[static_cast<size_t>(a)][static_cast<size_t>(i)];
            if (R2.positive(a).has(i) != R.positive(a).has(j))
                return fail("pairing does not preserve positivity");
            if (pair_idx[static_cast<size_t>(a)][static_cast<size_t>(R2.neg(a)[static_cast<size_t>(i)])] !=
                R.neg(a)[static_cast<size_t>(j)])
                return fail("pairing does not commute with negation");
        }
    }
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int a = G.dom(g), b = G.cod(g);
        for (int i = 0; i < R2.roots(a)->size(); ++i) {
            int via2 = pair_idx[static_cast<size_t>(b)][static_cast<size_t>(
                R2.act_perm(g)[static_cast<size_t>(i)])];
            int via1 = R.act_perm(g)[static_cast<size_t>(pair_idx[static_cast<size_t>(a)][static_cast<size_t>(i)])];
            if (via2 != via1) return fail("pairing is not equivariant at " + G.morphism(g).name);
        }
    }
    return true;
}

SetProtorootoidExtraction to_set_protorootoid(const Protorootoid& P) {
    const Groupoid& G = P.groupoid();
    PropertyReport rep = classify(P);
    if (!rep.principal) throw std::invalid_argument("to_set_protorootoid: input is not principal");

    SetProtorootoidExtraction out;
    // Orbit of simple-value atoms per object.
    std::vector<std::vector<SetElem>> atoms(static_cast<size_t>(G.num_objects()));
    for (int s : rep.simple_morphisms) {
        int b = G.cod(s);
        for (int g = 0; g < G.num_morphisms(); ++g) {
            if (G.dom(g) != b) continue;
            SetElem img = P.rep().act(G, g, P.N(s));
            auto& list = atoms[static_cast<size_t>(G.cod(g))];
            bool seen = false;
            for (const auto& x : list)
                if (x == img) { seen = true; break; }
            if (!seen) list.push_back(img);
        }
    }
    std::vector<GroundPtr> grounds;
    for (int a = 0; a < G.num_objects(); ++a) {
        std::sort(atoms[static_cast<size_t>(a)].begin(), atoms[static_cast<size_t>(a)].end(),
                  [](const SetElem& x, const SetElem& y) { return x.before(y); });
        std::vector<std::string> labels;
        for (const auto& x : atoms[static_cast<size_t>(a)]) labels.push_back(x.members().front());
        grounds.push_back(make_ground("atoms:" + G.object_name(a), labels));
    }
    std::vector<std::vector<int>> act;
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int a = G.dom(g), b = G.cod(g);
        std::vector<int> perm;
        for (const auto& x : atoms[static_cast<size_t>(a)]) {
            SetElem img = P.rep().act(G, g, x);
            int idx = -1;
            for (size_t k = 0; k < atoms[static_cast<size_t>(b)].size(); ++k)
                if (atoms[static_cast<size_t>(b)][k] == img) idx = static_cast<int>(k);
            if (idx < 0) throw std::logic_error("to_set_protorootoid: atom orbit is not action-stable");
            perm.push_back(idx);
        }
        act.push_back(perm);
    }
    Cocycle M;
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int b = G.cod(g);
        SetElem m(grounds[static_cast<size_t>(b)]);
        SetElem covered(P.rep().ground(b));
        for (size_t k = 0; k < atoms[static_cast<size_t>(b)].size(); ++k)
            if (atoms[static_cast<size_t>(b)][k].subset_of(P.N(g))) {
                m.set(static_cast<int>(k));
                covered = covered.unite(atoms[static_cast<size_t>(b)][k]);
            }
        if (covered != P.N(g)) {
            out.diagnostic = "N(" + G.morphism(g).name + ") is not a union of simple-value atoms";
            out.iso_verified = false;
        }
        M.value.push_back(m);
    }
    out.T = SetProtorootoid{G, PowerSetRep(std::move(grounds), std::move(act)), std::move(M)};
    if (!out.diagnostic.empty()) return out;

    // The abridgement of P must have exactly the collected atoms as blocks;
    // union-of-atoms is then a protorootoid isomorphism onto abridge(P).
    out.iso_verified = true;
    for (int a = 0; a < G.num_objects() && out.iso_verified; ++a) {
        auto part = generated_subring(P.rep().ground(a), WeakOrder(P, a).elems());
        if (part.blocks.size() != atoms[static_cast<size_t>(a)].size()) {
            out.iso_verified = false;
            out.diagnostic = "abridged ring at '" + G.object_name(a) + "' has unexpected atoms";
            break;
        }
        for (const auto& blk : part.blocks) {
            bool found = false;
            for (const auto& x : atoms[static_cast<size_t>(a)])
                if (x == blk) { found = true; break; }
            if (!found) {
                out.iso_verified = false;
                out.diagnostic = "abridged block " + blk.to_string() + " is not a simple-value atom";
                break;
            }
        }
    }
    // The cocycle of I(T) must satisfy the cocycle law; constructing the
    // protorootoid validates it.
    I_functor(out.T);
    return out;
}

}  // namespace rootoidlab
