#include "rootoidlab/cat.hpp"

#include <algorithm>
#include <stdexcept>

namespace rootoidlab {

GroupoidFunctor GroupoidFunctor::identity(const Groupoid& G) {
    GroupoidFunctor f;
    f.obj.resize(static_cast<size_t>(G.num_objects()));
    f.mor.resize(static_cast<size_t>(G.num_morphisms()));
    for (int a = 0; a < G.num_objects(); ++a) f.obj[static_cast<size_t>(a)] = a;
    for (int g = 0; g < G.num_morphisms(); ++g) f.mor[static_cast<size_t>(g)] = g;
    return f;
}

std::string GroupoidFunctor::check(const Groupoid& src, const Groupoid& tgt) const {
    if (static_cast<int>(obj.size()) != src.num_objects() ||
        static_cast<int>(mor.size()) != src.num_morphisms())
        return "functor: size mismatch with source groupoid";
    for (int a : obj)
        if (a < 0 || a >= tgt.num_objects()) return "functor: object image out of range";
    for (int g : mor)
        if (g < 0 || g >= tgt.num_morphisms()) return "functor: morphism image out of range";
    for (int g = 0; g < src.num_morphisms(); ++g) {
        int h = mor[static_cast<size_t>(g)];
        if (tgt.dom(h) != obj[static_cast<size_t>(src.dom(g))] ||
            tgt.cod(h) != obj[static_cast<size_t>(src.cod(g))])
            return "functor: endpoints not preserved at '" + src.morphism(g).name + "'";
    }
    for (int a = 0; a < src.num_objects(); ++a)
        if (mor[static_cast<size_t>(src.identity(a))] != tgt.identity(obj[static_cast<size_t>(a)]))
            return "functor: identity not preserved at object '" + src.object_name(a) + "'";
    for (int g = 0; g < src.num_morphisms(); ++g)
        for (int h = 0; h < src.num_morphisms(); ++h) {
            if (!src.composable(g, h)) continue;
            if (mor[static_cast<size_t>(src.compose(g, h))] !=
                tgt.compose(mor[static_cast<size_t>(g)], mor[static_cast<size_t>(h)]))
                return "functor: composition not preserved at ('" + src.morphism(g).name + "','" +
                       src.morphism(h).name + "')";
        }
    return "";
}

PrdMorphism identity_prd_morphism(const Protorootoid& P) {
    PrdMorphism f;
    f.alpha = GroupoidFunctor::identity(P.groupoid());
    for (int a = 0; a < P.groupoid().num_objects(); ++a)
        f.mu.push_back(PartialMap::identity(P.rep().ground(a)));
    return f;
}

PartialMap compose_partial_maps(const PartialMap& inner, const PartialMap& outer) {
    // inner: Y -> X encodes mu : ring(X side) -> ring(Y side); outer: Z -> Y
    // encodes mu' one stage further. The composite hom is encoded by
    // z -> inner(outer(z)).
    PartialMap q{outer.source, inner.target, std::vector<int>(outer.map.size(), -1)};
    for (size_t z = 0; z < outer.map.size(); ++z) {
        int y = outer.map[z];
        if (y >= 0) q.map[z] = inner.map[static_cast<size_t>(y)];
    }
    return q;
}

PrdMorphism compose_prd_morphisms(const PrdMorphism& first, const PrdMorphism& second) {
    PrdMorphism out;
    out.alpha.obj.resize(first.alpha.obj.size());
    out.alpha.mor.resize(first.alpha.mor.size());
    for (size_t a = 0; a < first.alpha.obj.size(); ++a)
        out.alpha.obj[a] = second.alpha.obj[static_cast<size_t>(first.alpha.obj[a])];
    for (size_t g = 0; g < first.alpha.mor.size(); ++g)
        out.alpha.mor[g] = second.alpha.mor[static_cast<size_t>(first.alpha.mor[g])];
    for (size_t a = 0; a < first.mu.size(); ++a)
        out.mu.push_back(
            compose_partial_maps(first.mu[a], second.mu[static_cast<size_t>(first.alpha.obj[a])]));
    return out;
}

MorphismCheck check_prd_morphism(const Protorootoid& src, const Protorootoid& tgt, const PrdMorphism& f) {
    const Groupoid& G = src.groupoid();
    const Groupoid& H = tgt.groupoid();
    std::string err = f.alpha.check(G, H);
    if (!err.empty()) return {false, err};

    if (static_cast<int>(f.mu.size()) != G.num_objects())
        return {false, "morphism: one ring map per source object required"};
    for (int a = 0; a < G.num_objects(); ++a) {
        const PartialMap& pm = f.mu[static_cast<size_t>(a)];
        pm.validate();
        int aa = f.alpha.obj[static_cast<size_t>(a)];
        if (!pm.source->same_as(*tgt.rep().ground(aa)) || !pm.target->same_as(*src.rep().ground(a)))
            return {false, "morphism: ring map at '" + G.object_name(a) + "' has wrong grounds"};
        // The hom must carry the source ring into the target ring.
        for (const SetElem& atom : src.rep().ring_atoms(a)) {
            if (!tgt.rep().ring_contains(aa, pm.apply(atom)))
                return {false, "morphism: image of " + atom.to_string() + " leaves the ring at '" +
                                   H.object_name(aa) + "'"};
        }
    }
    // Naturality on ring atoms: mu_a(g x) = alpha(g)(mu_b x).
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int b = G.dom(g), a = G.cod(g);
        for (const SetElem& atom : src.rep().ring_atoms(b)) {
            SetElem lhs = f.apply_mu(a, src.rep().act(G, g, atom));
            SetElem rhs = tgt.rep().act(H, f.alpha.mor[static_cast<size_t>(g)], f.apply_mu(b, atom));
            if (lhs != rhs)
                return {false, "morphism: naturality fails at '" + G.morphism(g).name + "' on " +
                                   atom.to_string()};
        }
    }
    // Cocycle intertwining: mu_a(N g) = N'(alpha g).
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int a = G.cod(g);
        SetElem lhs = f.apply_mu(a, src.N(g));
        const SetElem& rhs = tgt.N(f.alpha.mor[static_cast<size_t>(g)]);
        if (lhs != rhs)
            return {false, "morphism: mu(N(" + G.morphism(g).name + ")) = " + lhs.to_string() +
                               " but N'(alpha g) = " + rhs.to_string()};
    }
    // Star maps preserve the weak preorders.
    for (int a = 0; a < G.num_objects(); ++a) {
        auto star = G.star(a);
        for (int g1 : star)
            for (int g2 : star) {
                if (!src.N(g1).subset_of(src.N(g2))) continue;
                if (!tgt.N(f.alpha.mor[static_cast<size_t>(g1)])
                         .subset_of(tgt.N(f.alpha.mor[static_cast<size_t>(g2)])))
                    return {false, "morphism: star map at '" + G.object_name(a) +
                                       "' does not preserve the weak preorder"};
            }
    }
    return {true, ""};
}

int ThetaPerp::value_at(int target_index) const {
    for (size_t i = 0; i < domain.size(); ++i)
        if (domain[i] == target_index) return value[i];
    return -1;
}

ThetaPerp theta_perp(const Protorootoid& src, const Protorootoid& tgt, const PrdMorphism& f, int object) {
    if (!is_faithful(src).faithful || !is_faithful(tgt).faithful)
        throw std::invalid_argument("theta_perp: endpoints must be faithful");
    WeakOrder ws(src, object);
    WeakOrder wt(tgt, f.alpha.obj[static_cast<size_t>(object)]);

    ThetaPerp out;
    out.object = object;
    out.theta.assign(static_cast<size_t>(ws.size()), -1);
    for (int i = 0; i < ws.size(); ++i) {
        int g = ws.witnesses(i).front();
        int ti = wt.index_of(tgt.N(f.alpha.mor[static_cast<size_t>(g)]));
        if (ti < 0) throw std::logic_error("theta_perp: image value missing from the target star");
        out.theta[static_cast<size_t>(i)] = ti;
    }

    // Complete-semilattice morphism conditions, pairwise (iterated joins
    // and meets reduce finite families to pairs).
    if (out.theta[static_cast<size_t>(ws.min_index())] != wt.min_index())
        throw std::invalid_argument("theta_perp: star map does not preserve the minimum");
    for (int i = 0; i < ws.size(); ++i)
        for (int j = i + 1; j < ws.size(); ++j) {
            int m = ws.meet(i, j);
            if (m < 0) throw std::invalid_argument("theta_perp: source star lacks a meet");
            int tm = wt.meet(out.theta[static_cast<size_t>(i)], out.theta[static_cast<size_t>(j)]);
            if (tm != out.theta[static_cast<size_t>(m)])
                throw std::invalid_argument("theta_perp: star map fails to preserve the meet of " +
                                            ws.elem(i).to_string() + " and " + ws.elem(j).to_string());
            int jn = ws.join(i, j);
            if (jn >= 0) {
                int tj = wt.join(out.theta[static_cast<size_t>(i)], out.theta[static_cast<size_t>(j)]);
                if (tj != out.theta[static_cast<size_t>(jn)])
                    throw std::invalid_argument("theta_perp: star map fails to preserve the join of " +
                                                ws.elem(i).to_string() + " and " + ws.elem(j).to_string());
            }
        }

    // Domain: the order ideal generated by the image.
    for (int t = 0; t < wt.size(); ++t) {
        bool below = false;
        for (int i = 0; i < ws.size() && !below; ++i)
            if (wt.leq(t, out.theta[static_cast<size_t>(i)])) below = true;
        if (!below) continue;
        std::vector<int> candidates;
        for (int i = 0; i < ws.size(); ++i)
            if (wt.leq(t, out.theta[static_cast<size_t>(i)])) candidates.push_back(i);
        int m = ws.meet_all(candidates);
        if (m < 0 || !wt.leq(t, out.theta[static_cast<size_t>(m)]))
            throw std::logic_error("theta_perp: candidate set has no least element");
        out.domain.push_back(t);
        out.value.push_back(m);
    }
    // Adjunction on all pairs.
    for (size_t k = 0; k < out.domain.size(); ++k)
        for (int i = 0; i < ws.size(); ++i) {
            bool lhs = wt.leq(out.domain[k], out.theta[static_cast<size_t>(i)]);
            bool rhs = ws.leq(out.value[k], i);
            if (lhs != rhs) throw std::logic_error("theta_perp: adjunction law fails");
        }
    return out;
}

MorphismGrade grade_morphism(const Protorootoid& src, const Protorootoid& tgt, const PrdMorphism& f) {
    auto rs = is_rootoid(src);
    if (!rs.ok) throw std::invalid_argument("grade_morphism: source is not a rootoid: " + rs.witness);
    auto rt = is_rootoid(tgt);
    if (!rt.ok) throw std::invalid_argument("grade_morphism: target is not a rootoid: " + rt.witness);

    MorphismGrade grade;
    auto chk = check_prd_morphism(src, tgt, f);
    grade.in_prd = chk.ok;
    if (!chk.ok) {
        grade.witnesses["in_prd"] = chk.witness;
        return grade;
    }

    const Groupoid& G = src.groupoid();
    grade.in_rd = true;
    for (int a = 0; a < G.num_objects(); ++a) {
        try {
            grade.adjoints.push_back(theta_perp(src, tgt, f, a));
        } catch (const std::invalid_argument& e) {
            grade.in_rd = false;
            grade.witnesses["in_rd"] = std::string(e.what()) + " (object '" + G.object_name(a) + "')";
            return grade;
        }
    }

    // AOP: orthogonality of (alpha g, g') forces orthogonality of
    // (g, theta-perp g'). The converse is expected to hold automatically;
    // any violation is recorded as an inconsistency witness.
    grade.in_Rd = true;
    for (int a = 0; a < G.num_objects() && grade.in_Rd; ++a) {
        const ThetaPerp& tp = grade.adjoints[static_cast<size_t>(a)];
        WeakOrder ws(src, a);
        WeakOrder wt(tgt, f.alpha.obj[static_cast<size_t>(a)]);
        for (int i = 0; i < ws.size(); ++i)
            for (size_t k = 0; k < tp.domain.size(); ++k) {
                bool tgt_orth =
                    (wt.elem(tp.theta[static_cast<size_t>(i)]) & wt.elem(tp.domain[k])).empty();
                bool src_orth = (ws.elem(i) & ws.elem(tp.value[k])).empty();
                if (tgt_orth && !src_orth) {
                    grade.in_Rd = false;
                    grade.witnesses["in_Rd"] =
                        "AOP fails at '" + G.object_name(a) + "': images " +
                        wt.elem(tp.theta[static_cast<size_t>(i)]).to_string() + " ⟂ " +
                        wt.elem(tp.domain[k]).to_string() + " but " + ws.elem(i).to_string() +
                        " meets " + ws.elem(tp.value[k]).to_string();
                }
                if (src_orth && !tgt_orth && grade.witnesses.find("aop_converse") == grade.witnesses.end())
                    grade.witnesses["aop_converse"] =
                        "converse direction violated at '" + G.object_name(a) + "'";
            }
    }
    if (!grade.in_Rd) return grade;

    grade.in_RdE = true;
    for (int a = 0; a < G.num_objects() && grade.in_RdE; ++a) {
        const ThetaPerp& tp = grade.adjoints[static_cast<size_t>(a)];
        WeakOrder wt(tgt, f.alpha.obj[static_cast<size_t>(a)]);
        std::vector<int> image = tp.theta;
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
            grade.in_RdE = false;
            grade.witnesses["in_RdE"] = "star map at '" + G.object_name(a) + "' is not injective";
            break;
        }
        auto in_image = [&](int t) { return std::binary_search(image.begin(), image.end(), t); };
        for (size_t i = 0; i < image.size() && grade.in_RdE; ++i)
            for (size_t j = i; j < image.size(); ++j) {
                int m = wt.meet(image[i], image[j]);
                if (m >= 0 && !in_image(m)) {
                    grade.in_RdE = false;
                    grade.witnesses["in_RdE"] = "image at '" + G.object_name(a) + "' is not meet closed";
                    break;
                }
                int jn = wt.join(image[i], image[j]);
                if (jn >= 0 && !in_image(jn)) {
                    grade.in_RdE = false;
                    grade.witnesses["in_RdE"] = "image at '" + G.object_name(a) + "' is not join closed";
                    break;
                }
            }
    }
    return grade;
}

InverseImage inverse_image(const Protorootoid& P, const Groupoid& H, const GroupoidFunctor& i) {
    std::string err = i.check(H, P.groupoid());
    if (!err.empty()) throw std::invalid_argument("inverse_image: " + err);
    std::vector<GroundPtr> grounds;
    std::vector<std::optional<SubringPartition>> subrings;
    std::vector<std::vector<int>> act;
    for (int b = 0; b < H.num_objects(); ++b) {
        int a = i.obj[static_cast<size_t>(b)];
        grounds.push_back(P.rep().ground(a));
        if (P.rep().has_subring(a)) subrings.emplace_back(P.rep().subring(a));
        else subrings.emplace_back();
    }
    for (int h = 0; h < H.num_morphisms(); ++h)
        act.push_back(P.rep().act_perm(i.mor[static_cast<size_t>(h)]));
    Cocycle N;
    for (int h = 0; h < H.num_morphisms(); ++h) N.value.push_back(P.N(i.mor[static_cast<size_t>(h)]));

    InverseImage out{Protorootoid(H, PowerSetRep(std::move(grounds), std::move(act), std::move(subrings)),
                                  std::move(N)),
                     PrdMorphism{}};
    out.iflat.alpha = i;
    for (int b = 0; b < H.num_objects(); ++b)
        out.iflat.mu.push_back(PartialMap::identity(out.prd.rep().ground(b)));
    return out;
}

InverseImage restriction(const Protorootoid& P, const std::vector<int>& morphisms) {
    const Groupoid& G = P.groupoid();
    std::vector<int> objs;
    for (int g : morphisms) {
        objs.push_back(G.dom(g));
        objs.push_back(G.cod(g));
    }
    std::sort(objs.begin(), objs.end());
    objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
    std::vector<int> obj_pos(static_cast<size_t>(G.num_objects()), -1);
    Groupoid::Builder b;
    for (size_t k = 0; k < objs.size(); ++k) {
        obj_pos[static_cast<size_t>(objs[k])] = static_cast<int>(k);
        b.add_object(G.object_name(objs[k]));
    }
    std::vector<int> mors = morphisms;
    std::sort(mors.begin(), mors.end());
    mors.erase(std::unique(mors.begin(), mors.end()), mors.end());
    std::vector<int> mor_pos(static_cast<size_t>(G.num_morphisms()), -1);
    for (size_t k = 0; k < mors.size(); ++k) {
        mor_pos[static_cast<size_t>(mors[k])] = static_cast<int>(k);
        b.add_morphism(G.morphism(mors[k]).name, obj_pos[static_cast<size_t>(G.dom(mors[k]))],
                       obj_pos[static_cast<size_t>(G.cod(mors[k]))]);
    }
    for (size_t k = 0; k < mors.size(); ++k) {
        int g = mors[k];
        if (mor_pos[static_cast<size_t>(G.inv(g))] < 0)
            throw std::invalid_argument("restriction: subset not closed under inverses");
        b.set_inverse(static_cast<int>(k), mor_pos[static_cast<size_t>(G.inv(g))]);
        if (G.is_identity(g)) b.set_identity(obj_pos[static_cast<size_t>(G.dom(g))], static_cast<int>(k));
    }
    for (int o : objs)
        if (mor_pos[static_cast<size_t>(G.identity(o))] < 0)
            throw std::invalid_argument("restriction: identities must be included");
    for (size_t k1 = 0; k1 < mors.size(); ++k1)
        for (size_t k2 = 0; k2 < mors.size(); ++k2) {
            if (!G.composable(mors[k1], mors[k2])) continue;
            int comp = G.compose(mors[k1], mors[k2]);
            if (mor_pos[static_cast<size_t>(comp)] < 0)
                throw std::invalid_argument("restriction: subset not closed under composition");
            b.set_compose(static_cast<int>(k1), static_cast<int>(k2), mor_pos[static_cast<size_t>(comp)]);
        }
    Groupoid H = std::move(b).build();
    GroupoidFunctor inc;
    for (int o : objs) inc.obj.push_back(o);
    for (int g : mors) inc.mor.push_back(g);
    return inverse_image(P, H, inc);
}

bool is_covering(const Protorootoid& src, const Protorootoid& tgt, const PrdMorphism& f) {
    auto chk = check_prd_morphism(src, tgt, f);
    if (!chk.ok) return false;
    const Groupoid& G = src.groupoid();
    const Groupoid& H = tgt.groupoid();
    for (int a = 0; a < G.num_objects(); ++a) {
        auto star = G.star(a);
        auto tstar = H.star(f.alpha.obj[static_cast<size_t>(a)]);
        if (star.size() != tstar.size()) return false;
        std::vector<int> images;
        for (int g : star) images.push_back(f.alpha.mor[static_cast<size_t>(g)]);
        std::sort(images.begin(), images.end());
        if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
        std::sort(tstar.begin(), tstar.end());
        if (images != tstar) return false;
    }
    for (const auto& pm : f.mu)
        if (!pm.is_bijective()) return false;
    return true;
}

CoverResult cover(const Protorootoid& P) {
    UniversalCover uc = universal_cover(P.groupoid());
    GroupoidFunctor pi;
    pi.obj = uc.object_map;
    pi.mor = uc.morphism_map;
    InverseImage ii = inverse_image(P, uc.cover, pi);
    return CoverResult{std::move(ii.prd), std::move(ii.iflat), std::move(uc)};
}

CompleteStructure complete_structure(const Protorootoid& P) {
    const Groupoid& G = P.groupoid();
    PropertyReport rep = classify(P);
    if (!rep.faithful) throw std::invalid_argument("complete_structure: input is not faithful");
    if (!rep.abridged) throw std::invalid_argument("complete_structure: input is not abridged");

    CompleteStructure out;
    for (int a = 0; a < G.num_objects(); ++a) {
        WeakOrder wo(P, a);
        int mx = wo.max_index();
        if (mx < 0)
            throw std::invalid_argument("complete_structure: weak order at '" + G.object_name(a) +
                                        "' has no maximum");
        out.omega.push_back(wo.witnesses(mx).front());
        out.unit.push_back(wo.elem(mx));
        // e_a is the ring identity (the support once abridged).
        if (out.unit.back() != P.rep().ring_identity(a))
            throw std::logic_error("complete_structure: N(omega) is not the ring identity at '" +
                                   G.object_name(a) + "'");
    }
    // omega(a)* = omega(a') with a' = dom(omega(a)).
    for (int a = 0; a < G.num_objects(); ++a) {
        int ap = G.dom(out.omega[static_cast<size_t>(a)]);
        if (G.inv(out.omega[static_cast<size_t>(a)]) != out.omega[static_cast<size_t>(ap)])
            throw std::logic_error("complete_structure: omega(a)* != omega(dom omega(a))");
    }

    out.d.obj.resize(static_cast<size_t>(G.num_objects()));
    out.d.mor.resize(static_cast<size_t>(G.num_morphisms()));
    for (int a = 0; a < G.num_objects(); ++a)
        out.d.obj[static_cast<size_t>(a)] = G.dom(out.omega[static_cast<size_t>(a)]);
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int a = G.cod(g), b = G.dom(g);
        out.d.mor[static_cast<size_t>(g)] = G.compose(
            G.compose(G.inv(out.omega[static_cast<size_t>(a)]), g), out.omega[static_cast<size_t>(b)]);
    }
    std::string err = out.d.check(G, G);
    if (!err.empty()) throw std::logic_error("complete_structure: d is not a functor: " + err);

    out.D.alpha = out.d;
    for (int a = 0; a < G.num_objects(); ++a) {
        // mu_a = ring action of omega(a)*, encoded through the inverse
        // ground permutation.
        int ap = out.d.obj[static_cast<size_t>(a)];
        const auto& sigma = P.rep().act_perm(G.inv(out.omega[static_cast<size_t>(a)]));
        PartialMap pm{P.rep().ground(ap), P.rep().ground(a),
                      std::vector<int>(static_cast<size_t>(P.rep().ground(ap)->size()), -1)};
        for (size_t x = 0; x < sigma.size(); ++x) pm.map[static_cast<size_t>(sigma[x])] = static_cast<int>(x);
        out.D.mu.push_back(std::move(pm));
    }
    auto chk = check_prd_morphism(P, P, out.D);
    if (!chk.ok) throw std::logic_error("complete_structure: D is not a protorootoid morphism: " + chk.witness);
    // D is involutory.
    PrdMorphism DD = compose_prd_morphisms(out.D, out.D);
    for (int g = 0; g < G.num_morphisms(); ++g)
        if (DD.alpha.mor[static_cast<size_t>(g)] != g)
            throw std::logic_error("complete_structure: D^2 is not the identity");
    for (int a = 0; a < G.num_objects(); ++a) {
        const PartialMap& pm = DD.mu[static_cast<size_t>(a)];
        for (size_t y = 0; y < pm.map.size(); ++y)
            if (pm.map[y] != static_cast<int>(y))
                throw std::logic_error("complete_structure: D^2 ring maps are not the identity");
    }
    return out;
}

}  // namespace rootoidlab
