#include "rootoidlab/classify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace rootoidlab {

namespace {

std::vector<WeakOrder> all_weak_orders(const Protorootoid& P) {
    std::vector<WeakOrder> out;
    for (int a = 0; a < P.groupoid().num_objects(); ++a) out.emplace_back(P, a);
    return out;
}

// Atom indices of a weak order: elements covering the minimum.
std::vector<int> order_atoms(const WeakOrder& wo) {
    std::vector<int> atoms;
    for (int i = 0; i < wo.size(); ++i)
        if (i != wo.min_index() && wo.down(i).count() == 2) atoms.push_back(i);
    return atoms;
}

// Maximal chains of the order ideal { A in wo : A <= top } must all have
// ring-rank length rank(top)+1; DFS over interval covers.
bool saturated_at(const Protorootoid& P, const WeakOrder& wo, int top) {
    const int n = wo.size();
    std::vector<std::vector<int>> covers_in(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (!wo.leq(i, top)) continue;
        for (int j = 0; j < n; ++j) {
            if (i == j || !wo.leq(j, top) || !wo.leq(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != i && k != j && wo.leq(k, top) && wo.leq(i, k) && wo.leq(k, j)) cover = false;
            if (cover) covers_in[static_cast<size_t>(i)].push_back(j);
        }
    }
    int want = P.rep().ring_rank(wo.object(), wo.elem(top)) + 1;
    std::vector<int> chain{wo.min_index()};
    bool ok = true;
    std::function<void(int)> dfs = [&](int cur) {
        if (!ok) return;
        if (covers_in[static_cast<size_t>(cur)].empty()) {
            if (static_cast<int>(chain.size()) != want) ok = false;
            return;
        }
        for (int nxt : covers_in[static_cast<size_t>(cur)]) {
            chain.push_back(nxt);
            dfs(nxt);
            chain.pop_back();
        }
    };
    dfs(wo.min_index());
    return ok;
}

std::string mor_name(const Protorootoid& P, int g) { return P.groupoid().morphism(g).name; }

}  // namespace

PropertyReport classify(const Protorootoid& P) {
    const Groupoid& G = P.groupoid();
    PropertyReport r;
    auto wos = all_weak_orders(P);

    r.connected = is_connected(G);
    if (!r.connected) r.witnesses["connected"] = "groupoid is not connected";
    r.simply_connected = is_simply_connected(G);
    if (!r.simply_connected) r.witnesses["simply_connected"] = "two objects admit parallel morphisms";

    auto fr = is_faithful(P);
    r.faithful = fr.faithful;
    if (fr.witness)
        r.witnesses["faithful"] = "N(" + mor_name(P, fr.witness->first) + ") = N(" +
                                  mor_name(P, fr.witness->second) + ")";

    // Finite protorootoids are interval finite and cocycle finite outright.
    r.interval_finite = true;
    r.cocycle_finite = true;
    r.l_N.resize(static_cast<size_t>(G.num_morphisms()));
    for (int g = 0; g < G.num_morphisms(); ++g)
        r.l_N[static_cast<size_t>(g)] = P.rep().ring_rank(G.cod(g), P.N(g));

    // Complemented: the ring identity's complement of every weak-order
    // element stays in the weak order.
    r.complemented = true;
    for (int a = 0; a < G.num_objects() && r.complemented; ++a) {
        SetElem one = P.rep().ring_identity(a);
        for (int i = 0; i < wos[static_cast<size_t>(a)].size(); ++i) {
            SetElem comp = one + wos[static_cast<size_t>(a)].elem(i);
            if (wos[static_cast<size_t>(a)].index_of(comp) < 0) {
                r.complemented = false;
                r.witnesses["complemented"] = "at object '" + G.object_name(a) + "', complement of " +
                                              wos[static_cast<size_t>(a)].elem(i).to_string() +
                                              " is not a cocycle value";
                break;
            }
        }
    }

    // Complete: every weak order is a (finite) lattice: maximum + pairwise meets.
    r.complete = true;
    for (int a = 0; a < G.num_objects() && r.complete; ++a) {
        const auto& wo = wos[static_cast<size_t>(a)];
        if (wo.max_index() < 0) {
            r.complete = false;
            r.witnesses["complete"] = "weak order at '" + G.object_name(a) + "' has no maximum";
        } else if (!wo.has_all_pairwise_meets()) {
            r.complete = false;
            r.witnesses["complete"] = "weak order at '" + G.object_name(a) + "' is missing a pairwise meet";
        }
    }

    // Atomic and simple morphisms.
    for (int g = 0; g < G.num_morphisms(); ++g) {
        const auto& wo = wos[static_cast<size_t>(G.cod(g))];
        int idx = wo.index_of(P.N(g));
        if (idx != wo.min_index() && wo.down(idx).count() == 2) r.atomic_morphisms.push_back(g);
        if (r.l_N[static_cast<size_t>(g)] == 1) r.simple_morphisms.push_back(g);
    }

    auto gen_atomic = generated_subgroupoid(G, r.atomic_morphisms);
    r.atomically_generated = gen_atomic.generates_all;
    if (!r.atomically_generated) r.witnesses["atomically_generated"] = "atomic morphisms generate a proper subgroupoid";
    auto gen_simple = generated_subgroupoid(G, r.simple_morphisms);
    r.simply_generated = gen_simple.generates_all;
    if (!r.simply_generated) r.witnesses["simply_generated"] = "simple morphisms generate a proper subgroupoid";
    r.l_S = gen_simple.length;

    r.principal = r.cocycle_finite && r.simply_generated;
    if (r.principal)
        for (int g = 0; g < G.num_morphisms(); ++g)
            if (r.l_S[static_cast<size_t>(g)] != r.l_N[static_cast<size_t>(g)]) {
                r.principal = false;
                r.witnesses["principal"] = "l_S(" + mor_name(P, g) + ") = " +
                                           std::to_string(r.l_S[static_cast<size_t>(g)]) + " but l_N = " +
                                           std::to_string(r.l_N[static_cast<size_t>(g)]);
                break;
            }
    if (!r.simply_generated && r.witnesses.count("principal") == 0)
        r.witnesses["principal"] = "not simply generated";

    // Preprincipal: faithful, interval finite, and the atom dichotomy.
    r.preprincipal = r.faithful && r.interval_finite;
    for (int a = 0; a < G.num_objects() && r.preprincipal; ++a) {
        const auto& wo = wos[static_cast<size_t>(a)];
        auto atoms = order_atoms(wo);
        for (int g : G.star(a)) {
            for (int s : atoms) {
                const SetElem& Ns = wo.elem(s);
                if (!(P.N(g) & Ns).empty() && !Ns.subset_of(P.N(g))) {
                    r.preprincipal = false;
                    r.witnesses["preprincipal"] = "at '" + G.object_name(a) + "', atom " + Ns.to_string() +
                                                  " neither misses nor sits inside N(" + mor_name(P, g) + ")";
                    break;
                }
            }
            if (!r.preprincipal) break;
        }
    }
    if (!r.faithful) r.witnesses.emplace("preprincipal", "not faithful");

    // Abridged: the subring generated by the cocycle values is the whole ring.
    r.abridged = true;
    for (int a = 0; a < G.num_objects() && r.abridged; ++a) {
        auto part = generated_subring(P.rep().ground(a), wos[static_cast<size_t>(a)].elems());
        if (P.rep().has_subring(a)) {
            if (!part.same_as(P.rep().subring(a))) r.abridged = false;
        } else {
            bool full = part.support == SetElem::full(P.rep().ground(a));
            for (const auto& b : part.blocks)
                if (b.rank() != 1) full = false;
            r.abridged = full;
        }
        if (!r.abridged)
            r.witnesses["abridged"] = "ring at '" + G.object_name(a) +
                                      "' is larger than the subring generated by the weak order";
    }

    // Saturated: maximal chains in weak-order intervals are maximal in the ring.
    r.saturated = true;
    for (int a = 0; a < G.num_objects() && r.saturated; ++a) {
        const auto& wo = wos[static_cast<size_t>(a)];
        for (int i = 0; i < wo.size() && r.saturated; ++i)
            if (!saturated_at(P, wo, i)) {
                r.saturated = false;
                r.witnesses["saturated"] = "a maximal weak-order chain below " + wo.elem(i).to_string() +
                                           " at '" + G.object_name(a) + "' is not ring-maximal";
            }
    }

    // Pseudoprincipal: nonzero values dominate a nonzero value comparable-or-
    // orthogonal to every other value.
    r.pseudoprincipal = true;
    for (int a = 0; a < G.num_objects() && r.pseudoprincipal; ++a) {
        auto star = G.star(a);
        for (int h : star) {
            if (P.N(h).empty()) continue;
            for (int g : star) {
                bool found = false;
                for (int x : star) {
                    if (P.N(x).empty() || !P.N(x).subset_of(P.N(h))) continue;
                    if (P.N(x).subset_of(P.N(g)) || (P.N(x) & P.N(g)).empty()) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    r.pseudoprincipal = false;
                    r.witnesses["pseudoprincipal"] =
                        "no nonzero value below N(" + mor_name(P, h) + ") is comparable or orthogonal to N(" +
                        mor_name(P, g) + ") at '" + G.object_name(a) + "'";
                    break;
                }
            }
            if (!r.pseudoprincipal) break;
        }
    }

    // Regular: directed joins agree with ring joins. Checked by subset
    // enumeration on small stars; larger stars rely on interval finiteness.
    r.regular = true;
    for (int a = 0; a < G.num_objects() && r.regular; ++a) {
        const auto& wo = wos[static_cast<size_t>(a)];
        if (wo.size() > 15) continue;  // interval finite implies regular
        const unsigned n = static_cast<unsigned>(wo.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> xs;
            for (unsigned i = 0; i < n; ++i)
                if (mask & (1u << i)) xs.push_back(static_cast<int>(i));
            bool directed = true;
            for (size_t i = 0; i < xs.size() && directed; ++i)
                for (size_t j = i; j < xs.size() && directed; ++j) {
                    bool ub = false;
                    for (int k : xs)
                        if (wo.leq(xs[i], k) && wo.leq(xs[j], k)) { ub = true; break; }
                    if (!ub) directed = false;
                }
            if (!directed) continue;
            int join = wo.join_all(xs);
            if (join < 0) continue;
            SetElem uni(P.rep().ground(a));
            for (int i : xs) uni = uni.unite(wo.elem(i));
            if (wo.elem(join) != uni) {
                r.regular = false;
                r.witnesses["regular"] = "directed join at '" + G.object_name(a) + "' differs from the ring join";
                break;
            }
        }
    }

    r.rootoid = is_rootoid(P).ok;
    std::sort(r.atomic_morphisms.begin(), r.atomic_morphisms.end());
    std::sort(r.simple_morphisms.begin(), r.simple_morphisms.end());
    return r;
}

RootoidVerdict is_rootoid(const Protorootoid& P, bool exhaustive_jop) {
    const Groupoid& G = P.groupoid();
    auto fr = is_faithful(P);
    if (!fr.faithful) {
        return {false, "not faithful: N(" + mor_name(P, fr.witness->first) + ") = N(" +
                           mor_name(P, fr.witness->second) + ")"};
    }
    for (int a = 0; a < G.num_objects(); ++a) {
        WeakOrder wo(P, a);
        for (int i = 0; i < wo.size(); ++i)
            for (int j = i + 1; j < wo.size(); ++j)
                if (wo.meet(i, j) < 0)
                    return {false, "no meet of " + wo.elem(i).to_string() + " and " + wo.elem(j).to_string() +
                                       " at object '" + G.object_name(a) + "'"};
        // Binary JOP.
        for (int i = 0; i < wo.size(); ++i)
            for (int j = i; j < wo.size(); ++j) {
                int join = wo.join(i, j);
                if (join < 0) continue;
                for (int k = 0; k < wo.size(); ++k) {
                    if (!(wo.elem(i) & wo.elem(k)).empty()) continue;
                    if (!(wo.elem(j) & wo.elem(k)).empty()) continue;
                    if (!(wo.elem(join) & wo.elem(k)).empty())
                        return {false, "JOP fails at '" + G.object_name(a) + "': join of " +
                                           wo.elem(i).to_string() + ", " + wo.elem(j).to_string() +
                                           " meets " + wo.elem(k).to_string()};
                }
            }
        if (exhaustive_jop && wo.size() <= 20) {
            const unsigned n = static_cast<unsigned>(wo.size());
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> xs;
                for (unsigned i = 0; i < n; ++i)
                    if (mask & (1u << i)) xs.push_back(static_cast<int>(i));
                int join = wo.join_all(xs);
                if (join < 0) continue;
                for (int k = 0; k < wo.size(); ++k) {
                    bool all_orth = true;
                    for (int i : xs)
                        if (!(wo.elem(i) & wo.elem(k)).empty()) { all_orth = false; break; }
                    if (all_orth && !(wo.elem(join) & wo.elem(k)).empty())
                        return {false, "exhaustive JOP fails at '" + G.object_name(a) + "'"};
                }
            }
        }
    }
    return {true, ""};
}

RootoidVerdict slc_check(const Protorootoid& P) {
    const Groupoid& G = P.groupoid();
    auto fr = is_faithful(P);
    if (!fr.faithful) throw std::invalid_argument("slc_check: hypothesis 'faithful' fails");
    // Finite inputs are interval finite by construction.
    for (int a = 0; a < G.num_objects(); ++a) {
        WeakOrder wo(P, a);
        auto atoms = order_atoms(wo);
        for (int ri : atoms)
            for (int si : atoms) {
                // Bounded above?
                bool bounded = false;
                for (int u = 0; u < wo.size(); ++u)
                    if (wo.leq(ri, u) && wo.leq(si, u)) { bounded = true; break; }
                if (!bounded) continue;
                for (int gi = 0; gi < wo.size(); ++gi) {
                    if (!(wo.elem(ri) & wo.elem(gi)).empty()) continue;
                    if (!(wo.elem(si) & wo.elem(gi)).empty()) continue;
                    int join = wo.join(ri, si);
                    if (join < 0)
                        return {false, "SLC: join of atoms " + wo.elem(ri).to_string() + ", " +
                                           wo.elem(si).to_string() + " missing at '" + G.object_name(a) + "'"};
                    if (!(wo.elem(join) & wo.elem(gi)).empty())
                        return {false, "SLC: join of " + wo.elem(ri).to_string() + ", " +
                                           wo.elem(si).to_string() + " meets " + wo.elem(gi).to_string() +
                                           " at '" + G.object_name(a) + "'"};
                }
            }
    }
    return {true, ""};
}

Protorootoid abridge(const Protorootoid& P) {
    const Groupoid& G = P.groupoid();
    std::vector<GroundPtr> grounds;
    std::vector<std::vector<int>> act;
    std::vector<std::optional<SubringPartition>> subrings;
    for (int a = 0; a < G.num_objects(); ++a) {
        grounds.push_back(P.rep().ground(a));
        WeakOrder wo(P, a);
        subrings.emplace_back(generated_subring(P.rep().ground(a), wo.elems()));
    }
    for (int g = 0; g < G.num_morphisms(); ++g) act.push_back(P.rep().act_perm(g));
    return Protorootoid(G, PowerSetRep(std::move(grounds), std::move(act), std::move(subrings)),
                        P.cocycle());
}

LengthReports length_reports(const Protorootoid& P, int expression_samples, unsigned rng_seed) {
    const Groupoid& G = P.groupoid();
    PropertyReport rep = classify(P);
    LengthReports out;
    if (G.num_morphisms() == 0) return out;

    std::mt19937 rng(rng_seed);
    std::vector<std::vector<int>> with_cod(static_cast<size_t>(G.num_objects()));
    for (int g = 0; g < G.num_morphisms(); ++g) with_cod[static_cast<size_t>(G.cod(g))].push_back(g);

    for (int t = 0; t < expression_samples; ++t) {
        Expression e;
        int first = static_cast<int>(rng() % static_cast<unsigned>(G.num_morphisms()));
        e.mors.push_back(first);
        int n = 1 + static_cast<int>(rng() % 3);
        while (static_cast<int>(e.mors.size()) < n) {
            const auto& cands = with_cod[static_cast<size_t>(G.dom(e.mors.back()))];
            e.mors.push_back(cands[static_cast<size_t>(rng() % cands.size())]);
        }
        int value = e.value(G, G.cod(e.mors[0]));
        int sum = 0;
        for (int g : e.mors) sum += rep.l_N[static_cast<size_t>(g)];
        bool additive = rep.l_N[static_cast<size_t>(value)] == sum;
        if (is_compatible(P, e) != additive) out.compat_matches_lN = false;
        if (rep.principal) {
            int sumS = 0;
            for (int g : e.mors) sumS += rep.l_S[static_cast<size_t>(g)];
            if (is_compatible(P, e) != (rep.l_S[static_cast<size_t>(value)] == sumS))
                out.compat_matches_lS = false;
        }
        ++out.expressions_checked;
    }

    for (int a = 0; a < G.num_objects(); ++a) {
        auto star = G.star(a);
        for (int x : star)
            for (int y : star) {
                int z = G.compose(G.inv(x), y);
                bool leq = P.N(x).subset_of(P.N(y));
                if (leq != (rep.l_N[static_cast<size_t>(y)] ==
                            rep.l_N[static_cast<size_t>(x)] + rep.l_N[static_cast<size_t>(z)]))
                    out.order_matches_lN = false;
                if (rep.principal &&
                    leq != (rep.l_S[static_cast<size_t>(y)] ==
                            rep.l_S[static_cast<size_t>(x)] + rep.l_S[static_cast<size_t>(z)]))
                    out.order_matches_lS = false;
                ++out.pairs_checked;
            }
    }
    return out;
}

int pseudocomplement(const Protorootoid& P, int object, int x_morphism) {
    PropertyReport rep = classify(P);
    if (!rep.principal || !rep.complete || !rep.rootoid)
        throw std::invalid_argument("pseudocomplement: requires a principal complete rootoid");
    WeakOrder wo(P, object);
    int xi = wo.index_of_morphism(x_morphism);
    if (xi < 0) throw std::invalid_argument("pseudocomplement: morphism not in the star at the object");
    std::vector<int> orth;
    for (int y = 0; y < wo.size(); ++y)
        if (wo.meet(y, xi) == wo.min_index()) orth.push_back(y);
    int join = wo.join_all(orth);
    if (join < 0) throw std::logic_error("pseudocomplement: join of the orthogonal family is missing");
    for (int y = 0; y < wo.size(); ++y) {
        bool lhs = wo.meet(y, xi) == wo.min_index();
        bool rhs = wo.leq(y, join);
        if (lhs != rhs) throw std::logic_error("pseudocomplement: defining equivalence fails");
    }
    return wo.witnesses(join).front();
}

}  // namespace rootoidlab
