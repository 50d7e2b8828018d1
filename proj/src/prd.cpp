#include "rootoidlab/prd.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rootoidlab {

PowerSetRep::PowerSetRep(std::vector<GroundPtr> grounds, std::vector<std::vector<int>> act,
                         std::vector<std::optional<SubringPartition>> subrings)
    : grounds_(std::move(grounds)), act_(std::move(act)), subrings_(std::move(subrings)) {
    if (subrings_.empty()) subrings_.resize(grounds_.size());
}

bool PowerSetRep::has_subring(int object) const {
    return subrings_.at(static_cast<size_t>(object)).has_value();
}

const SubringPartition& PowerSetRep::subring(int object) const {
    return *subrings_.at(static_cast<size_t>(object));
}

SetElem PowerSetRep::act(const Groupoid& G, int g, const SetElem& x) const {
    const GroundPtr& src = ground(G.dom(g));
    const GroundPtr& dst = ground(G.cod(g));
    if (!x.ground()->same_as(*src))
        throw RingMismatch("act: element over '" + x.ground()->id() + "' but dom(" +
                           G.morphism(g).name + ") carries ground '" + src->id() + "'");
    const auto& perm = act_perm(g);
    SetElem r(dst);
    for (int i = 0; i < src->size(); ++i)
        if (x.has(i)) r.set(perm[static_cast<size_t>(i)]);
    return r;
}

bool PowerSetRep::ring_contains(int object, const SetElem& x) const {
    if (!x.ground()->same_as(*ground(object))) return false;
    return has_subring(object) ? subring(object).contains(x) : true;
}

int PowerSetRep::ring_rank(int object, const SetElem& x) const {
    return has_subring(object) ? subring(object).rank_of(x) : x.rank();
}

std::vector<SetElem> PowerSetRep::ring_atoms(int object) const {
    if (has_subring(object)) return subring(object).blocks;
    std::vector<SetElem> atoms;
    for (int i = 0; i < ground(object)->size(); ++i) atoms.push_back(SetElem(ground(object)).set(i));
    return atoms;
}

SetElem PowerSetRep::ring_identity(int object) const {
    return has_subring(object) ? subring(object).support : SetElem::full(ground(object));
}

void PowerSetRep::validate(const Groupoid& G) const {
    if (static_cast<int>(grounds_.size()) != G.num_objects() ||
        static_cast<int>(act_.size()) != G.num_morphisms())
        throw std::invalid_argument("representation: size mismatch with groupoid");
    for (int g = 0; g < G.num_morphisms(); ++g) {
        const auto& perm = act_perm(g);
        int ns = ground(G.dom(g))->size(), nd = ground(G.cod(g))->size();
        if (static_cast<int>(perm.size()) != ns || ns != nd)
            throw std::invalid_argument("representation: '" + G.morphism(g).name +
                                        "' does not act by a bijection of equal grounds");
        std::vector<bool> hit(static_cast<size_t>(nd), false);
        for (int v : perm) {
            if (v < 0 || v >= nd || hit[static_cast<size_t>(v)])
                throw std::invalid_argument("representation: '" + G.morphism(g).name + "' action not bijective");
            hit[static_cast<size_t>(v)] = true;
        }
    }
    for (int a = 0; a < G.num_objects(); ++a) {
        const auto& perm = act_perm(G.identity(a));
        for (size_t i = 0; i < perm.size(); ++i)
            if (perm[i] != static_cast<int>(i))
                throw std::invalid_argument("representation: identity morphism acts nontrivially");
        if (has_subring(a)) {
            const auto& part = subring(a);
            SetElem u(ground(a));
            for (const auto& b : part.blocks) {
                if (b.empty()) throw std::invalid_argument("representation: empty subring block");
                if (!(u & b).empty()) throw std::invalid_argument("representation: overlapping subring blocks");
                u = u.unite(b);
            }
            if (u != part.support) throw std::invalid_argument("representation: subring blocks do not tile support");
        }
    }
    for (int g = 0; g < G.num_morphisms(); ++g)
        for (int h = 0; h < G.num_morphisms(); ++h) {
            if (!G.composable(g, h)) continue;
            const auto& pg = act_perm(g);
            const auto& ph = act_perm(h);
            const auto& pgh = act_perm(G.compose(g, h));
            for (size_t i = 0; i < ph.size(); ++i)
                if (pg[static_cast<size_t>(ph[i])] != pgh[i])
                    throw std::invalid_argument("representation: action not functorial at (" +
                                                G.morphism(g).name + "," + G.morphism(h).name + ")");
        }
    // When subrings are present the action must carry blocks onto blocks.
    for (int g = 0; g < G.num_morphisms(); ++g) {
        int a = G.dom(g), b = G.cod(g);
        if (!has_subring(a) && !has_subring(b)) continue;
        if (has_subring(a) != has_subring(b))
            throw std::invalid_argument("representation: subring present at only one end of '" +
                                        G.morphism(g).name + "'");
        for (const auto& blk : subring(a).blocks) {
            SetElem img = act(G, g, blk);
            bool found = false;
            for (const auto& cblk : subring(b).blocks)
                if (img == cblk) { found = true; break; }
            if (!found)
                throw std::invalid_argument("representation: '" + G.morphism(g).name +
                                            "' does not map subring blocks to blocks");
        }
    }
}

Protorootoid::Protorootoid(Groupoid G, PowerSetRep rep, Cocycle N)
    : G_(std::move(G)), rep_(std::move(rep)), N_(std::move(N)) {
    rep_.validate(G_);
    if (static_cast<int>(N_.value.size()) != G_.num_morphisms())
        throw std::invalid_argument("cocycle: one value per morphism required");
    for (int g = 0; g < G_.num_morphisms(); ++g) {
        const SetElem& v = N_.value[static_cast<size_t>(g)];
        if (!v.ground()->same_as(*rep_.ground(G_.cod(g))))
            throw std::invalid_argument("cocycle: value of '" + G_.morphism(g).name +
                                        "' lies over the wrong ground");
        if (!rep_.ring_contains(G_.cod(g), v))
            throw std::invalid_argument("cocycle: value of '" + G_.morphism(g).name +
                                        "' is outside the subring at its codomain");
    }
    std::vector<std::vector<int>> with_cod(static_cast<size_t>(G_.num_objects()));
    for (int g = 0; g < G_.num_morphisms(); ++g) with_cod[static_cast<size_t>(G_.cod(g))].push_back(g);
    for (int g = 0; g < G_.num_morphisms(); ++g)
        for (int h : with_cod[static_cast<size_t>(G_.dom(g))]) {
            SetElem lhs = N_.value[static_cast<size_t>(G_.compose(g, h))];
            SetElem rhs = N_.value[static_cast<size_t>(g)] + rep_.act(G_, g, N_.value[static_cast<size_t>(h)]);
            if (lhs != rhs)
                throw std::invalid_argument("cocycle condition fails at (" + G_.morphism(g).name + "," +
                                            G_.morphism(h).name + "): N(gh)=" + lhs.to_string() +
                                            " but N(g)+gN(h)=" + rhs.to_string());
        }
}

CocycleCheck check_cocycle(Groupoid G, PowerSetRep rep, Cocycle N) {
    CocycleCheck out;
    rep.validate(G);
    if (static_cast<int>(N.value.size()) != G.num_morphisms()) {
        out.violation = CocycleViolation{-1, -1, "cocycle: one value per morphism required"};
        return out;
    }
    std::vector<std::vector<int>> with_cod(static_cast<size_t>(G.num_objects()));
    for (int g = 0; g < G.num_morphisms(); ++g) with_cod[static_cast<size_t>(G.cod(g))].push_back(g);
    for (int g = 0; g < G.num_morphisms(); ++g) {
        const SetElem& v = N.value[static_cast<size_t>(g)];
        if (!v.ground()->same_as(*rep.ground(G.cod(g))) || !rep.ring_contains(G.cod(g), v)) {
            out.violation = CocycleViolation{g, -1, "value of '" + G.morphism(g).name +
                                                        "' is not an element of the ring at its codomain"};
            return out;
        }
    }
    for (int g = 0; g < G.num_morphisms(); ++g)
        for (int h : with_cod[static_cast<size_t>(G.dom(g))]) {
            SetElem lhs = N.value[static_cast<size_t>(G.compose(g, h))];
            SetElem rhs = N.value[static_cast<size_t>(g)] + rep.act(G, g, N.value[static_cast<size_t>(h)]);
            if (lhs != rhs) {
                out.violation =
                    CocycleViolation{g, h, "N(gh)=" + lhs.to_string() + " differs from N(g)+gN(h)=" + rhs.to_string()};
                return out;
            }
        }
    out.prd.emplace(std::move(G), std::move(rep), std::move(N));
    return out;
}

Cocycle coboundary(const Groupoid& G, const PowerSetRep& rep, const std::vector<SetElem>& family) {
    if (static_cast<int>(family.size()) != G.num_objects())
        throw std::invalid_argument("coboundary: one ring element per object required");
    Cocycle N;
    for (int g = 0; g < G.num_morphisms(); ++g)
        N.value.push_back(family[static_cast<size_t>(G.cod(g))] +
                          rep.act(G, g, family[static_cast<size_t>(G.dom(g))]));
    return N;
}

Trivialization trivialize(const Protorootoid& P) {
    const Groupoid& G = P.groupoid();
    Trivialization out;
    Components comp = components(G);
    // Simple connectivity per component: exactly one morphism between objects.
    for (int a = 0; a < G.num_objects(); ++a)
        for (int b = 0; b < G.num_objects(); ++b) {
            if (comp.object_component[static_cast<size_t>(a)] != comp.object_component[static_cast<size_t>(b)])
                continue;
            if (G.hom(a, b).size() != 1) {
                out.bad_component_object = a;
                return out;
            }
        }
    std::vector<int> base(static_cast<size_t>(comp.count), -1);
    for (int a = 0; a < G.num_objects(); ++a) {
        int c = comp.object_component[static_cast<size_t>(a)];
        if (base[static_cast<size_t>(c)] < 0 || G.object_name(a) < G.object_name(base[static_cast<size_t>(c)]))
            base[static_cast<size_t>(c)] = a;
    }
    for (int a = 0; a < G.num_objects(); ++a) {
        int b0 = base[static_cast<size_t>(comp.object_component[static_cast<size_t>(a)])];
        int u = G.hom(b0, a)[0];  // unique a -> base
        // N(u) = x_{b0} + u(x_a) with x_{b0} = 0 forces x_a = u*(N(u)).
        out.family.push_back(P.rep().act(G, G.inv(u), P.N(u)));
    }
    Cocycle check = coboundary(G, P.rep(), out.family);
    for (int g = 0; g < G.num_morphisms(); ++g)
        if (check.value[static_cast<size_t>(g)] != P.N(g))
            throw std::logic_error("trivialize: reconstructed family fails to reproduce the cocycle");
    out.ok = true;
    return out;
}

WeakOrder::WeakOrder(const Protorootoid& P, int object) : object_(object) {
    const Groupoid& G = P.groupoid();
    if (object < 0 || object >= G.num_objects()) throw std::invalid_argument("weak_order: unknown object");
    std::map<std::vector<std::string>, int> seen;  // keyed by member list
    for (int g : G.star(object)) {
        const SetElem& v = P.N(g);
        auto key = v.members();
        auto it = seen.find(key);
        if (it == seen.end()) {
            it = seen.emplace(key, static_cast<int>(elems_.size())).first;
            elems_.push_back(v);
            witnesses_.emplace_back();
        }
        witnesses_[static_cast<size_t>(it->second)].push_back(g);
    }
    // Canonical order: rank then bits; the minimum (empty) lands at index 0.
    std::vector<int> order(elems_.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return elems_[static_cast<size_t>(i)].before(elems_[static_cast<size_t>(j)]);
    });
    std::vector<SetElem> se;
    std::vector<std::vector<int>> sw;
    for (int i : order) {
        se.push_back(elems_[static_cast<size_t>(i)]);
        sw.push_back(witnesses_[static_cast<size_t>(i)]);
    }
    elems_ = std::move(se);
    witnesses_ = std::move(sw);

    const size_t n = elems_.size();
    leq_.assign(n, boost::dynamic_bitset<>(n));
    down_.assign(n, boost::dynamic_bitset<>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (elems_[i].subset_of(elems_[j])) {
                leq_[i].set(j);
                down_[j].set(i);
            }
}

int WeakOrder::index_of(const SetElem& x) const {
    for (size_t i = 0; i < elems_.size(); ++i)
        if (elems_[i] == x) return static_cast<int>(i);
    return -1;
}

int WeakOrder::index_of_morphism(int g) const {
    for (size_t i = 0; i < witnesses_.size(); ++i)
        for (int w : witnesses_[i])
            if (w == g) return static_cast<int>(i);
    return -1;
}

int WeakOrder::max_index() const {
    for (size_t i = 0; i < elems_.size(); ++i)
        if (leq_[i].count() == 1 && down_[i].count() == elems_.size()) return static_cast<int>(i);
    return -1;
}

namespace {
// Top of a down-closed subset D (as bitset): the k in D with D subset of down(k).
int top_of(const std::vector<boost::dynamic_bitset<>>& down, const boost::dynamic_bitset<>& D) {
    for (size_t k = D.find_first(); k != boost::dynamic_bitset<>::npos; k = D.find_next(k))
        if (D.is_subset_of(down[k])) return static_cast<int>(k);
    return -1;
}
}  // namespace

int WeakOrder::meet(int i, int j) const {
    boost::dynamic_bitset<> D = down_[static_cast<size_t>(i)] & down_[static_cast<size_t>(j)];
    return top_of(down_, D);
}

int WeakOrder::join(int i, int j) const {
    boost::dynamic_bitset<> U = leq_[static_cast<size_t>(i)] & leq_[static_cast<size_t>(j)];
    // bottom of an up-closed set, dually
    for (size_t k = U.find_first(); k != boost::dynamic_bitset<>::npos; k = U.find_next(k))
        if (U.is_subset_of(leq_[k])) return static_cast<int>(k);
    return -1;
}

int WeakOrder::meet_all(const std::vector<int>& xs) const {
    if (xs.empty()) throw std::invalid_argument("meet_all: empty family");
    boost::dynamic_bitset<> D = down_[static_cast<size_t>(xs[0])];
    for (size_t i = 1; i < xs.size(); ++i) D &= down_[static_cast<size_t>(xs[i])];
    return top_of(down_, D);
}

int WeakOrder::join_all(const std::vector<int>& xs) const {
    if (xs.empty()) return min_index();
    boost::dynamic_bitset<> U = leq_[static_cast<size_t>(xs[0])];
    for (size_t i = 1; i < xs.size(); ++i) U &= leq_[static_cast<size_t>(xs[i])];
    for (size_t k = U.find_first(); k != boost::dynamic_bitset<>::npos; k = U.find_next(k))
        if (U.is_subset_of(leq_[k])) return static_cast<int>(k);
    return -1;
}

bool WeakOrder::has_all_pairwise_meets() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (meet(i, j) < 0) return false;
    return true;
}

std::vector<std::pair<int, int>> WeakOrder::hasse() const {
    std::vector<std::pair<int, int>> covers;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq(i, j)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != i && k != j && leq(i, k) && leq(k, j)) cover = false;
            if (cover) covers.emplace_back(i, j);
        }
    return covers;
}

WeakOrder weak_order(const Protorootoid& P, int object) { return WeakOrder(P, object); }

FaithfulnessReport is_faithful(const Protorootoid& P) {
    const Groupoid& G = P.groupoid();
    FaithfulnessReport out;
    for (int a = 0; a < G.num_objects(); ++a) {
        auto st = G.star(a);
        for (size_t i = 0; i < st.size(); ++i)
            for (size_t j = i + 1; j < st.size(); ++j)
                if (P.N(st[i]) == P.N(st[j])) {
                    out.witness = {st[i], st[j]};
                    return out;
                }
    }
    out.faithful = true;
    return out;
}

bool is_compatible(const Protorootoid& P, const Expression& e) {
    const Groupoid& G = P.groupoid();
    if (!e.composable(G)) throw std::invalid_argument("is_compatible: expression not composable");
    if (e.mors.size() <= 1) return true;
    // Translate each N(g_i) to the anchor and test pairwise disjointness.
    std::vector<SetElem> parts;
    std::optional<int> prefix;  // value g_1...g_{i-1}
    for (size_t i = 0; i < e.mors.size(); ++i) {
        SetElem v = P.N(e.mors[i]);
        if (prefix) v = P.rep().act(G, *prefix, v);
        parts.push_back(v);
        prefix = prefix ? G.compose(*prefix, e.mors[i]) : e.mors[i];
    }
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (!(parts[i] & parts[j]).empty()) return false;
    return true;
}

bool orthogonal(const Protorootoid& P, int g, int h) {
    const Groupoid& G = P.groupoid();
    if (G.cod(g) != G.cod(h))
        throw std::invalid_argument("orthogonal: morphisms '" + G.morphism(g).name + "' and '" +
                                    G.morphism(h).name + "' have different codomains");
    return (P.N(g) & P.N(h)).empty();
}

SetElem dot_action(const Protorootoid& P, int g, const SetElem& x) {
    return P.N(g) + P.rep().act(P.groupoid(), g, x);
}

ProtomeshTranslation translate_protomesh(const Protorootoid& P, int g) {
    const Groupoid& G = P.groupoid();
    ProtomeshTranslation out;
    out.gamma_morphism = g;
    int a = G.dom(g), b = G.cod(g);
    const SetElem& gamma = P.N(g);
    out.source.ring_ground = P.rep().ground(a);
    out.target.ring_ground = P.rep().ground(b);
    if (P.rep().has_subring(a)) out.source.subring = P.rep().subring(a);
    if (P.rep().has_subring(b)) out.target.subring = P.rep().subring(b);
    for (int x : G.star(a)) {
        SetElem lhs = P.rep().act(G, g, P.N(x));            // g(N(x))
        SetElem rhs = gamma + P.N(G.compose(g, x));          // Gamma + N(gx)
        if (lhs != rhs) return out;                          // ok stays false
        out.source.L.push_back(P.N(x));
        out.target.L.push_back(rhs);
        out.pairing.emplace_back(P.N(x), rhs);
    }
    out.ok = true;
    return out;
}

}  // namespace rootoidlab
