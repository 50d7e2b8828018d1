#include "rootoidlab/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace rootoidlab {

namespace {
constexpr int kMaxTableMorphisms = 10000;  // dense composition table cap
}

int Groupoid::Builder::add_object(std::string name) {
    objects_.push_back(std::move(name));
    identity_.push_back(-1);
    return static_cast<int>(objects_.size()) - 1;
}

int Groupoid::Builder::add_morphism(std::string name, int dom, int cod) {
    mor_.push_back(Morphism{std::move(name), dom, cod, -1});
    return static_cast<int>(mor_.size()) - 1;
}

void Groupoid::Builder::set_identity(int object, int mor) { identity_.at(static_cast<size_t>(object)) = mor; }

void Groupoid::Builder::set_inverse(int g, int ginv) {
    mor_.at(static_cast<size_t>(g)).inv = ginv;
    mor_.at(static_cast<size_t>(ginv)).inv = g;
}

void Groupoid::Builder::set_compose(int g, int h, int gh) {
    // All morphisms must be added before the first set_compose call.
    if (comp_.size() != mor_.size()) comp_.assign(mor_.size(), std::vector<int>(mor_.size(), -1));
    comp_[static_cast<size_t>(g)][static_cast<size_t>(h)] = gh;
}

Groupoid Groupoid::Builder::build() && {
    const int nm = static_cast<int>(mor_.size());
    if (nm > kMaxTableMorphisms)
        throw std::invalid_argument("groupoid too large for dense composition table (" +
                                    std::to_string(nm) + " morphisms)");
    Groupoid G;
    G.objects_ = std::move(objects_);
    G.mor_ = std::move(mor_);
    G.identity_ = std::move(identity_);
    G.comp_.assign(static_cast<size_t>(nm) * static_cast<size_t>(nm), -1);
    for (size_t g = 0; g < comp_.size(); ++g)
        for (size_t h = 0; h < comp_[g].size(); ++h)
            G.comp_[g * static_cast<size_t>(nm) + h] = comp_[g][h];

    // Structural validation: names, identities, inverses, composition laws.
    std::set<std::string> names;
    for (const auto& m : G.mor_) {
        if (!names.insert(m.name).second)
            throw std::invalid_argument("groupoid: duplicate morphism name '" + m.name + "'");
        if (m.dom < 0 || m.dom >= G.num_objects() || m.cod < 0 || m.cod >= G.num_objects())
            throw std::invalid_argument("groupoid: morphism '" + m.name + "' has bad endpoints");
        if (m.inv < 0) throw std::invalid_argument("groupoid: morphism '" + m.name + "' lacks an inverse");
    }
    for (int a = 0; a < G.num_objects(); ++a) {
        int e = G.identity_[static_cast<size_t>(a)];
        if (e < 0 || G.dom(e) != a || G.cod(e) != a)
            throw std::invalid_argument("groupoid: object '" + G.objects_[static_cast<size_t>(a)] +
                                        "' lacks an identity morphism");
    }
    for (int g = 0; g < nm; ++g) {
        for (int h = 0; h < nm; ++h) {
            int gh = G.comp_[static_cast<size_t>(g) * static_cast<size_t>(nm) + static_cast<size_t>(h)];
            bool should = G.dom(g) == G.cod(h);
            if (should != (gh >= 0))
                throw std::invalid_argument("groupoid: composition defined iff dom(g)=cod(h) violated at (" +
                                            G.mor_[static_cast<size_t>(g)].name + "," +
                                            G.mor_[static_cast<size_t>(h)].name + ")");
            if (gh >= 0 && (G.dom(gh) != G.dom(h) || G.cod(gh) != G.cod(g)))
                throw std::invalid_argument("groupoid: composite endpoints wrong");
        }
    }
    for (int g = 0; g < nm; ++g) {
        if (G.compose(G.identity_[static_cast<size_t>(G.cod(g))], g) != g ||
            G.compose(g, G.identity_[static_cast<size_t>(G.dom(g))]) != g)
            throw std::invalid_argument("groupoid: identity law fails at '" + G.mor_[static_cast<size_t>(g)].name + "'");
        if (G.compose(G.inv(g), g) != G.identity_[static_cast<size_t>(G.dom(g))] ||
            G.compose(g, G.inv(g)) != G.identity_[static_cast<size_t>(G.cod(g))])
            throw std::invalid_argument("groupoid: inverse law fails at '" + G.mor_[static_cast<size_t>(g)].name + "'");
    }
    std::vector<std::vector<int>> with_cod(static_cast<size_t>(G.num_objects()));
    for (int g = 0; g < nm; ++g) with_cod[static_cast<size_t>(G.cod(g))].push_back(g);
    for (int g = 0; g < nm; ++g)
        for (int h : with_cod[static_cast<size_t>(G.dom(g))]) {
            int gh = G.compose(g, h);
            for (int k : with_cod[static_cast<size_t>(G.dom(h))])
                if (G.compose(gh, k) != G.compose(g, G.compose(h, k)))
                    throw std::invalid_argument("groupoid: associativity fails");
        }
    return G;
}

int Groupoid::object_index(const std::string& name) const {
    for (int a = 0; a < num_objects(); ++a)
        if (objects_[static_cast<size_t>(a)] == name) return a;
    return -1;
}

int Groupoid::morphism_index(const std::string& name) const {
    for (int g = 0; g < num_morphisms(); ++g)
        if (mor_[static_cast<size_t>(g)].name == name) return g;
    return -1;
}

int Groupoid::compose(int g, int h) const {
    int gh = comp_[static_cast<size_t>(g) * static_cast<size_t>(mor_.size()) + static_cast<size_t>(h)];
    if (gh < 0)
        throw std::invalid_argument("compose: dom(" + mor_[static_cast<size_t>(g)].name + ") != cod(" +
                                    mor_[static_cast<size_t>(h)].name + ")");
    return gh;
}

std::vector<int> Groupoid::star(int a) const {
    if (a < 0 || a >= num_objects()) throw std::invalid_argument("star: unknown object");
    std::vector<int> out;
    for (int g = 0; g < num_morphisms(); ++g)
        if (cod(g) == a) out.push_back(g);
    return out;
}

std::vector<int> Groupoid::hom(int a, int b) const {
    std::vector<int> out;
    for (int g = 0; g < num_morphisms(); ++g)
        if (cod(g) == a && dom(g) == b) out.push_back(g);
    return out;
}

Components components(const Groupoid& G) {
    Components c;
    c.object_component.assign(static_cast<size_t>(G.num_objects()), -1);
    c.morphism_component.assign(static_cast<size_t>(G.num_morphisms()), -1);
    for (int a = 0; a < G.num_objects(); ++a) {
        if (c.object_component[static_cast<size_t>(a)] >= 0) continue;
        int id = c.count++;
        std::deque<int> queue{a};
        c.object_component[static_cast<size_t>(a)] = id;
        while (!queue.empty()) {
            int b = queue.front();
            queue.pop_front();
            for (int g = 0; g < G.num_morphisms(); ++g) {
                if (G.dom(g) != b && G.cod(g) != b) continue;
                c.morphism_component[static_cast<size_t>(g)] = id;
                for (int other : {G.dom(g), G.cod(g)}) {
                    if (c.object_component[static_cast<size_t>(other)] < 0) {
                        c.object_component[static_cast<size_t>(other)] = id;
                        queue.push_back(other);
                    }
                }
            }
        }
    }
    return c;
}

bool is_connected(const Groupoid& G) {
    if (G.num_objects() == 0) return false;  // the empty groupoid is not connected
    for (int a = 0; a < G.num_objects(); ++a)
        for (int b = 0; b < G.num_objects(); ++b)
            if (G.hom(a, b).empty()) return false;
    return true;
}

bool is_simply_connected(const Groupoid& G) {
    for (int a = 0; a < G.num_objects(); ++a)
        for (int b = 0; b < G.num_objects(); ++b)
            if (G.hom(a, b).size() > 1) return false;
    return true;  // the empty groupoid is simply connected
}

GeneratedSubgroupoid generated_subgroupoid(const Groupoid& G, const std::vector<int>& gens) {
    GeneratedSubgroupoid out;
    out.length.assign(static_cast<size_t>(G.num_morphisms()), -1);

    // Closed generating set S ∪ S*; BFS from the identities measures l_S.
    std::vector<int> alphabet;
    for (int s : gens) {
        alphabet.push_back(s);
        alphabet.push_back(G.inv(s));
    }
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    std::deque<int> queue;
    for (int a = 0; a < G.num_objects(); ++a) {
        int e = G.identity(a);
        out.length[static_cast<size_t>(e)] = 0;
        queue.push_back(e);
    }
    while (!queue.empty()) {
        int g = queue.front();
        queue.pop_front();
        for (int s : alphabet) {
            if (!G.composable(s, g)) continue;
            int sg = G.compose(s, g);
            if (out.length[static_cast<size_t>(sg)] < 0) {
                out.length[static_cast<size_t>(sg)] = out.length[static_cast<size_t>(g)] + 1;
                queue.push_back(sg);
            }
        }
    }
    for (int g = 0; g < G.num_morphisms(); ++g)
        if (out.length[static_cast<size_t>(g)] >= 0) out.morphisms.push_back(g);
    out.generates_all = static_cast<int>(out.morphisms.size()) == G.num_morphisms();
    return out;
}

SignCharacter sign_character(const Groupoid& G, const std::vector<int>& gens) {
    auto sub = generated_subgroupoid(G, gens);
    if (!sub.generates_all) throw std::invalid_argument("sign_character: S does not generate G");
    SignCharacter sc;
    sc.value.resize(static_cast<size_t>(G.num_morphisms()));
    for (int g = 0; g < G.num_morphisms(); ++g)
        sc.value[static_cast<size_t>(g)] = (sub.length[static_cast<size_t>(g)] % 2 == 0) ? +1 : -1;
    for (int g = 0; g < G.num_morphisms(); ++g)
        for (int h = 0; h < G.num_morphisms(); ++h) {
            if (!G.composable(g, h)) continue;
            int gh = G.compose(g, h);
            if (sc.value[static_cast<size_t>(gh)] !=
                sc.value[static_cast<size_t>(g)] * sc.value[static_cast<size_t>(h)]) {
                sc.witness = {g, h};
                sc.ok = false;
                return sc;
            }
        }
    sc.ok = true;
    return sc;
}

bool Expression::composable(const Groupoid& G) const {
    for (size_t i = 0; i + 1 < mors.size(); ++i)
        if (G.cod(mors[i + 1]) != G.dom(mors[i])) return false;
    return true;
}

int Expression::value(const Groupoid& G, int anchor_object) const {
    if (mors.empty()) return G.identity(anchor_object);
    int v = mors[0];
    for (size_t i = 1; i < mors.size(); ++i) v = G.compose(v, mors[i]);
    return v;
}

UniversalCover universal_cover(const Groupoid& G) {
    Components comp = components(G);

    // Base object per component: lexicographically least object name.
    std::vector<int> base(static_cast<size_t>(comp.count), -1);
    for (int a = 0; a < G.num_objects(); ++a) {
        int c = comp.object_component[static_cast<size_t>(a)];
        if (base[static_cast<size_t>(c)] < 0 ||
            G.object_name(a) < G.object_name(base[static_cast<size_t>(c)]))
            base[static_cast<size_t>(c)] = a;
    }

    // Objects of the cover over component c: the slice objects f: b -> base(c).
    UniversalCover uc;
    Groupoid::Builder b;
    std::vector<int> slice;  // cover object -> G morphism
    std::vector<int> slice_index(static_cast<size_t>(G.num_morphisms()), -1);
    for (int f = 0; f < G.num_morphisms(); ++f) {
        int c = comp.morphism_component[static_cast<size_t>(f)];
        if (G.cod(f) != base[static_cast<size_t>(c)]) continue;
        int idx = b.add_object("[" + G.morphism(f).name + "]");
        slice.push_back(f);
        slice_index[static_cast<size_t>(f)] = idx;
        uc.object_map.push_back(G.dom(f));
        uc.object_fiber.push_back(f);
    }

    // A morphism f'' -> f' in the slice is the unique F with f' F = f''.
    struct Edge { int from, to, F; };
    std::vector<Edge> edges;
    const int ns = static_cast<int>(slice.size());
    std::vector<int> edge_at(static_cast<size_t>(ns) * static_cast<size_t>(ns), -1);
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j) {
            int fi = slice[static_cast<size_t>(i)], fj = slice[static_cast<size_t>(j)];
            if (G.cod(fi) != G.cod(fj)) continue;  // different components
            int F = G.compose(G.inv(fj), fi);      // F: dom(fi) -> dom(fj), fj F = fi
            int m = b.add_morphism("[" + G.morphism(fj).name + "|" + G.morphism(F).name + "]", i, j);
            edge_at[static_cast<size_t>(i) * static_cast<size_t>(ns) + static_cast<size_t>(j)] = m;
            edges.push_back({i, j, F});
            uc.morphism_map.push_back(F);
            if (i == j) b.set_identity(i, m);
        }
    auto at = [&](int from, int to) {
        return edge_at[static_cast<size_t>(from) * static_cast<size_t>(ns) + static_cast<size_t>(to)];
    };
    for (size_t e = 0; e < edges.size(); ++e) b.set_inverse(static_cast<int>(e), at(edges[e].to, edges[e].from));
    for (size_t e1 = 0; e1 < edges.size(); ++e1)
        for (size_t e2 = 0; e2 < edges.size(); ++e2)
            if (edges[e1].from == edges[e2].to)
                b.set_compose(static_cast<int>(e1), static_cast<int>(e2), at(edges[e2].from, edges[e1].to));

    uc.cover = std::move(b).build();
    return uc;
}

Groupoid group_as_groupoid(const std::string& object_name, const std::vector<std::string>& element_names,
                           const std::vector<std::vector<int>>& mult, int identity_index) {
    Groupoid::Builder b;
    b.add_object(object_name);
    const int n = static_cast<int>(element_names.size());
    for (int i = 0; i < n; ++i) b.add_morphism(element_names[static_cast<size_t>(i)], 0, 0);
    b.set_identity(0, identity_index);
    for (int i = 0; i < n; ++i) {
        int invi = -1;
        for (int j = 0; j < n; ++j)
            if (mult[static_cast<size_t>(i)][static_cast<size_t>(j)] == identity_index) invi = j;
        if (invi < 0) throw std::invalid_argument("group_as_groupoid: element without inverse");
        b.set_inverse(i, invi);
        for (int j = 0; j < n; ++j) b.set_compose(i, j, mult[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    }
    return std::move(b).build();
}

Groupoid simply_connected_groupoid(const std::vector<std::string>& objects,
                                   const std::function<std::string(int, int)>& name) {
    Groupoid::Builder b;
    const int n = static_cast<int>(objects.size());
    for (const auto& o : objects) b.add_object(o);
    // morphism (a,b): b -> a, index a*n + b
    for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb) b.add_morphism(name(a, bb), bb, a);
    for (int a = 0; a < n; ++a) b.set_identity(a, a * n + a);
    for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb) {
            b.set_inverse(a * n + bb, bb * n + a);
            for (int c = 0; c < n; ++c) b.set_compose(a * n + bb, bb * n + c, a * n + c);
        }
    return std::move(b).build();
}

}  // namespace rootoidlab
