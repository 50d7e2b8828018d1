#include "rootoidlab/io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace rootoidlab {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

void expect_kind(const json& j, const std::string& kind) {
    if (field(j, "kind").get<std::string>() != kind)
        throw ParseError("expected kind '" + kind + "'");
}

json groupoid_body(const Groupoid& G) {
    json j;
    std::vector<std::string> objects;
    for (int a = 0; a < G.num_objects(); ++a) objects.push_back(G.object_name(a));
    std::sort(objects.begin(), objects.end());
    j["objects"] = objects;

    json ids = json::object();
    for (int a = 0; a < G.num_objects(); ++a)
        ids[G.object_name(a)] = G.morphism(G.identity(a)).name;
    j["identities"] = ids;

    std::vector<int> order(static_cast<size_t>(G.num_morphisms()));
    for (int g = 0; g < G.num_morphisms(); ++g) order[static_cast<size_t>(g)] = g;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return G.morphism(a).name < G.morphism(b).name; });
    json mors = json::array();
    for (int g : order) {
        const auto& m = G.morphism(g);
        mors.push_back(json{{"name", m.name},
                            {"dom", G.object_name(m.dom)},
                            {"cod", G.object_name(m.cod)},
                            {"inv", G.morphism(m.inv).name}});
    }
    j["morphisms"] = mors;

    std::vector<std::array<std::string, 3>> triples;
    for (int g = 0; g < G.num_morphisms(); ++g)
        for (int h = 0; h < G.num_morphisms(); ++h)
            if (G.composable(g, h))
                triples.push_back({G.morphism(g).name, G.morphism(h).name,
                                   G.morphism(G.compose(g, h)).name});
    std::sort(triples.begin(), triples.end());
    json comp = json::array();
    for (const auto& t : triples) comp.push_back(json::array({t[0], t[1], t[2]}));
    j["compose"] = comp;
    return j;
}

struct GroupoidParse {
    Groupoid G;
    std::map<std::string, int> object_index;
    std::map<std::string, int> morphism_index;
};

GroupoidParse parse_groupoid_body(const json& j) {
    GroupoidParse out;
    Groupoid::Builder b;
    for (const auto& o : field(j, "objects")) {
        std::string name = o.get<std::string>();
        if (out.object_index.count(name)) throw ParseError("duplicate object '" + name + "'");
        out.object_index[name] = b.add_object(name);
    }
    auto obj = [&](const std::string& name) {
        auto it = out.object_index.find(name);
        if (it == out.object_index.end()) throw ParseError("unknown object '" + name + "'");
        return it->second;
    };
    for (const auto& m : field(j, "morphisms")) {
        std::string name = field(m, "name").get<std::string>();
        if (out.morphism_index.count(name)) throw ParseError("duplicate morphism '" + name + "'");
        out.morphism_index[name] =
            b.add_morphism(name, obj(field(m, "dom").get<std::string>()), obj(field(m, "cod").get<std::string>()));
    }
    auto mor = [&](const std::string& name) {
        auto it = out.morphism_index.find(name);
        if (it == out.morphism_index.end()) throw ParseError("unknown morphism '" + name + "'");
        return it->second;
    };
    for (const auto& m : field(j, "morphisms"))
        b.set_inverse(mor(field(m, "name").get<std::string>()), mor(field(m, "inv").get<std::string>()));
    for (auto it = field(j, "identities").begin(); it != field(j, "identities").end(); ++it)
        b.set_identity(obj(it.key()), mor(it.value().get<std::string>()));
    for (const auto& t : field(j, "compose")) {
        if (!t.is_array() || t.size() != 3) throw ParseError("compose entries must be [g,h,gh] triples");
        b.set_compose(mor(t[0].get<std::string>()), mor(t[1].get<std::string>()), mor(t[2].get<std::string>()));
    }
    try {
        out.G = std::move(b).build();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return out;
}

std::vector<std::string> sorted_labels(const GroundPtr& g) {
    std::vector<std::string> labels = g->labels();
    std::sort(labels.begin(), labels.end());
    return labels;
}

}  // namespace

nlohmann::json groupoid_to_json(const Groupoid& G) {
    json j = groupoid_body(G);
    j["kind"] = "groupoid";
    return j;
}

Groupoid groupoid_from_json(const json& j) {
    expect_kind(j, "groupoid");
    return parse_groupoid_body(j).G;
}

nlohmann::json protorootoid_to_json(const Protorootoid& P) {
    const Groupoid& G = P.groupoid();
    json j = groupoid_body(G);
    j["kind"] = "protorootoid";

    json grounds = json::object();
    json subrings = json::object();
    bool any_subring = false;
    for (int a = 0; a < G.num_objects(); ++a) {
        grounds[G.object_name(a)] = sorted_labels(P.rep().ground(a));
        if (P.rep().has_subring(a)) {
            any_subring = true;
            json blocks = json::array();
            std::vector<std::vector<std::string>> bl;
            for (const auto& blk : P.rep().subring(a).blocks) {
                auto mem = blk.members();
                std::sort(mem.begin(), mem.end());
                bl.push_back(mem);
            }
            std::sort(bl.begin(), bl.end());
            for (const auto& b : bl) blocks.push_back(b);
            subrings[G.object_name(a)] = blocks;
        }
    }
    j["grounds"] = grounds;
    if (any_subring) j["subrings"] = subrings;

    json action = json::object();
    json cocycle = json::object();
    for (int g = 0; g < G.num_morphisms(); ++g) {
        const GroundPtr& src = P.rep().ground(G.dom(g));
        const GroundPtr& dst = P.rep().ground(G.cod(g));
        json amap = json::object();
        for (int i = 0; i < src->size(); ++i)
            amap[src->label(i)] = dst->label(P.rep().act_perm(g)[static_cast<size_t>(i)]);
        action[G.morphism(g).name] = amap;
        auto mem = P.N(g).members();
        std::sort(mem.begin(), mem.end());
        cocycle[G.morphism(g).name] = mem;
    }
    j["action"] = action;
    j["cocycle"] = cocycle;
    return j;
}

Protorootoid protorootoid_from_json(const json& j) {
    expect_kind(j, "protorootoid");
    GroupoidParse gp = parse_groupoid_body(j);
    const Groupoid& G = gp.G;

    std::vector<GroundPtr> grounds(static_cast<size_t>(G.num_objects()));
    const json& jg = field(j, "grounds");
    for (int a = 0; a < G.num_objects(); ++a) {
        auto it = jg.find(G.object_name(a));
        if (it == jg.end()) throw ParseError("missing ground for object '" + G.object_name(a) + "'");
        std::vector<std::string> labels;
        for (const auto& l : *it) labels.push_back(l.get<std::string>());
        try {
            grounds[static_cast<size_t>(a)] = make_ground("ground:" + G.object_name(a), labels);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    std::vector<std::optional<SubringPartition>> subrings(static_cast<size_t>(G.num_objects()));
    if (j.contains("subrings")) {
        for (auto it = j["subrings"].begin(); it != j["subrings"].end(); ++it) {
            auto oit = gp.object_index.find(it.key());
            if (oit == gp.object_index.end()) throw ParseError("subring for unknown object '" + it.key() + "'");
            int a = oit->second;
            SetElem support(grounds[static_cast<size_t>(a)]);
            std::vector<SetElem> blocks;
            for (const auto& blk : it.value()) {
                std::vector<std::string> mem;
                for (const auto& l : blk) mem.push_back(l.get<std::string>());
                SetElem e(grounds[static_cast<size_t>(a)], mem);
                support = support.unite(e);
                blocks.push_back(e);
            }
            std::sort(blocks.begin(), blocks.end(),
                      [](const SetElem& x, const SetElem& y) { return x.before(y); });
            subrings[static_cast<size_t>(a)] = SubringPartition{support, blocks};
        }
    }

    std::vector<std::vector<int>> act(static_cast<size_t>(G.num_morphisms()));
    const json& ja = field(j, "action");
    for (int g = 0; g < G.num_morphisms(); ++g) {
        auto it = ja.find(G.morphism(g).name);
        if (it == ja.end()) throw ParseError("missing action for morphism '" + G.morphism(g).name + "'");
        const GroundPtr& src = grounds[static_cast<size_t>(G.dom(g))];
        const GroundPtr& dst = grounds[static_cast<size_t>(G.cod(g))];
        std::vector<int> perm(static_cast<size_t>(src->size()), -1);
        for (auto e = it->begin(); e != it->end(); ++e) {
            int from = src->find(e.key());
            int to = dst->find(e.value().get<std::string>());
            if (from < 0 || to < 0)
                throw ParseError("action of '" + G.morphism(g).name + "' references unknown labels");
            perm[static_cast<size_t>(from)] = to;
        }
        for (int v : perm)
            if (v < 0) throw ParseError("action of '" + G.morphism(g).name + "' is not total");
        act[static_cast<size_t>(g)] = std::move(perm);
    }

    Cocycle N;
    const json& jn = field(j, "cocycle");
    for (int g = 0; g < G.num_morphisms(); ++g) {
        auto it = jn.find(G.morphism(g).name);
        if (it == jn.end()) throw ParseError("missing cocycle value for morphism '" + G.morphism(g).name + "'");
        std::vector<std::string> mem;
        for (const auto& l : *it) mem.push_back(l.get<std::string>());
        try {
            N.value.emplace_back(grounds[static_cast<size_t>(G.cod(g))], mem);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    try {
        return Protorootoid(gp.G, PowerSetRep(std::move(grounds), std::move(act), std::move(subrings)),
                            std::move(N));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json signed_set_to_json(const SignedGroupoidSet& R) {
    const Groupoid& G = R.groupoid();
    json j = groupoid_body(G);
    j["kind"] = "signed";
    json roots = json::object();
    for (int a = 0; a < G.num_objects(); ++a) {
        std::vector<std::pair<std::string, std::string>> pairs;  // positive, negative
        for (int i = 0; i < R.roots(a)->size(); ++i)
            if (R.positive(a).has(i))
                pairs.emplace_back(R.roots(a)->label(i),
                                   R.roots(a)->label(R.neg(a)[static_cast<size_t>(i)]));
        std::sort(pairs.begin(), pairs.end());
        json pos = json::array(), negs = json::array();
        for (const auto& [p, n] : pairs) {
            pos.push_back(p);
            negs.push_back(n);
        }
        roots[G.object_name(a)] = json{{"positive", pos}, {"negative", negs}};
    }
    j["roots"] = roots;
    json action = json::object();
    for (int g = 0; g < G.num_morphisms(); ++g) {
        json amap = json::object();
        const GroundPtr& src = R.roots(G.dom(g));
        const GroundPtr& dst = R.roots(G.cod(g));
        for (int i = 0; i < src->size(); ++i)
            amap[src->label(i)] = dst->label(R.act_perm(g)[static_cast<size_t>(i)]);
        action[G.morphism(g).name] = amap;
    }
    j["action"] = action;
    return j;
}

SignedGroupoidSet signed_set_from_json(const json& j) {
    expect_kind(j, "signed");
    GroupoidParse gp = parse_groupoid_body(j);
    const Groupoid& G = gp.G;
    std::vector<GroundPtr> roots(static_cast<size_t>(G.num_objects()));
    std::vector<std::vector<int>> neg(static_cast<size_t>(G.num_objects()));
    std::vector<SetElem> positive;
    const json& jr = field(j, "roots");
    for (int a = 0; a < G.num_objects(); ++a) {
        auto it = jr.find(G.object_name(a));
        if (it == jr.end()) throw ParseError("missing roots for object '" + G.object_name(a) + "'");
        std::vector<std::string> pos, negs;
        for (const auto& l : field(*it, "positive")) pos.push_back(l.get<std::string>());
        for (const auto& l : field(*it, "negative")) negs.push_back(l.get<std::string>());
        if (pos.size() != negs.size()) throw ParseError("positive/negative root lists differ in length");
        std::vector<std::string> labels = pos;
        labels.insert(labels.end(), negs.begin(), negs.end());
        roots[static_cast<size_t>(a)] = make_ground("roots:" + G.object_name(a), labels);
        const int np = static_cast<int>(pos.size());
        neg[static_cast<size_t>(a)].resize(static_cast<size_t>(2 * np));
        for (int i = 0; i < np; ++i) {
            neg[static_cast<size_t>(a)][static_cast<size_t>(i)] = np + i;
            neg[static_cast<size_t>(a)][static_cast<size_t>(np + i)] = i;
        }
        SetElem p(roots[static_cast<size_t>(a)]);
        for (int i = 0; i < np; ++i) p.set(i);
        positive.push_back(p);
    }
    std::vector<std::vector<int>> act(static_cast<size_t>(G.num_morphisms()));
    const json& ja = field(j, "action");
    for (int g = 0; g < G.num_morphisms(); ++g) {
        auto it = ja.find(G.morphism(g).name);
        if (it == ja.end()) throw ParseError("missing root action for '" + G.morphism(g).name + "'");
        const GroundPtr& src = roots[static_cast<size_t>(G.dom(g))];
        const GroundPtr& dst = roots[static_cast<size_t>(G.cod(g))];
        std::vector<int> perm(static_cast<size_t>(src->size()), -1);
        for (auto e = it->begin(); e != it->end(); ++e) {
            int from = src->find(e.key());
            int to = dst->find(e.value().get<std::string>());
            if (from < 0 || to < 0) throw ParseError("root action references unknown labels");
            perm[static_cast<size_t>(from)] = to;
        }
        for (int v : perm)
            if (v < 0) throw ParseError("root action of '" + G.morphism(g).name + "' is not total");
        act[static_cast<size_t>(g)] = std::move(perm);
    }
    try {
        return SignedGroupoidSet(gp.G, std::move(roots), std::move(neg), std::move(positive), std::move(act));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

nlohmann::json coxeter_matrix_to_json(const CoxeterMatrix& M, std::optional<int> cutoff) {
    json j;
    j["kind"] = "coxeter";
    j["generators"] = M.generators;
    j["matrix"] = M.m;
    if (cutoff) j["cutoff"] = *cutoff;
    return j;
}

std::pair<CoxeterMatrix, std::optional<int>> coxeter_matrix_from_json(const json& j) {
    expect_kind(j, "coxeter");
    CoxeterMatrix M;
    for (const auto& g : field(j, "generators")) M.generators.push_back(g.get<std::string>());
    for (const auto& row : field(j, "matrix")) {
        std::vector<int> r;
        for (const auto& e : row) r.push_back(e.get<int>());
        M.m.push_back(std::move(r));
    }
    try {
        M.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    std::optional<int> cutoff;
    if (j.contains("cutoff") && !j["cutoff"].is_null()) cutoff = j["cutoff"].get<int>();
    return {std::move(M), cutoff};
}

nlohmann::json arrangement_to_json(const RationalArrangement& A) {
    json j;
    j["kind"] = "arrangement";
    j["dim"] = A.dim;
    j["normals"] = A.normals;
    return j;
}

RationalArrangement arrangement_from_json(const json& j) {
    expect_kind(j, "arrangement");
    RationalArrangement A;
    A.dim = field(j, "dim").get<int>();
    for (const auto& row : field(j, "normals")) {
        std::vector<long long> r;
        for (const auto& e : row) r.push_back(e.get<long long>());
        A.normals.push_back(std::move(r));
    }
    try {
        A.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return A;
}

nlohmann::json prd_morphism_to_json(const Protorootoid& src, const Protorootoid& tgt, const PrdMorphism& f) {
    const Groupoid& G = src.groupoid();
    const Groupoid& H = tgt.groupoid();
    json j;
    j["kind"] = "morphism";
    json objs = json::object(), mors = json::object(), mu = json::object();
    for (int a = 0; a < G.num_objects(); ++a)
        objs[G.object_name(a)] = H.object_name(f.alpha.obj[static_cast<size_t>(a)]);
    for (int g = 0; g < G.num_morphisms(); ++g)
        mors[G.morphism(g).name] = H.morphism(f.alpha.mor[static_cast<size_t>(g)]).name;
    for (int a = 0; a < G.num_objects(); ++a) {
        const PartialMap& pm = f.mu[static_cast<size_t>(a)];
        json entries = json::object();
        for (size_t y = 0; y < pm.map.size(); ++y)
            if (pm.map[y] >= 0) entries[pm.source->label(static_cast<int>(y))] = pm.target->label(pm.map[y]);
        mu[G.object_name(a)] = entries;
    }
    j["objects"] = objs;
    j["morphisms"] = mors;
    j["mu"] = mu;
    return j;
}

PrdMorphism prd_morphism_from_json(const Protorootoid& src, const Protorootoid& tgt, const json& j) {
    expect_kind(j, "morphism");
    const Groupoid& G = src.groupoid();
    const Groupoid& H = tgt.groupoid();
    PrdMorphism f;
    f.alpha.obj.assign(static_cast<size_t>(G.num_objects()), -1);
    f.alpha.mor.assign(static_cast<size_t>(G.num_morphisms()), -1);
    for (auto it = field(j, "objects").begin(); it != field(j, "objects").end(); ++it) {
        int a = G.object_index(it.key());
        int b = H.object_index(it.value().get<std::string>());
        if (a < 0 || b < 0) throw ParseError("morphism file references unknown objects");
        f.alpha.obj[static_cast<size_t>(a)] = b;
    }
    for (auto it = field(j, "morphisms").begin(); it != field(j, "morphisms").end(); ++it) {
        int g = G.morphism_index(it.key());
        int h = H.morphism_index(it.value().get<std::string>());
        if (g < 0 || h < 0) throw ParseError("morphism file references unknown morphisms");
        f.alpha.mor[static_cast<size_t>(g)] = h;
    }
    for (int v : f.alpha.obj)
        if (v < 0) throw ParseError("morphism file: object map is not total");
    for (int v : f.alpha.mor)
        if (v < 0) throw ParseError("morphism file: morphism map is not total");
    const json& jm = field(j, "mu");
    for (int a = 0; a < G.num_objects(); ++a) {
        auto it = jm.find(G.object_name(a));
        if (it == jm.end()) throw ParseError("morphism file: missing mu at object '" + G.object_name(a) + "'");
        const GroundPtr& Y = tgt.rep().ground(f.alpha.obj[static_cast<size_t>(a)]);
        const GroundPtr& X = src.rep().ground(a);
        PartialMap pm{Y, X, std::vector<int>(static_cast<size_t>(Y->size()), -1)};
        for (auto e = it->begin(); e != it->end(); ++e) {
            int y = Y->find(e.key());
            int x = X->find(e.value().get<std::string>());
            if (y < 0 || x < 0) throw ParseError("morphism file: mu references unknown labels");
            pm.map[static_cast<size_t>(y)] = x;
        }
        f.mu.push_back(std::move(pm));
    }
    return f;
}

Protorootoid elaborate(const json& j, long long budget) {
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "protorootoid") return protorootoid_from_json(j);
    if (kind == "signed") return I_functor(L_functor(signed_set_from_json(j)));
    if (kind == "coxeter") {
        auto [M, cutoff] = coxeter_matrix_from_json(j);
        if (cutoff)
            throw ParseError(
                "a cutoff enumeration is not a protorootoid; use 'export --what root-table' to inspect it");
        auto B = build_coxeter(M, std::nullopt, budget);
        return *B.prd;
    }
    if (kind == "arrangement") {
        auto B = build_arrangement(arrangement_from_json(j), budget);
        return *B.prd;
    }
    if (kind == "groupoid") {
        // Bare groupoid: empty grounds and the zero cocycle.
        Groupoid G = groupoid_from_json(j);
        std::vector<GroundPtr> grounds;
        for (int a = 0; a < G.num_objects(); ++a)
            grounds.push_back(make_ground("ground:" + G.object_name(a), {}));
        std::vector<std::vector<int>> act(static_cast<size_t>(G.num_morphisms()));
        Cocycle N;
        for (int g = 0; g < G.num_morphisms(); ++g) N.value.emplace_back(grounds[static_cast<size_t>(G.cod(g))]);
        return Protorootoid(std::move(G), PowerSetRep(std::move(grounds), std::move(act)), std::move(N));
    }
    throw ParseError("unknown kind '" + kind + "'");
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string export_weak_order_dot(const Protorootoid& P, int object) {
    WeakOrder wo(P, object);
    const Groupoid& G = P.groupoid();
    std::ostringstream out;
    out << "digraph weak_order {\n  rankdir=BT;\n";
    for (int i = 0; i < wo.size(); ++i) {
        int g = wo.witnesses(i).front();
        out << "  n" << i << " [label=\"" << G.morphism(g).name << "\\n" << wo.elem(i).to_string()
            << "\"];\n";
    }
    for (auto [lo, hi] : wo.hasse()) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_root_table_tsv(const Protorootoid& P) {
    const Groupoid& G = P.groupoid();
    PropertyReport rep = classify(P);
    std::ostringstream out;
    out << "morphism\tdom\tcod\tl_S\tl_N\tcocycle\n";
    std::vector<int> order(static_cast<size_t>(G.num_morphisms()));
    for (int g = 0; g < G.num_morphisms(); ++g) order[static_cast<size_t>(g)] = g;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return G.morphism(a).name < G.morphism(b).name; });
    for (int g : order) {
        out << G.morphism(g).name << "\t" << G.object_name(G.dom(g)) << "\t" << G.object_name(G.cod(g))
            << "\t";
        if (rep.simply_generated) out << rep.l_S[static_cast<size_t>(g)];
        else out << "-";
        out << "\t" << rep.l_N[static_cast<size_t>(g)] << "\t" << P.N(g).to_string() << "\n";
    }
    return out.str();
}

std::string export_root_table_tsv(const CoxeterBundle& B) {
    std::ostringstream out;
    out << "element\tl\t|N|\tcocycle\n";
    for (int w = 0; w < B.num_elements(); ++w) {
        out << B.names[static_cast<size_t>(w)] << "\t" << B.length[static_cast<size_t>(w)] << "\t"
            << B.inversions[static_cast<size_t>(w)].size() << "\t{";
        bool first = true;
        for (int p : B.inversions[static_cast<size_t>(w)]) {
            if (!first) out << ",";
            out << B.reflection_names[static_cast<size_t>(p)];
            first = false;
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace rootoidlab
