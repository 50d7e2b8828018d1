#ifndef ROOTOIDLAB_GROUPOID_HPP
#define ROOTOIDLAB_GROUPOID_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rootoidlab {

// Finite groupoid with explicit composition table. Composition follows the
// convention gh = "h then g": comp(g,h) is defined iff dom(g) == cod(h),
// and then dom(gh) = dom(h), cod(gh) = cod(g).
class Groupoid {
  public:
    Groupoid() = default;  // the empty groupoid

    struct Morphism {
        std::string name;
        int dom = -1;
        int cod = -1;
        int inv = -1;
    };

    class Builder {
      public:
        int add_object(std::string name);
        int add_morphism(std::string name, int dom, int cod);
        void set_identity(int object, int mor);
        void set_inverse(int g, int ginv);
        void set_compose(int g, int h, int gh);
        Groupoid build() &&;  // validates all category and groupoid laws

      private:
        friend class Groupoid;
        std::vector<std::string> objects_;
        std::vector<Morphism> mor_;
        std::vector<int> identity_;
        std::vector<std::vector<int>> comp_;
    };

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(mor_.size()); }
    const std::string& object_name(int a) const { return objects_.at(static_cast<size_t>(a)); }
    int object_index(const std::string& name) const;  // -1 if unknown
    const Morphism& morphism(int g) const { return mor_.at(static_cast<size_t>(g)); }
    int morphism_index(const std::string& name) const;  // -1 if unknown

    int dom(int g) const { return mor_[static_cast<size_t>(g)].dom; }
    int cod(int g) const { return mor_[static_cast<size_t>(g)].cod; }
    int inv(int g) const { return mor_[static_cast<size_t>(g)].inv; }
    int identity(int object) const { return identity_.at(static_cast<size_t>(object)); }
    bool is_identity(int g) const { return identity_[static_cast<size_t>(dom(g))] == g; }

    bool composable(int g, int h) const { return dom(g) == cod(h); }
    int compose(int g, int h) const;  // throws if not composable

    // Left star at a: all morphisms with codomain a (identity included).
    std::vector<int> star(int a) const;
    // Hom set: morphisms b -> a.
    std::vector<int> hom(int a, int b) const;

  private:
    std::vector<std::string> objects_;
    std::vector<Morphism> mor_;
    std::vector<int> identity_;
    std::vector<int> comp_;  // dense table, -1 where undefined
};

struct Components {
    int count = 0;
    std::vector<int> object_component;    // object -> component id
    std::vector<int> morphism_component;  // morphism -> component id
};

Components components(const Groupoid& G);
bool is_connected(const Groupoid& G);         // non-empty, >=1 morphism between any two objects
bool is_simply_connected(const Groupoid& G);  // <=1 morphism between any two objects

struct GeneratedSubgroupoid {
    std::vector<int> morphisms;   // morphisms of the generated subgroupoid, sorted
    std::vector<int> length;      // per groupoid morphism: l_S, or -1 if not generated
    bool generates_all = false;
};

GeneratedSubgroupoid generated_subgroupoid(const Groupoid& G, const std::vector<int>& gens);

struct SignCharacter {
    bool ok = false;
    std::vector<int> value;               // per morphism, +1 / -1
    std::optional<std::pair<int, int>> witness;  // composable pair violating multiplicativity
};

// Sign character of (G,S): eps(g) = (-1)^{l_S(g)} when that is a functor to {±1}.
SignCharacter sign_character(const Groupoid& G, const std::vector<int>& gens);

// Composable chain [g1,...,gn] with cod(g_{i+1}) = dom(g_i); value g1...gn.
struct Expression {
    std::vector<int> mors;

    bool composable(const Groupoid& G) const;
    int value(const Groupoid& G, int anchor_object) const;  // identity at anchor when empty
};

struct UniversalCover {
    Groupoid cover;
    std::vector<int> object_map;    // cover object -> base groupoid object
    std::vector<int> morphism_map;  // cover morphism -> base groupoid morphism
    std::vector<int> object_fiber;  // cover object -> the G-morphism f: b -> base it represents
};

// Universal covering groupoid, assembled per component from the slice
// category at the lexicographically least object of the component.
UniversalCover universal_cover(const Groupoid& G);

// One-object groupoid from a finite group multiplication table.
Groupoid group_as_groupoid(const std::string& object_name, const std::vector<std::string>& element_names,
                           const std::vector<std::vector<int>>& mult, int identity_index);

// Connected, simply connected groupoid on the given objects; the morphism
// b -> a is named "<prefix>a<sep>b" via the naming callback.
Groupoid simply_connected_groupoid(const std::vector<std::string>& objects,
                                   const std::function<std::string(int, int)>& name);

}  // namespace rootoidlab

#endif
