#ifndef ROOTOIDLAB_PRD_HPP
#define ROOTOIDLAB_PRD_HPP

#include <optional>
#include <string>
#include <vector>

#include "rootoidlab/groupoid.hpp"
#include "rootoidlab/setalg.hpp"

namespace rootoidlab {

// Representation of a groupoid in Boolean set algebras: one ground set per
// object, one ground-set bijection per morphism (acting by direct image),
// and optionally a subring partition per object when the ring at an object
// is a proper subring of the full power set.
class PowerSetRep {
  public:
    PowerSetRep() = default;
    PowerSetRep(std::vector<GroundPtr> grounds, std::vector<std::vector<int>> act,
                std::vector<std::optional<SubringPartition>> subrings = {});

    const GroundPtr& ground(int object) const { return grounds_.at(static_cast<size_t>(object)); }
    const std::vector<int>& act_perm(int mor) const { return act_.at(static_cast<size_t>(mor)); }
    bool has_subring(int object) const;
    const SubringPartition& subring(int object) const;
    const std::vector<std::optional<SubringPartition>>& subrings() const { return subrings_; }

    // Direct image of x (over ground(dom g)) under the bijection of g.
    SetElem act(const Groupoid& G, int g, const SetElem& x) const;

    // Ring queries that respect a subring partition when present.
    bool ring_contains(int object, const SetElem& x) const;
    int ring_rank(int object, const SetElem& x) const;
    std::vector<SetElem> ring_atoms(int object) const;
    SetElem ring_identity(int object) const;  // full ground, or the subring support

    // Functoriality, bijectivity and subring stability; throws on failure.
    void validate(const Groupoid& G) const;

  private:
    std::vector<GroundPtr> grounds_;
    std::vector<std::vector<int>> act_;  // per morphism: dom ground index -> cod ground index
    std::vector<std::optional<SubringPartition>> subrings_;
};

struct Cocycle {
    std::vector<SetElem> value;  // per morphism, over ground(cod)
};

struct CocycleViolation {
    int g = -1, h = -1;
    std::string message;
};

class Protorootoid {
  public:
    // Validates the cocycle condition on every composable pair; throws
    // std::invalid_argument on violation. Use check_cocycle for a
    // witness-returning variant.
    Protorootoid(Groupoid G, PowerSetRep rep, Cocycle N);

    const Groupoid& groupoid() const { return G_; }
    const PowerSetRep& rep() const { return rep_; }
    const Cocycle& cocycle() const { return N_; }
    const SetElem& N(int g) const { return N_.value.at(static_cast<size_t>(g)); }

  private:
    Groupoid G_;
    PowerSetRep rep_;
    Cocycle N_;
};

struct CocycleCheck {
    std::optional<Protorootoid> prd;
    std::optional<CocycleViolation> violation;
    bool ok() const { return prd.has_value(); }
};

CocycleCheck check_cocycle(Groupoid G, PowerSetRep rep, Cocycle N);

// Coboundary of a family x_a: N(g) = x_{cod g} + g(x_{dom g}).
Cocycle coboundary(const Groupoid& G, const PowerSetRep& rep, const std::vector<SetElem>& family);

struct Trivialization {
    bool ok = false;
    std::vector<SetElem> family;      // when ok
    int bad_component_object = -1;    // an object of a non-simply-connected component
};

// On a groupoid whose components are all simply connected, every cocycle is
// a coboundary; reconstructs a defining family with x = 0 at each
// component's lexicographically least object.
Trivialization trivialize(const Protorootoid& P);

// Weak order at an object: the distinct cocycle values over the star,
// ordered by containment, with witnessing morphisms per value.
class WeakOrder {
  public:
    WeakOrder(const Protorootoid& P, int object);

    int object() const { return object_; }
    int size() const { return static_cast<int>(elems_.size()); }
    const SetElem& elem(int i) const { return elems_.at(static_cast<size_t>(i)); }
    const std::vector<SetElem>& elems() const { return elems_; }
    const std::vector<int>& witnesses(int i) const { return witnesses_.at(static_cast<size_t>(i)); }
    int index_of(const SetElem& x) const;  // -1 if absent
    int index_of_morphism(int g) const;

    bool leq(int i, int j) const { return leq_[static_cast<size_t>(i)].test(static_cast<size_t>(j)); }
    int min_index() const { return 0; }  // the empty element, always present
    int max_index() const;               // -1 when no maximum
    int meet(int i, int j) const;        // -1 when none
    int join(int i, int j) const;        // -1 when none
    int meet_all(const std::vector<int>& xs) const;
    int join_all(const std::vector<int>& xs) const;  // -1 when none
    bool has_all_pairwise_meets() const;
    std::vector<std::pair<int, int>> hasse() const;  // cover pairs (lower, upper)

    // down(i): bitset of j with elem(j) <= elem(i); up dually.
    const boost::dynamic_bitset<>& down(int i) const { return down_[static_cast<size_t>(i)]; }
    const boost::dynamic_bitset<>& up(int i) const { return leq_[static_cast<size_t>(i)]; }

  private:
    int object_;
    std::vector<SetElem> elems_;
    std::vector<std::vector<int>> witnesses_;
    std::vector<boost::dynamic_bitset<>> leq_;   // leq_[i][j] : elem i <= elem j
    std::vector<boost::dynamic_bitset<>> down_;  // down_[i][j]: elem j <= elem i
};

WeakOrder weak_order(const Protorootoid& P, int object);

struct FaithfulnessReport {
    bool faithful = false;
    std::optional<std::pair<int, int>> witness;  // distinct morphisms with equal N
};

FaithfulnessReport is_faithful(const Protorootoid& P);

bool is_compatible(const Protorootoid& P, const Expression& e);

bool orthogonal(const Protorootoid& P, int g, int h);  // throws on codomain mismatch

// Dot action: g . x = N(g) + g(x), for x over ground(dom g).
SetElem dot_action(const Protorootoid& P, int g, const SetElem& x);

struct Protomesh {
    GroundPtr ring_ground;
    std::optional<SubringPartition> subring;
    std::vector<SetElem> L;
};

struct ProtomeshTranslation {
    bool ok = false;
    int gamma_morphism = -1;                          // g, with Gamma = N(g)
    Protomesh source;                                 // (ring at dom g, weak order there)
    Protomesh target;                                 // (ring at cod g, Gamma + weak order there)
    std::vector<std::pair<SetElem, SetElem>> pairing; // N(x) at dom-side star -> Gamma + N(gx)
};

// For g: a -> b, the ring iso of g carries the protomesh at a onto
// (ring at b, N(g) + weak order at b), pairing N(x) with N(g) + N(gx).
ProtomeshTranslation translate_protomesh(const Protorootoid& P, int g);

}  // namespace rootoidlab

#endif
