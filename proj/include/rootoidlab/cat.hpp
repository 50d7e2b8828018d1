#ifndef ROOTOIDLAB_CAT_HPP
#define ROOTOIDLAB_CAT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootoidlab/classify.hpp"
#include "rootoidlab/prd.hpp"

namespace rootoidlab {

struct GroupoidFunctor {
    std::vector<int> obj;  // source object -> target object
    std::vector<int> mor;  // source morphism -> target morphism

    static GroupoidFunctor identity(const Groupoid& G);
    // Functor laws against the two groupoids; returns a diagnostic or "".
    std::string check(const Groupoid& src, const Groupoid& tgt) const;
};

// A morphism of protorootoids (alpha, mu): a functor together with one ring
// homomorphism per source object, mu_a : ring(a) -> ring'(alpha a), encoded
// as a partial map from the target's ground back to the source's.
struct PrdMorphism {
    GroupoidFunctor alpha;
    std::vector<PartialMap> mu;

    SetElem apply_mu(int object, const SetElem& x) const { return mu.at(static_cast<size_t>(object)).apply(x); }
};

PrdMorphism identity_prd_morphism(const Protorootoid& P);
PartialMap compose_partial_maps(const PartialMap& inner, const PartialMap& outer);
PrdMorphism compose_prd_morphisms(const PrdMorphism& first, const PrdMorphism& second);

struct MorphismCheck {
    bool ok = false;
    std::string witness;
};

// Functoriality, naturality of mu, the cocycle intertwining law, and
// preservation of the weak preorders by the induced star maps.
MorphismCheck check_prd_morphism(const Protorootoid& src, const Protorootoid& tgt, const PrdMorphism& f);

// Partial left adjoint of the star map at `object`, materialized as a
// table over the order ideal generated by the image.
struct ThetaPerp {
    int object = -1;
    std::vector<int> theta;   // source weak-order index -> target weak-order index
    std::vector<int> domain;  // target indices in the ideal generated by the image
    std::vector<int> value;   // parallel to domain: source weak-order index
    int value_at(int target_index) const;  // -1 outside the domain
};

// Requires faithful endpoints; throws std::invalid_argument naming the
// violated meet/join when the star map is not a complete-semilattice
// morphism. The adjunction law is verified on all pairs before returning.
ThetaPerp theta_perp(const Protorootoid& src, const Protorootoid& tgt, const PrdMorphism& f, int object);

struct MorphismGrade {
    bool in_prd = false;
    bool in_rd = false;
    bool in_Rd = false;
    bool in_RdE = false;
    std::map<std::string, std::string> witnesses;
    std::vector<ThetaPerp> adjoints;  // per source object, when in_rd
};

// Grades a morphism between rootoids; throws when an endpoint fails the
// rootoid axioms.
MorphismGrade grade_morphism(const Protorootoid& src, const Protorootoid& tgt, const PrdMorphism& f);

struct InverseImage {
    Protorootoid prd;
    PrdMorphism iflat;  // (i, identity components) into the original
};

// Pull back representation and cocycle along a functor i : H -> G.
InverseImage inverse_image(const Protorootoid& P, const Groupoid& H, const GroupoidFunctor& i);

// Restriction to a subgroupoid given by a subset of morphisms (closed under
// inverse and composition; objects are those meeting the subset).
InverseImage restriction(const Protorootoid& P, const std::vector<int>& morphisms);

bool is_covering(const Protorootoid& src, const Protorootoid& tgt, const PrdMorphism& f);

struct CoverResult {
    Protorootoid prd;       // protorootoid on the universal covering groupoid
    PrdMorphism pi;          // covering morphism onto the input
    UniversalCover topology; // the underlying groupoid data
};

CoverResult cover(const Protorootoid& P);

// Longest-element structure of a faithful complete abridged protorootoid:
// star maxima omega(a), ring identities e_a = N(omega(a)), and the
// involutory automorphism D = (d, ring action of omega*).
struct CompleteStructure {
    std::vector<int> omega;     // object -> morphism witnessing the star maximum
    std::vector<SetElem> unit;  // e_a per object
    GroupoidFunctor d;
    PrdMorphism D;
};

CompleteStructure complete_structure(const Protorootoid& P);

}  // namespace rootoidlab

#endif
