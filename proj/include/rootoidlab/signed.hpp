#ifndef ROOTOIDLAB_SIGNED_HPP
#define ROOTOIDLAB_SIGNED_HPP

#include <optional>
#include <string>
#include <vector>

#include "rootoidlab/prd.hpp"

namespace rootoidlab {

// Groupoid representation in definitely signed sets: per object a root set
// with a fixed-point-free involution and a chosen positive half; per
// morphism a bijection commuting with the involution. The action need not
// preserve positivity.
class SignedGroupoidSet {
  public:
    SignedGroupoidSet(Groupoid G, std::vector<GroundPtr> roots, std::vector<std::vector<int>> neg,
                      std::vector<SetElem> positive, std::vector<std::vector<int>> act);

    const Groupoid& groupoid() const { return G_; }
    const GroundPtr& roots(int object) const { return roots_.at(static_cast<size_t>(object)); }
    const std::vector<int>& neg(int object) const { return neg_.at(static_cast<size_t>(object)); }
    const SetElem& positive(int object) const { return positive_.at(static_cast<size_t>(object)); }
    SetElem negative(int object) const;
    const std::vector<int>& act_perm(int mor) const { return act_.at(static_cast<size_t>(mor)); }
    SetElem act(int mor, const SetElem& x) const;

    // Inversion set of g (over the positive part at cod g):
    // Phi_g = positive(cod g) ∩ g(negative(dom g)).
    SetElem phi(int g) const;

  private:
    Groupoid G_;
    std::vector<GroundPtr> roots_;
    std::vector<std::vector<int>> neg_;
    std::vector<SetElem> positive_;
    std::vector<std::vector<int>> act_;
};

// Protorootoid whose representation is a full power-set representation of
// a groupoid action on plain sets.
struct SetProtorootoid {
    Groupoid G;
    PowerSetRep rep;  // never carries subrings
    Cocycle N;
};

// Orbit-space set protorootoid of a signed groupoid-set; the ground at each
// object is the positive half, labelling each orbit by its positive root,
// and N(g) is the image of Phi_g.
SetProtorootoid L_functor(const SignedGroupoidSet& R);

// Doubling: roots are ring elements paired with a sign; the action of g
// flips the sign exactly on x in N(g*).
SignedGroupoidSet K_functor(const SetProtorootoid& T);

// Reinterpret a set protorootoid as a protorootoid over full power sets.
Protorootoid I_functor(const SetProtorootoid& T);

struct SignedCheck {
    bool ok = false;
    std::string witness;
};

// The rootoid axioms read off the inversion sets Phi_g directly.
SignedCheck rootoidal_signed_check(const SignedGroupoidSet& R);

// Replace the chosen positive halves. The orbit cocycle moves within its
// cohomology class; nothing ties the old and new weak orders together.
SignedGroupoidSet with_positive_parts(const SignedGroupoidSet& R, std::vector<SetElem> positive);

// Natural isomorphism L(K(T)) -> T: constructs the orbit -> element
// pairing and verifies it carries cocycles across.
bool verify_lk_roundtrip(const SetProtorootoid& T, std::string* diagnostic = nullptr);

// Natural isomorphism K(L(R)) -> R: pairs (orbit, sign) with the signed
// root and verifies equivariance, involution, and positivity of components.
bool verify_kl_roundtrip(const SignedGroupoidSet& R, std::string* diagnostic = nullptr);

struct SetProtorootoidExtraction {
    SetProtorootoid T;
    bool iso_verified = false;  // abridgement of I(T) matches abridgement of P
    std::string diagnostic;
};

// For a principal protorootoid: ground at a is the orbit of simple-value
// atoms, M(g) collects the atoms below N(g); the abridgements of I(result)
// and of the input are isomorphic via union-of-atoms.
SetProtorootoidExtraction to_set_protorootoid(const Protorootoid& P);

}  // namespace rootoidlab

#endif
