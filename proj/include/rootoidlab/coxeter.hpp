#ifndef ROOTOIDLAB_COXETER_HPP
#define ROOTOIDLAB_COXETER_HPP

#include <optional>
#include <string>
#include <vector>

#include "rootoidlab/prd.hpp"
#include "rootoidlab/signed.hpp"

namespace rootoidlab {

struct CoxeterMatrix {
    std::vector<std::string> generators;
    std::vector<std::vector<int>> m;  // entries in {1,2,...}; 0 encodes infinity

    void validate() const;  // symmetry, diagonal 1, off-diagonal >= 2
    static CoxeterMatrix named(const std::string& type);  // A1, A2, A3, B2, B3, I2(m), ...
};

// Exact enumeration of a Coxeter group through its geometric representation
// over Z[2cos(pi/L)], L the lcm of the finite matrix orders. Elements are
// named by the first-found reduced word ("e" for the identity).
struct CoxeterBundle {
    CoxeterMatrix matrix;
    bool complete = true;  // false in cutoff mode (ball enumeration only)

    std::vector<std::string> names;        // element -> word
    std::vector<int> length;
    std::vector<int> inverse;
    std::vector<std::vector<int>> right;   // element x generator -> element, -1 outside a cutoff ball
    std::vector<std::vector<int>> mult;    // full table (complete mode only)

    // Reflections T. In a complete enumeration every reflection is an
    // element and `reflections` lists ids in element order; in a ball
    // enumeration T is partial and out-of-ball reflections carry id -1.
    std::vector<std::string> reflection_names;
    std::vector<int> reflections;
    std::vector<std::vector<int>> inversions;  // element -> positions into reflection_names, sorted

    // Complete mode only:
    std::optional<Groupoid> W;
    std::optional<Protorootoid> prd;
    std::optional<SignedGroupoidSet> signed_set;

    int element(const std::string& word) const;  // -1 if unknown
    int num_elements() const { return static_cast<int>(names.size()); }
};

CoxeterBundle build_coxeter(const CoxeterMatrix& M, std::optional<int> cutoff = std::nullopt,
                            long long budget = 200000);

struct ReflectionSubgroup {
    std::vector<int> elements;  // ambient element ids, BFS order from the given reflections
    std::vector<int> tprime;    // ambient reflection ids lying in W', ascending
    std::vector<int> sprime;    // canonical simple reflections of (W', S')
    Groupoid Wp;                // groupoid on W' (morphism names = ambient words)
    std::optional<Protorootoid> prd;  // over P(T'), N'(w) = N(w) ∩ T'
    bool exchange_condition = false;
    bool sprime_generates = false;
    bool order_preserving = false;  // restriction of ambient weak order is order preserving
    std::optional<std::pair<int, int>> non_iso_witness;  // N'(x) ⊆ N'(y) but N(x) ⊄ N(y)
};

ReflectionSubgroup reflection_subgroup(const CoxeterBundle& B, const std::vector<int>& tgens);

}  // namespace rootoidlab

#endif
