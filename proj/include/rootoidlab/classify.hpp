#ifndef ROOTOIDLAB_CLASSIFY_HPP
#define ROOTOIDLAB_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootoidlab/prd.hpp"

namespace rootoidlab {

struct PropertyReport {
    bool connected = false;
    bool simply_connected = false;
    bool complemented = false;
    bool complete = false;
    bool interval_finite = false;
    bool cocycle_finite = false;
    bool atomically_generated = false;
    bool simply_generated = false;
    bool principal = false;
    bool preprincipal = false;
    bool abridged = false;
    bool saturated = false;
    bool pseudoprincipal = false;
    bool regular = false;
    bool faithful = false;
    bool rootoid = false;

    std::vector<int> atomic_morphisms;  // sorted morphism ids
    std::vector<int> simple_morphisms;
    std::vector<int> l_N;  // per morphism: ring rank of N(g)
    std::vector<int> l_S;  // per morphism: generator length over the simple morphisms, -1 if none
    std::map<std::string, std::string> witnesses;  // per-flag failure evidence
};

PropertyReport classify(const Protorootoid& P);

struct RootoidVerdict {
    bool ok = false;
    std::string witness;  // failure evidence when !ok
};

// Rootoid axioms: faithful; each weak order a complete meet semilattice
// (finite case: minimum plus pairwise meets); join orthogonality.
// The binary JOP scan suffices: a family join existing in a complete meet
// semilattice is an iterated binary join. exhaustive_jop additionally runs
// the all-subsets scan on stars of at most 20 elements.
RootoidVerdict is_rootoid(const Protorootoid& P, bool exhaustive_jop = false);

// Atom-level criterion, equivalent to the rootoid axioms for interval
// finite faithful inputs; throws when those hypotheses fail.
RootoidVerdict slc_check(const Protorootoid& P);

// Restrict each ring to the subring generated by the cocycle values.
Protorootoid abridge(const Protorootoid& P);

struct LengthReports {
    bool compat_matches_lN = true;      // expression compatible iff l_N additive
    bool compat_matches_lS = true;      // and l_S additive, when principal
    bool order_matches_lN = true;       // x <= y iff l_N(y) = l_N(x) + l_N(x*y)
    bool order_matches_lS = true;
    int expressions_checked = 0;
    int pairs_checked = 0;
};

// Cross-checks length additivity against compatibility on sampled
// expressions and against the weak order on all star pairs.
LengthReports length_reports(const Protorootoid& P, int expression_samples = 500,
                             unsigned rng_seed = 1);

// Pseudocomplement of x in the weak order at a, for a principal complete
// rootoid: the join of { y : y meet x = 1_a }; verified by full scan.
int pseudocomplement(const Protorootoid& P, int object, int x_morphism);

}  // namespace rootoidlab

#endif
