#ifndef ROOTOIDLAB_ARRANGEMENT_HPP
#define ROOTOIDLAB_ARRANGEMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rootoidlab/prd.hpp"
#include "rootoidlab/signed.hpp"

namespace rootoidlab {

using Rational = boost::multiprecision::cpp_rational;

// Finite central essential hyperplane arrangement given by primitive,
// pairwise non-parallel integer normals.
struct RationalArrangement {
    int dim = 0;
    std::vector<std::vector<long long>> normals;

    void validate() const;  // primitivity, non-parallelism, dim >= 1, essentiality
};

// Feasibility of the strict homogeneous system { sign_i <n_i, x> > 0 } by
// Fourier-Motzkin elimination over the rationals; returns an interior
// sample point when feasible.
std::optional<std::vector<Rational>> fm_feasible(const std::vector<std::vector<Rational>>& rows, int nvars);

struct ArrangementBundle {
    RationalArrangement arrangement;
    std::vector<std::vector<int>> chambers;        // sign vectors over the normals, each entry ±1
    std::vector<std::vector<Rational>> samples;    // exact interior points
    std::vector<std::vector<int>> walls;           // per chamber: indices of separating facet hyperplanes
    bool simplicial = false;

    Groupoid G;  // connected simply connected groupoid on the chambers
    std::optional<SignedGroupoidSet> signed_set;
    std::optional<SetProtorootoid> set_prd;
    std::optional<Protorootoid> prd;

    int chamber_index(const std::vector<int>& signs) const;  // -1 if absent
    std::string chamber_name(int chamber) const;
};

ArrangementBundle build_arrangement(const RationalArrangement& A, long long budget = 1 << 20);

// Facet oracle: the chambers indexed c1, c2 share a (dim-1)-dimensional
// face iff their sign vectors differ at exactly one hyperplane i and the
// equality-augmented system on that hyperplane is feasible.
bool chambers_share_facet(const RationalArrangement& A, const std::vector<int>& signs1,
                          const std::vector<int>& signs2);

}  // namespace rootoidlab

#endif
