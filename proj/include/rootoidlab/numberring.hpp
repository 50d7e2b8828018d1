#ifndef ROOTOIDLAB_NUMBERRING_HPP
#define ROOTOIDLAB_NUMBERRING_HPP

#include <cstdint>
#include <vector>

namespace rootoidlab {

// Exact arithmetic in Z[2cos(pi/L)], presented as Z[y]/(psi) where psi is
// the minimal polynomial of 2cos(pi/L). Elements are coefficient vectors of
// length deg(psi). For L < 3 the ring degenerates to Z.
//
// psi is obtained by folding the (palindromic) cyclotomic polynomial of
// order 2L through z^j + z^-j = D_j(z + 1/z), D_j the degree-j Dickson
// polynomial, so everything stays in integer arithmetic.
class NumberRing {
  public:
    using Elem = std::vector<long long>;

    explicit NumberRing(int L);

    int level() const { return L_; }
    int degree() const { return static_cast<int>(psi_.size()) - 1; }

    Elem zero() const { return Elem(static_cast<size_t>(degree()), 0); }
    Elem integer(long long k) const;
    // 2cos(pi/m): requires m | L when m >= 3; m = 0 encodes infinity (value 2).
    Elem two_cos_pi_over(int m) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, long long k) const;
    bool is_zero(const Elem& a) const;

  private:
    int L_;
    std::vector<long long> psi_;  // monic modulus, degree = psi_.size()-1
};

// Integer coefficients of the n-th cyclotomic polynomial, ascending degree.
std::vector<long long> cyclotomic_polynomial(int n);

}  // namespace rootoidlab

#endif
