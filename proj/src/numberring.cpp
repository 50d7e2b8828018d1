#include "rootoidlab/numberring.hpp"

#include <stdexcept>
#include <string>

namespace rootoidlab {

namespace {

using Poly = std::vector<long long>;  // ascending coefficients

void check64(__int128 v, const char* where) {
    if (v > INT64_MAX / 2 || v < INT64_MIN / 2)
        throw std::overflow_error(std::string("exact arithmetic overflow in ") + where);
}

// Exact division lhs / rhs for monic-leading rhs dividing lhs.
Poly divide_exact(Poly lhs, const Poly& rhs) {
    Poly q(lhs.size() - rhs.size() + 1, 0);
    for (int i = static_cast<int>(lhs.size()) - 1; i >= static_cast<int>(rhs.size()) - 1; --i) {
        long long c = lhs[static_cast<size_t>(i)];
        if (c == 0) continue;
        long long lead = rhs.back();
        if (c % lead != 0) throw std::logic_error("cyclotomic division not exact");
        long long f = c / lead;
        int shift = i - (static_cast<int>(rhs.size()) - 1);
        q[static_cast<size_t>(shift)] = f;
        for (size_t j = 0; j < rhs.size(); ++j) {
            __int128 v = static_cast<__int128>(lhs[static_cast<size_t>(shift) + j]) -
                         static_cast<__int128>(f) * rhs[j];
            check64(v, "divide_exact");
            lhs[static_cast<size_t>(shift) + j] = static_cast<long long>(v);
        }
    }
    for (size_t j = 0; j + q.size() < lhs.size() + 1; ++j)
        if (lhs[j] != 0) throw std::logic_error("cyclotomic division has remainder");
    return q;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
    std::vector<Poly> phi(static_cast<size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        Poly num(static_cast<size_t>(m) + 1, 0);
        num[0] = -1;
        num[static_cast<size_t>(m)] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = divide_exact(std::move(num), phi[static_cast<size_t>(d)]);
        phi[static_cast<size_t>(m)] = std::move(num);
    }
    return phi[static_cast<size_t>(n)];
}

NumberRing::NumberRing(int L) : L_(L) {
    if (L < 1) throw std::invalid_argument("NumberRing: level must be positive");
    if (L < 3) {
        psi_ = {0, 1};  // y: the ring is Z
        return;
    }
    Poly phi = cyclotomic_polynomial(2 * L);
    const int d = static_cast<int>(phi.size()) - 1;
    const int half = d / 2;
    // psi(y) = a_half + sum_{j>=1} a_{half+j} D_j(y), with a the
    // palindromic coefficients of the cyclotomic polynomial of order 2L.
    Poly psi(static_cast<size_t>(half) + 1, 0);
    psi[0] = phi[static_cast<size_t>(half)];
    Poly Dprev = {2};     // D_0
    Poly Dcur = {0, 1};   // D_1
    for (int j = 1; j <= half; ++j) {
        long long a = phi[static_cast<size_t>(half + j)];
        for (size_t k = 0; k < Dcur.size(); ++k) {
            __int128 v = static_cast<__int128>(psi[k]) + static_cast<__int128>(a) * Dcur[k];
            check64(v, "psi fold");
            psi[k] = static_cast<long long>(v);
        }
        if (j < half) {
            // D_{j+1} = y D_j - D_{j-1}
            Poly next(Dcur.size() + 1, 0);
            for (size_t k = 0; k < Dcur.size(); ++k) next[k + 1] = Dcur[k];
            for (size_t k = 0; k < Dprev.size(); ++k) next[k] -= Dprev[k];
            Dprev = std::move(Dcur);
            Dcur = std::move(next);
        }
    }
    if (psi.back() != 1) throw std::logic_error("NumberRing: modulus is not monic");
    psi_ = std::move(psi);
}

NumberRing::Elem NumberRing::integer(long long k) const {
    Elem e = zero();
    e[0] = k;
    return e;
}

NumberRing::Elem NumberRing::two_cos_pi_over(int m) const {
    if (m == 0) return integer(2);   // infinity
    if (m == 1) return integer(-2);  // 2cos(pi)
    if (m == 2) return integer(0);
    if (L_ % m != 0) throw std::invalid_argument("NumberRing: order does not divide the level");
    // D_{L/m}(c) with c = 2cos(pi/L), i.e. c = y mod psi (a constant when
    // psi is linear).
    int k = L_ / m;
    Elem c = zero();
    if (degree() >= 2) c[1] = 1;
    else c[0] = -psi_[0];
    Elem prev = integer(2), cur = c;
    if (k == 0) return prev;
    for (int j = 1; j < k; ++j) {
        Elem next = sub(mul(c, cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

NumberRing::Elem NumberRing::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (size_t i = 0; i < r.size(); ++i) {
        __int128 v = static_cast<__int128>(r[i]) + b[i];
        check64(v, "add");
        r[i] = static_cast<long long>(v);
    }
    return r;
}

NumberRing::Elem NumberRing::sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (size_t i = 0; i < r.size(); ++i) {
        __int128 v = static_cast<__int128>(r[i]) - b[i];
        check64(v, "sub");
        r[i] = static_cast<long long>(v);
    }
    return r;
}

NumberRing::Elem NumberRing::mul(const Elem& a, const Elem& b) const {
    const int d = degree();
    std::vector<__int128> prod(static_cast<size_t>(2 * d - 1), 0);
    for (int i = 0; i < d; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j)
            prod[static_cast<size_t>(i + j)] +=
                static_cast<__int128>(a[static_cast<size_t>(i)]) * b[static_cast<size_t>(j)];
    }
    // Reduce by the monic modulus.
    for (int i = 2 * d - 2; i >= d; --i) {
        __int128 c = prod[static_cast<size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= d; ++j)
            prod[static_cast<size_t>(i - d + j)] -= c * psi_[static_cast<size_t>(j)];
    }
    Elem r(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        check64(prod[static_cast<size_t>(i)], "mul");
        r[static_cast<size_t>(i)] = static_cast<long long>(prod[static_cast<size_t>(i)]);
    }
    return r;
}

NumberRing::Elem NumberRing::scale(const Elem& a, long long k) const {
    Elem r = a;
    for (auto& c : r) {
        __int128 v = static_cast<__int128>(c) * k;
        check64(v, "scale");
        c = static_cast<long long>(v);
    }
    return r;
}

bool NumberRing::is_zero(const Elem& a) const {
    for (long long c : a)
        if (c != 0) return false;
    return true;
}

}  // namespace rootoidlab
