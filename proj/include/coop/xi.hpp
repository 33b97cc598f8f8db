#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace coop {

// Monomial in the Milnor generators (either the xi_i or their conjugates,
// depending on context): e[k] is the exponent of generator k+1.
struct XiMon {
    std::vector<int> e;

    XiMon() = default;
    explicit XiMon(std::vector<int> exps);

    static XiMon one() { return XiMon{}; }
    static XiMon gen(int k, int exp = 1);

    long degree() const;  // sum e_k (2^k - 1)
    long weight() const;  // sum e_k 2^(k-1)
    int exp(int k) const; // exponent of generator k (1-based)
    bool is_one() const { return e.empty(); }

    XiMon operator*(const XiMon& o) const;
    XiMon pow2(int k) const;   // raise to the 2^k-th power
    XiMon shift_up() const;    // generator k -> k+1, exponents kept

    bool operator==(const XiMon& o) const { return e == o.e; }
    bool operator<(const XiMon& o) const;

    std::string str(const char* sym) const;
};

// F2 sums of monomials, kept sorted and duplicate-free.
using XiPoly = std::vector<XiMon>;
// F2 sums of elementary tensors, same invariant.
using XiTensor = std::vector<std::pair<XiMon, XiMon>>;

XiPoly poly_add(const XiPoly& p, const XiPoly& q);
XiPoly poly_mul(const XiPoly& p, const XiPoly& q);
XiPoly poly_pow(const XiPoly& p, long e);
std::string poly_str(const XiPoly& p, const char* sym);

XiTensor tensor_add(const XiTensor& s, const XiTensor& t);
XiTensor tensor_mul(const XiTensor& s, const XiTensor& t);

// Conjugate of the n-th generator, written in the xi basis.
XiPoly conjugate_xi(int n);

// A monomial in the conjugate generators, expanded in the xi basis.
XiPoly expand_xibar(const XiMon& m);

// Exponent cap of xi_k in A(n)_* (monomials with all exponents below their
// caps form the basis).  Zero for k > n+1.
int an_cap(int n, int k);
bool in_an(int n, const XiMon& m);
XiPoly clip_an(const XiPoly& p, int n);
std::vector<XiMon> an_basis(int n);

// Coproduct of a conjugate-basis monomial, both factors in the conjugate
// basis: on generators psi(g_n) = sum_{i+j=n} g_i (x) g_j^{2^i}.
XiTensor coproduct_xibar(const XiMon& m);

// Coproduct of an A(n)_* monomial in the xi basis, both factors clipped:
// on generators psi(xi_n) = sum_{i+j=n} xi_j^{2^i} (x) xi_i.
XiTensor coproduct_an(const XiMon& m, int n);

// Reduced A(n)_*-coaction of a conjugate-basis monomial: pairs
// (A(n)_* monomial in the xi basis, conjugate-basis monomial).
XiTensor coaction_an(const XiMon& m, int n);

} // namespace coop
