#pragma once
#include <string>
#include <vector>

#include "coop/rat.hpp"

namespace coop {

// univariate polynomial over Q; the variable is w or w^2 depending on use
struct NumPolyQ {
    std::vector<Rat> c;  // c[k] = coefficient of x^k

    int degree() const;  // -1 for the zero polynomial
    Rat eval(const Rat& x) const;
    NumPolyQ operator+(const NumPolyQ& o) const;
    NumPolyQ operator-(const NumPolyQ& o) const;
    NumPolyQ operator*(const NumPolyQ& o) const;
    NumPolyQ scale(const Rat& s) const;
    bool operator==(const NumPolyQ& o) const;
};

// (w-1)(w-3)...(w-(2n-1)) / (2^n n!), the odd-points Mahler basis; takes the
// value C(k, n) at w = 2k+1
NumPolyQ g_basis(int n);

// (W-1)(W-9)...(W-9^(n-1)) / ((9^n-1)(9^n-9)...(9^n-9^(n-1))) in W = w^2,
// the 9-Mahler basis on the domain 2Z_2
NumPolyQ f9_basis(int n);

// f9_basis(n) rewritten as a polynomial in w itself (degree 2n)
NumPolyQ f9_as_w_poly(int n);

Int f9_denominator(int n);  // prod_{i<n} (9^n - 9^i)

enum class BasisKind { g, f9 };

// alpha(n) - 2n for g, alpha(n) - 4n for f9
long af_of_basis(BasisKind kind, int n);

// coefficients c_i with p(w) = sum c_i g_i(w), via finite differences of
// k -> p(2k+1)
std::vector<Rat> mahler_expand(const NumPolyQ& p);

// g-basis expansion of f_n(w^2); index i holds the g_i coefficient
std::vector<Rat> expand_in_g(int n);

enum class GenFamily { bu, bo_free, bo_v0, bo_eta };

// one lattice generator: 2^two_power u^m g_n (bu) or
// 2^two_power u^(2m) f_n eta^eta_power (bo families); for hz_image rows
// two_power records the v0-exponent instead
struct LatticeGenerator {
    GenFamily family;
    int n = 0;
    int m = 0;
    int two_power = 0;
    int eta_power = 0;

    long stem() const;
    bool operator==(const LatticeGenerator& o) const;
};

// free-module generators of the K-theoretic cooperations lattice with stem
// in [stem_lo, stem_hi]; theory is "bu" or "bo"
std::vector<LatticeGenerator> lattice(const std::string& theory, long stem_lo, long stem_hi);

// generator families of the image of the j-th integral Brown-Gitler summand,
// with v0-powers in two_power; the m = j row is the b_j class
// 2^(2j-alpha(j)) u^(2j) f_j
std::vector<LatticeGenerator> hz_image(int j, long stem_lo, long stem_hi);

struct EvalMatrix {
    int j_max = 0;
    int k_max = 0;
    std::vector<std::vector<Rat>> entry;  // entry[j][k] = f_j(9^k)
    bool triangular = false;              // 0 below the diagonal, 1 on it
};

EvalMatrix eval_matrix(int j_max, int k_max);

}  // namespace coop
