#pragma once
#include <vector>

#include "coop/poly.hpp"
#include "coop/series.hpp"

namespace coop {

// Q[a1, a3] with weights 1 and 3, the coefficients of the curve
// y^2 + a1 x y + a3 y = x^3 (all other Weierstrass coefficients zero).
const PolyRing* curve_ring();

// Q[a1, a3, ab1, ab3]; ab* are the right-unit images of the curve parameters.
const PolyRing* cooperations_ring();

struct CurveParams {
    const PolyRing* ring;
    GradedPoly a1, a3;
};

CurveParams standard_curve();

// w(t) = t^3 + a1 t w + a3 w^2 solved iteratively, as a series in t.
TruncSeries1<GradedPoly> weierstrass_w(int order);

struct FGLSeries {
    int order = 0;
    TruncSeries2<GradedPoly> f;
};

// Group law of the curve in the chart t = -x/y, w = -1/y: the chord through
// (t1, w(t1)) and (t2, w(t2)) meets the curve in a third point t3 with
// t1 + t2 + t3 = -(a1 L + a3 L^2) for the slope L, and F(t1, t2) is the
// inverse -t3 / (1 - a1 t3 - a3 w(t3)).
FGLSeries formal_group_law(int order);

bool fgl_unital(const FGLSeries& f);
bool fgl_commutative(const FGLSeries& f);
// direct trivariate comparison of F(F(X,Y),Z) and F(X,F(Y,Z)) up to total
// degree `order`
bool fgl_associative(const FGLSeries& f, int order);

struct FGLLog {
    TruncSeries1<GradedPoly> series;  // log(X) = integral of dX / F_Y(X, 0)
    std::vector<GradedPoly> l;        // l[i] = coefficient of X^(2^i)
};

// throws std::invalid_argument when the group-law order cannot reach
// X^(2^n_max)
FGLLog fgl_log(const FGLSeries& f, int n_max);

// v images from 2 l_n = sum_{0 <= i < n} l_i v_{n-i}^{2^i}; result[n] pairs
// with l[n], result[0] is the constant 2.  Throws std::domain_error if an
// image fails to be 2-locally integral.
std::vector<GradedPoly> hazewinkel_images(const std::vector<GradedPoly>& l, int n_max);

// t images from eta_R(l_n) = sum_{0 <= i <= n} l_i t_{n-i}^{2^i} in
// Q[a1, a3, ab1, ab3], eta_R(a_i) = ab_i; result[0] is the constant 1.
std::vector<GradedPoly> t_images(const std::vector<GradedPoly>& l, int n_max);

struct BPImageTable {
    std::vector<GradedPoly> l;  // over curve_ring
    std::vector<GradedPoly> v;  // over curve_ring
    std::vector<GradedPoly> t;  // over cooperations_ring
};

BPImageTable bp_images(int n_max, int order);

struct AdamsLeading {
    bool finite = false;
    long af = 0;
    GradedPoly leading;  // minimal-filtration terms, coefficients replaced by +2^nu2
};

// filtration of a monomial c x^e is nu2(c) plus the plain exponent sum of e
AdamsLeading adams_leading(const GradedPoly& p);

}  // namespace coop
