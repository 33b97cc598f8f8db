#include "coop/fgl.hpp"

#include <stdexcept>

namespace coop {

const PolyRing* curve_ring() {
    static const PolyRing ring{{"a1", "a3"}, {1, 3}};
    return &ring;
}

const PolyRing* cooperations_ring() {
    static const PolyRing ring{{"a1", "a3", "ab1", "ab3"}, {1, 3, 1, 3}};
    return &ring;
}

CurveParams standard_curve() {
    const PolyRing* r = curve_ring();
    return {r, GradedPoly::var(r, 0), GradedPoly::var(r, 1)};
}

TruncSeries1<GradedPoly> weierstrass_w(int order) {
    if (order < 3) throw std::invalid_argument("weierstrass_w: order < 3");
    CurveParams c = standard_curve();
    GradedPoly zero(c.ring);
    TruncSeries1<GradedPoly> w(static_cast<size_t>(order), zero);
    TruncSeries1<GradedPoly> cube(static_cast<size_t>(order), zero);
    cube.set(3, GradedPoly::constant(c.ring, 1));
    TruncSeries1<GradedPoly> shift(static_cast<size_t>(order), zero);
    shift.set(1, GradedPoly::constant(c.ring, 1));
    for (int k = 0; k < order; ++k)
        w = cube + (shift * w).scale(c.a1) + (w * w).scale(c.a3);
    return w;
}

FGLSeries formal_group_law(int order) {
    if (order < 2) throw std::invalid_argument("formal_group_law: order < 2");
    CurveParams c = standard_curve();
    GradedPoly zero(c.ring);
    GradedPoly one = GradedPoly::constant(c.ring, 1);
    size_t n = static_cast<size_t>(order);
    TruncSeries1<GradedPoly> w = weierstrass_w(order + 2);

    // chord slope as the divided difference of w: (X^k - Y^k)/(X - Y)
    TruncSeries2<GradedPoly> lam(n, zero);
    for (size_t k = 3; k <= w.order(); ++k) {
        if (w[k].is_zero()) continue;
        for (size_t i = 0; i + 1 <= k && i <= n; ++i) {
            size_t j = k - 1 - i;
            if (i + j > n) continue;
            lam.set(i, j, lam.at(i, j) + w[k]);
        }
    }

    TruncSeries2<GradedPoly> t3(n, zero);
    t3.set(1, 0, zero - one);
    t3.set(0, 1, zero - one);
    t3 = t3 - lam.scale(c.a1) - (lam * lam).scale(c.a3);

    TruncSeries2<GradedPoly> wt3 = compose1(w, t3, one);
    TruncSeries2<GradedPoly> u = t3.scale(c.a1) + wt3.scale(c.a3);
    TruncSeries2<GradedPoly> s(n, zero);
    s.set(0, 0, one);
    for (size_t k = 0; k < n; ++k) {
        s = u * s;
        s.set(0, 0, s.at(0, 0) + one);
    }
    TruncSeries2<GradedPoly> f = (t3 * s).scale(zero - one);
    return {order, f};
}

bool fgl_unital(const FGLSeries& f) {
    GradedPoly zero(curve_ring());
    GradedPoly one = GradedPoly::constant(curve_ring(), 1);
    for (size_t k = 0; k <= f.f.order(); ++k)
        if (!(f.f.at(k, 0) == (k == 1 ? one : zero))) return false;
    return true;
}

bool fgl_commutative(const FGLSeries& f) { return f.f == f.f.swap_vars(); }

namespace {

// dense trivariate polynomial truncated past total degree n, used only for
// the associativity comparison
struct Tri {
    size_t n;
    std::vector<GradedPoly> c;
    Tri(size_t order, const GradedPoly& zero)
        : n(order), c((order + 1) * (order + 1) * (order + 1), zero) {}
    size_t idx(size_t i, size_t j, size_t k) const { return (i * (n + 1) + j) * (n + 1) + k; }
    const GradedPoly& at(size_t i, size_t j, size_t k) const { return c[idx(i, j, k)]; }
    GradedPoly& at(size_t i, size_t j, size_t k) { return c[idx(i, j, k)]; }
};

Tri tri_mul(const Tri& a, const Tri& b, const GradedPoly& zero) {
    Tri r(a.n, zero);
    for (size_t i = 0; i <= a.n; ++i)
        for (size_t j = 0; i + j <= a.n; ++j)
            for (size_t k = 0; i + j + k <= a.n; ++k) {
                if (a.at(i, j, k).is_zero()) continue;
                for (size_t p = 0; i + j + k + p <= a.n; ++p)
                    for (size_t q = 0; i + j + k + p + q <= a.n; ++q)
                        for (size_t s = 0; i + j + k + p + q + s <= a.n; ++s)
                            r.at(i + p, j + q, k + s) +=
                                a.at(i, j, k) * b.at(p, q, s);
            }
    return r;
}

// F(g, h) for trivariate g, h with zero constant term
Tri tri_subst(const FGLSeries& f, const Tri& g, const Tri& h, size_t n,
              const GradedPoly& zero, const GradedPoly& one) {
    std::vector<Tri> gp, hp;
    Tri unit(n, zero);
    unit.at(0, 0, 0) = one;
    gp.push_back(unit);
    hp.push_back(unit);
    for (size_t k = 1; k <= n; ++k) {
        gp.push_back(tri_mul(gp.back(), g, zero));
        hp.push_back(tri_mul(hp.back(), h, zero));
    }
    Tri r(n, zero);
    for (size_t i = 0; i <= n && i <= f.f.order(); ++i)
        for (size_t j = 0; i + j <= n && i + j <= f.f.order(); ++j) {
            if (f.f.at(i, j).is_zero()) continue;
            Tri m = tri_mul(gp[i], hp[j], zero);
            for (size_t a = 0; a <= n; ++a)
                for (size_t b = 0; a + b <= n; ++b)
                    for (size_t c = 0; a + b + c <= n; ++c)
                        r.at(a, b, c) += f.f.at(i, j) * m.at(a, b, c);
        }
    return r;
}

}  // namespace

bool fgl_associative(const FGLSeries& f, int order) {
    if (order > f.order) throw std::invalid_argument("fgl_associative: order exceeds series");
    GradedPoly zero(curve_ring());
    GradedPoly one = GradedPoly::constant(curve_ring(), 1);
    size_t n = static_cast<size_t>(order);
    Tri x(n, zero), y(n, zero), z(n, zero);
    if (n >= 1) {
        x.at(1, 0, 0) = one;
        y.at(0, 1, 0) = one;
        z.at(0, 0, 1) = one;
    }
    Tri fxy = tri_subst(f, x, y, n, zero, one);
    Tri fyz = tri_subst(f, y, z, n, zero, one);
    Tri lhs = tri_subst(f, fxy, z, n, zero, one);
    Tri rhs = tri_subst(f, x, fyz, n, zero, one);
    return lhs.c == rhs.c;
}

FGLLog fgl_log(const FGLSeries& f, int n_max) {
    if (n_max < 0 || f.order < 2 || (1L << n_max) > static_cast<long>(f.order) - 1)
        throw std::invalid_argument("fgl_log: series order too small for requested l index");
    GradedPoly one = GradedPoly::constant(curve_ring(), 1);
    TruncSeries1<GradedPoly> g = f.f.y_linear_part();
    TruncSeries1<GradedPoly> log = integrate(g.reciprocal(one));
    FGLLog out{log, {}};
    for (int i = 0; i <= n_max; ++i) out.l.push_back(log[1UL << i]);
    return out;
}

std::vector<GradedPoly> hazewinkel_images(const std::vector<GradedPoly>& l, int n_max) {
    if (n_max + 1 > static_cast<int>(l.size()))
        throw std::invalid_argument("hazewinkel_images: l too short");
    std::vector<GradedPoly> v{GradedPoly::constant(curve_ring(), 2)};
    for (int n = 1; n <= n_max; ++n) {
        GradedPoly vn = l[static_cast<size_t>(n)] * Rat(2);
        for (int i = 1; i < n; ++i)
            vn = vn - l[static_cast<size_t>(i)] *
                          v[static_cast<size_t>(n - i)].pow(1UL << i);
        if (!vn.coeffs_2integral())
            throw std::domain_error("hazewinkel_images: image not 2-integral");
        v.push_back(vn);
    }
    return v;
}

std::vector<GradedPoly> t_images(const std::vector<GradedPoly>& l, int n_max) {
    if (n_max + 1 > static_cast<int>(l.size()))
        throw std::invalid_argument("t_images: l too short");
    const PolyRing* cr = cooperations_ring();
    std::vector<GradedPoly> left{GradedPoly::var(cr, 0), GradedPoly::var(cr, 1)};
    std::vector<GradedPoly> right{GradedPoly::var(cr, 2), GradedPoly::var(cr, 3)};
    std::vector<GradedPoly> t{GradedPoly::constant(cr, 1)};
    for (int n = 1; n <= n_max; ++n) {
        GradedPoly tn = l[static_cast<size_t>(n)].subst(right, cr) -
                        l[static_cast<size_t>(n)].subst(left, cr);
        for (int i = 1; i < n; ++i)
            tn = tn - l[static_cast<size_t>(i)].subst(left, cr) *
                          t[static_cast<size_t>(n - i)].pow(1UL << i);
        t.push_back(tn);
    }
    return t;
}

BPImageTable bp_images(int n_max, int order) {
    FGLSeries f = formal_group_law(order);
    FGLLog log = fgl_log(f, n_max);
    return {log.l, hazewinkel_images(log.l, n_max), t_images(log.l, n_max)};
}

namespace {

Rat pow2_rat(long k) {
    Int num = 1, den = 1;
    if (k >= 0)
        num <<= static_cast<unsigned long>(k);
    else
        den <<= static_cast<unsigned long>(-k);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

AdamsLeading adams_leading(const GradedPoly& p) {
    AdamsLeading out{false, 0, GradedPoly(p.ring())};
    if (p.is_zero()) return out;
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        long f = nu2(c);
        for (int x : e) f += x;
        if (first || f < best) {
            best = f;
            first = false;
        }
    }
    GradedPoly lead(p.ring());
    for (const auto& [e, c] : p.terms()) {
        long f = nu2(c);
        for (int x : e) f += x;
        if (f == best) lead += GradedPoly::monomial(p.ring(), e, pow2_rat(nu2(c)));
    }
    out.finite = true;
    out.af = best;
    out.leading = lead;
    return out;
}

}  // namespace coop
