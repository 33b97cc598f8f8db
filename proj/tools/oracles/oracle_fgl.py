"""Independent check values for the elliptic formal group law layer.

Everything is derived with sympy from the curve y^2 + a1 x y + a3 y = x^3
via the standard (t, w) = (-x/y, -1/y) chart: w(t) solved iteratively,
addition by the chord construction, log from the Y-linear part of F.
"""

import sympy as sp

a1, a3, b1, b3 = sp.symbols("a1 a3 b1 b3")
X, Y, Z, T = sp.symbols("X Y Z T")

NL = 16  # univariate X-order for the log
NF = 8   # bivariate total order for the group law


def trunc_t(p, n):
    return sum(c * T ** m[0] for m, c in sp.Poly(p, T).terms() if m[0] <= n)


def trunc2(p, n):
    out = 0
    for m, c in sp.Poly(p, X, Y).terms():
        if m[0] + m[1] <= n:
            out += c * X ** m[0] * Y ** m[1]
    return sp.expand(out)


def weierstrass_w(order):
    w = sp.S(0)
    for _ in range(order):
        w = trunc_t(sp.expand(T**3 + a1 * T * w + a3 * w * w), order)
    return sp.Poly(w, T).as_dict()


def group_law(order):
    wd = weierstrass_w(order + 2)
    wc = {m[0]: c for m, c in wd.items()}
    lam = 0
    for k, c in wc.items():
        for i in range(k):
            if i + (k - 1 - i) <= order:
                lam += c * X**i * Y ** (k - 1 - i)
    lam = trunc2(lam, order)
    t3 = trunc2(-(X + Y + a1 * lam + a3 * lam**2), order)
    # w(t3) via truncated powers
    p = 1
    powers = {0: sp.S(1)}
    for k in range(1, max(wc) + 1):
        p = trunc2(sp.expand(p * t3), order)
        powers[k] = p
        if p == 0:
            break
    wt3 = sum(c * powers.get(k, 0) for k, c in wc.items())
    u = trunc2(a1 * t3 + a3 * wt3, order)
    s = sp.S(1)
    for _ in range(order):
        s = trunc2(sp.expand(1 + u * s), order)
    return trunc2(sp.expand(-t3 * s), order)


def pair_mul(p, q, order):
    """multiplication in Q[a][X][Y]/(Y^2), X truncated"""
    def tx(r):
        return sum(c * X ** m[0] for m, c in sp.Poly(r, X).terms() if m[0] <= order) if r else sp.S(0)
    return (tx(sp.expand(p[0] * q[0])),
            tx(sp.expand(p[0] * q[1] + p[1] * q[0])))


def y_linear_group_law(order):
    """F mod Y^2, as (F0(X), F1(X))."""
    wd = weierstrass_w(order + 2)
    wc = {m[0]: c for m, c in wd.items()}
    lam = (sum(c * X ** (k - 1) for k, c in wc.items() if k - 1 <= order),
           sum(c * X ** (k - 2) for k, c in wc.items() if k >= 2 and k - 2 <= order))
    lam2 = pair_mul(lam, lam, order)
    t3 = (sp.expand(-(X + a1 * lam[0] + a3 * lam2[0])),
          sp.expand(-(1 + a1 * lam[1] + a3 * lam2[1])))
    powers = {0: (sp.S(1), sp.S(0)), 1: t3}
    for k in range(2, max(wc) + 1):
        powers[k] = pair_mul(powers[k - 1], t3, order)
    wt3 = (sum(c * powers[k][0] for k, c in wc.items() if k in powers),
           sum(c * powers[k][1] for k, c in wc.items() if k in powers))
    u = (sp.expand(a1 * t3[0] + a3 * wt3[0]), sp.expand(a1 * t3[1] + a3 * wt3[1]))
    s = (sp.S(1), sp.S(0))
    for _ in range(order + 1):
        s = pair_mul(u, s, order)
        s = (sp.expand(1 + s[0]), s[1])
    f = pair_mul(t3, s, order)
    return (sp.expand(-f[0]), sp.expand(-f[1]))


def fgl_log(order):
    _, g = y_linear_group_law(order)
    # log'(X) = 1/g, log = integral
    ginv = sp.S(1)
    gser = sp.Poly(g, X).as_dict()
    gc = {m[0]: c for m, c in gser.items()}
    assert gc.get(0) == 1
    inv = {0: sp.S(1)}
    for k in range(1, order + 1):
        inv[k] = sp.expand(-sum(gc.get(j, 0) * inv[k - j] for j in range(1, k + 1)))
    log = {k + 1: sp.nsimplify(inv[k] / (k + 1)) for k in range(order)}
    return {k: sp.expand(v) for k, v in log.items()}


def af(p, gens):
    best = None
    for m, c in sp.Poly(p, *gens).terms():
        v = sp.Rational(c)
        val = (v.p if v.p % 2 else None)
        nu = 0
        num, den = int(v.p), int(v.q)
        while num % 2 == 0:
            num //= 2
            nu += 1
        while den % 2 == 0:
            den //= 2
            nu -= 1
        a = nu + sum(m)
        if best is None or a < best:
            best = a
    return best


def af_leading(p, gens):
    terms = []
    best = af(p, gens)
    lead = 0
    for m, c in sp.Poly(p, *gens).terms():
        v = sp.Rational(c)
        nu = 0
        num, den = int(v.p), int(v.q)
        while num % 2 == 0:
            num //= 2
            nu += 1
        while den % 2 == 0:
            den //= 2
            nu -= 1
        if nu + sum(m) == best:
            lead += sp.Rational(2) ** nu * sp.prod(g ** e for g, e in zip(gens, m))
    return best, sp.expand(lead)


def main():
    F = group_law(NF)
    print("==== group law ====")
    disp = (X + Y - a1 * X * Y - 2 * a3 * X**3 * Y - 3 * a3 * X**2 * Y**2
            - 2 * a3 * X * Y**3 - 2 * a1 * a3 * X**4 * Y - a1 * a3 * X**3 * Y**2
            - a1 * a3 * X**2 * Y**3 - 2 * a1 * a3 * X * Y**4)
    print("degree<=5 display exact:", sp.expand(trunc2(F, 5) - disp) == 0)
    print("F(X,0) = X:", sp.expand(F.subs(Y, 0) - X) == 0)
    print("commutative to order %d:" % NF,
          sp.expand(F - F.subs({X: Y, Y: X}, simultaneous=True)) == 0)
    F6 = trunc2(F, 6)

    def trunc3(p, n):
        out = 0
        for m, c in sp.Poly(p, X, Y, Z).terms():
            if sum(m) <= n:
                out += c * X ** m[0] * Y ** m[1] * Z ** m[2]
        return out

    def powers3(p, kmax, n):
        out = {0: sp.S(1)}
        for k in range(1, kmax + 1):
            out[k] = trunc3(sp.expand(out[k - 1] * p), n)
        return out

    def subst6(outer, u, v):
        pu = powers3(u, 6, 6)
        pv = powers3(v, 6, 6)
        out = 0
        for m, c in sp.Poly(outer, X, Y).terms():
            out += c * pu[m[0]] * pv[m[1]]
        return trunc3(sp.expand(out), 6)

    lhs = subst6(F6, subst6(F6, X, Y), Z)
    rhs = subst6(F6, X, subst6(F6, Y, Z))
    print("associative to order 6:", sp.expand(lhs - rhs) == 0)

    print()
    print("==== log ====")
    log = fgl_log(NL)
    l = {0: sp.S(1), 1: log[2], 2: log[4], 3: log[8], 4: log[16]}
    print("l1 = a1/2:", sp.expand(l[1] - a1 / 2) == 0)
    print("l2 = (a1^3+2a3)/4:", sp.expand(l[2] - (a1**3 + 2 * a3) / 4) == 0)
    print("l3 = (a1^7+30a1^4a3+30a1a3^2)/8:",
          sp.expand(l[3] - (a1**7 + 30 * a1**4 * a3 + 30 * a1 * a3**2) / 8) == 0)
    print("l4 =", sp.nsimplify(l[4]))
    fpow = {1: F}
    for k in range(2, NF + 1):
        fpow[k] = trunc2(sp.expand(fpow[k - 1] * F), NF)
    logF = sum(c * fpow[k] for k, c in log.items() if k <= NF)
    logXY = sum(c * (X**k + Y**k) for k, c in log.items() if k <= NF)
    print("log F = log X + log Y to order %d:" % NF,
          sp.expand(trunc2(logF, NF) - logXY) == 0)

    print()
    print("==== hazewinkel images ====")
    v = {0: sp.S(2)}
    for n in range(1, 5):
        vn = 2 * l[n] - sum(l[i] * v[n - i] ** (2**i) for i in range(1, n))
        v[n] = sp.expand(vn)
    print("v1 = a1:", v[1] - a1 == 0)
    print("v2 = a3:", v[2] - a3 == 0)
    print("v3 = 7a1a3(a1^3+a3):", sp.expand(v[3] - 7 * a1 * a3 * (a1**3 + a3)) == 0)
    print("v4 =", v[4])
    for n in range(1, 5):
        intg = all(sp.Rational(c).q % 2 == 1 for c in sp.Poly(v[n], a1, a3).coeffs())
        print("v%d 2-integral: %s" % (n, intg))

    print()
    print("==== t images ====")
    lb = {n: p.subs({a1: b1, a3: b3}, simultaneous=True) for n, p in l.items()}
    t = {0: sp.S(1)}
    for n in range(1, 5):
        tn = lb[n] - l[n] - sum(l[i] * t[n - i] ** (2**i) for i in range(1, n))
        t[n] = sp.expand(tn)
    print("t1 = (b1-a1)/2:", sp.expand(t[1] - (b1 - a1) / 2) == 0)
    t2disp = sp.Rational(1, 8) * (4 * b3 + 2 * b1**3 - a1 * b1**2 + 2 * a1**2 * b1
                                  - 4 * a3 - 3 * a1**3)
    print("t2 display:", sp.expand(t[2] - t2disp) == 0)
    t3disp = sp.Rational(1, 128) * (
        480 * b1 * b3**2 - 16 * a1 * b3**2 + 480 * b1**4 * b3 - 16 * a1 * b1**3 * b3
        + 8 * a1**2 * b1**2 * b3 - 16 * a1**3 * b1 * b3 + 32 * a1 * a3 * b3
        + 24 * a1**4 * b3 + 16 * b1**7 - 4 * a1 * b1**6 + 4 * a1**2 * b1**5
        - 4 * a3 * b1**4 - 11 * a1**3 * b1**4 + 32 * a1 * a3 * b1**3
        + 24 * a1**4 * b1**3 - 32 * a1**2 * a3 * b1**2 - 22 * a1**5 * b1**2
        + 32 * a1**3 * a3 * b1 + 20 * a1**6 * b1 - 496 * a1 * a3**2
        - 508 * a1**4 * a3 - 27 * a1**7)
    print("t3 display (22 terms):", sp.expand(t[3] - t3disp) == 0)
    gens4 = (a1, a3, b1, b3)
    for n in range(1, 5):
        print("AF(t%d) = %d; counit kills: %s"
              % (n, af(t[n], gens4),
                 sp.expand(t[n].subs({b1: a1, b3: a3}, simultaneous=True)) == 0))
    print("t4 term count:", len(sp.Poly(t[4], gens4).terms()))

    print()
    print("==== adams leading ====")
    c4 = a1**4 - 24 * a1 * a3
    c6 = -a1**6 + 36 * a1**3 * a3 - 216 * a3**2
    Delta = sp.expand((a1**3 - 27 * a3) * a3**3)
    for name, p in [("c4", c4), ("c6", c6), ("Delta", Delta)]:
        v_, lead = af_leading(p, (a1, a3))
        print("%s: AF %d leading %s" % (name, v_, lead))


if __name__ == "__main__":
    main()
