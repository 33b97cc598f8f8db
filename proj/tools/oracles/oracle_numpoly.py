"""Check values for the numerical-polynomial layer, from first principles
with Fraction arithmetic: Mahler bases, Adams filtrations, lattice families,
evaluation matrix."""

from fractions import Fraction
from math import comb, factorial


def nu2(q):
    if q == 0:
        return None
    n, d = q.numerator, q.denominator
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    while d % 2 == 0:
        d //= 2
        v -= 1
    return v


def alpha(n):
    return bin(n).count("1")


def poly_mul(p, q):
    r = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            r[i + j] += a * b
    return r


def poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def g_basis(n):
    p = [Fraction(1)]
    for i in range(n):
        p = poly_mul(p, [Fraction(-(2 * i + 1)), Fraction(1)])
    den = Fraction(2**n * factorial(n))
    return [c / den for c in p]


def f9_basis(n):
    """polynomial in W = w^2"""
    p = [Fraction(1)]
    den = 1
    for i in range(n):
        p = poly_mul(p, [Fraction(-(9**i)), Fraction(1)])
        den *= 9**n - 9**i
    return [c / den for c in p]


def w_poly_of_f9(n):
    f = f9_basis(n)
    out = [Fraction(0)] * (2 * len(f) - 1) if f else []
    for i, c in enumerate(f):
        out[2 * i] = c
    return out


def mahler_expand(p):
    """p(w) = sum c_i g_i(w); c_i by finite differences of k -> p(2k+1)."""
    d = len(p) - 1
    vals = [poly_eval(p, 2 * k + 1) for k in range(d + 1)]
    return [sum((-1) ** (i - k) * comb(i, k) * vals[k] for k in range(i + 1))
            for i in range(d + 1)]


def main():
    print("==== AF table ====")
    print("AF(g_n), n=0..8:", [alpha(n) - 2 * n for n in range(9)])
    print("AF(f_n), n=0..4:", [alpha(n) - 4 * n for n in range(5)])

    print()
    print("==== f_n in g basis ====")
    for n in range(4):
        c = mahler_expand(w_poly_of_f9(n))
        nz = {i: v for i, v in enumerate(c) if v != 0}
        print("f_%d:" % n, nz)
        # roundtrip
        acc = [Fraction(0)] * len(c)
        for i, v in enumerate(c):
            gi = g_basis(i)
            for k, gc in enumerate(gi):
                acc[k] += v * gc
        target = w_poly_of_f9(n) + [Fraction(0)] * (len(acc) - len(w_poly_of_f9(n)))
        print("  roundtrip exact:", acc == target,
              " coeffs 2-integral:", all(nu2(v) is None or nu2(v) >= 0 for v in c))

    print()
    print("==== denominators ====")
    ok = True
    for n in range(1, 17):
        den = 1
        for i in range(n):
            den *= 9**n - 9**i
        v = 0
        while den % 2 == 0:
            den //= 2
            v += 1
        if v != 4 * n - alpha(n):
            ok = False
            print("  mismatch at n=%d: %d vs %d" % (n, v, 4 * n - alpha(n)))
    print("nu2(prod (9^n - 9^i)) == 4n - alpha(n) for n<=16:", ok)

    print()
    print("==== eval matrix f_j(9^k), j,k <= 6 ====")
    tri = True
    for j in range(7):
        f = f9_basis(j)
        for k in range(7):
            val = poly_eval(f, Fraction(9**k))
            if k < j and val != 0:
                tri = False
            if k == j and val != 1:
                tri = False
    print("triangularity (0 below, 1 on diagonal):", tri)
    f2 = f9_basis(2)
    v23 = poly_eval(f2, Fraction(9**3))
    print("f_2(9^3) =", v23, " nu2 =", nu2(v23))
    f3 = f9_basis(3)
    v34 = poly_eval(f3, Fraction(9**4))
    print("f_3(9^4) =", v34, " nu2 =", nu2(v34))

    print()
    print("==== 2-integrality sampling ====")
    oddok = all(nu2(poly_eval(g_basis(n), 2 * k + 1)) in (None,) or
                nu2(poly_eval(g_basis(n), 2 * k + 1)) >= 0
                for n in range(9) for k in range(-6, 7))
    print("g_n(odd) in Z_(2) for n<=8, w=2k+1, k in [-6,6]:", oddok)
    fok = all(nu2(poly_eval(f9_basis(n), Fraction(9) ** k)) in (None,) or
              nu2(poly_eval(f9_basis(n), Fraction(9) ** k)) >= 0
              for n in range(7) for k in range(-6, 7))
    print("f_n(9^k) in Z_(2) for n<=6, k in [-6,6]:", fok)

    print()
    print("==== lattice spot checks ====")
    print("bu (2,2) two-power:", max(0, 2 * 2 - 2 - alpha(2)))
    print("bo-free (2,2) two-power:", max(0, 4 * 2 - 2 * 2 - alpha(2)))
    print("bo-v0 (2,3) total 2-power:", max(0, 4 * 2 - 2 * 3 - 1 - alpha(2)) + 1)
    print("b_j v0-powers j=0..6:", [2 * j - alpha(j) for j in range(7)])

    print()
    print("==== leading-term congruence ====")
    for j in range(1, 7):
        f = f9_basis(j)
        lhs = [c * 4**j * 2 ** (2 * j - alpha(j)) for c in f]
        rhs = poly_mul([Fraction(-1), Fraction(1)] if j else [Fraction(1)],
                       [Fraction(1)])
        rhs = [Fraction(1)]
        for _ in range(j):
            rhs = poly_mul(rhs, [Fraction(-1), Fraction(1)])
        rhs = rhs + [Fraction(0)] * (len(lhs) - len(rhs))
        diff = [a - b for a, b in zip(lhs, rhs)]
        mn = min((nu2(c) for c in diff if c != 0), default=None)
        print("j=%d: min nu2(4^j 2^{2j-a(j)} f_j - (W-1)^j) = %s (>0: %s)"
              % (j, mn, mn is None or mn > 0))

    print()
    print("==== hz_image families, j=1, stems <= 12 ====")
    rows = []
    j = 1
    for m in range(j, 7):
        if m % 2 == 0:
            rows.append((4 * m, "free", m, max(0, 4 * j - 2 * m - alpha(j))))
            for c in (1, 2):
                if alpha(j) - 4 * j + 2 * m + c >= 0:
                    rows.append((4 * m + c, "eta%d" % c, m, 0))
        else:
            rows.append((4 * m, "v0", m, max(0, 4 * j - 2 * m - 1 - alpha(j)) + 1))
    for r in sorted(rows):
        if r[0] <= 12:
            print(" stem %2d  %-5s m=%d  pow=%d" % r)


if __name__ == "__main__":
    main()
