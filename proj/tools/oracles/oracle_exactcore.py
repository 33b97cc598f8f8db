#!/usr/bin/env python3
"""Reference values for the exact-arithmetic core, computed independently
with the stdlib Fraction type and frozen into tests/test_exactcore.cpp."""
from fractions import Fraction


def series_mul(a, b, n):
    r = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j > n:
                break
            r[i + j] += ai * bj
    return r


def compose(f, g, n):
    # f(g(t)), g[0] == 0
    r = [Fraction(0)] * (n + 1)
    r[0] = f[0]
    p = [Fraction(0)] * (n + 1)
    p[0] = Fraction(1)
    for k in range(1, n + 1):
        p = series_mul(p, g, n)
        if f[k] == 0:
            continue
        for j in range(n + 1):
            r[j] += f[k] * p[j]
    return r


def reversion(f, n):
    g = [Fraction(0)] * (n + 1)
    g[1] = Fraction(1)
    for k in range(2, n + 1):
        fg = compose(f, g, n)
        g[k] -= fg[k]
    return g


def nu2(q):
    if q == 0:
        return None
    n = 0
    num, den = q.numerator, q.denominator
    while num % 2 == 0:
        num //= 2
        n += 1
    while den % 2 == 0:
        den //= 2
        n -= 1
    return n


if __name__ == "__main__":
    n = 8
    f = [Fraction(0)] * (n + 1)
    f[1] = Fraction(1)
    f[2] = Fraction(1)
    g = reversion(f, n)
    print("reversion of t + t^2:", [str(c) for c in g])
    check = compose(f, g, n)
    assert check[1] == 1 and all(c == 0 for i, c in enumerate(check) if i != 1)

    # reciprocal sanity: 1/(1 - t) = sum t^k
    one_minus_t = [Fraction(1), Fraction(-1)] + [Fraction(0)] * (n - 1)
    r = [Fraction(0)] * (n + 1)
    r[0] = Fraction(1)
    for k in range(1, n + 1):
        r[k] = -sum(one_minus_t[j] * r[k - j] for j in range(1, k + 1))
    print("reciprocal of 1 - t:", [str(c) for c in r])

    print("nu2(40320) =", nu2(Fraction(40320)))
    print("nu2(756)   =", nu2(Fraction(756)))
    print("nu2(5/24)  =", nu2(Fraction(5, 24)))
    print("alpha(7)   =", bin(7).count("1"))
    print("alpha(22)  =", bin(22).count("1"))
