#!/usr/bin/env python3
"""Independent oracle for the dual-Steenrod / Brown-Gitler layer.

Computes, with a standalone implementation:
  * conjugates of the Milnor generators in the xi basis,
  * coproducts in the conjugate basis and reduced coactions over A(n)_*,
  * Brown-Gitler basis sizes at levels -1..2,
  * dimension bookkeeping for the two families of short exact sequences,
  * the weight-split partition of (A//A(2))_* through degree 64,
  * the rational-generator table for the weight-8j summands, j <= 8.

Prints a report whose values the C++ tests freeze.
"""

# ---------- F2 polynomials in xi_1, xi_2, ... (exponent tuples) ----------

def mon_mul(a, b):
    n = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                 for i in range(n))

def trim(m):
    m = tuple(m)
    while m and m[-1] == 0:
        m = m[:-1]
    return m

def poly_mul(p, q):
    out = set()
    for a in p:
        for b in q:
            out ^= {trim(mon_mul(a, b))}
    return out

ONE = frozenset({()})

def poly_pow(p, e):
    r = set(ONE)
    b = set(p)
    while e:
        if e & 1:
            r = poly_mul(r, b)
        b = poly_mul(b, b)
        e >>= 1
    return r

def xi(n):
    e = [0] * n
    e[n - 1] = 1
    return {tuple(e)}

def mon_deg(m):
    return sum(e * (2 ** (i + 1) - 1) for i, e in enumerate(m))

def mon_wt(m):
    return sum(e * 2 ** i for i, e in enumerate(m))

def mon_str(m, sym):
    if not any(m):
        return "1"
    return " ".join(f"{sym}{i+1}^{e}" if e != 1 else f"{sym}{i+1}"
                    for i, e in enumerate(m) if e)

def poly_str(p, sym):
    if not p:
        return "0"
    mons = sorted(p, key=lambda m: (mon_deg(m), m))
    return " + ".join(mon_str(m, sym) for m in mons)

# ---------- conjugation ----------

_conj_cache = {}

def conj(n):
    """xibar_n in the xi basis."""
    if n == 0:
        return set(ONE)
    if n not in _conj_cache:
        acc = set(xi(n))
        for i in range(1, n):
            acc ^= poly_mul(poly_pow(xi(i), 2 ** (n - i)), conj(n - i))
        _conj_cache[n] = acc
    return set(_conj_cache[n])

def xibar_mon_in_xi(m):
    acc = set(ONE)
    for i, e in enumerate(m):
        if e:
            acc = poly_mul(acc, poly_pow(conj(i + 1), e))
    return acc

# ---------- A(n)_* clipping ----------

def an_cap(n, k):
    if k > n + 1:
        return 0
    return 2 ** (n + 2 - k)

def clip_an(p, n):
    out = set()
    for m in p:
        if all(e < an_cap(n, i + 1) for i, e in enumerate(m)):
            out ^= {m}
    return out

# ---------- coproduct in the conjugate basis ----------

def copro_gen(k):
    """psi(xibar_k) = sum_{i+j=k} xibar_i (x) xibar_j^{2^i}."""
    out = set()
    for i in range(k + 1):
        j = k - i
        left = [0] * i
        if i:
            left[i - 1] = 1
        right = [0] * j
        if j:
            right[j - 1] = 2 ** i
        out.add((trim(left), trim(right)))
    return out

def tensor_mul(s, t):
    out = set()
    for (a, b) in s:
        for (c, d) in t:
            out ^= {(trim(mon_mul(a, c)), trim(mon_mul(b, d)))}
    return out

def tensor_pow2(s, k):
    return {(trim(tuple(e * 2 ** k for e in a)),
             trim(tuple(e * 2 ** k for e in b))) for (a, b) in s}

def copro_xibar_mon(m):
    acc = {((), ())}
    for idx, e in enumerate(m):
        k = idx + 1
        bit = 0
        while e:
            if e & 1:
                acc = tensor_mul(acc, tensor_pow2(copro_gen(k), bit))
            e >>= 1
            bit += 1
    return acc

def coaction(m, n):
    """reduced A(n)_*-coaction of a xibar monomial: right-mon -> xi poly."""
    out = {}
    for (l, r) in copro_xibar_mon(m):
        lp = clip_an(xibar_mon_in_xi(l), n)
        if lp:
            cur = out.get(r, set())
            cur ^= lp
            out[r] = cur
    return {r: p for r, p in out.items() if p}

# ---------- Brown-Gitler bases ----------

def bg_cap(i, k):
    return 2 ** max(i + 2 - k, 0)

def bg_basis(i, j, maxdeg=None):
    """monomials of weight <= 2^(i+1)*j in (A//A(i))_*, sorted by degree."""
    bound = 2 ** (i + 1) * j
    steps = []
    k = 1
    while bg_cap(i, k) * 2 ** (k - 1) <= bound:
        steps.append((k, bg_cap(i, k)))
        k += 1
    out = [()]

    def grow(kmin, wt, cur):
        for (k, cap) in steps:
            if k < kmin:
                continue
            e = cap
            while wt + e * 2 ** (k - 1) <= bound:
                m = list(cur) + [0] * max(0, k - len(cur))
                m[k - 1] = e
                mm = trim(m)
                if maxdeg is None or mon_deg(mm) <= maxdeg:
                    out.append(mm)
                    grow(k + 1, wt + e * 2 ** (k - 1), mm)
                e += cap

    grow(1, 0, ())
    return sorted(set(out), key=lambda m: (mon_deg(m), m))

def dims_by_deg(mons, shift=0):
    d = {}
    for m in mons:
        d[mon_deg(m) + shift] = d.get(mon_deg(m) + shift, 0) + 1
    return d

def tensor_dims(d1, d2):
    d = {}
    for a, x in d1.items():
        for b, y in d2.items():
            d[a + b] = d.get(a + b, 0) + x * y
    return d

# ---------- rational generator table ----------

def shift_mon(m):
    return trim((0,) + tuple(m))

def fam_pairs(j, odd):
    out = []
    for t in range(0, j):
        for i2 in range(0, t + 1):
            i1 = t - i2
            a = (16 * j + (8 if odd else 0)) - 16 * t
            out.append((trim((a, 8 * i1, 4 * i2)),
                        trim((a - 8, 8 * i1 + 4, 4 * i2))))
    return out

def markers(j):
    return [trim((8, 8 * (j - 1 - i2) + 4, 4 * i2)) for i2 in range(0, j)]

_struct_cache = {}

def rows_struct(n):
    """rows of the summand S^{8n} bo_n: (susp, base, pow1, mk, gens),
    gens = [(is_marker, xibar-mon)]."""
    if n in _struct_cache:
        return _struct_cache[n]
    rows = []
    if n == 0:
        rows = [(0, "F2", 0, False, [(False, ())])]
    elif n % 2 == 0:
        j = n // 2
        rows.append((16 * j, f"A21xTMF{j-1}", 0, False,
                     [(False, x) for p in fam_pairs(j, False) for x in p]))
        for (s, b, pw, mk, gs) in rows_struct(j):
            rows.append((s + 8 * n, b, pw, mk,
                         [(im, shift_mon(m)) for (im, m) in gs]))
        mks = markers(j)
        rows.append((mon_deg(mks[0]) + 12, f"BO{j-1}", 0, True,
                     [(True, m) for m in mks]))
    else:
        j = n // 2
        if j >= 1:
            rows.append((16 * j + 8, f"A21xTMF{j-1}", 0, False,
                         [(False, x) for p in fam_pairs(j, True) for x in p]))
        for (s, b, pw, mk, gs) in rows_struct(j):
            gs2 = [(im, trim(mon_mul(shift_mon(m), bm)))
                   for (im, m) in gs for bm in [(8,), (0, 4)]]
            rows.append((s + 8 * n, b, pw + 1, mk, gs2))
    _struct_cache[n] = rows
    return rows

def row_label(base, pw, mk):
    if base.startswith("A21"):
        k = int(base[7:])
        s = "(A(2)//A(1))" + (f" (x) tmf_{k}" if k > 0 else "")
    elif base.startswith("BO"):
        k = int(base[2:])
        s = f"bo_{k}" if k > 0 else "F2"
    else:
        s = base
    if pw:
        t = f"bo_1^{pw}" if pw > 1 else "bo_1"
        s = t if s == "F2" else f"{s} (x) {t}"
    if mk:
        s += "[1]"
    return s

def rational_rows(n):
    out = []
    for (s, b, pw, mk, gs) in rows_struct(n):
        gens = [f"v0^-4 [c6] {mon_str(m,'xb')} + ..." if im else
                mon_str(m, "xb") for (im, m) in gs]
        out.append((s, row_label(b, pw, mk), gens))
    return out

# ---------- report ----------

def main():
    print("== conjugates (xi basis) ==")
    for n in range(1, 6):
        print(f"xibar_{n} = {poly_str(conj(n), 'x')}")

    print("\n== coproduct spot checks (xibar basis) ==")
    for m in [(0, 1), (0, 2)]:
        terms = sorted(copro_xibar_mon(m), key=lambda ab: (ab[0], ab[1]))
        print(f"psi({mon_str(m,'xb')}) =",
              " + ".join(f"({mon_str(a,'xb')})(x)({mon_str(b,'xb')})"
                         for a, b in terms))

    print("\n== coactions ==")
    for (mon, lvl) in [((0, 4), 2), ((0, 0, 12), 2), ((2,), 1), ((4,), 1)]:
        ca = coaction(mon, lvl)
        items = sorted(ca.items(), key=lambda kv: (mon_deg(kv[0]), kv[0]))
        s = "; ".join(f"[{poly_str(p,'x')}] (x) {mon_str(r,'xb')}"
                      for r, p in items)
        print(f"coaction_A({lvl}) of {mon_str(mon,'xb')}: {s}")

    print("\n== Brown-Gitler basis sizes ==")
    for i, name, rng in [(-1, "bg", range(0, 9)), (0, "hz", range(0, 7)),
                         (1, "bo", range(0, 9)), (2, "tmf", range(0, 4))]:
        print(f"level {i} ({name}):",
              [len(bg_basis(i, j)) for j in rng])

    print("\n== SES dimension bookkeeping ==")
    a10_dims = {0: 1, 2: 1, 3: 1, 5: 1}
    a21_dims = {0: 1, 4: 1, 6: 1, 7: 1, 10: 1, 11: 1, 13: 1, 17: 1}
    hz1_dims = {0: 1, 2: 1, 3: 1}
    ok = True
    for j in range(1, 5):
        lhs = dims_by_deg(bg_basis(0, 2 * j))
        rhs = dims_by_deg(bg_basis(0, j), 4 * j)
        rhs2 = tensor_dims(dims_by_deg(bg_basis(1, j - 1)), a10_dims)
        for d in set(lhs) | set(rhs) | set(rhs2):
            if lhs.get(d, 0) != rhs.get(d, 0) + rhs2.get(d, 0):
                ok = False
        lhs = dims_by_deg(bg_basis(0, 2 * j + 1))
        rhs = tensor_dims(dims_by_deg(bg_basis(0, j), 4 * j), hz1_dims)
        for d in set(lhs) | set(rhs) | set(rhs2):
            if lhs.get(d, 0) != rhs.get(d, 0) + rhs2.get(d, 0):
                ok = False
    print("hz family dims (j<=4):", "ok" if ok else "MISMATCH")
    ok = True
    for j in range(1, 4):
        lhs = dims_by_deg(bg_basis(1, 2 * j))
        s = dims_by_deg(bg_basis(1, j), 8 * j)
        q = tensor_dims(a21_dims, dims_by_deg(bg_basis(2, j - 1)))
        c = dims_by_deg(bg_basis(1, j - 1), 8 * j + 9)
        for d in set(lhs) | set(s) | set(q) | set(c):
            if lhs.get(d, 0) - s.get(d, 0) - q.get(d, 0) + c.get(d, 0) != 0:
                ok = False
        lhs = dims_by_deg(bg_basis(1, 2 * j + 1))
        s = tensor_dims(dims_by_deg(bg_basis(1, j), 8 * j),
                        dims_by_deg(bg_basis(1, 1)))
        for d in set(lhs) | set(s) | set(q):
            if lhs.get(d, 0) != s.get(d, 0) + q.get(d, 0):
                ok = False
    print("bo family dims (j<=3):", "ok" if ok else "MISMATCH")

    print("\n== weight-split partition through degree 64 ==")
    full = bg_basis(2, 8, maxdeg=64)
    counts = {}
    for m in full:
        counts[mon_wt(m) // 8] = counts.get(mon_wt(m) // 8, 0) + 1
    ok = True
    total = 0
    for j, c in sorted(counts.items()):
        src = [m for m in bg_basis(1, j) if mon_deg(m) + 8 * j <= 64]
        if len(src) != c:
            ok = False
        total += len(src)
    print("partition:", "ok" if ok and total == len(full) else "MISMATCH",
          f"(total {len(full)} monomials, summands j=0..{max(counts)})")
    print("per-degree dims:", sorted(dims_by_deg(full).items()))

    print("\n== rational generator table ==")
    for n in range(0, 9):
        for (susp, label, gens) in rational_rows(n):
            print(f"bo_{n} | S^{susp} {label}: {', '.join(gens)}")

if __name__ == "__main__":
    main()
