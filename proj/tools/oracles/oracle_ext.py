#!/usr/bin/env python3
"""Independent oracle for the Ext engines.

Builds A(0), A(1), A(2) two ways (Milnor-matrix products vs the transpose of
the coproduct), runs a minimal-resolution engine with h_i product read-off and
a v0-tower census, runs a reduced cobar complex on small windows, and checks
the two explicit cobar cocycles.  Values printed here are frozen into
tests/test_extengine.cpp.
"""

import os
import sys
from itertools import product as iproduct

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import oracle_xi as ox

# ---------- Milnor products ----------

def milnor_basis(n):
    caps = [ox.an_cap(n, k) for k in range(1, n + 2)]
    mons = [ox.trim(e) for e in iproduct(*(range(c) for c in caps))]
    mons.sort(key=lambda m: (ox.mon_deg(m), m))
    return mons

def odd_multinomial(parts):
    s = 0
    o = 0
    for p in parts:
        s += p
        o |= p
    return s == o

def milnor_product(R, S):
    """Milnor-matrix product: set of T with Sq(T) appearing in Sq(R)Sq(S)."""
    R = ox.trim(R)
    S = ox.trim(S)
    rows, cols = len(R), len(S)
    out = set()
    X = [[0] * (cols + 1) for _ in range(rows + 1)]
    colsum = [0] * (cols + 1)
    rowleft = [0] * (rows + 1)

    def close():
        N = rows + cols
        tn = []
        for nn in range(1, N + 1):
            parts = []
            if nn <= rows:
                parts.append(rowleft[nn])
            if nn <= cols:
                parts.append(S[nn - 1] - colsum[nn])
            for i2 in range(max(1, nn - cols), min(rows, nn - 1) + 1):
                parts.append(X[i2][nn - i2])
            if not odd_multinomial(parts):
                return
            tn.append(sum(parts))
        out.symmetric_difference_update({ox.trim(tuple(tn))})

    def rec(i):
        if i > rows:
            close()
            return

        def recrow(j, rem):
            if j > cols:
                rowleft[i] = rem
                rec(i + 1)
                return
            top = min(rem >> j, S[j - 1] - colsum[j])
            for x in range(top + 1):
                X[i][j] = x
                colsum[j] += x
                recrow(j + 1, rem - (x << j))
                colsum[j] -= x
            X[i][j] = 0

        recrow(1, R[i - 1])

    rec(1)
    return out

def copro_xi_gen(k):
    """psi(xi_k) = sum_{i+j=k} xi_j^{2^i} (x) xi_i."""
    out = set()
    for i in range(k + 1):
        j = k - i
        left = ox.trim((0,) * (j - 1) + (2 ** i,)) if j else ()
        right = ox.trim((0,) * (i - 1) + (1,)) if i else ()
        out.add((left, right))
    return out

def copro_xi_mon(m, n):
    acc = {((), ())}
    for idx, e in enumerate(m):
        k = idx + 1
        bit = 0
        while e:
            if e & 1:
                acc = ox.tensor_mul(acc, ox.tensor_pow2(copro_xi_gen(k), bit))
            e >>= 1
            bit += 1
    fits = lambda w: all(x < ox.an_cap(n, i + 1) for i, x in enumerate(w))
    return {(l, r) for (l, r) in acc if fits(l) and fits(r)}

class Algebra:
    """A(n) with Milnor basis; mult table from the Milnor-matrix formula."""

    def __init__(self, n):
        self.n = n
        self.basis = milnor_basis(n)
        self.idx = {m: i for i, m in enumerate(self.basis)}
        self.deg = [ox.mon_deg(m) for m in self.basis]
        self.mult = {}
        for a, A in enumerate(self.basis):
            for b, B in enumerate(self.basis):
                terms = milnor_product(A, B)
                assert all(t in self.idx for t in terms), (A, B, terms)
                self.mult[(a, b)] = tuple(sorted(self.idx[t] for t in terms))

    def dual_table(self):
        """The same table from the transpose of the coproduct."""
        tab = {}
        for e, E in enumerate(self.basis):
            for (l, r) in copro_xi_mon(E, self.n):
                key = (self.idx[l], self.idx[r])
                tab.setdefault(key, set()).symmetric_difference_update({e})
        return {k: tuple(sorted(v)) for k, v in tab.items() if v}

    def associative(self):
        d = self.dim()
        for a in range(d):
            for b in range(d):
                ab = self.mult[(a, b)]
                for c in range(d):
                    l = set()
                    for x in ab:
                        l.symmetric_difference_update(self.mult[(x, c)])
                    r = set()
                    for y in self.mult[(b, c)]:
                        r.symmetric_difference_update(self.mult[(a, y)])
                    if l != r:
                        return False
        return True

    def dim(self):
        return len(self.basis)

def sq_str(m):
    return "Sq(" + ",".join(str(e) for e in m) + ")" if m else "Sq()"

# ---------- modules ----------

class Module:
    """Finite module over Algebra: act[a][i] = bitmask of e_a . m_i."""

    def __init__(self, alg, degs, act):
        self.alg = alg
        self.deg = degs
        self.act = act

    def dim(self):
        return len(self.deg)

def dual_of_comodule(alg, mons, susp=0):
    """Dual of the subcomodule of (A//A(?))_* spanned by mons, over A(n)."""
    n = alg.n
    idx = {m: i for i, m in enumerate(mons)}
    d = len(mons)
    rho = [[0] * d for _ in range(alg.dim())]
    for i, m in enumerate(mons):
        for r, lp in ox.coaction(m, n).items():
            assert r in idx, (m, r)
            for a in lp:
                rho[alg.idx[a]][i] ^= 1 << idx[r]
    act = []
    for a in range(alg.dim()):
        cols = [0] * d
        for i in range(d):
            mask = rho[a][i]
            while mask:
                j = (mask & -mask).bit_length() - 1
                cols[j] |= 1 << i
                mask &= mask - 1
        act.append(cols)
    return Module(alg, [susp + ox.mon_deg(m) for m in mons], act)

def module_axioms(mod):
    alg = mod.alg
    d = mod.dim()
    for i in range(d):
        if mod.act[0][i] != 1 << i:
            return False
    for a in range(alg.dim()):
        for b in range(alg.dim()):
            for i in range(d):
                lhs = 0
                m = mod.act[b][i]
                while m:
                    j = (m & -m).bit_length() - 1
                    lhs ^= mod.act[a][j]
                    m &= m - 1
                rhs = 0
                for c in mod.mult_ab(a, b):
                    rhs ^= mod.act[c][i]
                if lhs != rhs:
                    return False
    return True

Module.mult_ab = lambda self, a, b: self.alg.mult[(a, b)]

# ---------- minimal resolution ----------

def gauss_pivots(vectors):
    """Reduce vectors to echelon form; returns dict pivot -> vector."""
    piv = {}
    for v in vectors:
        v = reduce_vec(v, piv)
        if v:
            piv[v.bit_length() - 1] = v
    return piv

def reduce_vec(v, piv):
    while v:
        p = v.bit_length() - 1
        if p in piv:
            v ^= piv[p]
        else:
            break
    return v

class Resolution:
    def __init__(self, alg, mod, s_max, t_max):
        self.alg = alg
        self.mod = mod
        self.s_max = s_max
        self.t_max = t_max
        self.gen_deg = [[] for _ in range(s_max + 1)]   # [s] -> degree list
        self.dvec = [[] for _ in range(s_max + 1)]      # [s][k] mask
        # free module bases: fbasis[s] = list of (k, a); findex, fby_deg
        self.fbasis = [[] for _ in range(s_max + 1)]
        self.findex = [{} for _ in range(s_max + 1)]
        self.fby_deg = [{} for _ in range(s_max + 1)]
        self.run()

    def add_gen(self, s, t, vec):
        k = len(self.gen_deg[s])
        self.gen_deg[s].append(t)
        self.dvec[s].append(vec)
        for a in range(self.alg.dim()):
            d = t + self.alg.deg[a]
            if d > self.t_max:
                continue
            gi = len(self.fbasis[s])
            self.fbasis[s].append((k, a))
            self.findex[s][(k, a)] = gi
            self.fby_deg[s].setdefault(d, []).append(gi)

    def image_of(self, s, k, a):
        """d_s(e_a . g_k) as a mask over level s-1 (or module for s=0)."""
        base = self.dvec[s][k]
        if a == 0:
            return base
        out = 0
        if s == 0:
            while base:
                i = (base & -base).bit_length() - 1
                out ^= self.mod.act[a][i]
                base &= base - 1
        else:
            while base:
                gi = (base & -base).bit_length() - 1
                k2, a2 = self.fbasis[s - 1][gi]
                for c in self.alg.mult[(a, a2)]:
                    key = (k2, c)
                    out ^= 1 << self.findex[s - 1][key]
                base &= base - 1
        return out

    def run(self):
        mod_by_deg = {}
        for i, d in enumerate(self.mod.deg):
            mod_by_deg.setdefault(d, []).append(i)
        for t in range(self.t_max + 1):
            for s in range(self.s_max + 1):
                if s == 0:
                    kernel = [1 << i for i in mod_by_deg.get(t, [])]
                else:
                    rows = []
                    for gi in self.fby_deg[s - 1].get(t, []):
                        k, a = self.fbasis[s - 1][gi]
                        rows.append((1 << gi, self.image_of(s - 1, k, a)))
                    # kernel of d_{s-1} at degree t, tags carried through
                    piv = {}
                    kernel = []
                    for tag, img in rows:
                        while img:
                            p = img.bit_length() - 1
                            if p in piv:
                                t2, i2 = piv[p]
                                tag ^= t2
                                img ^= i2
                            else:
                                break
                        if img:
                            piv[img.bit_length() - 1] = (tag, img)
                        else:
                            kernel.append(tag)
                span = gauss_pivots(
                    self.image_of(s, k, a) << 0
                    for gi in self.fby_deg[s].get(t, [])
                    for (k, a) in [self.fbasis[s][gi]]
                    if a != 0)
                for vec in kernel:
                    vec = reduce_vec(vec, span)
                    if vec:
                        if s > 0:
                            assert all(self.fbasis[s - 1][b][1] != 0
                                       for b in bits(vec)), "not minimal"
                        self.add_gen(s, t, vec)
                        span[vec.bit_length() - 1] = vec

    def ext_dims(self):
        out = {}
        for s in range(self.s_max + 1):
            for t in self.gen_deg[s]:
                out[(s, t)] = out.get((s, t), 0) + 1
        return out

    def gens_at(self, s, t):
        return [k for k, d in enumerate(self.gen_deg[s]) if d == t]

    def h_matrix(self, i, s, t):
        """h_i: Ext^{s,t} -> Ext^{s+1,t+2^i}; rows = source classes."""
        a = self.alg.idx.get((2 ** i,))
        if a is None or s + 1 > self.s_max:
            return None
        src = self.gens_at(s, t)
        tgt = self.gens_at(s + 1, t + 2 ** i)
        mat = []
        for k in src:
            row = 0
            for c, k2 in enumerate(tgt):
                gi = self.findex[s].get((k, a))
                if gi is not None and (self.dvec[s + 1][k2] >> gi) & 1:
                    row |= 1 << c
            mat.append(row)
        return mat, len(tgt)

def bits(v):
    while v:
        yield (v & -v).bit_length() - 1
        v &= v - 1

def mat_rank(rows):
    piv = {}
    for v in rows:
        v = reduce_vec(v, piv)
        if v:
            piv[v.bit_length() - 1] = v
    return len(piv)

def mat_mul(A, B, bcols):
    out = []
    for row in A:
        acc = 0
        for j in bits(row):
            acc ^= B[j]
        out.append(acc)
    return out

def census(res, stem_lo, stem_hi, margin=4):
    """Per stem: (#towers, bottom filtrations) with an h0-survival margin."""
    out = {}
    for n in range(stem_lo, stem_hi + 1):
        S = min(res.s_max, res.t_max - n)
        if S - margin < 1:
            out[n] = None
            continue
        # alive(s) = rank of h0^{S-1-s+1} composite from filtration s to S
        alive = []
        for s in range(0, S - margin + 1):
            mat = [1 << c for c in range(len(res.gens_at(s, n + s)))]
            cols = len(res.gens_at(s, n + s))
            for s2 in range(s, S):
                hm = res.h_matrix(0, s2, n + s2)
                mat = mat_mul(mat, hm[0], hm[1])
                cols = hm[1]
            alive.append(mat_rank(mat))
        stable = len(alive) >= 3 and alive[-1] == alive[-2] == alive[-3]
        bottoms = []
        for s in range(len(alive)):
            new = alive[s] - (alive[s - 1] if s else 0)
            bottoms += [s] * new
        out[n] = (alive[-1], bottoms, stable)
    return out

# ---------- reduced cobar ----------

class Cobar:
    def __init__(self, n, mons, s_max, t_max, susp=0):
        self.n = n
        self.letters = [m for m in milnor_basis(n) if m]
        self.ldeg = [ox.mon_deg(m) for m in self.letters]
        self.lred = []
        for m in self.letters:
            red = set()
            for (l, r) in copro_xi_mon(m, n):
                if l and r:
                    red.add((l, r))
            self.lred.append(red)
        self.lidx = {m: i for i, m in enumerate(self.letters)}
        self.mons = mons
        self.midx = {m: i for i, m in enumerate(mons)}
        self.mdeg = [susp + ox.mon_deg(m) for m in mons]
        self.mco = []
        for m in mons:
            red = []
            for r, lp in ox.coaction(m, self.n).items():
                if r == m:
                    lp = lp - {()}
                for a in lp:
                    red.append((self.lidx[a], self.midx[r]))
            self.mco.append(red)
        self.s_max = s_max
        self.t_max = t_max
        self.basis = {}
        self.index = {}
        for s in range(s_max + 2):
            for t in range(t_max + 1):
                self.basis[(s, t)] = []
        self.grow()

    def grow(self):
        words = {0: {(): [i for i in range(len(self.mons))]}}
        # enumerate words by length
        cur = [((), i) for i in range(len(self.mons))]
        for s in range(self.s_max + 2):
            for (w, mi) in cur:
                t = sum(self.ldeg[a] for a in w) + self.mdeg[mi]
                if t <= self.t_max:
                    self.index[(w, mi)] = len(self.basis[(s, t)])
                    self.basis[(s, t)].append((w, mi))
            nxt = []
            for (w, mi) in cur:
                base = sum(self.ldeg[a] for a in w) + self.mdeg[mi]
                for a in range(len(self.letters)):
                    if base + self.ldeg[a] <= self.t_max:
                        nxt.append((w + (a,), mi))
            cur = nxt

    def d_row(self, w, mi):
        out = set()
        for pos in range(len(w)):
            for (l, r) in self.lred[w[pos]]:
                w2 = w[:pos] + (self.lidx[l], self.lidx[r]) + w[pos + 1:]
                out ^= {(w2, mi)}
        for (a, m2) in self.mco[mi]:
            out ^= {(w + (a,), m2)}
        return out

    def ext_dims(self):
        """dim Ext^{s,t} for s <= s_max, t <= t_max."""
        ranks = {}
        for (s, t), els in sorted(self.basis.items()):
            if s > self.s_max or not els:
                continue
            rows = []
            for (w, mi) in els:
                vec = 0
                for cell in self.d_row(w, mi):
                    vec |= 1 << self.index[cell]
                rows.append(vec)
            ranks[(s, t)] = mat_rank(rows)
        dims = {}
        for (s, t), els in sorted(self.basis.items()):
            if s > self.s_max or not els:
                continue
            r = ranks.get((s, t), 0)
            rp = ranks.get((s - 1, t), 0)
            d = len(els) - r - rp
            if d:
                dims[(s, t)] = d
        return dims

# ---------- explicit cocycles ----------

def chain_expand(terms):
    """terms: list of (bars as xibar mons, coefficient xibar poly) ->
    set of (tuple of xi mons, xibar mon)."""
    out = set()
    for bars, coeff in terms:
        exp = [ox.clip_an(ox.xibar_mon_in_xi(b), 2) for b in bars]
        acc = [((), m) for m in coeff]
        for p in exp:
            acc = [(w + (x,), m) for (w, m) in acc for x in p]
        out.symmetric_difference_update(acc)
    return out

def chain_d(cells):
    out = set()
    for (w, m) in cells:
        for pos in range(len(w)):
            for (l, r) in copro_xi_mon(w[pos], 2):
                if l and r:
                    out ^= {(w[:pos] + (l, r) + w[pos + 1:], m)}
        for r, lp in ox.coaction(m, 2).items():
            if r == m:
                lp = lp - {()}
            for a in lp:
                out ^= {(w + (a,), r)}
    return out

# ---------- driver ----------

def section(title):
    print()
    print("==== " + title + " ====")

def main():
    algs = {n: Algebra(n) for n in range(3)}

    section("algebras")
    for n, alg in algs.items():
        ok_assoc = alg.associative()
        ok_dual = alg.dual_table() == {k: v for k, v in alg.mult.items() if v}
        print("A(%d): dim %d associative %s dual-of-coproduct %s"
              % (n, alg.dim(), ok_assoc, ok_dual))
    a2 = algs[2]
    samples = [((1,), (1,)), ((2,), (1,)), ((1,), (2,)), ((2,), (2,)),
               ((3,), (1,)), ((1,), (0, 1)), ((0, 1), (1,)), ((4,), (4,)),
               ((2,), (0, 1)), ((0, 2), (0, 1)), ((0, 0, 1), (0, 0, 1)),
               ((7,), (1,)), ((4,), (2, 1))]
    for R, S in samples:
        prod = sorted(milnor_product(R, S))
        print("%s %s = %s" % (sq_str(R), sq_str(S),
                              " + ".join(sq_str(t) for t in prod) or "0"))

    modules = {}
    modules["A0_F2"] = (algs[0], Module(algs[0], [0],
                        [[1]] + [[0] for _ in range(algs[0].dim() - 1)]))
    modules["A1_F2"] = (algs[1], Module(algs[1], [0],
                        [[1]] + [[0] for _ in range(algs[1].dim() - 1)]))
    modules["A2_F2"] = (algs[2], Module(algs[2], [0],
                        [[1]] + [[0] for _ in range(algs[2].dim() - 1)]))
    # bo_1 as an A(2)_*-comodule: the weight-8 slice of (A//A(2))_*,
    # i.e. the image of bo_1 under m -> xibar1^(8-2wt(m)) shift(m)
    bo1 = [(8,), (0, 4), (0, 0, 2), (0, 0, 0, 1)]
    modules["A2_bo1"] = (algs[2], dual_of_comodule(algs[2], bo1))
    hz1 = sorted(ox.bg_basis(0, 1), key=lambda m: (ox.mon_deg(m), m))
    modules["A1_HZ1"] = (algs[1], dual_of_comodule(algs[1], hz1))
    for j in (1, 2, 3):
        hzj = sorted(ox.bg_basis(0, j), key=lambda m: (ox.mon_deg(m), m))
        modules["A0_HZ%d" % j] = (algs[0], dual_of_comodule(algs[0], hzj))
        boj = sorted(ox.bg_basis(1, j), key=lambda m: (ox.mon_deg(m), m))
        modules["A0_bo%d" % j] = (algs[0], dual_of_comodule(algs[0], boj))
    smash = sorted(ox.bg_basis(1, 32, 26), key=lambda m: (ox.mon_deg(m), m))
    modules["A1_smash"] = (algs[1], dual_of_comodule(algs[1], smash))

    section("module axioms")
    for name, (alg, mod) in sorted(modules.items()):
        print("%s: dim %d axioms %s" % (name, mod.dim(), module_axioms(mod)))

    section("resolution charts")
    windows = {"A0_F2": (10, 10), "A1_F2": (12, 22), "A2_F2": (15, 30),
               "A2_bo1": (12, 26), "A1_HZ1": (8, 16)}
    resolutions = {}
    for name, (s_max, t_max) in sorted(windows.items()):
        alg, mod = modules[name]
        res = Resolution(alg, mod, s_max, t_max)
        resolutions[name] = res
        dims = res.ext_dims()
        print("%s (s<=%d, t<=%d):" % (name, s_max, t_max))
        for s in range(s_max + 1):
            row = []
            for t in range(t_max + 1):
                d = dims.get((s, t), 0)
                if d:
                    row.append("%d:%d" % (t, d))
            print("  s=%d  %s" % (s, " ".join(row) if row else "-"))

    section("h products")
    res1 = resolutions["A1_F2"]
    h1_12 = res1.h_matrix(1, 1, 2)
    h1_24 = res1.h_matrix(1, 2, 4)
    h0h1 = res1.h_matrix(0, 1, 2)
    print("A(1): h1.h1 (1,2)->(2,4) rank %d; h1.(2,4)->(3,6) rank %d; "
          "h0.h1 rank %d" % (mat_rank(h1_12[0]), mat_rank(h1_24[0]),
                             mat_rank(h0h1[0])))
    res2 = resolutions["A2_F2"]
    out = []
    for (lbl, i, s, t) in [("h0h1", 0, 1, 2), ("h1h2", 1, 1, 4),
                           ("h0h2", 0, 1, 4), ("h0^2h2", 0, 2, 5),
                           ("h0^3h2", 0, 3, 6), ("h1^3", 1, 2, 4),
                           ("h2^2", 2, 1, 4), ("h2^3", 2, 2, 8),
                           ("h2.h2^2", 2, 2, 8)]:
        hm = res2.h_matrix(i, s, t)
        out.append("%s rank %d" % (lbl, mat_rank(hm[0]) if hm else -1))
    print("A(2): " + "; ".join(out))

    section("v0 towers")
    for name, lo, hi in [("A2_F2", 0, 12), ("A2_bo1", 0, 12),
                         ("A1_smash", 0, 8),
                         ("A1_F2", 0, 8), ("A0_HZ1", 0, 4), ("A0_HZ2", 0, 8),
                         ("A0_HZ3", 0, 12), ("A0_bo1", 0, 4), ("A0_bo2", 0, 8),
                         ("A0_bo3", 0, 12)]:
        alg, mod = modules[name]
        if name not in resolutions:
            smax = 12 + 4
            resolutions[name] = Resolution(alg, mod, smax, hi + smax)
        res = resolutions[name]
        cen = census(res, lo, hi)
        row = []
        for n in range(lo, hi + 1):
            c = cen[n]
            if c is None:
                row.append("%d:?" % n)
            elif c[0]:
                row.append("%d:%d@%s%s" % (n, c[0],
                           ",".join(str(b) for b in c[1]),
                           "" if c[2] else "!unstable"))
        print("%s stems %d..%d: %s" % (name, lo, hi, "  ".join(row)))

    section("cobar vs resolution")
    pairs = [("A0_F2", 8, 8, None), ("A1_F2", 10, 10, None),
             ("A1_HZ1", 7, 12, hz1), ("A2_F2", 6, 12, None),
             ("A2_bo1", 5, 14, bo1)]
    for name, s_max, t_max, mons in pairs:
        alg, mod = modules[name]
        if mons is None:
            mons = [()]
        cb = Cobar(alg.n, mons, s_max, t_max)
        cdims = cb.ext_dims()
        rdims = resolutions[name].ext_dims()
        ok = True
        cells = 0
        for (s, t), els in cb.basis.items():
            cells += len(els)
        for s in range(s_max + 1):
            for t in range(t_max + 1):
                if cdims.get((s, t), 0) != rdims.get((s, t), 0):
                    ok = False
                    print("  mismatch %s (%d,%d): cobar %d res %d"
                          % (name, s, t, cdims.get((s, t), 0),
                             rdims.get((s, t), 0)))
        # Euler characteristic per column, full s range (s <= t suffices)
        euler_ok = True
        for t in range(t_max + 1):
            lhs = 0
            rhs = 0
            for s in range(t + 2):
                lhs += (-1) ** s * len(cb.basis.get((s, t), []))
                if s <= s_max:
                    rhs += (-1) ** s * cdims.get((s, t), 0)
            if s_max >= t and lhs != rhs:
                euler_ok = False
        print("%s window s<=%d t<=%d: cells %d agree %s euler(cols t<=s_max) %s"
              % (name, s_max, t_max, cells, ok, euler_ok))

    section("cocycles")
    x3 = {(4,)}           # xibar_2^4 as exponent tuple? careful: xibar mon
    # xibar monomials are exponent tuples in the conjugate generators
    xb = lambda *e: ox.trim(tuple(e))
    rep3 = [([xb(1)] * 3, {xb(0, 4)}),
            ([xb(1), xb(0, 1), xb(0, 1)], {xb(8)}),
            ([xb(1), xb(1), xb(2, 1)], {xb(8)}),
            ([xb(1), xb(1, 1), xb(2)], {xb(8)}),
            ([xb(0, 1), xb(2), xb(2)], {xb(8)})]
    cells3 = chain_expand(rep3)
    d3 = chain_d(cells3)
    print("3-bar representative (x=xibar2^4, y=xibar1^8): cells %d, d-> %d %s"
          % (len(cells3), len(d3), "COCYCLE" if not d3 else "NOT"))

    x = {xb(0, 4, 4)}
    w = {ox.mon_mul(xb(8), xb(0, 0, 0, 0, 1)), ox.mon_mul(xb(0, 8), xb(0, 0, 0, 1))}
    z = {ox.mon_mul(xb(8), xb(0, 0, 0, 2)), ox.mon_mul(xb(0, 8), xb(0, 0, 2))}
    y = {ox.mon_mul(xb(8), xb(0, 0, 4)), xb(0, 12)}
    rep1 = [([xb(1)], x), ([xb(2)], w), ([xb(3)], z), ([xb(0, 1)], z),
            ([xb(2, 1)], y)]
    cells1 = chain_expand(rep1)
    d1 = chain_d(cells1)
    print("1-bar representative (i=2, i'=3): cells %d, d-> %d %s"
          % (len(cells1), len(d1), "COCYCLE" if not d1 else "NOT"))

    tail = [([xb(1), xb(0, 1), xb(0, 1)], {()}),
            ([xb(1), xb(1), xb(2, 1)], {()}),
            ([xb(1), xb(1, 1), xb(2)], {()}),
            ([xb(0, 1), xb(2), xb(2)], {()})]
    dtail = chain_d(chain_expand(tail))
    target = {(((1,), (1,), (1,), (4,)), ())}
    print("d(tail) cells %d; equals [xi1|xi1|xi1|xi1^4]: %s"
          % (len(dtail), dtail == target))

if __name__ == "__main__":
    main()
