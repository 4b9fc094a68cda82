#!/usr/bin/env python3
"""Regenerates the bundled data files under data/.

Every group is built from an explicit construction (affine maps over a finite
field, Moebius maps on a projective line, coset actions, direct products) and
checked with sympy before it is written.  The C++ loaders re-check orders,
transitivity and primitivity independently, so nothing here is trusted blindly.

Usage: python3 tools/gen_data.py [data_dir]
"""

import itertools
import json
import os
import sys

from sympy.combinatorics import Permutation, PermutationGroup

# ---------------------------------------------------------------------------
# finite fields GF(p^k) with elements encoded as integers 0..q-1 (base-p digits)


class Field:
    def __init__(self, p, k, modulus):
        # modulus: coefficients of a monic irreducible poly, low degree first,
        # without the leading 1 (length k)
        self.p, self.k, self.q = p, k, p ** k
        self.modulus = modulus
        self._mul = [[self._slow_mul(a, b) for b in range(self.q)] for a in range(self.q)]
        self.primitive = next(g for g in range(2, self.q) if self._order(g) == self.q - 1) \
            if self.q > 2 else 1

    def digits(self, a):
        return [(a // self.p ** i) % self.p for i in range(self.k)]

    def undigits(self, d):
        return sum(c * self.p ** i for i, c in enumerate(d))

    def add(self, a, b):
        return self.undigits([(x + y) % self.p for x, y in zip(self.digits(a), self.digits(b))])

    def neg(self, a):
        return self.undigits([(-x) % self.p for x in self.digits(a)])

    def _slow_mul(self, a, b):
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        for deg in range(2 * self.k - 1, self.k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i, m in enumerate(self.modulus):
                    prod[deg - self.k + i] = (prod[deg - self.k + i] - c * m) % self.p
        return self.undigits(prod[: self.k])

    def mul(self, a, b):
        return self._mul[a][b]

    def _order(self, a):
        x, n = a, 1
        while x != 1:
            x = self._slow_mul(x, a)
            n += 1
            if n > self.q:
                return 0
        return n

    def inv(self, a):
        return next(b for b in range(1, self.q) if self.mul(a, b) == 1)

    def power(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def frobenius(self, a):
        return self.power(a, self.p)


def prime_field(p):
    return Field(p, 1, [0])


GF = {
    2: prime_field(2), 3: prime_field(3), 5: prime_field(5), 7: prime_field(7),
    11: prime_field(11),
    4: Field(2, 2, [1, 1]),        # x^2 + x + 1
    8: Field(2, 3, [1, 1, 0]),     # x^3 + x + 1
    9: Field(3, 2, [1, 0]),        # x^2 + 1
}

# ---------------------------------------------------------------------------
# helpers


def perm(images):
    return Permutation(list(images))


def group(gens, degree):
    gens = [g for g in gens]
    if not gens:
        gens = [Permutation(list(range(degree)))]
    return PermutationGroup([Permutation(g.array_form + list(range(g.size, degree))) for g in gens])


def cycles_str(p, degree):
    arr = list(p.array_form) + list(range(p.size, degree))
    seen, out = set(), []
    for i in range(degree):
        if i in seen or arr[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j + 1)
            j = arr[j]
        out.append("(" + " ".join(map(str, c)) + ")")
    return "".join(out) if out else "()"


def from_cycles(degree, *cycles):
    arr = list(range(degree))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            arr[a - 1] = b - 1
    return perm(arr)


def cyclic(n):
    return [from_cycles(n, list(range(1, n + 1)))] if n > 1 else [], n


def symmetric(n):
    if n == 1:
        return [], 1
    if n == 2:
        return [from_cycles(2, [1, 2])], 2
    return [from_cycles(n, [1, 2]), from_cycles(n, list(range(1, n + 1)))], n


def alternating(n):
    if n < 3:
        return [], n
    if n == 3:
        return [from_cycles(3, [1, 2, 3])], 3
    long = list(range(1, n + 1)) if n % 2 == 1 else list(range(2, n + 1))
    return [from_cycles(n, [1, 2, 3]), from_cycles(n, long)], n


def shift(p, offset, degree):
    arr = list(range(degree))
    for i, x in enumerate(p.array_form):
        arr[i + offset] = x + offset
    return perm(arr)


def direct(*factors):
    degree = sum(d for _, d in factors)
    gens, off = [], 0
    for gs, d in factors:
        gens += [shift(g, off, degree) for g in gs]
        off += d
    return gens, degree


def wreath(base, top):
    bgens, m = base
    tgens, n = top
    degree = m * n
    gens = []
    for blk in range(n):
        gens += [shift(g, blk * m, degree) for g in bgens]
    for t in tgens:
        arr = list(range(degree))
        tf = list(t.array_form) + list(range(t.size, n))
        for blk in range(n):
            for x in range(m):
                arr[blk * m + x] = tf[blk] * m + x
        gens.append(perm(arr))
    return gens, degree


def affine_1d(field, mult_gens, frob=False):
    """x -> a x + b over GF(q) with a in <mult_gens>, optionally with Frobenius."""
    q = field.q
    gens = []
    for b in range(1, q):
        if field.digits(b).count(1) == 1 and sum(field.digits(b)) == 1:
            gens.append(perm([field.add(x, b) for x in range(q)]))
    for a in mult_gens:
        gens.append(perm([field.mul(a, x) for x in range(q)]))
    if frob:
        gens.append(perm([field.frobenius(x) for x in range(q)]))
    return gens, q


def affine_nd(p, dim, matrices):
    """Affine group p^dim : <matrices> acting on GF(p)^dim (vectors as integers)."""
    q = p ** dim

    def vec(i):
        return [(i // p ** j) % p for j in range(dim)]

    def unvec(v):
        return sum(c * p ** j for j, c in enumerate(v))

    gens = []
    for j in range(dim):
        e = [1 if t == j else 0 for t in range(dim)]
        gens.append(perm([unvec([(a + b) % p for a, b in zip(vec(i), e)]) for i in range(q)]))
    for m in matrices:
        gens.append(perm([unvec([sum(m[r][c] * vec(i)[c] for c in range(dim)) % p
                                 for r in range(dim)]) for i in range(q)]))
    return gens, q


def linear_on_nonzero(p, dim, matrices):
    q = p ** dim

    def vec(i):
        return [(i // p ** j) % p for j in range(dim)]

    def unvec(v):
        return sum(c * p ** j for j, c in enumerate(v))

    pts = list(range(1, q))
    index = {v: i for i, v in enumerate(pts)}
    gens = []
    for m in matrices:
        gens.append(perm([index[unvec([sum(m[r][c] * vec(i)[c] for c in range(dim)) % p
                                       for r in range(dim)])] for i in pts]))
    return gens, q - 1


INF = "inf"


def projective_line(field):
    return list(range(field.q)) + [INF]


def moebius(field, a, b, c, d):
    """x -> (a x + b) / (c x + d) on the projective line, as a permutation."""
    pts = projective_line(field)
    idx = {x: i for i, x in enumerate(pts)}
    img = []
    for x in pts:
        if x == INF:
            y = INF if c == 0 else field.mul(a, field.inv(c))
        else:
            num = field.add(field.mul(a, x), b)
            den = field.add(field.mul(c, x), d)
            y = INF if den == 0 else field.mul(num, field.inv(den))
        img.append(idx[y])
    return perm(img)


def frobenius_line(field):
    pts = projective_line(field)
    idx = {x: i for i, x in enumerate(pts)}
    return perm([idx[INF if x == INF else field.frobenius(x)] for x in pts])


def psl2_gens(field):
    q, w = field.q, field.primitive
    gens = [moebius(field, 1, 1, 0, 1), moebius(field, 0, field.neg(1), 1, 0)]
    if field.k > 1:
        gens.append(moebius(field, 1, field.p if field.q > field.p else 1, 0, 1))
        w2 = field.mul(w, w)
        gens.append(moebius(field, w2, 0, 0, 1))
    return gens, q + 1


def pgl2_gens(field):
    gens, n = psl2_gens(field)
    return gens + [moebius(field, field.primitive, 0, 0, 1)], n


def coset_action(G, H):
    """Permutation action of G's generators on the right cosets of H."""
    helems = list(H.generate())
    hset = set(tuple(h.array_form) for h in helems)
    reps, lookup = [], {}
    for g in G.generate():
        key = tuple(g.array_form)
        if key in lookup:
            continue
        k = len(reps)
        reps.append(g)
        for h in helems:
            lookup[tuple((h * g).array_form)] = k
    images = []
    for s in G.generators:
        images.append(perm([lookup[tuple((r * s).array_form)] for r in reps]))
    return images, len(reps)


def find_subgroup(G, order, tries=20000):
    """Deterministic search for a subgroup of the given order generated by two elements."""
    elems = sorted(G.generate(), key=lambda p: p.array_form)
    for a in elems:
        if a.order() not in (2, 3, 4, 5, 6, 11):
            continue
        for b in elems[:: max(1, len(elems) // 400)]:
            H = PermutationGroup([a, b])
            if H.order() == order:
                return H
            tries -= 1
            if tries == 0:
                raise RuntimeError("subgroup search exhausted")
    raise RuntimeError("no subgroup found")


# ---------------------------------------------------------------------------
# primitive groups of degree 5..12


def m11_on_11():
    return [from_cycles(11, list(range(1, 12))),
            from_cycles(11, [3, 7, 11, 8], [4, 10, 5, 6])], 11


def m12_on_12():
    return [from_cycles(12, list(range(1, 12))),
            from_cycles(12, [3, 7, 11, 8], [4, 10, 5, 6]),
            from_cycles(12, [1, 12], [2, 11], [3, 6], [4, 8], [5, 9], [7, 10])], 12


def gl_gens(p, dim):
    if (p, dim) == (2, 3):
        return [[[1, 1, 0], [0, 1, 0], [0, 0, 1]], [[0, 0, 1], [1, 0, 0], [0, 1, 0]]]
    if (p, dim) == (3, 2):
        return [[[2, 0], [0, 1]], [[2, 1], [2, 0]]]
    raise ValueError


def primitive_catalog():
    F = GF
    cat = {}

    def add(deg, label, gens_deg, order, source):
        gens, d = gens_deg
        assert d == deg, (label, d, deg)
        cat.setdefault(deg, []).append((label, gens, order, source))

    w5, w7, w11 = F[5].primitive, F[7].primitive, F[11].primitive
    # degree 5
    add(5, "C5", affine_1d(F[5], []), 5, "translations of GF(5)")
    add(5, "D10", affine_1d(F[5], [F[5].neg(1)]), 10, "x -> +-x + b over GF(5)")
    add(5, "AGL(1,5)", affine_1d(F[5], [w5]), 20, "x -> ax + b over GF(5)")
    add(5, "A5", alternating(5), 60, "alternating group")
    add(5, "S5", symmetric(5), 120, "symmetric group")
    # degree 6
    add(6, "PSL(2,5)", psl2_gens(F[5]), 60, "Moebius maps of det square on P^1(GF(5))")
    add(6, "PGL(2,5)", pgl2_gens(F[5]), 120, "Moebius maps on P^1(GF(5))")
    add(6, "A6", alternating(6), 360, "alternating group")
    add(6, "S6", symmetric(6), 720, "symmetric group")
    # degree 7
    add(7, "C7", affine_1d(F[7], []), 7, "translations of GF(7)")
    add(7, "D14", affine_1d(F[7], [F[7].neg(1)]), 14, "x -> +-x + b over GF(7)")
    add(7, "F21", affine_1d(F[7], [F[7].mul(w7, w7)]), 21, "x -> a x + b, a a square in GF(7)")
    add(7, "AGL(1,7)", affine_1d(F[7], [w7]), 42, "x -> ax + b over GF(7)")
    add(7, "PSL(3,2)", linear_on_nonzero(2, 3, gl_gens(2, 3)), 168,
        "GL(3,2) on the nonzero vectors of GF(2)^3")
    add(7, "A7", alternating(7), 2520, "alternating group")
    add(7, "S7", symmetric(7), 5040, "symmetric group")
    # degree 8
    w8 = F[8].primitive
    add(8, "AGL(1,8)", affine_1d(F[8], [w8]), 56, "x -> ax + b over GF(8)")
    add(8, "AGammaL(1,8)", affine_1d(F[8], [w8], frob=True), 168, "x -> a x^s + b over GF(8)")
    add(8, "AGL(3,2)", affine_nd(2, 3, gl_gens(2, 3)), 1344, "affine maps of GF(2)^3")
    add(8, "PSL(2,7)", psl2_gens(F[7]), 168, "Moebius maps of det square on P^1(GF(7))")
    add(8, "PGL(2,7)", pgl2_gens(F[7]), 336, "Moebius maps on P^1(GF(7))")
    add(8, "A8", alternating(8), 20160, "alternating group")
    add(8, "S8", symmetric(8), 40320, "symmetric group")
    # degree 9
    F9, w9 = F[9], F[9].primitive
    add(9, "3^2:4", affine_nd(3, 2, [[[0, 2], [1, 0]]]), 36, "GF(3)^2 : <[[0,-1],[1,0]]>")
    add(9, "3^2:D8", affine_nd(3, 2, [[[0, 1], [1, 0]], [[2, 0], [0, 1]]]), 72,
        "GF(3)^2 : monomial group of order 8")
    add(9, "3^2:Q8", affine_nd(3, 2, [[[0, 2], [1, 0]], [[1, 1], [1, 2]]]), 72,
        "GF(3)^2 : quaternion subgroup of SL(2,3)")
    add(9, "AGL(1,9)", affine_1d(F9, [w9]), 72, "x -> ax + b over GF(9)")
    add(9, "AGammaL(1,9)", affine_1d(F9, [w9], frob=True), 144, "x -> a x^s + b over GF(9)")
    add(9, "ASL(2,3)", affine_nd(3, 2, [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]), 216,
        "GF(3)^2 : SL(2,3)")
    add(9, "AGL(2,3)", affine_nd(3, 2, gl_gens(3, 2)), 432, "GF(3)^2 : GL(2,3)")
    add(9, "PSL(2,8)", psl2_gens(F[8]), 504, "Moebius maps on P^1(GF(8))")
    g, n = psl2_gens(F[8])
    add(9, "PGammaL(2,8)", (g + [frobenius_line(F[8])], n), 1512,
        "Moebius and field automorphisms on P^1(GF(8))")
    add(9, "A9", alternating(9), 181440, "alternating group")
    add(9, "S9", symmetric(9), 362880, "symmetric group")
    # degree 10
    pairs = list(itertools.combinations(range(5), 2))
    pidx = {frozenset(pq): i for i, pq in enumerate(pairs)}

    def on_pairs(gs):
        return [perm([pidx[frozenset((g.array_form[a], g.array_form[b]))] for a, b in pairs])
                for g in gs]
    add(10, "A5", (on_pairs(alternating(5)[0]), 10), 60, "A5 on 2-subsets of 5 points")
    add(10, "S5", (on_pairs(symmetric(5)[0]), 10), 120, "S5 on 2-subsets of 5 points")
    g9, n9 = psl2_gens(F9)
    add(10, "PSL(2,9)", (g9, n9), 360, "Moebius maps of det square on P^1(GF(9))")
    add(10, "S6", (g9 + [frobenius_line(F9)], n9), 720, "PSL(2,9) with the Frobenius map")
    add(10, "PGL(2,9)", pgl2_gens(F9), 720, "Moebius maps on P^1(GF(9))")
    twisted = moebius(F9, w9, 0, 0, 1) * frobenius_line(F9)
    add(10, "M10", (g9 + [twisted], n9), 720, "PSL(2,9) with x -> w x^3")
    add(10, "PGammaL(2,9)", (pgl2_gens(F9)[0] + [frobenius_line(F9)], n9), 1440,
        "Moebius and field automorphisms on P^1(GF(9))")
    add(10, "A10", alternating(10), 1814400, "alternating group")
    add(10, "S10", symmetric(10), 3628800, "symmetric group")
    # degree 11
    add(11, "C11", affine_1d(F[11], []), 11, "translations of GF(11)")
    add(11, "D22", affine_1d(F[11], [F[11].neg(1)]), 22, "x -> +-x + b over GF(11)")
    add(11, "11:5", affine_1d(F[11], [F[11].mul(w11, w11)]), 55,
        "x -> a x + b, a a square in GF(11)")
    add(11, "AGL(1,11)", affine_1d(F[11], [w11]), 110, "x -> ax + b over GF(11)")
    psl11 = group(psl2_gens(F[11])[0], 12)
    a5 = find_subgroup(psl11, 60)
    add(11, "PSL(2,11)", coset_action(psl11, a5), 660,
        "PSL(2,11) on the cosets of a subgroup A5")
    add(11, "M11", m11_on_11(), 7920, "standard generators of M11")
    add(11, "A11", alternating(11), 19958400, "alternating group")
    add(11, "S11", symmetric(11), 39916800, "symmetric group")
    # degree 12
    add(12, "PSL(2,11)", psl2_gens(F[11]), 660, "Moebius maps of det square on P^1(GF(11))")
    add(12, "PGL(2,11)", pgl2_gens(F[11]), 1320, "Moebius maps on P^1(GF(11))")
    m11 = group(m11_on_11()[0], 11)
    l211 = find_subgroup(m11, 660)
    add(12, "M11", coset_action(m11, l211), 7920, "M11 on the cosets of a subgroup PSL(2,11)")
    add(12, "M12", m12_on_12(), 95040, "standard generators of M12")
    add(12, "A12", alternating(12), 239500800, "alternating group")
    add(12, "S12", symmetric(12), 479001600, "symmetric group")
    return cat


# ---------------------------------------------------------------------------
# verification corpus


def corpus():
    F = GF
    c = []

    def add(name, gd, order, note):
        c.append((name, gd[0], gd[1], order, note))

    add("C1", ([], 1), 1, "trivial group")
    add("C2", cyclic(2), 2, "cyclic")
    add("C3", cyclic(3), 3, "cyclic")
    add("C4", cyclic(4), 4, "cyclic")
    add("C2xC2", direct(cyclic(2), cyclic(2)), 4, "Klein four-group")
    add("C5", cyclic(5), 5, "cyclic")
    add("C6", direct(cyclic(2), cyclic(3)), 6, "cyclic, as C2 x C3")
    add("S3", symmetric(3), 6, "symmetric")
    add("C7", cyclic(7), 7, "cyclic")
    add("C8", cyclic(8), 8, "cyclic")
    add("C4xC2", direct(cyclic(4), cyclic(2)), 8, "abelian")
    add("C2xC2xC2", direct(cyclic(2), cyclic(2), cyclic(2)), 8, "elementary abelian")
    add("D8", ([from_cycles(4, [1, 2, 3, 4]), from_cycles(4, [1, 3])], 4), 8,
        "dihedral of order 8")
    add("Q8", ([from_cycles(8, [1, 2, 3, 4], [5, 6, 7, 8]),
                from_cycles(8, [1, 5, 3, 7], [2, 8, 4, 6])], 8), 8, "quaternion, regular")
    add("C9", cyclic(9), 9, "cyclic")
    add("C3xC3", direct(cyclic(3), cyclic(3)), 9, "elementary abelian")
    add("C10", direct(cyclic(2), cyclic(5)), 10, "cyclic, as C2 x C5")
    add("D10", affine_1d(F[5], [F[5].neg(1)]), 10, "dihedral of order 10")
    add("C11", cyclic(11), 11, "cyclic")
    add("C12", direct(cyclic(4), cyclic(3)), 12, "cyclic, as C4 x C3")
    add("C6xC2", direct(cyclic(2), cyclic(2), cyclic(3)), 12, "abelian")
    add("D12", ([from_cycles(6, [1, 2, 3, 4, 5, 6]), from_cycles(6, [2, 6], [3, 5])], 6), 12,
        "dihedral of order 12")
    add("A4", alternating(4), 12, "alternating")
    add("Dic3", ([from_cycles(7, [1, 2, 3]), from_cycles(7, [2, 3], [4, 5, 6, 7])], 7), 12,
        "dicyclic C3 : C4")
    add("C13", cyclic(13), 13, "cyclic")
    add("C14", direct(cyclic(2), cyclic(7)), 14, "cyclic, as C2 x C7")
    add("D14", affine_1d(F[7], [F[7].neg(1)]), 14, "dihedral of order 14")
    add("C15", direct(cyclic(3), cyclic(5)), 15, "cyclic, as C3 x C5")
    add("C2^4", direct(cyclic(2), cyclic(2), cyclic(2), cyclic(2)), 16, "elementary abelian")
    add("D16", ([from_cycles(8, list(range(1, 9))), from_cycles(8, [2, 8], [3, 7], [4, 6])], 8),
        16, "dihedral of order 16")
    add("C3xS3", direct(cyclic(3), symmetric(3)), 18, "direct product")
    add("F20", affine_1d(F[5], [F[5].primitive]), 20, "Frobenius group AGL(1,5)")
    add("F21", affine_1d(F[7], [F[7].mul(F[7].primitive, F[7].primitive)]), 21,
        "Frobenius group 7:3")
    add("S4", symmetric(4), 24, "symmetric")
    add("A4xC2", direct(alternating(4), cyclic(2)), 24, "direct product")
    add("SL(2,3)", linear_on_nonzero(3, 2, [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]), 24,
        "SL(2,3) on nonzero vectors of GF(3)^2")
    add("S3xS3", direct(symmetric(3), symmetric(3)), 36, "direct product")
    add("3^2:4", affine_nd(3, 2, [[[0, 2], [1, 0]]]), 36, "affine, point stabiliser C4")
    add("GL(2,3)", linear_on_nonzero(3, 2, gl_gens(3, 2)), 48,
        "GL(2,3) on nonzero vectors of GF(3)^2")
    add("S4xC2", direct(symmetric(4), cyclic(2)), 48, "direct product")
    add("A5", alternating(5), 60, "alternating")
    add("A4xC5", direct(alternating(4), cyclic(5)), 60, "direct product")
    add("S5", symmetric(5), 120, "symmetric")
    add("A5xC2", direct(alternating(5), cyclic(2)), 120, "direct product")
    add("SL(2,5)", linear_on_nonzero(5, 2, [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]), 120,
        "SL(2,5) on nonzero vectors of GF(5)^2")
    add("PSL(2,7)", psl2_gens(F[7]), 168, "Moebius maps on P^1(GF(7))")
    add("A5xC3", direct(alternating(5), cyclic(3)), 180, "direct product")
    add("A5xC6", direct(alternating(5), cyclic(2), cyclic(3)), 360, "direct product")
    add("A6", alternating(6), 360, "alternating")
    add("PGL(2,7)", pgl2_gens(F[7]), 336, "Moebius maps on P^1(GF(7))")
    add("PSL(2,8)", psl2_gens(F[8]), 504, "Moebius maps on P^1(GF(8))")
    add("PSL(2,11)", psl2_gens(F[11]), 660, "Moebius maps on P^1(GF(11))")
    add("S6", symmetric(6), 720, "symmetric")
    add("PGammaL(2,9)", (pgl2_gens(F[9])[0] + [frobenius_line(F[9])], 10), 1440,
        "Aut(A6) on P^1(GF(9))")
    add("A7", alternating(7), 2520, "alternating")
    add("A5xA5", direct(alternating(5), alternating(5)), 3600, "direct product")
    add("S7", symmetric(7), 5040, "symmetric")
    add("A5wrC2", wreath(alternating(5), cyclic(2)), 7200, "imprimitive wreath product")
    add("S5wrC2", wreath(symmetric(5), cyclic(2)), 28800, "imprimitive wreath product")
    return c


# ---------------------------------------------------------------------------
# simple groups of order <= 50000 (orders and |Out| from the standard tables)


def psl2_element_orders(q, p):
    def divisors(n):
        return {d for d in range(1, n + 1) if n % d == 0}
    if p == 2:
        return {2} | divisors(q - 1) | divisors(q + 1)
    return {p} | divisors((q - 1) // 2) | divisors((q + 1) // 2)


SIMPLE = [
    # name, order, |Out|, element orders (None -> derived for PSL(2,q))
    ("A5", 60, 2, {1, 2, 3, 5}),
    ("PSL(2,7)", 168, 2, None),
    ("A6", 360, 4, {1, 2, 3, 4, 5}),
    ("PSL(2,8)", 504, 3, None),
    ("PSL(2,11)", 660, 2, None),
    ("PSL(2,13)", 1092, 2, None),
    ("PSL(2,17)", 2448, 2, None),
    ("A7", 2520, 2, {1, 2, 3, 4, 5, 6, 7}),
    ("PSL(2,19)", 3420, 2, None),
    ("PSL(2,16)", 4080, 4, None),
    ("PSL(3,3)", 5616, 2, {1, 2, 3, 4, 6, 8, 13}),
    ("PSU(3,3)", 6048, 2, {1, 2, 3, 4, 6, 7, 8, 12}),
    ("PSL(2,23)", 6072, 2, None),
    ("PSL(2,25)", 7800, 4, None),
    ("M11", 7920, 1, {1, 2, 3, 4, 5, 6, 8, 11}),
    ("PSL(2,27)", 9828, 6, None),
    ("PSL(2,29)", 12180, 2, None),
    ("PSL(2,31)", 14880, 2, None),
    ("A8", 20160, 2, {1, 2, 3, 4, 5, 6, 7, 15}),
    ("PSL(3,4)", 20160, 12, {1, 2, 3, 4, 5, 7}),
    ("PSL(2,37)", 25308, 2, None),
    ("PSU(4,2)", 25920, 2, {1, 2, 3, 4, 5, 6, 9, 12}),
    ("Sz(8)", 29120, 3, {1, 2, 4, 5, 7, 13}),
    ("PSL(2,32)", 32736, 5, None),
    ("PSL(2,41)", 34440, 2, None),
    ("PSL(2,43)", 39732, 2, None),
]

PRIME_POWER = {7: 7, 8: 2, 11: 11, 13: 13, 16: 2, 17: 17, 19: 19, 23: 23, 25: 5, 27: 3,
               29: 29, 31: 31, 32: 2, 37: 37, 41: 41, 43: 43}


def simple_table():
    rows = []
    for name, order, out, orders in SIMPLE:
        if orders is None:
            q = int(name[len("PSL(2,"):-1])
            orders = psl2_element_orders(q, PRIME_POWER[q])
            assert q * (q * q - 1) // (2 if q % 2 else 1) == order, name
        rows.append((name, order, out, sorted(orders)))
    return rows


# ---------------------------------------------------------------------------


def check(label, gens, degree, order):
    G = group(gens, degree)
    assert G.order() == order, (label, G.order(), order)
    return G


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data")
    os.makedirs(os.path.join(root, "primitive"), exist_ok=True)
    os.makedirs(os.path.join(root, "corpus"), exist_ok=True)

    for deg, entries in sorted(primitive_catalog().items()):
        doc = {"degree": deg, "groups": []}
        for label, gens, order, source in entries:
            G = check(label, gens, deg, order)
            assert G.is_transitive() and G.is_primitive(), label
            doc["groups"].append({"label": label, "order": order, "source": source,
                                  "generators": [cycles_str(g, deg) for g in gens]})
        with open(os.path.join(root, "primitive", f"degree_{deg:02d}.json"), "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        print(f"degree {deg}: {len(entries)} primitive groups")

    index = []
    for name, gens, degree, order, note in corpus():
        check(name, gens, degree, order)
        fname = name.replace("^", "p").replace(":", "_").replace("(", "").replace(")", "") \
            .replace(",", "_") + ".grp"
        doc = {"name": name, "order": order, "note": note, "degree": degree,
               "generators": [cycles_str(g, degree) for g in gens]}
        with open(os.path.join(root, "corpus", fname), "w") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        index.append(fname)
    with open(os.path.join(root, "corpus", "index.txt"), "w") as fh:
        fh.write("# corpus group files, in canonical order\n")
        fh.write("\n".join(index) + "\n")
    print(f"corpus: {len(index)} groups")

    with open(os.path.join(root, "simple_groups.txt"), "w") as fh:
        fh.write("# Non-abelian finite simple groups of order <= 50000.\n")
        fh.write("# Orders and outer automorphism group orders as in the ATLAS of Finite Groups;\n")
        fh.write("# PSL(2,q) element orders follow from the (q-1)/d, (q+1)/d, p pattern.\n")
        fh.write("# The table is complete (every isomorphism type listed) up to the bound below.\n")
        fh.write("@complete_through|50000\n")
        fh.write("name|order|out_order|fingerprint\n")
        for name, order, out, orders in simple_table():
            fh.write(f"{name}|{order}|{out}|{','.join(map(str, orders))}\n")
    print("simple table written")


if __name__ == "__main__":
    main()
