#!/usr/bin/env python3
"""Independent brute-force recomputation of the frozen constants in tests/.

Everything below is computed from first definitions with bitmask sets and
shares no code with the C++ library.  Rerun with

    python3 scripts/compute_goldens.py

and compare the printed values against the literals frozen in the test
suite (tests/acceptance.cpp and the per-module tests).
"""

from itertools import product as iproduct


def bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(xs):
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def fmt_set(mask, names):
    return "{" + ",".join(names[i] for i in bits(mask)) + "}"


class OSG:
    """Finite ordered semigroup over indices 0..n-1 with bitmask subsets.

    Compatibility of the order with multiplication is verified exhaustively
    on each side; right compatibility is required, left is only recorded
    (the natural order on a transformation semigroup is right compatible
    but not left compatible)."""

    def __init__(self, names, table, le_pairs):
        self.n = n = len(names)
        self.names = names
        self.table = table
        # reflexive-transitive closure of the supplied pairs
        le = [[False] * n for _ in range(n)]
        for i in range(n):
            le[i][i] = True
        for (i, j) in le_pairs:
            le[i][j] = True
        changed = True
        while changed:
            changed = False
            for i in range(n):
                for j in range(n):
                    if le[i][j]:
                        for k in range(n):
                            if le[j][k] and not le[i][k]:
                                le[i][k] = True
                                changed = True
        self.le = le
        for i in range(n):
            for j in range(n):
                if i != j and le[i][j] and le[j][i]:
                    raise ValueError(f"not antisymmetric: {names[i]},{names[j]}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if table[table[i][j]][k] != table[i][table[j][k]]:
                        raise ValueError("not associative")
        self.left_compatible = True
        self.right_compatible = True
        for a in range(n):
            for b in range(n):
                if le[a][b]:
                    for x in range(n):
                        if not le[table[x][a]][table[x][b]]:
                            self.left_compatible = False
                        if not le[table[a][x]][table[b][x]]:
                            self.right_compatible = False
        self.down = [mask_of(i for i in range(n) if le[i][j]) for j in range(n)]
        self.Sa = [mask_of(table[s][a] for s in range(n)) for a in range(n)]
        self.aS = [mask_of(table[a][s] for s in range(n)) for a in range(n)]
        self.sand = [[mask_of(table[table[a][s]][b] for s in range(n))
                      for b in range(n)] for a in range(n)]

    def closure(self, A):
        m = 0
        for a in bits(A):
            m |= self.down[a]
        return m

    def prod(self, A, B):
        m = 0
        for a in bits(A):
            for b in bits(B):
                m |= 1 << self.table[a][b]
        return m

    def star(self, A, B):
        return self.closure(self.prod(A, B))

    def is_down(self, A):
        return self.closure(A) == A

    def is_left(self, A):
        return self.is_down(A) and all(self.Sa[a] & ~A == 0 for a in bits(A))

    def is_right(self, A):
        return self.is_down(A) and all(self.aS[a] & ~A == 0 for a in bits(A))

    def is_bi(self, A):
        if not self.is_down(A):
            return False
        for a in bits(A):
            for b in bits(A):
                if self.sand[a][b] & ~A:
                    return False
        return True

    def regular(self):
        return all((self.closure(self.sand[a][a]) >> a) & 1 for a in range(self.n))

    def intra_regular(self):
        full = (1 << self.n) - 1
        for a in range(self.n):
            a2 = self.table[a][a]
            saas = self.prod(self.Sa[a2], full)
            if not (self.closure(saas) >> a) & 1:
                return False
        return True

    # ---- complete ideal families via down-set recursion ----

    def downsets(self):
        order = sorted(range(self.n), key=lambda i: (bin(self.down[i]).count("1"), i))
        out = []

        def rec(k, cur):
            if k == len(order):
                if cur:
                    out.append(cur)
                return
            rec(k + 1, cur)
            e = order[k]
            if self.down[e] & ~(cur | (1 << e)) == 0:
                rec(k + 1, cur | (1 << e))

        rec(0, 0)
        return out

    def family(self, kind):
        pred = {"left": self.is_left, "right": self.is_right, "bi": self.is_bi,
                "two": lambda A: self.is_left(A) and self.is_right(A)}[kind]
        fam = [A for A in self.downsets() if pred(A)]
        fam.sort(key=lambda A: (bin(A).count("1"), sorted(bits(A))))
        return fam

    # ---- Green's relations ----

    def principal(self, a, kind, ordered):
        n = self.n
        if kind == "L":
            s = (1 << a) | self.Sa[a]
        elif kind == "R":
            s = (1 << a) | self.aS[a]
        else:  # J
            sas = self.prod(self.Sa[a], (1 << self.n) - 1)
            s = (1 << a) | self.Sa[a] | self.aS[a] | sas
        return self.closure(s) if ordered else s

    def greens(self, ordered):
        n = self.n
        parts = {}
        for kind in ("L", "R", "J"):
            ideals = [self.principal(a, kind, ordered) for a in range(n)]
            cls = {}
            for a in range(n):
                cls.setdefault(ideals[a], []).append(a)
            parts[kind] = canon_partition(list(cls.values()), n)
        parts["H"] = meet(parts["L"], parts["R"], n)
        parts["D"] = join(parts["L"], parts["R"], n)
        return parts


def canon_partition(classes, n):
    classes = [sorted(c) for c in classes]
    classes.sort(key=lambda c: c[0])
    cid = [0] * n
    for i, c in enumerate(classes):
        for x in c:
            cid[x] = i
    return {"classes": classes, "id": cid}


def meet(p, q, n):
    groups = {}
    for x in range(n):
        groups.setdefault((p["id"][x], q["id"][x]), []).append(x)
    return canon_partition(list(groups.values()), n)


def join(p, q, n):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for part in (p, q):
        for c in part["classes"]:
            for x in c[1:]:
                union(c[0], x)
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return canon_partition(list(groups.values()), n)


def eggbox(parts):
    """D-classes as (rows = R-classes, cols = L-classes, cells) shape info."""
    out = []
    for d in parts["D"]["classes"]:
        dset = set(d)
        rows = sorted({parts["R"]["id"][x] for x in d})
        cols = sorted({parts["L"]["id"][x] for x in d})
        rows.sort(key=lambda r: min(x for x in parts["R"]["classes"][r] if x in dset))
        cols.sort(key=lambda c: min(x for x in parts["L"]["classes"][c] if x in dset))
        cells = [[sorted(set(parts["R"]["classes"][r]) & set(parts["L"]["classes"][c]) & dset)
                  for c in cols] for r in rows]
        out.append({"members": d, "cells": cells})
    out.sort(key=lambda dc: (len(dc["members"]), dc["members"][0]))
    return out


def bsg(S):
    """Semigroup of bi-ideals: family + Cayley table of indices."""
    fam = S.family("bi")
    idx = {A: i for i, A in enumerate(fam)}
    m = len(fam)
    table = [[idx[S.star(fam[i], fam[j])] for j in range(m)] for i in range(m)]
    return fam, table


def plain_greens(table):
    n = len(table)
    S = list(range(n))
    parts = {}
    Ls = [mask_of([a] + [table[s][a] for s in S]) for a in range(n)]
    Rs = [mask_of([a] + [table[a][s] for s in S]) for a in range(n)]
    Js = []
    for a in range(n):
        sas = mask_of(table[table[s][a]][t] for s in S for t in S)
        Js.append(Ls[a] | Rs[a] | sas | (1 << a))
    for kind, ideals in (("L", Ls), ("R", Rs), ("J", Js)):
        cls = {}
        for a in range(n):
            cls.setdefault(ideals[a], []).append(a)
        parts[kind] = canon_partition(list(cls.values()), n)
    parts["H"] = meet(parts["L"], parts["R"], n)
    parts["D"] = join(parts["L"], parts["R"], n)
    return parts


def band(table):
    return all(table[i][i] == i for i in range(len(table)))


def plain_regular(table):
    n = len(table)
    return all(any(table[table[a][x]][a] == a for x in range(n)) for a in range(n))


def induced(fam, base_part):
    """Signature partition: two family members are related iff they meet the
    same set of base classes."""
    sigs = [frozenset(base_part["id"][x] for x in bits(A)) for A in fam]
    groups = {}
    for i, s in enumerate(sigs):
        groups.setdefault(s, []).append(i)
    return canon_partition(list(groups.values()), len(fam))


def refines(p, q):
    """p finer-or-equal q as relations."""
    return all(len({q["id"][x] for x in c}) == 1 for c in p["classes"])


# ---------------- instances ----------------

def transformation_semigroup(n):
    elems = list(iproduct(range(n), repeat=n))
    index = {e: i for i, e in enumerate(elems)}
    # (f.g)(x) = g(f(x)) : row element applied first
    table = [[index[tuple(g[f[x]] for x in range(n))] for g in elems] for f in elems]
    names = ["(" + ",".join(str(v + 1) for v in e) + ")" for e in elems]
    m = len(elems)
    Rplain = [mask_of([f] + [table[f][h] for h in range(m)]) for f in range(m)]
    pairs = []
    for f in range(m):
        for g in range(m):
            if Rplain[f] & ~Rplain[g]:
                continue
            if any(table[a][f] == f and table[a][g] == f for a in range(m)):
                pairs.append((f, g))
    return names, table, pairs


def assoc_ok(table):
    n = len(table)
    return all(table[table[i][j]][k] == table[i][table[j][k]]
               for i in range(n) for j in range(n) for k in range(n))


def witness_iff_check(S, parts):
    """a L b iff exists x,y with a <= xb and b <= ya (and the R analogue)."""
    n, le, tbl = S.n, S.le, S.table
    for a in range(n):
        for b in range(n):
            wl = any(le[a][tbl[x][b]] for x in range(n)) and \
                 any(le[b][tbl[y][a]] for y in range(n))
            if wl != (parts["L"]["id"][a] == parts["L"]["id"][b]):
                return False
            wr = any(le[a][tbl[b][u]] for u in range(n)) and \
                 any(le[b][tbl[a][v]] for v in range(n))
            if wr != (parts["R"]["id"][a] == parts["R"]["id"][b]):
                return False
    return True


def report_instance(title, S):
    fam, t = bsg(S)
    print(f"== {title} ==")
    print("  compatible: left", S.left_compatible, " right", S.right_compatible)
    print("  B(S) table associative:", assoc_ok(t))
    print("  regular:", S.regular(), " intra_regular:", S.intra_regular())
    print("  left ideals:", len(S.family("left")), " right ideals:",
          len(S.family("right")), " two-sided:", len(S.family("two")),
          " bi-ideals:", len(fam))
    print("  bi family:", [fmt_set(A, S.names) for A in fam])
    print("  B(S) band:", band(t), " B(S) regular:", plain_regular(t))
    gb = plain_greens(t)
    gs = S.greens(ordered=True)
    bnames = [f"B{i+1}" for i in range(len(fam))]
    lp = induced(fam, gs["L"])
    rp = induced(fam, gs["R"])
    print("  L' classes:", [[bnames[i] for i in c] for c in lp["classes"]])
    print("  R' classes:", [[bnames[i] for i in c] for c in rp["classes"]])
    print("  L_B classes:", [[bnames[i] for i in c] for c in gb["L"]["classes"]])
    print("  R_B classes:", [[bnames[i] for i in c] for c in gb["R"]["classes"]])
    print("  L_B subseteq L':", refines(gb["L"], lp), " equal:",
          gb["L"]["classes"] == lp["classes"])
    print("  R_B subseteq R':", refines(gb["R"], rp), " equal:",
          gb["R"]["classes"] == rp["classes"])
    print("  S egg-box D-classes:",
          [[S.names[x] for x in d["members"]] for d in eggbox(gs)])
    print("  B(S) egg-box D-classes:",
          [[bnames[x] for x in d["members"]] for d in eggbox(gb)])
    print("  B(S) table rows:", [[bnames[x] for x in row] for row in t])
    print("  D == J on S:", gs["D"]["classes"] == gs["J"]["classes"])
    if S.regular():
        rs, ls = S.family("right"), S.family("left")
        inter = {R & L for R in rs for L in ls if R & L}
        law4 = inter == set(fam)
        law5 = all(S.closure((1 << a) | S.sand[a][a]) ==
                   (S.closure((1 << a) | S.aS[a]) & S.closure((1 << a) | S.Sa[a]))
                   for a in range(S.n))
        law6 = all(S.star(R, L) == R & L for R in rs for L in ls)
        law7 = all(S.star(X, X) == X for X in rs + ls)
        print("  law4 bi == {R^L}:", law4, " law5 B(a)=R(a)^L(a):", law5,
              " law6 (RL]=R^L:", law6, " law7 ideal families bands:", law7)
    return fam, t, gs, gb


def main():
    # five-element example
    a, b, c, d, e = range(5)
    names = ["a", "b", "c", "d", "e"]
    table = [[a, b, c, d, e],
             [a, b, c, d, e],
             [c, c, c, c, c],
             [d, d, d, d, d],
             [c, c, c, c, c]]
    pairs = [(c, a), (c, b), (c, c), (c, d), (c, e), (d, d), (e, d), (e, b)]
    ex26 = OSG(names, table, pairs)
    print("example26 down({d}):", fmt_set(ex26.closure(1 << d), names))
    print("example26 down({a}):", fmt_set(ex26.closure(1 << a), names))
    report_instance("example26", ex26)

    for n in (1, 2, 3):
        nm, tbl, prs = transformation_semigroup(n)
        print(f"T{n}: elements={len(nm)} natural-order pairs={len(prs)}")
        if n == 2:
            print("  T2 pairs:", sorted((nm[i], nm[j]) for i, j in prs))
            print("  T2 table:", [[nm[x] for x in row] for row in tbl])
        T = OSG(nm, tbl, prs)
        print(f"  down-sets of (T{n},<=):", len(T.downsets()))
        fam, t, gs, gb = report_instance(f"(T{n},<=)", T)
        gp = plain_greens(tbl)
        elems = list(iproduct(range(n), repeat=n))
        img = [frozenset(e) for e in elems]
        ker = [tuple(tuple(x for x in range(n) if e[x] == e[y])[0] for y in range(n))
               for e in elems]
        m = len(elems)
        lem_l = all((gs["L"]["id"][f] == gs["L"]["id"][g])
                    == (gp["L"]["id"][f] == gp["L"]["id"][g])
                    == (img[f] == img[g]) for f in range(m) for g in range(m))
        lem_r = all((gs["R"]["id"][f] == gs["R"]["id"][g])
                    == (gp["R"]["id"][f] == gp["R"]["id"][g])
                    == (ker[f] == ker[g]) for f in range(m) for g in range(m))
        print(f"  ordered L == plain L == image equality: {lem_l}")
        print(f"  ordered R == plain R == kernel equality: {lem_r}")
        print("  witness iff Green's relation:", witness_iff_check(T, gs))
        if n == 3:
            shapes = [(len(d["members"]), len(d["cells"]), len(d["cells"][0]),
                       sorted({len(cell) for row in d["cells"] for cell in row}))
                      for d in eggbox(gs)]
            print("  T3 egg-box (size, rows, cols, cell sizes):", shapes)
            rs = T.family("right")
            ls = T.family("left")
            inter = {R & L for R in rs for L in ls if R & L}
            print("  distinct nonempty R^L:", len(inter),
                  " equals bi family:", inter == set(fam))
            # f L g  iff  B(f) L' B(g)
            fidx = {A: i for i, A in enumerate(fam)}
            lclass = gs["L"]["id"]
            lp = induced(fam, gs["L"])
            ok = True
            for f in range(27):
                Bf = T.closure((1 << f) | T.sand[f][f])
                for g in range(27):
                    Bg = T.closure((1 << g) | T.sand[g][g])
                    if (lclass[f] == lclass[g]) != (lp["id"][fidx[Bf]] == lp["id"][fidx[Bg]]):
                        ok = False
            print("  f L g iff B(f) L' B(g):", ok)

    # hand-made corpus
    z, p11, p12, p21, p22 = range(5)
    bt = [[z] * 5 for _ in range(5)]
    pr = {p11: (0, 0), p12: (0, 1), p21: (1, 0), p22: (1, 1)}
    for x, (i, j) in pr.items():
        for y, (k, l) in pr.items():
            bt[x][y] = {(0, 0): p11, (0, 1): p12, (1, 0): p21, (1, 1): p22}[(i, l)] if j == k else z
    brandt = OSG(["z", "p11", "p12", "p21", "p22"], bt, [])
    report_instance("brandt2", brandt)

    lz = OSG(["a", "b", "c"], [[0, 0, 0], [1, 1, 1], [2, 2, 2]], [(0, 1)])
    report_instance("leftzero3", lz)

    ch = OSG(["x0", "x1", "x2"],
             [[0, 0, 0], [0, 1, 1], [0, 1, 2]], [(0, 1), (1, 2)])
    report_instance("chain3", ch)

    nl = OSG(["z", "a"], [[0, 0], [0, 0]], [])
    report_instance("null2", nl)


if __name__ == "__main__":
    main()
