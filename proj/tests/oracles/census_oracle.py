#!/usr/bin/env python3
"""Independent brute-force census of small left restriction semigroupoids and
locally inductive left constellations on carriers {0..n-1}.

Written without reference to the C++ sources. Enumeration goes plus-map first,
then table cells with per-cell domains pruned by lr1 (semigroupoids) or c3/c4
(constellations), then the remaining axioms by direct quantification.
Used once to freeze the regression counts in tests/test_enumerate.cpp.
"""
import itertools
import sys

U = None  # undefined product


def semigroupoid_ok(n, t):
    for s in range(n):
        for u in range(n):
            for r in range(n):
                su, ur = t[s][u], t[u][r]
                su_r = t[su][r] if su is not U else U
                s_ur = t[s][ur] if ur is not U else U
                trig = (su is not U and ur is not U) or (su is not U and su_r is not U) \
                    or (ur is not U and s_ur is not U)
                if trig:
                    if U in (su, ur, su_r, s_ur) or su_r != s_ur:
                        return False
    return True


def lr_ok(n, t, p):
    for s in range(n):
        if t[p[s]][s] != s:
            return False
    for s in range(n):
        for u in range(n):
            a, b = t[p[s]][p[u]], t[p[u]][p[s]]
            if (a is U) != (b is U) or a != b:
                return False
            x = t[p[s]][u]
            if x is not U and (t[p[s]][p[u]] is U or p[x] != t[p[s]][p[u]]):
                return False
            y = t[s][u]
            if y is not U:
                l, r = t[s][p[u]], t[p[y]][s]
                if l is U or r is U or l != r:
                    return False
    return True


def natural_leq(n, t, p):
    return [[t[p[s]][u] == s for u in range(n)] for s in range(n)]


def lrs_census(n):
    out = []
    pairs = [(i, j) for i in range(n) for j in range(n)]
    for p in itertools.product(range(n), repeat=n):
        forced = {}
        bad = False
        for s in range(n):
            key = (p[s], s)
            if key in forced and forced[key] != s:
                bad = True
            forced[key] = s
        if bad:
            continue
        domains = [[forced[c]] if c in forced else [U] + list(range(n)) for c in pairs]
        for vals in itertools.product(*domains):
            t = [[vals[i * n + j] for j in range(n)] for i in range(n)]
            if lr_ok(n, t, p) and semigroupoid_ok(n, t):
                out.append((t, p))
    return out


def semigroupoid_count(n):
    c = 0
    for vals in itertools.product([U] + list(range(n)), repeat=n * n):
        t = [[vals[i * n + j] for j in range(n)] for i in range(n)]
        c += semigroupoid_ok(n, t)
    return c


def partial_orders(n):
    off = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in itertools.product([False, True], repeat=len(off)):
        leq = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(off, bits):
            leq[i][j] = b
        if any(leq[i][j] and leq[j][i] for i, j in off):
            continue
        if any(leq[i][j] and leq[j][k] and not leq[i][k]
               for i in range(n) for j in range(n) for k in range(n)):
            continue
        yield leq


def constellation_ok(n, t, p):
    plus = set(p)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                yz = t[y][z]
                if yz is not U:
                    if (t[x][y] is not U) != (t[x][yz] is not U):
                        return False
                    if t[x][y] is not U:
                        xy = t[x][y]
                        if t[xy][z] is U or t[xy][z] != t[x][yz]:
                            return False
    for e in plus:
        for x in range(n):
            if (t[e][x] == x) != (e == p[x]):
                return False
            if t[x][e] is not U and t[x][e] != x:
                return False
    return True


def li_ok(n, t, p, leq):
    plus = sorted(set(p))

    def cores(x, e):
        cand = [y for y in range(n) if leq[y][x] and t[y][e] is not U]
        if not cand:
            return 'empty'
        mx = [m for m in cand if all(leq[y][m] for y in cand)]
        return mx[0] if len(mx) == 1 else 'nomax'

    def val(r):
        return r not in ('empty', 'nomax')

    for x in range(n):
        for y in range(n):
            if leq[x][y]:
                if not leq[p[x]][p[y]]:
                    return False
                for x2 in range(n):
                    for y2 in range(n):
                        if leq[x2][y2] and t[x][x2] is not U and t[y][y2] is not U:
                            if not leq[t[x][x2]][t[y][y2]]:
                                return False
    for e in plus:
        for x in range(n):
            if leq[e][p[x]]:
                if len([y for y in range(n) if leq[y][x] and p[y] == e]) != 1:
                    return False
            if cores(x, e) == 'nomax':
                return False
    for e in plus:
        for x in range(n):
            for y in range(n):
                xy = t[x][y]
                if xy is None:
                    continue
                a = cores(xy, e)
                if val(a) != val(cores(y, e)):
                    return False
                if val(a):
                    ye = cores(y, e)
                    b = cores(x, p[ye])
                    if not val(b) or p[a] != p[b]:
                        return False
    for e in plus:
        for f in plus:
            if leq[f][e]:
                for x in range(n):
                    if val(cores(x, e)) != val(cores(x, f)):
                        return False
            if leq[e][f]:
                r = [y for y in range(n) if leq[y][f] and p[y] == e]
                c = cores(e, f)
                if len(r) != 1 or not val(c) or r[0] != c:
                    return False
    # wo9
    comp = {e: {e} for e in plus}
    changed = True
    while changed:
        changed = False
        for e in plus:
            for f in plus:
                if (leq[e][f] or leq[f][e]) and comp[e] is not comp[f]:
                    merged = comp[e] | comp[f]
                    for g in merged:
                        comp[g] = merged
                    changed = True
    for e in plus:
        for f in plus:
            c = cores(e, f)
            if f in comp[e]:
                low = [g for g in plus if leq[g][e] and leq[g][f]]
                m = [g for g in low if all(leq[h][g] for h in low)]
                if len(m) != 1 or not val(c) or c != m[0]:
                    return False
            elif c != 'empty':
                return False
    return True


def lic_census(n):
    out = []
    pairs = [(i, j) for i in range(n) for j in range(n)]
    orders = list(partial_orders(n))
    for p in itertools.product(range(n), repeat=n):
        plus = set(p)
        if any(p[e] != e for e in plus):
            continue  # c3 with x = e forces e^+ = e
        domains = []
        for (i, j) in pairs:
            dom = [U] + list(range(n))
            if i in plus:
                dom = [v for v in dom if (v == j) == (i == p[j])]
            if j in plus:
                dom = [v for v in dom if v is U or v == i]
            domains.append(dom)
        for vals in itertools.product(*domains):
            t = [[vals[i * n + j] for j in range(n)] for i in range(n)]
            if not constellation_ok(n, t, p):
                continue
            for leq in orders:
                if li_ok(n, t, p, leq):
                    out.append((t, p, leq))
    return out


def iso_classes(n, structures):
    """Number of classes under relabelling by permutations of the carrier."""
    def relabel(st, g):
        inv = [0] * n
        for i, gi in enumerate(g):
            inv[gi] = i
        t, p = st[0], st[1]
        m = lambda v: U if v is U else g[v]
        key = (tuple(tuple(-1 if m(t[inv[a]][inv[b]]) is U else m(t[inv[a]][inv[b]]) for b in range(n)) for a in range(n)),
               tuple(g[p[inv[a]]] for a in range(n)))
        if len(st) == 3:
            key += (tuple(tuple(st[2][inv[a]][inv[b]] for b in range(n)) for a in range(n)),)
        return key
    seen = set()
    for st in structures:
        seen.add(min(relabel(st, g) for g in itertools.permutations(range(n))))
    return len(seen)


if __name__ == '__main__':
    top = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    for n in range(1, top + 1):
        lrs = lrs_census(n)
        lic = lic_census(n)
        print(f"n={n} semigroupoids={semigroupoid_count(n)} lrs={len(lrs)} lic={len(lic)}")
        # build_C image must coincide with the constellation census
        img = set()
        for t, p in lrs:
            leq = natural_leq(n, t, p)
            ct = tuple(tuple(t[s][u] if (t[s][p[u]] == s) else U for u in range(n)) for s in range(n))
            img.add((ct, tuple(p), tuple(map(tuple, leq))))
        cen = {(tuple(map(tuple, t)), tuple(p), tuple(map(tuple, leq))) for t, p, leq in lic}
        print(f"     C(lrs census) == lic census: {img == cen}")
        print(f"     classes up to relabelling: lrs={iso_classes(n, lrs)} lic={iso_classes(n, lic)}")
