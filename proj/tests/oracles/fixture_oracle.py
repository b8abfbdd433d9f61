#!/usr/bin/env python3
"""Independent check of the printed fixtures against the semigroupoid and lr axioms,
plus a few hand-derived values (pseudo-inverses, right inverses)."""
from census_oracle import semigroupoid_ok, lr_ok, U


def build(labels, comps, plus):
    idx = {l: i for i, l in enumerate(labels)}
    n = len(labels)
    t = [[U] * n for _ in range(n)]
    for a, b, c in comps:
        t[idx[a]][idx[b]] = idx[c]
    p = [idx[plus[l]] for l in labels]
    return n, t, p


def first_s_violation(n, t, labels):
    for s in range(n):
        for u in range(n):
            for r in range(n):
                su, ur = t[s][u], t[u][r]
                su_r = t[su][r] if su is not U else U
                s_ur = t[s][ur] if ur is not U else U
                trig = (su is not U and ur is not U) or (su is not U and su_r is not U) \
                    or (ur is not U and s_ur is not U)
                if trig and (U in (su, ur, su_r, s_ur) or su_r != s_ur):
                    return labels[s], labels[u], labels[r]


ex66 = [('e', 'e', 'e'), ('x', 'e', 'y'), ('y', 'e', 'y'),
        ('x+', 'x', 'x'), ('x+', 'y', 'y'), ('x+', 'x+', 'x+'), ('x+', 'y+', 'y+'),
        ('y+', 'x', 'y'), ('y+', 'y', 'y'), ('y+', 'x+', 'y+'), ('y+', 'y+', 'y+')]
p66 = {'e': 'e', 'x': 'x+', 'y': 'y+', 'x+': 'x+', 'y+': 'y+'}
semilat = [(a, b, a if a == b else '0') for a in 'ef0' for b in 'ef0']
fixtures = {
    'r23_star': (['e', 'f'], [('e', 'e', 'e'), ('f', 'f', 'f'), ('e', 'f', 'e'), ('f', 'e', 'e')], {'e': 'e', 'f': 'f'}),
    'r23_ast': (['e', 'f'], [('e', 'e', 'e'), ('f', 'f', 'f'), ('e', 'f', 'e'), ('f', 'e', 'e')], {'e': 'f', 'f': 'f'}),
    'ex6_3': (['e', 'f', '0'], semilat, {'e': 'e', 'f': 'f', '0': '0'}),
    'ex6_4': (['e', 'f', '0', 's'], semilat + [('e', 's', 's'), ('f', 's', 's'), ('0', 's', 's')],
              {'e': 'e', 'f': 'f', '0': '0', 's': '0'}),
    'ex6_5': (['x+', 'x'], [('x+', 'x+', 'x+'), ('x+', 'x', 'x')], {'x+': 'x+', 'x': 'x+'}),
    'ex6_6': (['e', 'x', 'y', 'x+', 'y+'], ex66, p66),
    'ex6_7': (['e', 'x', 'y', 'x+', 'y+', 's'], ex66 + [('e', 's', 's')], dict(p66, s='e')),
    'ex6_7_repaired': (['e', 'x', 'y', 'x+', 'y+', 'g', 's'], ex66 + [('g', 'g', 'g'), ('g', 's', 's')],
                       dict(p66, g='g', s='g')),
}
for name, (labels, comps, plus) in fixtures.items():
    n, t, p = build(labels, comps, plus)
    print(f"{name}: pairs={len(comps)} semigroupoid={semigroupoid_ok(n, t)} lr={lr_ok(n, t, p)}"
          f" first_s_violation={first_s_violation(n, t, labels)}")


def pseudo_inverses(n, t, s):
    out = []
    for u in range(n):
        st, ts = t[s][u], t[u][s]
        if st is U or ts is U:
            continue
        if t[st][s] == s and t[ts][u] == u:
            out.append(u)
    return out


n, t, p = build(*fixtures['ex6_3'])
print('ex6_3 pseudo-inverses:', [pseudo_inverses(n, t, s) for s in range(n)])
n, t, p = build(*fixtures['ex6_6'])
print('ex6_6 pseudo-inverses:', [pseudo_inverses(n, t, s) for s in range(n)])
# right inverses in C(ex6_6): x.t defined in C means x t^+ = x
labels = fixtures['ex6_6'][0]
ri = []
for x in range(n):
    ri.append([labels[u] for u in range(n) if t[x][p[u]] == x and t[x][u] == p[x]])
print('C(ex6_6) right-inverse witnesses:', dict(zip(labels, ri)))
