#!/usr/bin/env python3
"""Independent oracle for the frozen expected values used by the C++ tests.

Shares no code with the library. Builds wired cover trees directly, takes
determinants by rational Gaussian elimination, counts oriented spanning trees
by exhaustive search and simulates rotor walks. Run it to regenerate the
numbers pinned in tests/*.cpp:

    python3 tests/oracle/oracle.py
"""
from fractions import Fraction
from itertools import product
from math import gcd, log, sqrt
import sympy

FIB = [[0, 1], [1, 1]]


def biregular(a, b):
    return [[0, a], [b, 0]]


def chi(adj):
    return [[j for j in range(len(adj)) for _ in range(adj[i][j])] for i in range(len(adj))]


def wired(adj, root, h):
    """Returns (types, nbrs, sink); nbrs[x][0] is the ancestor slot."""
    ch = chi(adj)
    types, depth, parent = [root], [0], [None]
    nbrs = []
    q = 0
    while q < len(types):
        if depth[q] < h:
            for t in ch[types[q]]:
                types.append(t)
                depth.append(depth[q] + 1)
                parent.append(q)
        q += 1
    inner = [v for v in range(len(types)) if depth[v] < h]
    sink = len(inner)
    kids = {v: [] for v in inner}
    for v in range(1, len(types)):
        kids[parent[v]].append(v)
    for v in inner:
        row = [sink if parent[v] is None else parent[v]]
        row += [sink if depth[c] == h else c for c in kids[v]]
        nbrs.append(row)
    return [types[v] for v in inner], nbrs, sink


def det_fraction(m):
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    d = Fraction(1)
    for k in range(n):
        p = next(i for i in range(k, n) if a[i][k] != 0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            d = -d
        d *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return int(d)


def laplacian(nbrs, sink):
    n = len(nbrs)
    m = [[0] * n for _ in range(n)]
    for x, row in enumerate(nbrs):
        m[x][x] = len(row)
        for y in row:
            if y != sink:
                m[x][y] -= 1
    return m


def brute(nbrs, sink, limit=10**6):
    sizes = [len(r) for r in nbrs]
    total = 1
    for s in sizes:
        total *= s
    if total > limit:
        return None
    count = 0
    for choice in product(*[range(s) for s in sizes]):
        ok = True
        for start in range(len(nbrs)):
            seen = set()
            x = start
            while x != sink:
                if x in seen:
                    ok = False
                    break
                seen.add(x)
                x = nbrs[x][choice[x]]
            if not ok:
                break
        count += ok
    return count


def simulate_root(nbrs, sink, limit=10**6):
    rot = [0] * len(nbrs)
    down = up = 0
    bits = []
    for n in range(1, limit + 1):
        x = 0
        while True:
            rot[x] = (rot[x] + 1) % len(nbrs[x])
            y = nbrs[x][rot[x]]
            if y == sink:
                side = 0 if (x == 0 and rot[x] == 0) else 1
                break
            x = y
        bits.append(side)
        if side:
            up += 1
        else:
            down += 1
        if not any(rot):
            return n, down, up, bits
    return None


def forest(adj, hmax):
    m = len(adj)
    d = [sum(r) for r in adj]
    F = {(i, 1): (1, d[i]) for i in range(m)}
    for h in range(2, hmax + 1):
        for i in range(m):
            down = 1
            for j in range(m):
                down *= sum(F[(j, h - 1)]) ** adj[i][j]
            up = down * sum(Fraction(adj[i][j] * F[(j, h - 1)][1], sum(F[(j, h - 1)])) for j in range(m))
            assert up.denominator == 1
            F[(i, h)] = (down, int(up))
    return F


def root_order(adj, hmax):
    m = len(adj)
    d = [sum(r) for r in adj]
    ch = chi(adj)
    S = {(i, 1): (1, d[i]) for i in range(m)}
    for h in range(2, hmax + 1):
        for i in range(m):
            down = 1
            for j in ch[i]:
                r = sum(S[(j, h - 1)])
                down = down * r // gcd(down, r)
            up = down * sum(Fraction(adj[i][j] * S[(j, h - 1)][1], sum(S[(j, h - 1)])) for j in range(m))
            assert up.denominator == 1
            S[(i, h)] = (down, int(up))
    return S


def main():
    print("== forest tables / determinant / brute force")
    for name, adj in [("fib", FIB), ("bireg23", biregular(2, 3))]:
        F = forest(adj, 6)
        for i in range(2):
            for h in range(1, 7):
                types, nbrs, sink = wired(adj, i, h)
                det = det_fraction(laplacian(nbrs, sink)) if len(nbrs) <= 60 else None
                bf = brute(nbrs, sink, 40000)
                print(name, "type", i + 1, "h", h, "F", F[(i, h)], "order", sum(F[(i, h)]),
                      "det", det, "brute", bf, "nonsink", len(nbrs))
    print("== reduced laplacians")
    print(laplacian(*wired(FIB, 1, 2)[1:]))
    print(laplacian(*wired(biregular(2, 3), 0, 2)[1:]))
    print("== root order recursion vs simulation")
    for name, adj in [("fib", FIB), ("bireg23", biregular(2, 3))]:
        S = root_order(adj, 5)
        for i in range(2):
            for h in range(1, 6):
                nbrs, sink = wired(adj, i, h)[1:]
                sim = simulate_root(nbrs, sink, 10**6)
                print(name, "type", i + 1, "h", h, "rec", S[(i, h)], sum(S[(i, h)]),
                      "sim", sim[:3] if sim else None)
    nbrs, sink = wired(FIB, 1, 2)[1:]
    print("fib h2 type2 period bits", "".join(map(str, simulate_root(nbrs, sink)[3])))
    print("== hitting probabilities (random-walk first-step linear solve)")
    for i, h in [(0, 2), (1, 2), (1, 3)]:
        nbrs, sink = wired(FIB, i, h)[1:]
        n = len(nbrs)
        # P(hit s_down from x): solve (I - P) u = b exactly.
        A = sympy.zeros(n, n)
        b = sympy.zeros(n, 1)
        for x, row in enumerate(nbrs):
            A[x, x] = 1
            for k, y in enumerate(row):
                if y == sink:
                    if x == 0 and k == 0:
                        b[x] += sympy.Rational(1, len(row))
                else:
                    A[x, y] -= sympy.Rational(1, len(row))
        print("fib H_down type", i + 1, "h", h, A.LUsolve(b)[0])
    print("== fixed points")
    for a, bb in [(2, 3)]:
        u1, u2 = sympy.symbols("u1 u2", positive=True)
        sol = sympy.solve([u1 - a * u2 / (1 + u2), u2 - bb * u1 / (1 + u1)], [u1, u2], dict=True)
        print("biregular", a, bb, sol)
    u1, u2 = sympy.symbols("u1 u2", positive=True)
    print("fib", sympy.solve([u1 - u2 / (1 + u2), u2 - u1 / (1 + u1) - u2 / (1 + u2)], [u1, u2], dict=True))
    lam = sympy.symbols("lam")
    print("fib charpoly roots", sympy.solve(sympy.Matrix(FIB).charpoly(lam).as_expr(), lam))
    print("bireg charpoly roots", sympy.solve(sympy.Matrix(biregular(2, 3)).charpoly(lam).as_expr(), lam))
    print("== gamma [[1]]", [Fraction(F[1], F[0]) for F in (forest([[1]], 5)[(0, h)] for h in range(1, 6))])
    print("== log consistency sample: ln Fdown fib type2 h8", log(forest(FIB, 8)[(1, 8)][0]))
    print("== closed form check")
    bad = 0
    for a in range(1, 5):
        for b in range(1, 5):
            S = root_order(biregular(a, b), 12)
            for h in range(1, 13):
                k, odd = divmod(h, 2)
                geo = sum((a * b) ** t for t in range(k + odd))
                r1 = geo * (a + 1) if odd else geo * (a + 1) * b + 1
                if r1 != sum(S[(0, h)]):
                    bad += 1
    print("closed-form mismatches", bad)


if __name__ == "__main__":
    main()
