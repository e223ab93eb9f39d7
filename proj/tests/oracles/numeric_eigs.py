"""Numerical eigenvalues of left multiplication by x on Q[G x G].

Independent of the C++ library: own closure, own matrix, LAPACK eigenvalues.
Prints distinct eigenvalues (rounded) and checks given quadratic factors.

usage: numeric_eigs.py "n=5 a=(1 2 3 4 5) b=(1 2 3)" [c1,c0 ...]
  each c1,c0 names a factor t^2 + c1 t + c0 whose roots are looked up.
"""
import re
import sys

import numpy as np


def parse(text):
    n = int(re.search(r"n=(\d+)", text).group(1))

    def perm(key):
        img = list(range(n))
        body = re.search(key + r"=((?:\([^)]*\))+)", text).group(1)
        for cyc in re.findall(r"\(([^)]*)\)", body):
            pts = [int(x) - 1 for x in cyc.split()]
            for i, p in enumerate(pts):
                img[p] = pts[(i + 1) % len(pts)]
        return tuple(img)

    return n, perm("a"), perm("b")


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p):
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def main():
    n, a, b = parse(sys.argv[1])
    elems = [tuple(range(n))]
    seen = {elems[0]: 0}
    i = 0
    while i < len(elems):
        for g in (a, b):
            h = compose(g, elems[i])
            if h not in seen:
                seen[h] = len(elems)
                elems.append(h)
        i += 1
    order = len(elems)
    support = {}
    for g in elems:
        gi = inverse(g)
        key = (seen[compose(gi, compose(a, g))], seen[compose(gi, compose(b, g))])
        support[key] = support.get(key, 0) + 1
    dim = order * order
    m = np.zeros((dim, dim))
    for u in range(order):
        for v in range(order):
            for (s, t), c in support.items():
                r = seen[compose(elems[s], elems[u])] * order + seen[compose(elems[t], elems[v])]
                m[r, u * order + v] += c
    eig = np.linalg.eigvals(m)
    distinct = sorted({(round(z.real, 6), round(z.imag, 6)) for z in eig})
    print("order", order, "distinct", len(distinct))
    for spec in sys.argv[2:]:
        c1, c0 = (float(x) for x in spec.split(","))
        for r in np.roots([1, c1, c0]):
            d = np.min(np.abs(eig - r))
            print(f"factor t^2{c1:+g}t{c0:+g}: root {r:.6f} nearest eigenvalue distance {d:.2e}")


if __name__ == "__main__":
    main()
