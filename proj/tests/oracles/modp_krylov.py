"""Minimal polynomial of x modulo a prime, in full Q[G x G] coordinates.

Independent of the C++ library (own closure, own sparse matrix, own
elimination). Optionally compares against integer coefficients given as a
Python list literal in a file, reduced mod p.

usage: modp_krylov.py "n=5 a=(1 2 3 4 5) b=(1 2)" [coeffs.txt] [p]
"""
import sys

import numpy as np
import scipy.sparse as sps

import numeric_eigs as ne


def min_poly_mod_p(text, p):
    n, a, b = ne.parse(text)
    elems = [tuple(range(n))]
    seen = {elems[0]: 0}
    i = 0
    while i < len(elems):
        for g in (a, b):
            h = ne.compose(g, elems[i])
            if h not in seen:
                seen[h] = len(elems)
                elems.append(h)
        i += 1
    order = len(elems)
    sup = {}
    for g in elems:
        gi = ne.inverse(g)
        k = (seen[ne.compose(gi, ne.compose(a, g))], seen[ne.compose(gi, ne.compose(b, g))])
        sup[k] = sup.get(k, 0) + 1
    mul = [[seen[ne.compose(x, y)] for y in elems] for x in elems]
    rows, cols, vals = [], [], []
    for u in range(order):
        for v in range(order):
            for (s, t), c in sup.items():
                rows.append(mul[s][u] * order + mul[t][v])
                cols.append(u * order + v)
                vals.append(c)
    dim = order * order
    m = sps.csr_matrix((np.array(vals, dtype=np.int64), (rows, cols)), shape=(dim, dim))
    v = np.zeros(dim, dtype=np.int64)
    v[0] = 1
    basis = []  # (vector, pivot, combination)
    for k in range(dim + 1):
        w = v.copy()
        comb = np.zeros(k + 1, dtype=np.int64)
        comb[k] = 1
        for vec, piv, cb in basis:
            c = int(w[piv])
            if c:
                w = (w - c * vec) % p
                comb[: len(cb)] = (comb[: len(cb)] - c * cb) % p
        nz = np.nonzero(w)[0]
        if len(nz) == 0:
            return order, [int(x) for x in comb]
        piv = nz[0]
        inv = pow(int(w[piv]), p - 2, p)
        basis.append(((w * inv) % p, piv, (comb * inv) % p))
        v = (m @ v) % p
    raise RuntimeError("no dependency")


def main():
    text = sys.argv[1]
    p = int(sys.argv[3]) if len(sys.argv) > 3 else 1000003
    order, f = min_poly_mod_p(text, p)
    print("order", order, "degree", len(f) - 1)
    if len(sys.argv) > 2:
        ref = [int(c) % p for c in eval(open(sys.argv[2]).read())]
        print("matches reference mod", p, ":", ref == f)


if __name__ == "__main__":
    main()
