#!/usr/bin/env python3
"""Brute-force reference values over the 8-row OR/XOR truth table.

Independent of the C++ library: probabilities are enumerated directly from
the rows and every measure is taken from its defining sum. The printed values
are frozen into the C++ test suites.
"""
import itertools
from collections import Counter
from math import log2

ROWS = []
for x3, x2, x1 in itertools.product((0, 1), repeat=3):
    x4 = x1
    c = x1 | (x2 ^ x3)
    ROWS.append((x1, x2, x3, x4, c))
NAMES = {"x1": 0, "x2": 1, "x3": 2, "x4": 3, "C": 4}


def pmf(cols):
    cnt = Counter(tuple(r[NAMES[c]] for c in cols) for r in ROWS)
    return {k: v / len(ROWS) for k, v in cnt.items()}


def H(cols):
    return -sum(p * log2(p) for p in pmf(cols).values()) if cols else 0.0


def I(x, y, z=()):
    # sum_z p(z) sum_xy p(x,y|z) log p(x,y|z)/(p(x|z)p(y|z))
    x, y, z = list(x), list(y), list(z)
    total = 0.0
    pz = pmf(z) if z else {(): 1.0}
    pxyz = pmf(x + y + z)
    pxz = pmf(x + z)
    pyz = pmf(y + z)
    nx, ny = len(x), len(y)
    for k, p in pxyz.items():
        kx, ky, kz = k[:nx], k[nx:nx + ny], k[nx + ny:]
        total += p * log2(p * pz[kz] / (pxz[kx + kz] * pyz[ky + kz]))
    return total


def bayes_error(f):
    joint = pmf(list(f) + ["C"])
    best = {}
    for k, p in joint.items():
        best[k[:-1]] = max(best.get(k[:-1], 0.0), p)
    return 1.0 - sum(best.values())


vals = {
    "H(C)": H(["C"]),
    "H(C|x1)": H(["x1", "C"]) - H(["x1"]),
    "I(x1;C)": I(["x1"], ["C"]),
    "I(x2;C)": I(["x2"], ["C"]),
    "I({x2,x3};C)": I(["x2", "x3"], ["C"]),
    "I({x1,x4};C)": I(["x1", "x4"], ["C"]),
    "I(x2;C|x3)": I(["x2"], ["C"], ["x3"]),
    "I(x4;C|x1)": I(["x4"], ["C"], ["x1"]),
    "I(x2;x3;C)": I(["x2"], ["x3"], ["C"]) - I(["x2"], ["x3"]),
    "I(x1;x4;C)": I(["x1"], ["x4"], ["C"]) - I(["x1"], ["x4"]),
    "I(x1;x2;C)": I(["x1"], ["x2"], ["C"]) - I(["x1"], ["x2"]),
    "TC(x1,x4,C)": H(["x1"]) + H(["x4"]) + H(["C"]) - H(["x1", "x4", "C"]),
    "I(x2;C|x1,x3,x4)": I(["x2"], ["C"], ["x1", "x3", "x4"]),
    "I({x1,x2,x3};C)": I(["x1", "x2", "x3"], ["C"]),
    "MRMR(x4|[x1])": I(["x4"], ["C"]) - I(["x4"], ["x1"]),
    "bayes(x1)": bayes_error(["x1"]),
    "upper(x1)": 0.5 * (H(["C"]) - I(["x1"], ["C"])),
}
for k, v in vals.items():
    print(f"{k:20s} {v:.15f}")
