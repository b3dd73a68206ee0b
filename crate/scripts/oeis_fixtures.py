#!/usr/bin/env python3
"""Writes the OEIS prefix fixtures used by the `oeis` command and its tests.

Each sequence is computed from its standard recurrence, independently of
the Rust crate.
"""
from math import comb, factorial
from pathlib import Path

N = 20
OUT = Path(__file__).resolve().parent.parent / "crates" / "core" / "data" / "oeis"


def bell(n):
    # Bell triangle
    row, out = [1], [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[0])
    return out[: n + 1]


def catalan(n):
    c = [1]
    for k in range(n):
        c.append(c[-1] * 2 * (2 * k + 1) // (k + 2))
    return c


def rook(n):
    # a(k) = 2k a(k-1) - (k-1)^2 a(k-2)
    a = [1, 2]
    for k in range(2, n + 1):
        a.append(2 * k * a[-1] - (k - 1) ** 2 * a[-2])
    return a[: n + 1]


def sets_of_lists(n):
    # a(k) = (2k-1) a(k-1) - (k-1)(k-2) a(k-2)
    a = [1, 1]
    for k in range(2, n + 1):
        a.append((2 * k - 1) * a[-1] - (k - 1) * (k - 2) * a[-2])
    return a[: n + 1]


def fuss(p, n):
    return [comb(p * k, k) // ((p - 1) * k + 1) for k in range(n + 1)]


SEQS = {
    "A000110": ("Bell numbers", bell(N)),
    "A000108": ("Catalan numbers", catalan(N)),
    "A002720": ("partial permutations", rook(N)),
    "A000262": ("sets of lists", sets_of_lists(N)),
    "A002293": ("quaternary trees", fuss(4, N)),
    "A001764": ("ternary trees", fuss(3, N)),
}

assert rook(4) == [sum(factorial(k) * comb(m, k) ** 2 for k in range(m + 1)) for m in range(5)]

OUT.mkdir(parents=True, exist_ok=True)
for sid, (name, vals) in SEQS.items():
    lines = [f"# {sid} {name}", "# offset 0"] + [str(v) for v in vals]
    (OUT / f"{sid}.txt").write_text("\n".join(lines) + "\n")
    print(sid, vals[:8])
