"""Circuit families with symmetry spaces known in closed form."""

from __future__ import annotations

import random
from typing import Sequence

from .boolfn import Circuit, Gate


def xor_chain(n: int) -> Circuit:
    """Outputs x_k XOR x_{k+1}; V(f) = {0, 1...1}."""
    if n < 2:
        raise ValueError("xor-chain needs n >= 2")
    names = tuple("x%d" % (k + 1) for k in range(n))
    gates = tuple(Gate("d%d" % (k + 1), "XOR", (names[k], names[k + 1])) for k in range(n - 1))
    return Circuit(names, gates, tuple(g.name for g in gates))


def linear_map(rows: Sequence[int], n: int) -> Circuit:
    """f(x) = Ax over GF(2); row r of A is an int with column 0 most significant.

    V(f) is the null space of A.
    """
    names = tuple("x%d" % (k + 1) for k in range(n))
    gates = [Gate("zero", "CONST0", ())]
    outs = []
    for j, r in enumerate(rows):
        terms = [names[k] for k in range(n) if (r >> (n - 1 - k)) & 1]
        out = "y%d" % (j + 1)
        if len(terms) < 2:
            terms = (terms + ["zero"]) if terms else ["zero", "zero"]
        gates.append(Gate(out, "XOR", tuple(terms)))
        outs.append(out)
    return Circuit(names, tuple(gates), tuple(outs))


def random_matrix(m: int, n: int, rng: random.Random) -> list:
    return [rng.getrandbits(n) for _ in range(m)]


def nullspace(rows: Sequence[int], n: int) -> list:
    """Basis of {x | Ax = 0}, by row reduction on explicit bit lists.

    Kept separate from :mod:`xorsym.gf2` so it can serve as an oracle.
    """
    A = [[(r >> (n - 1 - k)) & 1 for k in range(n)] for r in rows]
    pivot_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                A[i] = [a ^ b for a, b in zip(A[i], A[r])]
        pivot_cols.append(c)
        r += 1
    basis = []
    for free in (c for c in range(n) if c not in pivot_cols):
        x = [0] * n
        x[free] = 1
        for i, pc in enumerate(pivot_cols):
            x[pc] = A[i][free]
        basis.append(int("".join(map(str, x)), 2))
    return basis
