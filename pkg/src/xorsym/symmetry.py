"""Polynomial-time XOR-symmetry space of a function given as an ordered BDD.

For a node T at level i, V(T) is the set of shifts s over the variables
i..n with T(x+s) = T(x) for all x; for two nodes T, U at the same level,
V(T,U) = {s | T(x) = U(x+s)} is either empty or the coset s_TU + V(T).
Levels are processed from n down to 1, and everything at level i is built
from the already-finished tables of the deeper levels:

* V(T) for T = p_i(T1, T2) is (V(T1) ∩ V(T2)) with a 0 in front, plus
  (1, s_T1T2) when the children are shifts of one another.
* V(T,U) first tries a 0 in the new coordinate (hi maps to hi, lo to lo)
  and then a 1 (hi maps to lo), intersecting the two child cosets.

When a child sits j > i+1 levels down, the skipped variables are free in
its symmetry space and zero in its witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import gf2
from .bdd import DEFAULT_NODE_CAP, Obdd, compile, is_terminal, reduce
from .errors import InvariantError
from .gf2 import AffineSpace, Subspace


@dataclass
class LevelTables:
    """Per-node spaces and per-pair cosets, filled bottom-up.

    ``node_space[T]`` lives over coordinates level(T)..n. ``pair_witness``
    is keyed by the sorted id pair of two distinct same-level nodes and
    holds ``None`` when V(T,U) is empty.
    """

    n: int
    node_space: dict = field(default_factory=dict)
    pair_witness: dict = field(default_factory=dict)

    def witness(self, T, U) -> Optional[AffineSpace]:
        key = (T, U) if T <= U else (U, T)
        try:
            return self.pair_witness[key]
        except KeyError:
            raise InvariantError("no pair entry for %r, %r" % key) from None

    def space(self, T) -> Subspace:
        try:
            return self.node_space[T]
        except KeyError:
            raise InvariantError("no space for node %r" % (T,)) from None


def _level(d: Obdd, u) -> int:
    return d.n + 1 if is_terminal(u) else d.nodes[u].level


def padded_space(d: Obdd, C, i: int, t: LevelTables) -> Subspace:
    """V(C) seen from a level-i parent: ambient n-i."""
    width = d.n - i
    if is_terminal(C):
        return Subspace.full(width)
    V = t.space(C)
    return gf2.extend_free(V, width - V.ambient)


def child_coset(d: Obdd, T1, U1, i: int, t: LevelTables) -> Optional[AffineSpace]:
    """V(T1,U1) for children of level-i nodes, over coordinates i+1..n."""
    if T1 == U1:
        return AffineSpace(0, padded_space(d, T1, i, t))
    if is_terminal(T1) or is_terminal(U1):
        # distinct terminals, or a constant against a node that depends on its variable
        return None
    j = _level(d, T1)
    if j != _level(d, U1):
        return None
    w = t.witness(T1, U1)
    if w is None:
        return None
    return AffineSpace(w.offset, gf2.extend_free(w.space, j - i - 1))


def node_space(d: Obdd, T, t: LevelTables) -> Subspace:
    i, T1, T2 = d.nodes[T]
    width = d.n - i
    base = gf2.intersect(padded_space(d, T1, i, t), padded_space(d, T2, i, t))
    swap = child_coset(d, T1, T2, i, t)
    rows = list(base.rows)
    if swap is not None:
        rows.append(gf2.prepend(1, swap.offset, width))
    return gf2.span(rows, width + 1)


def pair_witness(d: Obdd, T, U, t: LevelTables) -> Optional[AffineSpace]:
    i, T1, T2 = d.nodes[T]
    j, U1, U2 = d.nodes[U]
    if i != j:
        raise InvariantError("pair_witness on nodes at levels %d and %d" % (i, j))
    width = d.n - i
    for bit, (a, b) in ((0, (U1, U2)), (1, (U2, U1))):
        hit = gf2.affine_intersect(child_coset(d, T1, a, i, t), child_coset(d, T2, b, i, t))
        if hit is not None:
            return AffineSpace(gf2.prepend(bit, hit.offset, width), t.space(T))
    return None


def analyze(d: Obdd) -> tuple:
    """Reduce ``d`` and run the level sweep; returns (reduced obdd, tables, basis)."""
    d = reduce(d)
    t = LevelTables(d.n)
    levels = d.by_level()
    for i in range(d.n, 0, -1):
        ids = levels.get(i, [])
        for T in ids:
            t.node_space[T] = node_space(d, T, t)
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                T, U = ids[a], ids[b]
                t.pair_witness[(T, U)] = pair_witness(d, T, U, t)
    result = Subspace.full(d.n)
    for o in d.outputs:
        if is_terminal(o):
            continue
        V = t.space(o)
        result = gf2.intersect(result, gf2.extend_free(V, d.n - V.ambient))
    return d, t, result


def symmetry_basis(d: Obdd) -> Subspace:
    """Canonical basis of {s | f(x+s) = f(x) for all x}, ambient n."""
    return analyze(d)[2]


def has_nonzero_symmetry(d: Obdd) -> bool:
    return symmetry_basis(d).dimension > 0


def circuit_basis(c, order=None, max_nodes: int = DEFAULT_NODE_CAP) -> Subspace:
    """V(f) for a circuit, compiled under ``order`` but reported in input order."""
    d = compile(c, order, max_nodes=max_nodes)
    pos = {v: k for k, v in enumerate(d.order)}
    return gf2.permute(symmetry_basis(d), [pos[v] for v in c.inputs])
