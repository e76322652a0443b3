"""Exhaustive ground truth for V(f), using nothing but evaluations of f.

Deliberately simple: tabulate f once, then test every candidate shift s in
ascending order, stopping at the first x with f(x+s) != f(x). The scan runs
in :mod:`xorsym.kernels`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from . import kernels
from .bdd import Obdd
from .boolfn import Circuit, TruthTable, circuit_to_table
from .errors import ResourceError
from .gf2 import Subspace, span

DEFAULT_CAP = 13


@dataclass(frozen=True)
class Evaluable:
    """Black-box f: B^n -> B^m; ``fn`` maps an input int to an output int."""

    n: int
    m: int
    fn: Callable[[int], int]
    table: Optional[TruthTable] = None

    def __call__(self, x: int) -> int:
        return self.fn(x)

    def rows(self) -> tuple:
        if self.table is not None:
            return self.table.rows
        return tuple(self.fn(x) for x in range(1 << self.n))


def as_evaluable(f, cap: int = DEFAULT_CAP) -> Evaluable:
    if isinstance(f, Evaluable):
        return f
    if isinstance(f, TruthTable):
        return Evaluable(f.n, f.m, f, f)
    if isinstance(f, Circuit):
        _check_cap(f.n, cap)
        t = circuit_to_table(f, cap=max(cap, f.n))
        return Evaluable(t.n, t.m, t, t)
    if isinstance(f, Obdd):
        return Evaluable(f.n, f.m, f)
    raise TypeError("cannot evaluate %r" % type(f).__name__)


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ResourceError("oracle arity %d over cap %d" % (n, cap))


def _codes(rows: Sequence[int]) -> np.ndarray:
    # equal outputs -> equal codes; dense so wide (m > 64) outputs fit uint64
    ids = {}
    return np.fromiter((ids.setdefault(r, len(ids)) for r in rows), dtype=np.uint64, count=len(rows))


def invariant_shifts(f, cap: int = DEFAULT_CAP) -> list:
    """All s (as ints, ascending) with f(x+s) = f(x) for every x."""
    ev = as_evaluable(f, cap)
    _check_cap(ev.n, cap)
    return kernels.invariant_shifts(_codes(ev.rows()))


def brute_force_space(f, cap: int = DEFAULT_CAP) -> Subspace:
    ev = as_evaluable(f, cap)
    return span(invariant_shifts(ev, cap), ev.n)


def brute_force_decide(f, prefix: Sequence[int] = (), cap: int = DEFAULT_CAP) -> bool:
    """Is there a nonzero s in V(f) whose first coordinates equal ``prefix``?"""
    ev = as_evaluable(f, cap)
    _check_cap(ev.n, cap)
    k = len(prefix)
    if k > ev.n:
        raise ValueError("prefix longer than arity")
    value = 0
    for b in prefix:
        value = (value << 1) | int(b)
    return bool(kernels.shift_exists(_codes(ev.rows()), ev.n, value, k))


def decision_handle(f, cap: int = DEFAULT_CAP):
    """A prefix -> bool callable that tabulates f only once."""
    ev = as_evaluable(f, cap)
    _check_cap(ev.n, cap)
    codes = _codes(ev.rows())

    def decide(prefix):
        value = 0
        for b in prefix:
            value = (value << 1) | int(b)
        return bool(kernels.shift_exists(codes, ev.n, value, len(prefix)))

    decide.n = ev.n
    return decide
