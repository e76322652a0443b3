"""Reduction and instance generators around the nonzero-symmetry question.

``build_F`` turns a single-output circuit C over p_1..p_n into

    F(C) = (p OR (h(C) XOR D)) AND (NOT p OR D)

over inputs (p, p_1..p_n, q_1..q_n), where h(C) reads p_i AND q_i wherever
C reads p_i and D is true only at p = 1..1, q = 0..0. C is unsatisfiable
exactly when F(C) has a nonzero XOR symmetry, and then (1,0,...,0) is one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .boolfn import Circuit, Gate, Namer, TruthTable, circuit_to_table, table_to_circuit
from .errors import InconsistentOracleError
from .gf2 import BitVec


def _q_names(p_names: Sequence[str], fresh: Namer) -> list:
    out = []
    for a in p_names:
        m = re.fullmatch(r"[pPxX](\d+)", a)
        out.append(fresh("q" + m.group(1) if m else "q_" + a))
    return out


def _single_output(C: Circuit) -> None:
    if C.m != 1:
        raise ValueError("expected a single-output circuit, got %d outputs" % C.m)


def _emit_h(C: Circuit, q_names: Sequence[str], fresh: Namer, gates: list) -> str:
    """Append a copy of C reading p_i AND q_i; returns the copy's output name."""
    rename = {}
    for a, q in zip(C.inputs, q_names):
        rename[a] = fresh("and_" + a)
        gates.append(Gate(rename[a], "AND", (a, q)))
    for g in C.gates:
        rename[g.name] = fresh("h_" + g.name)
        gates.append(Gate(rename[g.name], g.op, tuple(rename[x] for x in g.args)))
    return rename[C.outputs[0]]


def _emit_D(p_names: Sequence[str], q_names: Sequence[str], fresh: Namer, gates: list) -> str:
    lits = list(p_names)
    for q in q_names:
        nq = fresh("not_" + q)
        gates.append(Gate(nq, "NOT", (q,)))
        lits.append(nq)
    out = fresh("D")
    gates.append(Gate(out, "AND", tuple(lits)))
    return out


def build_h(C: Circuit) -> Circuit:
    _single_output(C)
    fresh = Namer(C.inputs)
    qs = _q_names(C.inputs, fresh)
    gates = []
    out = _emit_h(C, qs, fresh, gates)
    return Circuit(tuple(C.inputs) + tuple(qs), tuple(gates), (out,))


def build_D(n: int, p_names: Optional[Sequence[str]] = None,
            q_names: Optional[Sequence[str]] = None) -> Circuit:
    if n < 1:
        raise ValueError("n must be at least 1")
    p_names = list(p_names or ["p%d" % (k + 1) for k in range(n)])
    q_names = list(q_names or ["q%d" % (k + 1) for k in range(n)])
    fresh = Namer(p_names + q_names)
    gates = []
    out = _emit_D(p_names, q_names, fresh, gates)
    return Circuit(tuple(p_names + q_names), tuple(gates), (out,))


@dataclass(frozen=True)
class HardnessInstance:
    source: Circuit
    transformed: Circuit

    @property
    def n(self) -> int:
        return self.source.n

    def p_shift(self) -> BitVec:
        """The shift that flips only p; a symmetry iff the source is unsatisfiable."""
        return BitVec.unit(2 * self.n + 1, 0)


def build_F(C: Circuit) -> HardnessInstance:
    _single_output(C)
    if C.n < 1:
        raise ValueError("source circuit needs at least one input")
    fresh = Namer(C.inputs)
    p = fresh("p")
    qs = _q_names(C.inputs, fresh)
    gates = []
    h = _emit_h(C, qs, fresh, gates)
    D = _emit_D(C.inputs, qs, fresh, gates)
    hx = fresh("h_xor_D")
    gates.append(Gate(hx, "XOR", (h, D)))
    left = fresh("left")
    gates.append(Gate(left, "OR", (p, hx)))
    np_ = fresh("not_" + p)
    gates.append(Gate(np_, "NOT", (p,)))
    right = fresh("right")
    gates.append(Gate(right, "OR", (np_, D)))
    out = fresh("F")
    gates.append(Gate(out, "AND", (left, right)))
    F = Circuit((p,) + tuple(C.inputs) + tuple(qs), tuple(gates), (out,))
    return HardnessInstance(C, F)


def is_satisfiable(C: Circuit) -> bool:
    """Exhaustive check over all 2**n inputs of a single-output circuit."""
    _single_output(C)
    return any(circuit_to_table(C).rows)


@dataclass(frozen=True)
class SimonInstance:
    n: int
    s: BitVec
    pivot: int
    table: TruthTable
    seed: int
    attempt: int = 0

    def circuit(self) -> Circuit:
        return table_to_circuit(self.table)


def _as_bitvec(s, n: int) -> BitVec:
    if isinstance(s, BitVec):
        v = s
    elif isinstance(s, str):
        v = BitVec.from_str(s)
    else:
        v = BitVec(n, int(s))
    if v.len != n:
        raise ValueError("shift has length %d, expected %d" % (v.len, n))
    return v


def _draw(n: int, s: BitVec, pivot: int, seed_seq) -> TruthTable:
    rng = np.random.default_rng(seed_seq)
    bit = 1 << (n - 1 - pivot)
    half = [x for x in range(1 << n) if not x & bit]
    f1 = dict(zip(half, (int(v) for v in rng.integers(0, 1 << n, size=len(half)))))
    return TruthTable(n, n, tuple(f1[x] if not x & bit else f1[x ^ s.bits] for x in range(1 << n)))


def simon_instance(n: int, s, seed: int = 0, strict: bool = False,
                   max_retries: int = 64) -> SimonInstance:
    """f: B^n -> B^n with f(x+s) = f(x), from a seeded random half-table.

    With ``strict`` the draw is repeated (seed sequence ``(seed, attempt)``)
    until the oracle reports dim V(f) = 1.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    s = _as_bitvec(s, n)
    if not s:
        raise ValueError("hidden shift must be nonzero")
    pivot = next(k for k in range(n) if s[k])
    if not strict:
        return SimonInstance(n, s, pivot, _draw(n, s, pivot, seed), seed)
    from .oracle import brute_force_space

    for attempt in range(max_retries):
        table = _draw(n, s, pivot, seed if attempt == 0 else [seed, attempt])
        if brute_force_space(table).dimension == 1:
            return SimonInstance(n, s, pivot, table, seed, attempt)
    raise RuntimeError("no dimension-1 instance after %d draws" % max_retries)


def search_via_decision(decide: Callable[[tuple], bool], n: int, verify: bool = False) -> BitVec:
    """Fix s coordinate by coordinate, preferring 0, with one query each.

    ``decide(prefix)`` must answer whether some nonzero s in V(f) starts with
    ``prefix``. The caller promises such an s exists at all; ``verify``
    spends one extra query to confirm the final answer.
    """
    prefix = ()
    for _ in range(n):
        prefix += (0,) if decide(prefix + (0,)) else (1,)
    s = BitVec.from_bits(prefix)
    if not s:
        raise InconsistentOracleError("decision answers force s = 0")
    if verify and not decide(prefix):
        raise InconsistentOracleError("V(f) has no nonzero element (search produced %s)" % s)
    return s
