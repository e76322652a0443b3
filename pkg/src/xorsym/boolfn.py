"""Circuits and truth tables.

Circuit file::

    # comment
    inputs a b c
    outputs o1 o2
    t = AND a b
    o1 = XOR t c
    o2 = NOT t

Truth-table file: a header ``<n> <m>`` and then 2**n rows of m bits, input
x ascending with variable 0 as the most significant bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DimensionError, ParseError, ResourceError
from .gf2 import BitVec

OPS = ("NOT", "AND", "OR", "XOR", "CONST0", "CONST1")
NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
DEFAULT_TABLE_CAP = 20


@dataclass(frozen=True)
class Gate:
    name: str
    op: str
    args: tuple


@dataclass(frozen=True)
class Circuit:
    inputs: tuple
    gates: tuple
    outputs: tuple

    def __post_init__(self):
        check_circuit(self)

    @property
    def n(self) -> int:
        return len(self.inputs)

    @property
    def m(self) -> int:
        return len(self.outputs)


def _check_arity(op: str, nargs: int) -> Optional[str]:
    if op == "NOT" and nargs != 1:
        return "NOT takes exactly 1 operand, got %d" % nargs
    if op in ("AND", "OR", "XOR") and nargs < 2:
        return "%s takes at least 2 operands, got %d" % (op, nargs)
    if op in ("CONST0", "CONST1") and nargs:
        return "%s takes no operands" % op
    return None


def check_circuit(c: Circuit, lines: Optional[dict] = None) -> None:
    """Validate names, arities and acyclicity; ``lines`` maps names to line numbers."""
    lines = lines or {}
    seen = set()
    for name in c.inputs:
        if not NAME_RE.match(name):
            raise ParseError("bad name %r" % name, lines.get("inputs"))
        if name in seen:
            raise ParseError("duplicate name %r" % name, lines.get("inputs"))
        seen.add(name)
    for g in c.gates:
        at = lines.get(g.name)
        if not NAME_RE.match(g.name):
            raise ParseError("bad name %r" % g.name, at)
        if g.name in seen:
            raise ParseError("duplicate name %r" % g.name, at)
        if g.op not in OPS:
            raise ParseError("unknown operator %r" % g.op, at)
        msg = _check_arity(g.op, len(g.args))
        if msg:
            raise ParseError("arity: " + msg, at)
        for a in g.args:
            if a not in seen:
                raise ParseError("unknown reference %r" % a, at)
        seen.add(g.name)
    for o in c.outputs:
        if o not in seen:
            raise ParseError("unknown reference %r in outputs" % o, lines.get("outputs"))


def parse_circuit(text: str) -> Circuit:
    inputs = outputs = None
    gates = []
    lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if inputs is None:
            if words[0] != "inputs":
                raise ParseError("first line must be 'inputs ...'", lineno)
            inputs = tuple(words[1:])
            lines["inputs"] = lineno
        elif words[0] == "outputs":
            if outputs is not None:
                raise ParseError("second outputs line", lineno)
            outputs = tuple(words[1:])
            lines["outputs"] = lineno
        else:
            if len(words) < 3 or words[1] != "=":
                raise ParseError("expected 'name = OP operand...'", lineno)
            name, op = words[0], words[2].upper()
            if op not in OPS:
                raise ParseError("unknown operator %r" % words[2], lineno)
            lines.setdefault(name, lineno)
            gates.append(Gate(name, op, tuple(words[3:])))
    if inputs is None:
        raise ParseError("missing inputs line")
    if outputs is None:
        raise ParseError("missing outputs line")
    c = object.__new__(Circuit)
    object.__setattr__(c, "inputs", inputs)
    object.__setattr__(c, "gates", tuple(gates))
    object.__setattr__(c, "outputs", outputs)
    check_circuit(c, lines)
    return c


def emit_circuit(c: Circuit) -> str:
    out = ["inputs " + " ".join(c.inputs), "outputs " + " ".join(c.outputs)]
    for g in c.gates:
        out.append(" ".join([g.name, "=", g.op, *g.args]))
    return "\n".join(out) + "\n"


def _apply(op: str, vals: list, ones: int):
    # ``ones`` is the all-true word: 1 for scalars, a 2**n-bit mask bit-parallel
    if op == "NOT":
        return vals[0] ^ ones
    if op == "CONST0":
        return 0
    if op == "CONST1":
        return ones
    acc = vals[0]
    for v in vals[1:]:
        if op == "AND":
            acc &= v
        elif op == "OR":
            acc |= v
        else:
            acc ^= v
    return acc


def eval_circuit(c: Circuit, x, stats: Optional[dict] = None) -> BitVec:
    """Evaluate at ``x`` (BitVec or int with variable 0 most significant).

    One forward pass; every gate is computed once however many fanouts it
    has. When ``stats`` is given, ``stats["gate_evals"]`` counts gate visits.
    """
    n = c.n
    if isinstance(x, BitVec):
        if x.len != n:
            raise DimensionError("input of length %d for %d-input circuit" % (x.len, n))
        x = x.bits
    vals = {name: (x >> (n - 1 - k)) & 1 for k, name in enumerate(c.inputs)}
    for g in c.gates:
        vals[g.name] = _apply(g.op, [vals[a] for a in g.args], 1)
    if stats is not None:
        stats["gate_evals"] = stats.get("gate_evals", 0) + len(c.gates)
    return BitVec.from_bits(vals[o] for o in c.outputs)


@dataclass(frozen=True)
class TruthTable:
    n: int
    m: int
    rows: tuple  # 2**n ints of m bits, output 0 most significant

    def __post_init__(self):
        if len(self.rows) != 1 << self.n:
            raise DimensionError("need %d rows, got %d" % (1 << self.n, len(self.rows)))

    def __call__(self, x: int) -> int:
        return self.rows[x]

    def as_array(self) -> np.ndarray:
        if self.m > 64:
            raise ResourceError("table words wider than 64 bits")
        return np.array(self.rows, dtype=np.uint64)


def _mask_to_bits(mask: int, size: int) -> np.ndarray:
    raw = mask.to_bytes((size + 7) // 8, "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size]


def output_columns(c: Circuit) -> list:
    """Bit-parallel evaluation: one 2**n-bit int per output, bit x = output at x."""
    n = c.n
    size = 1 << n
    ones = (1 << size) - 1
    xs = np.arange(size, dtype=np.int64)
    vals = {}
    for k, name in enumerate(c.inputs):
        col = ((xs >> (n - 1 - k)) & 1).astype(np.uint8)
        packed = np.packbits(col, bitorder="little").tobytes()
        vals[name] = int.from_bytes(packed, "little") & ones
    for g in c.gates:
        vals[g.name] = _apply(g.op, [vals[a] for a in g.args], ones)
    return [vals[o] for o in c.outputs]


def circuit_to_table(c: Circuit, cap: int = DEFAULT_TABLE_CAP) -> TruthTable:
    n, m = c.n, c.m
    if n > cap:
        raise ResourceError("circuit has %d inputs, table cap is %d" % (n, cap))
    size = 1 << n
    words = np.zeros(size, dtype=object if m > 62 else np.int64)
    for j, col in enumerate(output_columns(c)):
        bits = _mask_to_bits(col, size).astype(words.dtype)
        words = words * 2 + bits if m > 62 else (words << 1) | bits
    return TruthTable(n, m, tuple(int(w) for w in words))


def table_from_function(fn, n: int, m: int) -> TruthTable:
    return TruthTable(n, m, tuple(int(fn(x)) for x in range(1 << n)))


def parse_table(text: str, cap: int = DEFAULT_TABLE_CAP) -> TruthTable:
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty table")
    try:
        n, m = (int(w) for w in lines[0].split())
    except ValueError:
        raise ParseError("header must be '<n> <m>'", 1) from None
    if n < 0 or m < 0:
        raise ParseError("negative arity", 1)
    if n > cap:
        raise ResourceError("table arity %d over cap %d" % (n, cap))
    body = lines[1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != 1 << n:
        raise ParseError("expected %d rows, got %d" % (1 << n, len(body)))
    rows = []
    for lineno, row in enumerate(body, start=2):
        row = row.strip()
        if len(row) != m or row.strip("01"):
            raise ParseError("bad row %r (need %d bits)" % (row, m), lineno)
        rows.append(int(row, 2) if m else 0)
    return TruthTable(n, m, tuple(rows))


def emit_table(t: TruthTable) -> str:
    fmt = "0%db" % t.m
    body = [format(r, fmt) if t.m else "" for r in t.rows]
    return "\n".join(["%d %d" % (t.n, t.m)] + body) + "\n"


class Namer:
    """Hands out gate names that collide with nothing already used."""

    def __init__(self, used=()):
        self.used = set(used)

    def __call__(self, base: str) -> str:
        name, k = base, 1
        while name in self.used:
            name = "%s_%d" % (base, k)
            k += 1
        self.used.add(name)
        return name


def table_to_circuit(t: TruthTable, names: Optional[Sequence[str]] = None) -> Circuit:
    """Minterm (sum-of-products) circuit for a table. Exponential; for export only."""
    names = list(names or ["x%d" % (k + 1) for k in range(t.n)])
    fresh = Namer(names)
    zero = fresh("zero")
    gates = [Gate(zero, "CONST0", ())]
    neg = {}
    for v in names:
        neg[v] = fresh("n_" + v)
        gates.append(Gate(neg[v], "NOT", (v,)))
    minterms = {}

    def minterm(x):
        if x not in minterms:
            lits = [v if (x >> (t.n - 1 - k)) & 1 else neg[v] for k, v in enumerate(names)]
            if len(lits) == 1:
                minterms[x] = lits[0]
            else:
                name = fresh("mt%d" % x)
                gates.append(Gate(name, "AND", tuple(lits)) if lits else Gate(name, "CONST1", ()))
                minterms[x] = name
        return minterms[x]

    outs = []
    for j in range(t.m):
        terms = [minterm(x) for x in range(1 << t.n) if (t.rows[x] >> (t.m - 1 - j)) & 1]
        out = fresh("f%d" % (j + 1))
        if len(terms) < 2:
            terms = (terms or [zero]) * 2
        gates.append(Gate(out, "OR", tuple(terms)))
        outs.append(out)
    return Circuit(tuple(names), tuple(gates), tuple(outs))
