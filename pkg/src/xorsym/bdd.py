"""Ordered BDDs: node table, file format, evaluation, reduction, compilation.

A node ``(level, hi, lo)`` means "if variable ``order[level-1]`` then hi
else lo". Levels are 1-based; the two terminals sit at conceptual level
n+1 and are named ``@0`` and ``@1``, which is also how the file format
spells them. Internal nodes have positive int ids.

OBDD file::

    order p q r
    node 1 r @0 @1
    node 2 q 1 @0
    outputs 2
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Union

from .boolfn import Circuit
from .errors import DimensionError, ParseError, ResourceError
from .gf2 import BitVec

TERM0 = "@0"
TERM1 = "@1"
TERMINALS = (TERM0, TERM1)
DEFAULT_NODE_CAP = 1_000_000

NodeId = Union[int, str]


def is_terminal(u: NodeId) -> bool:
    return u == TERM0 or u == TERM1


class Node(NamedTuple):
    level: int
    hi: NodeId
    lo: NodeId


@dataclass(frozen=True)
class Obdd:
    order: tuple
    nodes: dict  # id -> Node
    outputs: tuple

    def __post_init__(self):
        check_obdd(self)

    @property
    def n(self) -> int:
        return len(self.order)

    @property
    def m(self) -> int:
        return len(self.outputs)

    def level(self, u: NodeId) -> int:
        if is_terminal(u):
            return self.n + 1
        return self.nodes[u].level

    def size(self) -> int:
        """Number of internal nodes."""
        return len(self.nodes)

    def by_level(self) -> dict:
        """Level -> sorted list of node ids at that level."""
        levels = {}
        for u in sorted(self.nodes):
            levels.setdefault(self.nodes[u].level, []).append(u)
        return levels

    def __call__(self, x: int) -> int:
        return eval_obdd(self, x).bits


def check_obdd(d: Obdd, lines: Optional[dict] = None) -> None:
    lines = lines or {}
    if len(set(d.order)) != len(d.order):
        raise ParseError("duplicate variable in order", lines.get("order"))
    n = len(d.order)
    for u, node in d.nodes.items():
        at = lines.get(u)
        if not isinstance(u, int) or u <= 0:
            raise ParseError("node ids must be positive integers: %r" % (u,), at)
        if not 1 <= node.level <= n:
            raise ParseError("node %d has level %d outside 1..%d" % (u, node.level, n), at)
        for child in (node.hi, node.lo):
            if is_terminal(child):
                continue
            if child not in d.nodes:
                raise ParseError("node %d: unknown child id %r" % (u, child), at)
            if d.nodes[child].level <= node.level:
                raise ParseError(
                    "node %d: child %r at level %d is not below level %d"
                    % (u, child, d.nodes[child].level, node.level),
                    at,
                )
    for o in d.outputs:
        if not is_terminal(o) and o not in d.nodes:
            raise ParseError("unknown output id %r" % (o,), lines.get("outputs"))


def _parse_id(tok: str, lineno: int) -> NodeId:
    if tok in TERMINALS:
        return tok
    try:
        v = int(tok)
    except ValueError:
        raise ParseError("bad node id %r" % tok, lineno) from None
    if v <= 0:
        raise ParseError("node ids must be positive: %r" % tok, lineno)
    return v


def parse_obdd(text: str) -> Obdd:
    order = outputs = None
    raw_nodes = []
    lines = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        kw = words[0]
        if kw == "order":
            if order is not None:
                raise ParseError("second order line", lineno)
            order = tuple(words[1:])
            lines["order"] = lineno
        elif kw == "node":
            if len(words) != 5:
                raise ParseError("expected 'node <id> <var> <hi> <lo>'", lineno)
            raw_nodes.append((lineno, words[1:]))
        elif kw == "outputs":
            if outputs is not None:
                raise ParseError("second outputs line", lineno)
            outputs = tuple(_parse_id(t, lineno) for t in words[1:])
            lines["outputs"] = lineno
        else:
            raise ParseError("unknown keyword %r" % kw, lineno)
    if order is None:
        raise ParseError("missing order line")
    if outputs is None:
        raise ParseError("missing outputs line")
    level_of = {v: k + 1 for k, v in enumerate(order)}
    nodes = {}
    for lineno, (sid, var, hi, lo) in raw_nodes:
        u = _parse_id(sid, lineno)
        if is_terminal(u):
            raise ParseError("terminal id cannot be redefined", lineno)
        if u in nodes:
            raise ParseError("duplicate id %d" % u, lineno)
        if var not in level_of:
            raise ParseError("variable %r not in order" % var, lineno)
        nodes[u] = Node(level_of[var], _parse_id(hi, lineno), _parse_id(lo, lineno))
        lines[u] = lineno
    d = object.__new__(Obdd)
    object.__setattr__(d, "order", order)
    object.__setattr__(d, "nodes", nodes)
    object.__setattr__(d, "outputs", outputs)
    check_obdd(d, lines)
    return d


def emit_obdd(d: Obdd) -> str:
    out = ["order " + " ".join(d.order)]
    for u in sorted(d.nodes, key=lambda u: (-d.nodes[u].level, u)):
        node = d.nodes[u]
        out.append("node %d %s %s %s" % (u, d.order[node.level - 1], node.hi, node.lo))
    out.append("outputs " + " ".join(str(o) for o in d.outputs))
    return "\n".join(out) + "\n"


def eval_node(d: Obdd, u: NodeId, x: int) -> int:
    n = d.n
    while not is_terminal(u):
        node = d.nodes[u]
        u = node.hi if (x >> (n - node.level)) & 1 else node.lo
    return 1 if u == TERM1 else 0


def eval_obdd(d: Obdd, x) -> BitVec:
    """Evaluate every output at x (BitVec, or int with variable 1 most significant)."""
    if isinstance(x, BitVec):
        if x.len != d.n:
            raise DimensionError("input of length %d for %d variables" % (x.len, d.n))
        x = x.bits
    return BitVec.from_bits(eval_node(d, o, x) for o in d.outputs)


def reachable(d: Obdd) -> set:
    seen = set()
    stack = [o for o in d.outputs if not is_terminal(o)]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        node = d.nodes[u]
        stack.extend(c for c in (node.hi, node.lo) if not is_terminal(c) and c not in seen)
    return seen


def reduce(d: Obdd) -> Obdd:
    """Drop redundant tests and merge duplicates, bottom-up in one pass.

    The surviving representative of each class keeps the smallest id, so an
    already-reduced input comes back with identical ids. Unreachable nodes
    are discarded.
    """
    canon = {TERM0: TERM0, TERM1: TERM1}
    unique = {}
    nodes = {}
    for u in sorted(reachable(d), key=lambda u: (-d.nodes[u].level, u)):
        level, hi, lo = d.nodes[u]
        hi, lo = canon[hi], canon[lo]
        if hi == lo:
            canon[u] = hi
            continue
        key = (level, hi, lo)
        if key in unique:
            canon[u] = unique[key]
        else:
            unique[key] = u
            nodes[u] = Node(level, hi, lo)
            canon[u] = u
    return Obdd(d.order, nodes, tuple(canon[o] for o in d.outputs))


def is_reduced(d: Obdd) -> bool:
    triples = set()
    for node in d.nodes.values():
        if node.hi == node.lo or node in triples:
            return False
        triples.add(node)
    return True


class Builder:
    """Unique table plus memoized apply, the usual way to grow an OBDD."""

    def __init__(self, n: int, max_nodes: int = DEFAULT_NODE_CAP):
        self.n = n
        self.max_nodes = max_nodes
        self.nodes = {}
        self.unique = {}
        self.memo = {}

    def level(self, u: NodeId) -> int:
        return self.n + 1 if is_terminal(u) else self.nodes[u].level

    def mk(self, level: int, hi: NodeId, lo: NodeId) -> NodeId:
        if hi == lo:
            return hi
        key = (level, hi, lo)
        u = self.unique.get(key)
        if u is None:
            if len(self.nodes) >= self.max_nodes:
                raise ResourceError("OBDD node budget of %d exceeded" % self.max_nodes)
            u = len(self.nodes) + 1
            self.nodes[u] = Node(level, hi, lo)
            self.unique[key] = u
        return u

    def var(self, level: int) -> NodeId:
        return self.mk(level, TERM1, TERM0)

    def _cofactors(self, u: NodeId, level: int):
        if is_terminal(u) or self.nodes[u].level != level:
            return u, u
        node = self.nodes[u]
        return node.hi, node.lo

    def apply(self, op: str, a: NodeId, b: NodeId) -> NodeId:
        if is_terminal(a) and is_terminal(b):
            x, y = a == TERM1, b == TERM1
            r = {"AND": x and y, "OR": x or y, "XOR": x != y}[op]
            return TERM1 if r else TERM0
        if op == "AND":
            if a == TERM0 or b == TERM0:
                return TERM0
            if a == TERM1 or a == b:
                return b
            if b == TERM1:
                return a
        elif op == "OR":
            if a == TERM1 or b == TERM1:
                return TERM1
            if a == TERM0 or a == b:
                return b
            if b == TERM0:
                return a
        else:
            if a == b:
                return TERM0
            if a == TERM0:
                return b
            if b == TERM0:
                return a
        key = (op, a, b)
        r = self.memo.get(key)
        if r is None:
            r = self.memo.get((op, b, a))
        if r is None:
            top = min(self.level(a), self.level(b))
            a1, a0 = self._cofactors(a, top)
            b1, b0 = self._cofactors(b, top)
            r = self.mk(top, self.apply(op, a1, b1), self.apply(op, a0, b0))
            self.memo[key] = r
        return r

    def negate(self, u: NodeId) -> NodeId:
        return self.apply("XOR", u, TERM1)


def compile(c: Circuit, order: Optional[Sequence[str]] = None,
            max_nodes: int = DEFAULT_NODE_CAP) -> Obdd:  # noqa: A001
    """Reduced OBDD of circuit ``c`` with variables tested in ``order``."""
    order = tuple(c.inputs if order is None else order)
    if sorted(order) != sorted(c.inputs) or len(set(order)) != len(order):
        raise ValueError("order must be a permutation of the circuit inputs %s" % (c.inputs,))
    b = Builder(len(order), max_nodes)
    level_of = {v: k + 1 for k, v in enumerate(order)}
    vals = {name: b.var(level_of[name]) for name in c.inputs}
    for g in c.gates:
        args = [vals[a] for a in g.args]
        if g.op == "CONST0":
            r = TERM0
        elif g.op == "CONST1":
            r = TERM1
        elif g.op == "NOT":
            r = b.negate(args[0])
        else:
            r = args[0]
            for a in args[1:]:
                r = b.apply(g.op, r, a)
        vals[g.name] = r
    return reduce(Obdd(order, b.nodes, tuple(vals[o] for o in c.outputs)))


def constant(n_or_order, value: int) -> Obdd:
    """Single-output constant function."""
    order = n_or_order if not isinstance(n_or_order, int) else tuple("x%d" % (k + 1) for k in range(n_or_order))
    return Obdd(tuple(order), {}, (TERM1 if value else TERM0,))
