"""Shared generators and independent brute-force checks for the test suite."""

import itertools
import random

from xorsym.boolfn import Circuit, Gate

FIGURE = """\
order p q r
node 1 r @0 @1
node 2 r @1 @0
node 3 q 1 @0
node 4 q 2 @0
node 5 p 3 4
outputs 5
"""

BINARY = ("AND", "OR", "XOR")


def random_circuit(rng: random.Random, n: int, n_gates=None, n_outputs=None) -> Circuit:
    """Random acyclic circuit; operands are drawn from everything defined so far."""
    names = ["x%d" % (k + 1) for k in range(n)]
    pool = list(names)
    gates = []
    for k in range(n_gates or rng.randint(2, 3 * n)):
        name = "g%d" % k
        roll = rng.random()
        if roll < 0.2:
            gates.append(Gate(name, "NOT", (rng.choice(pool),)))
        elif roll < 0.23:
            gates.append(Gate(name, rng.choice(("CONST0", "CONST1")), ()))
        else:
            arity = 2 if rng.random() < 0.8 else 3
            gates.append(Gate(name, rng.choice(BINARY), tuple(rng.choice(pool) for _ in range(arity))))
        pool.append(name)
    m = n_outputs or rng.randint(1, 3)
    tail = pool[-max(4, m):]
    outputs = tuple(rng.choice(tail) for _ in range(m))
    return Circuit(tuple(names), tuple(gates), outputs)


def random_cnf(rng: random.Random, n: int, n_clauses: int, width: int = 3) -> Circuit:
    names = ["x%d" % (k + 1) for k in range(n)]
    gates = [Gate("n_" + v, "NOT", (v,)) for v in names]
    clauses = []
    for c in range(n_clauses):
        vs = rng.sample(names, min(width, n))
        lits = tuple(v if rng.random() < 0.5 else "n_" + v for v in vs)
        if len(lits) == 1:
            lits = lits * 2
        gates.append(Gate("c%d" % c, "OR", lits))
        clauses.append("c%d" % c)
    if len(clauses) == 1:
        clauses *= 2
    gates.append(Gate("out", "AND", tuple(clauses)))
    return Circuit(tuple(names), tuple(gates), ("out",))


def enumerate_symmetries(fn, n):
    """{s | fn(x ^ s) == fn(x) for all x}, straight from the definition."""
    values = [fn(x) for x in range(1 << n)]
    return {s for s in range(1 << n) if all(values[x ^ s] == values[x] for x in range(1 << n))}


def span_set(rows):
    """All XOR combinations of ``rows`` as a set of ints."""
    out = {0}
    for r in rows:
        out |= {v ^ r for v in out}
    return out


def all_bits(n):
    return itertools.product((0, 1), repeat=n)
