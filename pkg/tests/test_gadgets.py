import pytest

from helpers import enumerate_symmetries, random_circuit
from xorsym import bdd
from xorsym.boolfn import circuit_to_table, emit_circuit, eval_circuit, parse_circuit
from xorsym.errors import InconsistentOracleError
from xorsym.gadgets import (
    build_D,
    build_F,
    build_h,
    is_satisfiable,
    search_via_decision,
    simon_instance,
)
from xorsym.gf2 import BitVec
from xorsym.oracle import brute_force_decide, brute_force_space, decision_handle
from xorsym.symmetry import has_nonzero_symmetry

P1 = "inputs p1\noutputs o\no = AND p1 p1"
NOT_P1 = "inputs p1\noutputs o\no = NOT p1"
CONTRA = "inputs p1\noutputs o\nn = NOT p1\no = AND p1 n"
TAUT = "inputs p1\noutputs o\nn = NOT p1\no = OR p1 n"


def table(c):
    return circuit_to_table(c).rows


def test_build_h_examples():
    h = build_h(parse_circuit(P1))
    assert h.inputs == ("p1", "q1")
    assert table(h) == (0, 0, 0, 1)  # p1 AND q1
    assert table(build_h(parse_circuit(NOT_P1))) == (1, 1, 1, 0)
    assert table(build_h(parse_circuit(CONTRA))) == (0, 0, 0, 0)


def test_build_h_shares_one_and_per_variable():
    c = parse_circuit("inputs p1 p2\noutputs o\na = XOR p1 p2\nb = AND p1 a\no = OR b p1")
    h = build_h(c)
    ands = [g for g in h.gates if g.op == "AND" and set(g.args) <= set(h.inputs)]
    assert len(ands) == 2


def test_build_h_is_substitution(rng):
    for _ in range(30):
        n = rng.randint(1, 4)
        c = random_circuit(rng, n, n_outputs=1)
        h = build_h(c)
        for x in range(1 << (2 * n)):
            p, q = x >> n, x & ((1 << n) - 1)
            assert eval_circuit(h, BitVec(2 * n, x)) == eval_circuit(c, BitVec(n, p & q))


def test_build_D():
    assert table(build_D(1)) == (0, 0, 1, 0)  # rows for (p1, q1) = 00, 01, 10, 11
    rows = table(build_D(2))
    assert sum(rows) == 1 and rows[0b1100] == 1
    with pytest.raises(ValueError):
        build_D(0)


def test_F_examples():
    unsat = build_F(parse_circuit(CONTRA))
    F = unsat.transformed
    assert F.inputs == ("p", "p1", "q1")
    # oracle from the definition on the 3-variable table
    assert enumerate_symmetries(circuit_to_table(F), 3) == {0b000, 0b100}
    assert brute_force_space(F).rows == (0b100,)
    # F(C) collapses to D when C is unsatisfiable
    D = table(build_D(1))
    assert table(F) == D + D
    for src in (P1, TAUT):
        F = build_F(parse_circuit(src)).transformed
        assert enumerate_symmetries(circuit_to_table(F), 3) == {0}


def test_F_arity_and_names():
    # input names that collide with the names the reduction would pick
    c = parse_circuit("inputs p q_p p_1\noutputs o\no = AND p q_p p_1")
    inst = build_F(c)
    assert inst.transformed.n == 2 * c.n + 1
    assert len(set(inst.transformed.inputs)) == 2 * c.n + 1
    assert parse_circuit(emit_circuit(inst.transformed)) == inst.transformed


def test_F_shares_h_and_D():
    F = build_F(parse_circuit(CONTRA)).transformed
    D = [g for g in F.gates if g.name.startswith("D")]
    assert len(D) == 1
    users = [g for g in F.gates if D[0].name in g.args]
    assert len(users) == 2


def test_single_output_required():
    two = parse_circuit("inputs a\noutputs a a")
    with pytest.raises(ValueError):
        build_F(two)
    with pytest.raises(ValueError):
        build_h(two)


def test_unsat_iff_symmetry_small(rng):
    for _ in range(60):
        n = rng.randint(1, 3)
        c = random_circuit(rng, n, n_outputs=1)
        inst = build_F(c)
        V = brute_force_space(inst.transformed)
        assert (not is_satisfiable(c)) == (V.dimension > 0)
        assert (V.dimension > 0) == has_nonzero_symmetry(bdd.compile(inst.transformed))
        if not is_satisfiable(c):
            assert inst.p_shift().bits in V


# --- simon instances --------------------------------------------------------

def test_simon_contains_shift():
    for seed in range(10):
        inst = simon_instance(4, "0110", seed=seed)
        assert inst.pivot == 1
        assert inst.s.bits in brute_force_space(inst.table)


def test_simon_small():
    inst = simon_instance(2, "11", seed=3)
    V = brute_force_space(inst.table)
    assert V.dimension in (1, 2) and 0b11 in V
    one = simon_instance(1, "1", seed=0)
    assert one.table.rows[0] == one.table.rows[1]
    assert brute_force_space(one.table).dimension == 1


def test_simon_two_branches():
    inst = simon_instance(5, "01011", seed=11)
    bit = 1 << (5 - 1 - inst.pivot)
    for x in range(32):
        if x & bit:
            assert inst.table.rows[x] == inst.table.rows[x ^ inst.s.bits]


def test_simon_deterministic():
    a = simon_instance(6, "100101", seed=42)
    b = simon_instance(6, "100101", seed=42)
    c = simon_instance(6, "100101", seed=43)
    assert a.table == b.table and a.table != c.table


def test_simon_rejects_zero():
    with pytest.raises(ValueError):
        simon_instance(2, "00")
    with pytest.raises(ValueError):
        simon_instance(3, "01")


def test_simon_strict():
    inst = simon_instance(3, "110", seed=0, strict=True)
    assert brute_force_space(inst.table).rows == (0b110,)


def test_simon_circuit_export():
    inst = simon_instance(3, "011", seed=5)
    assert circuit_to_table(inst.circuit()) == inst.table


# --- search via decision -------------------------------------------------------

class Counting:
    def __init__(self, decide):
        self.decide, self.calls = decide, 0

    def __call__(self, prefix):
        self.calls += 1
        return self.decide(prefix)


def test_search_figure(figure):
    dec = Counting(lambda p: brute_force_decide(figure, p))
    assert search_via_decision(dec, 3) == BitVec.from_str("101")
    assert dec.calls <= 3


def test_search_parity():
    parity = parse_circuit("inputs a b c\noutputs o\no = XOR a b c")
    dec = Counting(decision_handle(parity))
    assert search_via_decision(dec, 3) == BitVec.from_str("011")
    assert dec.calls == 3


def test_search_constant():
    const = bdd.constant(2, 0)
    assert search_via_decision(decision_handle(const), 2) == BitVec.from_str("01")


def test_search_inconsistent():
    with pytest.raises(InconsistentOracleError):
        search_via_decision(lambda p: True, 3)
    ident = parse_circuit("inputs a b\noutputs a b")
    with pytest.raises(InconsistentOracleError):
        search_via_decision(decision_handle(ident), 2, verify=True)
