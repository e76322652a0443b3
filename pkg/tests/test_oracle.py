import pytest

from helpers import enumerate_symmetries, random_circuit
from xorsym import bdd
from xorsym.boolfn import circuit_to_table, parse_circuit, table_from_function
from xorsym.errors import ResourceError
from xorsym.gf2 import BitVec, span
from xorsym.oracle import (
    Evaluable,
    brute_force_decide,
    brute_force_space,
    decision_handle,
    invariant_shifts,
)


def test_figure(figure):
    assert brute_force_space(figure) == span([BitVec.from_str("101")], 3)
    assert invariant_shifts(figure) == [0b000, 0b101]


def test_identity_and_parity():
    ident = table_from_function(lambda x: x, 3, 3)
    assert brute_force_space(ident).dimension == 0
    parity = parse_circuit("inputs a b c\noutputs o\no = XOR a b c")
    V = brute_force_space(parity)
    assert V.dimension == 2
    assert set(V.elements()) == {s for s in range(8) if bin(s).count("1") % 2 == 0}


def test_decide_examples(figure):
    assert brute_force_decide(figure, (1,))
    assert not brute_force_decide(figure, (0,))
    assert brute_force_decide(figure, ())
    const = bdd.constant(2, 1)
    for prefix in [(), (0,), (1,), (0, 1), (1, 1)]:
        assert brute_force_decide(const, prefix)
    assert not brute_force_decide(const, (0, 0))


def test_cap():
    c = parse_circuit("inputs a b c\noutputs o\no = AND a b c")
    with pytest.raises(ResourceError):
        brute_force_space(c, cap=2)
    with pytest.raises(ResourceError):
        brute_force_decide(c, (), cap=2)


def test_matches_definition(rng):
    for _ in range(100):
        n = rng.randint(1, 7)
        c = random_circuit(rng, n)
        t = circuit_to_table(c)
        expected = enumerate_symmetries(t, n)
        assert set(invariant_shifts(c)) == expected
        assert set(brute_force_space(c).elements()) == expected


def test_vector_space_laws(rng):
    for _ in range(100):
        n = rng.randint(1, 8)
        c = random_circuit(rng, n)
        found = set(invariant_shifts(c))
        assert 0 in found
        assert all(a ^ b in found for a in found for b in found)
        assert len(found) == 2 ** brute_force_space(c).dimension


def test_representation_independence(rng):
    for _ in range(50):
        n = rng.randint(1, 8)
        c = random_circuit(rng, n)
        assert brute_force_space(c) == brute_force_space(bdd.compile(c))
        assert brute_force_space(c) == brute_force_space(circuit_to_table(c))


def test_black_box_callable():
    f = Evaluable(3, 1, lambda x: (x >> 2) ^ (x & 1))
    assert brute_force_space(f) == span([0b101, 0b010], 3)


def test_decision_handle_reuses_table(figure):
    decide = decision_handle(figure)
    assert decide((1,)) and not decide((0,)) and decide((1, 0, 1)) and not decide((1, 1))
