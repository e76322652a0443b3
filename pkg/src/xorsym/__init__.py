"""XOR-symmetry spaces of boolean functions.

For f: B^n -> B^m the set V(f) = {s | f(x+s) = f(x) for all x} is a linear
subspace of B^n. :func:`symmetry_basis` computes it in polynomial time from
an ordered BDD; :func:`brute_force_space` computes it by exhaustion from any
representation; :mod:`xorsym.gadgets` holds the reduction showing the
circuit version of the question is NP-hard.
"""

from .bdd import Obdd, compile, eval_obdd, parse_obdd, reduce
from .boolfn import Circuit, TruthTable, circuit_to_table, eval_circuit, parse_circuit
from .gf2 import AffineSpace, BitVec, Subspace, affine_intersect, intersect, span
from .oracle import brute_force_decide, brute_force_space
from .symmetry import has_nonzero_symmetry, symmetry_basis

__version__ = "0.1.0"
