"""Command-line front end.

Exit status: 0 ok, 2 parse/usage error, 3 resource cap exceeded, 4 the
polynomial algorithm disagreed with the exhaustive oracle (a bug).
"""

from __future__ import annotations

import argparse
import logging
import math
import random
import statistics
import sys
import time

from . import bdd, boolfn, gadgets, oracle
from .errors import InconsistentOracleError, ParseError, ResourceError
from .families import linear_map, nullspace, random_matrix, xor_chain
from .gf2 import BitVec, emit_basis, span
from .symmetry import circuit_basis, symmetry_basis

log = logging.getLogger("xorsym")

EXIT_OK, EXIT_PARSE, EXIT_RESOURCE, EXIT_MISMATCH = 0, 2, 3, 4


class CheckMismatch(Exception):
    pass


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load(args):
    """Returns (basis, oracle source, arity)."""
    order = args.order.split(",") if args.order else None
    if args.circuit:
        c = boolfn.parse_circuit(_read(args.circuit))
        return circuit_basis(c, order, max_nodes=args.max_nodes), c, c.n
    if order is not None:
        raise ParseError("--order is only valid with --circuit")
    if args.bdd:
        d = bdd.parse_obdd(_read(args.bdd))
        return symmetry_basis(d), d, d.n
    t = boolfn.parse_table(_read(args.table))
    return circuit_basis(boolfn.table_to_circuit(t), max_nodes=args.max_nodes), t, t.n


def _checked_basis(args):
    V, source, n = _load(args)
    if args.check:
        if n > args.cap:
            log.warning("--check skipped: %d variables over oracle cap %d", n, args.cap)
        else:
            W = oracle.brute_force_space(source, cap=args.cap)
            if W != V:
                return V, "oracle basis differs:\n" + emit_basis(W)
    return V, None


def cmd_basis(args):
    V, mismatch = _checked_basis(args)
    _write(emit_basis(V), args.out)
    if mismatch:
        raise CheckMismatch(mismatch)


def cmd_decide(args):
    V, mismatch = _checked_basis(args)
    _write("yes\n" if V.dimension else "no\n", args.out)
    if mismatch:
        raise CheckMismatch(mismatch)


def cmd_oracle(args):
    if args.circuit:
        f = boolfn.parse_circuit(_read(args.circuit))
    elif args.bdd:
        f = bdd.parse_obdd(_read(args.bdd))
    else:
        f = boolfn.parse_table(_read(args.table))
    _write(emit_basis(oracle.brute_force_space(f, cap=args.cap)), args.out)


def cmd_gen_simon(args):
    if args.n is None or args.s is None:
        raise ParseError("gen-simon needs --n and --s")
    if args.n > args.cap:
        raise ResourceError("n=%d over cap %d" % (args.n, args.cap))
    try:
        s = BitVec.from_str(args.s)
        inst = gadgets.simon_instance(args.n, s, seed=args.seed, strict=args.strict)
    except ValueError as e:
        raise ParseError(str(e)) from None
    _write(boolfn.emit_table(inst.table), args.out)
    if args.circuit_out:
        _write(boolfn.emit_circuit(inst.circuit()), args.circuit_out)


def cmd_gen_hardness(args):
    if not args.circuit:
        raise ParseError("gen-hardness needs --circuit")
    c = boolfn.parse_circuit(_read(args.circuit))
    try:
        inst = gadgets.build_F(c)
    except ValueError as e:
        raise ParseError(str(e)) from None
    _write(boolfn.emit_circuit(inst.transformed), args.out)


def sweep(n_max, start=8):
    ns = []
    n = start
    while n < n_max:
        ns.append(n)
        n *= 2
    ns.append(n_max)
    return ns


def bench_instance(family, n, rng):
    """Returns (circuit, expected subspace)."""
    if family == "xor-chain":
        return xor_chain(n), span([(1 << n) - 1], n)
    A = random_matrix(max(1, n // 2), n, rng)
    return linear_map(A, n), span(nullspace(A, n), n)


def run_bench(family, n_max, seed=0, repeat=3, max_nodes=bdd.DEFAULT_NODE_CAP):
    """Yields (n, bdd_nodes, millis, dim, ok) per sweep point."""
    rng = random.Random(seed)
    for n in sweep(n_max):
        c, expected = bench_instance(family, n, rng)
        d = bdd.compile(c, max_nodes=max_nodes)
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            V = symmetry_basis(d)
            times.append(time.perf_counter() - t0)
        yield n, d.size(), 1000 * statistics.median(times), V.dimension, V == expected


def cubic_fit_ok(points, slack=4.0):
    """Log-log least-squares slope of time vs n, within ``slack`` of cubic growth.

    ``points`` are (n, millis). Over the range [n0, n1] the fitted growth
    factor (n1/n0)**slope may exceed (n1/n0)**3 by at most ``slack``.
    """
    xs = [math.log(n) for n, _ in points]
    ys = [math.log(max(ms, 1e-3)) for _, ms in points]
    mx, my = statistics.fmean(xs), statistics.fmean(ys)
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum((x - mx) ** 2 for x in xs)
    span_ = xs[-1] - xs[0]
    return slope * span_ <= 3 * span_ + math.log(slack), slope


def cmd_bench(args):
    if args.family not in ("xor-chain", "linear-map"):
        raise ParseError("unknown family %r" % args.family)
    to_file = args.out not in (None, "-")
    lines, bad = [], []
    for n, nodes, ms, dim, ok in run_bench(args.family, args.n_max, args.seed, args.repeat,
                                           args.max_nodes):
        line = "%d %d %.3f %d\n" % (n, nodes, ms, dim)
        lines.append(line)
        if not to_file:
            sys.stdout.write(line)
            sys.stdout.flush()
        if not ok:
            bad.append(n)
    if to_file:
        _write("".join(lines), args.out)
    if bad:
        raise CheckMismatch("wrong basis for n in %s" % bad)


def build_parser():
    ap = argparse.ArgumentParser(prog="xorsym", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def inputs(p, required=True):
        g = p.add_mutually_exclusive_group(required=required)
        g.add_argument("--circuit", metavar="PATH")
        g.add_argument("--bdd", metavar="PATH")
        g.add_argument("--table", metavar="PATH")

    def common(p):
        p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP,
                       help="largest arity the exhaustive oracle will take")
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--max-nodes", type=int, default=bdd.DEFAULT_NODE_CAP)

    for name, fn, help_ in (("basis", cmd_basis, "basis of the XOR-symmetry space"),
                            ("decide", cmd_decide, "does a nonzero symmetry exist")):
        p = sub.add_parser(name, help=help_)
        inputs(p)
        common(p)
        p.add_argument("--order", metavar="LIST", help="comma-separated variable order")
        p.add_argument("--check", action="store_true", help="cross-check with the oracle")
        p.set_defaults(func=fn)

    p = sub.add_parser("oracle", help="exhaustive basis (exponential)")
    inputs(p)
    common(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen-simon", help="seeded function with a hidden shift")
    common(p)
    p.add_argument("--n", type=int)
    p.add_argument("--s", metavar="BITSTRING")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--strict", action="store_true", help="redraw until dim V(f) = 1")
    p.add_argument("--circuit-out", metavar="PATH")
    p.set_defaults(func=cmd_gen_simon)

    p = sub.add_parser("gen-hardness", help="emit the reduction circuit F(C)")
    common(p)
    p.add_argument("--circuit", metavar="PATH")
    p.set_defaults(func=cmd_gen_hardness)

    p = sub.add_parser("bench", help="time the BDD algorithm on a family sweep")
    common(p)
    p.add_argument("--family", default="xor-chain")
    p.add_argument("--n-max", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=3)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        args.func(args)
    except (ParseError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_PARSE
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_RESOURCE
    except (CheckMismatch, InconsistentOracleError) as e:
        print("CHECK FAILED: %s" % e, file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
