"""Command-line front end: compute, verify, census, selftest.

All stdout payloads are deterministic; timing goes to stderr only.
"""
from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from dataclasses import asdict
from pathlib import Path

from .automorphism import (
    cycle_notation,
    enumerate_automorphisms,
    induced_signed_edge_perm,
    permutation_sign,
)
from .homology import IntMatrix, det_bareiss, det_cofactor, fundamental_cycles
from .multigraph import (
    GraphFormatError,
    parse_graph,
    random_orientation,
    reference_orientation,
    serialize,
    serialize_compact,
    spanning_forest,
)
from .signs import (
    chain_determinant_check,
    combinatorial_sign,
    homological_sign,
    homological_sign_extended,
    verify_graph,
)
from .sweep import SweepParams, census_orientable, sweep_verify


def _fmt_sign(s: int) -> str:
    return f"{s:+d}"


def cmd_compute(args: argparse.Namespace) -> int:
    try:
        g = parse_graph(Path(args.graph_file).read_text(encoding="utf-8"))
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not g.is_connected and not args.extended:
        print(
            "error: graph is disconnected; rerun with --extended to include "
            "the component-permutation sign",
            file=sys.stderr,
        )
        return 2
    o = reference_orientation(g)
    basis = fundamental_cycles(g, o, spanning_forest(g))
    auts = enumerate_automorphisms(g)
    print(f"graph: {serialize_compact(g)}")
    print(
        f"vertices: {g.vertex_count}  edges: {g.edge_count}  "
        f"components: {g.components.component_count}  cycle_rank: {g.cycle_rank}"
    )
    print(f"automorphisms: {len(auts)}")
    for i, a in enumerate(auts):
        sep = induced_signed_edge_perm(g, o, a)
        comb = combinatorial_sign(g, o, a)
        if args.extended:
            hom = homological_sign_extended(g, o, basis, a)
        else:
            hom = homological_sign(g, o, basis, a)
        eps = "".join("+" if s > 0 else "-" for s in sep.edge_sign)
        line = (
            f"[{i}] vperm={cycle_notation(a.vertex_perm)}"
            f" v_sign={_fmt_sign(permutation_sign(a.vertex_perm))}"
            f" e_sign={_fmt_sign(permutation_sign(sep.edge_perm))}"
            f" eps={eps or '(none)'}"
            f" hom={_fmt_sign(hom)} comb={_fmt_sign(comb)}"
            f" agree={'yes' if hom == comb else 'NO'}"
        )
        if args.diagnostics:
            f = chain_determinant_check(g, o, basis, a)
            line += (
                f" det_edges={_fmt_sign(f.edge_space_det)}"
                f" det_vertices={_fmt_sign(f.vertex_space_det)}"
                f" det_cycles={_fmt_sign(f.cycle_space_det)}"
                f" comp_sign={_fmt_sign(f.component_sign)}"
            )
        print(line)
    return 0


def _params_from_args(args: argparse.Namespace) -> SweepParams:
    return SweepParams(
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        max_multiplicity=args.max_multiplicity,
        allow_loops=args.loops,
        connected_only=args.connected_only,
    )


def cmd_verify(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    report = sweep_verify(params)
    if args.json:
        doc = {
            "params": asdict(params),
            "graphs_checked": report.graphs_checked,
            "automorphisms_checked": report.automorphisms_checked,
            "odd_graph_count": report.odd_graph_count,
            "failures": [asdict(f) for f in report.failures],
            "ok": report.ok,
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"graphs_checked: {report.graphs_checked}")
        print(f"automorphisms_checked: {report.automorphisms_checked}")
        print(f"odd_graph_count: {report.odd_graph_count}")
        print(f"failures: {len(report.failures)}")
        for f in report.failures:
            print(
                f"failure: graph={f.graph!r} vperm={f.vertex_perm}"
                f" hep={f.half_edge_perm} hom={_fmt_sign(f.homological)}"
                f" comb={_fmt_sign(f.combinatorial)}"
            )
    print(f"elapsed: {report.elapsed_seconds:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


def cmd_census(args: argparse.Namespace) -> int:
    params = _params_from_args(args)
    total = odd = 0
    for g, is_odd in census_orientable(params):
        print(f"{serialize_compact(g)}\t{'odd' if is_odd else 'even'}")
        total += 1
        odd += is_odd
    print(f"# graphs: {total}\todd: {odd}")
    return 0


# Expected sign sequences per golden graph, in automorphism enumeration order;
# derived independently by brute force over all half-edge permutations and by
# the chain-determinant factorization.
_GOLDENS: list[tuple[str, str, tuple[int, ...]]] = [
    ("loop", "v 1; e 0 0", (1, -1)),
    ("single-edge", "v 2; e 0 1", (1, 1)),
    ("double-edge", "v 2; e 0 1; e 0 1", (1, 1, -1, -1)),
    ("triangle", "v 3; e 0 1; e 1 2; e 2 0", (1, 1, 1, 1, 1, 1)),
    ("path3", "v 3; e 0 1; e 1 2", (1, -1)),
]


def _selftest_checks() -> list[tuple[str, bool, str]]:
    checks: list[tuple[str, bool, str]] = []

    def add(name: str, ok: bool, detail: str = "") -> None:
        checks.append((name, ok, detail))

    for name, text, expected in _GOLDENS:
        g = parse_graph(text)
        add(f"{name}: round-trip", parse_graph(serialize(g)) == g)
        results = verify_graph(g, diagnostics=True)
        got = tuple(r.combinatorial for r in results)
        add(f"{name}: automorphism count {len(expected)}", len(results) == len(expected))
        add(f"{name}: signs {expected}", got == expected, f"got {got}")
        add(f"{name}: both routes agree", all(r.agree for r in results))
        add(
            f"{name}: chain determinants consistent",
            all(r.factors is not None and r.factors.consistent for r in results),
        )
        o = reference_orientation(g)
        auts = enumerate_automorphisms(g)
        roots_ok = True
        for root in range(g.vertex_count):
            basis = fundamental_cycles(g, o, spanning_forest(g, root=root))
            signs = tuple(homological_sign_extended(g, o, basis, a) for a in auts)
            roots_ok = roots_ok and signs == tuple(r.homological for r in results)
        add(f"{name}: root-independent", roots_ok)
        rng = random.Random(12345)
        orient_ok = all(
            tuple(combinatorial_sign(g, random_orientation(g, rng), a) for a in auts)
            == got
            for _ in range(20)
        )
        add(f"{name}: orientation-independent", orient_ok)

    entries = (-1, 0, 1)
    ok = all(
        det_bareiss(m) == det_cofactor(m)
        for vals in itertools.product(entries, repeat=4)
        for m in [IntMatrix(2, 2, vals)]
    )
    add("determinant cross-check: all 2x2 over {-1,0,1}", ok)
    rng = random.Random(99)
    ok = True
    for _ in range(200):
        n = rng.choice((3, 4, 5))
        m = IntMatrix(n, n, tuple(rng.randint(-2, 2) for _ in range(n * n)))
        ok = ok and det_bareiss(m) == det_cofactor(m)
    add("determinant cross-check: random up to 5x5", ok)
    return checks


def cmd_selftest(_args: argparse.Namespace) -> int:
    failed = 0
    checks = _selftest_checks()
    for name, ok, detail in checks:
        if ok:
            print(f"ok   {name}")
        else:
            failed += 1
            print(f"FAIL {name}" + (f" ({detail})" if detail else ""))
    print(f"selftest: {'PASS' if failed == 0 else 'FAIL'} ({len(checks) - failed}/{len(checks)})")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="autsign",
        description=(
            "Compute and cross-check the two sign invariants of multigraph "
            "automorphisms, and classify graphs by odd symmetries."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="signs of every automorphism of one graph")
    p.add_argument("graph_file", help="graph text file (v/e directives)")
    p.add_argument("--extended", action="store_true",
                   help="include the component-permutation sign (disconnected graphs)")
    p.add_argument("--diagnostics", action="store_true",
                   help="print chain-level determinant factors")
    p.set_defaults(func=cmd_compute)

    def add_sweep_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-vertices", type=int, required=True)
        p.add_argument("--max-edges", type=int, required=True)
        p.add_argument("--max-multiplicity", type=int, default=1)
        p.add_argument("--loops", action="store_true", help="allow loop edges")
        p.add_argument("--connected-only", action="store_true")

    p = sub.add_parser("verify", help="exhaustively check both signs agree")
    add_sweep_args(p)
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="tab-separated odd/even classification")
    add_sweep_args(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("selftest", help="golden examples and oracle cross-checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
