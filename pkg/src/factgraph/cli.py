"""Command-line front end.

One subcommand per invocation; exit 0 on success, 1 on a verification
failure (with a witness printed), 2 on usage errors. All rationals print
as p/q strings, JSON output has deterministic ordering.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import acceptance, geometry, graphs, poset, quasipoly
from .core import NumericalSemigroup, new_semigroup
from .errors import FactGraphError, FitFailure, PresentationParseError


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _semigroup(args: argparse.Namespace) -> NumericalSemigroup:
    return new_semigroup(args.generators)


def _coords(t: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


def load_presentation(path: str, S: NumericalSemigroup) -> graphs.Presentation:
    """Read a presentation file, validating against S and normalizing."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise PresentationParseError(f"cannot read {path}: {exc}") from exc
    if not isinstance(data, dict) or "trades" not in data:
        raise PresentationParseError(f"{path}: expected an object with 'trades'")
    gens = data.get("generators")
    if gens is not None and tuple(gens) != S.generators:
        raise PresentationParseError(
            f"{path}: file generators {tuple(gens)} != {S.generators}"
        )
    pairs = []
    for i, t in enumerate(data["trades"]):
        try:
            pairs.append((tuple(t["left"]), tuple(t["right"])))
        except (TypeError, KeyError) as exc:
            raise PresentationParseError(
                f"{path}: trade #{i} must have integer 'left' and 'right'"
            ) from exc
    rho, warnings = graphs.normalize_presentation(S, pairs)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    return rho


def _presentation(args: argparse.Namespace, S: NumericalSemigroup) -> graphs.Presentation:
    if getattr(args, "presentation", None):
        return load_presentation(args.presentation, S)
    return graphs.minimal_presentation(S)


# -- subcommand handlers ---------------------------------------------------


def cmd_factorizations(args) -> int:
    S = _semigroup(args)
    zs = S.factorizations(args.n)
    if args.json:
        _emit(
            {
                "generators": list(S.generators),
                "n": args.n,
                "factorizations": [list(z.coords) for z in zs],
            }
        )
    else:
        for z in zs:
            print(_coords(z.coords))
    return 0


def _range_of(args) -> list[int]:
    if args.range is not None:
        a, b = args.range
        if a > b:
            raise FactGraphError(f"empty range {a}..{b}")
        return list(range(a, b + 1))
    if args.n is None:
        raise FactGraphError("need --n or --range")
    return [args.n]


def cmd_count(args) -> int:
    S = _semigroup(args)
    ns = _range_of(args)
    rows = [(n, S.count_factorizations(n)) for n in ns]
    if args.json:
        _emit({"generators": list(S.generators), "counts": [list(r) for r in rows]})
    elif args.csv:
        print("n,count")
        for n, c in rows:
            print(f"{n},{c}")
    elif len(rows) == 1:
        print(rows[0][1])
    else:
        for n, c in rows:
            print(f"{n}\t{c}")
    return 0


def _print_graph(G: graphs.FactorizationGraph, args) -> None:
    if args.json:
        _emit(graphs.graph_to_json(G))
    elif args.dot:
        print(graphs.graph_to_dot(G))
    else:
        print(f"{G.kind} at n = {G.n}: "
              f"{len(G.vertices)} vertices, {len(G.edges)} edges")
        for i, j in G.edges:
            print(f"  {_coords(G.vertices[i].coords)} -- {_coords(G.vertices[j].coords)}")


def cmd_support_graph(args) -> int:
    S = _semigroup(args)
    _print_graph(graphs.support_graph(S, args.n), args)
    return 0


def cmd_trade_graph(args) -> int:
    S = _semigroup(args)
    rho = _presentation(args, S)
    _print_graph(graphs.trade_graph(S, rho, args.n), args)
    return 0


def cmd_betti(args) -> int:
    S = _semigroup(args)
    betti = graphs.betti_elements(S)
    if args.json:
        _emit({"generators": list(S.generators), "betti": list(betti)})
    else:
        print(" ".join(str(b) for b in betti))
    return 0


def cmd_minimal_presentation(args) -> int:
    S = _semigroup(args)
    rho = graphs.minimal_presentation(S)
    payload = graphs.presentation_to_json(S, rho)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    if args.json:
        _emit(payload)
    elif not args.out:
        for t in rho.trades:
            print(f"{_coords(t.left)} -- {_coords(t.right)}  [beta={t.betti_value}]")
    return 0


def cmd_edge_count(args) -> int:
    S = _semigroup(args)
    ns = _range_of(args)
    rho = _presentation(args, S) if args.which == "trade" else None

    def formula(n: int) -> int:
        if args.which == "support":
            return graphs.edge_count_support_closed(S, n)
        return graphs.edge_count_trade_closed(S, rho, n)

    def brute(n: int) -> int:
        G = (
            graphs.support_graph(S, n)
            if args.which == "support"
            else graphs.trade_graph(S, rho, n)
        )
        return len(G.edges)

    rows = []
    status = 0
    for n in ns:
        if args.mode == "formula":
            rows.append((n, formula(n), None, None))
        elif args.mode == "brute":
            rows.append((n, None, brute(n), None))
        else:
            f, b = formula(n), brute(n)
            ok = f == b
            rows.append((n, f, b, ok))
            if not ok:
                status = 1
    if args.json:
        _emit(
            {
                "generators": list(S.generators),
                "which": args.which,
                "mode": args.mode,
                "rows": [
                    {
                        "n": n,
                        **({"formula": f} if f is not None else {}),
                        **({"brute": b} if b is not None else {}),
                        **({"match": ok} if ok is not None else {}),
                    }
                    for n, f, b, ok in rows
                ],
            }
        )
    else:
        for n, f, b, ok in rows:
            prefix = f"{n}\t" if len(rows) > 1 else ""
            if args.mode == "both":
                verdict = "OK" if ok else f"MISMATCH n={n}"
                print(f"{prefix}{f} {b} {verdict}")
            else:
                print(f"{prefix}{f if f is not None else b}")
    return status


def cmd_fit(args) -> int:
    if args.from_csv:
        table = quasipoly.load_sequence_csv(args.from_csv)
        oracle = quasipoly.table_oracle(table)
        if args.start is None or args.period is None or args.degree is None:
            raise FactGraphError("--from-csv needs --period, --degree, and --start")
        start = args.start
    else:
        if not args.generators:
            raise FactGraphError("fit needs generators or --from-csv")
        S = new_semigroup(args.generators)
        rho = (
            _presentation(args, S)
            if args.which == "trade-edges"
            else None
        )
        if args.which == "count":
            oracle = S.count_factorizations
            degree_default = S.k - 1
        elif args.which == "support-edges":
            oracle = lambda n: graphs.edge_count_support_closed(S, n)
            degree_default = 2 * S.k - 2
        else:
            oracle = lambda n: graphs.edge_count_trade_closed(S, rho, n)
            degree_default = S.k - 1
        if args.period is None:
            args.period = S.lcm
        if args.degree is None:
            args.degree = degree_default
        start = (
            args.start
            if args.start is not None
            else quasipoly.default_fit_start(S, rho)
        )
    try:
        q = quasipoly.fit(oracle, args.period, args.degree, start)
    except FitFailure as exc:
        print(f"fit failed: {exc}", file=sys.stderr)
        return 1
    if args.minimal_period:
        _, q = quasipoly.minimal_period(q)
    if args.json:
        _emit(quasipoly_payload(q))
    else:
        print(f"degree {q.degree}, period {q.period}, valid from {q.valid_from}")
        for r in sorted(q.coeffs):
            print(f"  residue {r}: " + " ".join(str(a) for a in q.coeffs[r]))
    return 0


def quasipoly_payload(q) -> dict:
    return quasipoly.quasipoly_to_json(q)


def cmd_verify_claims(args) -> int:
    if args.generators:
        S = new_semigroup(args.generators)
        rho = _presentation(args, S)
        report = quasipoly.verify_degree_period_claims(S, rho)
        for line in report.lines():
            print(line)
        return 0 if report.passed else 1
    status = 0
    for name, ok, detail in acceptance.run_all():
        print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        if not ok:
            status = 1
    return status


def cmd_poset(args) -> int:
    P = poset.disjoint_support_poset(args.k, ordered=args.ordered)
    if args.json:
        _emit(P.to_json())
    else:
        kind = "ordered" if args.ordered else "unordered"
        print(f"{kind} disjoint-support poset, k = {args.k}: "
              f"{len(P.elements)} pairs, {len(P.covers())} cover relations")
    return 0


def cmd_complex(args) -> int:
    if args.off:
        print(geometry.complex_to_off(args.k))
        return 0
    r = geometry.projective_complex_check(args.k)
    if args.json:
        payload = geometry.complex_to_json(args.k)
        payload["euler"] = r.euler
        payload["expected_euler"] = r.expected_euler
        payload["covering_two_to_one"] = r.covering_two_to_one
        _emit(payload)
    else:
        cells = "/".join(str(r.cell_counts.get(d, 0)) for d in sorted(r.cell_counts))
        print(f"k = {args.k}: cells {cells}, chi = {r.euler} "
              f"(expected {r.expected_euler}), "
              f"2-to-1 covering: {'yes' if r.covering_two_to_one else 'NO'}")
    return 0 if r.ok else 1


def cmd_zonotope(args) -> int:
    r = geometry.zonotope_iso(args.k)
    if args.json:
        _emit(
            {
                "k": r.k,
                "face_counts": {str(d): r.face_counts[d] for d in sorted(r.face_counts)},
                "euler": r.euler,
                "order_isomorphism": r.bijective and r.inverse_ok and r.order_ok,
                "covectors_match_oracle": r.covectors_match_oracle,
            }
        )
    else:
        faces = "/".join(str(r.face_counts[d]) for d in sorted(r.face_counts))
        print(f"k = {r.k}: faces {faces}, chi = {r.euler}, "
              f"face lattice isomorphism: {'yes' if r.ok else 'NO'}")
    return 0 if r.ok else 1


# -- parser ----------------------------------------------------------------


def _add_generators(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument(
        "generators",
        type=int,
        nargs="+" if required else "*",
        help="semigroup generators (positive integers)",
    )


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factgraph",
        description="Factorization graphs of numerical semigroup elements.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factorizations", help="list the factorizations of n")
    _add_generators(p)
    p.add_argument("--n", type=int, required=True)
    _add_json(p)
    p.set_defaults(fn=cmd_factorizations)

    p = sub.add_parser("count", help="number of factorizations of n")
    _add_generators(p)
    p.add_argument("--n", type=int)
    p.add_argument("--range", type=int, nargs=2, metavar=("A", "B"))
    p.add_argument("--csv", action="store_true")
    _add_json(p)
    p.set_defaults(fn=cmd_count)

    for name, fn in (("support-graph", cmd_support_graph), ("trade-graph", cmd_trade_graph)):
        p = sub.add_parser(name, help=f"{name.replace('-', ' ')} of n")
        _add_generators(p)
        p.add_argument("--n", type=int, required=True)
        if name == "trade-graph":
            p.add_argument("--presentation", help="JSON presentation file")
        p.add_argument("--dot", action="store_true", help="Graphviz output")
        _add_json(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("betti", help="Betti elements of the semigroup")
    _add_generators(p)
    _add_json(p)
    p.set_defaults(fn=cmd_betti)

    p = sub.add_parser("minimal-presentation", help="one minimal presentation")
    _add_generators(p)
    p.add_argument("--out", help="write the presentation JSON to a file")
    _add_json(p)
    p.set_defaults(fn=cmd_minimal_presentation)

    p = sub.add_parser("edge-count", help="edge counts by formula and/or brute force")
    _add_generators(p)
    p.add_argument("--which", choices=("support", "trade"), required=True)
    p.add_argument("--mode", choices=("formula", "brute", "both"), default="formula")
    p.add_argument("--n", type=int)
    p.add_argument("--range", type=int, nargs=2, metavar=("A", "B"))
    p.add_argument("--presentation", help="JSON presentation file (trade graphs)")
    _add_json(p)
    p.set_defaults(fn=cmd_edge_count)

    p = sub.add_parser("fit", help="fit an exact quasipolynomial")
    _add_generators(p, required=False)
    p.add_argument(
        "--which",
        choices=("count", "support-edges", "trade-edges"),
        default="count",
    )
    p.add_argument("--period", type=int)
    p.add_argument("--degree", type=int)
    p.add_argument("--start", type=int)
    p.add_argument("--from-csv", help="fit an (n, value) CSV sequence instead")
    p.add_argument("--presentation", help="JSON presentation file (trade edges)")
    p.add_argument("--minimal-period", action="store_true", help="refold to the minimal period")
    _add_json(p)
    p.set_defaults(fn=cmd_fit)

    p = sub.add_parser(
        "verify-claims",
        help="run every bundled verification; with generators, check one semigroup",
    )
    _add_generators(p, required=False)
    p.add_argument("--presentation", help="JSON presentation file")
    p.set_defaults(fn=cmd_verify_claims)

    p = sub.add_parser("poset", help="disjoint-support poset")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ordered", action="store_true")
    _add_json(p)
    p.set_defaults(fn=cmd_poset)

    p = sub.add_parser("complex", help="cubical complex of the unordered poset")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--off", action="store_true", help="OFF export (k = 4 only)")
    _add_json(p)
    p.set_defaults(fn=cmd_complex)

    p = sub.add_parser("zonotope", help="zonotope face lattice checks")
    p.add_argument("--k", type=int, required=True)
    _add_json(p)
    p.set_defaults(fn=cmd_zonotope)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FactGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
