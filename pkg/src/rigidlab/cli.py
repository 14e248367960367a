"""Command-line entry point.

Subcommands: `gen` emits graph/complex JSON files, `rigidity` tests one graph,
`hanf` compares two graphs at a radius, `fo eval` checks a sentence against a
structure, and `verify` runs the packaged verification reports.  Exit code 0
means the property holds / the verification passed, 1 means it does not, and
2 signals a usage or input error.  JSON on stdout is the machine contract;
`--text` renders the same record for humans.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from .complexes import (
    build_cyclic_complex,
    build_path_complex,
    complex_from_json,
    complex_to_json,
    graph_of,
)
from .fo import EvaluationError, evaluate, free_vars, structure_from_json
from .foparse import FormulaSyntaxError, format_formula, parse_formula
from .graphs import disjoint_union, graph_from_json, graph_to_json
from .locality import (
    hanf_equivalent,
    verify_circuit,
    verify_connectivity,
    verify_neighborhood_lemma,
    verify_theorem,
)
from .pebble import geiringer_locally_2_rigid
from .reports import canonical_dumps
from .rigidity import (
    DEFAULT_TRIALS,
    HypothesesNotMetError,
    cjt_globally_rigid_predicate,
    is_globally_1_rigid,
    is_globally_rigid_generic,
    is_locally_1_rigid,
    is_locally_rigid_generic,
)

SEED_ENV = "RIGIDLAB_SEED"


class UsageError(ValueError):
    pass


def _resolve_seed(args) -> Optional[int]:
    if getattr(args, "seed", None) is not None:
        return args.seed
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {SEED_ENV} must be an integer, got {raw!r}")


def _load_json(path: str) -> object:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read file {path!r}: {exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"file {path!r} is not valid JSON: {exc}")


def _load_graph(path: str):
    try:
        return graph_from_json(_load_json(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")


def _load_complex(path: str):
    try:
        return complex_from_json(_load_json(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="rigidlab", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("-o", "--output", help="also write the JSON record to this file")
        p.add_argument("--text", action="store_true", help="human-readable output on stdout")

    gen = sub.add_parser("gen", help="emit graph or complex JSON")
    gen_sub = gen.add_subparsers(dest="family", required=True)
    for fam in ("cyclic", "path"):
        p = gen_sub.add_parser(fam, help=f"{fam} window construction")
        p.add_argument("--n", type=int, required=True, help="ground-set size")
        p.add_argument("--d", type=int, required=True, help="window size")
        p.add_argument("--emit", choices=("graph", "complex"), default="graph")
        p.add_argument("-o", "--output")
    p = gen_sub.add_parser("union", help="disjoint union of two graph files")
    p.add_argument("files", nargs=2, metavar="FILE")
    p.add_argument("-o", "--output")

    p = sub.add_parser("rigidity", help="test one graph (or complex, for --method cjt)")
    p.add_argument("file", metavar="FILE")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--property", choices=("local", "global"), required=True)
    p.add_argument(
        "--method",
        choices=("auto", "numeric", "pebble", "connectivity", "cjt"),
        default="auto",
    )
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int)
    add_common(p)

    p = sub.add_parser("hanf", help="radius-r neighborhood equivalence of two graphs")
    p.add_argument("files", nargs=2, metavar="FILE")
    p.add_argument("--r", type=int, required=True)
    add_common(p)

    fo = sub.add_parser("fo", help="first-order tools")
    fo_sub = fo.add_subparsers(dest="fo_command", required=True)
    p = fo_sub.add_parser("eval", help="evaluate a sentence file against a structure file")
    p.add_argument("--formula", required=True)
    p.add_argument("--structure", required=True)
    add_common(p)

    ver = sub.add_parser("verify", help="run a packaged verification report")
    ver_sub = ver.add_subparsers(dest="check", required=True)
    p = ver_sub.add_parser("neighborhoods", help="r-ball census of the cyclic window graph")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int)
    add_common(p)
    p = ver_sub.add_parser("circuit", help="codimension-1 parity counts of the window complex")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p = ver_sub.add_parser("connectivity", help="connectivity of the cyclic window graph")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_common(p)
    p = ver_sub.add_parser("theorem", help="full locality-separation run at (d, r)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    add_common(p)

    return top


def _run_gen(args) -> tuple[dict, bool]:
    if args.family == "union":
        g = disjoint_union(_load_graph(args.files[0]), _load_graph(args.files[1]))
        return graph_to_json(g), True
    build = build_cyclic_complex if args.family == "cyclic" else build_path_complex
    c = build(args.n, args.d)
    if args.emit == "complex":
        return complex_to_json(c), True
    return graph_to_json(graph_of(c)), True


def _run_rigidity(args) -> tuple[dict, bool]:
    d = args.dim
    if d < 1:
        raise UsageError(f"--dim must be >= 1, got {d}")
    which = args.property
    method = args.method
    seed = _resolve_seed(args)
    run = {
        "subcommand": "rigidity",
        "input": args.file,
        "dim": d,
        "property": which,
        "method": method,
        "trials": args.trials,
    }
    if method == "cjt":
        if which != "global":
            raise UsageError("--method cjt decides the global property only")
        if d < 4:
            raise UsageError(f"--method cjt requires --dim >= 4 (k = dim-1 >= 3), got {d}")
        c = _load_complex(args.file)
        try:
            value = cjt_globally_rigid_predicate(c, d - 1)
        except HypothesesNotMetError as exc:
            raise UsageError(f"--method cjt: {exc}")
        return {"run": run, "value": value, "method": "circuit-criterion"}, value

    g = _load_graph(args.file)
    if method == "connectivity":
        if d != 1:
            raise UsageError(f"--method connectivity applies to --dim 1 only, got {d}")
        value = is_locally_1_rigid(g) if which == "local" else is_globally_1_rigid(g)
        return {"run": run, "value": value, "method": "connectivity"}, value
    if method == "pebble":
        if d != 2 or which != "local":
            raise UsageError("--method pebble decides --dim 2 --property local only")
        value = geiringer_locally_2_rigid(g)
        return {"run": run, "value": value, "method": "pebble-game"}, value
    if method == "auto":
        if d == 1:
            value = is_locally_1_rigid(g) if which == "local" else is_globally_1_rigid(g)
            return {"run": run, "value": value, "method": "connectivity"}, value
        if d == 2 and which == "local" and g.order >= 2:
            value = geiringer_locally_2_rigid(g)
            return {"run": run, "value": value, "method": "pebble-game"}, value
    test = is_locally_rigid_generic if which == "local" else is_globally_rigid_generic
    verdict = test(g, d, trials=args.trials, seed=seed)
    run["seed"] = verdict.seed
    return {"run": run, "value": verdict.rigid, "verdict": verdict.to_json()}, verdict.rigid


def _run_hanf(args) -> tuple[dict, bool]:
    if args.r < 0:
        raise UsageError(f"--r must be >= 0, got {args.r}")
    g1 = _load_graph(args.files[0])
    g2 = _load_graph(args.files[1])
    bij = hanf_equivalent(g1, g2, args.r)
    payload = {
        "run": {"subcommand": "hanf", "inputs": list(args.files), "r": args.r},
        "equivalent": bij is not None,
        "witness": bij.to_json() if bij is not None else None,
    }
    return payload, bij is not None


def _run_fo_eval(args) -> tuple[dict, bool]:
    structure = structure_from_json(_load_json(args.structure))
    try:
        text = Path(args.formula).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read file {args.formula!r}: {exc}")
    try:
        formula = parse_formula(text, structure.signature)
    except FormulaSyntaxError as exc:
        raise UsageError(f"{args.formula}: {exc}")
    fv = sorted(free_vars(formula))
    if fv:
        names = ", ".join(f"v{i}" for i in fv)
        raise UsageError(f"{args.formula}: formula has free variables {names}; a sentence is required")
    try:
        value = evaluate(structure, formula)
    except EvaluationError as exc:
        raise UsageError(str(exc))
    payload = {
        "run": {"subcommand": "fo eval", "formula": args.formula, "structure": args.structure},
        "formula": format_formula(formula),
        "value": value,
    }
    return payload, value


def _run_verify(args) -> tuple[dict, bool]:
    if args.check == "neighborhoods":
        report = verify_neighborhood_lemma(args.d, args.r, args.n)
    elif args.check == "circuit":
        report = verify_circuit(args.d, args.n)
    elif args.check == "connectivity":
        report = verify_connectivity(args.d, args.n)
    else:
        report = verify_theorem(args.d, args.r, seed=_resolve_seed(args), trials=args.trials)
    return report.to_json(), report.passed


def _render_text(payload: dict) -> str:
    # flatten the JSON record into "dotted.path = value" lines
    lines: list[str] = []

    def walk(path: str, obj) -> None:
        if isinstance(obj, dict):
            for key in sorted(obj):
                walk(f"{path}.{key}" if path else key, obj[key])
        else:
            lines.append(f"{path} = {obj}")

    walk("", payload)
    return "\n".join(lines) + "\n"


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command == "gen":
            payload, ok = _run_gen(args)
        elif args.command == "rigidity":
            payload, ok = _run_rigidity(args)
        elif args.command == "hanf":
            payload, ok = _run_hanf(args)
        elif args.command == "fo":
            payload, ok = _run_fo_eval(args)
        else:
            payload, ok = _run_verify(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = canonical_dumps(payload)
    output = getattr(args, "output", None)
    if output:
        Path(output).write_text(text)
    if getattr(args, "text", False):
        sys.stdout.write(_render_text(payload))
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


def entry() -> None:
    sys.exit(main())
