"""Command line front end.

Every subcommand writes one JSON document (to ``--json PATH`` or stdout)
holding the parameters it ran with, the result and a deterministic trace.
Integers are written as decimal strings.  Witnesses are re-checked by the
verifier before they are written; one that fails is never emitted.

Exit status: 0 ok, 1 verify found a counterexample, 2 bad usage,
3 search budget exhausted, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from . import verify as V
from .coloring import parse_coloring
from .construct import LevelParams, find_mono_grid, infinitary_vdw
from .dichotomy import (
    Budgets,
    Case2Step,
    Case2Witness,
    brauer_schur,
    dichotomy,
    parse_schedule,
)
from .errors import BrauerSchurError, InternalError, SearchExhausted, SpecError
from .grid import GridTriple, minimal_diffs
from .windows import find_mono_ap, parse_plan, vdw_search, window_for_level

EXIT_OK, EXIT_REJECTED, EXIT_USAGE, EXIT_BUDGET, EXIT_INTERNAL = 0, 1, 2, 3, 4

log = logging.getLogger("brauer_schur")


class UsageError(SpecError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def stringify(obj, key=None):
    """Copy of ``obj`` with every integer turned into a decimal string."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        # the outcome tag stays a bare 1 or 2
        return obj if key == "case" else str(obj)
    if isinstance(obj, dict):
        return {str(k): stringify(v, k) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [stringify(v) for v in items]
    return obj


def int_list(text: str) -> List[int]:
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected a comma separated integer list, got {text!r}") from None
    if not out:
        raise UsageError("empty integer list")
    return out


def _lengths(text: str, depth: int) -> List[int]:
    ks = int_list(text)
    if len(ks) == 1:
        ks = ks * depth
    if len(ks) < depth:
        raise UsageError(f"--k gives {len(ks)} lengths, depth {depth} needs {depth}")
    return ks


def _emit(doc: dict, path: Optional[str]):
    text = json.dumps(stringify(doc), indent=2, sort_keys=False) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _gate(verdict, what):
    if not verdict.ok:
        raise InternalError(f"{what} failed its own verification: {verdict.to_json()}")


# ---------------------------------------------------------------- subcommands


def cmd_vdw(args):
    res = vdw_search(args.k, args.c, args.budget)
    # the certificate must be free of monochromatic k-progressions
    if find_mono_ap(res.extremal, args.k) is not None:
        raise InternalError("extremal coloring contains a monochromatic progression")
    print(res.value)
    print("".join(map(str, res.extremal)) if args.c < 10 else ",".join(map(str, res.extremal)))
    if args.json:
        _emit(
            {
                "params": {"k": args.k, "c": args.c, "budget": args.budget},
                "value": res.value,
                "extremal": list(res.extremal),
                "trace": {"nodes": res.nodes},
            },
            args.json,
        )


def _grid_params(args, chi):
    depth = args.depth
    ks = _lengths(args.k, depth)[:depth]
    plan = parse_plan(args.windows)
    windows: List[int] = []
    for i in range(1, depth + 1):
        windows.append(window_for_level(plan, i, ks[i - 1], chi.palette_size, windows))
    diffs = int_list(args.diffs)[:depth] if args.diffs else minimal_diffs(windows)
    if len(diffs) < depth:
        raise UsageError(f"--diffs gives {len(diffs)} values, depth {depth} needs {depth}")
    return plan, LevelParams(args.base, diffs, windows, ks, chi.palette_size)


def cmd_find_grid(args):
    chi = parse_coloring(args.coloring)
    plan, params = _grid_params(args, chi)
    w = find_mono_grid(chi, params)
    _gate(V.verify_grid_witness(chi, w), "grid witness")
    doc = {"params": _echo(args, plan=plan.to_string())}
    doc.update(w.to_json())
    doc["trace"] = {
        "windows": list(params.windows),
        "ambient_diffs": list(params.diffs),
        "ap_choices": [{"level": lv, "start": s, "step": d} for lv, s, d in w.trace],
    }
    _emit(doc, args.json)


def cmd_stabilize(args):
    chi = parse_coloring(args.coloring)
    horizon = max(args.horizon, args.depth)
    ks = _lengths(args.k, horizon)
    diffs = int_list(args.diffs) if args.diffs else None
    plan = parse_plan(args.windows)
    w = infinitary_vdw(
        chi, args.base, plan, ks, args.depth, horizon, diffs,
        verify_depth=args.verify_depth or None,
    )
    _gate(V.verify_grid_witness(chi, w.triple, w.color, w.verified_depth), "stabilized witness")
    doc = {"params": _echo(args, plan=plan.to_string(), horizon=horizon)}
    doc.update(w.to_json())
    doc["trace"] = dict(w.trace, verified_depth=w.verified_depth)
    _emit(doc, args.json)


def _budgets(args):
    return Budgets(
        depth=args.depth,
        horizon=args.base_horizon,
        blocks=args.blocks,
        index_horizon=args.horizon,
        block_size=args.block_size,
        verify_depth=args.verify_depth,
    )


def _gate_outcome(chi, outcome, budgets):
    w = outcome.witness
    if outcome.case == 1:
        _gate(V.verify_grid_witness(chi, w.triple.truncate(budgets.depth), w.color), "Case 1 grid")
        _gate(V.verify_dset(chi, w.dset[: budgets.depth], w.color), "Case 1 difference set")
    elif outcome.case == 2:
        _gate(V.verify_case2(chi, w, min(budgets.vdepth, len(w.newdiffs))), "Case 2 witness")


def cmd_dichotomy(args):
    chi = parse_coloring(args.coloring)
    c = args.colors or chi.palette_size
    schedule = parse_schedule(args.k_schedule)
    plan = parse_plan(args.windows)
    budgets = _budgets(args)
    outcome = dichotomy(chi, c, schedule, plan, budgets)
    doc = {"params": _echo(args, colors=c, plan=plan.to_string())}
    doc.update(outcome.to_json())
    if outcome.case not in (1, 2):
        _emit(doc, args.json)
        return EXIT_BUDGET
    _gate_outcome(chi, outcome, budgets)
    _emit(doc, args.json)
    return EXIT_OK


def cmd_brauer_schur(args):
    chi = parse_coloring(args.coloring)
    c = args.colors or chi.palette_size
    schedule = parse_schedule(args.k_schedule)
    plan = parse_plan(args.windows)
    budgets = _budgets(args)
    w = brauer_schur(chi, c, schedule, plan, budgets)
    _gate(V.verify_grid_witness(chi, w.triple, w.color), "final grid")
    _gate(V.verify_dset(chi, w.dset, w.color), "final difference set")
    doc = {"params": _echo(args, colors=c, plan=plan.to_string())}
    doc.update(w.to_json())
    _emit(doc, args.json)


# ---------------------------------------------------------------- verify


def _ints(seq):
    return tuple(int(v) for v in seq)


def _triple_from(doc):
    if "bases" in doc:
        return GridTriple(_ints(doc["bases"]), _ints(doc["diffs"]), _ints(doc["lengths"]))
    return GridTriple.constant_base(int(doc["base"]), _ints(doc["diffs"]), _ints(doc["lengths"]))


def _case2_from(doc):
    steps = tuple(
        Case2Step(int(s["t"]), int(s["m"]), int(s["l"]), int(s["k_m"])) for s in doc["steps"]
    )
    return Case2Witness(
        int(doc["base"]),
        _ints(doc["newdiffs"]),
        _ints(doc["windows"]),
        int(doc["forbidden"]),
        frozenset(_ints(doc["excluded"])),
        steps,
        int(doc["p"]),
        _ints(doc.get("dstar", ())),
    )


def verify_document(chi, doc: dict, depth: Optional[int] = None):
    """Verdict for a witness document of any kind the CLI emits."""
    try:
        case = doc.get("case")
        if case is not None and str(case) == "2":
            w = _case2_from(doc)
            return V.verify_case2(chi, w, depth or len(w.newdiffs))
        if case is not None and str(case) != "1":
            raise UsageError(f"nothing to verify in an outcome tagged {case!r}")
        triple = _triple_from(doc)
        color = int(doc["color"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SpecError):
            raise
        raise UsageError(f"malformed witness document: {exc!r}") from None
    depth = depth or triple.depth
    verdict = V.verify_grid_witness(chi, triple, color, min(depth, triple.depth))
    if verdict.ok and "dset" in doc:
        dset = _ints(doc["dset"])[:depth]
        dv = V.verify_dset(chi, dset, color)
        if not dv.ok:
            return dv
    return verdict


def cmd_verify(args):
    chi = parse_coloring(args.coloring)
    try:
        with open(args.witness) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read witness {args.witness!r}: {exc}") from None
    verdict = verify_document(chi, doc, args.depth)
    _emit(
        {"params": {"coloring": args.coloring, "witness": args.witness, "depth": args.depth},
         **verdict.to_json()},
        args.json,
    )
    return EXIT_OK if verdict.ok else EXIT_REJECTED


# ---------------------------------------------------------------- wiring


def _echo(args, **extra):
    skip = {"func", "json", "verbose"}
    out = {k: v for k, v in vars(args).items() if k not in skip}
    out.update(extra)
    return out


def _grid_flags(p):
    p.add_argument("--coloring", required=True, help="const:g | periodic:w | rand:seed:c | file:path:c")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--k", required=True, help="lengths k_1,...; one value is repeated")
    p.add_argument("--windows", required=True, help="certified:N | assumed:w1,.. | adaptive:s,f,max")
    p.add_argument("--diffs", help="ambient differences l_1,...; default: minimal")
    p.add_argument("--base", type=int, default=1)


def _dichotomy_flags(p):
    p.add_argument("--coloring", required=True)
    p.add_argument("--colors", type=int, default=0, help="palette size c (default: from coloring)")
    p.add_argument("--k-schedule", required=True, help="affine:a,b | list:k1,..[;affine:a,b]")
    p.add_argument("--windows", required=True)
    p.add_argument("--depth", type=int, default=2, help="witness depth r")
    p.add_argument("--blocks", type=int, default=0, help="Case 1 blocks R (default: r)")
    p.add_argument("--horizon", type=int, default=8, help="index horizon H for Case 1 blocks")
    p.add_argument("--block-size", type=int, default=2)
    p.add_argument("--base-horizon", type=int, default=0, help="descriptor horizon M of the base run")
    p.add_argument("--verify-depth", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="brauer-schur-engine", description=__doc__.split("\n")[0])
    top.add_argument("-v", "--verbose", action="store_true")
    sub = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("vdw", help="exact van der Waerden number")
    p.add_argument("k", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--budget", type=int, default=2_000_000)
    p.set_defaults(func=cmd_vdw)

    p = sub.add_parser("find-grid", help="monochromatic grid of a given depth")
    _grid_flags(p)
    p.set_defaults(func=cmd_find_grid)

    p = sub.add_parser("stabilize", help="stabilized triple from descriptors 1..M")
    _grid_flags(p)
    p.add_argument("--horizon", type=int, default=8, help="descriptor horizon M")
    p.add_argument("--verify-depth", type=int, default=0)
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("dichotomy", help="one round of the Case 1 / Case 2 split")
    _dichotomy_flags(p)
    p.set_defaults(func=cmd_dichotomy)

    p = sub.add_parser("brauer-schur", help="iterate the dichotomy to a final witness")
    _dichotomy_flags(p)
    p.set_defaults(func=cmd_brauer_schur)

    p = sub.add_parser("verify", help="check a witness document against a coloring")
    p.add_argument("--coloring", required=True)
    p.add_argument("--witness", required=True)
    p.add_argument("--depth", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    for sp in sub.choices.values():
        sp.add_argument("--json", metavar="PATH", help="write the JSON artifact here")
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        status = args.func(args)
    except SearchExhausted as exc:
        print(f"search exhausted: {exc}", file=sys.stderr)
        _emit({"error": type(exc).__name__, "message": str(exc), "trace": exc.trace}, args.json)
        return EXIT_BUDGET
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrauerSchurError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK if status is None else status


if __name__ == "__main__":
    sys.exit(main())
