"""Command-line front end: run one check on one space and write a JSON report.

Exit codes: 0 holds (exactly or at budget), 1 violated, 2 inconclusive,
64 usage error.  ``--replay`` re-runs a saved report and re-certifies its
witness; it exits 0 only when both succeed.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import __version__
from . import serialize as S
from .checkers import (
    CheckVerdict,
    Effort,
    Verdict,
    WitnessKind,
    check_convexity,
    check_round,
    check_sleek,
    check_strict_ball_convexity,
    check_strict_convexity,
    check_union_sleekness,
    replay_witness,
)
from .constructions import SubspaceSpace
from .errors import RoundSleekError, UnsupportedDimension
from .intervals import IntervalUnion
from .numbers import parse_rational
from .points import point_to_json
from .regions import UnionRegion
from .space import IntervalSpace, MetricSpace, ToleranceConfig, verify_metric_axioms

EX_USAGE = 64
EXIT = {Verdict.HOLDS_EXACT: 0, Verdict.HOLDS_AT_BUDGET: 0, Verdict.VIOLATED: 1, Verdict.INCONCLUSIVE: 2}
CHECKS = ("round", "sleek", "convexity:<kind>", "strict-convexity", "strict-ball-convexity", "axioms", "union-sleek")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="roundsleek", description="Check roundness, sleekness and convexity of metric spaces.")
    p.add_argument("--space", help="space-definition JSON file, or gallery:<name>")
    p.add_argument("--check", help="one of: " + ", ".join(CHECKS))
    p.add_argument("--budget", type=int, default=500, help="pairs / samples to try (default 500)")
    p.add_argument("--resolution", type=_rational, default=None, help="sampling resolution p/q (default 1/64)")
    p.add_argument("--sep", type=_rational, default=None, help="minimum certified separation p/q (default 1/2^20)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--radius", type=_rational, default=None, help="ball radius for strict-ball-convexity")
    p.add_argument("--json", default="-", help="report path, '-' for standard output")
    p.add_argument("--svg", default=None, help="also draw the space and any witness")
    p.add_argument("--replay", default=None, metavar="REPORT", help="re-run a saved report and re-certify its witness")
    p.add_argument("--version", action="version", version=f"roundsleek {__version__}")
    return p


def _config(args) -> ToleranceConfig:
    kw = {"budget": args.budget, "seed": args.seed}
    if args.resolution is not None:
        kw["grid_delta"] = args.resolution
    if args.sep is not None:
        kw["sep_eps"] = args.sep
    try:
        return ToleranceConfig(**kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def load_space_arg(spec: str) -> MetricSpace:
    if spec.startswith("gallery:"):
        return S.space_from_json({"type": "gallery", "name": spec.split(":", 1)[1]})
    try:
        text = Path(spec).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read space file {spec!r}: {exc.strerror}") from None
    return S.load_space(text)


def _union_parts(space: MetricSpace) -> Tuple[list, MetricSpace]:
    if isinstance(space, IntervalSpace):
        return [IntervalUnion([iv]) for iv in space.union.intervals], IntervalSpace(IntervalUnion.real_line())
    if isinstance(space, SubspaceSpace) and isinstance(space.region, UnionRegion):
        return list(space.region.members), space.ambient
    raise UsageError("union-sleek needs an interval union or a region that is a union")


def _axioms(space: MetricSpace, cfg: ToleranceConfig) -> Tuple[CheckVerdict, Optional[dict]]:
    report = verify_metric_axioms(space, cfg)
    effort = Effort(pairs=report.triples, unknown=report.unknown)
    if not report.passed:
        v = report.violations[0]
        witness = {"kind": "AxiomViolation", "axiom": v.axiom, "detail": v.detail,
                   "points": {f"p{i}": point_to_json(p) for i, p in enumerate(v.points)}}
        return CheckVerdict(Verdict.VIOLATED, None, effort), witness
    return CheckVerdict(Verdict.HOLDS_AT_BUDGET, None, effort), None


def run(space: MetricSpace, check: str, cfg: ToleranceConfig, radius=None) -> Tuple[CheckVerdict, Optional[dict]]:
    """Run ``check`` and return the verdict plus its witness in report form."""
    if check == "round":
        v = check_round(space, cfg)
    elif check == "sleek":
        v = check_sleek(space, cfg)
    elif check.startswith("convexity:"):
        v = check_convexity(space, check.split(":", 1)[1], cfg)
    elif check == "strict-convexity":
        v = check_strict_convexity(space, cfg)
    elif check == "strict-ball-convexity":
        if radius is None:
            raise UsageError("strict-ball-convexity needs --radius")
        v = check_strict_ball_convexity(space, radius, cfg)
    elif check == "axioms":
        return _axioms(space, cfg)
    elif check == "union-sleek":
        regions, ambient = _union_parts(space)
        v = check_union_sleekness(regions, ambient, cfg)
    else:
        raise UsageError(f"unknown check {check!r}; expected one of {', '.join(CHECKS)}")
    return v, S.witness_to_json(v.witness)


def build_report(space: MetricSpace, check: str, cfg: ToleranceConfig, radius=None) -> Tuple[dict, CheckVerdict]:
    verdict, witness = run(space, check, cfg, radius)
    doc = {
        "schema": S.SCHEMA,
        "space": S.space_to_json(space),
        "check": check,
        "verdict": verdict.verdict.value,
        "witness": witness,
        "effort": S.effort_to_json(verdict.effort),
        "details": S.details_to_json(verdict.details),
        "seed": cfg.seed,
        "config": cfg.to_json(),
        "toolkit_version": __version__,
    }
    if radius is not None:
        doc["radius"] = S.real_to_json(radius)
    return doc, verdict


def _emit(text: str, target: str) -> None:
    if target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def _comparable(doc: dict) -> str:
    doc = dict(doc)
    doc.pop("toolkit_version", None)
    return S.dumps(doc)


def replay(path: str) -> Tuple[bool, dict]:
    """Re-run a saved report; ``(ok, summary)``."""
    try:
        saved = json.loads(Path(path).read_text())
    except OSError as exc:
        raise UsageError(f"cannot read report {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON: {exc.msg}") from None
    for key in ("space", "check", "config"):
        if key not in saved:
            raise UsageError(f"{path}: $.{key} is missing")
    space = S.space_from_json(saved["space"], "$.space")
    try:
        cfg = ToleranceConfig.from_json(saved["config"])
    except (KeyError, ValueError) as exc:
        raise UsageError(f"{path}: $.config: {exc}") from None
    radius = S.real_from_json(saved["radius"], "$.radius") if "radius" in saved else None
    fresh, _ = build_report(space, saved["check"], cfg, radius)
    identical = _comparable(fresh) == _comparable(saved)
    certified = None
    w = saved.get("witness")
    if w is not None and w.get("kind") in {k.value for k in WitnessKind}:
        certified = replay_witness(space, S.witness_from_json(w), cfg)
    elif w is not None:
        certified = identical  # an axiom violation is re-derived by the re-run itself
    ok = identical and certified is not False
    return ok, {"report": path, "identical": identical, "witness_certified": certified, "verdict": saved.get("verdict")}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        return _main(list(sys.argv[1:] if argv is None else argv))
    except UsageError as exc:
        print(f"roundsleek: usage error: {exc}", file=sys.stderr)
        return EX_USAGE
    except RoundSleekError as exc:
        print(f"roundsleek: {exc}", file=sys.stderr)
        return EX_USAGE


def _main(argv: List[str]) -> int:
    args = build_parser().parse_args(argv)
    if args.replay is not None:
        ok, summary = replay(args.replay)
        _emit(S.dumps(summary), args.json)
        return 0 if ok else 1
    if args.space is None or args.check is None:
        raise UsageError("--space and --check are required")
    space = load_space_arg(args.space)
    cfg = _config(args)
    doc, verdict = build_report(space, args.check, cfg, args.radius)
    _emit(S.dumps(doc), args.json)
    if args.svg is not None:
        from .svg import render_svg

        overlays = [verdict.witness] if verdict.witness is not None else []
        try:
            Path(args.svg).write_text(render_svg(space, overlays))
        except UnsupportedDimension as exc:
            print(f"roundsleek: no picture: {exc}", file=sys.stderr)
    return EXIT[verdict.verdict]


if __name__ == "__main__":
    sys.exit(main())
