"""Command line entry point ``orthofam``.

Exit codes: 0 when everything passes, 1 on any failed trial or evaluation
error, 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .evaluate import EvaluationError, evaluate, result_json
from .scene import SceneError, parse_scene
from .serialize import to_json
from .suites import REGISTRY, list_suites, run_suite
from .svg import svg_from_result


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="orthofam", description="Verify theorems on linear families of triangles; render scenes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", help="run a theorem suite (or 'all')")
    c.add_argument("suite")
    c.add_argument("--trials", type=int)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--backend", choices=("exact", "float"), default="exact")
    c.add_argument("--tol", type=float)
    c.add_argument("--json", metavar="PATH", help="write the report(s) as JSON ('-' for stdout)")
    c.add_argument("--no-timing", action="store_true", help="report wall_ms as 0 for byte-stable output")

    s = sub.add_parser("scene", help="evaluate or render a scene file")
    ssub = s.add_subparsers(dest="scene_command", required=True, parser_class=_Parser)
    r = ssub.add_parser("render", help="write an SVG figure")
    r.add_argument("file")
    r.add_argument("-o", "--output", required=True)
    r.add_argument("--backend", choices=("exact", "float"), default="exact")
    e = ssub.add_parser("eval", help="evaluate declarations and queries")
    e.add_argument("file")
    e.add_argument("--json", action="store_true", help="print a JSON document")
    e.add_argument("--backend", choices=("exact", "float"), default="exact")

    sub.add_parser("list-suites", help="list registered theorem suites")
    return p


def _cmd_check(args) -> int:
    if args.backend == "exact" and args.tol is not None:
        print("orthofam: error: the exact backend takes no tolerance", file=sys.stderr)
        return 2
    if args.trials is not None and args.trials < 0:
        print("orthofam: error: --trials must be nonnegative", file=sys.stderr)
        return 2
    ids = sorted(REGISTRY) if args.suite == "all" else [args.suite]
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        print(f"orthofam: error: unknown suite {unknown[0]!r}; see 'orthofam list-suites'", file=sys.stderr)
        return 2
    reports = []
    for sid in ids:
        rep = run_suite(sid, args.trials, args.seed, args.backend, args.tol, timing=not args.no_timing)
        reports.append(rep)
        status = "PASS" if not rep["failures"] else "FAIL"
        print(f"{status} {sid}: {rep['passes']}/{rep['trials']} ({rep['wall_ms']} ms)")
        for f in rep["failures"][:3]:
            print(f"  trial {f['index']}: {json.dumps(f['residuals'])}")
    if args.json:
        payload = reports[0] if len(reports) == 1 else reports
        text = json.dumps(payload, indent=2) + "\n"
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
    return 0 if all(not r["failures"] for r in reports) else 1


def _load(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_scene(fh.read())


def _cmd_scene(args) -> int:
    try:
        doc = _load(args.file)
    except OSError as exc:
        print(f"orthofam: error: {exc}", file=sys.stderr)
        return 2
    except SceneError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 2
    try:
        res = evaluate(doc, args.backend)
    except EvaluationError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return 1
    if args.scene_command == "render":
        with open(args.output, "wb") as fh:
            fh.write(svg_from_result(res).encode("utf-8"))
        return 0
    if args.json:
        sys.stdout.write(json.dumps(result_json(res), indent=2) + "\n")
    else:
        for name, (kind, value) in res.objects.items():
            print(f"{kind} {name} = {json.dumps(to_json(value))}")
        for q in res.queries:
            print(f"{q.query.op} -> {json.dumps(to_json(q.value))}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.command == "check":
        return _cmd_check(args)
    if args.command == "scene":
        return _cmd_scene(args)
    for case in list_suites():
        print(f"{case.id:28} {case.trials:5}  {case.claim}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
