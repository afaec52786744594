"""Acceptance criteria 1-15, each at its stated trial count and tolerance.

Every criterion prints one PASS/FAIL line (also collected into the
terminal summary by ``conftest``).
"""
import json
from pathlib import Path

import pytest

from conftest import ACCEPTANCE
from orthofam.harness.evaluate import evaluate, result_json
from orthofam.harness.scene import parse_scene, pretty
from orthofam.harness.suites import run_suite
from orthofam.harness.svg import render_svg

DATA = Path(__file__).parent / "data"
BUDGET_MS = 10_000


def _suites(*specs):
    """Run ``(id, trials, seed, backend, tol)`` specs; return summary lines and failure flag."""
    lines, ok = [], True
    for sid, trials, seed, backend, tol in specs:
        rep = run_suite(sid, trials, seed, backend, tol)
        good = rep["passes"] == trials and not rep["failures"] and rep["wall_ms"] < BUDGET_MS
        ok = ok and good
        lines.append(f"{sid} {rep['passes']}/{trials} [{backend}] {rep['wall_ms']:.0f} ms")
    return ok, "; ".join(lines)


def _record(num, ok, text):
    status = "PASS" if ok else "FAIL"
    ACCEPTANCE[num] = (status, text)
    print(f"{status} criterion {num}: {text}")
    assert ok, text


CRITERIA = {
    1: [("orthology-symmetry", 1000, 42, "exact", None)],
    2: [("carnot-vector", 1000, 1, "exact", None)],
    3: [("degenerate-count", 1000, 2, "exact", None)],
    4: [("family-criterion", 500, 3, "exact", None)],
    5: [("perpendicular-degenerates", 500, 4, "exact", None)],
    6: [("rideau", 500, 5, "exact", None)],
    7: [("maxwell", 500, 6, "exact", None)],
    8: [("center-line", 300, 7, "exact", None)],
    9: [("center-conic", 200, 8, "exact", None)],
    10: [("gamma-coincidence", 200, 9, "exact", None)],
    11: [
        ("sondat", 200, 10, "exact", None),
        ("sondat", 100, 1, "float", 1e-9),
        ("epsilon-tangency", 100, 11, "exact", None),
    ],
    12: [("lagrangian-roundtrip", 1000, 12, "exact", None)],
    13: [
        ("pedal-criterion", 200, 13, "exact", None),
        ("emelyanov", 200, 13, "exact", None),
        ("altitude-midpoints", 200, 13, "exact", None),
        ("gergonnian-flies", 100, 13, "exact", None),
        ("kiepert", 200, 13, "exact", None),
        ("flies-altitudes", 200, 7, "exact", None),
    ],
    14: [("focus-miquel", 100, 14, "exact", None), ("focus-miquel", 100, 14, "float", 1e-9)],
}


@pytest.mark.parametrize("num", sorted(CRITERIA))
def test_criterion(num):
    ok, text = _suites(*CRITERIA[num])
    _record(num, ok, text)


def test_criterion_15_scene_corpus():
    scenes = sorted((DATA / "scenes").glob("*.scene"))
    problems = []
    for path in scenes:
        doc = parse_scene(path.read_text(encoding="utf-8"))
        if parse_scene(pretty(doc)) != doc:
            problems.append(f"{path.stem}: round trip")
        first = render_svg(doc)
        if first != render_svg(parse_scene(path.read_text(encoding="utf-8"))):
            problems.append(f"{path.stem}: svg not stable")
        if first != (DATA / "golden" / f"{path.stem}.svg").read_bytes():
            problems.append(f"{path.stem}: svg golden")
        js = (json.dumps(result_json(evaluate(doc)), indent=2) + "\n").encode("utf-8")
        if js != (DATA / "golden" / f"{path.stem}.json").read_bytes():
            problems.append(f"{path.stem}: json golden")
    ok = len(scenes) >= 20 and not problems
    _record(15, ok, f"{len(scenes)} scenes, round trip and goldens" + (f" ({'; '.join(problems)})" if problems else ""))
