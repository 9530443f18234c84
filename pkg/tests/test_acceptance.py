"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with  pytest tests/test_acceptance.py -v -s  to see the per-criterion
lines; the assertions carry the same information either way.
"""

import math
import time

import pytest

import planarlp as pl
from planarlp import cli
from planarlp.errors import DegenerateOptimum
from conftest import FIXTURES, circ_close, random_bounded_lp, rng_for

PAPER = str(FIXTURES / "paper.lp")

DEG = math.pi / 180.0

_capsys = None


@pytest.fixture(autouse=True)
def _live_console(capsys):
    # lets report() write through pytest's capture so the PASS/FAIL lines
    # show up even without -s
    global _capsys
    _capsys = capsys
    yield
    _capsys = None


def report(num, desc, passed):
    line = f"[acceptance] criterion {num} ({desc}): {'PASS' if passed else 'FAIL'}"
    if _capsys is not None:
        with _capsys.disabled():
            print(line)
    else:
        print(line)
    assert passed, f"criterion {num} failed: {desc}"


def test_c1_reference_reproduction():
    t0 = time.perf_counter()
    lp = pl.load_lp(PAPER)
    rep = pl.analyze(lp)
    elapsed = time.perf_counter() - t0
    p = rep.optimal_vertex.point
    checks = [
        abs(p.x1 - 80.0) <= 1e-9 and abs(p.x2 - 40.0) <= 1e-9,
        abs(rep.optimal_value - 280.0) <= 1e-9 * 280.0,
        abs(math.degrees(rep.theta1) - 116.56505117707799) <= 1e-3,
        abs(math.degrees(rep.theta2) - 153.43494882292202) <= 1e-3,
        abs(math.degrees(rep.interval.lo) - 26.56505117707799) <= 1e-3,
        abs(math.degrees(rep.interval.hi) - 63.43494882292201) <= 1e-3,
        abs(math.degrees(rep.objective_polar.phi) - 56.309932474020215) <= 1e-2,
        abs(rep.objective_polar.r - math.sqrt(13.0)) <= 1e-9 * math.sqrt(13.0),
        elapsed < 1.0,
    ]
    report(1, "reference LP reproduction", all(checks))


def test_c2_oracle_certification(capsys):
    t0 = time.perf_counter()
    code = cli.main(["sensitivity", PAPER, "--check-sweep", "0.01"])
    elapsed = time.perf_counter() - t0
    capsys.readouterr()
    lp = pl.load_lp(PAPER)
    rep = pl.analyze(lp)
    region = pl.enumerate_vertices(lp)
    sweep = pl.stable_interval_by_sweep(
        region, rep.optimal_vertex, math.radians(0.01)
    )
    iv = sweep.estimated_interval
    ok = (
        code == 0
        and circ_close(iv.lo, rep.interval.lo, 0.02 * DEG)
        and circ_close(iv.hi, rep.interval.hi, 0.02 * DEG)
        and elapsed < 5.0
    )
    report(2, "sweep certification at 0.01 degrees", ok)


def test_c3_solver_cross_equivalence():
    rng = rng_for(31337)
    disagreements = 0
    compared = 0
    for _ in range(1000):
        lp = random_bounded_lp(rng)
        s1 = pl.solve_enumeration(lp)
        s2 = pl.solve_simplex(lp)
        if not (s1.unique and s2.unique):
            continue
        compared += 1
        if (
            abs(s1.vertex.point.x1 - s2.vertex.point.x1) > 1e-6
            or abs(s1.vertex.point.x2 - s2.vertex.point.x2) > 1e-6
            or abs(s1.value - s2.value) > 1e-9 * max(1.0, abs(s1.value))
        ):
            disagreements += 1
    report(
        3,
        f"solver equivalence on 1000 LPs ({compared} unique-unique compared)",
        disagreements == 0 and compared >= 500,
    )


def test_c4_distance_form_equivalence():
    rng = rng_for(404)
    checked = 0
    bad = 0
    while checked < 200:
        lp = random_bounded_lp(rng, positive=True)
        sol = pl.solve_enumeration(lp)
        if not sol.unique:
            continue
        region = pl.enumerate_vertices(lp)
        ds = pl.argmax_distance(region, lp.objective)
        if (ds.vertex.point - sol.vertex.point).norm() > 1e-9 * max(
            1.0, sol.vertex.point.norm()
        ):
            bad += 1
        checked += 1
    report(4, "distance argmax equals solver vertex (200 LPs)", bad == 0)


def test_c5_ratio_constancy():
    rng = rng_for(555)
    checked = 0
    bad = 0
    while checked < 1000:
        c = pl.Vec2(float(rng.uniform(-10, 10)), float(rng.uniform(-10, 10)))
        if c.norm() < 0.1:
            continue
        x = pl.Vec2(float(rng.uniform(-100, 100)), float(rng.uniform(-100, 100)))
        side = pl.side_of(x, c)
        if side is pl.HalfPlaneSide.ON:
            continue
        r = pl.value_distance_ratio(x, c)
        want = c.norm() if side is pl.HalfPlaneSide.PLUS else -c.norm()
        if abs(r - want) > 1e-9 * c.norm():
            bad += 1
        checked += 1
    report(5, "value/distance ratio is +-|c| (1000 pairs)", bad == 0)


def test_c6_rotation_conjugation():
    rng = rng_for(666)
    checked = 0
    bad = 0
    while checked < 200:
        lp = random_bounded_lp(rng, mixed_sign=True)
        try:
            rep = pl.analyze(lp)
        except DegenerateOptimum:
            continue
        region = pl.enumerate_vertices(lp)
        i = region.index_of(rep.optimal_vertex)
        n = len(region.vertices)
        nrm = pl.normalize(region, lp.objective)
        rot_cone = pl.stable_angle_interval(
            nrm.region.vertices[i - 1],
            nrm.region.vertices[i],
            nrm.region.vertices[(i + 1) % n],
        )
        conjugated_ok = circ_close(
            rot_cone.lo - nrm.theta0, rep.interval.lo, 1e-9
        ) and circ_close(rot_cone.hi - nrm.theta0, rep.interval.hi, 1e-9)
        rotated_region, c_rot = pl.rotate_problem(region, lp.objective, nrm.theta0)
        values_ok = all(
            abs(lp.objective.dot(a.point) - c_rot.dot(b.point))
            <= 1e-9 * max(1.0, abs(lp.objective.dot(a.point)))
            for a, b in zip(region.vertices, rotated_region.vertices)
        )
        if not (conjugated_ok and values_ok):
            bad += 1
        checked += 1
    report(6, "mixed-sign cone conjugation + value conservation (200 LPs)", bad == 0)


def test_c7_endpoint_ties():
    lp = pl.load_lp(PAPER)
    ok = True
    for obj, pts, value in (
        (pl.Vec2(2.0, 1.0), (pl.Vec2(100.0, 0.0), pl.Vec2(80.0, 40.0)), 200.0),
        (pl.Vec2(1.0, 2.0), (pl.Vec2(80.0, 40.0), pl.Vec2(60.0, 50.0)), 160.0),
    ):
        tied_lp = pl.LinearProgram2D(obj, lp.constraints)
        va, vb = (pl.evaluate(tied_lp, p) for p in pts)
        ok &= abs(va - value) <= 1e-12 and abs(vb - value) <= 1e-12
        ok &= abs(va - vb) <= 1e-12
        try:
            pl.analyze(tied_lp)
            ok = False
        except DegenerateOptimum as exc:
            got = {(round(v.point.x1), round(v.point.x2)) for v in exc.tied_vertices}
            ok &= got == {(int(p.x1), int(p.x2)) for p in pts}
    report(7, "objectives (2,1) and (1,2) tie and raise DegenerateOptimum", ok)


def test_c8_value_shift_directions():
    lp = pl.load_lp(PAPER)
    rep = pl.analyze(lp)
    ok = (
        pl.classify_value_shift(rep, -1.0 * DEG) is pl.ValueShift.INCREASES
        and pl.classify_value_shift(rep, 1.0 * DEG) is pl.ValueShift.DECREASES
        and abs(pl.value_under_rotation(rep, 0.0) - 280.0) <= 1e-9 * 280.0
    )
    report(8, "value shift directions at nu = -1/+1 degrees", ok)


def test_c9_cone_at_every_vertex():
    lp = pl.load_lp(PAPER)
    region = pl.enumerate_vertices(lp)
    n = len(region.vertices)
    ok = True
    for i in range(n):
        analytic = pl.stable_angle_interval(
            region.vertices[i - 1], region.vertices[i], region.vertices[(i + 1) % n]
        )
        sweep = pl.stable_interval_by_sweep(
            region, region.vertices[i], math.radians(0.01)
        )
        est = sweep.estimated_interval
        ok &= circ_close(est.lo, analytic.lo, 0.02 * DEG)
        ok &= circ_close(est.hi, analytic.hi, 0.02 * DEG)
    report(9, "sweep matches the analytic cone at all 5 vertices", ok)
