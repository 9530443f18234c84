import math

import pytest

import planarlp as pl
from planarlp.errors import (
    CoincidentVertices,
    DegenerateOptimum,
    ReflexVertex,
    RotationOutsideStableCone,
    ZeroObjective,
)
from conftest import (
    REF_CONE_HI,
    REF_CONE_LO,
    REF_PHI,
    REF_R,
    REF_THETA1,
    REF_THETA2,
    circ_close,
    random_bounded_lp,
    region_of_points,
    rng_for,
    square_lp,
)


def corner(p, x0, s):
    return pl.Vertex(pl.Vec2(*p)), pl.Vertex(pl.Vec2(*x0)), pl.Vertex(pl.Vec2(*s))


# --- AngleInterval -----------------------------------------------------------

def test_interval_validation():
    with pytest.raises(ValueError):
        pl.AngleInterval(1.0, 1.0)
    with pytest.raises(ValueError):
        pl.AngleInterval(2.0, 1.0)
    with pytest.raises(ValueError):
        pl.AngleInterval(0.0, math.pi + 0.1)


def test_interval_membership_is_open():
    iv = pl.AngleInterval(0.0, 1.0)
    assert iv.contains(0.5)
    assert not iv.contains(0.0)
    assert not iv.contains(1.0)
    assert iv.contains_circular(0.5 + math.tau)
    assert not iv.contains_circular(1.0 - math.tau)


def test_interval_shift_and_clip():
    iv = pl.AngleInterval(0.2, 1.2)
    assert iv.shifted(1.0).lo == 1.2
    assert iv.clipped(0.5, 2.0) == pl.AngleInterval(0.5, 1.2)
    assert iv.clipped(2.0, 3.0) is None


# --- edge angles -------------------------------------------------------------

def test_edge_angles_reference(ref_report):
    assert abs(ref_report.theta1 - REF_THETA1) < 1e-9
    assert abs(ref_report.theta2 - REF_THETA2) < 1e-9


def test_edge_angles_unit_square_corner():
    t1, t2 = pl.edge_angles(*corner((1, 0), (1, 1), (0, 1)))
    assert abs(t1 - 0.5 * math.pi) < 1e-12
    assert abs(t2 - math.pi) < 1e-12


def test_edge_angles_coincident():
    with pytest.raises(CoincidentVertices):
        pl.edge_angles(*corner((1, 0), (1, 0), (0, 1)))


# --- stable cone of a corner -------------------------------------------------

def test_stable_interval_reference_corner():
    pred, x0, succ = corner((100, 0), (80, 40), (60, 50))
    iv = pl.stable_angle_interval(pred, x0, succ)
    assert abs(iv.lo - REF_CONE_LO) < 1e-12
    assert abs(iv.hi - REF_CONE_HI) < 1e-12


def test_stable_interval_square_corner():
    iv = pl.stable_angle_interval(*corner((1, 0), (1, 1), (0, 1)))
    assert abs(iv.lo - 0.0) < 1e-12
    assert abs(iv.hi - 0.5 * math.pi) < 1e-12


def test_stable_interval_matches_theta_minus_quarter_turn():
    # With both edge angles in (0, pi], the cone endpoints are the edge
    # angles shifted down a quarter turn.
    pred, x0, succ = corner((100, 0), (80, 40), (60, 50))
    iv = pl.stable_angle_interval(pred, x0, succ)
    t1, t2 = pl.edge_angles(pred, x0, succ)
    assert abs(iv.lo - (t1 - 0.5 * math.pi)) < 1e-12
    assert abs(iv.hi - (t2 - 0.5 * math.pi)) < 1e-12


def test_stable_interval_reflex_rejected():
    with pytest.raises(ReflexVertex):
        pl.stable_angle_interval(*corner((0, 1), (1, 1), (1, 0)))
    with pytest.raises(ReflexVertex):  # collinear triple
        pl.stable_angle_interval(*corner((0, 0), (1, 0), (2, 0)))


def test_stable_interval_against_local_grid():
    # Brute-force check: inside the cone x0 beats both neighbors, outside
    # (sampled on the rest of the circle) it loses to one of them.
    rng = rng_for(42)
    for _ in range(20):
        x0 = pl.Vec2(float(rng.uniform(-5, 5)), float(rng.uniform(-5, 5)))
        a1 = float(rng.uniform(-math.pi, math.pi))
        a2 = a1 + float(rng.uniform(0.2, math.pi - 0.2))
        r1 = float(rng.uniform(0.5, 3.0))
        r2 = float(rng.uniform(0.5, 3.0))
        pred = pl.Vertex(x0 + pl.Vec2(r1 * math.cos(a1), r1 * math.sin(a1)))
        succ = pl.Vertex(x0 + pl.Vec2(r2 * math.cos(a2), r2 * math.sin(a2)))
        try:
            iv = pl.stable_angle_interval(pred, pl.Vertex(x0), succ)
        except ReflexVertex:
            continue
        for k in range(720):
            phi = -math.pi + (k + 0.5) * math.tau / 720
            c = pl.Vec2(math.cos(phi), math.sin(phi))
            wins = c.dot(x0) > max(c.dot(pred.point), c.dot(succ.point))
            inside = iv.contains_circular(phi)
            margin = min(
                abs(pl.circular_delta(phi, iv.lo)), abs(pl.circular_delta(phi, iv.hi))
            )
            if margin > 1e-3:  # skip samples right at the boundary
                assert wins == inside


# --- analyze -----------------------------------------------------------------

def test_analyze_reference_report(ref_report):
    r = ref_report
    assert abs(r.optimal_vertex.point.x1 - 80.0) < 1e-9
    assert abs(r.optimal_vertex.point.x2 - 40.0) < 1e-9
    assert abs(r.optimal_value - 280.0) < 1e-9 * 280.0
    assert abs(r.interval.lo - REF_CONE_LO) < 1e-9
    assert abs(r.interval.hi - REF_CONE_HI) < 1e-9
    assert abs(r.objective_polar.r - REF_R) < 1e-12
    assert abs(r.objective_polar.phi - REF_PHI) < 1e-12
    assert r.phi_inside
    assert r.theta0 == 0.0
    assert abs(r.nu_interval.lo - (REF_CONE_LO - REF_PHI)) < 1e-9
    assert abs(r.nu_interval.hi - (REF_CONE_HI - REF_PHI)) < 1e-9
    assert abs(r.endpoint_ties[0].point.x1 - 100.0) < 1e-9
    assert abs(r.endpoint_ties[1].point.x1 - 60.0) < 1e-9


def test_analyze_square():
    rep = pl.analyze(square_lp(pl.Vec2(1.0, 1.0)))
    assert rep.optimal_vertex.point == pl.Vec2(1.0, 1.0)
    assert abs(rep.interval.lo - 0.0) < 1e-9
    assert abs(rep.interval.hi - 0.5 * math.pi) < 1e-9


def test_analyze_zero_objective():
    with pytest.raises(ZeroObjective):
        pl.analyze(square_lp(pl.Vec2(0.0, 0.0)))


@pytest.mark.parametrize("k", [0.5, 3.0, 1000.0])
def test_analyze_scale_invariant(ref_lp, k):
    base = pl.analyze(ref_lp)
    scaled = pl.analyze(
        pl.LinearProgram2D(ref_lp.objective.scaled(k), ref_lp.constraints)
    )
    assert (scaled.optimal_vertex.point - base.optimal_vertex.point).norm() < 1e-9
    assert abs(scaled.interval.lo - base.interval.lo) < 1e-9
    assert abs(scaled.interval.hi - base.interval.hi) < 1e-9


@pytest.mark.parametrize(
    "obj,tie_points,angle_deg",
    [
        ((2.0, 1.0), {(100, 0), (80, 40)}, 26.56505117707799),
        ((1.0, 2.0), {(80, 40), (60, 50)}, 63.43494882292201),
    ],
)
def test_analyze_degenerate_ties(ref_lp, obj, tie_points, angle_deg):
    lp = pl.LinearProgram2D(pl.Vec2(*obj), ref_lp.constraints)
    with pytest.raises(DegenerateOptimum) as ei:
        pl.analyze(lp)
    got = {
        (round(v.point.x1), round(v.point.x2)) for v in ei.value.tied_vertices
    }
    assert got == tie_points
    assert ei.value.stable_angle is not None
    assert abs(math.degrees(ei.value.stable_angle) - angle_deg) < 1e-6


def test_analyze_mixed_sign_matches_direct_cone():
    rng = rng_for(2024)
    checked = 0
    while checked < 40:
        lp = random_bounded_lp(rng, mixed_sign=True)
        try:
            rep = pl.analyze(lp)
        except DegenerateOptimum:
            continue
        region = pl.enumerate_vertices(lp)
        i = region.index_of(rep.optimal_vertex)
        vs = region.vertices
        direct = pl.stable_angle_interval(vs[i - 1], vs[i], vs[(i + 1) % len(vs)])
        assert circ_close(direct.lo, rep.interval.lo, 1e-9)
        assert circ_close(direct.hi, rep.interval.hi, 1e-9)
        assert rep.theta0 != 0.0
        assert rep.phi_inside
        checked += 1


def test_analyze_cone_against_resolving(ref_lp, ref_report):
    # Inside the cone the same vertex must win; outside (within 30 degrees
    # of the endpoints) someone else must win or tie.
    iv = ref_report.interval
    x0 = ref_report.optimal_vertex.point
    for k in range(1, 100):
        phi = iv.lo + iv.width * k / 100.0
        lp = pl.LinearProgram2D(pl.Vec2(math.cos(phi), math.sin(phi)), ref_lp.constraints)
        sol = pl.solve_enumeration(lp)
        assert sol.unique
        assert (sol.vertex.point - x0).norm() < 1e-6
    off = math.radians(30.0)
    margin = 1e-6
    for k in range(1, 50):
        for phi in (iv.lo - off * k / 50.0 - margin, iv.hi + off * k / 50.0 + margin):
            lp = pl.LinearProgram2D(
                pl.Vec2(math.cos(phi), math.sin(phi)), ref_lp.constraints
            )
            sol = pl.solve_enumeration(lp)
            assert (not sol.unique) or (sol.vertex.point - x0).norm() > 1e-6


# --- value under gradient rotation -------------------------------------------

def rotated_value_oracle(report, nu):
    """Independent route: rotate the gradient vector and take a dot product."""
    r = report.objective_polar.r
    phi = report.objective_polar.phi + nu
    g = pl.Vec2(r * math.cos(phi), r * math.sin(phi))
    return g.dot(report.optimal_vertex.point)


def test_value_at_zero_rotation(ref_report):
    v = pl.value_under_rotation(ref_report, 0.0)
    assert abs(v - ref_report.optimal_value) <= 1e-9 * 280.0


@pytest.mark.parametrize(
    "nu_deg,expected",
    [(5.0, 264.9896), (-5.0, 292.8794), (2.0, 274.2455), (-20.0, 317.8372)],
)
def test_value_under_rotation_frozen(ref_report, nu_deg, expected):
    nu = math.radians(nu_deg)
    v = pl.value_under_rotation(ref_report, nu)
    assert abs(v - expected) < 1e-3
    assert abs(v - rotated_value_oracle(ref_report, nu)) <= 1e-9 * max(1.0, abs(v))


def test_value_outside_cone_rejected(ref_report):
    with pytest.raises(RotationOutsideStableCone):
        pl.value_under_rotation(ref_report, math.radians(10.0))
    with pytest.raises(RotationOutsideStableCone):
        pl.value_under_rotation(ref_report, math.radians(-40.0))


def test_value_decreases_with_angular_distance(ref_report):
    # strictly decreasing in |angle(x0) - (phi_f + nu)|
    beta = math.atan2(40.0, 80.0)
    nus = [math.radians(d) for d in (-29.0, -20.0, -10.0, 0.0, 3.0, 7.0)]
    pairs = [
        (abs(beta - (ref_report.objective_polar.phi + nu)),
         pl.value_under_rotation(ref_report, nu))
        for nu in nus
    ]
    pairs.sort()
    for (d1, v1), (d2, v2) in zip(pairs, pairs[1:]):
        assert v1 > v2 or d2 - d1 < 1e-12


def test_classify_value_shift(ref_report):
    assert pl.classify_value_shift(ref_report, math.radians(-1.0)) is pl.ValueShift.INCREASES
    assert pl.classify_value_shift(ref_report, math.radians(1.0)) is pl.ValueShift.DECREASES
    assert pl.classify_value_shift(ref_report, 0.0) is pl.ValueShift.UNCHANGED
