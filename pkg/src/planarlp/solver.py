"""Two independent solvers for the planar LP, plus region construction.

solve_enumeration intersects constraint lines pairwise, keeps the feasible
intersections and picks the best vertex.  solve_simplex runs a classic
two-phase tableau simplex with Bland's rule.  They share no code on the
solve path, which is what makes cross-checking one against the other
meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegenerateRegion,
    Infeasible,
    NonFiniteEntry,
    Unbounded,
    UnboundedRegion,
    ZeroObjective,
)
from .geometry import Vec2
from .lp_model import (
    MERGE_TOL,
    X1_NONNEG,
    X2_NONNEG,
    ConstraintRow,
    FeasibleRegion,
    LinearProgram2D,
    Vertex,
    evaluate,
    is_feasible,
    validate,
)

#: Relative tolerance for "two vertices have the same objective value".
VALUE_TIE_REL = 1e-9

_DET_TOL = 1e-12
_RECESSION_TOL = 1e-12


class Recession(Enum):
    BOUNDED = "bounded"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Solution:
    vertex: Vertex
    value: float
    unique: bool


def _indexed_rows(lp: LinearProgram2D):
    """Constraint rows plus the synthetic nonnegativity rows."""
    rows = list(enumerate(lp.constraints))
    rows.append((X1_NONNEG, ConstraintRow(-1.0, 0.0, 0.0)))
    rows.append((X2_NONNEG, ConstraintRow(0.0, -1.0, 0.0)))
    return rows


def active_rows_at(lp: LinearProgram2D, p: Vec2, tol: float = 1e-9) -> frozenset[int]:
    """Indices of all rows (synthetic included) tight at p."""
    out = set()
    for idx, row in _indexed_rows(lp):
        if abs(row.residual(p)) <= tol * row.scale():
            out.add(idx)
    return frozenset(out)


def check_recession(lp: LinearProgram2D) -> Recession:
    """Decide whether the region admits a nonzero recession direction.

    The recession cone is {d >= 0 : A d <= 0}.  Its intersection with the
    unit quarter circle is a single arc, so it is nonempty iff one of the
    arc endpoint candidates (the axes, or a constraint boundary direction
    gamma_i +- pi/2 clipped to the quarter) satisfies every row.
    """
    validate(lp)
    candidates = {0.0, 0.5 * math.pi}
    for row in lp.constraints:
        gamma = math.atan2(row.a2, row.a1)
        for e in (gamma + 0.5 * math.pi, gamma - 0.5 * math.pi):
            e %= math.tau
            if -1e-12 <= e <= 0.5 * math.pi + 1e-12:
                candidates.add(min(max(e, 0.0), 0.5 * math.pi))
    for t in sorted(candidates):
        d1, d2 = math.cos(t), math.sin(t)
        if all(
            row.a1 * d1 + row.a2 * d2 <= _RECESSION_TOL * math.hypot(row.a1, row.a2)
            for row in lp.constraints
        ):
            return Recession.UNBOUNDED
    return Recession.BOUNDED


def enumerate_vertices(lp: LinearProgram2D, *, tol: float = 1e-9) -> FeasibleRegion:
    """Build the feasible polygon by pairwise line intersection.

    Raises Infeasible when no intersection is feasible, UnboundedRegion when
    the recession cone is nonzero, and DegenerateRegion when fewer than
    three distinct vertices survive deduplication.
    """
    validate(lp)
    rows = _indexed_rows(lp)
    candidates: list[Vec2] = []
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            _, ri = rows[a]
            _, rj = rows[b]
            det = ri.a1 * rj.a2 - ri.a2 * rj.a1
            scale = math.hypot(ri.a1, ri.a2) * math.hypot(rj.a1, rj.a2)
            if abs(det) <= _DET_TOL * scale:
                continue
            x1 = (ri.b * rj.a2 - rj.b * ri.a2) / det
            x2 = (ri.a1 * rj.b - rj.a1 * ri.b) / det
            try:
                p = Vec2(x1, x2)
            except NonFiniteEntry:
                continue
            if is_feasible(lp, p, tol):
                candidates.append(p)
    if not candidates:
        raise Infeasible("no feasible intersection of constraint boundaries")
    if check_recession(lp) is Recession.UNBOUNDED:
        raise UnboundedRegion("the feasible region has a recession direction")

    # Deduplicate: greedy clustering at the merge tolerance, cluster mean as
    # the representative point.
    clusters: list[list[Vec2]] = []
    for p in candidates:
        for cl in clusters:
            if (p - cl[0]).norm() <= MERGE_TOL:
                cl.append(p)
                break
        else:
            clusters.append([p])
    points = [
        Vec2(sum(q.x1 for q in cl) / len(cl), sum(q.x2 for q in cl) / len(cl))
        for cl in clusters
    ]
    if len(points) < 3:
        raise DegenerateRegion(
            f"feasible set has only {len(points)} distinct corner(s)"
        )

    cx = sum(p.x1 for p in points) / len(points)
    cy = sum(p.x2 for p in points) / len(points)
    points.sort(key=lambda p: math.atan2(p.x2 - cy, p.x1 - cx))
    return FeasibleRegion(
        tuple(Vertex(p, active_rows_at(lp, p, tol)) for p in points)
    )


def solve_enumeration(lp: LinearProgram2D, *, tol: float = 1e-9) -> Solution:
    """Maximize by brute force over the region's vertices."""
    if lp.objective.is_zero():
        raise ZeroObjective("objective is (0, 0)")
    region = enumerate_vertices(lp, tol=tol)
    values = [evaluate(lp, v.point) for v in region.vertices]
    best = 0
    for i in range(1, len(values)):
        if values[i] > values[best]:
            best = i
    thr = VALUE_TIE_REL * max(1.0, abs(values[best]))
    unique = all(
        values[best] - values[i] > thr for i in range(len(values)) if i != best
    )
    return Solution(region.vertices[best], values[best], unique)


def adjacent_vertices(region: FeasibleRegion, v) -> tuple[Vertex, Vertex]:
    """Counterclockwise predecessor and successor of v in the cycle."""
    i = region.index_of(v)
    n = len(region.vertices)
    return region.vertices[i - 1], region.vertices[(i + 1) % n]


# --- two-phase simplex -------------------------------------------------------

_PIV_TOL = 1e-10
_MAX_ITERS = 1000


def _reduced_costs(T, basis, cost):
    z = cost.copy()
    for r, bv in enumerate(basis):
        if cost[bv] != 0.0:
            z -= cost[bv] * T[r, :-1]
    return z


def _pivot(T, zrow, basis, r, j):
    T[r] /= T[r, j]
    for i in range(T.shape[0]):
        if i != r and T[i, j] != 0.0:
            T[i] -= T[i, j] * T[r]
    if zrow[j] != 0.0:
        zrow -= zrow[j] * T[r, :-1]
    basis[r] = j


def _choose_leaving(T, basis, j):
    """Minimum-ratio row for entering column j; Bland tie-break on the
    basic variable index.  Returns -1 when the column is unbounded."""
    best_r, best_ratio = -1, math.inf
    for r in range(T.shape[0]):
        if T[r, j] > _PIV_TOL:
            ratio = T[r, -1] / T[r, j]
            if ratio < best_ratio - 1e-12 or (
                abs(ratio - best_ratio) <= 1e-12
                and (best_r == -1 or basis[r] < basis[best_r])
            ):
                best_r, best_ratio = r, ratio
    return best_r


def _run_simplex(T, zrow, basis):
    """Maximize until no reduced cost is positive.  Bland's rule: smallest
    eligible entering index, so the method cannot cycle."""
    for _ in range(_MAX_ITERS):
        enter = -1
        for j in range(len(zrow)):
            if zrow[j] > _PIV_TOL:
                enter = j
                break
        if enter == -1:
            return
        leave = _choose_leaving(T, basis, enter)
        if leave == -1:
            raise Unbounded("objective is unbounded over the region")
        _pivot(T, zrow, basis, leave, enter)
    raise RuntimeError("simplex failed to terminate")


def solve_simplex(lp: LinearProgram2D, *, tol: float = 1e-9) -> Solution:
    """Two-phase tableau simplex on the slack form of the program.

    Rows with negative right-hand side are negated and given an artificial
    variable; phase one drives the artificials out, phase two maximizes the
    real objective.  Raises Infeasible or Unbounded accordingly.
    """
    validate(lp)
    if lp.objective.is_zero():
        raise ZeroObjective("objective is (0, 0)")
    m = len(lp.constraints)
    A = np.array([[r.a1, r.a2] for r in lp.constraints], dtype=float)
    b = np.array([r.b for r in lp.constraints], dtype=float)
    c = np.array([lp.objective.x1, lp.objective.x2], dtype=float)

    neg = b < 0.0
    n_art = int(neg.sum())
    S = np.eye(m)
    A1 = A.copy()
    b1 = b.copy()
    A1[neg] *= -1.0
    b1[neg] *= -1.0
    S[neg] *= -1.0

    art = np.zeros((m, n_art))
    basis: list[int] = []
    k = 0
    for i in range(m):
        if neg[i]:
            art[i, k] = 1.0
            basis.append(2 + m + k)
            k += 1
        else:
            basis.append(2 + i)
    T = np.hstack([A1, S, art, b1[:, None]])

    if n_art:
        cost1 = np.zeros(2 + m + n_art)
        cost1[2 + m :] = -1.0  # maximize -(sum of artificials)
        zrow = _reduced_costs(T, basis, cost1)
        _run_simplex(T, zrow, basis)
        art_sum = sum(T[r, -1] for r in range(m) if basis[r] >= 2 + m)
        if art_sum > 1e-8 * max(1.0, float(np.abs(b).max())):
            raise Infeasible("phase one ended with positive artificial mass")
        # Drive surviving (zero-valued) artificials out of the basis.
        drop: list[int] = []
        for r in range(m):
            if basis[r] >= 2 + m:
                for j in range(2 + m):
                    if abs(T[r, j]) > _PIV_TOL:
                        dummy = np.zeros(T.shape[1] - 1)
                        _pivot(T, dummy, basis, r, j)
                        break
                else:
                    drop.append(r)  # redundant row
        if drop:
            keep = [r for r in range(m) if r not in drop]
            T = T[keep]
            basis = [basis[r] for r in keep]
        T = np.hstack([T[:, : 2 + m], T[:, -1:]])

    cost2 = np.zeros(2 + m)
    cost2[:2] = c
    zrow = _reduced_costs(T, basis, cost2)
    _run_simplex(T, zrow, basis)

    x = np.zeros(2 + m)
    for r, bv in enumerate(basis):
        x[bv] = T[r, -1]
    point = Vec2(float(x[0]), float(x[1]))
    value = float(c @ x[:2])

    # Alternative optima: a nonbasic column with (numerically) zero reduced
    # cost can be pivoted in; if that lands on a different point with the
    # same value, the optimum is not unique.  Probe on copies.
    unique = True
    val_thr = VALUE_TIE_REL * max(1.0, abs(value))
    for j in range(2 + m):
        if j in basis or abs(zrow[j]) > 1e-7:
            continue
        T2 = T.copy()
        basis2 = list(basis)
        leave = _choose_leaving(T2, basis2, j)
        if leave == -1:
            continue  # equal-value ray, no second vertex
        dummy = np.zeros(T2.shape[1] - 1)
        _pivot(T2, dummy, basis2, leave, j)
        x2 = np.zeros(2 + m)
        for r, bv in enumerate(basis2):
            x2[bv] = T2[r, -1]
        other = Vec2(float(x2[0]), float(x2[1]))
        if (other - point).norm() > MERGE_TOL and abs(
            float(c @ x2[:2]) - value
        ) <= val_thr:
            unique = False
            break

    return Solution(Vertex(point, active_rows_at(lp, point, tol)), value, unique)
