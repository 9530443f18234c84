"""Data model for two-variable linear programs.

A program is  max  c . x  subject to  A x <= b  and  x >= 0.  The
nonnegativity bounds are implicit in the type; solvers materialize them as
synthetic rows with the negative indices below so that vertices on the axes
still carry two active constraints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    EmptyConstraintList,
    NonFiniteEntry,
    VertexNotInRegion,
    ZeroRow,
)
from .geometry import Vec2, cross

# Synthetic row indices for the implicit bounds x1 >= 0 and x2 >= 0.
X1_NONNEG = -1
X2_NONNEG = -2

#: Two candidate vertices closer than this are treated as one.
MERGE_TOL = 1e-7

#: Default feasibility tolerance (scaled per row).
FEAS_TOL = 1e-9


@dataclass(frozen=True)
class ConstraintRow:
    """One half-plane constraint a1*x1 + a2*x2 <= b."""

    a1: float
    a2: float
    b: float

    def scale(self) -> float:
        return max(1.0, abs(self.a1), abs(self.a2), abs(self.b))

    def residual(self, x: Vec2) -> float:
        """a . x - b; nonpositive means x satisfies the row."""
        return self.a1 * x.x1 + self.a2 * x.x2 - self.b


@dataclass(frozen=True)
class LinearProgram2D:
    objective: Vec2
    constraints: tuple[ConstraintRow, ...]

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))


@dataclass(frozen=True)
class Vertex:
    """A corner of the feasible region.

    active_rows holds the indices of the constraints tight at the point
    (0-based; X1_NONNEG / X2_NONNEG for the implicit bounds).  Degenerate
    vertices simply carry three or more indices.
    """

    point: Vec2
    active_rows: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "active_rows", frozenset(self.active_rows))


@dataclass(frozen=True)
class FeasibleRegion:
    """A bounded feasible polygon as a counterclockwise cycle of vertices."""

    vertices: tuple[Vertex, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        n = len(vs)
        if n < 3:
            raise ValueError(f"a region needs at least 3 vertices, got {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if (vs[i].point - vs[j].point).norm() <= MERGE_TOL:
                    raise ValueError(
                        f"vertices {i} and {j} coincide within the merge tolerance"
                    )
        for i in range(n):
            e1 = vs[(i + 1) % n].point - vs[i].point
            e2 = vs[(i + 2) % n].point - vs[(i + 1) % n].point
            scale = e1.norm() * e2.norm()
            if cross(e1, e2) <= -1e-9 * scale:
                raise ValueError(
                    f"vertex cycle is not convex counterclockwise at index {(i + 1) % n}"
                )

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def points(self) -> list[Vec2]:
        return [v.point for v in self.vertices]

    def index_of(self, v, tol: float = MERGE_TOL) -> int:
        """Index of the vertex matching v (a Vertex or bare Vec2)."""
        p = v.point if isinstance(v, Vertex) else v
        best, best_d = -1, math.inf
        for i, w in enumerate(self.vertices):
            d = (w.point - p).norm()
            if d < best_d:
                best, best_d = i, d
        if best_d > tol:
            raise VertexNotInRegion(f"({p.x1}, {p.x2}) matches no vertex")
        return best

    def same_polygon(self, other: "FeasibleRegion", tol: float = MERGE_TOL) -> bool:
        """True if other is the same vertex cycle up to a cyclic shift."""
        n = len(self.vertices)
        if n != len(other.vertices):
            return False
        mine = self.points()
        theirs = other.points()
        for shift in range(n):
            if all(
                (mine[i] - theirs[(i + shift) % n]).norm() <= tol for i in range(n)
            ):
                return True
        return False


def validate(lp: LinearProgram2D) -> None:
    """Raise if the program's data is structurally unusable.

    Checks: at least one row, every coefficient finite, no all-zero rows.
    A zero objective is legal here; solve entry points reject it separately.
    """
    if len(lp.constraints) == 0:
        raise EmptyConstraintList("the program has no constraint rows")
    for i, row in enumerate(lp.constraints):
        for val in (row.a1, row.a2, row.b):
            if not math.isfinite(val):
                raise NonFiniteEntry(f"row {i} contains {val}")
        if row.a1 == 0.0 and row.a2 == 0.0:
            raise ZeroRow(f"row {i} has a zero coefficient vector")


def evaluate(lp: LinearProgram2D, x: Vec2) -> float:
    """Objective value c . x."""
    return lp.objective.dot(x)


def is_feasible(lp: LinearProgram2D, x: Vec2, tol: float = FEAS_TOL) -> bool:
    """Row-wise scaled feasibility test, including the implicit x >= 0."""
    if x.x1 < -tol or x.x2 < -tol:
        return False
    for row in lp.constraints:
        if row.residual(x) > tol * row.scale():
            return False
    return True
