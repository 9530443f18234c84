"""Command-line front end.

    planarlp solve <file.lp>
    planarlp sensitivity <file.lp> [--json] [--radians] [--svg OUT.svg]
                         [--clip-first-quadrant] [--check-sweep STEP_DEG]
                         [--tol EPS]

Exit codes: 0 success, 1 input/validation error, 2 infeasible, 3 unbounded,
4 sweep oracle disagreement, 5 degenerate (tied) optimum.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .errors import (
    DegenerateOptimum,
    Infeasible,
    PlanarLPError,
    Unbounded,
    UnboundedRegion,
)
from .geometry import PolarVector, Vec2, circular_delta
from .lp_io import load_lp
from .lp_model import Vertex
from .oracle import stable_interval_by_sweep
from .sensitivity import AngleInterval, SensitivityReport, analyze
from .solver import enumerate_vertices, solve_enumeration
from .svg import emit_svg

SCHEMA_VERSION = 1

_QUARTER = 0.5 * math.pi


def _fmt_num(x: float) -> str:
    return f"{x:.6g}"


def _fmt_point(p: Vec2) -> str:
    return f"({_fmt_num(p.x1)}, {_fmt_num(p.x2)})"


def _fmt_angle(rad: float, radians: bool) -> str:
    if radians:
        return f"{rad:.6f} rad"
    # Truncate (not round) to 4 decimals, matching the reference outputs.
    deg = math.trunc(math.degrees(rad) * 10000.0) / 10000.0
    return f"{deg:.4f}°"


def clip_to_first_quadrant(interval: AngleInterval) -> AngleInterval | None:
    """Circular intersection of the cone with directions in (0, pi/2)."""
    best = None
    for k in (-1, 0, 1):
        piece = interval.clipped(k * math.tau, k * math.tau + _QUARTER)
        if piece is not None and (best is None or piece.width > best.width):
            best = piece
    return best


@dataclass(frozen=True)
class OracleCheck:
    """Outcome of the --check-sweep comparison (angles in radians)."""

    step: float
    interval: AngleInterval
    max_endpoint_error: float
    agrees: bool


@dataclass(frozen=True)
class ReportDocument:
    """A sensitivity report plus provenance, serializable to JSON and back."""

    report: SensitivityReport
    input_path: str
    tolerance: float
    solver: str
    clip_first_quadrant: bool = False
    oracle_check: OracleCheck | None = None
    schema_version: int = SCHEMA_VERSION

    def to_json_dict(self) -> dict:
        r = self.report
        clipped = (
            clip_to_first_quadrant(r.interval) if self.clip_first_quadrant else None
        )
        oc = None
        if self.oracle_check is not None:
            oc = {
                "step": self.oracle_check.step,
                "interval": _interval_dict(self.oracle_check.interval),
                "max_endpoint_error": self.oracle_check.max_endpoint_error,
                "agrees": self.oracle_check.agrees,
            }
        return {
            "schema_version": self.schema_version,
            "optimal_vertex": _vertex_dict(r.optimal_vertex),
            "optimal_value": r.optimal_value,
            "pred": _vertex_dict(r.pred),
            "succ": _vertex_dict(r.succ),
            "theta1": r.theta1,
            "theta2": r.theta2,
            "interval": _interval_dict(r.interval),
            "objective_polar": {"r": r.objective_polar.r, "phi": r.objective_polar.phi},
            "phi_inside": r.phi_inside,
            "nu_interval": _interval_dict(r.nu_interval),
            "theta0": r.theta0,
            "endpoint_ties": {
                "lo": _vertex_dict(r.endpoint_ties[0]),
                "hi": _vertex_dict(r.endpoint_ties[1]),
            },
            "clip_first_quadrant": self.clip_first_quadrant,
            "clipped_interval": _interval_dict(clipped) if clipped else None,
            "provenance": {
                "input_path": self.input_path,
                "tolerance": self.tolerance,
                "solver": self.solver,
                "oracle_check": oc,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    @classmethod
    def from_json_dict(cls, d: dict) -> "ReportDocument":
        prov = d["provenance"]
        oc = None
        if prov["oracle_check"] is not None:
            o = prov["oracle_check"]
            oc = OracleCheck(
                o["step"],
                _interval_from(o["interval"]),
                o["max_endpoint_error"],
                o["agrees"],
            )
        report = SensitivityReport(
            optimal_vertex=_vertex_from(d["optimal_vertex"]),
            optimal_value=d["optimal_value"],
            pred=_vertex_from(d["pred"]),
            succ=_vertex_from(d["succ"]),
            theta1=d["theta1"],
            theta2=d["theta2"],
            interval=_interval_from(d["interval"]),
            objective_polar=PolarVector(
                d["objective_polar"]["r"], d["objective_polar"]["phi"]
            ),
            phi_inside=d["phi_inside"],
            nu_interval=_interval_from(d["nu_interval"]),
            theta0=d["theta0"],
            endpoint_ties=(
                _vertex_from(d["endpoint_ties"]["lo"]),
                _vertex_from(d["endpoint_ties"]["hi"]),
            ),
        )
        return cls(
            report=report,
            input_path=prov["input_path"],
            tolerance=prov["tolerance"],
            solver=prov["solver"],
            clip_first_quadrant=d["clip_first_quadrant"],
            oracle_check=oc,
            schema_version=d["schema_version"],
        )

    @classmethod
    def from_json(cls, s: str) -> "ReportDocument":
        return cls.from_json_dict(json.loads(s))


def _vertex_dict(v: Vertex) -> dict:
    return {
        "point": [v.point.x1, v.point.x2],
        "active_rows": sorted(v.active_rows),
    }


def _vertex_from(d: dict) -> Vertex:
    return Vertex(Vec2(*d["point"]), frozenset(d["active_rows"]))


def _interval_dict(iv: AngleInterval) -> dict:
    return {"lo": iv.lo, "hi": iv.hi}


def _interval_from(d: dict) -> AngleInterval:
    return AngleInterval(d["lo"], d["hi"])


def render_text(doc: ReportDocument, radians: bool = False) -> str:
    r = doc.report

    def ang(x: float) -> str:
        return _fmt_angle(x, radians)

    lines = [
        f"input: {doc.input_path}",
        f"optimal vertex: {_fmt_point(r.optimal_vertex.point)}",
        f"optimal value: {_fmt_num(r.optimal_value)}",
        f"active rows: {sorted(r.optimal_vertex.active_rows)}",
        f"neighbors: pred {_fmt_point(r.pred.point)}, succ {_fmt_point(r.succ.point)}",
        f"edge angles: theta1 = {ang(r.theta1)}, theta2 = {ang(r.theta2)}",
        f"stable cone (open): ({ang(r.interval.lo)}, {ang(r.interval.hi)})",
        f"objective polar: r = {r.objective_polar.r:.4f}, "
        f"phi = {ang(r.objective_polar.phi)}",
        f"rotation margin nu (open): ({ang(r.nu_interval.lo)}, {ang(r.nu_interval.hi)})",
        f"normalization rotation theta0: {ang(r.theta0)}",
        f"endpoint ties: lo -> {_fmt_point(r.endpoint_ties[0].point)}, "
        f"hi -> {_fmt_point(r.endpoint_ties[1].point)}",
    ]
    if doc.clip_first_quadrant:
        clipped = clip_to_first_quadrant(r.interval)
        if clipped is None:
            lines.append("clipped to first quadrant: (empty)")
        else:
            lines.append(
                f"clipped to first quadrant: ({ang(clipped.lo)}, {ang(clipped.hi)})"
            )
    if doc.oracle_check is not None:
        oc = doc.oracle_check
        lines.append(
            f"sweep check: step {ang(oc.step)}, interval "
            f"({ang(oc.interval.lo)}, {ang(oc.interval.hi)}), "
            f"max endpoint error {ang(oc.max_endpoint_error)}, "
            f"{'agree' if oc.agrees else 'DISAGREE'}"
        )
    return "\n".join(lines)


def run_solve(path: str, tol: float) -> int:
    lp = load_lp(path)
    sol = solve_enumeration(lp, tol=tol)
    print(f"x* = {_fmt_point(sol.vertex.point)}, value = {_fmt_num(sol.value)}")
    print(f"active rows: {sorted(sol.vertex.active_rows)}")
    if not sol.unique:
        print("note: the optimum is not unique (tie within tolerance)")
    return 0


def run_sensitivity(
    path: str,
    *,
    json_mode: bool = False,
    radians: bool = False,
    svg_path: str | None = None,
    clip: bool = False,
    check_sweep_deg: float | None = None,
    tol: float = 1e-9,
) -> int:
    lp = load_lp(path)
    report = analyze(lp, tol=tol)

    oracle_check = None
    region = None
    if check_sweep_deg is not None:
        region = enumerate_vertices(lp, tol=tol)
        step = math.radians(check_sweep_deg)
        sweep = stable_interval_by_sweep(region, report.optimal_vertex, step)
        est = sweep.estimated_interval
        err = max(
            abs(circular_delta(est.lo, report.interval.lo)),
            abs(circular_delta(est.hi, report.interval.hi)),
        )
        oracle_check = OracleCheck(step, est, err, err <= 2.0 * step)

    doc = ReportDocument(
        report=report,
        input_path=str(path),
        tolerance=tol,
        solver="enumeration",
        clip_first_quadrant=clip,
        oracle_check=oracle_check,
    )
    if json_mode:
        print(doc.to_json())
    else:
        print(render_text(doc, radians))

    if svg_path is not None:
        if region is None:
            region = enumerate_vertices(lp, tol=tol)
        emit_svg(region, report, svg_path)

    if oracle_check is not None and not oracle_check.agrees:
        print(
            "error: sweep oracle disagrees with the analytic interval",
            file=sys.stderr,
        )
        return 4
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planarlp",
        description="Planar LP solving and gradient-cone sensitivity analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="maximize the objective over the region")
    ps.add_argument("file", help="LP text file")
    ps.add_argument("--tol", type=float, default=1e-9, metavar="EPS",
                    help="feasibility tolerance (default 1e-9)")

    pn = sub.add_parser(
        "sensitivity", help="stable gradient cone of the optimal vertex"
    )
    pn.add_argument("file", help="LP text file")
    pn.add_argument("--json", action="store_true",
                    help="emit a JSON document instead of text")
    pn.add_argument("--radians", action="store_true",
                    help="print angles in radians instead of degrees")
    pn.add_argument("--svg", metavar="PATH",
                    help="write an SVG rendering of region and cone")
    pn.add_argument("--clip-first-quadrant", action="store_true",
                    help="also report the cone clipped to (0°, 90°)")
    pn.add_argument("--check-sweep", type=float, metavar="STEP",
                    help="certify the cone with a sweep at STEP degrees")
    pn.add_argument("--tol", type=float, default=1e-9, metavar="EPS",
                    help="feasibility tolerance (default 1e-9)")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            return run_solve(args.file, args.tol)
        return run_sensitivity(
            args.file,
            json_mode=args.json,
            radians=args.radians,
            svg_path=args.svg,
            clip=args.clip_first_quadrant,
            check_sweep_deg=args.check_sweep,
            tol=args.tol,
        )
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 2
    except (Unbounded, UnboundedRegion) as exc:
        print(f"unbounded: {exc}", file=sys.stderr)
        return 3
    except DegenerateOptimum as exc:
        print(f"degenerate optimum: {exc}", file=sys.stderr)
        for v in exc.tied_vertices:
            print(f"  tied vertex: {_fmt_point(v.point)}", file=sys.stderr)
        if exc.stable_angle is not None:
            print(
                f"  stable only at phi = {_fmt_angle(exc.stable_angle, False)}",
                file=sys.stderr,
            )
        return 5
    except (PlanarLPError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
