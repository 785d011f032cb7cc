"""Whole-parameter analysis: regime, fixed points, cycles and logistic data."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Optional

from .algebra import (
    EXISTENCE_THRESHOLD,
    cubic_discriminant_general,
    cycles_for,
    symmetric_triple,
    cycle_cubic,
)
from .logistic import logistic_stable_window, r_of_c
from .quadmap import fixed_points
from .stability import c_tilde, classify

SCHEMA_VERSION = 1
REGIME_B_TOL = 1e-12

REGIME_TEXT = {
    "A": "no 3-cycles",
    "B": "exactly one 3-cycle (non-hyperbolic, unstable)",
    "C": "two 3-cycles, one asymptotically stable",
    "D": "two 3-cycles, both unstable",
}


def regime(c: float) -> str:
    """Regime letter: A (c > -7/4), B (c = -7/4), C ([c̃, -7/4)), D (c < c̃)."""
    if abs(c - EXISTENCE_THRESHOLD) <= REGIME_B_TOL:
        return "B"
    if c > EXISTENCE_THRESHOLD:
        return "A"
    if c >= c_tilde().value:
        return "C"
    return "D"


@dataclass
class CycleEntry:
    branch: str
    s1: float
    s2: float
    s3: float
    cubic: list[float]
    roots: list[float]
    multiplier: float
    stability: str
    discriminant: float
    diagnostics: Optional[dict[str, Any]] = None


@dataclass
class LogisticEntry:
    r: list[float]
    stable_windows: dict[str, list[float]]


@dataclass
class AnalysisReport:
    c: float
    regime: str
    fixed_points: Optional[list[float]]
    cycles: list[CycleEntry] = field(default_factory=list)
    logistic: Optional[LogisticEntry] = None
    schema: int = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        return {"schema": d.pop("schema"), **d}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "AnalysisReport":
        if d.get("schema") != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        logistic = d.get("logistic")
        return cls(
            c=d["c"],
            regime=d["regime"],
            fixed_points=d["fixed_points"],
            cycles=[CycleEntry(**entry) for entry in d["cycles"]],
            logistic=LogisticEntry(**logistic) if logistic is not None else None,
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"c = {self.c!r}", f"regime {self.regime}: {REGIME_TEXT[self.regime]}"]
        if self.fixed_points is None:
            lines.append("fixed points: none (c > 1/4)")
        else:
            lines.append("fixed points: p1 = {:.12g}, p2 = {:.12g}".format(*self.fixed_points))
        for entry in self.cycles:
            lines.append(f"cycle [{entry.branch}]")
            lines.append("  s1, s2, s3   = {:.12g}, {:.12g}, {:.12g}".format(entry.s1, entry.s2, entry.s3))
            lines.append("  cubic        = x^3 + ({1:.12g})x^2 + ({2:.12g})x + ({3:.12g})".format(*entry.cubic))
            lines.append("  components   = {:.12g}, {:.12g}, {:.12g}".format(*entry.roots))
            lines.append(f"  discriminant = {entry.discriminant:.12g}")
            lines.append(f"  multiplier   = {entry.multiplier:.12g}")
            lines.append(f"  stability    = {entry.stability}")
            if entry.diagnostics:
                values = ", ".join(f"{v:.6g}" for v in entry.diagnostics["values"])
                lines.append(f"  {entry.diagnostics['kind']}: {values}")
        if self.logistic is not None:
            lines.append("logistic r = {:.12g} or {:.12g}".format(*self.logistic.r))
            for name, (lo, hi) in self.logistic.stable_windows.items():
                lines.append(f"  stable 3-cycle window ({name}): ({lo:.9g}, {hi:.9g})")
        return "\n".join(lines) + "\n"


def analyze(c: float) -> AnalysisReport:
    fps = fixed_points(c)
    cycles = []
    for cycle in cycles_for(c):
        triple = symmetric_triple(c, cycle.branch)
        cubic = cycle_cubic(c, cycle.branch)
        rep = classify(c, cycle.branch, cycle)
        diagnostics = None
        if rep.diagnostics is not None:
            diagnostics = {"kind": rep.diagnostic_kind, "values": list(rep.diagnostics)}
        cycles.append(
            CycleEntry(
                branch=cycle.branch.value,
                s1=triple.s1,
                s2=triple.s2,
                s3=triple.s3,
                cubic=list(cubic.coefficients()),
                roots=list(cycle.components),
                multiplier=rep.multiplier,
                stability=rep.stability.value,
                discriminant=cubic_discriminant_general(cubic),
                diagnostics=diagnostics,
            )
        )
    logistic = None
    rs = r_of_c(c)
    if rs is not None:
        window = logistic_stable_window()
        logistic = LogisticEntry(
            r=list(rs),
            stable_windows={"lower": list(window.lower), "upper": list(window.upper)},
        )
    return AnalysisReport(
        c=c,
        regime=regime(c),
        fixed_points=list(fps.as_tuple()) if fps is not None else None,
        cycles=cycles,
        logistic=logistic,
    )
