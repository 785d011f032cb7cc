"""Bifurcation-diagram data for x**2 + c as ``c,x`` CSV records."""

from __future__ import annotations

import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from .oracle import ESCAPE_BOUND

DEFAULT_SAMPLES = 2000
DEFAULT_TRANSIENT = 1000
DEFAULT_KEEP = 200
DEFAULT_X0 = 0.0


@dataclass(frozen=True)
class BifurcationRecord:
    c: float
    x: float


def parameter_grid(c_min: float, c_max: float, samples: int) -> np.ndarray:
    if not c_min < c_max:
        raise ValueError("need c_min < c_max")
    if samples < 2:
        raise ValueError("need at least 2 parameter samples")
    return np.linspace(c_min, c_max, samples)


def _tails(cs: np.ndarray, x0: float, transient: int, keep: int) -> tuple[np.ndarray, np.ndarray]:
    """Iterate every parameter at once; returns (kept samples, diverged mask)."""
    x = np.full(cs.shape, float(x0))
    diverged = np.zeros(cs.shape, dtype=bool)
    kept = np.empty((keep, cs.size))
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(transient):
            x = x * x + cs
            diverged |= ~(np.abs(x) <= ESCAPE_BOUND)
        for k in range(keep):
            x = x * x + cs
            diverged |= ~(np.abs(x) <= ESCAPE_BOUND)
            kept[k] = x
    return kept, diverged


def sweep(
    c_min: float,
    c_max: float,
    samples: int = DEFAULT_SAMPLES,
    transient: int = DEFAULT_TRANSIENT,
    keep: int = DEFAULT_KEEP,
    x0: float = DEFAULT_X0,
    workers: int = 1,
) -> list[BifurcationRecord]:
    """Attractor samples for an ascending grid of ``samples`` parameters.

    Orbits are seeded at ``x0`` (the critical point by default) and any
    parameter whose orbit leaves ``|x| <= 10`` contributes no records.
    The result does not depend on ``workers``.
    """
    if keep < 1 or transient < 0:
        raise ValueError("need keep >= 1 and transient >= 0")
    cs = parameter_grid(c_min, c_max, samples)
    chunks = np.array_split(cs, max(1, min(workers, samples)))
    if len(chunks) == 1:
        results = [_tails(chunks[0], x0, transient, keep)]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            results = list(pool.map(lambda part: _tails(part, x0, transient, keep), chunks))

    records = []
    for part, (kept, diverged) in zip(chunks, results):
        for j, c in enumerate(part):
            if diverged[j]:
                continue
            records.extend(BifurcationRecord(float(c), float(x)) for x in kept[:, j])
    return records


def write_csv(records: Iterable[BifurcationRecord], stream: TextIO) -> None:
    stream.write("c,x\n")
    for rec in records:
        stream.write(f"{rec.c:.12g},{rec.x:.12g}\n")


def to_csv(records: Iterable[BifurcationRecord]) -> str:
    buf = io.StringIO()
    write_csv(records, buf)
    return buf.getvalue()


def read_csv(text: str) -> dict[float, list[float]]:
    """Group ``c,x`` rows by parameter, preserving file order."""
    lines = text.splitlines()
    if not lines or lines[0] != "c,x":
        raise ValueError("missing 'c,x' header")
    groups: dict[float, list[float]] = {}
    for line in lines[1:]:
        c, x = line.split(",")
        groups.setdefault(float(c), []).append(float(x))
    return groups
