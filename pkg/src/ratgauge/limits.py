"""Direct systems of graded vector spaces and their (truncated) colimits.

An inverse tower ``X_0 <- X_1 <- ... <- X_K`` of complexes gives a direct
system on cohomology.  Only finitely many stages are ever available, so the
colimit dimension in each degree is *estimated*: the rank of the composite
from every stage into the last one is tracked, and a degree is declared
stable only when that sequence and the stage dimensions have been flat over a
window of trailing stages.  Everything else is reported as NOT_STABILIZED
with a lower bound.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .errors import InputError
from .graded import UNBOUNDED, GradedDims
from .linalg import Matrix, rank
from .simplicial import (
    SimplicialComplex, SimplicialMap, _read_json, betti, cochain_complex,
    induced_cohomology_map, load_complex, load_map,
)

__all__ = [
    "DirectSystem",
    "Status",
    "DegreeColimit",
    "ColimitReport",
    "system_from_maps",
    "stable_ranks",
    "colimit_dims",
    "load_system",
    "DEFAULT_WINDOW",
]

DEFAULT_WINDOW = 2


class Status(str, enum.Enum):
    STABLE = "STABLE"
    NOT_STABILIZED = "NOT_STABILIZED"


@dataclass(frozen=True)
class DirectSystem:
    """Stages and, per consecutive pair and degree, the map stage j -> j+1."""

    stages: tuple[GradedDims, ...]
    transitions: tuple[Mapping[int, Matrix], ...]

    def __post_init__(self):
        if not self.stages:
            raise InputError("a direct system needs at least one stage")
        if len(self.transitions) != len(self.stages) - 1:
            raise InputError(
                f"{len(self.stages)} stages need {len(self.stages) - 1} transitions, "
                f"got {len(self.transitions)}"
            )
        for j, stage in enumerate(self.stages):
            if not stage.is_finite():
                raise InputError(f"stage {j} has an unbounded dimension")
        for j, tr in enumerate(self.transitions):
            for deg in set(tr) | set(self.stages[j]) | set(self.stages[j + 1]):
                m = self.transition(j, deg)
                want = (self.stages[j + 1][deg], self.stages[j][deg])
                if m.shape != want:
                    raise InputError(
                        f"transition {j} in degree {deg} has shape {m.shape}, expected {want}"
                    )

    def transition(self, j: int, degree: int) -> Matrix:
        m = self.transitions[j].get(degree)
        if m is None:
            return Matrix.zeros(self.stages[j + 1][degree], self.stages[j][degree])
        return m

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({d for s in self.stages for d in s}))

    def composite(self, start: int, degree: int, stop: int | None = None) -> Matrix:
        """Map from stage ``start`` to stage ``stop`` (default: the last)."""
        stop = len(self.stages) - 1 if stop is None else stop
        m = Matrix.identity(self.stages[start][degree])
        for j in range(start, stop):
            m = self.transition(j, degree) @ m
        return m


def system_from_maps(complexes: Sequence[SimplicialComplex],
                     maps: Sequence[SimplicialMap]) -> DirectSystem:
    """Direct system on cohomology of an inverse tower.

    ``maps[j]`` must go from ``complexes[j+1]`` to ``complexes[j]``.
    """
    if not complexes:
        raise InputError("a tower needs at least one complex")
    if len(maps) != len(complexes) - 1:
        raise InputError(f"{len(complexes)} complexes need {len(complexes) - 1} bonding maps")
    chains = [cochain_complex(k) for k in complexes]
    stages = tuple(betti(k, cc) for k, cc in zip(complexes, chains))
    transitions = []
    for j, f in enumerate(maps):
        if f.source != complexes[j + 1] or f.target != complexes[j]:
            raise InputError(f"bonding map {j} must go from complex {j + 1} to complex {j}")
        degs = set(stages[j]) | set(stages[j + 1])
        transitions.append({
            d: induced_cohomology_map(f, d, chains[j + 1], chains[j]) for d in sorted(degs)
        })
    return DirectSystem(stages, tuple(transitions))


def stable_ranks(s: DirectSystem, degree: int) -> tuple[int, ...]:
    """Rank of the composite from each stage into the final one."""
    last = len(s.stages) - 1
    ranks = [0] * (last + 1)
    ranks[last] = s.stages[last][degree]
    # Compose backwards so each partial product is reused.
    acc = Matrix.identity(s.stages[last][degree])
    for j in range(last - 1, -1, -1):
        acc = acc @ s.transition(j, degree)
        ranks[j] = rank(acc)
    return tuple(ranks)


@dataclass(frozen=True)
class DegreeColimit:
    status: Status
    dimension: int
    rank_sequence: tuple[int, ...]

    @property
    def stable(self) -> bool:
        return self.status is Status.STABLE


@dataclass(frozen=True)
class ColimitReport:
    """Per-degree colimit estimate.  ``dimension`` is a lower bound when not stable."""

    degrees: Mapping[int, DegreeColimit]
    window: int

    def cohomology(self) -> GradedDims:
        """Colimit dimensions, with UNBOUNDED marking unsettled degrees."""
        return GradedDims({d: (c.dimension if c.stable else UNBOUNDED) for d, c in self.degrees.items()})

    def lower_bounds(self) -> GradedDims:
        return GradedDims({d: c.dimension for d, c in self.degrees.items()})

    def unstable_degrees(self) -> tuple[int, ...]:
        return tuple(d for d, c in sorted(self.degrees.items()) if not c.stable)

    def to_json(self) -> dict:
        return {
            "window": self.window,
            "degrees": {
                str(d): {"status": c.status.value, "dimension": c.dimension,
                         "rank_sequence": list(c.rank_sequence)}
                for d, c in sorted(self.degrees.items())
            },
        }


def colimit_dims(s: DirectSystem, stability_window: int = DEFAULT_WINDOW) -> ColimitReport:
    if stability_window < 1:
        raise InputError("stability window must be at least 1")
    if stability_window > len(s.stages):
        raise InputError(
            f"stability window {stability_window} exceeds the {len(s.stages)} available stages"
        )
    out = {}
    for d in s.degrees():
        seq = stable_ranks(s, d)
        tail = seq[-stability_window:]
        dims = [st[d] for st in s.stages[-stability_window:]]
        if len(set(tail)) == 1 and len(set(dims)) == 1:
            out[d] = DegreeColimit(Status.STABLE, tail[0], seq)
        else:
            out[d] = DegreeColimit(Status.NOT_STABILIZED, max(seq), seq)
    return ColimitReport(out, stability_window)


# -- file formats ---------------------------------------------------------------

def _system_from_matrix_json(data: dict, where: str) -> DirectSystem:
    stages_raw = data.get("stages")
    if not isinstance(stages_raw, list) or not stages_raw:
        raise InputError(f"{where}: field 'stages' must be a nonempty list")
    trans_raw = data.get("transitions", [])
    if not isinstance(trans_raw, list):
        raise InputError(f"{where}: field 'transitions' must be a list")
    stages = []
    for j, st in enumerate(stages_raw):
        try:
            stages.append(GradedDims.from_json(st))
        except InputError as exc:
            raise InputError(f"{where}: field 'stages[{j}]': {exc}") from exc
    transitions = []
    for j, tr in enumerate(trans_raw):
        if not isinstance(tr, dict):
            raise InputError(f"{where}: field 'transitions[{j}]' must be an object")
        per_degree = {}
        for key, rows in tr.items():
            try:
                deg = int(key)
                if not isinstance(rows, list):
                    raise InputError("matrix must be a list of rows")
                per_degree[deg] = Matrix.from_rows(rows, None if rows else stages[j][deg])
            except (InputError, ValueError, IndexError) as exc:
                raise InputError(f"{where}: field 'transitions[{j}][{key!r}]': {exc}") from exc
        transitions.append(per_degree)
    try:
        return DirectSystem(tuple(stages), tuple(transitions))
    except InputError as exc:
        raise InputError(f"{where}: {exc}") from exc


def load_system(path) -> DirectSystem:
    """Read a system file in matrix form or tower form.

    Paths inside a tower file resolve against the file's directory.
    """
    path = Path(path)
    data = _read_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    if "stages" in data:
        return _system_from_matrix_json(data, str(path))
    if "complexes" in data:
        cpaths = data["complexes"]
        mpaths = data.get("maps", [])
        if not isinstance(cpaths, list) or not isinstance(mpaths, list):
            raise InputError(f"{path}: fields 'complexes' and 'maps' must be lists of paths")
        complexes = [load_complex(path.parent / p) for p in cpaths]
        maps = [load_map(path.parent / p) for p in mpaths]
        return system_from_maps(complexes, maps)
    raise InputError(f"{path}: expected field 'stages' (matrix form) or 'complexes' (tower form)")


def system_to_json(s: DirectSystem) -> dict:
    """Matrix-form JSON with rationals written as ``"a/b"`` strings."""
    def fmt(x):
        return f"{x.numerator}/{x.denominator}"
    return {
        "stages": [st.to_json() for st in s.stages],
        "transitions": [
            {str(d): [[fmt(x) for x in row] for row in m.tolist()] for d, m in sorted(tr.items())}
            for tr in s.transitions
        ],
    }


def dump_system(s: DirectSystem, path) -> None:
    Path(path).write_text(json.dumps(system_to_json(s), indent=1) + "\n")
