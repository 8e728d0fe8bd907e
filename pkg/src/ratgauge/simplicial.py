"""Finite abstract simplicial complexes and their rational cohomology.

Vertex labels are strings compared lexicographically; every simplex is stored
as a sorted tuple of labels.  The k-th coboundary sends a k-cochain ``c`` to
``(dc)(v0..v_{k+1}) = sum_i (-1)^i c(v0..^vi..v_{k+1})``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import InputError
from .graded import GradedDims
from .linalg import Matrix, image_membership, kernel_basis, rank, rref

__all__ = [
    "SimplicialComplex",
    "CochainComplex",
    "SimplicialMap",
    "build_complex",
    "cochain_complex",
    "betti",
    "cohomology_representatives",
    "induced_cohomology_map",
    "load_complex",
    "load_map",
]

Simplex = tuple[str, ...]


class SimplicialComplex:
    """Closed-under-faces set of simplices, grouped by dimension."""

    def __init__(self, simplices: Iterable[Simplex]):
        by_dim: dict[int, set[Simplex]] = {}
        for s in simplices:
            by_dim.setdefault(len(s) - 1, set()).add(s)
        top = max(by_dim) if by_dim else -1
        self.simplices: tuple[tuple[Simplex, ...], ...] = tuple(
            tuple(sorted(by_dim.get(k, ()))) for k in range(top + 1)
        )
        self._index = [{s: i for i, s in enumerate(level)} for level in self.simplices]

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(s[0] for s in self.simplices[0]) if self.simplices else ()

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.simplices)

    def index(self, simplex: Simplex) -> int:
        return self._index[len(simplex) - 1][simplex]

    def __contains__(self, simplex) -> bool:
        k = len(simplex) - 1
        return 0 <= k < len(self._index) and tuple(simplex) in self._index[k]

    def facets(self) -> list[Simplex]:
        """Maximal simplices, in dimension-then-lexicographic order."""
        out = []
        for k, level in enumerate(self.simplices):
            higher = self.simplices[k + 1] if k + 1 < len(self.simplices) else ()
            covered = {f for s in higher for f in combinations(s, k + 1)}
            out.extend(s for s in level if s not in covered)
        return out

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.counts()))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.facets()]}

    def __eq__(self, other) -> bool:
        return isinstance(other, SimplicialComplex) and self.simplices == other.simplices

    def __hash__(self) -> int:
        return hash(self.simplices)

    def __repr__(self) -> str:
        return f"SimplicialComplex(f-vector={self.counts()})"


def build_complex(facets: Iterable[Iterable], vertices: Iterable | None = None) -> SimplicialComplex:
    """Close ``facets`` under taking faces.

    ``vertices``, when given, must cover every facet label; vertices not in
    any facet become isolated points.
    """
    facets = [list(f) for f in facets]
    if not facets and not vertices:
        raise InputError("a complex needs at least one facet")
    labels = None if vertices is None else [str(v) for v in vertices]
    if labels is not None and len(set(labels)) != len(labels):
        raise InputError("duplicate vertex label in 'vertices'")
    known = None if labels is None else set(labels)
    simplices: set[Simplex] = set()
    for f in facets:
        if not f:
            raise InputError("empty facet")
        f = [str(v) for v in f]
        if len(set(f)) != len(f):
            raise InputError(f"duplicate vertex within facet {f}")
        if known is not None and not set(f) <= known:
            raise InputError(f"facet {f} uses labels missing from 'vertices'")
        f.sort()
        for k in range(1, len(f) + 1):
            simplices.update(combinations(f, k))
    if labels is not None:
        simplices.update((v,) for v in labels)
    return SimplicialComplex(simplices)


@dataclass(frozen=True)
class CochainComplex:
    dims: tuple[int, ...]
    coboundaries: tuple[Matrix, ...]

    def coboundary(self, k: int) -> Matrix:
        """``delta^k`` with shape ``n_{k+1} x n_k``; zero-size outside the range."""
        if 0 <= k < len(self.coboundaries):
            return self.coboundaries[k]
        n_k = self.dims[k] if 0 <= k < len(self.dims) else 0
        n_next = self.dims[k + 1] if 0 <= k + 1 < len(self.dims) else 0
        return Matrix.zeros(n_next, n_k)


def cochain_complex(k: SimplicialComplex) -> CochainComplex:
    deltas = []
    for d in range(len(k.simplices)):
        src = k.simplices[d]
        dst = k.simplices[d + 1] if d + 1 < len(k.simplices) else ()
        m = [[0] * len(src) for _ in dst]
        for r, s in enumerate(dst):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                m[r][k.index(face)] += (-1) ** i
        deltas.append(Matrix(len(dst), len(src), [e for row in m for e in row]))
    return CochainComplex(k.counts(), tuple(deltas))


def betti(k: SimplicialComplex, complex_: CochainComplex | None = None) -> GradedDims:
    """Rational Betti numbers in conventional (nonnegative) degrees."""
    cc = complex_ or cochain_complex(k)
    ranks = [rank(cc.coboundary(d)) for d in range(len(cc.dims))]
    return GradedDims(
        (d, n - ranks[d] - (ranks[d - 1] if d else 0)) for d, n in enumerate(cc.dims)
    )


def _representatives(cc: CochainComplex, degree: int) -> Matrix:
    n = cc.dims[degree] if degree < len(cc.dims) else 0
    cycles = kernel_basis(cc.coboundary(degree))
    bounds = cc.coboundary(degree - 1) if degree > 0 else Matrix.zeros(n, 0)
    # Pivot columns of [im delta | ker delta] that land in the kernel block
    # pick a canonical complement of the coboundaries.
    _, pivots = rref(bounds.hstack(cycles))
    chosen = [p - bounds.cols for p in pivots if p >= bounds.cols]
    return cycles.select_columns(chosen)


def cohomology_representatives(k: SimplicialComplex, degree: int) -> Matrix:
    """Cocycles (as columns) whose classes form a basis of ``H^degree``."""
    if degree < 0:
        raise InputError("degree must be nonnegative")
    return _representatives(cochain_complex(k), degree)


@dataclass(frozen=True)
class SimplicialMap:
    source: SimplicialComplex
    target: SimplicialComplex
    assignment: Mapping[str, str] = field(hash=False)

    def __post_init__(self):
        missing = [v for v in self.source.vertices if v not in self.assignment]
        if missing:
            raise InputError(f"vertex assignment misses source vertices {missing}")
        for level in self.source.simplices:
            for s in level:
                img = tuple(sorted({self.assignment[v] for v in s}))
                if img not in self.target:
                    raise InputError(f"image of simplex {s} is {img}, not a simplex of the target")

    def __call__(self, simplex: Simplex) -> Simplex:
        return tuple(sorted({self.assignment[v] for v in simplex}))

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """``self o first``."""
        return SimplicialMap(first.source, self.target,
                             {v: self.assignment[first.assignment[v]] for v in first.source.vertices})


def _permutation_sign(seq: Sequence[str]) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def pullback_cochain(f: SimplicialMap, cochain: Sequence, degree: int) -> list[Fraction]:
    """``f^# c`` on source ``degree``-simplices; degenerate images give 0."""
    src = f.source.simplices[degree] if degree < len(f.source.simplices) else ()
    out = []
    for s in src:
        image = [f.assignment[v] for v in s]
        if len(set(image)) < len(image):
            out.append(Fraction(0))
            continue
        target_simplex = tuple(sorted(image))
        out.append(_permutation_sign(image) * Fraction(cochain[f.target.index(target_simplex)]))
    return out


def induced_cohomology_map(f: SimplicialMap, degree: int,
                           source_complex: CochainComplex | None = None,
                           target_complex: CochainComplex | None = None) -> Matrix:
    """Matrix of ``f^*: H^degree(target) -> H^degree(source)``.

    Rows index the source representatives and columns the target ones, both
    as returned by :func:`cohomology_representatives`.
    """
    scc = source_complex or cochain_complex(f.source)
    tcc = target_complex or cochain_complex(f.target)
    src_reps = _representatives(scc, degree)
    tgt_reps = _representatives(tcc, degree)
    n_src = scc.dims[degree] if degree < len(scc.dims) else 0
    bounds = scc.coboundary(degree - 1) if degree > 0 else Matrix.zeros(n_src, 0)
    basis = src_reps.hstack(bounds)
    columns = []
    for c in tgt_reps.columns():
        pulled = pullback_cochain(f, c, degree)
        ok, coeffs = image_membership(basis, pulled)
        assert ok, "pullback of a cocycle left the span of cocycle classes and coboundaries"
        columns.append(coeffs[:src_reps.cols])
    return Matrix.from_columns(columns, src_reps.cols)


# -- file formats ---------------------------------------------------------------

def _read_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc


def complex_from_json(data, where: str = "complex") -> SimplicialComplex:
    if not isinstance(data, dict):
        raise InputError(f"{where}: expected a JSON object")
    if "facets" not in data:
        raise InputError(f"{where}: missing field 'facets'")
    facets = data["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise InputError(f"{where}: field 'facets' must be a list of lists")
    vertices = data.get("vertices")
    if vertices is not None and not isinstance(vertices, list):
        raise InputError(f"{where}: field 'vertices' must be a list")
    try:
        return build_complex(facets, vertices)
    except InputError as exc:
        raise InputError(f"{where}: field 'facets': {exc}") from exc


def load_complex(path) -> SimplicialComplex:
    return complex_from_json(_read_json(path), str(path))


def load_map(path) -> SimplicialMap:
    """Read ``{"source": path, "target": path, "assignment": {...}}``.

    Relative complex paths resolve against the map file's directory.
    """
    path = Path(path)
    data = _read_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    for key in ("source", "target", "assignment"):
        if key not in data:
            raise InputError(f"{path}: missing field '{key}'")
    if not isinstance(data["assignment"], dict):
        raise InputError(f"{path}: field 'assignment' must be an object")
    source = load_complex(path.parent / data["source"])
    target = load_complex(path.parent / data["target"])
    try:
        return SimplicialMap(source, target, {str(k): str(v) for k, v in data["assignment"].items()})
    except InputError as exc:
        raise InputError(f"{path}: field 'assignment': {exc}") from exc
