"""Graded vector spaces over Q, recorded by dimension only.

A :class:`GradedDims` maps integer degrees to dimensions.  Cohomology comes in
with its usual nonnegative grading and is reflected by
:func:`regrade_nonpositive` before being tensored against homotopy degrees.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import InputError

__all__ = [
    "UNBOUNDED",
    "GradedDims",
    "regrade_nonpositive",
    "tensor",
    "truncate_min",
    "poincare_series",
]


class _Unbounded:
    """Marker for a degree whose dimension a finite computation could not pin down."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "UNBOUNDED"

    def __reduce__(self):
        return (_Unbounded, ())


UNBOUNDED = _Unbounded()


class GradedDims(Mapping):
    """Finitely supported ``degree -> dimension`` map; absent degrees are 0."""

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = dims.items() if isinstance(dims, Mapping) else dims
        clean: dict[int, object] = {}
        for deg, dim in items:
            if isinstance(deg, bool) or not isinstance(deg, int):
                raise InputError(f"degree must be an integer, got {deg!r}")
            if dim is UNBOUNDED:
                clean[deg] = dim
                continue
            if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
                raise InputError(f"dimension in degree {deg} must be a natural number, got {dim!r}")
            if dim:
                clean[deg] = clean.get(deg, 0) + dim
        self._dims = dict(sorted(clean.items()))

    @classmethod
    def from_sequence(cls, dims: Iterable[int], start: int = 0) -> "GradedDims":
        """``(b0, b1, ...)`` placed in degrees ``start, start+1, ...``."""
        return cls((start + i, d) for i, d in enumerate(dims))

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "GradedDims":
        """One dimension per listed degree, e.g. exterior generator degrees."""
        out: dict[int, int] = {}
        for d in degrees:
            out[d] = out.get(d, 0) + 1
        return cls(out)

    def __getitem__(self, degree: int):
        return self._dims.get(degree, 0)

    def __iter__(self) -> Iterator[int]:
        return iter(self._dims)

    def __len__(self) -> int:
        return len(self._dims)

    def __contains__(self, degree) -> bool:
        return degree in self._dims

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedDims):
            return self._dims == other._dims
        if isinstance(other, Mapping):
            return self == GradedDims(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._dims.items()))

    def __repr__(self) -> str:
        return f"GradedDims({self._dims!r})"

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self._dims)

    def is_finite(self) -> bool:
        return all(d is not UNBOUNDED for d in self._dims.values())

    def unbounded_degrees(self) -> tuple[int, ...]:
        return tuple(k for k, d in self._dims.items() if d is UNBOUNDED)

    def total(self) -> int:
        if not self.is_finite():
            raise InputError("total dimension of an UNBOUNDED graded space is undefined")
        return sum(self._dims.values())

    def as_sequence(self) -> tuple[int, ...]:
        """Dimensions in degrees ``0..max`` (nonnegative support only)."""
        if not self._dims:
            return ()
        if min(self._dims) < 0:
            raise InputError("as_sequence needs nonnegative support")
        return tuple(self[k] for k in range(max(self._dims) + 1))

    def to_json(self) -> dict[str, object]:
        return {str(k): ("unbounded" if v is UNBOUNDED else v) for k, v in self._dims.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "GradedDims":
        if not isinstance(data, Mapping):
            raise InputError(f"graded dimensions must be a JSON object, got {type(data).__name__}")
        out = {}
        for k, v in data.items():
            try:
                deg = int(k)
            except (TypeError, ValueError) as exc:
                raise InputError(f"degree key {k!r} is not an integer") from exc
            out[deg] = UNBOUNDED if v == "unbounded" else v
        return cls(out)


def regrade_nonpositive(betti: GradedDims) -> GradedDims:
    """Put cohomology in degree ``-n`` instead of ``n``."""
    if any(k < 0 for k in betti):
        raise InputError("cohomology must be supported in nonnegative degrees")
    return GradedDims({-k: v for k, v in betti.items()})


def tensor(v: GradedDims, w: GradedDims) -> GradedDims:
    """Dimension vector of the graded tensor product (Cauchy convolution)."""
    if not (v.is_finite() and w.is_finite()):
        raise InputError("tensor of UNBOUNDED dimensions is refused; resolve the limit first")
    out: dict[int, int] = {}
    for a, x in v.items():
        for b, y in w.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return GradedDims(out)


def truncate_min(v: GradedDims, min_degree: int) -> GradedDims:
    return GradedDims({k: d for k, d in v.items() if k >= min_degree})


def poincare_series(v: GradedDims) -> str:
    """Render as a sparse polynomial in ``t``, ascending degree.

    >>> poincare_series(GradedDims({1: 2, 3: 1}))
    '2·t^1 + t^3'
    >>> poincare_series(GradedDims({-2: 1, 0: 1}))
    't^-2 + 1'
    """
    terms = []
    for k, d in v.items():
        if d is UNBOUNDED:
            coeff = "∞"
        else:
            coeff = "" if d == 1 else str(d)
        if k == 0:
            terms.append(coeff or "1")
        elif coeff:
            terms.append(f"{coeff}·t^{k}")
        else:
            terms.append(f"t^{k}")
    return " + ".join(terms) if terms else "0"
