"""Rational homotopy data for the supported structure groups.

A compact connected Lie group is rationally a product of odd spheres, so it is
described by the degrees of its exterior generators:

* ``U(n)``: 1, 3, ..., 2n-1
* ``SU(n)``: 3, 5, ..., 2n-1
* ``PU(n)``: same as ``SU(n)`` (finite cover ``SU(n) -> PU(n)``)
* ``T^k``: k copies of degree 1

Products are written ``U(2) x T^1``.  ``Sp(n)``, ``SO(n)`` and the exceptional
groups are not catalogued; :data:`EXTENSIONS` is the hook for adding them.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .errors import InputError

__all__ = ["LieGroupModel", "parse_group", "bg_degrees", "EXTENSIONS", "CATALOG_GROUPS"]


@dataclass(frozen=True)
class LieGroupModel:
    spec: str
    generator_degrees: tuple[int, ...]
    atoms: tuple[str, ...] = ()
    notes: str = ""

    def __post_init__(self):
        bad = [d for d in self.generator_degrees if d < 1 or d % 2 == 0]
        if bad:
            raise InputError(f"generator degrees must be odd and positive, got {bad}")

    @property
    def is_trivial(self) -> bool:
        return not self.generator_degrees

    @property
    def kinds(self) -> frozenset[str]:
        return frozenset(a.split("(")[0].split("^")[0] for a in self.atoms)


def _unitary(n: int) -> tuple[int, ...]:
    return tuple(2 * i - 1 for i in range(1, n + 1))


def _special_unitary(n: int) -> tuple[int, ...]:
    return tuple(2 * i - 1 for i in range(2, n + 1))


_ATOMS: dict[str, tuple[Callable[[int], tuple[int, ...]], int, str]] = {
    "U": (_unitary, 1, "pi_*(U(n)) (x) Q has generators in degrees 2i-1, i = 1..n"),
    "SU": (_special_unitary, 1, "U(n) degrees with degree 1 removed"),
    "PU": (_special_unitary, 1, "rationally equivalent to SU(n) via the finite cover"),
    "T": (lambda k: (1,) * k, 0, "torus: one degree-1 generator per circle factor"),
}

# name -> (degrees function, minimum parameter, note); e.g. "Sp": (lambda n: tuple(4*i-1 ...), 1, ...)
EXTENSIONS: dict[str, tuple[Callable[[int], tuple[int, ...]], int, str]] = {}

_ATOM_RE = re.compile(r"^\s*(?:([A-Za-z]+)\s*\(\s*(-?\d+)\s*\)|([A-Za-z]+)\s*\^\s*(-?\d+))\s*$")


def _parse_atom(text: str) -> tuple[str, tuple[int, ...], str]:
    m = _ATOM_RE.match(text)
    if not m:
        raise InputError(f"cannot parse group factor {text.strip()!r}; expected U(n), SU(n), PU(n) or T^k")
    if m.group(1):
        name, n, torus_form = m.group(1), int(m.group(2)), False
    else:
        name, n, torus_form = m.group(3), int(m.group(4)), True
    table = {**_ATOMS, **EXTENSIONS}
    if name not in table or (name == "T") != torus_form:
        raise InputError(f"unknown group factor {text.strip()!r}; expected U(n), SU(n), PU(n) or T^k")
    fn, lowest, note = table[name]
    if n < lowest:
        raise InputError(f"{name} needs parameter >= {lowest}, got {n}")
    canonical = f"T^{n}" if torus_form else f"{name}({n})"
    return canonical, fn(n), note


def parse_group(spec: str) -> LieGroupModel:
    """Parse ``ATOM ("x" ATOM)*``.

    >>> parse_group("U(3)").generator_degrees
    (1, 3, 5)
    >>> parse_group("U(1) x SU(2)").generator_degrees
    (1, 3)
    """
    if not isinstance(spec, str) or not spec.strip():
        raise InputError("empty group spec")
    parts = re.split(r"\s*[x×]\s*(?![^()]*\))", spec.strip())
    atoms, degrees, notes = [], [], []
    for part in parts:
        canonical, degs, note = _parse_atom(part)
        atoms.append(canonical)
        degrees.extend(degs)
        notes.append(f"{canonical}: {note}")
    return LieGroupModel(" x ".join(atoms), tuple(sorted(degrees)), tuple(atoms), "; ".join(notes))


def bg_degrees(g: LieGroupModel) -> tuple[int, ...]:
    """Polynomial generator degrees of H^*(BG; Q): each generator degree shifted up by one."""
    return tuple(d + 1 for d in g.generator_degrees)


CATALOG_GROUPS = ("U(1)", "U(2)", "U(3)", "SU(2)", "SU(3)", "T^2", "U(2) x T^1")
