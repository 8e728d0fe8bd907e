"""Rational homotopy groups of mapping spaces, gauge groups and unitary groups.

For compact metric ``X`` and a compact connected Lie group ``G`` the identity
component of ``F(X, G)`` has

    pi_k(F(X, G)_o) (x) Q  =  sum over generator degrees d of G of  H^{d-k}(X; Q),

for k >= 1, which is the degree-k part of ``H^*(X) (x) (pi_*(G) (x) Q)`` once
cohomology sits in nonpositive degrees.  The same graded space computes the
gauge group of any principal G-bundle over X, the projective gauge group of
any principal PG-bundle, and, for ``G = U(n)``, the unitary group of the
associated continuous-trace algebra.  None of these depend on the bundle, so
no bundle is ever taken as input.

:func:`bg_loop_oracle` reaches the same numbers along a separate route
(loops on ``F(X, BG)`` with BG rationally a product of even Eilenberg-MacLane
spaces) and is what the verification sweep compares against.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Mapping

from .errors import InputError
from .graded import (
    UNBOUNDED, GradedDims, poincare_series, regrade_nonpositive, tensor, truncate_min,
)
from .groups import LieGroupModel, bg_degrees, parse_group
from .limits import ColimitReport

__all__ = [
    "HomotopyReport",
    "SamelsonAlgebra",
    "ZERO_BRACKET",
    "H_TYPE",
    "DEGREE_ZERO_LABEL",
    "mapping_space_homotopy",
    "gauge_group_homotopy",
    "projective_gauge_homotopy",
    "ua_homotopy",
    "thom_homotopy",
    "bg_loop_oracle",
    "samelson_algebra",
]

ZERO_BRACKET = "zero"
H_TYPE = "product of rational Eilenberg-MacLane spaces, standard multiplication"
DEGREE_ZERO_LABEL = "rationalized pi_0 of full mapping space"

NOTE_B = ("Theorem B: pi_*(F(X,G)_o) (x) Q = H^*(X;Q) (x)~ (pi_*(G) (x) Q), "
          "cohomology graded nonpositively, degrees >= 1 kept")
NOTE_C = "Theorem C: G(zeta)_o ~_Q F(X,G)_o, so the answer is bundle-independent"
NOTE_D = "Theorem D: P(zeta)_o ~_Q F(X,G)_o for any principal PG-bundle zeta; input is G, not PG"
NOTE_A = ("Theorem A: (UA_zeta)_o has pi_* (x) Q = H^*(X;Q) (x)~ Q(s_1..s_n), |s_i| = 2i-1; "
          "independent of the bundle zeta")
NOTE_SAMELSON = ("Samelson bracket vanishes; by Scheerer's criterion the graded dimensions "
                 "determine the rational H-type")
NOTE_WINDOW = ("cohomology came from a truncated inverse system; degrees marked >= are lower "
               "bounds fed by unsettled Cech degrees")


@dataclass(frozen=True)
class HomotopyReport:
    """Rational homotopy of an identity component, with provenance.

    ``contributions`` lists ``(d, n, multiplicity)``: generator degree ``d``
    paired with cohomological degree ``n`` lands in homotopy degree ``d - n``.
    Degrees in ``lower_bound_degrees`` are only bounded from below.
    """

    identity_component: GradedDims
    degree_zero: int
    contributions: tuple[tuple[int, int, int], ...]
    notes: tuple[str, ...] = ()
    lower_bound_degrees: tuple[int, ...] = ()
    degree_zero_lower_bound: bool = False
    samelson_bracket: str = ZERO_BRACKET
    h_type: str = H_TYPE
    degree_zero_label: str = DEGREE_ZERO_LABEL

    def series(self) -> str:
        return poincare_series(self.identity_component)

    def to_json(self) -> dict:
        return {
            "identity_component": self.identity_component.to_json(),
            "degree_zero": {
                "dimension": self.degree_zero,
                "label": self.degree_zero_label,
                "lower_bound": self.degree_zero_lower_bound,
            },
            "lower_bound_degrees": list(self.lower_bound_degrees),
            "contributions": [list(c) for c in self.contributions],
            "samelson_bracket": self.samelson_bracket,
            "h_type": self.h_type,
            "notes": list(self.notes),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, data: Mapping) -> "HomotopyReport":
        try:
            dz = data["degree_zero"]
            return cls(
                identity_component=GradedDims.from_json(data["identity_component"]),
                degree_zero=dz["dimension"],
                contributions=tuple(tuple(c) for c in data["contributions"]),
                notes=tuple(data.get("notes", ())),
                lower_bound_degrees=tuple(data.get("lower_bound_degrees", ())),
                degree_zero_lower_bound=dz.get("lower_bound", False),
                samelson_bracket=data["samelson_bracket"],
                h_type=data.get("h_type", H_TYPE),
                degree_zero_label=dz.get("label", DEGREE_ZERO_LABEL),
            )
        except (KeyError, TypeError) as exc:
            raise InputError(f"not a homotopy report: {exc}") from exc

    @classmethod
    def loads(cls, text: str) -> "HomotopyReport":
        return cls.from_json(json.loads(text))


def _cohomology(cohomology) -> tuple[GradedDims, frozenset[int]]:
    """Split the input into finite dims (lower bounds where unsettled) and the unsettled degrees."""
    if isinstance(cohomology, ColimitReport):
        return cohomology.lower_bounds(), frozenset(cohomology.unstable_degrees())
    if not isinstance(cohomology, GradedDims):
        cohomology = (GradedDims(cohomology) if isinstance(cohomology, Mapping)
                      else GradedDims.from_sequence(cohomology))
    unstable = frozenset(cohomology.unbounded_degrees())
    finite = GradedDims({k: (0 if v is UNBOUNDED else v) for k, v in cohomology.items()})
    return finite, unstable


def _check_cohomology(b: GradedDims, unstable: frozenset[int]) -> None:
    if any(k < 0 for k in b) or any(k < 0 for k in unstable):
        raise InputError("cohomology must be supported in nonnegative degrees")
    if b[0] < 1 and 0 not in unstable:
        raise InputError("H^0 must be at least 1 (X must be nonempty)")


def _as_group(g) -> LieGroupModel:
    return parse_group(g) if isinstance(g, str) else g


def mapping_space_homotopy(cohomology, g, max_degree: int | None = None) -> HomotopyReport:
    """Rational homotopy of ``F(X, G)_o`` from the cohomology of ``X``.

    ``cohomology`` is a :class:`GradedDims` in conventional degrees, a plain
    sequence ``(b0, b1, ...)``, or a :class:`ColimitReport`.  UNBOUNDED or
    unsettled cohomology degrees only affect the homotopy degrees they feed,
    which are returned as lower bounds.
    """
    g = _as_group(g)
    b, unstable = _cohomology(cohomology)
    _check_cohomology(b, unstable)
    gens = GradedDims.from_degrees(g.generator_degrees)
    full = tensor(regrade_nonpositive(b), gens)
    identity = truncate_min(full, 1)
    poisoned = {d - n for d in gens for n in unstable if d >= n}
    contributions = tuple(
        (d, n, gens[d] * b[n]) for d in gens for n in b if d >= n
    )
    if max_degree is not None:
        identity = GradedDims({k: v for k, v in identity.items() if k <= max_degree})
        contributions = tuple(c for c in contributions if c[0] - c[1] <= max_degree)
        poisoned = {k for k in poisoned if k <= max_degree}
    notes = [NOTE_B, NOTE_SAMELSON]
    if unstable:
        notes.append(NOTE_WINDOW)
    return HomotopyReport(
        identity_component=identity,
        degree_zero=full[0],
        contributions=contributions,
        notes=tuple(notes),
        lower_bound_degrees=tuple(sorted(k for k in poisoned if k >= 1)),
        degree_zero_lower_bound=0 in poisoned,
    )


def _with_note(report: HomotopyReport, note: str) -> HomotopyReport:
    return replace(report, notes=(note,) + report.notes)


def gauge_group_homotopy(cohomology, g, max_degree: int | None = None) -> HomotopyReport:
    """Identity component of the gauge group of any principal G-bundle over X."""
    return _with_note(mapping_space_homotopy(cohomology, g, max_degree), NOTE_C)


def projective_gauge_homotopy(cohomology, g, max_degree: int | None = None) -> HomotopyReport:
    """Identity component of the projective gauge group of any principal PG-bundle.

    ``g`` is G itself.  Passing a projective group is refused because the
    result is stated in terms of G.
    """
    g = _as_group(g)
    if "PU" in g.kinds:
        raise InputError(
            f"projective gauge groups take the compact connected Lie group G, not PG; "
            f"got {g.spec!r} (Theorem D hypothesis: pass e.g. U(n) instead of PU(n))"
        )
    return _with_note(mapping_space_homotopy(cohomology, g, max_degree), NOTE_D)


def ua_homotopy(cohomology, n: int, max_degree: int | None = None) -> HomotopyReport:
    """Unitary group of the continuous-trace algebra of a principal PU(n)-bundle over X."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    return _with_note(projective_gauge_homotopy(cohomology, f"U({n})", max_degree), NOTE_A)


def thom_homotopy(cohomology, p: int) -> GradedDims:
    """``pi_q F(X, K(Q, p)) = H^{p-q}(X; Q)`` for ``0 <= q <= p``."""
    if isinstance(p, bool) or not isinstance(p, int) or p < 1:
        raise InputError(f"p must be a positive integer, got {p!r}")
    b = cohomology if isinstance(cohomology, GradedDims) else GradedDims.from_sequence(cohomology)
    return GradedDims({q: b[p - q] for q in range(p + 1)})


def bg_loop_oracle(cohomology, g) -> GradedDims:
    """Same groups via ``Omega F(X, BG)`` with ``BG_Q`` a product of ``K(Q, e)``.

    Each factor contributes ``pi_{k+1} F(X, K(Q, e)) = H^{e-k-1}(X)``; only
    positive loop degrees are kept.
    """
    g = _as_group(g)
    b = cohomology if isinstance(cohomology, GradedDims) else GradedDims.from_sequence(cohomology)
    if not b.is_finite():
        raise InputError("the oracle needs finite cohomology")
    out: dict[int, int] = {}
    for e in bg_degrees(g):
        for q, dim in thom_homotopy(b, e).items():
            if q - 1 >= 1:
                out[q - 1] = out.get(q - 1, 0) + dim
    return GradedDims(out)


@dataclass(frozen=True)
class SamelsonAlgebra:
    dims: GradedDims
    bracket: str = ZERO_BRACKET
    classification: str = (
        H_TYPE + "; the abelian Samelson algebra makes these dimensions a complete "
        "rational H-invariant"
    )


def samelson_algebra(report: HomotopyReport) -> SamelsonAlgebra:
    return SamelsonAlgebra(report.identity_component, report.samelson_bracket)
