"""Small triangulations and constructions used by the corpus, the towers and tests."""
from __future__ import annotations

from itertools import combinations

from .simplicial import SimplicialComplex, SimplicialMap, build_complex


def _labels(prefix: str, n: int) -> list[str]:
    width = len(str(max(n - 1, 0)))
    return [f"{prefix}{i:0{width}d}" for i in range(n)]


def point(label: str = "p") -> SimplicialComplex:
    return build_complex([[label]])


def simplex_boundary(k: int, prefix: str = "v") -> SimplicialComplex:
    """Boundary of the (k+1)-simplex, a k-sphere with k+2 vertices."""
    if k < 1:
        raise ValueError("sphere dimension must be at least 1")
    vs = _labels(prefix, k + 2)
    return build_complex(combinations(vs, k + 1))


def polygon(n: int, prefix: str = "c") -> SimplicialComplex:
    """A circle subdivided into ``n >= 3`` edges."""
    if n < 3:
        raise ValueError("a simplicial circle needs at least 3 vertices")
    vs = _labels(prefix, n)
    return build_complex([[vs[i], vs[(i + 1) % n]] for i in range(n)])


def torus7() -> SimplicialComplex:
    """Minimal 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    return build_complex(
        [[str(i), str((i + 1) % 7), str((i + 3) % 7)] for i in range(7)]
        + [[str(i), str((i + 2) % 7), str((i + 3) % 7)] for i in range(7)]
    )


RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
    (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4),
]


def rp2() -> SimplicialComplex:
    """6-vertex real projective plane (half of the icosahedron)."""
    return build_complex([[str(v) for v in f] for f in RP2_FACETS])


def discrete(n: int, prefix: str = "x") -> SimplicialComplex:
    return build_complex([[v] for v in _labels(prefix, n)])


def relabel(k: SimplicialComplex, mapping) -> SimplicialComplex:
    return build_complex([[mapping.get(v, v) for v in f] for f in k.facets()])


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    fa = [["a:" + v for v in f] for f in a.facets()]
    fb = [["b:" + v for v in f] for f in b.facets()]
    return build_complex(fa + fb)


def wedge(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """One-point union gluing the first vertex of ``b`` to the first vertex of ``a``."""
    base = "a:" + a.vertices[0]
    glued = {"b:" + b.vertices[0]: base}
    fa = [["a:" + v for v in f] for f in a.facets()]
    fb = [[glued.get("b:" + v, "b:" + v) for v in f] for f in b.facets()]
    return build_complex(fa + fb)


def cone(k: SimplicialComplex, apex: str = "*apex") -> SimplicialComplex:
    if apex in k.vertices:
        raise ValueError(f"apex label {apex!r} already used")
    return build_complex([list(f) + [apex] for f in k.facets()])


def winding_map(n: int, p: int, prefix_source: str = "c", prefix_target: str = "c") -> SimplicialMap:
    """Degree-``p`` wrap of the ``n*p``-gon onto the ``n``-gon, vertex i -> i mod n."""
    src = polygon(n * p, prefix_source)
    tgt = polygon(n, prefix_target)
    sv, tv = src.vertices, tgt.vertices
    return SimplicialMap(src, tgt, {sv[i]: tv[i % n] for i in range(n * p)})


def solenoid_tower(stages: int, p: int = 2, base: int = 3):
    """Circles of ``base * p**j`` edges with the degree-``p`` bonding maps.

    ``maps[j]`` goes from ``complexes[j+1]`` to ``complexes[j]``.
    """
    complexes = [polygon(base * p ** j) for j in range(stages)]
    maps = [winding_map(base * p ** j, p) for j in range(stages - 1)]
    return complexes, maps


def cantor_tower(stages: int):
    """``2**j`` points at stage j; stage j+1 collapses pairs onto stage j."""
    complexes = [discrete(2 ** j) for j in range(stages)]
    maps = []
    for j in range(stages - 1):
        src, tgt = complexes[j + 1], complexes[j]
        maps.append(SimplicialMap(src, tgt, {v: tgt.vertices[i // 2] for i, v in enumerate(src.vertices)}))
    return complexes, maps


CORPUS = {
    "point": point,
    "s1": lambda: polygon(3),
    "s2": lambda: simplex_boundary(2),
    "s3": lambda: simplex_boundary(3),
    "torus7": torus7,
    "rp2": rp2,
    "s1_wedge_s2": lambda: wedge(polygon(3), simplex_boundary(2)),
}
