"""Exit criteria.  Everything is exact; the only tolerances are wall-clock limits."""
import random
import time
from contextlib import contextmanager

import pytest

from ratgauge import models
from ratgauge.cli import main
from ratgauge.gauge import (
    H_TYPE, ZERO_BRACKET, bg_loop_oracle, gauge_group_homotopy, mapping_space_homotopy,
    projective_gauge_homotopy, samelson_algebra, thom_homotopy, ua_homotopy,
)
from ratgauge.graded import GradedDims, tensor
from ratgauge.groups import parse_group
from ratgauge.limits import Status, colimit_dims, system_from_maps
from ratgauge.linalg import Matrix, kernel_basis, rank
from ratgauge.simplicial import betti, cochain_complex, induced_cohomology_map

import oracles
from randmaps import random_chain

CORPUS = {
    "point": models.point,
    "S1": lambda: models.polygon(3),
    "S2": lambda: models.simplex_boundary(2),
    "S3": lambda: models.simplex_boundary(3),
    "torus7": models.torus7,
    "RP2": models.rp2,
    "S1vS2": lambda: models.wedge(models.polygon(3), models.simplex_boundary(2)),
}
GROUPS = ["U(1)", "U(2)", "U(3)", "SU(2)", "SU(3)", "T^2", "U(2) x T^1"]


@contextmanager
def within(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


@pytest.mark.criterion(1, "cohomology of boundary of tetrahedron, 7-vertex torus, 6-vertex RP2 vs brute force")
@pytest.mark.parametrize("make, expected", [
    (lambda: models.simplex_boundary(2), (1, 0, 1)),
    (models.torus7, (1, 2, 1)),
    (models.rp2, (1, 0, 0)),
])
def test_cohomology_correctness(make, expected):
    with within(1.0):
        k = make()
        b = betti(k)
    assert oracles.betti_numbers(k.facets()) == expected
    assert tuple(b[d] for d in range(3)) == expected


@pytest.mark.criterion(2, "F(S2, U(2)) has (pi1, pi2, pi3) = (2, 0, 1), matching G x Omega^2 G")
def test_theorem_b_flagship():
    with within(1.0):
        r = mapping_space_homotopy(betti(models.simplex_boundary(2)), parse_group("U(2)"))
    got = tuple(r.identity_component[k] for k in (1, 2, 3))
    assert got == (2, 0, 1)
    degs = list(parse_group("U(2)").generator_degrees)
    assert got == tuple(oracles.mapping_space_by_decomposition(degs, 2, k) for k in (1, 2, 3))


@pytest.mark.criterion(3, "Theorem B equals the loop-on-F(X,BG) oracle, 7 spaces x 7 groups x degrees 1..40")
def test_oracle_equivalence_sweep():
    mismatches = []
    with within(60.0):
        for name, make in CORPUS.items():
            b = betti(make())
            for spec in GROUPS:
                g = parse_group(spec)
                lhs = mapping_space_homotopy(b, g).identity_component
                rhs = bg_loop_oracle(b, g)
                mismatches += [(name, spec, k) for k in range(1, 41) if lhs[k] != rhs[k]]
    assert not mismatches


@pytest.mark.criterion(4, "UA_zeta agrees with F(X, U(n)) for n = 1..4; point gives degrees 1, 3, .., 2n-1")
def test_theorem_a():
    for make in CORPUS.values():
        b = betti(make())
        for n in range(1, 5):
            ua = ua_homotopy(b, n)
            ms = mapping_space_homotopy(b, parse_group(f"U({n})"))
            assert ua.identity_component == ms.identity_component
            assert ua.degree_zero == ms.degree_zero
    for n in range(1, 5):
        assert ua_homotopy(GradedDims({0: 1}), n).identity_component == \
            GradedDims({2 * i - 1: 1 for i in range(1, n + 1)})


@pytest.mark.criterion(5, "solenoid tower gives (1, 1) STABLE; Cantor tower degree 0 NOT_STABILIZED >= 8")
def test_continuity():
    with within(2.0):
        rep = colimit_dims(system_from_maps(*models.solenoid_tower(3, 2)), 2)
    assert rep.cohomology() == {0: 1, 1: 1}
    assert all(c.status is Status.STABLE for c in rep.degrees.values())
    with within(2.0):
        rep = colimit_dims(system_from_maps(*models.cantor_tower(4)), 2)
    c = rep.degrees[0]
    assert c.status is Status.NOT_STABILIZED and c.dimension == 8
    assert all(a < b for a, b in zip(c.rank_sequence, c.rank_sequence[1:]))


@pytest.mark.criterion(6, "Thom formula agrees with T^1 mapping spaces; point gives Q in degree p only")
def test_thom():
    for make in CORPUS.values():
        b = betti(make())
        t = thom_homotopy(b, 1)
        r = mapping_space_homotopy(b, parse_group("T^1"))
        assert r.identity_component == GradedDims({k: v for k, v in t.items() if k >= 1})
    for p in range(1, 10):
        assert thom_homotopy(GradedDims({0: 1}), p) == {p: 1}


@pytest.mark.criterion(7, "rank-nullity, d^2 = 0, Euler, tensor laws, contravariant functoriality")
def test_structural_invariants():
    rnd = random.Random(20261017)
    with within(30.0):
        for _ in range(500):
            r, c = rnd.randint(0, 8), rnd.randint(0, 8)
            m = Matrix(r, c, [rnd.randint(-9, 9) for _ in range(r * c)])
            assert rank(m) + kernel_basis(m).cols == c
            assert rank(m) == (oracles.rank(m.tolist()) if r else 0)

        for make in CORPUS.values():
            k = make()
            cc = cochain_complex(k)
            for d in range(len(cc.dims)):
                assert (cc.coboundary(d + 1) @ cc.coboundary(d)).is_zero()
            assert sum((-1) ** d * n for d, n in betti(k, cc).items()) == k.euler_characteristic()

        unit = GradedDims({0: 1})
        for _ in range(200):
            u, v, w = (GradedDims({rnd.randint(-5, 5): rnd.randint(0, 3) for _ in range(rnd.randint(0, 4))})
                       for _ in range(3))
            assert tensor(unit, u) == u == tensor(u, unit)
            assert tensor(u, v) == tensor(v, u)
            assert tensor(tensor(u, v), w) == tensor(u, tensor(v, w))

        nontrivial = 0
        for _ in range(150):
            f, g = random_chain(rnd)
            for d in range(3):
                lhs = induced_cohomology_map(g.compose(f), d)
                assert lhs == induced_cohomology_map(f, d) @ induced_cohomology_map(g, d)
                nontrivial += d > 0 and not lhs.is_zero()
    assert nontrivial > 0


@pytest.mark.criterion(8, "every report carries a zero Samelson bracket and the Eilenberg-MacLane H-type")
def test_samelson_contract(capsys):
    for make in CORPUS.values():
        b = betti(make())
        for spec in GROUPS:
            for fn in (mapping_space_homotopy, gauge_group_homotopy, projective_gauge_homotopy):
                r = fn(b, parse_group(spec))
                assert r.samelson_bracket == ZERO_BRACKET and r.h_type == H_TYPE
                assert samelson_algebra(r).bracket == ZERO_BRACKET
    assert main(["verify", "--max-degree", "40", "--quiet"]) == 0
    assert "PASS" in capsys.readouterr().out
