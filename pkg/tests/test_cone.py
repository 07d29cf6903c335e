import random

import pytest

from conesym import linalg as la
from conesym.cone import (ConeError, ConeInput, build_polyhedron, dd_rays, homogenize,
                          incidence, reduce)

from conftest import random_cone
from oracles import extreme_rays_by_faces, facets_by_subsets


def test_orthant_unchanged():
    c = reduce(ConeInput(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert c.working_dim == 3
    assert sorted(c.extreme_gens) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert sorted(c.support_forms) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_two_dim_example():
    c = reduce(ConeInput(2, [(0, 1), (2, 1)]))
    assert set(c.support_forms) == {(-1, 2), (1, 0)}


def test_lineality_quotient():
    c = reduce(ConeInput(2, [(1, 0), (-1, 0), (0, 1)]))
    assert c.lineality_dim == 1 and c.working_dim == 1


def test_span_saturation():
    c = reduce(ConeInput(3, [(2, 0, 0), (0, 2, 0)]))
    assert c.working_dim == 2
    assert sorted(c.extreme_gens) == [(0, 1), (1, 0)]


def test_inequalities_input():
    c = reduce(ConeInput(2, inequalities=[(1, 0), (0, 1)]))
    assert sorted(c.extreme_gens) == [(0, 1), (1, 0)]


def test_generators_and_inequalities_intersect():
    c = reduce(ConeInput(2, [(1, 0), (0, 1)], inequalities=[(1, -1)]))
    ext = {tuple(c.ambient(y)) for y in c.extreme_gens}
    assert ext == {(1, 0), (1, 1)}


def test_dd_needs_pointed():
    with pytest.raises(ConeError):
        dd_rays([[1, 0]], 2)


def test_grading_errors():
    with pytest.raises(ConeError):
        reduce(ConeInput(2, [(1, 0), (0, 1)], grading=(1, -1)))
    with pytest.raises(ConeError):
        ConeInput(2, [(1, 0, 0)])


def test_square_polytope():
    p = build_polyhedron(homogenize(2, vertices=[(0, 0), (1, 0), (0, 1), (1, 1), (1, 0)]))
    assert p.is_polytope and len(p.vertices) == 4
    assert p.cone.num_facets == 4
    assert sorted(tuple(v) for v in p.ambient_vertices()) == [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]


def test_unbounded_polyhedron():
    # x >= 0, y >= 0, x + y >= 1
    p = build_polyhedron(homogenize(2, inequalities=[(1, 0, 0), (0, 1, 0), (1, 1, -1)]))
    assert len(p.vertices) == 2 and len(p.recession_rays) == 2
    assert not p.is_polytope


def test_empty_polyhedron():
    p = build_polyhedron(homogenize(1, inequalities=[(1, -2), (-1, 1)]))
    assert p.is_empty


def test_random_cones_against_subset_oracle():
    rng = random.Random(11)
    for _ in range(40):
        c = random_cone(rng, dim_max=4, rays_max=7)
        gens = [list(g) for g in c.generators]
        assert set(c.support_forms) == facets_by_subsets(gens)
        assert set(c.extreme_gens) == extreme_rays_by_faces(gens)
        inc = incidence(c.extreme_gens, c.support_forms)
        assert all(sum(row) >= c.working_dim - 1 for row in inc)


def test_reduce_idempotent():
    rng = random.Random(3)
    for _ in range(10):
        c = random_cone(rng)
        again = reduce(ConeInput(c.working_dim, c.extreme_gens))
        assert set(again.extreme_gens) == set(c.extreme_gens)
        assert set(again.support_forms) == set(c.support_forms)


def test_ambient_roundtrip():
    c = reduce(ConeInput(4, [(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (1, 1, 1, 1)]))
    for g, w in zip(c.source.generators, c.generators):
        assert c.ambient(w) == list(g)
    for s in c.ambient_forms():
        assert all(la.dot(s, g) >= 0 for g in c.source.generators)
