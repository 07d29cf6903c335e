import random

from conesym import linalg as la
from conesym.cone import ConeInput, homogenize, reduce
from conesym.hilbert import hilbert_basis, in_cone, parallelepiped_points, triangulate
from conesym.models import white_cone

from conftest import random_cone
from oracles import hilbert_basis_by_box


def test_orthant():
    c = reduce(ConeInput(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert hilbert_basis(c) == [[0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_two_dim():
    c = reduce(ConeInput(2, [(0, 1), (2, 1)]))
    assert hilbert_basis(c) == [[0, 1], [1, 1], [2, 1]]


def test_parallelepiped():
    pieces = triangulate(reduce(ConeInput(2, [(0, 1), (2, 1)])))
    assert len(pieces) == 1 and pieces[0].det == 2
    assert parallelepiped_points(pieces[0]) == [[0, 0], [1, 1]]


def test_triangulation_volume():
    p = homogenize(2, vertices=[(0, 0), (2, 0), (0, 2), (2, 2)])
    c = reduce(p)
    pieces = triangulate(c)
    assert len(pieces) == 2
    assert sum(x.det for x in pieces) == 8


def test_white_cones():
    for name, pattern in (("C", [(1, 4, 4, 1), (2, 3, 3, 2), (3, 2, 2, 3), (4, 1, 1, 4)]),
                          ("D", [(1, 2, 3, 4), (2, 4, 1, 3), (3, 1, 4, 2), (4, 3, 2, 1)])):
        c = reduce(white_cone(name))
        hb = hilbert_basis(c)
        assert len(hb) == 8
        ext = {tuple(y) for y in c.extreme_gens}
        inner = [h for h in hb if tuple(h) not in ext]
        values = sorted(tuple(la.dot(s, h) for s in c.support_forms) for h in inner)
        # the pattern of values up to reordering of the forms
        assert sorted(sorted(v) for v in values) == sorted(sorted(v) for v in pattern)
        assert all(sum(v) == 10 for v in values)


def test_random_against_box_oracle():
    rng = random.Random(7)
    for _ in range(20):
        c = random_cone(rng, dim_max=3, rays_max=4, entry_max=2)
        hb = hilbert_basis(c)
        assert hb == hilbert_basis_by_box([list(y) for y in c.extreme_gens])
        assert all(in_cone(c, h) for h in hb)
