import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conesym.graphcanon import (Labeling, WeightTable, automorphisms, canonical_labeling,
                                canonical_matrix, compress)
from conesym.permgroup import PermutationGroup

from oracles import brute_lex_max, brute_table_automorphisms


def tables(max_rows=4, max_cols=4, values=3):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, values - 1), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def test_compress():
    t = WeightTable.bipartite([[7, 3], [7, 0]])
    c = compress(t)
    assert c.codes == ((2, 1), (2, 0))
    assert c.palette == (0, 3, 7)
    assert c.decompress() == [[7, 3], [7, 0]]


def test_validation():
    with pytest.raises(ValueError):
        WeightTable.bipartite([[1, 2], [3]])
    with pytest.raises(ValueError):
        WeightTable.symmetric([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        WeightTable.bipartite([[1]], row_fixed=[3])


def test_identity_table():
    g = automorphisms(WeightTable.bipartite([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert g.order() == 6
    m, _ = canonical_matrix(WeightTable.bipartite([[0, 1], [1, 0]]))
    assert m == [[1, 0], [0, 1]]


@settings(max_examples=80, deadline=None)
@given(tables())
def test_bipartite_group_matches_brute_force(w):
    g = automorphisms(WeightTable.bipartite(w))
    ref = brute_table_automorphisms(w)
    assert g.order() == len(ref)
    assert set(g.elements()) == ref


@settings(max_examples=80, deadline=None)
@given(tables())
def test_canonical_is_lex_max(w):
    m, lab = canonical_matrix(WeightTable.bipartite(w))
    assert m == brute_lex_max(w)
    assert sorted(lab.row_order) == list(range(len(w)))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6).flatmap(
    lambda n: st.lists(st.integers(0, 2), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2)
    .map(lambda xs: (n, xs))))
def test_symmetric_group_and_canon(data):
    from itertools import permutations
    n, xs = data
    w = [[0] * n for _ in range(n)]
    it = iter(xs)
    for i in range(n):
        for j in range(i, n):
            w[i][j] = w[j][i] = next(it)
    t = WeightTable.symmetric(w)
    ref = {p for p in permutations(range(n))
           if all(w[p[i]][p[j]] == w[i][j] for i in range(n) for j in range(n))}
    g = automorphisms(t)
    assert set(g.elements()) == ref
    m, _ = canonical_matrix(t)
    best = max(tuple(tuple(w[p[i]][p[j]] for j in range(n)) for i in range(n))
               for p in permutations(range(n)))
    assert tuple(map(tuple, m)) == best


def test_fixed_vertices_stay():
    w = [[0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1], [1, 1, 1, 0]]
    t = WeightTable.symmetric(w, fixed=[0])
    g = automorphisms(t)
    assert g.order() == 6
    assert all(p[0] == 0 for p in g.generators)
    lab = canonical_labeling(t)
    assert lab.row_order[0] == 0


def test_canonical_invariant_under_relabeling():
    rng = random.Random(5)
    for _ in range(30):
        n, s = rng.randint(2, 8), rng.randint(2, 7)
        w = [[rng.randint(0, 2) for _ in range(s)] for _ in range(n)]
        m0, _ = canonical_matrix(WeightTable.bipartite(w))
        for _ in range(5):
            rp = list(range(n))
            cp = list(range(s))
            rng.shuffle(rp)
            rng.shuffle(cp)
            w2 = [[w[i][j] for j in cp] for i in rp]
            m1, lab = canonical_matrix(WeightTable.bipartite(w2))
            assert m1 == m0
            assert lab.apply(WeightTable.bipartite(w2)) == m1


def test_large_regular_table():
    # incidence of the 6-cycle with its edges: dihedral of order 12
    n = 6
    w = [[1 if v in (e, (e + 1) % n) else 0 for e in range(n)] for v in range(n)]
    assert automorphisms(WeightTable.bipartite(w)).order() == 12
    # 5-dimensional cube vertices vs coordinates hyperplanes x_i = 0: order 2^5 * 5!
    from itertools import product
    verts = list(product([0, 1], repeat=5))
    w = [[v[i] for i in range(5)] + [1 - v[i] for i in range(5)] for v in verts]
    assert automorphisms(WeightTable.bipartite(w)).order() == 32 * 120


def test_labeling_apply():
    t = WeightTable.bipartite([[1, 2], [3, 4]])
    assert Labeling((1, 0), (1, 0)).apply(t) == [[4, 3], [2, 1]]
    assert PermutationGroup(2).order() == 1
