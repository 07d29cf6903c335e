"""Automorphism groups of cones and polyhedra.

Every flavour builds a weight table and hands it to the graph engine:

* evaluation tables (vectors against linear forms) for integral, combinatorial
  and ambient automorphisms;
* symmetric tables (a bilinear form on vectors) for rational, Euclidean and
  input automorphisms.

Integral automorphisms first try the extreme rays or the support forms (the
smaller set), check each generator for an integral unimodular matrix, try the
other set, and finally fall back to the Hilbert basis, which is always exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from . import linalg as la
from .cone import ConeData, ConeError, ConeInput, PolyhedronData
from .graphcanon import WeightTable, automorphisms
from .permgroup import PermutationGroup

INTEGRAL = "Integral"
RATIONAL = "Rational"
EUCLIDEAN = "Euclidean"
COMBINATORIAL = "Combinatorial"
INPUT = "Input"
AMBIENT = "Ambient"

FLAVORS = (INTEGRAL, RATIONAL, EUCLIDEAN, COMBINATORIAL, INPUT, AMBIENT)


@dataclass(frozen=True)
class AutoGoal:
    flavor: str = INTEGRAL
    respect_grading: bool = True
    respect_dehomogenization: bool = True

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ValueError("unknown automorphism flavor %r" % self.flavor)


@dataclass(frozen=True)
class AutoResult:
    flavor: str
    group: PermutationGroup
    objects: str
    dual_action: PermutationGroup = None
    dual_objects: str = None
    integrality_verified: bool = False
    method_used: str = None
    pair_group: PermutationGroup = None  # primary points first, then dual points

    @property
    def order(self):
        if self.pair_group is not None:
            return self.pair_group.order()
        return self.group.order()

    @property
    def pairs(self):
        """Generators as (primary permutation, dual permutation) pairs."""
        if self.pair_group is None:
            return [(g, None) for g in self.group.generators]
        m = self.group.degree
        return [(g[:m], tuple(x - m for x in g[m:])) for g in self.pair_group.generators]


# ---------------------------------------------------------------------------
# helpers


def _strip(g, keep):
    index = {p: k for k, p in enumerate(keep)}
    return tuple(index[g[p]] for p in keep)


def _bipartite_pairs(weights, row_fixed_rows=(), col_fixed_cols=()):
    """Engine run on rows x cols plus fixed extra rows/columns.

    ``row_fixed_rows`` are appended as fixed rows (length = ncols),
    ``col_fixed_cols`` as fixed columns (length = nrows).  Returns the pair
    group on ``nrows + ncols`` points with the fixed ones removed.
    """
    n = len(weights)
    s = len(weights[0]) if weights else (len(row_fixed_rows[0]) if row_fixed_rows else 0)
    f_c = len(col_fixed_cols)
    table = [list(weights[i]) + [c[i] for c in col_fixed_cols] for i in range(n)]
    for r in row_fixed_rows:
        table.append(list(r) + [0] * f_c)
    nr = len(table)
    wt = WeightTable.bipartite(table, row_fixed=range(n, nr), col_fixed=range(s, s + f_c))
    g = automorphisms(wt)
    keep = list(range(n)) + [nr + j for j in range(s)]
    return PermutationGroup(n + s, [_strip(x, keep) for x in g.generators])


def _split(group, n):
    pis, sigmas = [], []
    for g in group.generators:
        pis.append(g[:n])
        sigmas.append(tuple(x - n for x in g[n:]))
    return pis, sigmas


def _swap_sides(group, n, s):
    """Pair group on (n rows, s cols) -> pair group on (s, n)."""
    gens = []
    for g in group.generators:
        pi = g[:n]
        sigma = [x - n for x in g[n:]]
        gens.append(tuple(sigma) + tuple(s + x for x in pi))
    return PermutationGroup(s + n, gens)


def linear_map(vectors, pi):
    """Matrix ``A`` with ``vectors[i] @ A == vectors[pi[i]]``, or None."""
    target = [vectors[j] for j in pi]
    return la.solve_linear([list(v) for v in vectors], [list(v) for v in target])


def is_unimodular_map(vectors, pi):
    a = linear_map(vectors, pi)
    if a is None or not la.is_integral(a):
        return False
    return abs(la.determinant(la.to_int(a))) == 1


def _special_forms(cone, goal):
    out = []
    if goal.respect_grading and cone.grading_w is not None:
        out.append(list(cone.grading_w))
    if goal.respect_dehomogenization and cone.dehom_w is not None:
        out.append(list(cone.dehom_w))
    return out


def _trivial(flavor, objects, m=0, dual_objects=None, s=0, method=None, integral=False):
    return AutoResult(flavor, PermutationGroup(m), objects,
                      PermutationGroup(s) if dual_objects else None, dual_objects,
                      integral, method, PermutationGroup(m + s) if dual_objects else None)


def _object_names(cone_or_poly):
    if isinstance(cone_or_poly, PolyhedronData):
        if cone_or_poly.recession_rays:
            return cone_or_poly.cone, "extreme rays"
        return cone_or_poly.cone, "vertices of polyhedron"
    return cone_or_poly, "extreme rays"


def evaluation_table(vectors, forms):
    return [[la.dot(s, v) for s in forms] for v in vectors]


# ---------------------------------------------------------------------------
# integral


def _evaluation_group(rays, forms, specials, side):
    """Pair group (rays then forms) from the evaluation table on one side."""
    m, s = len(rays), len(forms)
    w = evaluation_table(rays, forms)
    if side == "ExtremeRays":
        cols = [[la.dot(g, y) for y in rays] for g in specials]
        return _bipartite_pairs(w, col_fixed_cols=cols)
    wt = [list(col) for col in zip(*w)] if m else [[] for _ in range(s)]
    rows = [[la.dot(g, y) for y in rays] for g in specials]
    dual = _bipartite_pairs(wt, row_fixed_rows=rows)
    return _swap_sides(dual, s, m)


def _validated(pairs, rays, forms, side):
    m = len(rays)
    for g in pairs.generators:
        pi, sigma = g[:m], tuple(x - m for x in g[m:])
        if side == "ExtremeRays":
            ok = is_unimodular_map(rays, pi)
        else:
            ok = is_unimodular_map(forms, sigma)
        if not ok:
            return False
    return True


def integral_automorphisms(cone, goal=None):
    """Integral automorphisms with the extreme-ray / support-form / Hilbert fallback."""
    goal = goal or AutoGoal(INTEGRAL)
    cone, objects = _object_names(cone)
    if cone.lineality_dim:
        raise ConeError("integral automorphisms need a pointed cone")
    rays = [list(y) for y in cone.extreme_gens]
    forms = [list(s) for s in cone.support_forms]
    m, s = len(rays), len(forms)
    if cone.working_dim == 0:
        return _trivial(INTEGRAL, objects, m, "support hyperplanes", s, "ExtremeRays", True)
    specials = _special_forms(cone, goal)
    sides = ["ExtremeRays", "SupportForms"] if m <= s else ["SupportForms", "ExtremeRays"]
    for side in sides:
        pairs = _evaluation_group(rays, forms, specials, side)
        if _validated(pairs, rays, forms, side):
            return _result_from_pairs(INTEGRAL, pairs, m, objects, True, side)
    res = hilbert_automorphisms(cone.with_hilbert_basis(), goal)
    return AutoResult(INTEGRAL, res.group, objects, res.dual_action, res.dual_objects,
                      True, "HilbertBasis", res.pair_group)


def _result_from_pairs(flavor, pairs, m, objects, integral, method, dual_objects="support hyperplanes"):
    pis, sigmas = _split(pairs, m)
    s = pairs.degree - m
    return AutoResult(flavor, PermutationGroup(m, pis), objects,
                      PermutationGroup(s, sigmas), dual_objects, integral, method, pairs)


def hilbert_automorphisms(cone, goal=None):
    """Exact integral automorphisms from the Hilbert basis against the support forms."""
    goal = goal or AutoGoal(INTEGRAL)
    cone, objects = _object_names(cone)
    if cone.hilbert_basis is None:
        cone = cone.with_hilbert_basis()
    hb = [list(x) for x in cone.hilbert_basis]
    rays = [list(y) for y in cone.extreme_gens]
    forms = [list(s) for s in cone.support_forms]
    n, m, s = len(hb), len(rays), len(forms)
    specials = _special_forms(cone, goal)
    w = evaluation_table(hb, forms)
    cols = [[la.dot(g, x) for x in hb] for g in specials]
    full = _bipartite_pairs(w, col_fixed_cols=cols)
    pos = [hb.index(y) for y in rays]
    keep = pos + [n + j for j in range(s)]
    pairs = PermutationGroup(m + s, [_strip(g, keep) for g in full.generators])
    return _result_from_pairs(INTEGRAL, pairs, m, objects, True, "HilbertBasis")


def transport_to_dual(result, cone):
    """Support-form action of an evaluation-preserving result, checked entrywise."""
    cone, _ = _object_names(cone)
    rays, forms = cone.extreme_gens, cone.support_forms
    w = evaluation_table(rays, forms)
    m = len(rays)
    for pi, sigma in result.pairs:
        for i in range(m):
            for j in range(len(forms)):
                if w[pi[i]][sigma[j]] != w[i][j]:
                    raise AssertionError("pair does not preserve the evaluation")
    return PermutationGroup(len(forms), [sigma for _, sigma in result.pairs])


# ---------------------------------------------------------------------------
# quadratic-form tables


def quadratic_form_table(vectors, special_forms=()):
    """Symmetric table ``w_ij = v_i^T Q^{-1} v_j`` with ``Q = sum v v^T``.

    Each special linear form ``g`` becomes an extra fixed vertex ``u = Q g``
    so that ``w(u, v) = g(v)``.
    """
    vs = [[Fraction(x) for x in v] for v in vectors]
    if not vs:
        return WeightTable.symmetric([])
    d = len(vs[0])
    q = [[sum(v[a] * v[b] for v in vs) for b in range(d)] for a in range(d)]
    if la.rank(q) < d:
        raise ConeError("vectors do not span the space")
    r = la.inverse(q)
    extra = [la.matvec(q, [Fraction(x) for x in g]) for g in special_forms]
    allv = vs + extra
    # integer arithmetic with one common scale
    den = 1
    for row in r:
        for x in row:
            den = lcm(den, x.denominator)
    vden = 1
    for v in allv:
        for x in v:
            vden = lcm(vden, x.denominator)
    ri = [[int(x * den) for x in row] for row in r]
    vi = [[int(x * vden) for x in v] for v in allv]
    scale = den * vden * vden
    vr = la.matmul(vi, ri)
    n = len(allv)
    w = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            x = Fraction(la.dot(vr[i], vi[j]), scale)
            w[i][j] = w[j][i] = x
    return WeightTable.symmetric(w, fixed=range(len(vs), n))


def _symmetric_group(table, n):
    g = automorphisms(table)
    return PermutationGroup(n, [g_[:n] for g_ in g.generators])


# ---------------------------------------------------------------------------
# rational / Euclidean / combinatorial


def rational_automorphisms(poly):
    """Vertex permutations induced by rational linear maps fixing the dehomogenization."""
    if not isinstance(poly, PolyhedronData):
        raise ConeError("rational automorphisms need a polytope (the cone group is infinite)")
    if not poly.is_polytope:
        raise ConeError("rational automorphisms need a bounded polyhedron")
    if poly.is_empty:
        return _trivial(RATIONAL, "vertices of polyhedron")
    verts = [list(v) for v in poly.vertices]
    delta = list(poly.cone.dehom_w)
    table = quadratic_form_table(verts, [delta])
    group = _symmetric_group(table, len(verts))
    for pi in group.generators:
        a = linear_map(verts, pi)
        if a is None:
            raise AssertionError("rational automorphism does not extend linearly")
        if la.matvec(a, delta) != [Fraction(x) for x in delta]:
            raise AssertionError("rational automorphism moves the dehomogenization")
    return AutoResult(RATIONAL, group, "vertices of polyhedron", method_used="QuadraticForm")


def squared_distance_table(points):
    pts = [[Fraction(x) for x in p] for p in points]
    den = 1
    for p in pts:
        for x in p:
            den = lcm(den, x.denominator)
    ints = [[int(x * den) for x in p] for p in pts]
    n = len(ints)
    big = max((abs(x) for p in ints for x in p), default=0)
    dim = len(ints[0]) if ints else 0
    if big * big * dim * 4 < 2 ** 62:
        a = np.array(ints, dtype=np.int64).reshape(n, dim)
        g = a @ a.T
        diag = np.diag(g)
        dist = diag[:, None] + diag[None, :] - 2 * g
        return [[int(x) for x in row] for row in dist]
    return [[sum((x - y) ** 2 for x, y in zip(p, q)) for q in ints] for p in ints]


def distinct_points(points):
    seen, out = set(), []
    for p in points:
        key = tuple(Fraction(x) for x in p)
        if key not in seen:
            seen.add(key)
            out.append(list(p))
    return out


def points_on_common_sphere(points):
    """True if the distinct points are equidistant from their centroid.

    Such points are all vertices of their convex hull, so no facet
    enumeration is needed to find the vertices.
    """
    pts = [[Fraction(x) for x in p] for p in distinct_points(points)]
    if len(pts) < 2:
        return bool(pts)
    n, d = len(pts), len(pts[0])
    c = [sum(p[j] for p in pts) / n for j in range(d)]
    r = {sum((x - y) ** 2 for x, y in zip(p, c)) for p in pts}
    return len(r) == 1


def euclidean_automorphisms(poly):
    """Vertex permutations preserving all squared distances.

    ``poly`` is a :class:`PolyhedronData` of a polytope or a sequence of points
    already known to be the vertices, in ambient coordinates.
    """
    if isinstance(poly, PolyhedronData):
        if poly.cone.lineality_dim:
            raise ConeError("Euclidean automorphisms need input that is a polytope as given")
        if not poly.is_polytope:
            raise ConeError("Euclidean automorphisms need a bounded polyhedron")
        points = poly.ambient_vertices()
    else:
        points = [list(p) for p in poly]
    if not points:
        return _trivial(EUCLIDEAN, "vertices of polyhedron")
    table = WeightTable.symmetric(squared_distance_table(points))
    group = _symmetric_group(table, len(points))
    return AutoResult(EUCLIDEAN, group, "vertices of polyhedron", method_used="SquaredDistances")


def combinatorial_automorphisms(cone_or_poly):
    """Permutations of extreme rays and facets preserving incidence."""
    cone, objects = _object_names(cone_or_poly)
    rays, forms = cone.extreme_gens, cone.support_forms
    m, s = len(rays), len(forms)
    if m == 0:
        return _trivial(COMBINATORIAL, objects, 0, "support hyperplanes", s, "Incidence")
    inc = [[1 if la.dot(f, y) == 0 else 0 for f in forms] for y in rays]
    cols = []
    if isinstance(cone_or_poly, PolyhedronData) and cone_or_poly.recession_rays:
        rec = set(cone_or_poly.recession_index)
        cols.append([0 if i in rec else 1 for i in range(m)])
    pairs = _bipartite_pairs(inc, col_fixed_cols=cols)
    return _result_from_pairs(COMBINATORIAL, pairs, m, objects, False, "Incidence")


# ---------------------------------------------------------------------------
# input-based


def _raw_rows(inp):
    if inp.generators is not None:
        return [list(g) for g in inp.generators], "input generators"
    return [list(a) for a in inp.inequalities], "inequalities"


def input_automorphisms(inp, goal=None):
    """Rational maps permuting the prepared input rows (no dualization)."""
    goal = goal or AutoGoal(INPUT)
    rows, name = _raw_rows(inp)
    d = inp.ambient_dim
    basis, coords = la.lattice_basis_of_span(rows, d)
    if not basis:
        raise ConeError("input rows span only the zero space")
    prepared = la.matmul(rows, coords)
    specials = []
    if inp.generators is not None:
        if goal.respect_grading and inp.grading is not None:
            specials.append(la.matvec(basis, inp.grading))
        if goal.respect_dehomogenization and inp.dehomogenization is not None:
            specials.append(la.matvec(basis, inp.dehomogenization))
    table = quadratic_form_table(prepared, specials)
    group = _symmetric_group(table, len(rows))
    for pi in group.generators:
        if linear_map(prepared, pi) is None:
            raise AssertionError("input automorphism does not extend linearly")
    return AutoResult(INPUT, group, name, method_used="QuadraticForm")


def ambient_automorphisms(inp, goal=None):
    """Coordinate permutations (with matching row permutations) preserving the raw input."""
    goal = goal or AutoGoal(AMBIENT)
    rows, name = _raw_rows(inp)
    d = inp.ambient_dim
    fixed_rows = []
    if goal.respect_grading and inp.grading is not None:
        fixed_rows.append(list(inp.grading))
    if goal.respect_dehomogenization and inp.dehomogenization is not None:
        fixed_rows.append(list(inp.dehomogenization))
    if not rows:
        return _trivial(AMBIENT, name, 0, "coordinates", d, "Raw")
    pairs = _bipartite_pairs(rows, row_fixed_rows=fixed_rows)
    return _result_from_pairs(AMBIENT, pairs, len(rows), name, False, "Raw", "coordinates")


def compute(flavor, obj, goal=None):
    """Dispatch by flavor name."""
    goal = goal or AutoGoal(flavor)
    if flavor == INTEGRAL:
        return integral_automorphisms(obj, goal)
    if flavor == RATIONAL:
        return rational_automorphisms(obj)
    if flavor == EUCLIDEAN:
        return euclidean_automorphisms(obj)
    if flavor == COMBINATORIAL:
        return combinatorial_automorphisms(obj)
    if flavor == INPUT:
        return input_automorphisms(obj, goal)
    if flavor == AMBIENT:
        return ambient_automorphisms(obj, goal)
    raise ValueError(flavor)


__all__ = [
    "AutoGoal", "AutoResult", "ConeData", "ConeInput", "FLAVORS", "distinct_points",
    "points_on_common_sphere",
    "ambient_automorphisms", "combinatorial_automorphisms", "compute",
    "euclidean_automorphisms", "hilbert_automorphisms", "input_automorphisms",
    "integral_automorphisms", "quadratic_form_table", "rational_automorphisms",
    "squared_distance_table", "transport_to_dual",
]
