"""Canonical types of cones and integral isomorphism tests.

The type of a cone is the table of support-form values on its Hilbert basis
(level ``Full``) or on its extreme rays (level ``ExtremeOnly``), brought into
canonical order.  Two cones with the same full type are integrally
isomorphic.  For the extreme-ray level the table alone can miss the lattice,
so a lattice tag (the smallest Hermite normal form of the image of ``Z^d``
under the evaluation map, over all canonical column orders) is attached.
"""

from dataclasses import dataclass

from . import linalg as la
from .cone import ConeData, ConeError, PolyhedronData
from .graphcanon import WeightTable, automorphisms, canonical_labeling

FULL = "Full"
EXTREME_ONLY = "ExtremeOnly"

ELEMENT_GUARD = 10 ** 6


def _cone(x):
    return x.cone if isinstance(x, PolyhedronData) else x


def _rows(cone, level):
    if level == FULL:
        if cone.hilbert_basis is None:
            cone = cone.with_hilbert_basis()
        return [list(x) for x in cone.hilbert_basis]
    if level == EXTREME_ONLY:
        return [list(y) for y in cone.extreme_gens]
    raise ValueError("unknown level %r" % level)


def _table(cone, rows, use_grading=True):
    forms = [list(s) for s in cone.support_forms]
    w = [[la.dot(s, x) for s in forms] for x in rows]
    fixed = []
    if use_grading and cone.grading_w is not None:
        for i, x in enumerate(rows):
            w[i].append(la.dot(cone.grading_w, x))
        fixed = [len(forms)]
    return WeightTable.bipartite(w, col_fixed=fixed)


def type_matrix(cone):
    """Support-form values on the Hilbert basis (grading column last, if any)."""
    cone = _cone(cone)
    return [list(r) for r in _table(cone, _rows(cone, FULL)).weights]


def etype_matrix(cone):
    """Support-form values on the extreme rays (grading column last, if any)."""
    cone = _cone(cone)
    return [list(r) for r in _table(cone, _rows(cone, EXTREME_ONLY)).weights]


@dataclass(frozen=True)
class CanonicalType:
    level: str
    matrix: tuple
    fixed_cols: int
    lattice_tag: tuple

    def serialize(self):
        m = len(self.matrix)
        s = len(self.matrix[0]) if m else 0
        lines = ["type %d %d %d" % (m, s, self.fixed_cols)]
        lines += [" ".join(str(x) for x in row) for row in self.matrix]
        lines.append("lattice %d" % len(self.lattice_tag))
        lines += [" ".join(str(x) for x in row) for row in self.lattice_tag]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text, level=FULL):
        tokens = text.split("\n")
        head = tokens[0].split()
        if head[0] != "type":
            raise ValueError("not a serialized type")
        m, _, f = (int(x) for x in head[1:4])
        matrix = tuple(tuple(int(x) for x in tokens[1 + i].split()) for i in range(m))
        lat = tokens[1 + m].split()
        k = int(lat[1])
        tag = tuple(tuple(int(x) for x in tokens[2 + m + i].split()) for i in range(k))
        return cls(level, matrix, f, tag)


def _embedding_columns(cone, use_grading):
    """Column j holds the values of column-form j on the unit vectors."""
    cols = [list(s) for s in cone.support_forms]
    if use_grading and cone.grading_w is not None:
        cols.append(list(cone.grading_w))
    return cols


def _tag(cols, order):
    d = len(cols[0]) if cols else 0
    mat = [[cols[j][k] for j in order] for k in range(d)]
    return tuple(tuple(r) for r in la.hnf_basis(mat))


def canonical_type(cone, level=FULL, use_grading=True):
    cone = _cone(cone)
    if cone.lineality_dim:
        raise ConeError("normal forms need a pointed cone")
    rows = _rows(cone, level)
    table = _table(cone, rows, use_grading)
    fixed = len(table.col_fixed)
    if not rows:
        return CanonicalType(level, (), fixed, ())
    group = automorphisms(table)
    lab = canonical_labeling(table, group)
    matrix = tuple(tuple(r) for r in lab.apply(table))
    d = cone.working_dim
    if la.generates_full_lattice(rows, d):
        # the evaluation lattice is the row lattice of the matrix itself
        tag = tuple(tuple(r) for r in la.hnf_basis([list(r) for r in matrix]))
    else:
        cols = _embedding_columns(cone, use_grading)
        n = table.nrows
        base = list(lab.col_order)
        tag = None
        for g in group.elements(limit=ELEMENT_GUARD):
            order = [g[n + j] - n for j in base]
            t = _tag(cols, order)
            if tag is None or t < tag:
                tag = t
    return CanonicalType(level, matrix, fixed, tag)


@dataclass(frozen=True)
class IsoResult:
    isomorphic: bool
    witness: tuple = None  # rows: image of the unit vectors (x -> x @ witness)
    reason: str = ""

    def __bool__(self):
        return self.isomorphic


def _matched_witness(c1, c2, level, use_grading):
    r1, r2 = _rows(c1, level), _rows(c2, level)
    t1, t2 = _table(c1, r1, use_grading), _table(c2, r2, use_grading)
    l1, l2 = canonical_labeling(t1), canonical_labeling(t2)
    if l1.apply(t1) != l2.apply(t2):
        return None
    src = [r1[i] for i in l1.row_order]
    dst = [r2[i] for i in l2.row_order]
    a = la.solve_linear(src, dst)
    if a is None or not la.is_integral(a):
        return None
    a = la.to_int(a)
    if abs(la.determinant(a)) != 1:
        return None
    return a


def maps_cone(c1, c2, a):
    """True if ``x -> x @ a`` sends the extreme rays of c1 onto those of c2."""
    img = {tuple(la.matmul([list(y)], a)[0]) for y in c1.extreme_gens}
    return img == {tuple(y) for y in c2.extreme_gens}


def is_isomorphic(first, second):
    """Integral isomorphism test with a verified witness matrix."""
    c1, c2 = _cone(first), _cone(second)
    if c1.lineality_dim or c2.lineality_dim:
        raise ConeError("isomorphism test needs pointed cones")
    if c1.working_dim != c2.working_dim:
        return IsoResult(False, reason="dimension")
    if c1.num_rays != c2.num_rays:
        return IsoResult(False, reason="extreme rays")
    if c1.num_facets != c2.num_facets:
        return IsoResult(False, reason="support hyperplanes")
    use_grading = c1.grading_w is not None and c2.grading_w is not None
    e1 = canonical_type(c1, EXTREME_ONLY, use_grading).matrix
    e2 = canonical_type(c2, EXTREME_ONLY, use_grading).matrix
    if e1 != e2:
        return IsoResult(False, reason="extreme type")
    if c1.working_dim == 0:
        return IsoResult(True, (), "zero cone")
    d = c1.working_dim
    rays_ok = all(la.generates_full_lattice([list(y) for y in c.extreme_gens], d) for c in (c1, c2))
    if rays_ok:
        a = _matched_witness(c1, c2, EXTREME_ONLY, use_grading)
        if a is None:
            raise AssertionError("matched extreme rays give no unimodular map")
        return _checked(c1, c2, a, "extreme rays generate the lattice")
    forms_ok = all(la.generates_full_lattice([list(s) for s in c.support_forms], d) for c in (c1, c2))
    if forms_ok:
        # unit-generated dual lattices: the matched forms pin the map
        a = _matched_witness(c1, c2, EXTREME_ONLY, use_grading)
        if a is not None:
            return _checked(c1, c2, a, "support forms generate the dual lattice")
    f1 = canonical_type(c1, FULL, use_grading).matrix
    f2 = canonical_type(c2, FULL, use_grading).matrix
    if f1 != f2:
        return IsoResult(False, reason="full type")
    a = _matched_witness(c1, c2, FULL, use_grading)
    if a is None:
        raise AssertionError("matched Hilbert bases give no unimodular map")
    return _checked(c1, c2, a, "full type")


def _checked(c1, c2, a, reason):
    if not maps_cone(c1, c2, a):
        raise AssertionError("witness does not map the cones onto each other")
    if c1.grading_w is not None and c2.grading_w is not None:
        # grading must be carried along: g2(x a) == g1(x)
        if la.matvec(a, list(c2.grading_w)) != list(c1.grading_w):
            raise AssertionError("witness does not respect the grading")
    return IsoResult(True, tuple(tuple(r) for r in a), reason)


__all__ = [
    "CanonicalType", "ConeData", "EXTREME_ONLY", "FULL", "IsoResult",
    "canonical_type", "etype_matrix", "is_isomorphic", "maps_cone", "type_matrix",
]
