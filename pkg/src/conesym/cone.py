"""Rational cones and polyhedra in exact integer coordinates.

A :class:`ConeInput` holds raw data in ambient coordinates.  :func:`reduce`
turns it into a :class:`ConeData` living in working coordinates where the cone
is full dimensional and pointed and the lattice of reference is the standard
lattice.  Support forms and extreme rays come from the double description
method.
"""

from dataclasses import dataclass, field, replace
from fractions import Fraction

from . import linalg as la


class ConeError(ValueError):
    """Invalid cone data or a violated precondition."""


def _tuple2(m):
    return tuple(tuple(r) for r in m) if m is not None else None


@dataclass(frozen=True)
class ConeInput:
    ambient_dim: int
    generators: tuple = None
    inequalities: tuple = None
    grading: tuple = None
    dehomogenization: tuple = None

    def __post_init__(self):
        for name in ("generators", "inequalities"):
            object.__setattr__(self, name, _tuple2(getattr(self, name)))
        for name in ("grading", "dehomogenization"):
            v = getattr(self, name)
            if v is not None:
                v = tuple(v)
                if len(v) != self.ambient_dim:
                    raise ConeError("%s has %d entries, expected %d" % (name, len(v), self.ambient_dim))
                if not any(v):
                    raise ConeError("%s must be nonzero" % name)
                object.__setattr__(self, name, v)
        if self.generators is None and self.inequalities is None:
            raise ConeError("need generators or inequalities")
        for name in ("generators", "inequalities"):
            for row in getattr(self, name) or ():
                if len(row) != self.ambient_dim:
                    raise ConeError("%s row %r has %d entries, expected %d"
                                    % (name, row, len(row), self.ambient_dim))


@dataclass(frozen=True)
class ConeData:
    working_dim: int
    generators: tuple
    support_forms: tuple
    extreme_gens: tuple
    to_working: tuple
    from_working: tuple
    ambient_dim: int
    grading_w: tuple = None
    dehom_w: tuple = None
    hilbert_basis: tuple = None
    lineality_dim: int = 0
    source: ConeInput = field(default=None, compare=False, repr=False)

    @property
    def num_rays(self):
        return len(self.extreme_gens)

    @property
    def num_facets(self):
        return len(self.support_forms)

    def with_hilbert_basis(self):
        """Return a copy carrying the Hilbert basis."""
        if self.hilbert_basis is not None:
            return self
        from .hilbert import hilbert_basis
        return replace(self, hilbert_basis=_tuple2(hilbert_basis(self)))

    def ambient(self, v):
        """Lift a working-coordinate vector to ambient coordinates."""
        return [sum(Fraction(x) * f[j] for x, f in zip(v, self.from_working))
                if self.working_dim else 0 for j in range(self.ambient_dim)]

    def ambient_forms(self):
        """Support forms as linear forms on the ambient space."""
        t = self.to_working
        return [[sum(t[i][k] * s[k] for k in range(self.working_dim))
                 for i in range(self.ambient_dim)] for s in self.support_forms]


@dataclass(frozen=True)
class PolyhedronData:
    cone: ConeData
    vertices: tuple  # Fraction rows, working coordinates, dehomogenization 1
    recession_rays: tuple
    vertex_index: tuple  # positions in cone.extreme_gens
    recession_index: tuple

    @property
    def is_polytope(self):
        return not self.recession_rays and self.cone.lineality_dim == 0

    @property
    def is_empty(self):
        return not self.vertices

    def ambient_vertices(self):
        return [self.cone.ambient(v) for v in self.vertices]


# ---------------------------------------------------------------------------
# double description


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def dd_rays(ineqs, dim):
    """Extreme rays of the pointed cone ``{x : a.x >= 0 for a in ineqs}``.

    Inequalities are inserted in their given order; adjacency of a positive
    and a negative ray is decided combinatorially (no third ray is tight on
    every inequality where both are tight).  Rays are primitive.
    """
    rows = []
    for a in ineqs:
        a = list(a)
        if any(a) and a not in rows:
            rows.append(a)
    if dim == 0:
        return []
    basis = la.independent_rows(rows)[:dim]
    if len(basis) < dim:
        raise ConeError("inequality system does not define a pointed cone")
    inv = la.inverse([rows[i] for i in basis])
    rays, zeros = [], []
    all_basis = 0
    for i in basis:
        all_basis |= 1 << i
    for k in range(dim):
        col = [inv[j][k] for j in range(dim)]
        rays.append(la.primitive_rational(col))
        zeros.append(all_basis & ~(1 << basis[k]))
    done = set(basis)
    for idx, a in enumerate(rows):
        if idx in done:
            continue
        vals = [la.dot(a, r) for r in rays]
        pos = [k for k, x in enumerate(vals) if x > 0]
        neg = [k for k, x in enumerate(vals) if x < 0]
        bit = 1 << idx
        if not neg:
            zeros = [z | bit if vals[k] == 0 else z for k, z in enumerate(zeros)]
            continue
        inc = {}
        for k, z in enumerate(zeros):
            for b in _bits(z):
                inc[b] = inc.get(b, 0) | (1 << k)
        everyone = (1 << len(rays)) - 1
        new_rays, new_zeros = [], []
        for p in pos:
            for n in neg:
                common = zeros[p] & zeros[n]
                if common.bit_count() < dim - 2:
                    continue
                holders = everyone
                for b in _bits(common):
                    holders &= inc[b]
                    if holders == (1 << p) | (1 << n):
                        break
                if holders != (1 << p) | (1 << n):
                    continue
                vp, vn = vals[p], vals[n]
                r = [vp * x - vn * y for x, y in zip(rays[n], rays[p])]
                new_rays.append(la.primitive_vector(r))
                new_zeros.append(common | bit)
        keep = [k for k, x in enumerate(vals) if x >= 0]
        rays = [rays[k] for k in keep] + new_rays
        zeros = [zeros[k] | bit if vals[k] == 0 else zeros[k] for k in keep] + new_zeros
        done.add(idx)
    return rays


def support_forms(generators, dim):
    """Primitive support forms of the full-dimensional cone spanned by ``generators``."""
    return dd_rays(generators, dim)


def _tight(forms, v):
    return [j for j, s in enumerate(forms) if la.dot(s, v) == 0]


def extreme_rays(generators, forms, dim):
    """Primitive extreme generators among ``generators`` in first-seen order."""
    out = []
    for g in generators:
        if not any(g):
            continue
        y = la.primitive_vector(list(g))
        if y in out:
            continue
        z = _tight(forms, y)
        if la.rank([forms[j] for j in z]) == dim - 1:
            out.append(y)
    return out


def incidence(rays, forms):
    """0/1 matrix: entry (i, j) is 1 iff ray i lies on facet j."""
    return [[1 if la.dot(s, y) == 0 else 0 for s in forms] for y in rays]


def dual_description(cone):
    return [list(s) for s in cone.support_forms]


# ---------------------------------------------------------------------------
# coordinate reduction


def homogenize(dim, vertices=None, inequalities=None, grading=None):
    """Cone over a polyhedron in ``R^dim``.

    ``vertices`` are points (ints or Fractions); ``inequalities`` are rows
    ``(a_1, ..., a_dim, b)`` meaning ``a.x + b >= 0``.  The result lives in
    ``R^(dim+1)`` with dehomogenization the last coordinate.
    """
    if not vertices and not inequalities:
        raise ConeError("empty polyhedron description")
    gens = None
    if vertices:
        gens = []
        for v in vertices:
            if len(v) != dim:
                raise ConeError("vertex %r has %d entries, expected %d" % (v, len(v), dim))
            gens.append(la.primitive_rational(list(v) + [1]))
    ineqs = None
    if inequalities:
        ineqs = []
        for a in inequalities:
            if len(a) != dim + 1:
                raise ConeError("inequality %r needs %d entries" % (a, dim + 1))
            ineqs.append(la.primitive_rational(a) if any(a) else list(a))
        ineqs.append([0] * dim + [1])
    dehom = [0] * dim + [1]
    if grading is not None:
        grading = list(grading) + [0] if len(grading) == dim else list(grading)
    return ConeInput(dim + 1, gens, ineqs, grading, dehom)


def _generators_from_inequalities(ineqs, d):
    lin = la.kernel_basis(ineqs, d)
    system = [list(a) for a in ineqs] + lin + [[-x for x in k] for k in lin]
    rays = dd_rays(system, d) if d else []
    return rays + lin + [[-x for x in k] for k in lin]


def _span_equations(gens, d):
    return la.kernel_basis(gens, d) if gens else la.identity(d)


def reduce(inp):
    """Pass to full-dimensional pointed working coordinates."""
    d = inp.ambient_dim
    if inp.inequalities is not None:
        ineqs = [list(a) for a in inp.inequalities]
        if inp.generators is not None:
            # intersection with the cone of the given generators
            gens0 = [list(g) for g in inp.generators if any(g)]
            sub = reduce(ConeInput(d, gens0 or [[0] * d]))
            ineqs += sub.ambient_forms()
            eqs = _span_equations(gens0, d)
            ineqs += eqs + [[-x for x in e] for e in eqs]
        gens = _generators_from_inequalities(ineqs, d)
        raw = gens
    else:
        gens = [list(g) for g in inp.generators]
        raw = gens
    gens = [g for g in gens if any(g)]
    basis, t1 = la.lattice_basis_of_span(gens, d)
    r = len(basis)
    g1 = [la.matmul([g], t1)[0] for g in gens] if r else []
    s1 = support_forms(g1, r) if r else []
    if r and not s1:
        # the cone is the whole span: pointed quotient is zero
        r2, t2, l2, forms = 0, [[] for _ in range(r)], [], []
        lin_dim = r
    else:
        r2 = la.rank(s1) if s1 else 0
        lin_dim = r - r2
        if lin_dim:
            _, _, p = la.smith_normal_form(s1)
            sp = la.matmul(s1, p)
            forms = [la.primitive_vector(row[:r2]) for row in sp]
            pinv = la.to_int(la.inverse(p))
            t2 = [[pinv[k][j] for k in range(r2)] for j in range(r)]
            l2 = [[p[j][k] for j in range(r)] for k in range(r2)]
        else:
            forms = s1
            t2 = la.identity(r)
            l2 = la.identity(r)
    to_w = la.matmul(t1, t2) if r and r2 else [[] for _ in range(d)]
    from_w = la.matmul(l2, basis) if r2 else []
    work = [la.matmul([g], to_w)[0] if r2 else [] for g in raw]
    ext = extreme_rays(work, forms, r2) if r2 else []

    lin_vectors = []
    if lin_dim and r2 < r:
        if r2 == 0:
            lin_vectors = basis
        else:
            lin_vectors = la.matmul([[p[j][k] for j in range(r)] for k in range(r2, r)], basis)

    def to_form(name, v):
        if v is None:
            return None
        if any(la.dot(v, x) for x in lin_vectors):
            raise ConeError("%s is not %s on the cone" % (
                name, "positive" if name == "grading" else "nonnegative"))
        return tuple(la.matvec(from_w, v)) if r2 else ()

    grading_w = to_form("grading", inp.grading)
    dehom_w = to_form("dehomogenization", inp.dehomogenization)
    if grading_w is not None:
        if lin_dim:
            raise ConeError("grading is not positive on the cone (nonzero lineality)")
        if any(la.dot(grading_w, y) <= 0 for y in ext):
            raise ConeError("grading is not positive on the cone")
    if dehom_w is not None and any(la.dot(dehom_w, y) < 0 for y in ext):
        raise ConeError("dehomogenization is negative on the cone")
    return ConeData(
        working_dim=r2,
        generators=_tuple2(work),
        support_forms=_tuple2(forms),
        extreme_gens=_tuple2(ext),
        to_working=_tuple2(to_w),
        from_working=_tuple2(from_w),
        ambient_dim=d,
        grading_w=grading_w,
        dehom_w=dehom_w,
        lineality_dim=lin_dim,
        source=inp,
    )


def from_working_data(gens, grading=None, dehomogenization=None):
    """Convenience: reduce a generator list given directly."""
    d = len(gens[0])
    return reduce(ConeInput(d, gens, grading=grading, dehomogenization=dehomogenization))


def build_polyhedron(inp):
    """Reduce a homogenized polyhedron and split its rays into vertices and recession rays."""
    if inp.dehomogenization is None:
        raise ConeError("polyhedron input needs a dehomogenization")
    cone = reduce(inp)
    delta = cone.dehom_w
    verts, rec, vi, ri = [], [], [], []
    for k, y in enumerate(cone.extreme_gens):
        h = la.dot(delta, y)
        if h > 0:
            verts.append(tuple(Fraction(x, h) for x in y))
            vi.append(k)
        else:
            rec.append(tuple(y))
            ri.append(k)
    if not verts:
        # empty polyhedron: the cone over it is {0}
        cone = ConeData(0, (), (), (), tuple(() for _ in range(inp.ambient_dim)), (),
                        inp.ambient_dim, () if inp.grading else None, (), source=inp)
        rec, ri = [], []
    poly = PolyhedronData(cone, tuple(verts), tuple(rec), tuple(vi), tuple(ri))
    for v in poly.vertices:
        assert la.dot(delta, v) == 1
    for y in poly.recession_rays:
        assert la.dot(delta, y) == 0
    return poly
