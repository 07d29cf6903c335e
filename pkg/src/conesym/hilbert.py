"""Hilbert bases of pointed full-dimensional cones.

A placing triangulation over the extreme rays splits the cone into simplicial
pieces; the lattice points of each half-open fundamental parallelepiped
together with the extreme rays generate the monoid, and the irreducible ones
form the Hilbert basis.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import linalg as la
from .cone import ConeError


@dataclass(frozen=True)
class SimplicialPiece:
    rays: tuple
    det: int

    @classmethod
    def from_rays(cls, rays):
        rays = tuple(tuple(r) for r in rays)
        det = abs(la.determinant([list(r) for r in rays]))
        if det == 0:
            raise ValueError("rays of a simplicial piece must be independent")
        return cls(rays, det)


def _facet_form(rays, opposite):
    """Integral form vanishing on ``rays`` and positive on ``opposite``."""
    d = len(opposite)
    ker = la.kernel_basis(rays, d)
    f = ker[0]
    if la.dot(f, opposite) < 0:
        f = [-x for x in f]
    return f


def triangulate(cone):
    """Placing triangulation of the cone over its extreme rays, in ray order."""
    d = cone.working_dim
    rays = [list(y) for y in cone.extreme_gens]
    if d == 0:
        return []
    start = la.independent_rows(rays)[:d]
    if len(start) < d:
        raise ConeError("cone is not full dimensional")
    simplices = [tuple(start)]
    used = set(start)
    for k in range(len(rays)):
        if k in used:
            continue
        faces = {}
        for simp in simplices:
            for drop in simp:
                face = tuple(sorted(x for x in simp if x != drop))
                faces.setdefault(face, []).append((simp, drop))
        added = []
        for face, owners in faces.items():
            if len(owners) != 1:
                continue
            _, drop = owners[0]
            f = _facet_form([rays[x] for x in face], rays[drop]) if d > 1 else [1 if rays[drop][0] > 0 else -1]
            if la.dot(f, rays[k]) < 0:
                added.append(tuple(sorted(face + (k,))))
        simplices.extend(added)
        used.add(k)
    return [SimplicialPiece.from_rays([rays[x] for x in simp]) for simp in simplices]


def parallelepiped_points(piece):
    """Lattice points of the half-open parallelepiped spanned by the piece's rays."""
    m = [list(r) for r in piece.rays]
    d = len(m)
    u, dm, v = la.smith_normal_form(m)
    vinv = la.to_int(la.inverse(v))
    minv = la.inverse(m)
    divisors = [dm[i][i] for i in range(d)]
    points = []
    for a in product(*(range(x) for x in divisors)):
        x = la.matmul([list(a)], vinv)[0]
        lam = la.matmul([x], minv)[0]
        frac = [c - (c.numerator // c.denominator) for c in lam]
        p = la.matmul([frac], m)[0]
        points.append([int(Fraction(c)) for c in p])
    return sorted(points)


def _degree_form(cone):
    if cone.grading_w is not None:
        return list(cone.grading_w)
    # total support-form value is positive on every nonzero cone point
    d = cone.working_dim
    return [sum(s[j] for s in cone.support_forms) for j in range(d)]


def in_cone(cone, x):
    return all(la.dot(s, x) >= 0 for s in cone.support_forms)


def hilbert_basis(cone):
    """Hilbert basis of ``cone`` as lexicographically sorted rows."""
    if cone.lineality_dim:
        raise ConeError("Hilbert basis needs a pointed cone")
    d = cone.working_dim
    if d == 0:
        return []
    cands = {tuple(y) for y in cone.extreme_gens}
    for piece in triangulate(cone):
        for p in parallelepiped_points(piece):
            if any(p):
                cands.add(tuple(p))
    deg = _degree_form(cone)
    forms = cone.support_forms
    ordered = sorted(cands, key=lambda x: (la.dot(deg, x), x))
    basis = []
    for x in ordered:
        vx = [la.dot(s, x) for s in forms]
        reducible = False
        for h, vh in basis:
            if la.dot(deg, h) >= la.dot(deg, x):
                continue
            if all(a >= b for a, b in zip(vx, vh)):
                reducible = True
                break
        if not reducible:
            basis.append((x, vx))
    return sorted(list(h) for h, _ in basis)
