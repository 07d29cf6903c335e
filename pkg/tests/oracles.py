"""Brute-force reference computations, independent of the package algorithms."""

from itertools import combinations, permutations, product

import sympy


def mat_rank(rows):
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def facets_by_subsets(gens):
    """Primitive facet normals of a full-dimensional pointed cone by trying all (d-1)-subsets."""
    d = len(gens[0])
    out = set()
    for sub in combinations(gens, d - 1):
        if mat_rank(list(sub)) != d - 1:
            continue
        ns = sympy.Matrix(list(sub)).nullspace()
        v = ns[0]
        den = sympy.ilcm(*[x.q for x in v])
        v = [int(x * den) for x in v]
        g = 0
        for x in v:
            g = sympy.igcd(g, x)
        v = [x // g for x in v]
        vals = [sum(a * b for a, b in zip(v, y)) for y in gens]
        if all(x >= 0 for x in vals):
            out.add(tuple(v))
        elif all(x <= 0 for x in vals):
            out.add(tuple(-x for x in v))
    return out


def primitive(v):
    g = 0
    for x in v:
        g = sympy.igcd(g, x)
    return tuple(x // g for x in v)


def extreme_rays_by_faces(gens):
    facets = facets_by_subsets(gens)
    d = len(gens[0])
    rays = set()
    for y in gens:
        if not any(y):
            continue
        tight = [f for f in facets if sum(a * b for a, b in zip(f, y)) == 0]
        if mat_rank(tight) == d - 1:
            rays.add(primitive(y))
    return rays


def unimodular_map(src, dst):
    """Integral unimodular A with src @ A == dst (src of full rank), else None."""
    a = sympy.Matrix(src)
    b = sympy.Matrix(dst)
    try:
        sol, params = a.gauss_jordan_solve(b)
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    if a * sol != b:
        return None
    if any(x.q != 1 for x in sol):
        return None
    if abs(sol.det()) != 1:
        return None
    return sol


def integral_automorphism_pairs(rays, forms):
    """All (ray permutation, form permutation) pairs of integral automorphisms."""
    out = set()
    fidx = {tuple(f): j for j, f in enumerate(forms)}
    for pi in permutations(range(len(rays))):
        a = unimodular_map([list(y) for y in rays], [list(rays[i]) for i in pi])
        if a is None:
            continue
        sigma = []
        for f in forms:
            # find j with f(x) == forms[j](x a) for all x, i.e. f == a forms[j]
            img = None
            for g in forms:
                if list(a * sympy.Matrix(g)) == list(f):
                    img = fidx[tuple(g)]
            sigma.append(img)
        assert None not in sigma
        out.add((tuple(pi), tuple(sigma)))
    return out


def group_closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def hilbert_basis_by_box(gens):
    """Irreducible lattice points of the cone, searched in a box that contains them."""
    facets = sorted(facets_by_subsets(gens))
    d = len(gens[0])
    deg = [sum(f[k] for f in facets) for k in range(d)]
    rays = sorted(extreme_rays_by_faces(gens))
    k = sum(max(abs(x) for x in y) for y in rays)
    top = sum(sorted((sum(a * b for a, b in zip(deg, y)) for y in rays), reverse=True)[:d])

    def inside(x):
        return all(sum(a * b for a, b in zip(f, x)) >= 0 for f in facets)

    pts = []
    for x in product(range(-k, k + 1), repeat=d):
        if any(x) and inside(x):
            dg = sum(a * b for a, b in zip(deg, x))
            if dg <= top:
                pts.append((dg, x))
    pts.sort()
    ptset = {x for _, x in pts}
    basis = []
    for dg, x in pts:
        red = False
        for _, y in pts:
            if y == x:
                break
            z = tuple(a - b for a, b in zip(x, y))
            if any(z) and (z in ptset or inside(z)):
                red = True
                break
        if not red:
            basis.append(list(x))
    return sorted(basis)


def brute_lex_max(table):
    """Greatest matrix over all row and column orders (small tables only)."""
    n, s = len(table), len(table[0])
    best = None
    for rp in permutations(range(n)):
        for cp in permutations(range(s)):
            m = tuple(tuple(table[i][j] for j in cp) for i in rp)
            if best is None or m > best:
                best = m
    return [list(r) for r in best]


def brute_table_automorphisms(table):
    n, s = len(table), len(table[0])
    out = set()
    for rp in permutations(range(n)):
        for cp in permutations(range(s)):
            if all(table[rp[i]][cp[j]] == table[i][j] for i in range(n) for j in range(s)):
                out.add(rp + tuple(n + j for j in cp))
    return out
