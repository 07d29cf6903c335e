"""Example families: linear ordering polytopes and two small test cones."""

from itertools import combinations, permutations

from .cone import ConeInput, homogenize

WHITE = {
    "C": ((0, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (5, 1, 1, 1)),
    "D": ((0, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 1), (5, 2, 1, 1)),
}


def white_cone(name):
    """Cone over an empty lattice simplex of volume 5 (``"C"`` or ``"D"``)."""
    if name not in WHITE:
        raise ValueError("unknown cone %r, choose C or D" % name)
    return ConeInput(4, WHITE[name])


def linear_orders(n):
    return list(permutations(range(n)))


def _check_n(n):
    if not 3 <= n <= 7:
        raise ValueError("n must lie between 3 and 7, got %r" % n)


def order_vector(order, n, coordinates="projected"):
    pos = {x: k for k, x in enumerate(order)}
    if coordinates == "projected":
        return tuple(1 if pos[x] < pos[y] else 0 for x, y in combinations(range(n), 2))
    if coordinates == "full":
        return tuple(1 if x != y and pos[x] < pos[y] else 0 for x in range(n) for y in range(n))
    raise ValueError("coordinates must be 'projected' or 'full'")


def lo_vertices(n, coordinates="projected"):
    _check_n(n)
    return [order_vector(p, n, coordinates) for p in linear_orders(n)]


def lo_polytope(n, coordinates="projected"):
    """Homogenized input for the linear ordering polytope on ``n`` elements."""
    verts = lo_vertices(n, coordinates)
    return homogenize(len(verts[0]), vertices=verts)


def relabeling_and_duality_group(n):
    """Generators (on vertex indices) of relabelings together with order reversal."""
    _check_n(n)
    orders = linear_orders(n)
    index = {p: k for k, p in enumerate(orders)}
    gens = []
    for tau in ((1, 0) + tuple(range(2, n)), tuple(range(1, n)) + (0,)):
        gens.append(tuple(index[tuple(tau[x] for x in p)] for p in orders))
    gens.append(tuple(index[p[::-1]] for p in orders))
    return gens


def _fmt(x):
    return str(x)


def emit_input(inp, goals=(), polytope=None):
    """Text in the CLI input format.

    ``polytope`` may be a list of points; otherwise the cone generators or
    inequalities of ``inp`` are written.
    """
    lines = []
    if polytope is not None:
        d = len(polytope[0])
        lines.append("amb_space %d" % d)
        lines.append("polytope %d" % len(polytope))
        lines += [" ".join(_fmt(x) for x in p) for p in polytope]
    else:
        lines.append("amb_space %d" % inp.ambient_dim)
        if inp.generators is not None:
            lines.append("cone %d" % len(inp.generators))
            lines += [" ".join(_fmt(x) for x in g) for g in inp.generators]
        if inp.inequalities is not None:
            lines.append("inequalities %d" % len(inp.inequalities))
            lines += [" ".join(_fmt(x) for x in a) for a in inp.inequalities]
        if inp.grading is not None:
            lines.append("grading")
            lines.append(" ".join(_fmt(x) for x in inp.grading))
        if inp.dehomogenization is not None:
            lines.append("dehomogenization")
            lines.append(" ".join(_fmt(x) for x in inp.dehomogenization))
    lines += list(goals)
    return "\n".join(lines) + "\n"
