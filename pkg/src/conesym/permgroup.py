"""Permutation groups given by generators.

Permutations are tuples of images on ``range(degree)``.  The product
``mul(p, q)`` applies ``p`` first, then ``q``.  Reports use 1-based points.
"""

from itertools import product as _cartesian
from math import gcd, prod


def identity_perm(n):
    return tuple(range(n))


def mul(p, q):
    """``p`` then ``q``."""
    return tuple(q[i] for i in p)


def inv(p):
    r = [0] * len(p)
    for i, j in enumerate(p):
        r[j] = i
    return tuple(r)


def is_identity(p):
    return all(i == j for i, j in enumerate(p))


def check_perm(p, degree=None):
    if sorted(p) != list(range(len(p))):
        raise ValueError("not a permutation: %r" % (p,))
    if degree is not None and len(p) != degree:
        raise ValueError("permutation has degree %d, expected %d" % (len(p), degree))


def cycle_decomposition(p):
    """Nontrivial cycles of ``p`` (0-based), each starting at its minimum."""
    seen = set()
    cycles = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        cycles.append(tuple(cyc))
    return cycles


def perm_order(p):
    o = 1
    for c in cycle_decomposition(p):
        o = o * len(c) // gcd(o, len(c))
    return o


def from_cycles(degree, cycles, one_based=True):
    img = list(range(degree))
    off = 1 if one_based else 0
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - off] = b - off
    return tuple(img)


class _Chain:
    """Base and strong generating set with explicit transversals."""

    def __init__(self, degree, gens, base_prefix=()):
        self.degree = degree
        self.base = list(base_prefix)
        self.strong = []
        self.levels = []  # per base point: generators fixing earlier base points
        self.transversals = []
        for g in gens:
            if not is_identity(g) and g not in self.strong:
                self.strong.append(g)
        self._build()

    def _first_moved(self, g):
        return next(i for i, j in enumerate(g) if i != j)

    def _orbit(self, point, gens):
        trans = {point: identity_perm(self.degree)}
        queue = [point]
        for b in queue:
            ub = trans[b]
            for s in gens:
                c = s[b]
                if c not in trans:
                    trans[c] = mul(ub, s)
                    queue.append(c)
        return trans

    def _fixes_prefix(self, g, k):
        return all(g[b] == b for b in self.base[:k])

    def _build(self):
        for g in self.strong:
            if self._fixes_prefix(g, len(self.base)):
                self.base.append(self._first_moved(g))
        k = len(self.base)
        self.levels = [[g for g in self.strong if self._fixes_prefix(g, i)] for i in range(k)]
        self.transversals = [self._orbit(self.base[i], self.levels[i]) for i in range(k)]
        i = k - 1
        while i >= 0:
            restart = False
            trans = self.transversals[i]
            for beta in list(trans):
                ub = trans[beta]
                for s in self.levels[i]:
                    h = mul(mul(ub, s), inv(trans[s[beta]]))
                    if is_identity(h):
                        continue
                    h, j = self.sift(h, i + 1)
                    if j < len(self.base) or not is_identity(h):
                        if j == len(self.base):
                            self.base.append(self._first_moved(h))
                            self.levels.append([])
                            self.transversals.append({})
                        self.strong.append(h)
                        for level in range(i + 1, j + 1):
                            self.levels[level].append(h)
                            self.transversals[level] = self._orbit(
                                self.base[level], self.levels[level])
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    def sift(self, g, start=0):
        for i in range(start, len(self.base)):
            beta = g[self.base[i]]
            u = self.transversals[i].get(beta)
            if u is None:
                return g, i
            g = mul(g, inv(u))
        return g, len(self.base)

    def order(self):
        return prod(len(t) for t in self.transversals)


class PermutationGroup:
    """A permutation group on ``range(degree)`` given by generators."""

    def __init__(self, degree, generators=()):
        self.degree = degree
        gens = []
        for g in generators:
            g = tuple(g)
            check_perm(g, degree)
            if not is_identity(g) and g not in gens:
                gens.append(g)
        self.generators = tuple(gens)
        self._chain = None
        self._orbits = None

    def __repr__(self):
        return "PermutationGroup(degree=%d, %d generators)" % (self.degree, len(self.generators))

    def chain(self):
        if self._chain is None:
            self._chain = _Chain(self.degree, self.generators)
        return self._chain

    def order(self):
        return self.chain().order()

    def contains(self, p):
        p = tuple(p)
        if len(p) != self.degree:
            return False
        h, j = self.chain().sift(p)
        return j == len(self.chain().base) and is_identity(h)

    def is_subgroup_of(self, other):
        return all(other.contains(g) for g in self.generators)

    def orbits(self):
        """Orbit partition, orbits sorted ascending and by minimum."""
        if self._orbits is None:
            parent = list(range(self.degree))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for g in self.generators:
                for i, j in enumerate(g):
                    a, b = find(i), find(j)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
            groups = {}
            for i in range(self.degree):
                groups.setdefault(find(i), []).append(i)
            self._orbits = sorted(groups.values(), key=lambda o: o[0])
        return [list(o) for o in self._orbits]

    def orbit(self, point):
        return next(o for o in self.orbits() if point in o)

    def stabilizer(self, point):
        """Pointwise stabilizer of ``point``."""
        ch = _Chain(self.degree, self.generators, base_prefix=(point,))
        return PermutationGroup(self.degree, ch.levels[1] if len(ch.levels) > 1 else ())

    def pointwise_stabilizer(self, points):
        points = list(points)
        ch = _Chain(self.degree, self.generators, base_prefix=points)
        k = len(points)
        return PermutationGroup(self.degree, ch.levels[k] if len(ch.levels) > k else ())

    def is_abelian(self):
        gens = self.generators
        return all(mul(a, b) == mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1:])

    def elements(self, limit=10 ** 6):
        """All group elements; refuses groups larger than ``limit``."""
        n = self.order()
        if n > limit:
            raise ValueError("group of order %d exceeds enumeration limit %d" % (n, limit))
        ch = self.chain()
        levels = [list(t.values()) for t in ch.transversals]
        out = []
        for combo in _cartesian(*reversed(levels)):
            g = identity_perm(self.degree)
            for u in combo:
                g = mul(g, u)
            out.append(g)
        return out

    def element_orders(self, limit=10 ** 6):
        """Map element order -> number of elements of that order."""
        counts = {}
        for g in self.elements(limit):
            o = perm_order(g)
            counts[o] = counts.get(o, 0) + 1
        return dict(sorted(counts.items()))

    def restrict(self, points):
        """Action on an invariant subset ``points`` (relabelled 0..len-1)."""
        points = list(points)
        index = {p: k for k, p in enumerate(points)}
        gens = []
        for g in self.generators:
            try:
                gens.append(tuple(index[g[p]] for p in points))
            except KeyError:
                raise ValueError("point set is not invariant") from None
        return PermutationGroup(len(points), gens)


def closure_size(degree, generators, limit=10 ** 5):
    """Brute-force size of the generated group (test oracle)."""
    e = identity_perm(degree)
    seen = {e}
    frontier = [e]
    gens = [tuple(g) for g in generators]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > limit:
                        raise ValueError("closure exceeds limit")
        frontier = nxt
    return len(seen)
