"""Automorphisms and canonical labelings of weighted complete graphs.

Two kinds of tables are handled:

* ``bipartite``: rows and columns are separate vertex classes, ``weights[i][j]``
  is the weight of the edge between row ``i`` and column ``j``.
* ``symmetric``: one vertex class, ``weights`` is a symmetric square matrix
  (the diagonal carries loop weights).

Weights are arbitrary comparable values (ints, Fractions).  They are first
compressed to their index in the sorted list of distinct weights.  Groups are
computed by colour refinement plus individualization-refinement search;
canonical labelings are the lexicographically greatest reordering of the
weight matrix, found by a branch-and-bound over rows that prunes with the
automorphism group.
"""

from dataclasses import dataclass, field

import numpy as np

from .permgroup import PermutationGroup


@dataclass(frozen=True)
class WeightTable:
    kind: str  # "bipartite" or "symmetric"
    weights: tuple
    row_fixed: tuple = ()
    col_fixed: tuple = ()

    def __post_init__(self):
        w = tuple(tuple(r) for r in self.weights)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "row_fixed", tuple(sorted(set(self.row_fixed))))
        object.__setattr__(self, "col_fixed", tuple(sorted(set(self.col_fixed))))
        if self.kind not in ("bipartite", "symmetric"):
            raise ValueError("unknown table kind %r" % self.kind)
        if w and len({len(r) for r in w}) != 1:
            raise ValueError("ragged weight table")
        if self.kind == "symmetric":
            n = len(w)
            if any(len(r) != n for r in w):
                raise ValueError("symmetric table must be square")
            if any(w[i][j] != w[j][i] for i in range(n) for j in range(i)):
                raise ValueError("symmetric table is not symmetric")
            if self.col_fixed and self.col_fixed != self.row_fixed:
                raise ValueError("symmetric table takes one fixed list")
        for f, n in ((self.row_fixed, self.nrows), (self.col_fixed, self.ncols)):
            if any(not 0 <= i < n for i in f):
                raise ValueError("fixed vertex out of range")

    @property
    def nrows(self):
        return len(self.weights)

    @property
    def ncols(self):
        if self.kind == "symmetric":
            return len(self.weights)
        return len(self.weights[0]) if self.weights else 0

    @classmethod
    def bipartite(cls, weights, row_fixed=(), col_fixed=()):
        return cls("bipartite", weights, row_fixed, col_fixed)

    @classmethod
    def symmetric(cls, weights, fixed=()):
        return cls("symmetric", weights, fixed, fixed)


@dataclass(frozen=True)
class CompressedTable:
    codes: tuple
    palette: tuple

    def decompress(self):
        return [[self.palette[c] for c in row] for row in self.codes]


@dataclass(frozen=True)
class Labeling:
    """``row_order[p]`` is the original row placed at position ``p``."""
    row_order: tuple
    col_order: tuple = field(default=())

    def apply(self, table):
        w = table.weights
        cols = self.col_order if table.kind == "bipartite" else self.row_order
        return [[w[i][j] for j in cols] for i in self.row_order]


def compress(table):
    """Replace each weight by its index in the sorted list of distinct weights."""
    palette = sorted({x for row in table.weights for x in row})
    index = {x: k for k, x in enumerate(palette)}
    codes = tuple(tuple(index[x] for x in row) for row in table.weights)
    return CompressedTable(codes, tuple(palette))


# ---------------------------------------------------------------------------
# graph encoding and refinement


def _encode(table):
    """Symmetric code matrix and initial colouring on all vertices.

    Bipartite tables become a complete graph on rows + columns whose
    row-row and column-column edges carry a weight below every real one.
    """
    comp = compress(table)
    codes = np.array(comp.codes, dtype=np.int64).reshape(table.nrows, table.ncols)
    if table.kind == "symmetric":
        n = table.nrows
        a = codes
        colors = np.zeros(n, dtype=np.int64)
        fixed = list(table.row_fixed)
    else:
        n, s = table.nrows, table.ncols
        a = np.zeros((n + s, n + s), dtype=np.int64)
        if n and s:
            a[:n, n:] = codes + 1
            a[n:, :n] = (codes + 1).T
        colors = np.zeros(n + s, dtype=np.int64)
        colors[n:] = 1
        fixed = list(table.row_fixed) + [n + j for j in table.col_fixed]
    # fixed vertices get private colours after all free ones
    top = int(colors.max()) + 1 if len(colors) else 0
    for k, v in enumerate(fixed):
        colors[v] = top + k
    return a, colors


def _ranks(keys):
    _, inverse = np.unique(keys, axis=0, return_inverse=True)
    return inverse.reshape(-1).astype(np.int64)


def refine(a, colors):
    """Coarsest equitable refinement; colours are isomorphism-invariant ranks."""
    n = len(colors)
    if n == 0:
        return colors
    c = _ranks(colors.reshape(-1, 1))
    k = int(c.max()) + 1
    base = int(a.max()) + 1 if a.size else 1
    while True:
        keys = c[None, :] * base + a
        keys.sort(axis=1)
        c2 = _ranks(np.concatenate([c[:, None], keys], axis=1))
        k2 = int(c2.max()) + 1
        if k2 == k:
            return c2
        c, k = c2, k2


def _individualize(a, colors, v):
    c = colors * 2 + 1
    c[v] -= 1
    return refine(a, c)


def _target_cell(colors):
    """Vertices of the largest non-singleton cell (ties: smallest colour)."""
    counts = np.bincount(colors)
    if counts.max() <= 1:
        return None
    size = counts.max()
    color = int(np.flatnonzero(counts == size)[0])
    return [int(v) for v in np.flatnonzero(colors == color)]


def _is_automorphism(a, init, g):
    return np.array_equal(init[g], init) and np.array_equal(a[np.ix_(g, g)], a)


class _Search:
    def __init__(self, a, init):
        self.a = a
        self.init = init
        self.n = len(init)

    def run(self):
        n = self.n
        gens = []
        if n == 0:
            return gens
        c = refine(self.a, self.init)
        path, colorings, cells = [], [c], []
        while True:
            cell = _target_cell(c)
            if cell is None:
                break
            v = cell[0]
            path.append(v)
            cells.append(cell)
            c = _individualize(self.a, c, v)
            colorings.append(c)
        self.profiles = [np.bincount(x) for x in colorings]
        self.leaf = colorings[-1]
        self.leaf_inv = np.argsort(self.leaf)  # position -> vertex
        for depth in range(len(path) - 1, -1, -1):
            v = path[depth]
            parent = list(range(n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            def union(g):
                for i, j in enumerate(g):
                    x, y = find(i), find(int(j))
                    if x != y:
                        parent[max(x, y)] = min(x, y)

            for g in gens:
                union(g)
            tested = set()
            for w in cells[depth]:
                if find(w) == find(v) or find(w) in tested:
                    continue
                g = self._probe(_individualize(self.a, colorings[depth], w), depth + 1)
                if g is None:
                    tested.add(find(w))
                    continue
                gens.append(g)
                union(g)
        return [tuple(int(x) for x in g) for g in gens]

    def _probe(self, c, depth):
        """Search the subtree at colouring ``c`` for a leaf equivalent to the first."""
        if depth >= len(self.profiles):
            return None
        prof = self.profiles[depth]
        counts = np.bincount(c)
        if len(counts) != len(prof) or not np.array_equal(counts, prof):
            return None
        cell = _target_cell(c)
        if cell is None:
            # vertex at position p in the first leaf maps to the one at p here
            g = np.argsort(c)[self.leaf]
            if _is_automorphism(self.a, self.init, g):
                return g
            return None
        for u in cell:
            g = self._probe(_individualize(self.a, c, u), depth + 1)
            if g is not None:
                return g
        return None


def automorphisms(table):
    """Automorphism group of a weight table.

    Bipartite tables yield a group on ``nrows + ncols`` points: rows first,
    then columns shifted by ``nrows``.  Symmetric tables yield a group on the
    vertices.
    """
    a, init = _encode(table)
    gens = _Search(a, init).run()
    return PermutationGroup(len(init), gens)


def split_pair(g, nrows):
    """Split a bipartite automorphism into (row permutation, column permutation)."""
    pi = tuple(g[:nrows])
    sigma = tuple(x - nrows for x in g[nrows:])
    return pi, sigma


# ---------------------------------------------------------------------------
# lexicographically greatest canonical form


def _place(blocks, values):
    """Best achievable row (as {position: value}) under column blocks."""
    row = {}
    for cols, positions in blocks:
        vals = sorted((values[j] for j in cols), reverse=True)
        for p, x in zip(positions, vals):
            row[p] = x
    return row


def _split(blocks, values):
    out = []
    for cols, positions in blocks:
        by_value = {}
        for j in cols:
            by_value.setdefault(values[j], []).append(j)
        k = 0
        for x in sorted(by_value, reverse=True):
            group = by_value[x]
            out.append((group, positions[k:k + len(group)]))
            k += len(group)
    return out


class _Node:
    __slots__ = ("prefix", "blocks", "group")

    def __init__(self, prefix, blocks, group):
        self.prefix = prefix
        self.blocks = blocks
        self.group = group


def _orbit_reps(group, candidates):
    if not group.generators:
        return list(candidates)
    seen, reps = set(), []
    orbit_of = {}
    for orb in group.orbits():
        for p in orb:
            orbit_of[p] = orb[0]
    for c in candidates:
        o = orbit_of[c]
        if o not in seen:
            seen.add(o)
            reps.append(c)
    return reps


def canonical_labeling(table, group=None):
    """Labeling giving the lexicographically greatest reordered weight matrix.

    Fixed rows and columns stay at their own indices.  ``group`` may pass a
    precomputed automorphism group of ``table`` (used for pruning only).
    """
    if group is None:
        group = automorphisms(table)
    if table.kind == "bipartite":
        return _canon_bipartite(table, group)
    return _canon_symmetric(table, group)


def _initial_blocks(n, fixed):
    fixed = set(fixed)
    free = [j for j in range(n) if j not in fixed]
    blocks = [([j], [j]) for j in sorted(fixed)]
    if free:
        blocks.append((free, list(free)))
    return blocks


def _canon_bipartite(table, group):
    n, s = table.nrows, table.ncols
    codes = compress(table).codes
    row_fixed = set(table.row_fixed)
    free_rows = [i for i in range(n) if i not in row_fixed]
    frontier = [_Node([], _initial_blocks(s, table.col_fixed), group)]
    for k in range(n):
        best, children = None, []
        for node in frontier:
            if k in row_fixed:
                cands = [k]
            else:
                used = set(node.prefix)
                cands = [i for i in free_rows if i not in used]
                cands = _orbit_reps(node.group, cands)
            for r in cands:
                placed = _place(node.blocks, codes[r])
                row = tuple(placed[p] for p in range(s))
                if best is None or row > best:
                    best, children = row, [(node, r)]
                elif row == best:
                    children.append((node, r))
        frontier = []
        for node, r in children:
            blocks = _split(node.blocks, codes[r])
            frontier.append(_Node(node.prefix + [r], blocks, node.group.stabilizer(r)))
    node = frontier[0] if frontier else _Node([], _initial_blocks(s, table.col_fixed), group)
    col_order = [None] * s
    for cols, positions in node.blocks:
        for j, p in zip(sorted(cols), positions):
            col_order[p] = j
    return Labeling(tuple(node.prefix), tuple(col_order))


def _canon_symmetric(table, group):
    n = table.nrows
    codes = compress(table).codes
    fixed = set(table.row_fixed)
    frontier = [_Node([], _initial_blocks(n, fixed), group)]
    for k in range(n):
        best, children = None, []
        for node in frontier:
            if k in fixed:
                cands = [k]
            else:
                block = next(cols for cols, positions in node.blocks if positions[0] == k)
                cands = _orbit_reps(node.group, sorted(block))
            for r in cands:
                blocks = _individualize_block(node.blocks, r, k)
                placed = _place(blocks, codes[r])
                row = tuple(placed[p] for p in range(n))
                if best is None or row > best:
                    best, children = row, [(node, r, blocks)]
                elif row == best:
                    children.append((node, r, blocks))
        frontier = []
        for node, r, blocks in children:
            frontier.append(_Node(node.prefix + [r], _split(blocks, codes[r]),
                                  node.group.stabilizer(r)))
    node = frontier[0] if frontier else None
    order = tuple(node.prefix) if node else ()
    return Labeling(order, order)


def _individualize_block(blocks, r, k):
    out = []
    for cols, positions in blocks:
        if r in cols and len(cols) > 1:
            rest = [j for j in cols if j != r]
            out.append(([r], [k]))
            out.append((rest, [p for p in positions if p != k]))
        else:
            out.append((cols, positions))
    return out


def canonical_matrix(table, group=None):
    lab = canonical_labeling(table, group)
    return lab.apply(table), lab
