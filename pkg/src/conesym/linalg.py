"""Exact integer and rational matrix routines.

Matrices are lists (or tuples) of rows.  Integer entries are Python ints,
rational entries are :class:`fractions.Fraction`.  No function mutates its
arguments.
"""

from fractions import Fraction
from math import gcd


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(rows, cols):
    return [[0] * cols for _ in range(rows)]


def transpose(m, ncols=None):
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    if not a:
        return []
    bt = list(zip(*b)) if b else []
    if not bt:
        return [[] for _ in a]
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def copy_matrix(m):
    return [list(row) for row in m]


def _check_rect(m):
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("ragged matrix")


def _integral_row(r):
    den = 1
    for x in r:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in r]


def rank(m):
    """Rank over the rationals (fraction-free elimination)."""
    rows = [_integral_row(r) for r in m if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [p[c] * x - f * y for x, y in zip(rows[i], p)]
                g = 0
                for x in rows[i]:
                    g = gcd(g, x)
                if g > 1:
                    rows[i] = [x // g for x in rows[i]]
        r += 1
        if r == len(rows):
            break
    return r


def independent_rows(m):
    """Indices of a maximal linearly independent set of rows, greedy in row order."""
    chosen = []
    basis = []  # echelon rows with pivot columns
    for idx, row in enumerate(m):
        v = [Fraction(x) for x in row]
        for piv, b in basis:
            if v[piv]:
                f = v[piv] / b[piv]
                v = [x - f * y for x, y in zip(v, b)]
        piv = next((j for j, x in enumerate(v) if x), None)
        if piv is not None:
            basis.append((piv, v))
            chosen.append(idx)
    return chosen


def determinant(m):
    """Exact determinant via Bareiss elimination (Fraction entries allowed)."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    if any(isinstance(x, Fraction) for r in m for x in r):
        return _det_rational(m)
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _det_rational(m):
    a = [[Fraction(x) for x in r] for r in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def solve_linear(a, b):
    """Return some X with a @ X == b, or None if the system is inconsistent.

    ``a`` is p x q, ``b`` is p x k.  Free variables are set to zero, so the
    answer is unique when ``a`` has full column rank.
    """
    p = len(a)
    q = len(a[0]) if a else 0
    k = len(b[0]) if b else 0
    if len(b) != p:
        raise ValueError("row count mismatch")
    aug = [[Fraction(x) for x in a[i]] + [Fraction(x) for x in b[i]] for i in range(p)]
    pivots = []
    r = 0
    for c in range(q):
        piv = next((i for i in range(r, p) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(p):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == p:
            break
    for i in range(r, p):
        if any(aug[i][q:]):
            return None
    x = [[Fraction(0)] * k for _ in range(q)]
    for i, c in enumerate(pivots):
        x[c] = aug[i][q:]
    return x


def inverse(m):
    n = len(m)
    x = solve_linear(m, identity(n))
    if x is None or rank(m) < n:
        raise ZeroDivisionError("singular matrix")
    return x


def is_integral(m):
    return all(Fraction(x).denominator == 1 for r in m for x in r)


def to_int(m):
    return [[int(Fraction(x)) for x in r] for r in m]


def primitive_vector(v):
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return [x // g for x in v]


def primitive_rational(v):
    """Scale a rational vector to the primitive integer vector on its ray."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    return primitive_vector([int(x * den) for x in v])


def _xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hermite_normal_form(m):
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ m == H``.  Pivots are
    positive, entries above a pivot lie in ``[0, pivot)``, zero rows last.
    """
    _check_rect(m)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    h = [list(r) for r in m]
    u = identity(nrows)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        # gcd-combine every lower entry of column c into row r
        for i in range(r + 1, nrows):
            if h[i][c] == 0:
                continue
            if h[r][c] == 0:
                h[r], h[i] = h[i], h[r]
                u[r], u[i] = u[i], u[r]
                continue
            a, b = h[r][c], h[i][c]
            g, s, t = _xgcd(a, b)
            a_g, b_g = a // g, b // g
            hr, hi = h[r], h[i]
            h[r] = [s * x + t * y for x, y in zip(hr, hi)]
            h[i] = [-b_g * x + a_g * y for x, y in zip(hr, hi)]
            ur, ui = u[r], u[i]
            u[r] = [s * x + t * y for x, y in zip(ur, ui)]
            u[i] = [-b_g * x + a_g * y for x, y in zip(ur, ui)]
        if h[r][c] == 0:
            continue
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        p = h[r][c]
        for i in range(r):
            q = h[i][c] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return h, u


def hnf_basis(m):
    """Nonzero rows of the Hermite normal form: a canonical lattice basis."""
    if not m:
        return []
    h, _ = hermite_normal_form(m)
    return [row for row in h if any(row)]


def smith_normal_form(m):
    """Return ``(U, D, V)`` with ``U @ m @ V == D`` in Smith form.

    ``U`` and ``V`` are unimodular; the diagonal of ``D`` is nonnegative and
    each entry divides the next.
    """
    _check_rect(m)
    nr = len(m)
    nc = len(m[0]) if m else 0
    d = [list(r) for r in m]
    u = identity(nr)
    v = identity(nc)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(nr, nc):
        # smallest nonzero entry in the trailing block as pivot
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                if d[i][j] and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, nr):
                if d[i][t]:
                    a, b = d[t][t], d[i][t]
                    if b % a == 0:
                        q = b // a
                        d[i] = [p - q * r for p, r in zip(d[i], d[t])]
                        u[i] = [p - q * r for p, r in zip(u[i], u[t])]
                        continue
                    g, s, x = _xgcd(a, b)
                    a_g, b_g = a // g, b // g
                    dt, di = d[t], d[i]
                    d[t] = [s * p + x * q for p, q in zip(dt, di)]
                    d[i] = [-b_g * p + a_g * q for p, q in zip(dt, di)]
                    ut, ui = u[t], u[i]
                    u[t] = [s * p + x * q for p, q in zip(ut, ui)]
                    u[i] = [-b_g * p + a_g * q for p, q in zip(ut, ui)]
            for j in range(t + 1, nc):
                if d[t][j]:
                    done = False
                    a, b = d[t][t], d[t][j]
                    if b % a == 0:
                        q = b // a
                        for row in d:
                            row[j] -= q * row[t]
                        for row in v:
                            row[j] -= q * row[t]
                        continue
                    g, s, x = _xgcd(a, b)
                    a_g, b_g = a // g, b // g
                    for row in d:
                        p, q = row[t], row[j]
                        row[t], row[j] = s * p + x * q, -b_g * p + a_g * q
                    for row in v:
                        p, q = row[t], row[j]
                        row[t], row[j] = s * p + x * q, -b_g * p + a_g * q
            if done and all(d[i][t] == 0 for i in range(t + 1, nr)):
                break
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        # divisibility: fold an offending entry into the pivot row and redo
        p = d[t][t]
        bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                    if d[i][j] % p), None)
        if bad is not None:
            i = bad[0]
            d[t] = [x + y for x, y in zip(d[t], d[i])]
            u[t] = [x + y for x, y in zip(u[t], u[i])]
            continue
        t += 1
    return u, d, v


def elementary_divisors(m):
    _, d, _ = smith_normal_form(m)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


def generates_full_lattice(rows, d):
    """True iff the integer row span of ``rows`` is all of Z^d."""
    rows = [list(r) for r in rows]
    if any(len(r) != d for r in rows):
        raise ValueError("rows must have %d columns" % d)
    if d == 0:
        return True
    if not rows:
        return False
    divs = elementary_divisors(rows)
    return len(divs) == d and all(x == 1 for x in divs)


def lattice_basis_of_span(rows, d):
    """Integer basis of Z^d intersected with the rational span of ``rows``.

    Returns ``(basis, coords)``: ``basis`` is r x d, ``coords`` is d x r with
    ``x @ coords`` giving the coordinates of any ``x`` in the span with
    respect to ``basis``.
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return [], [[] for _ in range(d)]
    if rank(rows) == d:
        return identity(d), identity(d)
    _, dm, v = smith_normal_form(rows)
    r = sum(1 for i in range(min(len(dm), d)) if dm[i][i])
    vinv = to_int(inverse(v))
    basis, u = hermite_normal_form(vinv[:r])
    coords = matmul([row[:r] for row in v], to_int(inverse(u)))
    return basis, coords


def kernel_basis(m, d):
    """Saturated integer basis of {x in Z^d : m @ x == 0} (columns as rows)."""
    rows = [list(r) for r in m if any(r)]
    if not rows:
        return identity(d)
    _, dm, v = smith_normal_form(rows)
    r = sum(1 for i in range(min(len(dm), d)) if dm[i][i])
    return [[v[i][j] for i in range(d)] for j in range(r, d)]
