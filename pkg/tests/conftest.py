import random

import pytest

from conesym import linalg as la
from conesym.cone import ConeError, ConeInput, reduce

ACCEPTANCE = {}


def record(number, ok, detail=""):
    ACCEPTANCE[number] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line("criterion %d: %s  %s" % (k, "PASS" if ok else "FAIL", detail))


def random_unimodular(rng, d, steps=6):
    a = la.identity(d)
    for _ in range(steps):
        i, j = rng.sample(range(d), 2) if d > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice([-2, -1, 1, 2])
        for r in a:
            r[j] += c * r[i]
    if d and rng.random() < 0.5:
        p = list(range(d))
        rng.shuffle(p)
        a = [[row[p[k]] for k in range(d)] for row in a]
    return a


def _symmetrize(rng, rays, d):
    """Close a ray set under a random group of coordinate permutations."""
    kind = rng.choice(["none", "swap", "cycle", "full"])
    if kind == "none" or d < 2:
        return rays
    if kind == "swap":
        perms = [[1, 0] + list(range(2, d))]
    elif kind == "cycle":
        perms = [list(range(1, d)) + [0]]
    else:
        perms = [[1, 0] + list(range(2, d)), list(range(1, d)) + [0]]
    out = {tuple(r) for r in rays}
    changed = True
    while changed:
        changed = False
        for r in list(out):
            for p in perms:
                q = tuple(r[p[k]] for k in range(d))
                if q not in out:
                    out.add(q)
                    changed = True
    return sorted(out)


def random_cone(rng, dim_max=3, rays_max=5, entry_max=3, min_dim=2):
    """Random full-dimensional pointed cone, often with symmetry."""
    while True:
        d = rng.randint(min_dim, dim_max)
        k = rng.randint(d, rays_max)
        rays = [[rng.randint(0, entry_max) for _ in range(d)] for _ in range(k)]
        rays = [r for r in rays if any(r)]
        rays = _symmetrize(rng, rays, d)
        if not rays or len(rays) > rays_max + 3:
            continue
        u = random_unimodular(rng, d)
        gens = la.matmul(rays, u)
        try:
            c = reduce(ConeInput(d, gens))
        except ConeError:
            continue
        if c.working_dim != d or c.lineality_dim or c.num_rays > rays_max:
            continue
        return c


@pytest.fixture
def rng():
    return random.Random(20261016)
