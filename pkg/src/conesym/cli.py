"""Batch front end: read an input file, run its goals, write a report.

Input format (one item per line, ``#`` starts a comment)::

    amb_space 3
    cone 4                  # or: polytope m / inequalities m / inhom_inequalities m
    1 0 0
    ...
    grading
    0 0 1
    Automorphisms           # goal keywords, one per line
    IsoCheck other.in

Numbers are integers or fractions ``p/q``.
"""

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import automorphisms as aut
from . import linalg as la
from .cone import ConeError, ConeInput, build_polyhedron, homogenize, reduce
from .normalform import FULL, canonical_type, is_isomorphic
from .permgroup import cycle_decomposition

GOALS = {
    "Automorphisms": aut.INTEGRAL,
    "RationalAutomorphisms": aut.RATIONAL,
    "EuclideanAutomorphisms": aut.EUCLIDEAN,
    "CombinatorialAutomorphisms": aut.COMBINATORIAL,
    "InputAutomorphisms": aut.INPUT,
    "AmbientAutomorphisms": aut.AMBIENT,
    "HilbertBasis": None,
    "NormalForm": None,
    "IsoCheck": None,
}

MATRIX_BLOCKS = ("cone", "polytope", "inequalities", "inhom_inequalities")
VECTOR_BLOCKS = ("grading", "dehomogenization")

SEPARATOR = "*" * 72


class ParseError(ValueError):
    pass


@dataclass
class JobSpec:
    ambient_dim: int
    blocks: dict = field(default_factory=dict)  # block name -> list of rows
    grading: tuple = None
    dehomogenization: tuple = None
    goals: list = field(default_factory=list)  # (keyword, argument or None)
    base_dir: Path = None

    @property
    def is_polyhedron(self):
        return "polytope" in self.blocks or "inhom_inequalities" in self.blocks

    def cone_input(self):
        d = self.ambient_dim
        if self.is_polyhedron:
            for name in ("cone", "inequalities"):
                if name in self.blocks:
                    raise ConeError("cannot mix %s with polyhedron blocks" % name)
            return homogenize(d, vertices=self.blocks.get("polytope"),
                              inequalities=self.blocks.get("inhom_inequalities"),
                              grading=self.grading)
        return ConeInput(d, self.blocks.get("cone"), self.blocks.get("inequalities"),
                         self.grading, self.dehomogenization)


def _number(tok, lineno, col):
    try:
        x = Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError("line %d, column %d: malformed number %r" % (lineno, col, tok))
    return int(x) if x.denominator == 1 else x


def _row(line, lineno, d, where):
    toks = line.split()
    if len(toks) != d:
        raise ParseError("line %d, column %d: row of %s has %d entries, expected %d" % (
            lineno, min(len(toks), d) + 1, where, len(toks), d))
    return tuple(_number(t, lineno, k + 1) for k, t in enumerate(toks))


def parse_input(text, base_dir=None):
    lines = []
    for k, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((k, line))
    job = None
    pos = 0
    while pos < len(lines):
        lineno, line = lines[pos]
        pos += 1
        toks = line.split()
        key = toks[0]
        if key == "amb_space":
            if job is not None:
                raise ParseError("line %d: amb_space given twice" % lineno)
            if len(toks) != 2:
                raise ParseError("line %d: amb_space takes one number" % lineno)
            d = _number(toks[1], lineno, 2)
            if not isinstance(d, int) or d < 1:
                raise ParseError("line %d: bad dimension %r" % (lineno, toks[1]))
            job = JobSpec(d, base_dir=base_dir)
            continue
        if job is None:
            raise ParseError("line %d: amb_space must come first" % lineno)
        if key in MATRIX_BLOCKS:
            if len(toks) != 2:
                raise ParseError("line %d: %s takes the number of rows" % (lineno, key))
            m = _number(toks[1], lineno, 2)
            if not isinstance(m, int) or m < 0:
                raise ParseError("line %d: bad row count %r" % (lineno, toks[1]))
            width = job.ambient_dim + (1 if key == "inhom_inequalities" else 0)
            rows = []
            for _ in range(m):
                if pos >= len(lines):
                    raise ParseError("line %d: %s block ends early" % (lineno, key))
                ln, row = lines[pos]
                pos += 1
                rows.append(_row(row, ln, width, key))
            if key in job.blocks:
                raise ParseError("line %d: %s given twice" % (lineno, key))
            job.blocks[key] = rows
        elif key in VECTOR_BLOCKS:
            if pos >= len(lines):
                raise ParseError("line %d: %s needs a row" % (lineno, key))
            ln, row = lines[pos]
            pos += 1
            setattr(job, key, _row(row, ln, job.ambient_dim, key))
        elif key in GOALS:
            arg = None
            if key == "IsoCheck":
                if len(toks) != 2:
                    raise ParseError("line %d: IsoCheck needs a file name" % lineno)
                arg = toks[1]
            elif len(toks) != 1:
                raise ParseError("line %d: %s takes no arguments" % (lineno, key))
            job.goals.append((key, arg))
        else:
            raise ParseError("line %d: unknown keyword %r" % (lineno, key))
    if job is None:
        raise ParseError("missing amb_space")
    if not job.blocks:
        raise ParseError("no cone, polytope or inequalities given")
    if not job.goals:
        raise ParseError("no computation goal given")
    return job


# ---------------------------------------------------------------------------
# report formatting


def format_perms(perms, objects):
    """Permutation, cycle and orbit lines for one action, 1-based."""
    from .permgroup import PermutationGroup
    m = len(perms[0]) if perms else 0
    out = [SEPARATOR, "%d permutations of %d %s" % (len(perms), m, objects), ""]
    for k, p in enumerate(perms, 1):
        out.append("Perm %d: %s" % (k, " ".join(str(x + 1) for x in p)))
    out += ["", "Cycle decompositions ", ""]
    for k, p in enumerate(perms, 1):
        cyc = [c for c in cycle_decomposition(p) if len(c) > 1]
        body = " ".join("(%s)" % " ".join(str(x + 1) for x in c) for c in cyc)
        out.append("Perm %d: %s--" % (k, body + " " if body else ""))
    orbits = PermutationGroup(m, perms).orbits() if m else []
    out += ["", "%d orbits of %s" % (len(orbits), objects), ""]
    for k, o in enumerate(orbits, 1):
        out.append("Orbit %d , length %d:  %s" % (k, len(o), " ".join(str(x + 1) for x in sorted(o))))
    out.append("")
    return out


def format_result(res):
    out = ["%s automorphism group of order %d" % (res.flavor, res.order),
           "Integrality verified" if res.integrality_verified else "Integrality not known"]
    pairs = res.pairs
    out += format_perms([p for p, _ in pairs], res.objects)
    if res.dual_objects is not None and res.dual_action is not None:
        out += format_perms([s for _, s in pairs], res.dual_objects)
    return out


def _matrix_lines(rows):
    return [" ".join(str(x) for x in r) for r in rows]


# ---------------------------------------------------------------------------
# running


class _Context:
    def __init__(self, job):
        self.job = job
        self.inp = job.cone_input()
        self._poly = None
        self._cone = None

    @property
    def poly(self):
        if self._poly is None:
            self._poly = build_polyhedron(self.inp)
        return self._poly

    @property
    def cone(self):
        if self._cone is None:
            self._cone = self.poly.cone if self.job.is_polyhedron else reduce(self.inp)
        return self._cone

    def target(self):
        return self.poly if self.job.is_polyhedron else self.cone


def _cone_of_file(path):
    job = parse_input(Path(path).read_text(), Path(path).parent)
    ctx = _Context(job)
    return ctx.cone


def _run_goal(ctx, key, arg):
    job = ctx.job
    flavor = GOALS[key]
    if flavor == aut.EUCLIDEAN:
        if not job.is_polyhedron:
            raise ConeError("Euclidean automorphisms need polytope input")
        pts = job.blocks.get("polytope")
        if pts and "inhom_inequalities" not in job.blocks and aut.points_on_common_sphere(pts):
            return format_result(aut.euclidean_automorphisms(aut.distinct_points(pts)))
        return format_result(aut.euclidean_automorphisms(ctx.poly))
    if flavor == aut.RATIONAL:
        if not job.is_polyhedron:
            raise ConeError("rational automorphisms need polytope input")
        return format_result(aut.rational_automorphisms(ctx.poly))
    if flavor in (aut.INPUT, aut.AMBIENT):
        return format_result(aut.compute(flavor, ctx.inp))
    if flavor is not None:
        return format_result(aut.compute(flavor, ctx.target()))
    if key == "HilbertBasis":
        cone = ctx.cone.with_hilbert_basis()
        rows = [[int(x) for x in cone.ambient(h)] for h in cone.hilbert_basis]
        return ["%d Hilbert basis elements:" % len(rows)] + _matrix_lines(rows) + [""]
    if key == "NormalForm":
        return canonical_type(ctx.cone, FULL).serialize().splitlines() + [""]
    if key == "IsoCheck":
        path = Path(arg)
        if not path.is_absolute() and job.base_dir is not None:
            path = job.base_dir / path
        try:
            other = _cone_of_file(path)
        except OSError as e:
            raise ConeError("cannot read %s: %s" % (arg, e.strerror))
        res = is_isomorphic(ctx.cone, other)
        out = ["isomorphic: %s" % ("true" if res.isomorphic else "false")]
        if res.isomorphic:
            out += _matrix_lines(res.witness)
        return out + [""]
    raise ValueError(key)


def run(job):
    """Report text and a flag telling whether some goal failed."""
    out, failed = [], False
    try:
        ctx = _Context(job)
    except ConeError as e:
        return "error: %s\n" % e, True
    for key, arg in job.goals:
        try:
            out += _run_goal(ctx, key, arg)
        except (ConeError, ParseError) as e:
            failed = True
            out += ["%s failed: %s" % (key, e), ""]
    return "\n".join(out) + "\n", failed


def main(argv=None):
    ap = argparse.ArgumentParser(prog="conesym", description="Automorphism groups and normal forms of cones.")
    ap.add_argument("input", help="input file")
    ap.add_argument("--out", help="write the report here instead of stdout")
    args = ap.parse_args(argv)
    path = Path(args.input)
    try:
        text = path.read_text()
    except OSError as e:
        print("cannot read %s: %s" % (path, e.strerror), file=sys.stderr)
        return 1
    try:
        job = parse_input(text, path.parent)
    except ParseError as e:
        print("parse error: %s" % e, file=sys.stderr)
        return 1
    report, failed = run(job)
    if args.out:
        Path(args.out).write_text(report)
    else:
        sys.stdout.write(report)
    return 2 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
