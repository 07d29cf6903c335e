import subprocess
import sys
from pathlib import Path

import pytest

from conesym.cli import ParseError, format_perms, main, parse_input, run
from conesym.permgroup import PermutationGroup

SNAPSHOTS = Path(__file__).parent / "snapshots"

ICOSAHEDRON = [
    [1, 2, 4, 3, 7, 8, 5, 6, 10, 9, 11, 12],
    [1, 3, 2, 5, 4, 6, 7, 9, 8, 11, 10, 12],
    [2, 1, 3, 4, 6, 5, 8, 7, 9, 10, 12, 11],
]

SQUARE = """amb_space 2
polytope 4
0 0
1 0
0 1
1 1
EuclideanAutomorphisms
"""


def icosahedron_block():
    perms = [tuple(x - 1 for x in p) for p in ICOSAHEDRON]
    return "\n".join(format_perms(perms, "vertices of polyhedron")) + "\n"


def test_icosahedron_snapshot():
    expected = (SNAPSHOTS / "icosahedron_vertices.txt").read_bytes()
    assert icosahedron_block().encode() == expected


def test_icosahedron_generators_order():
    perms = [tuple(x - 1 for x in p) for p in ICOSAHEDRON]
    assert PermutationGroup(12, perms).order() == 120


def test_identity_cycle_line():
    lines = format_perms([(0, 1, 2)], "extreme rays")
    assert "Perm 1: --" in lines
    assert "3 orbits of extreme rays" in lines


def test_parse_basic():
    job = parse_input("amb_space 2\ncone 2\n0 1\n2 1\nHilbertBasis\n")
    assert job.goals == [("HilbertBasis", None)]
    assert job.blocks["cone"] == [(0, 1), (2, 1)]


def test_parse_rationals_and_comments():
    job = parse_input("# square\namb_space 2\npolytope 2\n1/2 0  # a point\n0 1\nEuclideanAutomorphisms\n")
    assert job.blocks["polytope"][0] == (pytest.approx(0.5), 0)
    assert job.is_polyhedron


@pytest.mark.parametrize("text, needle", [
    ("amb_space 2\ncone 1\n0 1 3\nHilbertBasis\n", "line 3"),
    ("amb_space 2\ncone 1\n0 x\nHilbertBasis\n", "malformed number"),
    ("amb_space 2\ncone 1\n0 1\nFoo\n", "unknown keyword"),
    ("amb_space 2\ncone 1\n0 1\n", "no computation goal"),
    ("cone 1\n0 1\n", "amb_space"),
])
def test_parse_errors(text, needle):
    with pytest.raises(ParseError, match=needle):
        parse_input(text)


def test_square_report():
    report, failed = run(parse_input(SQUARE))
    assert not failed
    assert report.startswith("Euclidean automorphism group of order 8\n")
    assert "Orbit 1 , length 4:  1 2 3 4" in report


def test_white_report():
    text = "amb_space 4\ncone 4\n0 0 0 1\n0 1 0 1\n0 0 1 1\n5 1 1 1\nAutomorphisms\nNormalForm\n"
    report, failed = run(parse_input(text))
    assert "Integral automorphism group of order 8" in report
    assert "Integrality verified" in report
    assert "type 8 4 0" in report


def test_report_deterministic():
    text = "amb_space 3\ncone 4\n1 0 1\n0 1 1\n-1 0 1\n0 -1 1\nAutomorphisms\nCombinatorialAutomorphisms\n"
    assert run(parse_input(text))[0] == run(parse_input(text))[0]


def test_exit_codes(tmp_path, capsys):
    good = tmp_path / "sq.in"
    good.write_text(SQUARE)
    assert main([str(good)]) == 0
    bad = tmp_path / "bad.in"
    bad.write_text("amb_space 2\ncone 1\n1 2 3\nAutomorphisms\n")
    assert main([str(bad)]) == 1
    pre = tmp_path / "pre.in"
    pre.write_text("amb_space 2\ncone 2\n0 1\n2 1\nEuclideanAutomorphisms\nAutomorphisms\n")
    out = tmp_path / "report.txt"
    assert main([str(pre), "--out", str(out)]) == 2
    assert "Integral automorphism group of order 2" in out.read_text()


def test_isocheck(tmp_path):
    (tmp_path / "a.in").write_text("amb_space 2\ncone 2\n1 0\n0 1\nIsoCheck b.in\nIsoCheck c.in\n")
    (tmp_path / "b.in").write_text("amb_space 2\ncone 2\n1 0\n1 1\nHilbertBasis\n")
    (tmp_path / "c.in").write_text("amb_space 2\ncone 2\n1 0\n1 2\nHilbertBasis\n")
    job = parse_input((tmp_path / "a.in").read_text(), tmp_path)
    report, failed = run(job)
    assert not failed
    assert report.count("isomorphic: true") == 1
    assert report.count("isomorphic: false") == 1


def test_module_entry_point(tmp_path):
    f = tmp_path / "sq.in"
    f.write_text(SQUARE)
    r = subprocess.run([sys.executable, "-m", "conesym", str(f)], capture_output=True, text=True)
    assert r.returncode == 0
    assert "order 8" in r.stdout
