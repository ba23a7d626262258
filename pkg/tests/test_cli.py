import subprocess
import sys

import pytest

from dessins.cli import main, to_dot
from dessins.catalog import load_dsn, named


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_fields(capsys):
    code, out, _ = run(capsys, "info", "A")
    assert code == 0
    for field in ("degree: 14", "type: (3,2,7)", "genus: 0", "signature: (0; 2, 2, 3, 3)",
                  "(alpha, beta, gamma): (2, 2, 0)", "y-handles:", "x-handles:", "automorphisms: 1",
                  "group: order=1092"):
        assert field in out


def test_handles_listing(capsys):
    code, out, _ = run(capsys, "handles", "B")
    assert code == 0
    assert "[2] (3)#0  1 -> 2" in out
    assert "x-handles: none" in out


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and out.splitlines()[0].startswith("A ")


def test_macbeath(capsys):
    assert run(capsys, "macbeath", "13")[1].strip() == "Hurwitz(3)"
    assert run(capsys, "macbeath", "12")[0] == 2


def test_covers(capsys):
    code, out, _ = run(capsys, "covers", "G", "A")
    assert code == 0 and "3 sheets" in out and "handles project: true" in out
    assert run(capsys, "covers", "A", "G")[0] == 1


def test_export_dsn(tmp_path, capsys):
    path = tmp_path / "ac.dsn"
    assert run(capsys, "export", "--format", "dsn", "A(1)C", "-o", str(path))[0] == 0
    assert load_dsn(path).degree == 35


def test_dot_export_structure():
    s = named("S")
    dot = to_dot(s, "S")
    assert dot.count(" -- ") == 7
    assert dot.count("fillcolor=black") == len(s.x.cycles(include_fixed=True))
    assert dot.count("fillcolor=white") == len(s.y.cycles(include_fixed=True))
    assert dot.count("// face") == len(s.z.cycles(include_fixed=True))


@pytest.mark.parametrize(
    "argv",
    [["info", "A(1"], ["info", "Nope"], ["info", "A(3)A"], ["info", "<missing.dsn>"], ["frobnicate"], ["verify", "--tier", "x"]],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_help_documents_selectors(capsys):
    assert main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "E(k@i,j)F" in out and "sorted by (k, a, b)" in out


def test_verify_quiet_subprocess():
    proc = subprocess.run([sys.executable, "-m", "dessins", "verify", "-q"], capture_output=True, text=True)
    lines = [l for l in proc.stdout.splitlines() if l.startswith("criterion")]
    assert len(lines) == 11
    failed = [l for l in lines if " FAIL" in l]
    assert proc.returncode == (1 if failed else 0)
