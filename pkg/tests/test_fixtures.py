import subprocess
import sys

from helpers import PRIMES
from ultrametric.fixtures import (
    counterexample_matrix,
    counterexample_report,
    counterexample_spectrum,
)
from ultrametric.valuation import padic, trivial


def test_spectrum_is_exact():
    for p in PRIMES:
        a = counterexample_matrix(padic(p))
        assert counterexample_spectrum().verify(a)
        assert a.det() == 0


def test_report_shape():
    report = counterexample_report(padic(3))
    assert report["spectrum"] == ["0", "1", "1", "2"]
    assert report["row_radii"] == [0, 0, "inf", "inf"]
    assert report["memberships"]["brauer"] == {"0": True, "1": True, "2": True}
    assert report["memberships"]["tri_oval"] == {"0": False, "1": True, "2": False}
    assert report["tri_oval_misses_spectrum"] is True


def test_report_under_trivial_valuation():
    report = counterexample_report(trivial())
    assert report["memberships"]["tri_oval"] == {"0": False, "1": True, "2": False}


def test_cli_entry_point_runs_in_subprocess():
    # end-to-end: real pipes, real exit code, byte-deterministic stdout
    payload = b'{"p": 3, "entries": [["1", "3"], ["3", "1"]]}'
    runs = [
        subprocess.run(
            [sys.executable, "-m", "ultrametric.cli", "certify"],
            input=payload,
            capture_output=True,
        )
        for _ in range(2)
    ]
    assert all(r.returncode == 0 for r in runs)
    assert runs[0].stdout == runs[1].stdout
    assert b'"verdict":"RowDominance"' in runs[0].stdout
