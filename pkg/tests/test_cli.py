from __future__ import annotations

import json
import subprocess
import sys
from math import gcd

from ribbonfold.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


PARAMS = ("-p", "3", "-q", "2", "-r", "2", "-s", "1")


class TestBound:
    def test_extended_example(self, capsys):
        code, out, _ = run(capsys, "bound", "-p", "3", "-q", "2", "-r", "4", "-s", "2")
        data = json.loads(out)
        assert code == 0 and data["rib_upper_bound"] == 24 and data["case"] == "EXTENDED"

    def test_reduced_example(self, capsys):
        code, out, _ = run(capsys, "bound", "-p", "5", "-q", "2", "-r", "3", "-s", "1")
        assert code == 0 and json.loads(out)["rib_upper_bound"] == 10

    def test_link_exit_code(self, capsys):
        code, out, err = run(capsys, "bound", "-p", "4", "-q", "2", "-r", "2", "-s", "1")
        assert code == 3 and out == ""
        assert json.loads(err)["error"] == "link"

    def test_invalid_exit_code(self, capsys):
        code, _, err = run(capsys, "bound", "-p", "3", "-q", "2", "-r", "2", "-s", "0")
        assert code == 2 and json.loads(err)["error"] == "invalid_parameters"
        code, _, _ = run(capsys, "bound", "-p", "3", "-q", "2")
        assert code == 2

    def test_permissive(self, capsys):
        assert run(capsys, "bound", "-p", "3", "-q", "1", "-r", "2", "-s", "1")[0] == 2
        code, out, _ = run(capsys, "bound", "-p", "3", "-q", "1", "-r", "2", "-s", "1", "--permissive")
        assert code == 0 and any("uncertified" in w for w in json.loads(out)["warnings"])

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "bound", *PARAMS, "--format", "text")
        assert code == 0 and "rib_upper_bound: 10" in out


class TestPlan:
    def test_standard_table(self, capsys):
        code, out, _ = run(capsys, "plan", *PARAMS)
        data = json.loads(out)
        assert code == 0
        assert [(b["weight"], b["fold"]) for b in data["bands"]] == [(1, "T1"), (2, "T3"), (2, "T4"), (1, "DIRECT")]
        assert data["length_over_w"] == 10

    def test_combined_fold(self, capsys):
        _, out, _ = run(capsys, "plan", "-p", "5", "-q", "2", "-r", "3", "-s", "2")
        assert "T3T4_COMBINED" in [b["fold"] for b in json.loads(out)["bands"]]

    def test_forced_standard_and_width(self, capsys):
        _, out, _ = run(capsys, "plan", "-p", "5", "-q", "2", "-r", "3", "-s", "2", "--standard", "--width", "1/2")
        data = json.loads(out)
        assert data["case"] == "STANDARD" and data["width"] == "1/2"

    def test_bad_width(self, capsys):
        assert run(capsys, "plan", *PARAMS, "--width", "-1")[0] == 2


class TestRender:
    def test_writes_svg_and_report(self, capsys, tmp_path):
        path = tmp_path / "k.svg"
        code, out, _ = run(capsys, "render", *PARAMS, "--out", str(path))
        assert code == 0 and json.loads(out)["passed"]
        assert path.read_text().startswith("<?xml")

    def test_invalid_writes_nothing(self, capsys, tmp_path):
        path = tmp_path / "k.svg"
        code, _, _ = run(capsys, "render", "-p", "3", "-q", "2", "-r", "9", "-s", "1", "--out", str(path))
        assert code == 2 and not path.exists()

    def test_stdout_svg(self, capsys):
        code, out, err = run(capsys, "render", *PARAMS, "--format", "svg")
        assert code == 0 and out.startswith("<?xml") and json.loads(err)["passed"]


class TestVerify:
    def test_all_checks_pass(self, capsys):
        code, out, _ = run(capsys, "verify", *PARAMS)
        data = json.loads(out)
        assert code == 0
        for key in ("identity_check", "invariant_check", "route_check", "plan_length_check"):
            assert data[key]["passed"], key

    def test_identity_example(self, capsys):
        _, out, _ = run(capsys, "verify", "-p", "5", "-q", "3", "-r", "2", "-s", "1")
        assert json.loads(out)["identity_check"]["passed"]

    def test_swapped_input(self, capsys):
        code, out, _ = run(capsys, "verify", "-p", "2", "-q", "3", "-r", "2", "-s", "1")
        data = json.loads(out)
        assert code == 0 and data["transforms"]["swapped_pq"] and data["invariant_check"]["passed"]

    def test_large_route_is_skipped(self, capsys):
        _, out, _ = run(capsys, "verify", "-p", "9", "-q", "7", "-r", "15", "-s", "3")
        data = json.loads(out)
        assert "skipped" in data["route_check"] and data["passed"]


class TestSweep:
    ARGS = ("sweep", "--range-p", "3:5", "--range-q", "2:3", "--range-r", "1:4", "--range-s", "1:2")

    def test_filter_and_order(self, capsys):
        code, out, _ = run(capsys, *self.ARGS)
        data = json.loads(out)
        assert code == 0 and len(data) == 3 * 2 * 4 * 2
        keys = [tuple(e["params"][k] for k in "pqrs") for e in data]
        assert keys == sorted(keys)
        for e in data:
            p, q = e["params"]["p"], e["params"]["q"]
            if "skipped" not in e:
                assert gcd(p, q) == 1

    def test_reduced_entry(self, capsys):
        _, out, _ = run(capsys, *self.ARGS)
        entry = next(e for e in json.loads(out) if e["params"] == {"p": 5, "q": 2, "r": 3, "s": 1})
        assert entry["case"] == "REDUCED" and entry["rib_upper_bound"] == 10

    def test_repeatable(self, capsys):
        first = run(capsys, *self.ARGS)
        assert first == run(capsys, *self.ARGS)
        assert first == run(capsys, *self.ARGS, "--jobs", "2")

    def test_empty_range_rejected(self, capsys):
        assert run(capsys, "sweep", "--range-p", "5:3", "--range-q", "2:3", "--range-r", "1:2", "--range-s", "1:1")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ribbonfold", "bound", "-p", "7", "-q", "3", "-r", "1", "-s", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["rib_upper_bound"] == 14
