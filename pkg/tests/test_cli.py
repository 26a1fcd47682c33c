from __future__ import annotations

import json


from poissonsing.cli import main
from poissonsing.report import SCHEMA_KEYS


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBracketCommand:
    def test_sphere_xy(self, capsys):
        code, out, _ = run(capsys, "bracket", "--phi", "x^2+y^2+z^2", "x", "y")
        assert code == 0 and out.strip() == "2*z"

    def test_equal_arguments(self, capsys):
        code, out, _ = run(capsys, "bracket", "--phi", "x^2+y^2+z^2", "x+y", "x+y")
        assert code == 0 and out.strip() == "0"

    def test_cubic_yz(self, capsys):
        code, out, _ = run(capsys, "bracket", "--phi", "x^3+y^3+z^3", "y", "z")
        assert code == 0 and out.strip() == "3*x^2"

    def test_parse_failure(self, capsys):
        code, _, err = run(capsys, "bracket", "--phi", "x^3+y^3+z^3", "x+", "z")
        assert code == 2 and "invalid input" in err


class TestAnalyzeCommand:
    def test_cubic_accepted(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "--phi", "x^3+y^3+z^3", "--weights", "1,1,1",
            "--max-degree", "6", "--cases", "40",
        )
        assert code == 0
        report = json.loads(out)
        assert set(SCHEMA_KEYS) <= set(report)
        assert report["gate"]["accepted"] is True
        assert report["milnor"]["mu"] == 8
        assert all(
            entry["match"]
            for side in report["cohomology"].values()
            for entry in side.values()
        )
        assert all(
            entry["match"]
            for side in report["homology"].values()
            for entry in side.values()
        )
        assert report["cohomology"]["ambient"]["H0"]["predicted"] == [[0, 1], [3, 1], [6, 1]]

    def test_xyz_rejected(self, capsys):
        code, out, _ = run(capsys, "analyze", "--phi", "x*y*z")
        assert code == 3
        report = json.loads(out)
        assert report["gate"]["accepted"] is False
        assert report["gate"]["witness_degree"] == 4
        assert report["milnor"] is None

    def test_singular_line_rejected(self, capsys):
        code, out, _ = run(capsys, "analyze", "--phi", "x^2+y^2")
        assert code == 3
        report = json.loads(out)
        assert report["gate"]["witness_degree"] == 1
        assert report["gate"]["witness_monomial"] == "z"

    def test_inhomogeneous_is_invalid(self, capsys):
        code, _, err = run(capsys, "analyze", "--phi", "x^2+y^3")
        assert code == 2 and "invalid input" in err

    def test_bad_weights_are_invalid(self, capsys):
        code, _, err = run(capsys, "analyze", "--phi", "x^2+y^2+z^2", "--weights", "2,4,6")
        assert code == 2

    def test_byte_identical_reports(self, capsys):
        args = (
            "analyze", "--phi", "x^2+y^2+z^2", "--seed", "5",
            "--max-degree", "4", "--cases", "30",
        )
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_text_format_carries_same_numbers(self, capsys):
        args = ("analyze", "--phi", "x^2+y^2+z^2", "--max-degree", "4", "--cases", "30")
        code, out, _ = run(capsys, *args, "--format", "text")
        assert code == 0
        assert "gate: accepted" in out and "mu = 1" in out
        code, json_out, _ = run(capsys, *args, "--format", "json")
        report = json.loads(json_out)
        pairs = report["cohomology"]["ambient"]["H0"]["computed"]
        dims_text = " ".join("%d:%d" % (i, n) for i, n in pairs)
        assert dims_text in out

    def test_window_overrides_reported(self, capsys):
        code, out, _ = run(
            capsys, "analyze", "--phi", "x^2+y^2+z^2",
            "--min-degree", "-2", "--max-degree", "5", "--cases", "10",
        )
        assert code == 0
        report = json.loads(out)
        assert report["cohomology"]["ambient"]["H0"]["window"] == [-2, 5]
        assert report["homology"]["ambient"]["H_0"]["window"] == [1, 8]

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        # force a wrong computed table to exercise the exit-4 path
        from poissonsing import cohomology as ch
        from poissonsing import report as rp

        real = ch.brute_force_dims

        def corrupted(P, k, window):
            dims = real(P, k, window)
            if k == 0:
                return ch.GradedDims(dims.space, dims.window, ((0, 7),))
            return dims

        monkeypatch.setattr(rp.ch, "brute_force_dims", corrupted)
        code, out, err = run(
            capsys, "analyze", "--phi", "x^2+y^2+z^2",
            "--max-degree", "4", "--cases", "10",
        )
        assert code == 4
        assert "first mismatch: cohomology/ambient/H0" in err
        assert json.loads(out)["cohomology"]["ambient"]["H0"]["match"] is False

    def test_boundary_bridge_failure_is_a_mismatch(self, capsys, monkeypatch):
        from poissonsing import report as rp

        real = rp.hm.homology_dims

        def failing(P, k, window, verify=True):
            if verify:
                raise RuntimeError("forced bridge failure")
            return real(P, k, window, verify=False)

        monkeypatch.setattr(rp.hm, "homology_dims", failing)
        code, out, err = run(
            capsys, "analyze", "--phi", "x^2+y^2+z^2",
            "--max-degree", "4", "--cases", "10",
        )
        assert code == 4
        report = json.loads(out)
        assert report["homology"]["ambient"]["H_0"]["boundary_bridge"] == "failed"
        assert "first mismatch: homology/ambient/H_0" in err


class TestVerifyCommand:
    def test_identities_pass(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--phi", "x^2+y^2+z^2", "--suite", "identities",
            "--cases", "60", "--seed", "3",
        )
        assert code == 0
        assert "FAIL" not in out
        assert "jacobi_identity" in out

    def test_koszul_failure_for_xyz(self, capsys):
        code, out, err = run(
            capsys, "verify", "--phi", "x*y*z", "--suite", "koszul",
            "--min-degree", "-3", "--max-degree", "5",
        )
        assert code == 4
        assert "FAIL koszul_second_exactness" in out
        assert "witness" in out
        assert "first failure" in err

    def test_weighted_koszul_passes(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--phi", "x^2+y^3+z^5", "--weights", "15,10,6",
            "--suite", "koszul", "--min-degree", "-10", "--max-degree", "40",
        )
        assert code == 0 and "FAIL" not in out

    def test_gate_needed_suites_reject(self, capsys):
        code, _, err = run(capsys, "verify", "--phi", "x*y*z", "--suite", "cohomology")
        assert code == 3 and "rejected" in err


class TestMilnorCommand:
    def test_json_payload(self, capsys):
        code, out, _ = run(capsys, "milnor", "--phi", "x^4+y^4+z^4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["mu"] == 27
        assert payload["socle_bound"] == 6
        assert len(payload["basis"]) == 27

    def test_rejection_exit_code(self, capsys):
        code, _, err = run(capsys, "milnor", "--phi", "x*y*z")
        assert code == 3 and "witness degree 4" in err
