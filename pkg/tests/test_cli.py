"""The command-line surface: subcommands, formats, and the exit-code contract."""

import json

import numpy as np
import pytest

from ewkit import read_operator, witness_dk
from ewkit.cli import main, parse_grid, parse_sigma


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def w0_path(tmp_path, capsys):
    path = tmp_path / "w0.json"
    code, _, _ = run(capsys, "construct", "witness", "--d", "3", "--k", "1",
                     "--out", str(path))
    assert code == 0
    return str(path)


def state_path(tmp_path, capsys, gamma: float) -> str:
    path = tmp_path / f"rho_{gamma}.json"
    code, _, _ = run(capsys, "construct", "state", "--d", "3", "--gamma",
                     str(gamma), "--out", str(path))
    assert code == 0
    return str(path)


class TestParseHelpers:
    def test_grid_start_stop_step(self):
        grid = parse_grid("0.1:1.0:0.1")
        assert len(grid) == 9
        assert grid[0] == 0.1
        assert grid[-1] == pytest.approx(0.9, abs=1e-12)

    def test_grid_single_value(self):
        assert parse_grid("0.605") == [0.605]

    def test_grid_empty_when_start_reaches_stop(self):
        assert parse_grid("0.5:0.5:0.1") == []

    def test_grid_malformed(self):
        with pytest.raises(ValueError):
            parse_grid("0.1:1.0")
        with pytest.raises(ValueError):
            parse_grid("0.1:1.0:-0.1")
        with pytest.raises(ValueError):
            parse_grid("a:b:c")

    def test_sigma_bits(self):
        assert parse_sigma("0,1") == (False, True)
        assert parse_sigma("1,0,1") == (True, False, True)
        with pytest.raises(ValueError):
            parse_sigma("0,2")


class TestConstruct:
    def test_witness_file_matches_library(self, tmp_path, capsys, w0_path):
        op, meta = read_operator(w0_path)
        assert np.array_equal(op.matrix, witness_dk(3, 1).matrix)
        assert meta["construction"] == "witness-dk"

    def test_state_gamma_one_entries(self, tmp_path, capsys):
        path = state_path(tmp_path, capsys, 1.0)
        op, meta = read_operator(path)
        nonzero = op.matrix[np.abs(op.matrix) > 0]
        assert np.allclose(nonzero, 1 / 9, atol=1e-15)
        assert meta.get("separable") is True

    def test_state_below_one_not_flagged(self, tmp_path, capsys):
        path = state_path(tmp_path, capsys, 0.5)
        _, meta = read_operator(path)
        assert "separable" not in meta

    def test_out_of_range_k_exits_2(self, tmp_path, capsys):
        code, _, err = run(capsys, "construct", "witness", "--d", "3", "--k", "5",
                           "--out", str(tmp_path / "w.json"))
        assert code == 2
        assert "k must satisfy" in err

    def test_perturbed(self, tmp_path, capsys):
        path = tmp_path / "wp.json"
        code, _, _ = run(capsys, "construct", "perturbed", "--d", "3", "--k", "1",
                         "--lambda", "0.1", "--mu", "0.05", "--out", str(path))
        assert code == 0
        op, meta = read_operator(str(path))
        assert meta["lambda"] == 0.1
        assert op.matrix.real[2, 2] == pytest.approx(0.1, abs=0)
        assert op.matrix.real[6, 6] == pytest.approx(1.05, abs=0)


class TestPair:
    def test_detected_pair(self, tmp_path, capsys, w0_path):
        rho = state_path(tmp_path, capsys, 0.5)
        code, out, _ = run(capsys, "pair", w0_path, rho)
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "-0.066667"
        assert lines[1] == "detected: true"

    def test_boundary_not_detected(self, tmp_path, capsys, w0_path):
        rho = state_path(tmp_path, capsys, 1.0)
        code, out, _ = run(capsys, "pair", w0_path, rho)
        assert code == 0
        assert "detected: false" in out

    def test_maximally_mixed_value(self, tmp_path, capsys, w0_path):
        from ewkit import bipartite, maximally_mixed, write_operator

        path = tmp_path / "mix.json"
        write_operator(str(path), maximally_mixed(bipartite(3)))
        code, out, _ = run(capsys, "pair", w0_path, str(path))
        assert code == 0
        assert out.startswith("0.666667")

    def test_dimension_mismatch_exits_2(self, tmp_path, capsys, w0_path):
        from ewkit import bipartite, maximally_mixed, write_operator

        path = tmp_path / "mix4.json"
        write_operator(str(path), maximally_mixed(bipartite(4)))
        code, _, err = run(capsys, "pair", w0_path, str(path))
        assert code == 2
        assert "spaces differ" in err

    def test_malformed_file_exits_3(self, tmp_path, capsys, w0_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{")
        code, _, _ = run(capsys, "pair", w0_path, str(bad))
        assert code == 3

    def test_missing_file_exits_3(self, tmp_path, capsys, w0_path):
        code, _, _ = run(capsys, "pair", w0_path, str(tmp_path / "nope.json"))
        assert code == 3


class TestBounds:
    def test_lambda_value(self, tmp_path, capsys, w0_path):
        rho = state_path(tmp_path, capsys, 0.605)
        p = tmp_path / "p.json"
        run(capsys, "construct", "projector-p", "--d", "3", "--out", str(p))
        code, out, _ = run(capsys, "bounds", "lambda", "-w", w0_path, "-p", str(p),
                           "-r", rho)
        assert code == 0
        assert out.strip() == "0.133975"

    def test_alpha_value(self, tmp_path, capsys, w0_path):
        from ewkit import bipartite, maximally_mixed, write_operator

        gamma_star = float(np.sqrt((np.sqrt(3) - 1) / 2))
        rho = state_path(tmp_path, capsys, gamma_star)
        mix = tmp_path / "mix.json"
        write_operator(str(mix), maximally_mixed(bipartite(3)))
        code, out, _ = run(capsys, "bounds", "alpha", "-w", w0_path, "-r", rho,
                           "-s", str(mix))
        assert code == 0
        # exact value (21 - 8 sqrt 3)/83 printed to six decimals
        assert out.strip() == "0.086067"

    def test_mu_value(self, tmp_path, capsys, w0_path):
        rho = state_path(tmp_path, capsys, 0.5)
        p = tmp_path / "p.json"
        q = tmp_path / "q.json"
        run(capsys, "construct", "projector-p", "--d", "3", "--out", str(p))
        run(capsys, "construct", "projector-q", "--d", "3", "--out", str(q))
        code, out, _ = run(capsys, "bounds", "mu", "-w", w0_path, "-p", str(p),
                           "-q", str(q), "--lambda", "0.05", "-r", rho)
        assert code == 0
        assert out.strip() == "0.200000"

    def test_none_when_precondition_fails(self, tmp_path, capsys, w0_path):
        from ewkit import bipartite, maximally_mixed, write_operator

        rho = state_path(tmp_path, capsys, 1.0)
        mix = tmp_path / "mix.json"
        write_operator(str(mix), maximally_mixed(bipartite(3)))
        code, out, _ = run(capsys, "bounds", "alpha", "-w", w0_path, "-r", rho,
                           "-s", str(mix))
        assert code == 0
        assert out.strip() == "none"


class TestSweep:
    def test_nine_gamma_rows(self, tmp_path, capsys):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run(capsys, "sweep", "--d", "3", "--k", "1",
                         "--gamma-grid", "0.1:1.0:0.1", "--out", str(out_path))
        assert code == 0
        lines = out_path.read_text().strip().split("\n")
        assert len(lines) == 10  # header + 9 rows
        assert all(line.endswith("true") for line in lines[1:])

    def test_lambda_flip_brackets_threshold(self, tmp_path, capsys):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run(capsys, "sweep", "--d", "3", "--k", "1",
                         "--gamma-grid", "0.605", "--lambda-grid", "0:0.2:0.01",
                         "--out", str(out_path))
        assert code == 0
        rows = [line.split(",") for line in out_path.read_text().strip().split("\n")[1:]]
        detected = {float(r[1]): r[5] == "true" for r in rows}
        assert detected[0.13]
        assert not detected[0.14]

    def test_empty_grid_header_only(self, tmp_path, capsys):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run(capsys, "sweep", "--d", "3", "--k", "1",
                         "--gamma-grid", "0.5:0.5:0.1", "--out", str(out_path))
        assert code == 0
        assert out_path.read_text() == "gamma,lambda,mu,alpha,trace,detected\n"

    def test_malformed_grid_exits_2(self, tmp_path, capsys):
        code, _, _ = run(capsys, "sweep", "--d", "3", "--k", "1",
                         "--gamma-grid", "0.1:0.9", "--out", str(tmp_path / "s.csv"))
        assert code == 2

    def test_rerun_byte_identical(self, tmp_path, capsys):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        for path in (a, b):
            code, _, _ = run(capsys, "sweep", "--d", "3", "--k", "1",
                             "--gamma-grid", "0.1:1.0:0.1",
                             "--lambda-grid", "0:0.1:0.05", "--out", str(path))
            assert code == 0
        assert a.read_bytes() == b.read_bytes()


class TestCertify:
    def test_indecomposable_exit_0(self, tmp_path, capsys, w0_path):
        rho = state_path(tmp_path, capsys, 0.5)
        code, out, _ = run(capsys, "certify", "indecomposable", "-w", w0_path,
                           "-s", rho, "--sigma", "0,1")
        assert code == 0
        doc = json.loads(out)
        assert doc["kind"] == "indecomposable"
        assert doc["verdict"] is True

    def test_boundary_state_exit_1(self, tmp_path, capsys, w0_path):
        rho = state_path(tmp_path, capsys, 1.0)
        code, out, _ = run(capsys, "certify", "indecomposable", "-w", w0_path,
                           "-s", rho)
        assert code == 1
        assert json.loads(out)["verdict"] is False

    def test_ppt_on_entangled_projector_exit_1(self, tmp_path, capsys):
        from ewkit import max_entangled_projector, write_operator

        path = tmp_path / "phi.json"
        write_operator(str(path), max_entangled_projector(3))
        code, out, _ = run(capsys, "certify", "ppt", "-s", str(path))
        assert code == 1
        doc = json.loads(out)
        assert doc["evidence"]["min_eigenvalue"] == pytest.approx(-1 / 3, abs=1e-12)

    def test_blockpos_violation_exit_1(self, tmp_path, capsys):
        from ewkit import (
            HermitianOp,
            bipartite,
            max_entangled_projector,
            witness_from_difference,
            write_operator,
        )

        q = HermitianOp(bipartite(3), np.eye(9, dtype=complex) / 3)
        candidate = witness_from_difference(q, 2.0 * max_entangled_projector(3))
        path = tmp_path / "qmp.json"
        write_operator(str(path), candidate)
        code, out, _ = run(capsys, "certify", "blockpos", "-w", str(path),
                           "--restarts", "100", "--seed", "7")
        assert code == 1
        doc = json.loads(out)
        assert doc["seed"] == 7
        assert doc["evidence"]["minimum"] < -1e-2
        assert len(doc["evidence"]["x_re"]) == 3

    def test_blockpos_on_witness_exit_0(self, tmp_path, capsys, w0_path):
        code, out, _ = run(capsys, "certify", "blockpos", "-w", w0_path,
                           "--restarts", "25", "--seed", "3")
        assert code == 0

    def test_ccp_pair(self, tmp_path, capsys):
        from ewkit import write_operator

        w32 = tmp_path / "w32.json"
        write_operator(str(w32), witness_dk(3, 2))
        code, _, _ = run(capsys, "certify", "ccp", "-w", str(w32))
        assert code == 0

    def test_atomic_records_assumption(self, tmp_path, capsys, w0_path):
        rho = state_path(tmp_path, capsys, 0.5)
        code, out, _ = run(capsys, "certify", "atomic", "-w", w0_path, "-s", rho,
                           "--assumption", "Schmidt number bound per Ha")
        assert code == 0
        doc = json.loads(out)
        assert doc["assumptions"] == ["Schmidt number bound per Ha"]

    def test_out_file_written(self, tmp_path, capsys, w0_path):
        rho = state_path(tmp_path, capsys, 0.5)
        out_path = tmp_path / "cert.json"
        code, out, _ = run(capsys, "certify", "indecomposable", "-w", w0_path,
                           "-s", rho, "--out", str(out_path))
        assert code == 0
        assert json.loads(out_path.read_text()) == json.loads(out)

    def test_seed_from_environment(self, tmp_path, capsys, w0_path, monkeypatch):
        monkeypatch.setenv("EWKIT_SEED", "1234")
        code, out, _ = run(capsys, "certify", "blockpos", "-w", w0_path,
                           "--restarts", "5")
        assert code == 0
        assert json.loads(out)["seed"] == 1234

    def test_missing_operand_exits_2(self, tmp_path, capsys):
        code, _, err = run(capsys, "certify", "ppt")
        assert code == 2
        assert "missing required option" in err


class TestCj:
    def test_witness_to_map_matches_library_table(self, tmp_path, capsys, w0_path):
        from ewkit import choi_map, read_map_table

        map_path = tmp_path / "map.json"
        code, _, _ = run(capsys, "cj", "to-map", "-w", w0_path, "--out", str(map_path))
        assert code == 0
        table = read_map_table(str(map_path))
        reference = choi_map(3, 1)
        for i in range(3):
            for j in range(3):
                assert np.array_equal(table.image(i, j), reference.image(i, j))

    def test_round_trip(self, tmp_path, capsys, w0_path):
        map_path = tmp_path / "map.json"
        back_path = tmp_path / "w_back.json"
        run(capsys, "cj", "to-map", "-w", w0_path, "--out", str(map_path))
        code, _, _ = run(capsys, "cj", "to-witness", "-m", str(map_path),
                         "--out", str(back_path))
        assert code == 0
        original, _ = read_operator(w0_path)
        back, _ = read_operator(str(back_path))
        assert np.array_equal(original.matrix, back.matrix)

    def test_random_hermitian_round_trip(self, tmp_path, capsys):
        from ewkit import HermitianOp, bipartite, write_operator
        from oracles import random_hermitian

        rng = np.random.default_rng(7)
        op = HermitianOp(bipartite(3), random_hermitian(rng, 9))
        w_path = tmp_path / "w.json"
        map_path = tmp_path / "m.json"
        back_path = tmp_path / "b.json"
        write_operator(str(w_path), op)
        run(capsys, "cj", "to-map", "-w", str(w_path), "--out", str(map_path))
        run(capsys, "cj", "to-witness", "-m", str(map_path), "--out", str(back_path))
        back, _ = read_operator(str(back_path))
        assert np.array_equal(back.matrix, op.matrix)

    def test_hermiticity_violation_exits_2(self, tmp_path, capsys):
        # a map table that is not Hermiticity preserving
        bad = {
            "d_in": 2,
            "d_out": 2,
            "images": [
                {"re": [[1, 0], [0, 0]], "im": [[0, 0], [0, 0]]},
                {"re": [[0, 2], [0, 0]], "im": [[0, 0], [0, 0]]},
                {"re": [[0, 0], [1, 0]], "im": [[0, 0], [0, 0]]},
                {"re": [[0, 0], [0, 1]], "im": [[0, 0], [0, 0]]},
            ],
        }
        path = tmp_path / "bad_map.json"
        path.write_text(json.dumps(bad))
        code, _, err = run(capsys, "cj", "to-witness", "-m", str(path),
                           "--out", str(tmp_path / "w.json"))
        assert code == 2
        assert "Hermiticity" in err
