"""File formats: bit-exact operator round trips, map tables, CSV, certificates."""

import json
import math

import numpy as np
import pytest

from ewkit import (
    HermitianOp,
    MalformedFileError,
    ScanConfig,
    SweepRow,
    bipartite,
    blockpos_scan,
    certificate_to_json_dict,
    certify_ppt,
    choi_map,
    ha_state,
    read_map_table,
    read_operator,
    sweep,
    sweep_to_csv,
    witness_dk,
    write_map_table,
    write_operator,
    write_sweep_csv,
)

from oracles import random_hermitian


class TestOperatorRoundTrip:
    def test_random_hermitian_bit_exact(self, tmp_path):
        rng = np.random.default_rng(101)
        op = HermitianOp(bipartite(3), random_hermitian(rng, 9))
        path = tmp_path / "op.json"
        write_operator(str(path), op, {"note": "round trip"})
        loaded, meta = read_operator(str(path))
        assert np.array_equal(loaded.matrix, op.matrix)
        assert loaded.space == op.space
        assert meta == {"note": "round trip"}

    def test_state_round_trip_bit_exact(self, tmp_path):
        op = ha_state(3, 0.37)
        path = tmp_path / "rho.json"
        write_operator(str(path), op)
        loaded, _ = read_operator(str(path))
        assert np.array_equal(loaded.matrix, op.matrix)

    def test_integer_witness_serializes_as_integers(self, tmp_path):
        path = tmp_path / "w.json"
        write_operator(str(path), witness_dk(3, 1))
        doc = json.loads(path.read_text())
        flat = [v for row in doc["re"] for v in row]
        assert all(isinstance(v, int) for v in flat)
        assert sorted(set(flat)) == [-1, 0, 1]

    def test_malformed_json_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json at all")
        with pytest.raises(MalformedFileError):
            read_operator(str(path))

    def test_missing_fields_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"dims": [2, 2]}))
        with pytest.raises(MalformedFileError, match="re and im"):
            read_operator(str(path))

    def test_shape_mismatch_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        doc = {"dims": [2, 2], "re": [[1, 0], [0, 1]], "im": [[0, 0], [0, 0]]}
        path.write_text(json.dumps(doc))
        with pytest.raises(MalformedFileError, match="shape"):
            read_operator(str(path))

    def test_non_hermitian_file_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        re = np.zeros((4, 4))
        re[0, 1] = 1.0
        doc = {"dims": [2, 2], "re": re.tolist(), "im": np.zeros((4, 4)).tolist()}
        path.write_text(json.dumps(doc))
        with pytest.raises(MalformedFileError, match="Hermiticity"):
            read_operator(str(path))


class TestMapTableRoundTrip:
    def test_choi_map_round_trip(self, tmp_path):
        table = choi_map(3, 1)
        path = tmp_path / "map.json"
        write_map_table(str(path), table)
        loaded = read_map_table(str(path))
        assert loaded.d_in == 3 and loaded.d_out == 3
        for i in range(3):
            for j in range(3):
                assert np.array_equal(loaded.image(i, j), table.image(i, j))

    def test_bad_image_count_rejected(self, tmp_path):
        path = tmp_path / "map.json"
        path.write_text(json.dumps({"d_in": 2, "d_out": 2, "images": []}))
        with pytest.raises(MalformedFileError, match="images"):
            read_map_table(str(path))


class TestSweepCsv:
    def test_header_and_shape(self):
        rows = sweep(3, 1, [0.5], [0.0], [0.0])
        text = sweep_to_csv(rows)
        lines = text.strip().split("\n")
        assert lines[0] == "gamma,lambda,mu,alpha,trace,detected"
        assert len(lines) == 2
        cells = lines[1].split(",")
        assert cells[0] == "0.5"
        assert cells[3] == ""  # alpha absent
        assert cells[5] == "true"

    def test_floats_round_trip_through_repr(self):
        rows = sweep(3, 1, [0.1 + 2 * 0.1], [0.0], [0.0])  # a noisy double
        text = sweep_to_csv(rows)
        gamma_cell = text.strip().split("\n")[1].split(",")[0]
        assert float(gamma_cell) == 0.1 + 2 * 0.1

    def test_empty_rows_give_header_only(self, tmp_path):
        path = tmp_path / "sweep.csv"
        write_sweep_csv(str(path), [])
        assert path.read_text() == "gamma,lambda,mu,alpha,trace,detected\n"

    def test_rewrite_is_byte_identical(self, tmp_path):
        rows = sweep(3, 1, [0.1 * i for i in range(1, 10)], [0.0, 0.05], [0.0])
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        write_sweep_csv(str(a), rows)
        write_sweep_csv(str(b), sweep(3, 1, [0.1 * i for i in range(1, 10)], [0.0, 0.05], [0.0]))
        assert a.read_bytes() == b.read_bytes()

    def test_alpha_rows_supported(self):
        row = SweepRow(gamma=None, lam=None, mu=None, alpha=0.25,
                       trace_value=-0.1, detected=True)
        line = sweep_to_csv([row]).strip().split("\n")[1]
        assert line == ",,,0.25,-0.1,true"


class TestCertificateJson:
    def test_envelope_keys(self):
        cert = certify_ppt(ha_state(3, 0.5), (False, True))
        doc = certificate_to_json_dict(cert)
        assert set(doc) == {"kind", "verdict", "evidence", "assumptions", "seed"}
        assert doc["kind"] == "ppt"
        assert doc["verdict"] is True
        assert doc["seed"] is None
        json.dumps(doc)  # must be JSON-serializable as-is

    def test_scan_certificate_carries_seed(self):
        cert = blockpos_scan(witness_dk(3, 1), ScanConfig(restarts=5, seed=99))
        doc = certificate_to_json_dict(cert)
        assert doc["seed"] == 99
        text = json.dumps(doc)
        assert "histories" in text

    def test_nan_free_evidence(self):
        cert = blockpos_scan(witness_dk(3, 1), ScanConfig(restarts=5, seed=1))
        doc = certificate_to_json_dict(cert)
        parsed = json.loads(json.dumps(doc))
        assert not any(
            isinstance(v, float) and math.isnan(v) for v in parsed["evidence"].values()
            if not isinstance(v, list)
        )
