import json

import numpy as np
import pytest

from schurmaps import SerializationError, decompose_identity_xi, eraser_scenario
from schurmaps import serialize
from conftest import random_correlation, random_density, random_flat_decomposition


class TestMatrixEnvelope:
    def test_round_trip_exact(self, rng):
        m = random_density(rng, 3).matrix
        kind, back = serialize.matrix_from_dict(serialize.matrix_to_dict(m, "state"))
        assert kind == "state"
        assert np.array_equal(back, m)

    def test_json_file_round_trip(self, tmp_path, rng):
        m = random_correlation(rng, 4).matrix
        path = tmp_path / "xi.json"
        serialize.save_json(path, serialize.matrix_to_dict(m, "correlation"))
        _, back = serialize.load_matrix(path)
        assert np.array_equal(back, m)

    def test_rejects_unknown_kind(self):
        with pytest.raises(SerializationError):
            serialize.matrix_to_dict(np.eye(2), "mystery")

    def test_rejects_bad_entry_count(self):
        with pytest.raises(SerializationError):
            serialize.matrix_from_dict({"kind": "generic", "dim": 2, "entries": [[1, 0]]})

    def test_rejects_malformed(self):
        with pytest.raises(SerializationError):
            serialize.matrix_from_dict({"dim": 2})


class TestDecompositionEnvelope:
    def test_round_trip(self, rng):
        dec = random_flat_decomposition(rng, 3, 5)
        obj = serialize.decomposition_to_dict(dec)
        back = serialize.decomposition_from_dict(json.loads(json.dumps(obj)))
        assert np.array_equal(back.weights, dec.weights)
        assert np.max(np.abs(back.phase_vectors - dec.phase_vectors)) < 1e-15

    def test_clock_round_trip(self):
        dec = decompose_identity_xi(4)
        back = serialize.decomposition_from_dict(serialize.decomposition_to_dict(dec))
        assert np.max(np.abs(back.phase_vectors - dec.phase_vectors)) < 1e-15

    def test_rejects_shape_mismatch(self):
        with pytest.raises(SerializationError):
            serialize.decomposition_from_dict(
                {"dim": 2, "weights": [1.0], "phases": [[0.0, 0.0, 0.0]]}
            )


class TestDilationEnvelope:
    def test_kind_and_env_block(self):
        scenario = eraser_scenario(2)
        obj = serialize.dilation_to_dict(scenario.dilation)
        assert obj["kind"] == "unitary"
        assert obj["env"]["dim_env"] == 2
        assert len(obj["env"]["vectors"]) == 2


class TestPatternCsv:
    def test_format(self, tmp_path):
        path = tmp_path / "p.csv"
        serialize.pattern_to_csv(path, [0.0, 0.1], [1.0, 0.3333333333333333])
        lines = path.read_text().splitlines()
        assert lines[0] == "theta,intensity"
        assert len(lines) == 3
        theta, intensity = lines[2].split(",")
        assert float(theta) == 0.1
        assert float(intensity) == 0.3333333333333333
