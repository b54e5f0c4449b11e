import json
import math

import numpy as np
import pytest

import bsgate

CNOT_SIGNS = [1, 1, 1, 1, 1, -1, 1, 1, -1, 1, -1, -1]


def angles_from_signs(signs):
    return [s * math.pi / 4 for s in signs]


def test_transfer_matrix_is_orthogonal():
    rng = np.random.default_rng(7)
    g = bsgate.transfer_matrix(rng.uniform(-4, 4, 12).tolist())
    assert g.shape == (8, 8)
    assert np.abs(g @ g.T - np.eye(8)).max() < 1e-12
    assert bsgate.orthogonality_residual(g) < 1e-12


def test_closed_form_matches_composition():
    angles = np.linspace(-1.0, 2.0, 12).tolist()
    block = bsgate.closed_form_block(angles)
    assert np.abs(block - bsgate.transfer_matrix(angles)[:4, :4]).max() < 1e-12


def test_cnot_network_block():
    block = bsgate.transfer_matrix(angles_from_signs(CNOT_SIGNS))[:4, :4]
    assert np.abs(math.sqrt(2) * block - bsgate.target_matrix("cnot")).max() < 1e-12


def test_enumeration():
    solutions = bsgate.enumerate_sign_solutions("cnot")
    assert len(solutions) == 4
    assert solutions[0] == CNOT_SIGNS


def test_permanent():
    m = np.array([[1, 2], [3, 4]], dtype=complex)
    assert bsgate.permanent(m) == pytest.approx(10)


def test_hong_ou_mandel():
    angles = [0.0] * 12
    angles[0] = math.pi / 4  # splitter on lines 0 and 4
    g = bsgate.transfer_matrix(angles)
    probs, kept = bsgate.two_photon_distribution(g, 0, 4)
    assert kept == 1.0
    assert sum(probs.values()) == pytest.approx(1.0, abs=1e-12)
    assert all(len(set(label.split("-"))) == 1 for label, p in probs.items() if p > 1e-12)


def test_postselected_rate():
    g = bsgate.transfer_matrix(angles_from_signs(CNOT_SIGNS))
    _, kept = bsgate.two_photon_distribution(g, 1, 2, postselect=True)
    assert kept == pytest.approx(0.25, abs=1e-12)


def test_continuous_search():
    result = bsgate.continuous_angle_search(bsgate.target_matrix("swap"), 1e-6)
    assert result["converged"]
    assert result["residual"] < 1e-6


def test_verify_and_simulate():
    config = json.dumps({"gate": "cnot", "signs": CNOT_SIGNS, "semantics": "occupation"})
    passed, report = bsgate.verify(config)
    assert passed
    assert json.loads(report)["block_residual"] < 1e-12
    sim = bsgate.simulate(config)
    assert sim == bsgate.simulate(config)
    assert json.loads(sim)["truth_table_match"]
    assert bsgate.simulate(config, "csv").startswith("input,semantics,outcome")


def test_errors():
    with pytest.raises(bsgate.ConfigError):
        bsgate.verify('{"gate": "toffoli"}')
    with pytest.raises(ValueError):
        bsgate.transfer_matrix([0.0] * 11)
    with pytest.raises(ValueError):
        bsgate.continuous_angle_search(np.zeros((4, 4)), 0.0)
