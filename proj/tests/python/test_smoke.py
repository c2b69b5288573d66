import json
import math

import numpy as np
import pytest

import simdiag

COMPLEX_PAIR = [np.array([[0, 1], [1, 1]], complex), np.array([[1, 1], [1, 0]], complex)]
KERNEL_DEFICIT = [
    np.array([[1, 1, 0], [1, 0, 0], [0, 0, 0]], complex),
    np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], complex),
]


def off_diagonal(m):
    return np.max(np.abs(m - np.diag(np.diag(m))))


def test_complex_pair_is_sdc():
    cert = simdiag.decide_sdc(COMPLEX_PAIR)
    assert cert.is_sdc
    assert cert.verdict == "SDC"
    assert cert.reason is None
    assert cert.r == 2
    P = cert.P
    for a in COMPLEX_PAIR:
        assert off_diagonal(P.T @ a @ P) <= 1e-10
    ratios = sorted(cert.diagonals[1] / cert.diagonals[0], key=lambda z: z.imag)
    assert abs(ratios[0] - (1 - 1j * math.sqrt(3)) / 2) <= 1e-10
    assert abs(ratios[1] - (1 + 1j * math.sqrt(3)) / 2) <= 1e-10


def test_kernel_deficit_report():
    cert = simdiag.decide_sdc(KERNEL_DEFICIT)
    assert not cert.is_sdc
    assert cert.reason == "kernel-deficit"
    assert (cert.kernel_dim, cert.expected_kernel_dim) == (0, 1)
    report = json.loads(cert.report())
    assert report["reason"] == "kernel-deficit"
    assert "NotSDC" in repr(cert)


def test_takagi_and_eig():
    rng = np.random.default_rng(3)
    g = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
    c = g + g.T
    V, d = simdiag.takagi(c)
    assert np.allclose(V.T @ c @ V, np.diag(d), atol=1e-10 * np.linalg.norm(c, 2))
    assert np.allclose(d, np.linalg.svd(c, compute_uv=False), atol=1e-10 * np.linalg.norm(c, 2))
    _, _, defective = simdiag.eig(np.array([[0, 1], [0, 0]], complex))
    assert defective
    assert simdiag.numerical_rank(np.array([[1, 1, 1], [1, 0, 0], [1, 0, 0]], complex)) == 2
    assert simdiag.nullspace_basis(np.eye(3, dtype=complex)).shape == (3, 0)


def test_synthesize_round_trip(tmp_path):
    mats, Q0, blocks = simdiag.synthesize(5, 3, 3, seed=4)
    assert len(mats) == 3 and Q0.shape == (5, 5) and blocks[0].shape == (3, 3)
    cert = simdiag.decide_sdc(mats)
    assert cert.is_sdc and cert.residual <= 1e-8
    ok, residual, _ = simdiag.verify_certificate(mats, cert.P)
    assert ok and residual <= 1e-8
    assert simdiag.kernel_intersection(mats).shape == (5, 2)
    assert simdiag.max_rank_point(mats).r == 3

    path = tmp_path / "family.json"
    simdiag.write_matrix_set(path, mats)
    back = simdiag.read_matrix_set(path)
    assert all(np.array_equal(a, b) for a, b in zip(mats, back))


def test_rejections_and_errors(tmp_path):
    assert simdiag.decide_sdc(simdiag.synthesize(4, 3, 3, seed=1, kind="noncommuting")[0]).reason == "non-commuting"
    assert simdiag.decide_sdc(simdiag.synthesize(4, 2, 2, seed=1, kind="defective")[0]).reason == "defective"
    with pytest.raises(ValueError):
        simdiag.decide_sdc([np.array([[0, 1], [0, 0]], complex)])
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(simdiag.FormatError):
        simdiag.read_matrix_set(bad)
    with pytest.raises(ValueError):
        simdiag.ToleranceConfig(rank_rel_tol=-1.0)


def test_evolution_algebra():
    # e1 e1 = e1, e2 e2 = e1 + e2: diagonal structure constants
    m1 = np.diag([1, 1]).astype(complex)
    m2 = np.diag([0, 1]).astype(complex)
    cert = simdiag.decide_evolution([m1, m2])
    assert cert.is_sdc
