import math

import numpy as np
import pytest

import holochannel as hc


def test_pauli_products():
    x, z = hc.PauliString("X"), hc.PauliString("Z")
    assert str(x * z) == "-iY"
    assert not x.commutes(z)
    assert hc.PauliString("XX").commutes(hc.PauliString("ZZ"))
    m = hc.PauliString("XZ").matrix()
    # Qubit 0 is the least significant bit.
    want = np.kron(np.diag([1, -1]), np.array([[0, 1], [1, 0]]))
    assert np.allclose(m, want)


def test_stabilizer_entropy_matches_numpy():
    g = hc.StabilizerGroup(["XXX", "ZZI"])
    rho = g.density_matrix()
    assert np.isclose(np.trace(rho).real, 1)
    ev = np.linalg.eigvalsh(rho)
    ev = ev[ev > 1e-12]
    assert math.isclose(g.entropy([0, 1, 2]), -np.sum(ev * np.log2(ev)), abs_tol=1e-9)
    # XXX * ZZI = (-iY)(-iY)X = -YYX
    assert g.contains("-YYX")
    assert not g.contains("YYX")
    with pytest.raises(ValueError):
        hc.StabilizerGroup(["X", "Z"])


def test_noise_to_deformation():
    d = hc.noise_to_deformation(0.2)
    assert math.isclose(d["g"], math.log(2), rel_tol=1e-12)
    assert hc.noise_to_deformation(0.0)["zero_noise"]


def test_ising_steady_state_is_cat_mixture():
    L = 6
    rho = hc.ising_steady_state(L)
    xall = np.array([[1.0]])
    for _ in range(L):
        xall = np.kron(np.array([[0, 1], [1, 0]]), xall)
    target = (np.eye(2**L) + xall) / 2**L
    assert hc.trace_distance(rho, target) < 1e-10
    assert math.isclose(hc.ring_cmi(rho, L, 2, 1, 2, 1), 1.0, abs_tol=1e-9)
    assert math.isclose(hc.entropy(rho), L - 1, abs_tol=1e-9)
    assert math.isclose(hc.fidelity(rho, rho), 1.0, abs_tol=1e-9)


def test_w_channel_degeneracy():
    assert hc.w_channel_spectrum(0.5, 4)["degeneracy"] == 2
    assert hc.w_channel_spectrum(-0.5, 4)["degeneracy"] == 1
    assert hc.w_channel_spectrum(0.0, 4)["degeneracy"] == 5
    rho = hc.w_boundary_state(0.5, 4)
    assert np.allclose(rho, rho.conj().T)
    assert np.isclose(np.trace(rho).real, 1)
    assert np.isclose(np.trace(hc.deformed_tc_boundary_state(0.5, 4)).real, 1)


def test_ring_circuit_and_appendix():
    g = hc.evolve_ring_circuit(4, 2)
    assert g.rank == g.num_qubits
    checks = hc.verify_appendix("ring")
    assert checks and all(ok for _, ok, _ in checks)


def test_overlap():
    ov, dev = hc.overlap_check(0.0, 0.3, 3, 2)
    t = math.tanh(0.6) ** 2
    assert math.isclose(ov, ((1 + t) ** 3 + (1 - t) ** 3) / 2, rel_tol=1e-12)
    assert math.isclose(dev, abs(ov - 1), abs_tol=1e-15)


def test_run_config():
    rep = hc.run_config({"experiment": "jw_check", "L": [4]})
    assert all(v["passed"] for v in rep["verdicts"])
    assert all(v["criterion"] == "C10" for v in rep["verdicts"])
    with pytest.raises(ValueError):
        hc.run_config({"experiment": "jw_check", "L": [4], "bogus": 1})
