import numpy as np
import pytest

import sptucker


def test_soft_threshold():
    x = np.array([[0.3, -0.05], [0.0, 1.2]])
    got = sptucker.soft_threshold(x, 0.1)
    want = np.array([[0.2, 0.0], [0.0, 1.1]])
    assert np.allclose(got, want)


def test_factor_set_roundtrip_orthogonal():
    rng = np.random.default_rng(0)
    factors = [np.linalg.qr(rng.standard_normal((4, 4)))[0] for _ in range(3)]
    f = sptucker.FactorSet(factors)
    assert f.order == 3
    assert f.operator_storage() == 3 * 16

    x = rng.standard_normal((4, 4, 4))
    back = f.adjoint(f.forward(x))
    assert np.allclose(back, x, atol=1e-12)


def test_forward_matches_kronecker_oracle():
    rng = np.random.default_rng(1)
    factors = [np.linalg.qr(rng.standard_normal((4, 3)))[0][:, :3] for _ in range(2)]
    f = sptucker.FactorSet(factors)
    p = sptucker.kronecker_operator(f)

    x = rng.standard_normal((4, 4))
    want = (p.T @ x.flatten(order="F")).reshape((3, 3), order="F")
    assert np.allclose(f.forward(x), want, atol=1e-12)


def test_recover_four_stage_on_synthetic_instance():
    inst = sptucker.make_instance([10, 10, 10], [7, 7, 7], support_size=5, seed=3)
    result = sptucker.recover(inst["observation"], inst["factors"], method="four_stage")

    scores = sptucker.support_scores([10, 10, 10], inst["support"], result["support"])
    assert scores["f1"] >= 0.9
    assert sptucker.frobenius_error(inst["core"], result["estimate"]) < 0.5
    assert [s["name"] for s in result["stages"]] == [
        "stage1_fista",
        "stage2_augment",
        "stage3_projected_fista",
        "stage4_postprocess",
    ]


def test_recover_methods_and_config():
    inst = sptucker.make_instance([6, 6, 6], [4, 4, 4], support_size=4, seed=5)
    cfg = sptucker.RecoveryConfig()
    cfg.max_iters = 200
    a = sptucker.recover(inst["observation"], inst["factors"], method="fista", config=cfg)
    b = sptucker.recover(inst["observation"], inst["factors"], method="fista_pp", config=cfg)
    assert a["estimate"].shape == (6, 6, 6)
    assert len(b["support"]) > 0
    with pytest.raises(ValueError):
        sptucker.recover(inst["observation"], inst["factors"], method="nope")


def test_postprocess_noiseless_exact():
    inst = sptucker.make_instance([6, 6, 6], [4, 4, 4], support_size=4, seed=7,
                                  noise_std=0.0)
    f = inst["factors"]
    x0 = np.zeros((6, 6, 6))
    got = sptucker.postprocess(inst["observation"], f, x0, inst["support"])
    assert np.allclose(got, inst["core"], atol=1e-7)


def test_size_guard_raises():
    rng = np.random.default_rng(2)
    factors = [np.linalg.qr(rng.standard_normal((40, 28)))[0][:, :28] for _ in range(3)]
    f = sptucker.FactorSet(factors)
    with pytest.raises(sptucker.SizeGuardError):
        sptucker.kronecker_operator(f)


def test_dtf_roundtrip(tmp_path):
    x = np.random.default_rng(3).standard_normal((3, 4, 2))
    path = str(tmp_path / "t.dtf")
    sptucker.write_dtf(path, x)
    back = sptucker.read_dtf(path)
    assert back.shape == (3, 4, 2)
    assert np.array_equal(back, x)


def test_determinism():
    a = sptucker.make_instance([5, 5, 5], [4, 4, 4], support_size=3, seed=11)
    b = sptucker.make_instance([5, 5, 5], [4, 4, 4], support_size=3, seed=11)
    assert np.array_equal(a["observation"], b["observation"])
    assert a["support"] == b["support"]
