import json
import os
import pathlib

import numpy as np
import pytest

import sarp

CONFIGS = pathlib.Path(os.environ.get("SARP_CONFIGS", pathlib.Path(__file__).resolve().parents[2] / "configs"))


def numpy_forward(model, x):
    h = x
    n = len(model.weights)
    for i, (w, b) in enumerate(zip(model.weights, model.biases)):
        h = h @ w.T + b
        if i + 1 < n:
            h = np.maximum(h, 0.0)
    return h


def test_forward_matches_numpy():
    m = sarp.Model.create([3, 7, 2], "relu", "identity", seed=4)
    x = np.random.default_rng(0).normal(size=(5, 3))
    np.testing.assert_allclose(m.forward(x), numpy_forward(m, x), rtol=1e-12, atol=1e-12)
    assert m.param_count == 3 * 7 + 7 + 7 * 2 + 2


def test_model_round_trip(tmp_path):
    m = sarp.Model.create([2, 4, 3], "tanh", "softmax", seed=9)
    m.save(tmp_path / "m.model")
    assert sarp.Model.load(tmp_path / "m.model") == m


def test_residuals_are_rectified():
    c = [{"name": "z0", "expr": {"feature": 0}, "upper": 1.0}]
    z = np.array([[0.5], [1.0], [3.0]])
    r = sarp.constraint_residuals(c, z, np.zeros((3, 1)))
    np.testing.assert_allclose(r[:, 0], [0.0, 0.0, 2.0])


def test_unknown_config_key_is_rejected():
    cfg = sarp.default_config("nav")
    cfg["nav"]["no_such_key"] = 1
    with pytest.raises(sarp.ConfigError):
        sarp.resolve_config(cfg)


def test_repair_reaches_halfspace_projection():
    # policy maps the constant 1 to theta; identity predictor; a.theta <= b
    theta0 = np.array([1.0, -0.5, 2.0])
    a = np.array([0.6, 0.8, 0.5])
    b = a @ theta0 - 1.2
    policy = sarp.Model.create([1, 3], seed=1)
    policy.weights = [theta0.reshape(3, 1)]
    policy.biases = [np.zeros((1, 3))]
    predictor = sarp.Model.create([3, 3], seed=2)
    predictor.weights = [np.eye(3)]
    predictor.biases = [np.zeros((1, 3))]
    terms = [{"weight": float(w), "expr": {"feature": i}} for i, w in enumerate(a)]
    cons = [{"name": "halfspace", "expr": {"affine": {"terms": terms}}, "upper": float(b)}]
    out = sarp.repair(policy, predictor, cons, np.ones((1, 1)),
                      mu0=5.0, eta=0.001, beta=2.0, inner_solver="line_search", inner_epochs=100,
                      optimizer="sgd", lr=1.0, epsilon=1e-4, max_outer_iters=60)
    assert out["converged"]
    theta = out["policy"].forward(np.ones((1, 1)))[0]
    expected = theta0 - max(0.0, a @ theta0 - b) * a / (a @ a)
    assert np.linalg.norm(theta - expected) < 1e-3
    assert all(row["mu"] > 0 for row in out["trace"])
    check = sarp.safety_check(out["policy"], predictor, cons, np.ones((1, 1)), epsilon=1e-4)
    assert check["safe"]


def test_metric_helpers():
    assert sarp.goal_reach_rate([True, False, True, True]) == pytest.approx(75.0)
    assert sarp.efficacy([False, False, True, False]) == pytest.approx(75.0)


def test_shipped_configs_resolve():
    for name in ["nav", "nav_speed", "gait", "gait_rate", "gait_partial"]:
        cfg = sarp.load_config(CONFIGS / f"{name}.json")
        assert cfg["name"] == name


def test_runner_generates_gait_data(tmp_path):
    cfg = json.loads((CONFIGS / "gait.json").read_text())
    r = sarp.Runner(cfg, tmp_path)
    r.write_resolved_config()
    r.gen_gait()
    assert (tmp_path / "gait.csv").stat().st_size > 0
    assert (tmp_path / "manifest.json").exists()
