"""Safety-aware policy repair.

Thin wrapper over the C++ core. Configs and constraints are plain dicts here
and cross into the core as JSON text.
"""

import json as _json
import os as _os

import numpy as _np

from . import _core
from ._core import ConfigError, Error, IoError, Model, efficacy, goal_reach_rate

__all__ = [
    "ConfigError",
    "Error",
    "IoError",
    "Model",
    "Runner",
    "constraint_residuals",
    "default_config",
    "efficacy",
    "goal_reach_rate",
    "load_config",
    "repair",
    "resolve_config",
    "safety_check",
]


def _f64(x):
    return _np.ascontiguousarray(x, dtype=_np.float64)


def _context(context, rows):
    return _np.zeros((rows, 0)) if context is None else _f64(context)


def default_config(scenario):
    """Resolved defaults for 'nav' or 'gait'."""
    return _json.loads(_core.default_config(scenario))


def resolve_config(config):
    """Strict parse (unknown keys raise ConfigError); returns the resolved dict."""
    return _json.loads(_core.resolve_config(_json.dumps(config)))


def load_config(path):
    with open(path) as f:
        return resolve_config(_json.load(f))


def constraint_residuals(constraints, z, a):
    z, a = _f64(z), _f64(a)
    return _core.constraint_residuals(_json.dumps(constraints), z.shape[1], a.shape[1], z, a)


def safety_check(policy, predictor, constraints, inputs, context=None, epsilon=0.0):
    inputs = _f64(inputs)
    return _core.safety_check(policy, predictor, _json.dumps(constraints), inputs,
                              _context(context, inputs.shape[0]), epsilon)


def repair(policy, predictor, constraints, inputs, context=None, **config):
    """Augmented-Lagrangian repair. Keyword arguments are repair config keys
    (mu0, eta, beta, max_outer_iters, optimizer, ...)."""
    inputs = _f64(inputs)
    return _core.repair(policy, predictor, _json.dumps(constraints), inputs,
                        _context(context, inputs.shape[0]), _json.dumps(config))


class Runner(_core.Runner):
    """Pipeline stages for one output directory."""

    def __init__(self, config, out_dir):
        if isinstance(config, (str, _os.PathLike)):
            with open(config) as f:
                config = _json.load(f)
        super().__init__(_json.dumps(config), _os.fspath(out_dir))
