"""Starlike-at-infinity domains: completeness of exponential frequencies.

Domain specs are accepted as a dict, a JSON string, or a path to a JSON file.
"""

import json
import os

from . import _core
from ._core import ValidationError, WindowTooSmall, alpha_map, phi_beta, phi_beta_R

__all__ = [
    "ValidationError",
    "WindowTooSmall",
    "alpha_map",
    "analyze",
    "approx_demo",
    "classify",
    "contains",
    "decide",
    "decide_topological",
    "hardy_membership",
    "lambda_infinity",
    "phi_beta",
    "phi_beta_R",
]


def _text(spec):
    if isinstance(spec, dict):
        return json.dumps(spec)
    if isinstance(spec, (str, os.PathLike)) and os.path.isfile(spec):
        with open(spec, encoding="utf-8") as f:
            return f.read()
    return spec


def contains(spec, z):
    return _core.contains(_text(spec), complex(z))


def classify(spec):
    return json.loads(_core.classify(_text(spec)))


def analyze(spec):
    return json.loads(_core.analyze(_text(spec)))


def decide(spec, p=2.0):
    return json.loads(_core.decide(_text(spec), p))


def decide_topological(spec, resolution=512):
    return json.loads(_core.decide_topological(_text(spec), resolution))


def lambda_infinity(spec):
    return json.loads(_core.lambda_infinity(_text(spec)))


def hardy_membership(lam, domain, p):
    return json.loads(_core.hardy_membership(complex(lam), domain, p))


def approx_demo(name, budget=64, n=256):
    return json.loads(_core.approx_demo(name, budget, n))
