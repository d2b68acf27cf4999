"""Exact fibre structure for the rank-2 Hitchin map.

Thin wrappers over the compiled core: arguments go in as plain Python values,
results come back as dicts decoded from the core's JSON.
"""

import json

from . import _core
from ._core import HitchinError, ValidationError

__all__ = [
    "HitchinError",
    "ValidationError",
    "analyze",
    "strata",
    "verify_example",
    "roundtrip",
    "sweep",
    "parse_divisor",
    "error_path",
]


def analyze(g, D_s, d=0, d_L=None, reducible=False, emit_strata=True, emit_graph=True):
    """Fibre report for one base point; D_s as text ("2p+2q") or a divisor dict."""
    req = {"g": g, "d": d, "D_s": D_s, "reducible": reducible,
           "options": {"emit_strata": emit_strata, "emit_graph": emit_graph}}
    if d_L is not None:
        req["d_L"] = d_L
    return json.loads(_core.analyze(json.dumps(req)))


def strata(g, d, dprime):
    if not isinstance(dprime, str):
        dprime = json.dumps(dprime)
    return json.loads(_core.strata(g, d, dprime))


def verify_example(m, case2=False, order=0):
    return json.loads(_core.verify_example(m, case2, order))


def roundtrip(seed=1, trials=500, max_multiplicity=5):
    return json.loads(_core.roundtrip(seed, trials, max_multiplicity))


def sweep(seed=20240601):
    return json.loads(_core.sweep(seed))


def parse_divisor(text):
    return json.loads(_core.parse_divisor(text))


def error_path(exc):
    """JSON pointer carried by a ValidationError."""
    return exc.args[1] if len(exc.args) > 1 else ""
