"""Python access to the Borel-ideal fiber and Groebner basis checks.

A spec is a dict {"n": ..., "ideals": [{"borel_generators": [...]}, ...]}
with generators as "x2*x5" strings or exponent lists, or a path to such a JSON file.
"""

import json
import os

from . import _core
from ._core import Error, ParseError, example_names, parameter_gate, run_example

__all__ = [
    "Error",
    "ParseError",
    "closure",
    "example_names",
    "fiber_graph",
    "koszul_report",
    "load_spec",
    "obstructions",
    "parameter_gate",
    "run_example",
    "verify",
]


def load_spec(path):
    with open(path) as f:
        return json.load(f)


def _spec_text(spec):
    if isinstance(spec, (str, os.PathLike)):
        spec = load_spec(spec)
    return json.dumps(spec)


def _budget(budget):
    return [budget] if isinstance(budget, int) else list(budget)


def closure(spec):
    """Minimal generators of each ideal, as text."""
    return json.loads(_core.closure(_spec_text(spec)))


def fiber_graph(spec, multidegree, basis="g1"):
    """Vertices, edges (with rule indices), sinks and cycle flag of one fiber."""
    return json.loads(_core.fiber_graph(_spec_text(spec), multidegree, basis))


def verify(spec, budget, basis="g1", jobs=1):
    """Same report as `borel-rees verify`."""
    return json.loads(_core.verify(_spec_text(spec), _budget(budget), basis, jobs))


def obstructions(spec, budget, jobs=1):
    return json.loads(_core.obstructions(_spec_text(spec), _budget(budget), jobs))


def koszul_report(spec, budget, jobs=1):
    return json.loads(_core.koszul_report(_spec_text(spec), _budget(budget), jobs))
