"""Python access to the exact twisted Heisenberg-Virasoro engine.

Vectors cross the boundary as dicts mapping label tuples to rational strings,
for example ``{(0,): "1", (2,): "-1/3"}`` for ``1 - t^2/3`` in an Omega module.
"""

import json

from . import _hvpy
from ._hvpy import ConfigError, RewriteBudgetExceeded, bracket, check_catalog, version

__all__ = [
    "ConfigError",
    "Module",
    "RewriteBudgetExceeded",
    "bracket",
    "check_catalog",
    "classify",
    "run_suite",
    "version",
]


def _to_terms(vector):
    return [(list(label), str(c)) for label, c in vector.items()]


def _from_terms(terms):
    return {tuple(label): c for label, c in terms}


def run_suite(suite):
    """Run a suite given as a dict; returns (report dict, exit code)."""
    text, code = _hvpy.run_suite_json(json.dumps(suite), False)
    return json.loads(text), code


def classify(spec):
    return json.loads(_hvpy.classify_json(json.dumps(spec)))


class Module:
    """A module built from the same JSON records the CLI accepts."""

    def __init__(self, spec):
        self._m = _hvpy.Module.from_json(json.dumps(spec))

    @property
    def name(self):
        return self._m.name

    def format_label(self, label):
        return self._m.format_label(list(label))

    def act(self, element, vector):
        return _from_terms(self._m.act(element, _to_terms(vector)))

    def defect(self, x, y, vector):
        return _from_terms(self._m.defect(x, y, _to_terms(vector)))
