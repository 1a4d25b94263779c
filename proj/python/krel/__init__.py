"""Exact calculus of linear relations between finite-dimensional Krein spaces.

Thin convenience layer over the compiled core: instance documents go in as
dicts or JSON strings, reports come back as dicts.
"""

import json as _json

from ._core import (
    KrelError,
    finite_dim_note,
    inner_product,
    negative_index,
    registered_suites,
)
from . import _core


def _as_text(document):
    if isinstance(document, str):
        return document
    return _json.dumps(document)


def classify(document):
    """Classification report for a relation or gbr instance document."""
    return _json.loads(_core.classify_document(_as_text(document)))


def adjoint(document):
    """Adjoint of a relation instance document, as a relation document."""
    return _json.loads(_core.adjoint_document(_as_text(document)))


def weyl(document, points):
    """Weyl family samples of a gbr document at the given scalar strings."""
    return _json.loads(_core.weyl_samples(_as_text(document), list(points)))


def run_suite(suite, seed=1, trials=500, max_dim=6, entry_bound=8):
    """Run a registered property suite and return the report as a dict."""
    return _json.loads(_core.run_suite(suite, seed, trials, max_dim, entry_bound))


def replay(document):
    """Re-run a stored counterexample document."""
    return _json.loads(_core.replay(_as_text(document)))


__all__ = [
    "KrelError",
    "adjoint",
    "classify",
    "finite_dim_note",
    "inner_product",
    "negative_index",
    "registered_suites",
    "replay",
    "run_suite",
    "weyl",
]
