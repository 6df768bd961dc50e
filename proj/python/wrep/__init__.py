"""Exact checks and conversions for representations up to homotopy, weak
representations and VB-groupoids over finite groupoids."""

import json

from . import _wrep
from ._wrep import Error, ParseError, UsageError, ValidationError

__all__ = ["Error", "ParseError", "UsageError", "ValidationError", "validate", "convert", "roundtrip", "fuzz",
           "fixture", "render_text"]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def validate(instance):
    """Validate an instance (JSON text or dict); returns the report as a dict."""
    return json.loads(_wrep.validate(_text(instance)))


def convert(instance, source_kind, target_kind):
    """Returns (report, converted instance as a dict or None)."""
    report, output = _wrep.convert(_text(instance), source_kind, target_kind)
    return json.loads(report), None if output is None else json.loads(output)


def roundtrip(pipeline, trials=10, seed=1, max_objects=4, max_arrows=12, max_dim=3):
    return json.loads(_wrep.roundtrip(pipeline, trials, seed, max_objects, max_arrows, max_dim))


def fuzz(trials=50, seed=1, max_objects=4, max_arrows=12, max_dim=3):
    return json.loads(_wrep.fuzz(trials, seed, max_objects, max_arrows, max_dim))


def fixture(name):
    return json.loads(_wrep.fixture(name))


def render_text(report):
    return _wrep.render_text(_text(report))
