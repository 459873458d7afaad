"""Exact classification of G_a quotients of invariant hypersurfaces."""

import json

from ._core import (
    REPORT_SCHEMA,
    GaquotError,
    ParseError,
    canonical,
    fixture_names,
    parse_error_position,
    verify_winkelmann_relation,
)
from . import _core

__all__ = [
    "REPORT_SCHEMA",
    "GaquotError",
    "ParseError",
    "canonical",
    "classify_fixture",
    "fixture_job",
    "fixture_names",
    "kernel_generators",
    "parse_error_position",
    "run_job",
    "verify_winkelmann_relation",
]


def run_job(job):
    """Run a job (dict or JSON text); returns (exit_code, report dict)."""
    text = job if isinstance(job, str) else json.dumps(job)
    code, report = _core.run_job(text)
    return code, json.loads(report)


def fixture_job(name, command="classify"):
    return json.loads(_core.fixture_job(name, command))


def classify_fixture(name):
    return run_job(fixture_job(name))


def kernel_generators(representation, max_degree):
    return _core.kernel_generators(json.dumps(representation), max_degree)
