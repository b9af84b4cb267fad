"""Exact checks on exterior powers of simple Lie algebras.

Simple-root indices are 1-based, as on the command line. Reports come back
as plain dicts and lists in the same layout as the CLI's JSON output.
"""

import json

from . import _lambdag
from ._lambdag import ConfigError, report_version

__all__ = [
    "ConfigError",
    "report_version",
    "root_system",
    "verify_theorem",
    "verify_orthogonality",
    "verify_invariants",
    "verify_appendix",
    "run_suite",
]


def root_system(type, rank):
    return json.loads(_lambdag.root_system(type, rank))


def verify_theorem(type, rank, X, k, max_ambient=10000):
    return json.loads(_lambdag.verify_theorem(type, rank, list(X), k, max_ambient))


def verify_orthogonality(type, rank, X, k, grading, max_ambient=10000):
    return json.loads(_lambdag.verify_orthogonality(type, rank, list(X), k, grading, max_ambient))


def verify_invariants(type, rank, beta, k, max_ambient=10000):
    """cau1, lau1, cau2 and pau2 records for X = Pi minus beta."""
    return json.loads(_lambdag.verify_invariants(type, rank, beta, k, max_ambient))


def verify_appendix(types="ABCDEFG", max_rank=12):
    return json.loads(_lambdag.verify_appendix(types, max_rank))


def run_suite(deep=False, jobs=1):
    return json.loads(_lambdag.run_suite(deep, jobs))
