"""Exact computations with dialgebras: catalog, doubling, identity checks."""

import json

from . import _core
from ._core import (
    Algebra,
    ParseError,
    SchemaError,
    builtin,
    builtin_names,
    canonical,
    double,
    from_json,
    grid_search,
    identity_set,
    jordan,
    kp,
    leibniz,
    load,
    predicate_names,
    predicates,
    quotient,
)

__all__ = [
    "Algebra",
    "ParseError",
    "SchemaError",
    "builtin",
    "builtin_names",
    "canonical",
    "check",
    "check_predicate",
    "double",
    "from_json",
    "grid_search",
    "identity_set",
    "jordan",
    "kp",
    "leibniz",
    "load",
    "predicate_names",
    "predicates",
    "quotient",
]


def check(algebra, identity):
    """Verdict for one DSL identity as a dict with "passed" and, on failure, "witness"."""
    return json.loads(_core.check_identity_json(algebra, identity))


def check_predicate(algebra, name):
    return json.loads(_core.check_predicate_json(algebra, name))
