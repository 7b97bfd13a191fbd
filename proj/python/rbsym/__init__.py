"""Redei-Berge symmetric functions of digraphs, posets and permutations.

Objects are dicts in the JSON formats of the C++ library ({"n", "edges"},
{"n", "relations"}, {"one_line"}) or digraph text such as "3; 1 2; 2 3".
"""

import json

from . import _rbsym
from ._rbsym import (
    CapacityError,
    ConsistencyError,
    DomainError,
    Error,
    PrecisionError,
    ValidationError,
    suite_names,
)

__all__ = [
    "CapacityError",
    "ConsistencyError",
    "DomainError",
    "Error",
    "PrecisionError",
    "ValidationError",
    "compute",
    "invariants",
    "poly",
    "search",
    "suite_names",
    "verify",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def compute(obj, basis="F", kind="auto", threads=1):
    """U of the object as {"basis": ..., "terms": [...]}."""
    return json.loads(_rbsym.compute(_text(obj), kind=kind, basis=basis, threads=threads))


def poly(obj, m, kind="auto"):
    """The principal specialization u(m) as a Python int."""
    return int(_rbsym.poly(_text(obj), kind=kind, m=m))


def invariants(obj, kind="auto", tournament=False):
    return json.loads(_rbsym.invariants(_text(obj), kind=kind, tournament=tournament))


def verify(suite, n=4, k=3, samples=20, seed=0, threads=1):
    return json.loads(_rbsym.verify(suite, n=n, k=k, samples=samples, seed=seed, threads=threads))


def search(cls, n):
    """(summary, groups) of a collision search."""
    summary, lines = _rbsym.search(cls, n)
    return json.loads(summary), [json.loads(line) for line in lines]
