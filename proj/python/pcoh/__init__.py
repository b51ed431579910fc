"""Exact Poisson cohomology of f(1+h) dx^dy in the plane."""

import json

from ._core import (
    DomainError,
    InputError,
    JetInstabilityError,
    NotCocycleError,
    Structure,
    run,
)
from ._core import verify_json as _verify_json


def structure(selector=None, *, lam=None, mu=None, f=None, h="0", weights=(1, 1)):
    if (selector is None) == (f is None):
        raise ValueError("give exactly one of selector or f")
    if selector is not None:
        return Structure.from_type(selector, None if lam is None else str(lam), None if mu is None else str(mu))
    return Structure.from_polys(f, h, tuple(weights))


def summary(s):
    return json.loads(s.summary_json())


def normalize(s, coefficient):
    return json.loads(s.normalize_json(str(coefficient)))


def table(s, jet_order=0):
    return json.loads(s.table_json(jet_order))


def oracle(s, jet_order=0):
    return json.loads(s.oracle_json(jet_order))


def verify(selector, lam=None, mu=None):
    return json.loads(_verify_json(selector, None if lam is None else str(lam), None if mu is None else str(mu)))


__all__ = [
    "DomainError",
    "InputError",
    "JetInstabilityError",
    "NotCocycleError",
    "Structure",
    "normalize",
    "oracle",
    "run",
    "structure",
    "summary",
    "table",
    "verify",
]
