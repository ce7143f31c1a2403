"""Bounded verification of theorems about extensive contexts.

Thin wrapper over the compiled ``_extctx`` module. Reports and verdicts come
back as plain dicts with the same layout as the CLI's structured output.
"""

import json

from ._extctx import (
    BOUND_CAP,
    CategoryError,
    Context,
    FiniteObject,
    Morphism,
    UsageError,
    builtin_names,
    canonical_objects,
    closure_family_names,
    compose,
    coproduct,
    is_isomorphic,
    load_objects,
    pullback,
    theorem_ids,
)
from ._extctx import _run

__all__ = [
    "BOUND_CAP",
    "CategoryError",
    "Context",
    "FiniteObject",
    "Morphism",
    "UsageError",
    "builtin",
    "builtin_names",
    "canonical_objects",
    "check",
    "closure_family_names",
    "compose",
    "coproduct",
    "is_isomorphic",
    "load_objects",
    "pullback",
    "run",
    "theorem_ids",
    "validate_extensive",
]


def builtin(name):
    return Context.builtin(name)


def check(ctx, theorem, family="", bound=3):
    """Run one checker and return its verdict as a dict."""
    return json.loads(ctx._check(theorem, family, bound))


def validate_extensive(ctx, bound=3):
    return json.loads(ctx._validate_extensive(bound))


def run(context="finset", closures=(), bound=3, theorems=("all",), heavy_bound=None,
        objects="", timings=False):
    """Same as the CLI. Raises UsageError on bad configuration."""
    return json.loads(_run(context, list(closures), bound, list(theorems), heavy_bound,
                           objects, timings))
