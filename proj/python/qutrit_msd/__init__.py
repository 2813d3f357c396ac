"""Qutrit magic state distillation screening (exact-arithmetic core).

Thin wrapper over the compiled ``_core`` module.  Coefficient dictionaries map
degree -> integer coefficient; rationals come back as ``(num, den)`` tuples.
"""

from ._core import (
    QmsdError,
    ResourceLimit,
    css,
    distance,
    distill_profile,
    enumerator_digest,
    macwilliams,
    oracle,
    search,
    shorten,
    wenum,
)

__all__ = [
    "QmsdError",
    "ResourceLimit",
    "css",
    "distance",
    "distill_profile",
    "enumerator_digest",
    "macwilliams",
    "oracle",
    "search",
    "shorten",
    "wenum",
]
