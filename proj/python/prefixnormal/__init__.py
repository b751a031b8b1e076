"""Prefix normal words: generation, analysis and jumbled indexing."""

from fractions import Fraction

from ._pnw import (
    FormatError,
    JumbledIndex,
    ResourceError,
    abelian_complexity,
    check,
    flipext,
    generate,
    is_prenecklace,
    lazy_flipext,
    max_word,
    min_word,
    pnf,
    profile,
)
from . import _pnw


def is_prefix_normal(word, zero=False):
    return check(word, zero) is None


def min_density(word):
    """(delta, iota, kappa) with delta as a Fraction."""
    delta, iota, kappa = _pnw.min_density(word)
    return Fraction(delta), iota, kappa


def min_density_periodic(preperiod, period):
    """Minimum density of preperiod followed by period repeated forever."""
    return Fraction(_pnw.min_density_periodic(preperiod, period))


__all__ = [
    "FormatError",
    "JumbledIndex",
    "ResourceError",
    "abelian_complexity",
    "check",
    "flipext",
    "generate",
    "is_prefix_normal",
    "is_prenecklace",
    "lazy_flipext",
    "max_word",
    "min_density",
    "min_density_periodic",
    "min_word",
    "pnf",
    "profile",
]
