"""Python access to the cmfix core.

Rational inputs may be int, str ("p/q") or fractions.Fraction; rational outputs are "p/q" strings.
"""

from fractions import Fraction

from . import _core
from ._core import (
    character_table,
    core,
    delta_map,
    enumerate_e,
    quiver_rep_roundtrip,
    quotient,
    residue_to_core,
    residues,
    run_cli,
    verify_filtration,
)


def _q(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def to_fraction(s):
    return Fraction(s)


def transport(a, k, k_factor, d=()):
    return _core.transport(_q(a), [_q(x) for x in k], k_factor, list(d))


def components(n, k_factor, a, k, convention="gordon"):
    return _core.components(n, k_factor, _q(a), [_q(x) for x in k], convention)


def smooth_gl1n(a, k, n):
    return _core.smooth_gl1n(_q(a), [_q(x) for x in k], n)


def smooth_quiver(theta, n):
    return _core.smooth_quiver([_q(x) for x in theta], n)


__all__ = [
    "character_table",
    "components",
    "core",
    "delta_map",
    "enumerate_e",
    "quiver_rep_roundtrip",
    "quotient",
    "residue_to_core",
    "residues",
    "run_cli",
    "smooth_gl1n",
    "smooth_quiver",
    "to_fraction",
    "transport",
    "verify_filtration",
]
