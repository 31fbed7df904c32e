"""Index coding bounds, linear scheme certification and coded caching.

Exact rationals are returned as :class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _core
from ._core import (
    DomainError,
    Indivisible,
    Instance,
    InvalidScheme,
    NotMultipleUnicast,
    ParseError,
    Scheme,
    SearchSpaceOverflow,
    UnknownName,
    builtin_instance,
    builtin_scheme,
    load_instance,
    load_scheme,
    parse_instance,
    parse_scheme,
    validate,
)

__all__ = [
    "DomainError",
    "Indivisible",
    "Instance",
    "InvalidScheme",
    "NotMultipleUnicast",
    "ParseError",
    "Scheme",
    "SearchSpaceOverflow",
    "UnknownName",
    "builtin_instance",
    "builtin_scheme",
    "cache_simulate",
    "cache_simulate_decentralized",
    "composite_rate",
    "linear_check",
    "load_instance",
    "load_scheme",
    "mais",
    "parse_instance",
    "parse_scheme",
    "r_c_opt",
    "r_cman",
    "r_d_opt",
    "r_dman",
    "validate",
    "verify_theorem4",
    "zero_error",
]

_RATIONAL_KEYS = {
    "rate", "symmetric_rate", "bound", "load", "formula",
    "certified_rate", "load_from_rate", "expected_load", "simulated_load",
}


def _fractions(result):
    out = {}
    for key, value in result.items():
        if key in _RATIONAL_KEYS:
            value = Fraction(value)
        elif key == "allocation":
            value = {p: Fraction(v) for p, v in value.items()}
        out[key] = value
    return out


def composite_rate(instance, cap=None, threads=1):
    """Largest composite-coding symmetric rate over all decoding choices."""
    return _fractions(_core.composite_rate(instance, cap, threads))


def linear_check(instance, scheme):
    """Certify a GF(2) linear scheme with K_j = D_j."""
    return _fractions(_core.linear_check(instance, scheme))


def zero_error(instance, scheme, mode="algebraic"):
    """Per-user zero-error decodability."""
    return _core.zero_error(instance, scheme, mode)


def mais(instance):
    """Maximum acyclic induced subgraph and the symmetric-rate bound c / size."""
    return _fractions(_core.mais(instance))


def cache_simulate(K, N, t, demands=None, B=0, mode="reduced", seed=1):
    """Centralized placement, delivery and bit-exact decoding."""
    return _fractions(_core.cache_simulate(K, N, t, demands, B, mode, seed))


def cache_simulate_decentralized(K, N, M, demands=None, B=10000, seed=1):
    """Random placement with cache size M (files); M may be a Fraction."""
    return _fractions(_core.cache_simulate_decentralized(K, N, str(Fraction(M)), demands, B, seed))


def verify_theorem4(K, N, t, demands=None, k_bits=1):
    """Synthesize and certify the index-coding scheme of leader-reduced delivery."""
    return _fractions(_core.verify_theorem4(K, N, t, demands, k_bits))


def r_cman(K, t):
    return Fraction(_core.r_cman(K, t))


def r_c_opt(K, N, t):
    return Fraction(_core.r_c_opt(K, N, t))


def r_dman(K, N, M):
    return Fraction(_core.r_dman(K, N, str(Fraction(M))))


def r_d_opt(K, N, M):
    return Fraction(_core.r_d_opt(K, N, str(Fraction(M))))
