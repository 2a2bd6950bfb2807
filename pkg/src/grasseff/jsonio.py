"""Canonical JSON helpers: sorted keys, exact rationals as strings."""

from __future__ import annotations

import json
from fractions import Fraction


def frac_str(x) -> str:
    """Normalized rational string: 'p' for integers, 'p/q' with q > 0 otherwise."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def parse_frac(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(str(s))


def jsonable(obj):
    """Recursively convert to plain JSON types; Fractions become strings."""
    if isinstance(obj, Fraction):
        return frac_str(obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    return obj


def canonical_dumps(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, separators=(",", ":"))


def dump_pretty(obj) -> str:
    return json.dumps(jsonable(obj), sort_keys=True, indent=2)
