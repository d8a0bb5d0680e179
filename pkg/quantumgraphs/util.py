"""Shared helpers for the quantumgraphs package."""

from __future__ import annotations

import math
from collections.abc import Iterable
from hashlib import sha256
from typing import Any

from .const import INFINITY_TOKEN


def ceil_sqrt(value: int) -> int:
    """Return ⌈√value⌉ exactly for a nonnegative integer."""
    if value < 0:
        raise ValueError(f"ceil_sqrt of negative value: {value}")
    root = math.isqrt(value)
    return root if root * root == value else root + 1


def ceil_div(numerator: int, denominator: int) -> int:
    """Return ⌈numerator / denominator⌉ for positive integers."""
    return -(-numerator // denominator)


def parse_weight(value: Any) -> float | None:
    """Parse a nonnegative weight or the `inf` token; None when invalid.

    Booleans, NaN, negative numbers and -inf are rejected.
    """
    if value is None or isinstance(value, bool):
        return None

    if isinstance(value, str):
        token = value.strip()
        if token.casefold() == INFINITY_TOKEN:
            return math.inf
        value = token

    try:
        parsed = float(value)
    except TypeError, ValueError, OverflowError:
        return None

    if math.isnan(parsed) or parsed < 0:
        return None

    return parsed


def safe_parse_int(value: Any) -> int | None:
    """Parse an integer-like value, rejecting non-finite and decimal numbers."""
    if value is None or isinstance(value, bool):
        return None

    try:
        parsed_float = float(value)
    except TypeError, ValueError, OverflowError:
        return None

    if not math.isfinite(parsed_float) or not parsed_float.is_integer():
        return None

    return int(parsed_float)


def format_weight(value: float) -> str:
    """Format a weight so that parse_weight(format_weight(w)) == w."""
    if math.isinf(value):
        return INFINITY_TOKEN
    return repr(float(value))


def result_checksum(parts: Iterable[Any]) -> str:
    """Return a short deterministic digest of an algorithm result.

    Floats are hashed through their exact hex form so equal tables always
    produce the same digest on every platform.
    """
    digest = sha256(usedforsecurity=False)
    for part in parts:
        if isinstance(part, float):
            token = part.hex()
        else:
            token = str(part)
        digest.update(token.encode())
        digest.update(b"\x1f")
    return digest.hexdigest()[:16]


__all__ = [
    "ceil_div",
    "ceil_sqrt",
    "format_weight",
    "parse_weight",
    "result_checksum",
    "safe_parse_int",
]
