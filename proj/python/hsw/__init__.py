"""Exact affine Hecke algebra and spherical module engine.

Laurent polynomials are returned as {exponent: coefficient} dicts and
weights as tuples in fundamental-weight coordinates.
"""

from ._hsw import Engine, InputError, StabilizationError

__all__ = ["Engine", "InputError", "StabilizationError", "laurent_str"]


def laurent_str(p, var="v"):
    """Formats {exponent: coefficient} as "v^-2 + 2 + v^2"."""
    if not p:
        return "0"
    parts = []
    for e in sorted(p):
        c = p[e]
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
