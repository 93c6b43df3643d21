"""Deterministic plain-text rendering of expressions, shared by the
expression classes and the CLI. Coefficients print as reduced fractions."""

from __future__ import annotations

from fractions import Fraction


def format_terms(basis: str, items, fmt_index) -> str:
    """Render ordered (index, coeff) pairs as e.g. ``1/2 h[13/2] - 1/6 h[123]``."""
    if not items:
        return "0"
    pieces = []
    for i, (idx, coeff) in enumerate(items):
        sign = "-" if coeff < 0 else "+"
        mag = abs(Fraction(coeff))
        body = f"{basis}[{fmt_index(idx)}]" if idx != () else "1"
        if mag != 1 or idx == ():
            body = f"{mag} {body}" if idx != () else f"{mag}"
        if i == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces)
