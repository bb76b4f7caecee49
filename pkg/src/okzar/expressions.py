"""Parsing and printing of divisor expressions over the symbols E1..En, D1..Dn."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .errors import InputError

if TYPE_CHECKING:  # pragma: no cover
    from .variety import VarietyData

_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?(?P<sym>[ED]\d+)?\s*"
)


def parse_divisor(text: str, variety: "VarietyData", level: int = 0) -> tuple[Fraction, ...]:
    """Evaluate a linear expression like "D2+2E2" to effective-basis coordinates."""
    n = variety.n - level
    coords = [Fraction(0)] * n
    pos = 0
    first = True
    stripped = text.strip()
    if not stripped:
        raise InputError("empty divisor expression")
    while pos < len(stripped):
        m = _TERM.match(stripped, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot parse divisor expression at ...{stripped[pos:]!r}")
        sign, coef, sym = m.group("sign"), m.group("coef"), m.group("sym")
        if sign is None and not first:
            raise InputError(f"missing sign before ...{stripped[pos:]!r}")
        if sym is None:
            raise InputError(f"expected a symbol E<k> or D<k> in {text!r}")
        try:
            factor = Fraction(coef) if coef else Fraction(1)
        except ZeroDivisionError:
            raise InputError(f"zero denominator in coefficient {coef!r}") from None
        if sign == "-":
            factor = -factor
        idx = int(sym[1:])
        if not 1 <= idx <= n:
            raise InputError(f"symbol {sym} out of range 1..{n}")
        if sym[0] == "E":
            coords[idx - 1] += factor
        else:
            col = variety.nef_matrix(level).column(idx - 1)
            for j in range(n):
                coords[j] += factor * col[j]
        pos = m.end()
        first = False
    return tuple(coords)


def format_divisor(coords: Sequence[Fraction], symbol: str = "E") -> str:
    """Render coordinates as a signed linear combination, e.g. "2E1-E3"."""
    parts: list[str] = []
    for i, c in enumerate(coords):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        term = f"{symbol}{i + 1}" if mag == 1 else f"{mag}{symbol}{i + 1}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+{term}" if c > 0 else f"-{term}")
    return "".join(parts) if parts else "0"


def divisor_label(variety: "VarietyData", coords: Sequence, level: int = 0) -> str:
    """Preferred symbolic name of a class: nef basis if the class is a
    nonnegative combination there, else the effective basis."""
    from .variety import d_coordinates

    cs = [Fraction(x) for x in coords]
    dc = d_coordinates(variety, cs, level)
    if all(x >= 0 for x in dc):
        return format_divisor(dc, "D")
    return format_divisor(cs, "E")
