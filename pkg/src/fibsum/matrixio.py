"""Plain-text matrix format shared by the library and the CLI.

First non-comment line: the dimension n.  Then n lines of n space-separated
entries; an entry is an integer or a rational written as "p/q".  Lines
starting with '#' are comments and may appear anywhere; blank lines are
ignored.
"""

from __future__ import annotations

from fractions import Fraction


class MatrixFormatError(ValueError):
    """Malformed matrix text."""


def format_scalar(x) -> str:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def parse_scalar(token: str):
    try:
        if "/" in token:
            num, den = token.split("/")
            return Fraction(int(num), int(den))
        return int(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise MatrixFormatError(f"bad matrix entry {token!r}") from exc


def format_matrix(rows) -> str:
    n = len(rows)
    lines = [str(n)]
    lines.extend(" ".join(format_scalar(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MatrixFormatError("empty matrix text")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise MatrixFormatError(f"first line must be the dimension, got {lines[0]!r}") from exc
    if n < 1:
        raise MatrixFormatError(f"dimension must be positive, got {n}")
    if len(lines) - 1 != n:
        raise MatrixFormatError(f"expected {n} matrix rows, got {len(lines) - 1}")
    rows = []
    for k, line in enumerate(lines[1:], start=1):
        tokens = line.split()
        if len(tokens) != n:
            raise MatrixFormatError(f"row {k}: expected {n} entries, got {len(tokens)}")
        rows.append([parse_scalar(tok) for tok in tokens])
    return rows
