"""Plain-text instance format shared by the CLI, generator and fixtures.

Layout (whitespace separated, ``#`` starts a comment line)::

    n root
    child parent w u      <- n-1 edge lines

Node ids are arbitrary positive integers; weights are non-negative
integers. With an explicit fixed-point ``scale``, weight fields (and
nothing else) may be decimals and are multiplied by the scale, which must
yield integers. :func:`format_instance` emits the canonical form: no
comments, edges sorted by child id, single spaces.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .tree import RootedTree, build_tree


def _parse_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected integer {what}, got {token!r}", line) from None


def _parse_weight(token: str, what: str, line: int, scale: int | None) -> int:
    if scale is None:
        return _parse_int(token, what, line)
    try:
        value = Fraction(token) * scale
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected number {what}, got {token!r}", line) from None
    if value.denominator != 1:
        raise ParseError(
            f"{what} {token!r} is not integral at scale {scale}", line)
    return int(value)


def parse_instance(text: str, scale: int | None = None) -> RootedTree:
    """Parse instance text into a validated tree.

    Raises :class:`ParseError` (with the offending line number) on malformed
    text; structural problems propagate from :func:`build_tree`.
    """
    header: tuple[int, int] | None = None
    records = []
    expected = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 2:
                raise ParseError("header must be 'n root'", line_no)
            n = _parse_int(tokens[0], "node count", line_no)
            root = _parse_int(tokens[1], "root id", line_no)
            if n < 2:
                raise ParseError(f"node count must be >= 2, got {n}", line_no)
            if root < 1:
                raise ParseError(f"root id must be positive, got {root}", line_no)
            header = (n, root)
            expected = n - 1
            continue
        if len(records) == expected:
            raise ParseError(
                f"unexpected extra line; {expected} edge lines already read", line_no)
        if len(tokens) != 4:
            raise ParseError("edge line must be 'child parent w u'", line_no)
        child = _parse_int(tokens[0], "child id", line_no)
        par = _parse_int(tokens[1], "parent id", line_no)
        if child < 1 or par < 1:
            raise ParseError("node ids must be positive", line_no)
        wv = _parse_weight(tokens[2], "base length", line_no, scale)
        uv = _parse_weight(tokens[3], "upgraded length", line_no, scale)
        records.append((child, par, wv, uv))

    if header is None:
        raise ParseError("empty instance", 1)
    n, root = header
    if len(records) != n - 1:
        raise ParseError(
            f"expected {n - 1} edge lines, found {len(records)}", 1)
    tree = build_tree(records, root)
    if tree.node_count != n:
        raise ParseError(
            f"header says {n} nodes but edges span {tree.node_count}", 1)
    return tree


def format_instance(tree: RootedTree) -> str:
    """Canonical text form; parse -> format round-trips byte-identically."""
    lines = [f"{tree.node_count} {tree.root}"]
    for child in sorted(tree.parent):
        lines.append(f"{child} {tree.parent[child]} {tree.w[child]} {tree.u[child]}")
    return "\n".join(lines) + "\n"


def load_instance(path: str | Path, scale: int | None = None) -> RootedTree:
    return parse_instance(Path(path).read_text(), scale=scale)


def save_instance(tree: RootedTree, path: str | Path) -> None:
    Path(path).write_text(format_instance(tree))
