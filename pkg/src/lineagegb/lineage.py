"""Lineage keys: recursive provenance labels for basis elements.

A lineage is a natural number (the index of an input generator) or an
ordered pair of lineages (the parents of the S-pair whose remainder the
element is). Leaves are plain ints and pairs are 2-tuples, so lineages are
hashable and usable as table keys directly.

Two string forms exist: the compact form ``(0,1)`` used in lineage strings
and trace lines, and the display form ``(0, 1)`` (space after each comma)
used in lineage-table listings. Task keys join the two parent lineages with
a hyphen: ``(0-1)``, ``((0,1)-2)``.
"""

from __future__ import annotations

from .errors import ParseError


def is_leaf(lineage) -> bool:
    return isinstance(lineage, int)


def lineage_to_string(lineage) -> str:
    if isinstance(lineage, int):
        return str(lineage)
    left, right = lineage
    return f"({lineage_to_string(left)},{lineage_to_string(right)})"


def display_lineage(lineage) -> str:
    """Table-listing form with a space after each comma."""
    if isinstance(lineage, int):
        return str(lineage)
    left, right = lineage
    return f"({display_lineage(left)}, {display_lineage(right)})"


def task_key(a, b) -> str:
    return f"({lineage_to_string(a)}-{lineage_to_string(b)})"


def parse_lineage(text: str):
    """Inverse of :func:`lineage_to_string`; raises ParseError on bad input."""
    pos = 0

    def fail(message, at):
        raise ParseError(message, 1, at + 1)

    def parse():
        nonlocal pos
        if pos >= len(text):
            fail("unexpected end of lineage", pos)
        ch = text[pos]
        if ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            return int(text[start:pos])
        if ch == "(":
            pos += 1
            left = parse()
            if pos >= len(text) or text[pos] != ",":
                fail("expected ','", pos)
            pos += 1
            right = parse()
            if pos >= len(text) or text[pos] != ")":
                fail("expected ')'", pos)
            pos += 1
            return (left, right)
        fail(f"unexpected character {ch!r}", pos)

    result = parse()
    if pos != len(text):
        fail("trailing input after lineage", pos)
    return result


def lineage_sort_key(lineage):
    """Canonical key order: leaves ascending numerically, then pairs by string."""
    if isinstance(lineage, int):
        return (0, lineage, "")
    return (1, 0, lineage_to_string(lineage))


def leaf_indices(lineage):
    """All generator indices mentioned anywhere in the lineage."""
    if isinstance(lineage, int):
        yield lineage
    else:
        yield from leaf_indices(lineage[0])
        yield from leaf_indices(lineage[1])
