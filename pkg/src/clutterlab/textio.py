"""Plain-text formats for clutters and set-systems.

Clutter::

    clutter 3
    # comment
    1 2
    1 3
    -            <- the empty member

SetSystem::

    setsystem 2
    00
    11
    -            <- the single point of {0,1}^0
"""
from __future__ import annotations

from typing import Iterable

from .clutter_core import Clutter, ClutterError, validate


class ParseError(ValueError):
    pass


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, line in enumerate(text.split("\n"), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        out.append((lineno, s))
    return out


def _header(lineno: int, line: str, word: str) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != word:
        raise ParseError(f"line {lineno}: expected '{word} <n>', got {line!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise ParseError(f"line {lineno}: bad size {parts[1]!r}") from None
    if n < 0:
        raise ParseError(f"line {lineno}: negative size")
    return n


def _parse_member(lineno: int, line: str) -> list[int]:
    if line == "-":
        return []
    try:
        elems = [int(t) for t in line.split()]
    except ValueError:
        raise ParseError(f"line {lineno}: non-integer element in {line!r}") from None
    if elems != sorted(set(elems)):
        raise ParseError(f"line {lineno}: elements must be strictly ascending")
    return elems


def parse_clutters(text: str) -> list[Clutter]:
    """Parse one or more concatenated clutter blocks."""
    blocks: list[tuple[int, int, list]] = []
    for lineno, line in _content_lines(text):
        if line.startswith("clutter"):
            blocks.append((lineno, _header(lineno, line, "clutter"), []))
        elif not blocks:
            raise ParseError(f"line {lineno}: member before 'clutter' header")
        else:
            blocks[-1][2].append(_parse_member(lineno, line))
    out = []
    for lineno, n, members in blocks:
        try:
            out.append(validate(n, members))
        except ClutterError as exc:
            raise ParseError(f"clutter at line {lineno}: {type(exc).__name__}: {exc}") from exc
    return out


def parse_clutter(text: str) -> Clutter:
    cs = parse_clutters(text)
    if len(cs) != 1:
        raise ParseError(f"expected exactly one clutter, found {len(cs)}")
    return cs[0]


def format_clutter(c: Clutter) -> str:
    lines = [f"clutter {c.ground_size}"]
    for s in c.member_sets():
        lines.append(" ".join(map(str, s)) if s else "-")
    return "\n".join(lines) + "\n"


def format_clutters(cs: Iterable[Clutter]) -> str:
    return "".join(format_clutter(c) for c in cs)


def parse_setsystem(text: str):
    from .structure import SetSystem

    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    d = _header(*lines[0], "setsystem")
    points = []
    for lineno, line in lines[1:]:
        bits = "" if line == "-" else line
        if len(bits) != d or set(bits) - {"0", "1"}:
            raise ParseError(f"line {lineno}: expected a 0/1 string of length {d}")
        points.append(tuple(int(ch) for ch in bits))
    try:
        return SetSystem.of(d, points)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_setsystem(s) -> str:
    lines = [f"setsystem {s.dimension}"]
    for p in s.points:
        lines.append("".join(map(str, p)) if p else "-")
    return "\n".join(lines) + "\n"


def sniff_kind(text: str) -> str:
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input")
    word = lines[0][1].split()[0]
    if word not in ("clutter", "setsystem"):
        raise ParseError(f"unknown header {word!r}")
    return word
