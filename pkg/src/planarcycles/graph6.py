"""graph6 codec and the plain edge-list text format.

graph6 stores the upper triangle column by column, ``(0,1), (0,2), (1,2),
(0,3), ...``, six bits per printable byte offset by 63. Orders above 258047
(the eight-byte header form) are rejected.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .graph import Graph, from_edge_list

log = logging.getLogger(__name__)

MAX_ORDER = 258047


class Graph6Error(ValueError):
    """Raised for text that is not a valid graph6 line."""


def _encode_order(n: int) -> str:
    if n < 0:
        raise Graph6Error("negative order")
    if n <= 62:
        return chr(63 + n)
    if n <= MAX_ORDER:
        return chr(126) + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")


def graph6_encode(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    out = [_encode_order(g.n)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        col = rows[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode one graph6 line. Nonzero padding bits are accepted with a warning."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 string")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} at position {pos} is outside 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] == 63:
        if len(vals) >= 2 and vals[1] == 63:
            raise Graph6Error(f"orders above {MAX_ORDER} are not supported")
        if len(vals) < 4:
            raise Graph6Error("truncated order header")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        if n <= 62:
            raise Graph6Error("long order header used for a small order")
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    npairs = n * (n - 1) // 2
    need = -(-npairs // 6)
    if len(body) < need:
        raise Graph6Error(f"truncated body: expected {need} bytes, got {len(body)}")
    if len(body) > need:
        raise Graph6Error(f"trailing data: expected {need} bytes, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = 6 * need - npairs
    if pad and body[-1] & ((1 << pad) - 1):
        warnings.warn("graph6 padding bits are nonzero", stacklevel=2)
    return Graph(n, tuple(rows))


def edge_list_format(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


@dataclass
class StreamError:
    line: int
    message: str


def _parse_edge_blocks(lines: list[tuple[int, str]], errors: list[StreamError]) -> Iterator[tuple[int, Graph]]:
    idx = 0
    while idx < len(lines):
        lineno, head = lines[idx]
        parts = head.split()
        try:
            n, m = int(parts[0]), int(parts[1])
            if len(parts) != 2:
                raise ValueError
        except (ValueError, IndexError):
            errors.append(StreamError(lineno, f"bad edge-list header {head!r}"))
            idx += 1
            continue
        body = lines[idx + 1 : idx + 1 + m]
        idx += 1 + m
        if len(body) < m:
            errors.append(StreamError(lineno, f"edge list truncated: expected {m} edges"))
            continue
        try:
            edges = []
            for _, text in body:
                u, v = text.split()
                edges.append((int(u), int(v)))
            yield lineno, from_edge_list(n, edges)
        except ValueError as exc:
            errors.append(StreamError(lineno, f"bad edge list: {exc}"))


def read_graphs(
    stream: TextIO | Iterable[str],
    fmt: str = "graph6",
    errors: list[StreamError] | None = None,
) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` pairs from a text stream.

    Malformed records are logged, appended to ``errors`` when given, and
    skipped.
    """
    if errors is None:
        errors = []
    if fmt == "graph6":
        for lineno, line in enumerate(stream, start=1):
            if not line.strip():
                continue
            try:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    g = graph6_decode(line)
            except Graph6Error as exc:
                errors.append(StreamError(lineno, str(exc)))
                log.debug("line %d: %s", lineno, exc)
                continue
            yield lineno, g
    elif fmt == "edge-list":
        lines = [(i, s.strip()) for i, s in enumerate(stream, start=1) if s.strip() and not s.lstrip().startswith("#")]
        before = len(errors)
        yield from _parse_edge_blocks(lines, errors)
        for err in errors[before:]:
            log.debug("line %d: %s", err.line, err.message)
    else:
        raise ValueError(f"unknown input format {fmt!r}")
