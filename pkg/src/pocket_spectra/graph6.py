"""graph6 encoding (McKay's format) for simple undirected graphs.

Orders up to 62 use a one-byte header; orders up to 258047 use the
``~`` + three-byte form.  The upper triangle is packed column by column,
six bits per printable byte (value + 63).
"""
from __future__ import annotations

from typing import IO, Iterable, Iterator

import numpy as np

from .errors import Graph6ParseError, InvalidParameter
from .graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 258047


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= MAX_ORDER:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise InvalidParameter(f"graph6 supports orders up to {MAX_ORDER}, got {n}")


def encode(g: Graph) -> str:
    n = g.order
    a = g.adjacency
    bits = [a[i, j] for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | int(b)
        body.append(chr(v + 63))
    return _encode_order(n) + "".join(body)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip("\r\n")
    start = len(HEADER) if s.startswith(HEADER) else 0
    for k in range(start, len(s)):
        if not 63 <= ord(s[k]) <= 126:
            raise Graph6ParseError(f"byte {s[k]!r} outside graph6 range", k)
    pos = start
    if pos >= len(s):
        raise Graph6ParseError("missing order header", pos)
    if s[pos] == "~":
        if pos + 1 < len(s) and s[pos + 1] == "~":
            raise Graph6ParseError(f"orders above {MAX_ORDER} are not supported", pos)
        if pos + 4 > len(s):
            raise Graph6ParseError("truncated long-form order header", len(s))
        n = 0
        for c in s[pos + 1 : pos + 4]:
            n = (n << 6) | (ord(c) - 63)
        if n <= 62:
            raise Graph6ParseError("long-form header used for a small order", pos)
        pos += 4
    else:
        n = ord(s[pos]) - 63
        pos += 1
    if n < 1:
        raise Graph6ParseError("graph must have at least one vertex", start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != nbytes:
        off = pos + min(len(body), nbytes)
        raise Graph6ParseError(
            f"expected {nbytes} data bytes for order {n}, got {len(body)}", off
        )
    a = np.zeros((n, n), dtype=np.uint8)
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if (byte >> (5 - k % 6)) & 1:
                a[i, j] = a[j, i] = 1
            k += 1
    if nbits % 6:
        last = ord(body[-1]) - 63
        if last & ((1 << (6 - nbits % 6)) - 1):
            raise Graph6ParseError("nonzero padding bits", len(s) - 1)
    return Graph(a)


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, Graph | Graph6ParseError]]:
    """Yield ``(line_number, graph_or_error)`` for each non-blank line.

    Bad lines produce their parse error instead of stopping the stream.
    """
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, decode(line)
        except Graph6ParseError as exc:
            yield lineno, exc


def read_graph6(fh: IO[str]) -> list[Graph]:
    """Read every graph from a file, raising on the first malformed line."""
    out = []
    for lineno, item in iter_graph6(fh):
        if isinstance(item, Graph6ParseError):
            raise Graph6ParseError(f"line {lineno}: {item}", item.offset)
        out.append(item)
    return out


def write_graph6(fh: IO[str], graphs: Iterable[Graph]) -> None:
    for g in graphs:
        fh.write(encode(g) + "\n")
