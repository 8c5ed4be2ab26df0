"""graph6 and edge-list serialization.

graph6: one header byte ``n + 63`` (or ``~`` plus three bytes for
``63 <= n < 258048``), then the upper triangle in column order
``x(0,1), x(0,2), x(1,2), x(0,3), ...`` packed big-endian into 6-bit
groups, each offset by 63, zero-padded to a whole group.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from distbal.errors import (
    BadHeader,
    BadLength,
    CountMismatch,
    DuplicateEdge,
    FormatError,
    GraphError,
    LoopEdge,
    NonzeroPadding,
    SyntaxFormatError,
)
from distbal.graph import Graph, build_graph

_G6_HEADER = ">>graph6<<"
_LONG_LIMIT = 258048


def _n_bytes(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < _LONG_LIMIT:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise ValueError(f"graph6 supports n < {_LONG_LIMIT}, got {n}")


def to_graph6(G: Graph) -> str:
    n = G.n
    nbits = n * (n - 1) // 2
    bits = bytearray(nbits + (-nbits) % 6)
    for u, v in G.edges:
        # u < v: bit index of x(u, v) in column-major order
        bits[v * (v - 1) // 2 + u] = 1
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _n_bytes(n) + "".join(body)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` prefix)."""
    s = line.strip()
    base = 0
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
        base = len(_G6_HEADER)
    if not s:
        raise BadHeader("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise BadHeader(f"byte {ch!r} outside the printable range 63..126", base + i)
    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) < 4:
            raise BadHeader("truncated long-form vertex count", base)
        if s[1] == "~":
            raise BadHeader(f"vertex counts >= {_LONG_LIMIT} are not supported", base + 1)
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n < 63:
            raise BadHeader(f"long form used for n = {n} < 63", base)
        pos = 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[pos:]
    if len(body) != need:
        raise BadLength(f"expected {need} data bytes for n = {n}, got {len(body)}", base + pos)
    edges = []
    idx = 0
    u, v = 0, 1
    for bi, ch in enumerate(body):
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            bit = (val >> shift) & 1
            if idx < nbits:
                if bit:
                    edges.append((u, v))
                idx += 1
                u += 1
                if u == v:
                    u, v = 0, v + 1
            elif bit:
                raise NonzeroPadding("padding bits must be zero", base + pos + bi)
    edges.sort()
    return build_graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for every non-blank line."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield lineno, parse_graph6(line)
        except FormatError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    ``#`` starts a comment; blank lines are skipped. Errors carry the
    1-based line number.
    """
    header = None
    pairs = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise SyntaxFormatError(f"line {lineno}: expected integers, got {line!r}", lineno) from None
        if len(nums) != 2:
            raise SyntaxFormatError(f"line {lineno}: expected two integers, got {line!r}", lineno)
        if header is None:
            if min(nums) < 0:
                raise SyntaxFormatError(f"line {lineno}: negative count", lineno)
            header = nums
            continue
        u, v = nums
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise SyntaxFormatError(f"line {lineno}: vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise LoopEdge(f"line {lineno}: loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: edge ({u}, {v}) already given on line {seen[key]}")
        seen[key] = lineno
        pairs.append((u, v))
    if header is None:
        raise SyntaxFormatError("missing 'n m' header line", 1)
    if len(pairs) != header[1]:
        raise CountMismatch(f"header declares {header[1]} edges, found {len(pairs)}")
    try:
        return build_graph(header[0], pairs)
    except GraphError as exc:  # pragma: no cover - caught above
        raise SyntaxFormatError(str(exc)) from None


def to_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def read_graphs(stream: TextIO, fmt: str) -> list[Graph]:
    """All graphs in ``stream``: one per line for ``g6``, a single one for ``edges``."""
    if fmt == "g6":
        return [g for _, g in read_graph6_lines(stream)]
    if fmt == "edges":
        return [parse_edge_list(stream.read())]
    raise ValueError(f"unknown format {fmt!r}")


def write_graph(G: Graph, fmt: str) -> str:
    if fmt == "g6":
        return to_graph6(G) + "\n"
    if fmt == "edges":
        return to_edge_list(G)
    raise ValueError(f"unknown format {fmt!r}")
