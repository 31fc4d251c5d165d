"""graph6 and edge-list encodings.

Edge list: a header line ``"n m"`` followed by ``m`` lines ``"u v"``
(0-indexed, written with ``u < v``), each newline-terminated.

graph6: the standard printable encoding, restricted to ``n <= 62`` so the
size fits in one byte (``chr(n + 63)``); the upper triangle is read column by
column and packed into 6-bit groups offset by 63.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import BadParams, ParseError
from .graph import Graph

GRAPH6 = "graph6"
EDGELIST = "edgelist"
_ALIASES = {"g6": GRAPH6, "graph6": GRAPH6, "edges": EDGELIST, "edgelist": EDGELIST}
G6_MAX_N = 62


def _fmt(name: str) -> str:
    try:
        return _ALIASES[name.lower()]
    except KeyError:
        raise BadParams(f"unknown graph format {name!r}") from None


def encode_graph6(g: Graph) -> bytes:
    if g.n > G6_MAX_N:
        raise BadParams(f"graph6 output limited to n <= {G6_MAX_N}; use the edge-list format")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    out = bytearray([g.n + 63])
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def decode_graph6(data: bytes) -> Graph:
    data = data.rstrip(b"\r\n")
    base = 0
    if data.startswith(b">>graph6<<"):
        base = 10
        data = data[10:]
    if not data:
        raise ParseError("empty graph6 string", base)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} outside the graph6 range 63..126", base + i)
    if data[0] == 126:
        raise ParseError(f"graph6 sizes above {G6_MAX_N} are not supported", base)
    n = data[0] - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    if len(body) != need:
        raise ParseError(f"expected {need} data bytes for n={n}, found {len(body)}",
                         base + 1 + min(len(body), need))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if ((body[k // 6] - 63) >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if need and (body[-1] - 63) & ((1 << (need * 6 - nbits)) - 1):
        raise ParseError("non-zero padding bits", base + len(data) - 1)
    return Graph(n, tuple(sorted(edges)))


def encode_edgelist(g: Graph) -> bytes:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return ("\n".join(lines) + "\n").encode("ascii")


def decode_edgelist(data: bytes) -> Graph:
    offset = 0
    tokens = []  # (line number, [(token, byte offset)])
    for line in data.splitlines(keepends=True):
        fields = []
        pos = 0
        for part in line.split():
            pos = line.index(part, pos)
            fields.append((part, offset + pos))
            pos += len(part)
        if fields:
            tokens.append(fields)
        offset += len(line)

    def as_int(tok):
        text, off = tok
        try:
            return int(text)
        except ValueError:
            raise ParseError(f"expected an integer, found {text!r}", off) from None

    if not tokens:
        raise ParseError("missing header line 'n m'", 0)
    header = tokens[0]
    if len(header) != 2:
        raise ParseError("header must be 'n m'", header[0][1])
    n, m = as_int(header[0]), as_int(header[1])
    if n < 0 or m < 0:
        raise ParseError("negative count in header", header[0][1])
    body = tokens[1:]
    if len(body) != m:
        where = body[m][0][1] if len(body) > m else offset
        raise ParseError(f"header announces {m} edges, found {len(body)}", where)
    seen = set()
    for fields in body:
        if len(fields) != 2:
            raise ParseError("edge line must be 'u v'", fields[0][1])
        u, v = as_int(fields[0]), as_int(fields[1])
        for val, tok in ((u, fields[0]), (v, fields[1])):
            if not 0 <= val < n:
                raise ParseError(f"vertex {val} out of range [0, {n})", tok[1])
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", fields[0][1])
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key}", fields[0][1])
        seen.add(key)
    return Graph(n, tuple(sorted(seen)))


def read_graph(data: bytes | str, fmt: str = "edges") -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    return decode_graph6(data) if _fmt(fmt) == GRAPH6 else decode_edgelist(data)


def write_graph(g: Graph, fmt: str = "edges") -> bytes:
    if _fmt(fmt) == GRAPH6:
        return encode_graph6(g) + b"\n"
    return encode_edgelist(g)


def iter_graph6(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Graphs from a graph6 stream, one per line; blank lines are skipped."""
    for line in lines:
        if isinstance(line, str):
            line = line.encode("ascii")
        line = line.strip()
        if line:
            yield decode_graph6(line)
