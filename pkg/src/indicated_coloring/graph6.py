"""Bit-exact graph6 codec (short form, n <= 62).

Encoding: byte n+63, then the upper triangle of the adjacency matrix in
column-major order ((0,1),(0,2),(1,2),(0,3),...), packed big-endian into
6-bit groups, each offset by 63.  Zero padding completes the last group.
"""

from __future__ import annotations

from .graphs import Graph, GraphError

_MAX_SHORT = 62


class Graph6Error(GraphError):
    """Malformed graph6 text or unsupported size."""


def encode_graph6(g: Graph) -> str:
    if g.n > _MAX_SHORT:
        raise Graph6Error(f"short-form graph6 supports n <= {_MAX_SHORT}, got {g.n}")
    out = [chr(g.n + 63)]
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        o = ord(ch)
        if not (63 <= o <= 126):
            raise Graph6Error(f"byte {o} out of graph6 range in {text!r}")
        vals.append(o - 63)
    if vals[0] == 63:
        raise Graph6Error("long-form graph6 (n >= 63) is not supported")
    n = vals[0]
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[1:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, got {len(body)}"
        )
    bits = []
    for v in body:
        for shift in range(5, -1, -1):
            bits.append((v >> shift) & 1)
    m = n * (n - 1) // 2
    if any(bits[m:]):
        raise Graph6Error("nonzero padding bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)
