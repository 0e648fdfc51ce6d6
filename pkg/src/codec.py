# Graph serialization - graph6, adjacency lists and named primitives
from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, List, Tuple

import networkx as nx

from src.errors import GraphParseError
from src.graph import (
    Graph, complete_graph, cycle_graph, path_graph, spider_graph, star_graph,
)

GRAPH6_HEADER = ">>graph6<<"


def strip_graph6_header(text: str) -> str:
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    return s


def graph6_encode(g: Graph) -> str:
    if g.n == 0:
        return "?"
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def _size_field(s: str) -> Tuple[int, int]:
    # (n, offset of the first body byte)
    if ord(s[0]) < 126:
        return ord(s[0]) - 63, 1
    if len(s) < 4 or ord(s[1]) == 126:
        raise GraphParseError("unsupported or truncated graph6 size field", 1)
    n = 0
    for ch in s[1:4]:
        n = n << 6 | (ord(ch) - 63)
    return n, 4


def graph6_decode(text: str) -> Graph:
    """Decode one graph6 string, with or without the >>graph6<< header.

    networkx does the unpacking; malformed input is rejected here first so the
    error carries the byte offset.
    """
    s = strip_graph6_header(text)
    if not s:
        raise GraphParseError("empty graph6 string", 0)
    for offset, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"invalid graph6 byte {ch!r}", offset)
    n, pos = _size_field(s)
    n_bits = n * (n - 1) // 2
    expected = pos + (n_bits + 5) // 6
    if len(s) != expected:
        raise GraphParseError(f"graph6 body has {len(s) - pos} bytes, expected {expected - pos}",
                              min(len(s), expected))
    padding = 6 * (expected - pos) - n_bits
    if padding and (ord(s[-1]) - 63) & ((1 << padding) - 1):
        raise GraphParseError("nonzero graph6 padding bits", len(s) - 1)
    if n == 0:
        return Graph(0, ())
    return Graph.from_networkx(nx.from_graph6_bytes(s.encode("ascii")))


def graph6_stream_decode(text: str) -> List[Graph]:
    # One graph per non-empty line
    return [graph6_decode(line) for line in text.splitlines() if line.strip()]


def graph6_stream_encode(graphs: Iterable[Graph]) -> str:
    return "".join(graph6_encode(g) + "\n" for g in graphs)


_ADJ_TOKEN = re.compile(r"\s*(\d+)\s*(?:-\s*(\d+)\s*)?$")


def adjacency_decode(text: str) -> Graph:
    """Parse "u-v" edges separated by commas or newlines; "v" declares a vertex.

    The vertex count is one more than the largest id mentioned.
    """
    edges = []
    top = -1
    offset = 0
    for line in text.splitlines(keepends=True):
        for token in line.split(","):
            stripped = token.strip()
            if stripped:
                m = _ADJ_TOKEN.match(token.rstrip("\r\n"))
                if not m:
                    raise GraphParseError(f"bad adjacency token {stripped!r}", offset + token.find(stripped))
                u = int(m.group(1))
                top = max(top, u)
                if m.group(2) is not None:
                    v = int(m.group(2))
                    if u == v:
                        raise GraphParseError(f"loop {u}-{v}", offset + token.find(stripped))
                    top = max(top, v)
                    edges.append((u, v))
            offset += len(token) + 1
        offset -= 1
    return Graph.from_edges(top + 1, edges)


def adjacency_encode(g: Graph) -> str:
    tokens = [f"{u}-{v}" for u, v in g.edges()]
    tokens.extend(str(v) for v in range(g.n) if g.degree(v) == 0)
    return ",".join(tokens)


_NAMED = re.compile(r"^(K|P|C|S)(\d+(?:,\d+)*)$")


def named_graph(name: str) -> Graph:
    # K4, K1,3 (star), P5, C6, S2,2,2 (spider); vertex 0 is the centre
    m = _NAMED.match(name.strip().replace(" ", "").replace("_", "").replace("{", "").replace("}", ""))
    if not m:
        raise GraphParseError(f"unknown named graph {name!r}", 0)
    family, args = m.group(1), [int(a) for a in m.group(2).split(",")]
    if family == "K" and len(args) == 1:
        return complete_graph(args[0])
    if family == "K" and len(args) == 2 and args[0] == 1:
        return star_graph(args[1])
    if family == "P" and len(args) == 1:
        return path_graph(args[0])
    if family == "C" and len(args) == 1 and args[0] >= 3:
        return cycle_graph(args[0])
    if family == "S":
        return spider_graph(args)
    raise GraphParseError(f"unsupported named graph {name!r}", 0)


def parse_graph(text: str) -> Graph:
    """Parse any supported textual graph: named primitive, adjacency list or graph6."""
    s = text.strip()
    if _NAMED.match(s.replace(" ", "").replace("_", "").replace("{", "").replace("}", "")):
        return named_graph(s)
    if s.startswith(GRAPH6_HEADER):
        return graph6_decode(s)
    if s and all(ch.isdigit() or ch in "-, \r\n\t" for ch in s):
        return adjacency_decode(s)
    return graph6_decode(s)


def load_graph(source: str) -> Graph:
    # Positional input: '-' is handled by the caller, existing paths are read,
    # anything else is parsed inline
    path = Path(source)
    if path.exists() and path.is_file():
        return parse_graph(path.read_text(encoding="utf-8"))
    return parse_graph(source)
