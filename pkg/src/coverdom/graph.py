"""Simple undirected graphs on dense integer vertex ids.

Vertices are ``0..n-1``.  Vertex sets handed to the solvers are Python
ints used as bitsets (bit ``v`` set means ``v`` is in the set).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)
    # original vertex ids when this graph was cut out of a bigger one
    labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        for v, row in enumerate(self.adj):
            for i, u in enumerate(row):
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if i and row[i - 1] >= u:
                    raise GraphError(f"adjacency row {v} not strictly sorted")
        for v, row in enumerate(self.adj):
            for u in row:
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency {v}-{u}")

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={self.m}>"

    @cached_property
    def m(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.adj)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return (1 << v) & self.open_masks[u] != 0

    @cached_property
    def open_masks(self) -> tuple[int, ...]:
        """Bitset of N(v) for every vertex."""
        out = []
        for row in self.adj:
            m = 0
            for u in row:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        """Bitset of N[v] = N(v) + v for every vertex."""
        return tuple(m | (1 << v) for v, m in enumerate(self.open_masks))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def components(self, within: int | None = None) -> list[list[int]]:
        """Connected components (sorted lists), optionally of the subgraph induced by a bitset."""
        if within is None:
            within = self.full_mask
        seen = 0
        comps = []
        for s in range(self.n):
            if not (within >> s) & 1 or (seen >> s) & 1:
                continue
            comp_mask = 1 << s
            frontier = comp_mask
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= self.open_masks[low.bit_length() - 1]
                    f ^= low
                nxt &= within & ~comp_mask
                comp_mask |= nxt
                frontier = nxt
            seen |= comp_mask
            comps.append(mask_to_list(comp_mask))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled ``0..len-1`` in increasing order of ``vertices``."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        adj = tuple(tuple(index[u] for u in self.adj[v] if u in index) for v in vs)
        return Graph(len(vs), adj, labels=tuple(vs))

    def bfs_distances(self, source: int) -> list[int]:
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for u in self.adj[v]:
                if dist[u] < 0:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return dist


def mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def from_edge_list(n: int, edges: Iterable[Sequence[int]], name: str | None = None) -> Graph:
    """Build a graph from an edge list; loops, repeats and bad endpoints raise."""
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    rows: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if v in rows[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        rows[u].add(v)
        rows[v].add(u)
    return Graph(n, tuple(tuple(sorted(r)) for r in rows), name=name)


def stats(g: Graph) -> dict:
    degs = g.degrees
    regular = len(set(degs)) == 1
    return {
        "n": g.n,
        "m": g.m,
        "max_degree": g.max_degree,
        "min_degree": g.min_degree,
        "is_connected": g.is_connected(),
        "regularity": degs[0] if regular and degs else None,
    }


def regularity(g: Graph) -> int | None:
    """Common degree if ``g`` is regular, else None."""
    return stats(g)["regularity"]


# --- named graphs -----------------------------------------------------------

def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"a path needs at least 1 vertex, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs at least 1 vertex, got {n}")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)], name=f"K{n}")


def grid(rows: int, cols: int) -> Graph:
    """``rows`` x ``cols`` grid; vertex ``(r, c)`` is ``r * cols + c``."""
    if rows < 1 or cols < 1:
        raise GraphError("grid dimensions must be at least 1")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return from_edge_list(rows * cols, edges, name=f"grid{rows}x{cols}")


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """G1 □ G2 with vertex ``(u, v)`` numbered ``u * g2.n + v``."""
    n2 = g2.n
    edges = []
    for u in range(g1.n):
        for v in range(n2):
            for w in g2.adj[v]:
                if v < w:
                    edges.append((u * n2 + v, u * n2 + w))
            for x in g1.adj[u]:
                if u < x:
                    edges.append((u * n2 + v, x * n2 + v))
    name = f"{g1.name}x{g2.name}" if g1.name and g2.name else None
    return from_edge_list(g1.n * n2, edges, name=name)


# Petersen: outer cycle 1-5 then spokes to a..e; ids 0-4 are 1..5, 5-9 are a..e.
PETERSEN_LABELS = ("1", "2", "3", "4", "5", "a", "b", "c", "d", "e")
_PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),      # 1-2-3-4-5
    (0, 5), (1, 8), (2, 6), (3, 9), (4, 7),      # 1a 2d 3b 4e 5c
    (5, 6), (6, 7), (7, 8), (8, 9), (9, 5),      # a-b-c-d-e
]

# Dodecahedron as drawn over the Petersen graph: ids 0-9 carry the unprimed
# labels 1..5, a..e and ids 10-19 the primed ones, so the double cover is v -> v % 10.
DODECAHEDRON_LABELS = PETERSEN_LABELS + tuple(s + "'" for s in PETERSEN_LABELS)
_DODECAHEDRON_EDGES = [
    (11, 18), (13, 19), (12, 16), (14, 17), (10, 15),   # 2'd' 4'e' 3'b' 5'c' 1'a'
    (0, 5), (2, 6), (4, 7), (1, 8), (3, 9),             # 1a 3b 5c 2d 4e
    (5, 6), (6, 7), (7, 8), (8, 9), (9, 5),             # a-b-c-d-e
    (0, 11), (2, 11), (2, 13), (4, 13), (4, 10),        # 1-2'-3-4'-5-1'
    (1, 10), (1, 12), (3, 12), (3, 14), (0, 14),        # 2-1' 2-3'-4-5'-1
    (18, 19), (15, 19), (16, 15), (16, 17), (18, 17),   # d'e' a'e' b'a' b'c' d'c'
]


def petersen() -> Graph:
    return from_edge_list(10, _PETERSEN_EDGES, name="Petersen")


def dodecahedron() -> Graph:
    return from_edge_list(20, _DODECAHEDRON_EDGES, name="Dodecahedron")


# --- text formats -----------------------------------------------------------

def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    else:
        head = [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = []
    for j in range(1, n):
        mj = g.open_masks[j]
        for i in range(j):
            bits.append((mj >> i) & 1)
    bits += [0] * (-len(bits) % 6)
    body = [
        sum(b << (5 - t) for t, b in enumerate(bits[s:s + 6]))
        for s in range(0, len(bits), 6)
    ]
    return "".join(chr(x + 63) for x in head + body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("malformed graph6: empty input")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise GraphError("malformed graph6: byte outside 63..126")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) >= 2 and data[1] < 63:
        if len(data) < 4:
            raise GraphError("malformed graph6 header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        if len(data) < 8:
            raise GraphError("malformed graph6 header")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    if len(rest) != need:
        kind = "trailing garbage" if len(rest) > need else "bit count mismatch"
        raise GraphError(f"malformed graph6: {kind} ({len(rest)} data bytes, expected {need})")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (rest[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    if need and rest[-1] & ((1 << (need * 6 - nbits)) - 1):
        raise GraphError("malformed graph6: nonzero padding bits")
    return from_edge_list(n, edges)


def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list_text(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    n, m = int(rows[0][0]), int(rows[0][1])
    body = rows[1:]
    if len(body) != m:
        raise GraphError(f"edge list header promises {m} edges, found {len(body)}")
    if any(len(r) != 2 for r in body):
        raise GraphError("every edge line must hold exactly two vertex ids")
    return from_edge_list(n, [(int(a), int(b)) for a, b in body])


def read_graph(path) -> Graph:
    """Read a graph6 file or an edge-list file (told apart by the first character)."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped[:1].isdigit():
        return parse_edge_list_text(text)
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    return parse_graph6(first)


def write_graph(g: Graph, path, fmt: str = "graph6") -> None:
    with open(path, "w") as fh:
        if fmt == "graph6":
            fh.write(to_graph6(g) + "\n")
        elif fmt == "edgelist":
            fh.write(to_edge_list_text(g))
        else:
            raise ValueError(f"unknown graph format {fmt!r}")
