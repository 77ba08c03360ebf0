"""Covering projections and permutation-voltage lifts.

A projection is stored as an explicit vertex map ``total -> base`` so that
hand-labelled covers and constructed lifts go through the same checks.
Lifted vertex ``(v, i)`` (base vertex ``v``, sheet ``i``) has id ``v * k + i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .graph import Graph, GraphError, from_edge_list


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class VoltageAssignment:
    """One permutation of ``range(k)`` per base edge ``(u, v)``, ``u < v``.

    ``perm[(u, v)][i]`` is the sheet reached from sheet ``i`` of ``u`` when
    crossing to ``v``; the arc ``v -> u`` uses the inverse.
    """

    base: Graph
    k: int
    perm: Mapping[tuple[int, int], tuple[int, ...]]

    def __post_init__(self):
        if self.k < 1:
            raise CoverError(f"fold count must be at least 1, got {self.k}")
        edges = set(self.base.edges())
        if set(self.perm) != edges:
            missing = edges - set(self.perm)
            extra = set(self.perm) - edges
            raise CoverError(f"voltage keys do not match base edges (missing {sorted(missing)[:3]}, extra {sorted(extra)[:3]})")
        target = tuple(range(self.k))
        for e, p in self.perm.items():
            if tuple(sorted(p)) != target:
                raise CoverError(f"voltage on edge {e} is not a permutation of 0..{self.k - 1}")

    @classmethod
    def identity(cls, base: Graph, k: int) -> VoltageAssignment:
        ident = tuple(range(k))
        return cls(base, k, {e: ident for e in base.edges()})

    @classmethod
    def from_list(cls, base: Graph, k: int, perms: Sequence[Sequence[int]]) -> VoltageAssignment:
        """Permutations given in the order of ``base.edges()``."""
        edges = base.edges()
        if len(perms) != len(edges):
            raise CoverError(f"expected {len(edges)} permutations, got {len(perms)}")
        return cls(base, k, {e: tuple(int(x) for x in p) for e, p in zip(edges, perms)})


@dataclass(frozen=True)
class CoveringProjection:
    total: Graph
    base: Graph
    map: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.total.n // self.base.n if self.base.n else 0

    def __call__(self, v: int) -> int:
        return self.map[v]


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = "ok"
    vertex: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_projection(p: CoveringProjection) -> Verdict:
    """Check that ``p.map`` is a covering projection; report the first violation found."""
    G, F, pi = p.total, p.base, p.map
    if len(pi) != G.n:
        return Verdict(False, f"map has length {len(pi)}, total graph has {G.n} vertices")
    if any(not 0 <= x < F.n for x in pi):
        return Verdict(False, "map sends a vertex outside the base")
    if len(set(pi)) != F.n:
        missing = min(set(range(F.n)) - set(pi))
        return Verdict(False, f"not onto: base vertex {missing} has empty fiber", missing)
    for v in range(G.n):
        fv = pi[v]
        if G.degree(v) != F.degree(fv):
            return Verdict(False, f"degree mismatch at {v}: {G.degree(v)} vs {F.degree(fv)} at {fv}", v)
        image = [pi[u] for u in G.adj[v]]
        if len(set(image)) != len(image):
            return Verdict(False, f"not injective on the neighbourhood of {v}", v)
        target = set(F.adj[fv])
        if not set(image) <= target:
            return Verdict(False, f"neighbourhood of {v} not mapped into the neighbourhood of {fv}", v)
    if F.is_connected():
        sizes = np.bincount(np.asarray(pi), minlength=F.n)
        if sizes.min() != sizes.max():
            bad = int(np.flatnonzero(sizes != sizes[0])[0])
            return Verdict(False, f"fiber sizes differ over a connected base (base vertex {bad})", bad)
    return Verdict(True)


def fiber(p: CoveringProjection, v: int) -> list[int]:
    if not 0 <= v < p.base.n:
        raise CoverError(f"base vertex {v} out of range")
    return [x for x, fx in enumerate(p.map) if fx == v]


def fibers(p: CoveringProjection) -> list[list[int]]:
    out: list[list[int]] = [[] for _ in range(p.base.n)]
    for x, fx in enumerate(p.map):
        out[fx].append(x)
    return out


def lift(voltages: VoltageAssignment) -> tuple[Graph, CoveringProjection]:
    F, k = voltages.base, voltages.k
    if not F.is_connected():
        raise CoverError(
            "lift needs a connected base: fold counts are only defined over connected graphs"
        )
    edges = []
    for (u, v), perm in voltages.perm.items():
        for i in range(k):
            edges.append((u * k + i, v * k + perm[i]))
    G = from_edge_list(F.n * k, edges, name=f"{F.name}^{k}" if F.name else None)
    proj = CoveringProjection(G, F, tuple(v // k for v in range(F.n * k)))
    return G, proj


def random_voltages(base: Graph, k: int, seed: int) -> VoltageAssignment:
    """Independent uniform permutation on every base edge, deterministic in ``seed``."""
    if k < 1:
        raise CoverError(f"fold count must be at least 1, got {k}")
    rng = np.random.default_rng(seed)
    perm = {e: tuple(int(x) for x in rng.permutation(k)) for e in base.edges()}
    return VoltageAssignment(base, k, perm)


def identity_projection(g: Graph) -> CoveringProjection:
    return CoveringProjection(g, g, tuple(range(g.n)))


def compose(outer: CoveringProjection, inner: CoveringProjection) -> CoveringProjection:
    """``inner o outer``: from ``outer.total`` down to ``inner.base``."""
    if outer.base != inner.total:
        raise CoverError("projections do not chain: outer base differs from inner total")
    return CoveringProjection(outer.total, inner.base, tuple(inner.map[x] for x in outer.map))


def preimage_subgraph(
    p: CoveringProjection,
    vertices: Iterable[int],
    edges: Iterable[Sequence[int]] = (),
) -> Graph:
    """Lift of the base subgraph ``(vertices, edges)`` into the total graph.

    The result is relabelled ``0..m-1``; ``result.labels`` holds the total-graph ids.
    """
    F, G = p.base, p.total
    vs = set(vertices)
    if any(not 0 <= v < F.n for v in vs):
        raise CoverError("subgraph vertex outside the base")
    es = set()
    for e in edges:
        u, v = sorted((int(e[0]), int(e[1])))
        if u not in vs or v not in vs:
            raise CoverError(f"subgraph edge ({u}, {v}) leaves the vertex subset")
        if not F.has_edge(u, v):
            raise CoverError(f"({u}, {v}) is not an edge of the base")
        es.add((u, v))
    lifted = sorted(x for x in range(G.n) if p.map[x] in vs)
    index = {x: i for i, x in enumerate(lifted)}
    ledges = []
    for x in lifted:
        for y in G.adj[x]:
            if x < y and y in index and tuple(sorted((p.map[x], p.map[y]))) in es:
                ledges.append((index[x], index[y]))
    sub = from_edge_list(len(lifted), ledges)
    return Graph(sub.n, sub.adj, labels=tuple(lifted))


# --- file formats -------------------------------------------------------------

def format_projection(p: CoveringProjection) -> str:
    lines = [f"{p.k} {p.total.n} {p.base.n}"] + [f"{x} {fx}" for x, fx in enumerate(p.map)]
    return "\n".join(lines) + "\n"


def parse_projection(text: str, total: Graph, base: Graph) -> CoveringProjection:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 3:
        raise CoverError("projection file must start with 'k n_total n_base'")
    k, nt, nb = (int(x) for x in rows[0])
    if nt != total.n or nb != base.n:
        raise CoverError(f"projection header says {nt}->{nb} vertices, graphs have {total.n}->{base.n}")
    if nb and k * nb != nt:
        raise CoverError(f"header fold {k} inconsistent with {nt}/{nb}")
    mapping = [-1] * nt
    for r in rows[1:]:
        if len(r) != 2:
            raise CoverError(f"bad projection line {' '.join(r)!r}")
        g, f = int(r[0]), int(r[1])
        if not 0 <= g < nt or mapping[g] != -1:
            raise CoverError(f"total vertex {g} out of range or repeated")
        mapping[g] = f
    if -1 in mapping:
        raise CoverError(f"no image given for total vertex {mapping.index(-1)}")
    return CoveringProjection(total, base, tuple(mapping))


def format_voltages(va: VoltageAssignment) -> str:
    lines = [f"{u} {v} " + " ".join(map(str, va.perm[(u, v)])) for u, v in va.base.edges()]
    return "\n".join(lines) + "\n"


def parse_voltages(text: str, base: Graph) -> VoltageAssignment:
    perm = {}
    k = None
    for ln in text.splitlines():
        parts = ln.split()
        if not parts:
            continue
        if len(parts) < 3:
            raise CoverError(f"bad voltage line {ln!r}")
        u, v = sorted((int(parts[0]), int(parts[1])))
        p = [int(x) for x in parts[2:]]
        if (int(parts[0]), int(parts[1])) != (u, v):
            # line given on the arc v -> u: store the inverse on u -> v
            inv = [0] * len(p)
            for i, j in enumerate(p):
                inv[j] = i
            p = inv
        if k is None:
            k = len(p)
        elif len(p) != k:
            raise CoverError("voltage lines disagree on the fold count")
        if (u, v) in perm:
            raise CoverError(f"edge ({u}, {v}) given twice")
        perm[(u, v)] = tuple(p)
    if k is None:
        raise CoverError("empty voltage file")
    try:
        return VoltageAssignment(base, k, perm)
    except (GraphError, IndexError) as exc:
        raise CoverError(str(exc)) from exc
