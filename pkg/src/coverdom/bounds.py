"""Bounds on domination parameters of covers, with constructive witnesses.

All arithmetic is exact: values are ``Fraction`` and square-root bounds are
kept as their squares.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .cover import CoveringProjection, CoverError, fibers, preimage_subgraph, verify_projection
from .domsolve import (
    DominationCertificate,
    SolverError,
    _check_preconditions,
    domination_number,
    is_connected_dominating,
    verifier,
)
from .graph import Graph, regularity


class BoundViolation(AssertionError):
    pass


def harmonic(d: int) -> Fraction:
    """H(d) = 1 + 1/2 + ... + 1/d."""
    if d < 1:
        raise ValueError(f"harmonic number needs d >= 1, got {d}")
    return sum((Fraction(1, i) for i in range(1, d + 1)), Fraction(0))


@dataclass(frozen=True)
class Bound:
    """A named bound; when ``sqrt`` is set the bound is the square root of ``value``."""

    name: str
    value: Fraction
    sqrt: bool = False

    def at_most(self, x) -> bool:
        """bound <= x"""
        x = Fraction(x)
        if self.sqrt:
            return x >= 0 and self.value <= x * x
        return self.value <= x

    def at_least(self, x) -> bool:
        """bound >= x"""
        x = Fraction(x)
        if self.sqrt:
            return x <= 0 or x * x <= self.value
        return self.value >= x

    def ceil(self) -> int:
        if self.sqrt:
            r = isqrt(self.value.numerator // self.value.denominator)
            while r * r < self.value:
                r += 1
            return r
        return -((-self.value.numerator) // self.value.denominator)

    def __float__(self) -> float:
        return float(self.value) ** 0.5 if self.sqrt else float(self.value)

    def render(self) -> str:
        v = str(self.value)
        return f"sqrt({v})" if self.sqrt else v

    def to_dict(self) -> dict:
        return {"name": self.name, "value": self.render(), "approx": round(float(self), 6)}


def classical_bounds(n: int, max_degree: int, min_degree: int, kind: str) -> tuple[list[Bound], list[Bound]]:
    """Degree-based bounds on a single graph of order ``n``: (lowers, uppers)."""
    lowers, uppers = [], []
    if kind == "plain":
        lowers.append(Bound("order/(1+maxdeg)", Fraction(n, 1 + max_degree)))
        if min_degree >= 3:
            uppers.append(Bound("mindeg3: 3n/8", Fraction(3 * n, 8)))
        if min_degree >= 5:
            uppers.append(Bound("mindeg5: n/3", Fraction(n, 3)))
    elif kind == "total":
        if max_degree >= 1:
            lowers.append(Bound("order/maxdeg", Fraction(n, max_degree)))
        if min_degree >= 3:
            uppers.append(Bound("mindeg3: n/2", Fraction(n, 2)))
        if min_degree >= 5:
            uppers.append(Bound("mindeg5: 2453n/6500", Fraction(2453 * n, 6500)))
    return lowers, uppers


def cover_bounds(
    exact_F: int,
    k: int,
    kind: str,
    regularity: int | None = None,
    max_degree: int | None = None,
) -> tuple[list[Bound], list[Bound]]:
    """Lower and upper bounds on the parameter of a k-fold cover, given the base value."""
    verifier(kind)
    kf = Fraction(k * exact_F)
    lowers = [
        Bound("fold", Fraction(k)),
        Bound("base", Fraction(exact_F)),
        Bound("geometric", kf, sqrt=True),
    ]
    uppers = []
    if kind == "plain" and max_degree is not None and max_degree >= 1:
        lowers.append(Bound("harmonic", kf / harmonic(max_degree)))
        if max_degree == 2:
            lowers.append(Bound("cycle", Fraction(2, 3) * kf))
    if kind in ("plain", "total"):
        if regularity == 3:
            lowers.append(Bound("cubic", Fraction(3, 5) * kf))
        elif regularity in (4, 5):
            lowers.append(Bound("quartic-quintic", Fraction(1, 2) * kf))
        uppers.append(Bound("lift", kf))
    else:
        uppers.append(Bound("connector", Fraction(k * (exact_F + 2) - 2)))
    return lowers, uppers


# --- constructive witnesses -----------------------------------------------------

def lift_dominating_set(p: CoveringProjection, s, kind: str = "plain") -> list[int]:
    """Union of the fibers over ``s``; dominates the total graph whenever ``s`` dominates the base."""
    if kind not in ("plain", "total"):
        raise ValueError(f"lifting is defined for plain and total domination, not {kind!r}")
    s = sorted(set(s))
    if not verifier(kind)(p.base, s):
        raise SolverError(f"given set is not a {kind} dominating set of the base")
    fib = fibers(p)
    return sorted(x for v in s for x in fib[v])


@dataclass(frozen=True)
class ConnectorCertificate:
    components: tuple[tuple[int, ...], ...]
    paths: tuple[tuple[int, ...], ...]
    result: tuple[int, ...]


def _spanning_tree_edges(base: Graph, s: list[int]) -> list[tuple[int, int]]:
    """BFS tree of base[s] from its lowest vertex, scanning neighbours in increasing order."""
    inside = set(s)
    root = s[0]
    seen = {root}
    queue = deque([root])
    edges = []
    while queue:
        v = queue.popleft()
        for u in base.adj[v]:
            if u in inside and u not in seen:
                seen.add(u)
                edges.append((min(u, v), max(u, v)))
                queue.append(u)
    if seen != inside:
        raise SolverError("base set does not induce a connected subgraph")
    return edges


def connect_lifted_trees(p: CoveringProjection, s) -> ConnectorCertificate:
    """Lift a spanning tree of the base set and join the k copies by short paths.

    Each joining path is a shortest path from the current blob to the nearest
    remaining copy; such a path never needs more than three edges.
    """
    F, G, k = p.base, p.total, p.k
    s = sorted(set(s))
    if not s or not is_connected_dominating(F, s):
        raise SolverError("given set is not a connected dominating set of the base")
    if not G.is_connected():
        raise SolverError("the total graph must be connected")
    tree = _spanning_tree_edges(F, s)
    lifted = preimage_subgraph(p, s, tree)
    comps = [tuple(lifted.labels[i] for i in c) for c in lifted.components()]
    if len(comps) != k:
        raise CoverError(f"tree lifted to {len(comps)} components, expected {k}")
    comps.sort()
    owner = {x: i for i, c in enumerate(comps) for x in c}
    blob = set(comps[0])
    remaining = set(range(1, k))
    paths = []
    while remaining:
        # multi-source BFS from the blob; sources and neighbours in increasing order
        parent = {x: None for x in sorted(blob)}
        dist = {x: 0 for x in parent}
        queue = deque(parent)
        hit = None
        while queue:
            x = queue.popleft()
            if hit is not None and dist[x] >= dist[hit]:
                break
            for y in G.adj[x]:
                if y in parent:
                    continue
                parent[y] = x
                dist[y] = dist[x] + 1
                if owner.get(y) in remaining:
                    if hit is None or (dist[y], y) < (dist[hit], hit):
                        hit = y
                queue.append(y)
        if hit is None:
            raise SolverError("could not reach the remaining lifted trees")
        walk = [hit]
        while parent[walk[-1]] is not None:
            walk.append(parent[walk[-1]])
        walk.reverse()
        if len(walk) - 1 > 3:
            raise RuntimeError(
                f"connecting path of {len(walk) - 1} edges found; lifted trees should be at most 3 apart"
            )
        paths.append(tuple(walk))
        blob.update(walk)
        j = owner[hit]
        blob.update(comps[j])
        remaining.discard(j)
    result = tuple(sorted(blob))
    if not is_connected_dominating(G, result):
        raise RuntimeError("connector result is not a connected dominating set")
    return ConnectorCertificate(tuple(comps), tuple(paths), result)


# --- reports ------------------------------------------------------------------------

@dataclass
class BoundReport:
    context: dict
    kind: str
    lowers: list[Bound]
    uppers: list[Bound]
    exact_F: int
    exact_G: int | None
    H_Delta: Fraction
    exact_G_optimal: bool = True
    classical: list[tuple[str, str, Bound]] = field(default_factory=list)
    skipped: str | None = None
    violations: list[str] = field(default_factory=list)

    @property
    def c_obs(self) -> Fraction | None:
        if self.kind != "plain" or self.exact_G is None or not self.exact_G_optimal:
            return None
        return Fraction(self.exact_G, self.context["k"] * self.exact_F)

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self) -> list[str]:
        """Evaluate every applicable inequality and return the failures."""
        bad = []
        for lo in self.lowers:
            for up in self.uppers:
                if not lo.at_most(up.value):
                    bad.append(f"{lo.name} {lo.render()} > {up.name} {up.render()}")
        if self.exact_G is not None and self.exact_G_optimal:
            for lo in self.lowers:
                if not lo.at_most(self.exact_G):
                    bad.append(f"lower {lo.name} {lo.render()} exceeds exact value {self.exact_G}")
            for up in self.uppers:
                if not up.at_least(self.exact_G):
                    bad.append(f"upper {up.name} {up.render()} below exact value {self.exact_G}")
        for which, side, b in self.classical:
            x = self.exact_F if which == "base" else self.exact_G
            if x is None or (which == "total" and not self.exact_G_optimal):
                continue
            if side == "lower" and not b.at_most(x):
                bad.append(f"{which}: classical lower {b.name} {b.render()} exceeds {x}")
            if side == "upper" and not b.at_least(x):
                bad.append(f"{which}: classical upper {b.name} {b.render()} below {x}")
        self.violations = bad
        return bad

    def to_dict(self) -> dict:
        c = self.c_obs
        return {
            "context": self.context,
            "kind": self.kind,
            "exact_F": self.exact_F,
            "exact_G": self.exact_G,
            "exact_G_optimal": self.exact_G_optimal,
            "skipped": self.skipped,
            "H_Delta": str(self.H_Delta),
            "lowers": [b.to_dict() for b in self.lowers],
            "uppers": [b.to_dict() for b in self.uppers],
            "classical": [
                {"graph": w, "side": side, **b.to_dict()} for w, side, b in self.classical
            ],
            "c_obs": None if c is None else str(c),
            "c_obs_decimal": None if c is None else f"{float(c):.6f}",
            "violations": self.violations,
            "ok": self.ok,
        }


def check_sandwich(
    F: Graph,
    G: Graph,
    p: CoveringProjection,
    kinds=("plain", "total", "connected"),
    budget: int | None = None,
    raise_on_violation: bool = False,
) -> list[BoundReport]:
    """Solve both sides of a cover exactly and test every applicable bound."""
    verdict = verify_projection(p)
    if not verdict:
        raise CoverError(f"invalid projection: {verdict.reason}")
    if p.base != F or p.total != G:
        raise CoverError("projection does not connect the given graphs")
    k = p.k
    reg = regularity(F)
    delta = F.max_degree
    reports = []
    for kind in kinds:
        _check_preconditions(F, kind)
        cert_F = domination_number(F, kind, budget)
        if not cert_F.optimal:
            raise SolverError(f"base {kind} domination did not finish within the budget")
        exact_F = cert_F.value
        exact_G, opt_G, skipped = None, True, None
        try:
            _check_preconditions(G, kind)
        except SolverError as exc:
            skipped = str(exc)
        else:
            cert_G: DominationCertificate = domination_number(G, kind, budget)
            exact_G, opt_G = cert_G.value, cert_G.optimal
            if not opt_G:
                skipped = "skipped (budget)"
        lowers, uppers = cover_bounds(exact_F, k, kind, reg, delta)
        report = BoundReport(
            context={"base": F.name, "total": G.name, "k": k},
            kind=kind,
            lowers=lowers,
            uppers=uppers,
            exact_F=exact_F,
            exact_G=exact_G,
            H_Delta=harmonic(delta) if delta >= 1 else Fraction(0),
            exact_G_optimal=opt_G,
            skipped=skipped,
        )
        for which, g in (("base", F), ("total", G)):
            lo, up = classical_bounds(g.n, g.max_degree, g.min_degree, kind)
            report.classical += [(which, "lower", b) for b in lo] + [(which, "upper", b) for b in up]
        report.check()
        if raise_on_violation and report.violations:
            raise BoundViolation("; ".join(report.violations))
        reports.append(report)
    return reports
