"""Verifiers, exact solvers and the greedy algorithm for domination parameters.

Three kinds are supported: ``"plain"`` (closed neighbourhoods cover V),
``"total"`` (open neighbourhoods cover V) and ``"connected"`` (dominating and
inducing a connected subgraph).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .graph import Graph, GraphError, cartesian_product, cycle, mask_to_list, to_mask

KINDS = ("plain", "total", "connected")
DEFAULT_BUDGET = 50_000_000
BRUTE_FORCE_LIMIT = 24


class SolverError(ValueError):
    pass


@dataclass(frozen=True)
class DominationCertificate:
    kind: str
    set: tuple[int, ...]
    optimal: bool
    nodes_explored: int = 0

    @property
    def value(self) -> int:
        return len(self.set)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value,
            "set": list(self.set),
            "optimal": self.optimal,
            "nodes_explored": self.nodes_explored,
        }


@dataclass(frozen=True)
class GreedyTrace:
    order: tuple[int, ...]
    white_counts: tuple[int, ...]

    @property
    def final_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.order))


def _mask(g: Graph, s: Iterable[int] | int) -> int:
    if isinstance(s, int):
        m = s
    else:
        m = to_mask(s)
    if m >> g.n:
        raise SolverError("vertex set reaches outside the graph")
    return m


def _union(masks: tuple[int, ...], s: int) -> int:
    out = 0
    while s:
        low = s & -s
        out |= masks[low.bit_length() - 1]
        s ^= low
    return out


def is_dominating(g: Graph, s) -> bool:
    return _union(g.closed_masks, _mask(g, s)) == g.full_mask


def is_total_dominating(g: Graph, s) -> bool:
    return _union(g.open_masks, _mask(g, s)) == g.full_mask


def _induces_connected(g: Graph, s: int) -> bool:
    if not s:
        return False
    seen = s & -s
    frontier = seen
    while frontier:
        frontier = _union(g.open_masks, frontier) & s & ~seen
        seen |= frontier
    return seen == s


def is_connected_dominating(g: Graph, s) -> bool:
    m = _mask(g, s)
    return is_dominating(g, m) and _induces_connected(g, m)


def is_efficient_dominating(g: Graph, s) -> bool:
    """Closed neighbourhoods of ``s`` partition the vertex set (a perfect code)."""
    m = _mask(g, s)
    covered = 0
    for v in mask_to_list(m):
        c = g.closed_masks[v]
        if covered & c:
            return False
        covered |= c
    return covered == g.full_mask


def verifier(kind: str):
    try:
        return {
            "plain": is_dominating,
            "total": is_total_dominating,
            "connected": is_connected_dominating,
        }[kind]
    except KeyError:
        raise SolverError(f"unknown domination kind {kind!r}") from None


def _check_preconditions(g: Graph, kind: str) -> None:
    verifier(kind)
    if g.n == 0:
        raise SolverError("domination number of the empty graph is undefined")
    if kind == "total" and g.min_degree == 0:
        raise SolverError("total domination needs a graph without isolated vertices")
    if kind == "connected" and not g.is_connected():
        raise SolverError("connected domination needs a connected graph")


# --- greedy -------------------------------------------------------------------

def greedy_dominating_set(g: Graph) -> GreedyTrace:
    """Pick the vertex with most white vertices in its closed neighbourhood until none are white.

    Ties go to the lowest vertex id.
    """
    closed = g.closed_masks
    white = g.full_mask
    order, counts = [], []
    while white:
        best_v, best_w = -1, -1
        for v in range(g.n):
            w = (closed[v] & white).bit_count()
            if w > best_w:
                best_v, best_w = v, w
        order.append(best_v)
        counts.append(best_w)
        white &= ~closed[best_v]
    return GreedyTrace(tuple(order), tuple(counts))


def _greedy_total(g: Graph) -> int:
    opn = g.open_masks
    undom = g.full_mask
    s = 0
    while undom:
        v = max(range(g.n), key=lambda u: ((opn[u] & undom).bit_count(), -u))
        s |= 1 << v
        undom &= ~opn[v]
    return s


def _greedy_connected(g: Graph) -> int:
    closed, opn = g.closed_masks, g.open_masks
    start = max(range(g.n), key=lambda u: (len(g.adj[u]), -u))
    s = 1 << start
    undom = g.full_mask & ~closed[start]
    while undom:
        boundary = _union(opn, s) & ~s
        best, best_gain = -1, 0
        for u in mask_to_list(boundary):
            gain = (closed[u] & undom).bit_count()
            if gain > best_gain:
                best, best_gain = u, gain
        if best < 0:
            best = _step_towards(g, s, undom)
        s |= 1 << best
        undom &= ~closed[best]
    return s


def _step_towards(g: Graph, s: int, undom: int) -> int:
    """First vertex outside ``s`` on a shortest path to a vertex that sees ``undom``."""
    parent = {v: -1 for v in mask_to_list(s)}
    queue = list(parent)
    for x in queue:
        if g.closed_masks[x] & undom and parent[x] >= 0:
            while parent[parent[x]] >= 0:
                x = parent[x]
            return x
        for y in g.adj[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    raise SolverError("graph is disconnected")


# --- branch and bound -----------------------------------------------------------

class _BudgetExhausted(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, kind: str, budget: int, incumbent: int):
        self.g = g
        self.kind = kind
        self.budget = budget
        self.nodes = 0
        self.best = incumbent
        self.best_size = incumbent.bit_count()
        self.cover = g.open_masks if kind == "total" else g.closed_masks

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted

    def _gain_bound(self, undom: int, pool: int) -> int | None:
        """Fewest pool vertices that could cover ``undom``, counting gains optimistically.

        Returns None when some undominated vertex cannot be covered from the pool.
        """
        cover = self.cover
        gains = []
        reach = 0
        while pool:
            low = pool & -pool
            c = cover[low.bit_length() - 1]
            gain = (c & undom).bit_count()
            if gain:
                gains.append(gain)
                reach |= c
            pool ^= low
        if undom & ~reach:
            return None
        gains.sort(reverse=True)
        need = undom.bit_count()
        t = 0
        for gain in gains:
            t += 1
            need -= gain
            if need <= 0:
                break
        return t

    # plain and total: branch over the dominators of the lowest undominated vertex
    def cover_search(self, undom: int, allowed: int, chosen: int, size: int):
        self.tick()
        if not undom:
            if size < self.best_size:
                self.best, self.best_size = chosen, size
            return
        t = self._gain_bound(undom, allowed)
        if t is None or size + t >= self.best_size:
            return
        v = (undom & -undom).bit_length() - 1
        cover = self.cover
        cands = mask_to_list(cover[v] & allowed)
        cands.sort(key=lambda u: -(cover[u] & undom).bit_count())
        for u in cands:
            bit = 1 << u
            self.cover_search(undom & ~cover[u], allowed & ~bit, chosen | bit, size + 1)
            allowed &= ~bit

    # connected: grow a connected set along its boundary
    def connected_search(self, s: int, size: int, undom: int, forbidden: int):
        self.tick()
        if not undom:
            if size < self.best_size:
                self.best, self.best_size = s, size
            return
        if size + 1 >= self.best_size:
            return
        opn, closed = self.g.open_masks, self.cover
        allowed = ~forbidden & self.g.full_mask
        # vertices still reachable from s through allowed vertices
        reach = s
        frontier = s
        while frontier:
            frontier = _union(opn, frontier) & allowed & ~reach
            reach |= frontier
        t = self._gain_bound(undom, reach & ~s)
        if t is None or size + t >= self.best_size:
            return
        boundary = _union(opn, s) & allowed & ~s
        cands = mask_to_list(boundary)
        cands.sort(key=lambda u: (-(closed[u] & undom).bit_count(), u))
        for u in cands:
            bit = 1 << u
            self.connected_search(s | bit, size + 1, undom & ~closed[u], forbidden)
            forbidden |= bit


def domination_number(g: Graph, kind: str = "plain", budget: int | None = None) -> DominationCertificate:
    """Exact domination number of the given kind by branch and bound.

    If more than ``budget`` search nodes are needed, the best set found so far
    is returned with ``optimal=False``.
    """
    _check_preconditions(g, kind)
    budget = DEFAULT_BUDGET if budget is None else budget
    if kind == "plain":
        incumbent = to_mask(greedy_dominating_set(g).order)
    elif kind == "total":
        incumbent = _greedy_total(g)
    else:
        incumbent = _greedy_connected(g)
    search = _Search(g, kind, budget, incumbent)
    optimal = True
    try:
        if kind == "connected":
            closed = g.closed_masks
            # some vertex of N[v0] belongs to every connected dominating set
            v0 = min(range(g.n), key=lambda u: (len(g.adj[u]), u))
            forbidden = 0
            for r in sorted(mask_to_list(closed[v0]), key=lambda u: (-len(g.adj[u]), u)):
                search.connected_search(1 << r, 1, g.full_mask & ~closed[r], forbidden)
                forbidden |= 1 << r
        else:
            search.cover_search(g.full_mask, g.full_mask, 0, 0)
    except _BudgetExhausted:
        optimal = False
    return DominationCertificate(kind, tuple(mask_to_list(search.best)), optimal, search.nodes)


def brute_force_number(g: Graph, kind: str = "plain") -> int:
    """Smallest dominating set of the given kind by enumerating subsets in order of size."""
    _check_preconditions(g, kind)
    if g.n > BRUTE_FORCE_LIMIT:
        raise SolverError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {g.n}")
    ok = verifier(kind)
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            if ok(g, combo):
                return size
    raise SolverError("no dominating set found")  # unreachable for valid input


# --- perfect codes on tori ---------------------------------------------------------

def torus(n: int) -> Graph:
    g = cartesian_product(cycle(n), cycle(n))
    return Graph(g.n, g.adj, name=f"C{n}xC{n}")


def diagonal_perfect_code(n: int) -> list[int]:
    """Vertices ``(i, j)`` of C_n □ C_n with ``2i + j = 0 (mod 5)``, as ids ``i * n + j``."""
    if n <= 0 or n % 5:
        raise GraphError(f"the diagonal code needs n to be a positive multiple of 5, got {n}")
    return [i * n + j for i in range(n) for j in range(n) if (2 * i + j) % 5 == 0]
