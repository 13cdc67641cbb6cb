"""Exact breadth-first oracles over the embracing basis exchange graph.

Nodes are embracing bases (sorted id tuples), edges are single-element
exchanges.  Neighbours are expanded in lexicographic (removed, added) order,
so the first path found to any basis is the lexicographically smallest
shortest one.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Literal

from .core import ExchangeSequence, OrientedMatroidOracle, as_basis, is_embracing
from .errors import CardinalityMismatch, NotEmbracing

INFINITE = math.inf

GroundMode = Literal["union", "full"]


@dataclass(frozen=True)
class SearchOptions:
    ground_mode: GroundMode = "union"
    monotone_only: bool = False
    max_depth: int | None = None

    def __post_init__(self):
        if self.ground_mode not in ("union", "full"):
            raise ValueError(f"unknown ground mode {self.ground_mode!r}")
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be non-negative")


@dataclass
class DistanceResult:
    distance: float  # an int, or INFINITE
    witness: ExchangeSequence | None
    explored: int
    bounded: bool = False  # True: search stopped at max_depth, so INFINITE is not proven

    @property
    def finite(self) -> bool:
        return self.distance != INFINITE

    def format(self) -> str:
        if self.witness is not None:
            return self.witness.format(self.distance)
        label = "unknown beyond bound" if self.bounded else "infinite"
        return f"distance: {label}\n"


def _check_premise(oracle, anchor, *bases):
    for X in bases:
        if not oracle.is_basis(X):
            raise NotEmbracing(f"{X} is not a basis")
        if not is_embracing(oracle, X, anchor):
            raise NotEmbracing(f"{X} is not embracing")


def _allowed(oracle, anchor, A, B, mode) -> tuple:
    if mode == "union":
        return tuple(sorted(set(A) | set(B)))
    return oracle.exchange_elements(anchor)


def embracing_distance(oracle: OrientedMatroidOracle, anchor, A, B,
                       opts: SearchOptions | None = None) -> DistanceResult:
    """Minimum length of an embracing exchange sequence from A to B.

    With `monotone_only`, steps that shrink the overlap with B are not
    allowed.  Returns INFINITE when the reachable component is exhausted.
    """
    opts = opts or SearchOptions()
    A, B = as_basis(A), as_basis(B)
    _check_premise(oracle, anchor, A, B)
    allowed = _allowed(oracle, anchor, A, B, opts.ground_mode)
    target = set(B)

    parent = {A: None}
    depth = {A: 0}
    queue = deque([A])
    bounded = False
    while queue:
        cur = queue.popleft()
        if cur == B:
            break
        if opts.max_depth is not None and depth[cur] >= opts.max_depth:
            bounded = True
            continue
        members = set(cur)
        overlap = len(members & target)
        for r in cur:
            rest = members - {r}
            for a in allowed:
                if a in members:
                    continue
                nxt = tuple(sorted(rest | {a}))
                if nxt in parent:
                    continue
                if opts.monotone_only and overlap - (r in target) + (a in target) < overlap:
                    continue
                if not oracle.is_basis(nxt) or not is_embracing(oracle, nxt, anchor):
                    continue
                parent[nxt] = (cur, r, a)
                depth[nxt] = depth[cur] + 1
                queue.append(nxt)

    if B not in parent:
        return DistanceResult(INFINITE, None, len(parent), bounded=bounded)
    steps = []
    node = B
    while parent[node] is not None:
        prev, r, a = parent[node]
        steps.append((r, a))
        node = prev
    steps.reverse()
    return DistanceResult(len(steps), ExchangeSequence(A, tuple(steps)), len(parent))


def monotone_embracing_distance(oracle, anchor, A, B, opts: SearchOptions | None = None) -> DistanceResult:
    opts = opts or SearchOptions()
    return embracing_distance(
        oracle, anchor, A, B, SearchOptions(opts.ground_mode, True, opts.max_depth)
    )


def unoriented_distance(A, B) -> int:
    """Exchange distance in the underlying matroid, |A \\ B|."""
    if len(set(A)) != len(set(B)):
        raise CardinalityMismatch(f"|A| = {len(set(A))} but |B| = {len(set(B))}")
    return len(set(A) - set(B))


# -- symmetric exchanges ------------------------------------------------------

def symmetric_exchanges(oracle, anchor, X, Y) -> list:
    """Feasible symmetric exchanges (e, f) of the pair (X, Y).

    e leaves X and enters Y, f leaves Y and enters X; both results must be
    embracing bases.
    """
    out = []
    xs, ys = set(X), set(Y)
    for e in sorted(xs - ys):
        for f in sorted(ys - xs):
            X2 = tuple(sorted(xs - {e} | {f}))
            Y2 = tuple(sorted(ys - {f} | {e}))
            if not (oracle.is_basis(X2) and oracle.is_basis(Y2)):
                continue
            if is_embracing(oracle, X2, anchor) and is_embracing(oracle, Y2, anchor):
                out.append((e, f))
    return out


@dataclass
class PairReachabilityReport:
    start: tuple
    goal: tuple
    reachable: bool
    distance: float
    explored: int
    truncated: bool
    pairs: list | None = None  # reachable pairs in discovery order, when within report_limit
    edges: list = field(default_factory=list)  # (pair, (e, f), pair) within report_limit
    path: list = field(default_factory=list)  # exchanges (e, f) from start to goal

    def lines(self, name=str) -> list:
        def fmt(pair):
            X, Y = pair
            return "({" + ", ".join(map(name, X)) + "}, {" + ", ".join(map(name, Y)) + "})"

        out = [f"pairs explored: {self.explored}" + (" (truncated)" if self.truncated else "")]
        for src, (e, f), dst in self.edges:
            out.append(f"{fmt(src)} --[{name(e)} <-> {name(f)}]--> {fmt(dst)}")
        dist = self.distance if self.reachable else ("unknown" if self.truncated else "infinite")
        out.append(f"goal {fmt(self.goal)} reachable: {self.reachable}; distance: {dist}")
        return out


def symmetric_exchange_reachability(oracle, anchor, A, B, opts: SearchOptions | None = None,
                                    cap: int = 10**6, report_limit: int = 1000) -> PairReachabilityReport:
    """BFS over ordered pairs of embracing bases linked by symmetric exchanges.

    Asks whether (B, A) is reachable from (A, B).  At most `cap` pairs are
    visited; the pair set and edge list are kept when no larger than
    `report_limit`.
    """
    A, B = as_basis(A), as_basis(B)
    _check_premise(oracle, anchor, A, B)
    start, goal = (A, B), (B, A)
    parent = {start: None}
    order = [start]
    edges = []
    queue = deque([start])
    truncated = False
    while queue:
        pair = queue.popleft()
        X, Y = pair
        for e, f in symmetric_exchanges(oracle, anchor, X, Y):
            nxt = (tuple(sorted(set(X) - {e} | {f})), tuple(sorted(set(Y) - {f} | {e})))
            if len(edges) <= report_limit:
                edges.append((pair, (e, f), nxt))
            if nxt in parent:
                continue
            if len(parent) >= cap:
                truncated = True
                continue
            parent[nxt] = (pair, (e, f))
            order.append(nxt)
            queue.append(nxt)

    reachable = goal in parent
    path = []
    if reachable:
        node = goal
        while parent[node] is not None:
            node, step = parent[node]
            path.append(step)
        path.reverse()
    small = len(order) <= report_limit and len(edges) <= report_limit
    return PairReachabilityReport(
        start=start,
        goal=goal,
        reachable=reachable,
        distance=len(path) if reachable else INFINITE,
        explored=len(parent),
        truncated=truncated,
        pairs=order if small else None,
        edges=edges if small else [],
        path=path,
    )
