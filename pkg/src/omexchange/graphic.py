"""Directed graphs as oriented matroids.

A cycle of the underlying undirected graph becomes a signed circuit by
choosing a traversal direction: arcs that agree with it are positive, the
others negative.  A spanning tree T is st-embracing when its s-t path T[s, t]
is a directed path.

The constructive exchange procedure for two st-embracing trees A, B runs in
two phases.  Phase 1 walks the directed path B[s, t] = (f_1, ..., f_k) and
inserts each f_i that is missing, removing the last arc of T[v_{i-1}, v_i]
that does not lie on B[v_i, t].  Phase 2 swaps the remaining arcs of the
current tree outside B for arcs of B, which never touches the s-t path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import (
    ExchangeSequence,
    OrientedMatroidOracle,
    SignedCircuit,
    VertexPairAnchor,
    as_anchor,
    as_basis,
)
from .errors import (
    AnchorInBasis,
    FormatError,
    NotATree,
    NotEmbracing,
    PreconditionViolated,
    PostconditionFailed,
)


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: tuple
    labels: tuple | None = None

    def __post_init__(self):
        arcs = tuple((int(a), int(b)) for a, b in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for tail, head in arcs:
            if not (0 <= tail < self.n and 0 <= head < self.n):
                raise ValueError(f"arc ({tail}, {head}) out of range for n={self.n}")
            if tail == head:
                raise ValueError(f"self-loop at vertex {tail}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.n:
                raise ValueError("need one label per vertex")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertex_name(self, v: int) -> str:
        return str(v) if self.labels is None else self.labels[v]

    def arc_name(self, a: int) -> str:
        tail, head = self.arcs[a]
        if self.labels is None:
            return f"{tail}->{head}"
        return self.vertex_name(tail) + self.vertex_name(head)

    def arc_index(self, tail: int, head: int) -> int:
        """Id of the first arc from tail to head."""
        return self.arcs.index((tail, head))

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        parent = list(range(self.n))
        for tail, head in self.arcs:
            _union(parent, tail, head)
        root = _find(parent, 0)
        return all(_find(parent, v) == root for v in range(self.n))

    def to_text(self) -> str:
        lines = [f"digraph {self.n} {self.m}"]
        lines += [f"{t} {h}" for t, h in self.arcs]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Digraph":
        d, _ = parse_digraph_lines(_content_lines(text))
        return d


def _content_lines(text: str) -> list:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def parse_digraph_lines(lines: list) -> tuple:
    """Parse a `digraph n m` block from the head of `lines`; returns (digraph, rest)."""
    if not lines:
        raise FormatError("empty digraph text")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "digraph":
        raise FormatError(f"expected 'digraph <n> <m>', got {lines[0]!r}")
    n, m = int(head[1]), int(head[2])
    if len(lines) < 1 + m:
        raise FormatError(f"expected {m} arc lines")
    arcs = []
    for line in lines[1:1 + m]:
        words = line.split()
        if len(words) != 2:
            raise FormatError(f"bad arc line {line!r}")
        arcs.append((int(words[0]), int(words[1])))
    try:
        return Digraph(n, tuple(arcs)), lines[1 + m:]
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _union(parent, x, y) -> bool:
    rx, ry = _find(parent, x), _find(parent, y)
    if rx == ry:
        return False
    parent[rx] = ry
    return True


def is_spanning_tree(D: Digraph, T: Sequence[int]) -> bool:
    if len(T) != D.n - 1 or len(set(T)) != len(T):
        return False
    parent = list(range(D.n))
    for a in T:
        if not 0 <= a < D.m:
            return False
        if not _union(parent, *D.arcs[a]):
            return False
    return True


def _tree_adjacency(D: Digraph, T: Sequence[int]) -> list:
    if not is_spanning_tree(D, T):
        raise NotATree(f"{tuple(T)} is not a spanning tree of the digraph")
    adj = [[] for _ in range(D.n)]
    for a in T:
        tail, head = D.arcs[a]
        adj[tail].append((head, a, True))
        adj[head].append((tail, a, False))
    return adj


def tree_path(D: Digraph, T: Sequence[int], u: int, v: int) -> tuple:
    """T[u, v] as a tuple of (arc, forward) pairs, traversed from u to v.

    `forward` is True when the arc points along the traversal.
    """
    if u == v:
        raise PreconditionViolated("tree path needs u != v")
    adj = _tree_adjacency(D, T)
    prev = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for y, a, fwd in adj[x]:
            if y not in prev:
                prev[y] = (x, a, fwd)
                stack.append(y)
    path = []
    x = v
    while prev[x] is not None:
        x0, a, fwd = prev[x]
        path.append((a, fwd))
        x = x0
    path.reverse()
    return tuple(path)


def path_vertices(D: Digraph, path, start: int) -> list:
    """Vertices visited by a tree path that begins at `start`."""
    out = [start]
    for a, fwd in path:
        tail, head = D.arcs[a]
        out.append(head if fwd else tail)
    return out


def is_st_embracing(D: Digraph, T: Sequence[int], s: int, t: int) -> bool:
    return all(fwd for _, fwd in tree_path(D, T, s, t))


def graphic_anchored_circuit(D: Digraph, T: Sequence[int], anchor) -> SignedCircuit:
    """Fundamental circuit of the anchor in T + anchor, anchor negative.

    A vertex-pair anchor (s, t) is represented by the virtual arc id D.m,
    i.e. the circuit of an extra arc s->t.
    """
    anchor = as_anchor(anchor)
    if isinstance(anchor, VertexPairAnchor):
        u, v, a = anchor.source, anchor.target, D.m
    else:
        a = anchor.element
        if a in T:
            raise AnchorInBasis(f"arc {a} belongs to tree {tuple(T)}")
        u, v = D.arcs[a]
    pos, neg = set(), {a}
    for arc, fwd in tree_path(D, T, u, v):
        (pos if fwd else neg).add(arc)
    return SignedCircuit(frozenset(pos), frozenset(neg))


class GraphicOracle(OrientedMatroidOracle):
    """Oriented graphic matroid of a digraph; bases are spanning trees.

    Accepts element anchors (arc ids) and vertex-pair anchors.  Answers are
    memoized per (tree, anchor).
    """

    def __init__(self, D: Digraph):
        self.D = D
        self.ground_size = D.m
        self.rank = max(D.n - 1, 0)
        self._basis_memo = {}
        self._circuit_memo = {}

    def is_basis(self, basis) -> bool:
        key = tuple(basis)
        hit = self._basis_memo.get(key)
        if hit is None:
            hit = self._basis_memo[key] = is_spanning_tree(self.D, key)
        return hit

    def anchor_element(self, anchor) -> int:
        anchor = as_anchor(anchor)
        if isinstance(anchor, VertexPairAnchor):
            if not (0 <= anchor.source < self.D.n and 0 <= anchor.target < self.D.n):
                raise ValueError(f"anchor {anchor} has a vertex out of range")
            return self.D.m
        return super().anchor_element(anchor)

    def exchange_elements(self, anchor) -> tuple:
        a = self.anchor_element(anchor)
        return tuple(e for e in range(self.D.m) if e != a)

    def anchored_fundamental_circuit(self, basis, anchor) -> SignedCircuit:
        key = (tuple(basis), as_anchor(anchor))
        hit = self._circuit_memo.get(key)
        if hit is None:
            hit = self._circuit_memo[key] = graphic_anchored_circuit(self.D, key[0], key[1])
        return hit


def spanning_trees(D: Digraph):
    """All spanning trees as sorted arc-id tuples, in lexicographic order."""
    if D.n == 0:
        return
    for combo in itertools.combinations(range(D.m), D.n - 1):
        if is_spanning_tree(D, combo):
            yield combo


def st_embracing_trees(D: Digraph, s: int, t: int) -> list:
    return [T for T in spanning_trees(D) if is_st_embracing(D, T, s, t)]


# -- constructive exchange sequence ---------------------------------------------

def claim1_exchange(D: Digraph, T: Sequence[int], bpath, i: int) -> tuple:
    """Insert f_i = bpath[i-1] into T, keeping T st-embracing.

    `bpath` is B[s, t] as returned by tree_path and must be directed; `i` is
    1-based.  The removed arc is the last arc of T[v_{i-1}, v_i] (in traversal
    order from v_{i-1}) that is not on B[v_i, t].  Returns (removed, T').
    """
    T = as_basis(T)
    k = len(bpath)
    if not 1 <= i <= k:
        raise PreconditionViolated(f"index {i} outside 1..{k}")
    if not all(fwd for _, fwd in bpath):
        raise PreconditionViolated("B[s,t] is not a directed path")
    arcs = [a for a, _ in bpath]
    verts = [D.arcs[arcs[0]][0]] + [D.arcs[a][1] for a in arcs]
    s, t = verts[0], verts[-1]
    f = arcs[i - 1]
    if f in T:
        raise PreconditionViolated(f"f_{i} = arc {f} already in T")
    if not is_st_embracing(D, T, s, t):
        raise PreconditionViolated("T is not st-embracing")
    if not set(arcs[:i - 1]) <= set(T):
        raise PreconditionViolated(f"B[s, v_{i - 1}] is not contained in T")

    tail_of_b = set(arcs[i:])
    path = tree_path(D, T, verts[i - 1], verts[i])
    candidates = [a for a, _ in path if a not in tail_of_b]
    removed = candidates[-1]
    new = as_basis([a for a in T if a != removed] + [f])

    if not is_spanning_tree(D, new):
        raise PostconditionFailed(f"T - {removed} + {f} is not a spanning tree")
    if not is_st_embracing(D, new, s, t):
        raise PostconditionFailed(f"T - {removed} + {f} is not st-embracing")
    prefix = tree_path(D, new, s, verts[i])
    if [a for a, _ in prefix] != arcs[:i]:
        raise PostconditionFailed(f"T'[s, v_{i}] differs from B[s, v_{i}]")
    return removed, new


def theorem2_phase1(D: Digraph, s: int, t: int, A, B) -> tuple:
    """Phase 1 steps and the resulting tree, whose s-t path equals B[s, t]."""
    bpath = tree_path(D, B, s, t)
    current = as_basis(A)
    steps = []
    for i, (f, _) in enumerate(bpath, start=1):
        if f in current:
            continue
        removed, current = claim1_exchange(D, current, bpath, i)
        steps.append((removed, f))
    return steps, current


def theorem2_sequence(D: Digraph, s: int, t: int, A, B) -> ExchangeSequence:
    """Monotone st-embracing exchange sequence from A to B of length at most n-1.

    Phase 2 always removes the smallest arc of current \\ B and inserts the
    smallest arc of B \\ current that restores a spanning tree.
    """
    A, B = as_basis(A), as_basis(B)
    for name, tree in (("A", A), ("B", B)):
        if not is_spanning_tree(D, tree):
            raise NotATree(f"{name} = {tree} is not a spanning tree")
        if not is_st_embracing(D, tree, s, t):
            raise NotEmbracing(f"{name} = {tree} is not st-embracing")

    steps, current = theorem2_phase1(D, s, t, A, B)
    target = set(B)
    while set(current) != target:
        e = min(set(current) - target)
        rest = [a for a in current if a != e]
        for f in sorted(target - set(current)):
            if is_spanning_tree(D, rest + [f]):
                break
        else:  # pragma: no cover - excluded by the basis exchange axiom
            raise PostconditionFailed(f"no arc of B can replace {e}")
        steps.append((e, f))
        current = as_basis(rest + [f])
    return ExchangeSequence(A, tuple(steps))


def build_example1() -> tuple:
    """The five-vertex digraph with trees A, B admitting no 2-step sequence.

    Returns (digraph, s, t, A, B) with vertices s, t, u, v, w = 0..4 and arcs
    su, sv, uw, vw, ut, vt = 0..5.
    """
    s, t, u, v, w = range(5)
    D = Digraph(5, ((s, u), (s, v), (u, w), (v, w), (u, t), (v, t)), labels=("s", "t", "u", "v", "w"))
    su, sv, uw, vw, ut, vt = range(6)
    A = as_basis((su, uw, vw, ut))
    B = as_basis((sv, uw, vw, vt))
    return D, s, t, A, B
