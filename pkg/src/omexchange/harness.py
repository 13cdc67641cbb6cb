"""Instances, generators, audits and the two golden reproductions.

Random generation uses `random.Random(seed)` (Mersenne Twister), whose
output for a given integer seed is stable across platforms.
"""

from __future__ import annotations

import datetime as _dt
import hashlib
import itertools
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .affine import (
    AffineOracle,
    PointConfiguration,
    build_example2,
    check_general_position,
    embracing_simplices,
    parse_points_lines,
)
from .core import (
    ElementAnchor,
    ExchangeSequence,
    ExplicitOracle,
    VertexPairAnchor,
    as_basis,
    parse_circuit,
    verify_exchange_sequence,
)
from .distance import (
    INFINITE,
    SearchOptions,
    embracing_distance,
    monotone_embracing_distance,
    symmetric_exchange_reachability,
    symmetric_exchanges,
    unoriented_distance,
)
from .errors import FormatError, GenerationFailed, OMError
from .graphic import (
    Digraph,
    GraphicOracle,
    build_example1,
    is_st_embracing,
    parse_digraph_lines,
    st_embracing_trees,
    theorem2_sequence,
)

COUNTEREXAMPLE_ENV = "OMEXCHANGE_COUNTEREXAMPLE_DIR"
GENERAL_POSITION_NOTE = "affine instances are audited in general position only"


class ReproductionFailed(OMError):
    pass


# -- instances -------------------------------------------------------------------

@dataclass(frozen=True)
class Instance:
    kind: str  # graphic | affine | explicit
    payload: object  # Digraph | PointConfiguration | ExplicitOracle
    anchor: object
    A: tuple
    B: tuple
    seed: int | None = None
    rank: int | None = None  # declared rank; defaults to the oracle's

    def oracle(self):
        if self.kind == "graphic":
            return GraphicOracle(self.payload)
        if self.kind == "affine":
            return AffineOracle(self.payload)
        if self.kind == "explicit":
            return self.payload
        raise ValueError(f"unknown instance kind {self.kind!r}")

    @property
    def declared_rank(self) -> int:
        return self.oracle().rank if self.rank is None else self.rank

    @property
    def instance_id(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:12]

    def to_text(self) -> str:
        lines = [f"kind {self.kind}"]
        if self.seed is not None:
            lines.append(f"seed {self.seed}")
        if self.rank is not None:
            lines.append(f"rank {self.rank}")
        ids = lambda X: " ".join(map(str, X))
        if self.kind == "graphic":
            lines.append(self.payload.to_text().rstrip("\n"))
            lines.append(f"anchor {self.anchor.source} {self.anchor.target}")
            lines.append(f"tree {ids(self.A)}")
            lines.append(f"tree {ids(self.B)}")
        elif self.kind == "affine":
            lines.append(self.payload.to_text().rstrip("\n"))
            lines.append(f"basis {ids(self.A)}")
            lines.append(f"basis {ids(self.B)}")
        else:
            lines.append(self.payload.to_text().rstrip("\n"))
            lines.append(f"anchor {self.anchor.element}")
            lines.append(f"basis {ids(self.A)}")
            lines.append(f"basis {ids(self.B)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Instance":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
        if not lines or not lines[0].startswith("kind "):
            raise FormatError("instance must start with 'kind <graphic|affine|explicit>'")
        kind = lines[0].split()[1]
        lines = lines[1:]
        seed = rank = None
        while lines and lines[0].split()[0] in ("seed", "rank"):
            key, value = lines[0].split()
            if key == "seed":
                seed = int(value)
            else:
                rank = int(value)
            lines = lines[1:]

        def ids(line, key):
            words = line.split()
            if not words or words[0] != key:
                raise FormatError(f"expected '{key} ...', got {line!r}")
            return as_basis(int(w) for w in words[1:])

        if kind == "graphic":
            D, rest = parse_digraph_lines(lines)
            if len(rest) != 3:
                raise FormatError("graphic instance needs anchor and two tree lines")
            words = rest[0].split()
            if len(words) != 3 or words[0] != "anchor":
                raise FormatError("expected 'anchor <s> <t>'")
            anchor = VertexPairAnchor(int(words[1]), int(words[2]))
            A, B = ids(rest[1], "tree"), ids(rest[2], "tree")
            return cls(kind, D, anchor, A, B, seed, rank)
        if kind == "affine":
            config, rest = parse_points_lines(lines)
            if len(rest) != 2:
                raise FormatError("affine instance needs two basis lines")
            A, B = ids(rest[0], "basis"), ids(rest[1], "basis")
            return cls(kind, config, ElementAnchor(config.anchor_index), A, B, seed, rank)
        if kind == "explicit":
            head = lines[0].split() if lines else []
            if len(head) != 4 or head[0] != "ground" or head[2] != "rank":
                raise FormatError("expected 'ground <n> rank <r>'")
            ground, om_rank = int(head[1]), int(head[3])
            circuits = []
            i = 1
            while i < len(lines) and not lines[i].startswith("anchor"):
                circuits.append(parse_circuit(lines[i]))
                i += 1
            rest = lines[i:]
            if len(rest) != 3:
                raise FormatError("explicit instance needs anchor and two basis lines")
            anchor = ElementAnchor(int(rest[0].split()[1]))
            A, B = ids(rest[1], "basis"), ids(rest[2], "basis")
            return cls(kind, ExplicitOracle(ground, om_rank, circuits), anchor, A, B, seed, rank)
        raise FormatError(f"unknown instance kind {kind!r}")


def example1_instance() -> Instance:
    D, s, t, A, B = build_example1()
    return Instance("graphic", D, VertexPairAnchor(s, t), A, B)


def example2_instance() -> Instance:
    config, A, B = build_example2()
    return Instance("affine", config, ElementAnchor(config.anchor_index), A, B)


# -- generators ----------------------------------------------------------------------

def _random_layered_digraph(n: int, m: int, rng: random.Random) -> tuple:
    """Connected digraph containing a directed s-t path; returns (arcs, s, t)."""
    order = list(range(n))
    rng.shuffle(order)
    s, t = order[0], order[-1]
    middle = [v for v in order[1:-1] if rng.random() < 0.5]
    path = [s] + middle + [t]
    arcs = list(zip(path, path[1:]))
    attached = list(path)
    for v in order:
        if v in attached:
            continue
        other = rng.choice(attached)
        arcs.append((other, v) if rng.random() < 0.5 else (v, other))
        attached.append(v)
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    while len(arcs) < m:
        unused = [p for p in pairs if p not in arcs]
        arcs.append(rng.choice(unused if unused else pairs))
    rng.shuffle(arcs)
    return arcs, s, t


def _random_spanning_tree(D: Digraph, rng: random.Random) -> tuple:
    ids = list(range(D.m))
    rng.shuffle(ids)
    parent = list(range(D.n))
    tree = []
    for a in ids:
        x, y = D.arcs[a]
        while parent[x] != x:
            x = parent[x]
        while parent[y] != y:
            y = parent[y]
        if x != y:
            parent[x] = y
            tree.append(a)
    return as_basis(tree)


def gen_graphic(n: int, m: int, seed: int, max_attempts: int = 200,
                enumeration_limit: int = 8) -> Instance:
    """Random connected digraph with two st-embracing spanning trees.

    Trees are drawn uniformly from the full list of embracing trees for
    n <= enumeration_limit, by random Kruskal orderings beyond.  A = B only
    when no draw within `max_attempts` has two embracing trees (e.g. n=2).
    """
    if n < 2 or m < n - 1:
        raise ValueError("need n >= 2 and m >= n - 1")
    rng = random.Random(seed)
    fallback = None
    for _ in range(max_attempts):
        arcs, s, t = _random_layered_digraph(n, m, rng)
        D = Digraph(n, tuple(arcs))
        if n <= enumeration_limit:
            trees = st_embracing_trees(D, s, t)
        else:
            found = set()
            for _ in range(40 * n):
                T = _random_spanning_tree(D, rng)
                if is_st_embracing(D, T, s, t):
                    found.add(T)
            trees = sorted(found)
        if m == n - 1 and len(trees) == 1:
            A = B = trees[0]
        elif len(trees) >= 2:
            A, B = rng.sample(trees, 2)
        else:
            if fallback is None and trees:
                fallback = Instance("graphic", D, VertexPairAnchor(s, t), trees[0], trees[0], seed=seed)
            continue
        return Instance("graphic", D, VertexPairAnchor(s, t), A, B, seed=seed)
    if fallback is not None:
        return fallback
    raise GenerationFailed(f"no instance for n={n}, m={m}, seed={seed}")


def gen_affine(d: int, count: int, seed: int, max_attempts: int = 500, bound: int = 12) -> Instance:
    """Random rational points with two disjoint origin-embracing simplices.

    Coordinates are p/q with |p| <= bound and 1 <= q <= 4.  Draws that are
    not in general position (the origin included) are rejected.
    """
    if d < 1 or count < 2 * (d + 1):
        raise ValueError("need d >= 1 and count >= 2(d+1)")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        pts = [
            tuple(Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) for _ in range(d))
            for _ in range(count)
        ]
        if len(set(pts)) != count or any(all(x == 0 for x in p) for p in pts):
            continue
        config = PointConfiguration.with_origin(pts)
        if not check_general_position(config).ok:
            continue
        simplices = embracing_simplices(config)
        disjoint = [(X, Y) for X, Y in itertools.combinations(simplices, 2) if not set(X) & set(Y)]
        if not disjoint:
            continue
        A, B = rng.choice(disjoint)
        if rng.random() < 0.5:
            A, B = B, A
        return Instance("affine", config, ElementAnchor(config.anchor_index), A, B, seed=seed)
    raise GenerationFailed(f"no instance for d={d}, count={count}, seed={seed}")


# -- exhaustive enumeration -------------------------------------------------------------

def complete_digraph(n: int) -> Digraph:
    """All n(n-1) arcs, ordered by (tail, head)."""
    return Digraph(n, tuple((a, b) for a in range(n) for b in range(n) if a != b))


def _canonical_masks(n: int, fixed: int) -> np.ndarray:
    """Arc-subset bitmasks of the complete digraph that are minimal under relabeling.

    Only permutations fixing vertices 0..fixed-1 are applied.
    """
    arcs = complete_digraph(n).arcs
    index = {a: i for i, a in enumerate(arcs)}
    width = len(arcs)
    masks = np.arange(1 << width, dtype=np.int64)
    best = masks.copy()
    chunks = [(lo, min(lo + 8, width)) for lo in range(0, width, 8)]
    for perm in itertools.permutations(range(fixed, n)):
        p = list(range(fixed)) + list(perm)
        image = [index[(p[a], p[b])] for a, b in arcs]
        mapped = np.zeros_like(masks)
        for lo, hi in chunks:
            table = np.zeros(1 << (hi - lo), dtype=np.int64)
            for byte in range(1 << (hi - lo)):
                acc = 0
                for bit in range(hi - lo):
                    if byte >> bit & 1:
                        acc |= 1 << image[lo + bit]
                table[byte] = acc
            mapped |= table[(masks >> lo) & ((1 << (hi - lo)) - 1)]
        np.minimum(best, mapped, out=best)
    return masks[best == masks]


def enumerate_digraphs(n: int, anchored: bool = False, connected: bool = True):
    """Digraphs on n vertices (no parallel arcs) up to relabeling.

    With `anchored`, vertices 0 and 1 are distinguished (the s-t pair), so the
    result covers every (digraph, s, t) triple up to relabeling.  Arcs are
    listed in complete-digraph order.
    """
    if n > 5:
        raise ValueError("exhaustive enumeration is limited to n <= 5")
    arcs = complete_digraph(n).arcs
    fixed = min(2, n) if anchored else 0
    for mask in _canonical_masks(n, fixed).tolist():
        D = Digraph(n, tuple(a for i, a in enumerate(arcs) if mask >> i & 1))
        if connected and not D.is_connected():
            continue
        yield D


@dataclass
class Theorem2Audit:
    n: int
    pairs: int = 0
    disjoint_pairs: int = 0
    max_length: int = 0
    violations: list = field(default_factory=list)

    def line(self) -> str:
        return (f"n={self.n} pairs={self.pairs} disjoint={self.disjoint_pairs} "
                f"max_length={self.max_length} violations={len(self.violations)}")


def check_theorem2_pair(D, oracle, s, t, A, B, audit: Theorem2Audit) -> None:
    """Run the constructive sequence and the monotone BFS on one tree pair."""
    anchor = VertexPairAnchor(s, t)
    audit.pairs += 1
    try:
        seq = theorem2_sequence(D, s, t, A, B)
    except OMError as exc:
        audit.violations.append((A, B, f"theorem2 raised {exc!r}"))
        return
    rep = verify_exchange_sequence(oracle, anchor, A, B, seq)
    q = len(seq)
    audit.max_length = max(audit.max_length, q)
    if not (rep.valid and rep.monotone and q <= D.n - 1):
        audit.violations.append((A, B, f"bad sequence {seq.steps}: {rep}"))
    if not set(A) & set(B):
        audit.disjoint_pairs += 1
        if not q == D.n - 1 == unoriented_distance(A, B):
            audit.violations.append((A, B, f"disjoint pair with length {q}"))
    mono = monotone_embracing_distance(oracle, anchor, A, B)
    if not mono.finite or mono.distance > q:
        audit.violations.append((A, B, f"monotone distance {mono.distance} vs sequence {q}"))


def theorem2_audit_complete(n: int) -> Theorem2Audit:
    """Every st-embracing tree pair of the complete digraph on n vertices, s=0, t=1.

    The constructive sequence, its verification and the union-mode BFS only
    look at arcs of A and B, so this covers every digraph on n vertices
    whose arcs are listed in complete-digraph order.
    """
    audit = Theorem2Audit(n)
    if n < 2:
        return audit
    D = complete_digraph(n)
    oracle = GraphicOracle(D)
    trees = st_embracing_trees(D, 0, 1)
    for A in trees:
        for B in trees:
            check_theorem2_pair(D, oracle, 0, 1, A, B, audit)
    return audit


def theorem2_audit_enumerated(n: int) -> Theorem2Audit:
    """Every connected digraph up to relabeling with s=0, t=1, every embracing tree pair."""
    audit = Theorem2Audit(n)
    if n < 2:
        return audit
    for D in enumerate_digraphs(n, anchored=True):
        oracle = GraphicOracle(D)
        trees = st_embracing_trees(D, 0, 1)
        for A in trees:
            for B in trees:
                check_theorem2_pair(D, oracle, 0, 1, A, B, audit)
    return audit


# -- audits ------------------------------------------------------------------------------

def _fmt_dist(x) -> str:
    if x is None:
        return "-"
    return "inf" if x == INFINITE else str(int(x))


REPORT_COLUMNS = (
    "id", "kind", "size", "rank", "unoriented", "emb_union", "emb_full",
    "mono_union", "mono_full", "theorem2", "conj2", "ordering",
)


@dataclass
class AuditRecord:
    instance_id: str
    kind: str
    size: int  # n for graphic, d for affine, ground size for explicit
    rank: int
    unoriented: int
    embracing: dict  # mode -> distance
    monotone: dict  # mode -> distance
    theorem2: int | None
    within_rank: bool
    ordering_ok: bool
    violations: list = field(default_factory=list)
    dump_path: str | None = None
    witnesses: dict = field(default_factory=dict, repr=False)
    started: str = ""
    finished: str = ""

    @property
    def flagged(self) -> bool:
        return bool(self.violations)

    def line(self) -> str:
        vals = [
            self.instance_id, self.kind, str(self.size), str(self.rank), str(self.unoriented),
            _fmt_dist(self.embracing.get("union")), _fmt_dist(self.embracing.get("full")),
            _fmt_dist(self.monotone.get("union")), _fmt_dist(self.monotone.get("full")),
            _fmt_dist(self.theorem2),
            "pass" if self.within_rank else "FAIL",
            "ok" if self.ordering_ok else "BROKEN",
        ]
        return "\t".join(vals)


def _now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")


def counterexample_dir() -> Path:
    return Path(os.environ.get(COUNTEREXAMPLE_ENV, "counterexamples"))


def audit_instance(inst: Instance, modes=("union", "full"), dump_dir=None,
                   check_monotone: bool = False) -> AuditRecord:
    """All applicable distances of one instance, checked against the rank bound.

    A violated bound, a broken ordering invariant, an invalid constructive
    sequence, or (with `check_monotone`) an infinite monotone distance flags
    the record and writes the instance plus witnesses to `dump_dir`.
    """
    started = _now()
    oracle = inst.oracle()
    rank = inst.declared_rank
    unoriented = unoriented_distance(inst.A, inst.B)
    emb, mono, witnesses = {}, {}, {}
    for mode in modes:
        res = embracing_distance(oracle, inst.anchor, inst.A, inst.B, SearchOptions(mode))
        emb[mode] = res.distance
        witnesses[f"embracing {mode}"] = res.witness
        mres = monotone_embracing_distance(oracle, inst.anchor, inst.A, inst.B, SearchOptions(mode))
        mono[mode] = mres.distance
        witnesses[f"monotone {mode}"] = mres.witness

    violations = []
    for mode, dist in emb.items():
        if dist > rank:
            violations.append(f"embracing distance {_fmt_dist(dist)} exceeds rank {rank} ({mode} mode)")
        for label in (f"embracing {mode}", f"monotone {mode}"):
            w = witnesses[label]
            if w is None:
                continue
            rep = verify_exchange_sequence(oracle, inst.anchor, inst.A, inst.B, w)
            if not rep.valid or (label.startswith("monotone") and not rep.monotone):
                violations.append(f"{label} witness fails verification: {rep.reason}")

    ordering_ok = True
    for mode in modes:
        if not unoriented <= emb[mode] <= mono[mode]:
            ordering_ok = False
    if "union" in emb and "full" in emb:
        if not (emb["full"] <= emb["union"] and mono["full"] <= mono["union"]):
            ordering_ok = False
    if not ordering_ok:
        violations.append("ordering invariant unoriented <= embracing <= monotone broken")

    if check_monotone:
        for mode, dist in mono.items():
            if dist == INFINITE:
                violations.append(f"no monotone sequence ({mode} mode)")

    t2 = None
    if inst.kind == "graphic":
        D = inst.payload
        s, t = inst.anchor.source, inst.anchor.target
        try:
            seq = theorem2_sequence(D, s, t, inst.A, inst.B)
            t2 = len(seq)
            witnesses["theorem2"] = seq
            rep = verify_exchange_sequence(oracle, inst.anchor, inst.A, inst.B, seq)
            if not (rep.valid and rep.monotone and t2 <= D.n - 1):
                violations.append(f"constructive sequence invalid: {rep}")
            if "union" in mono and mono["union"] > t2:
                violations.append("monotone union distance exceeds constructive length")
        except OMError as exc:
            violations.append(f"constructive sequence failed: {exc!r}")

    size = {"graphic": lambda: inst.payload.n, "affine": lambda: inst.payload.d}.get(
        inst.kind, lambda: oracle.ground_size)()
    record = AuditRecord(
        instance_id=inst.instance_id, kind=inst.kind, size=size, rank=rank,
        unoriented=unoriented, embracing=emb, monotone=mono, theorem2=t2,
        within_rank=all(d <= rank for d in emb.values()), ordering_ok=ordering_ok,
        violations=violations, witnesses=witnesses, started=started,
    )
    if violations:
        record.dump_path = str(write_dump(inst, record, dump_dir))
    record.finished = _now()
    return record


def write_dump(inst: Instance, record: AuditRecord, dump_dir=None) -> Path:
    """Instance text followed by commented violations and witnesses; re-parses as the instance."""
    directory = Path(dump_dir) if dump_dir is not None else counterexample_dir()
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{inst.kind}-{inst.instance_id}.txt"
    lines = [inst.to_text().rstrip("\n")]
    for v in record.violations:
        lines.append(f"# violation: {v}")
    for label, w in record.witnesses.items():
        if w is None:
            lines.append(f"# witness {label}: none")
            continue
        lines.append(f"# witness {label}:")
        lines += ["#   " + ln for ln in w.format().splitlines()]
    path.write_text("\n".join(lines) + "\n")
    return path


def _audit_job(args):
    inst, modes, dump_dir, check_monotone = args
    return audit_instance(inst, modes, dump_dir, check_monotone)


def audit(instances, modes=("union", "full"), dump_dir=None, workers: int = 1,
          check_monotone: bool = False) -> list:
    """Audit records in instance order, whatever the worker count."""
    jobs = [(inst, tuple(modes), dump_dir, check_monotone) for inst in instances]
    if workers <= 1:
        return [_audit_job(j) for j in jobs]
    import multiprocessing

    with multiprocessing.Pool(workers) as pool:
        return pool.map(_audit_job, jobs)


def format_report(records, kind: str) -> str:
    header = "# " + "\t".join(REPORT_COLUMNS) + f"\t| kind={kind}"
    if kind == "affine":
        header += f"; {GENERAL_POSITION_NOTE}"
    return "\n".join([header] + [r.line() for r in records]) + "\n"


def summarize(records) -> dict:
    ratios = [
        max(r.embracing.values()) / r.rank
        for r in records if r.rank and r.embracing and max(r.embracing.values()) != INFINITE
    ]
    return {
        "instances": len(records),
        "violations": sum(r.flagged for r in records),
        "over_rank": sum(not r.within_rank for r in records),
        "ordering_failures": sum(not r.ordering_ok for r in records),
        "infinite_monotone": sum(any(d == INFINITE for d in r.monotone.values()) for r in records),
        "max_distance_over_rank": max(ratios, default=0.0),
    }


def generate_instances(kind: str, count: int, seed: int, n=None, d=None) -> list:
    """Seeded batch: instance i uses seed `seed + i`.

    Graphic sizes cycle through 3..n (default 8) with 1..n extra arcs over a
    tree; affine instances use dimension d (default: alternate 2 and 3) and
    2(d+1) points.
    """
    out = []
    rng = random.Random(seed)
    for i in range(count):
        if kind == "graphic":
            top = n or 8
            nn = 3 + i % (top - 2) if top > 3 else top
            m = min(nn - 1 + rng.randint(1, nn), nn * (nn - 1))
            out.append(gen_graphic(nn, m, seed + i))
        elif kind == "affine":
            dd = d or (2 if i % 2 == 0 else 3)
            out.append(gen_affine(dd, 2 * (dd + 1), seed + i))
        else:
            raise ValueError(f"cannot generate instances of kind {kind!r}")
    return out


# -- golden reproductions ------------------------------------------------------------------

@dataclass
class ReproReport:
    lines: list = field(default_factory=list)
    facts: dict = field(default_factory=dict)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _require(cond, message):
    if not cond:
        raise ReproductionFailed(message)


def repro_example1() -> ReproReport:
    """Distance 3 on the five-vertex digraph, with every 2-step candidate refuted."""
    D, s, t, A, B = build_example1()
    oracle = GraphicOracle(D)
    anchor = VertexPairAnchor(s, t)
    name = D.arc_name
    names = lambda X: "{" + ", ".join(name(a) for a in X) + "}"
    fmt_steps = lambda seq: ", ".join(f"({name(r)} -> {name(a)})" for r, a in seq.steps)
    rep = ReproReport()
    rep.lines.append("arcs: " + ", ".join(f"{i}={name(i)}" for i in range(D.m)))
    rep.lines.append(f"A = {names(A)}  B = {names(B)}  |A \\ B| = {unoriented_distance(A, B)}")
    _require(is_st_embracing(D, A, s, t) and is_st_embracing(D, B, s, t), "A or B not st-embracing")

    # every sequence of two exchanges from A, over all arcs
    candidates = 0
    for r1 in A:
        for a1 in range(D.m):
            if a1 in A:
                continue
            T1 = set(A) - {r1} | {a1}
            for r2 in sorted(T1):
                for a2 in range(D.m):
                    if a2 in T1:
                        continue
                    candidates += 1
                    seq = ExchangeSequence(A, ((r1, a1), (r2, a2)))
                    ok = verify_exchange_sequence(oracle, anchor, A, B, seq).valid
                    _require(not ok, f"length-2 sequence {fmt_steps(seq)} verifies")
    rep.lines.append(f"length-2 candidates checked: {candidates}, valid: 0")
    rep.facts["length2_candidates"] = candidates

    res = embracing_distance(oracle, anchor, A, B, SearchOptions("full"))
    _require(res.distance == 3, f"embracing distance {res.distance}, expected 3")
    rep.lines.append(f"embracing distance: {res.distance}  BFS witness: {fmt_steps(res.witness)}")
    rep.facts["distance"] = res.distance

    su, sv, uw, vw, ut, vt = range(6)
    known = ExchangeSequence(A, ((vw, sv), (ut, vt), (su, vw)))
    prep = verify_exchange_sequence(oracle, anchor, A, B, known)
    _require(prep.valid and prep.monotone, f"reference sequence rejected: {prep}")
    rep.lines.append(f"reference sequence {fmt_steps(known)}: valid, monotone={prep.monotone}, "
                     f"strictly monotone={prep.strictly_monotone}")
    rep.facts["reference_sequence"] = prep

    seq = theorem2_sequence(D, s, t, A, B)
    trep = verify_exchange_sequence(oracle, anchor, A, B, seq)
    _require(trep.valid and trep.monotone and len(seq) <= D.n - 1, f"constructive sequence rejected: {trep}")
    rep.lines.append(f"constructive sequence {fmt_steps(seq)}: length {len(seq)} <= {D.n - 1}, monotone")
    rep.facts["theorem2_length"] = len(seq)
    rep.lines.append("distance 3")
    return rep


def repro_example2() -> ReproReport:
    """The circle configuration where v <-> y is the only symmetric exchange, both ways."""
    config, A, B = build_example2()
    oracle = AffineOracle(config)
    anchor = ElementAnchor(config.anchor_index)
    name = config.name
    names = lambda X: "{" + ", ".join(name(i) for i in X) + "}"
    rep = ReproReport()
    rep.lines.append("points: " + ", ".join(
        f"{name(i)}=({', '.join(str(c) for c in p)})" for i, p in enumerate(config.points)))
    rep.lines.append(f"A = {names(A)}  B = {names(B)}")

    first = symmetric_exchanges(oracle, anchor, A, B)
    total = len(set(A) - set(B)) * len(set(B) - set(A))
    u, x, y, v, w, z = range(6)
    _require(first == [(v, y)], f"feasible exchanges from (A, B): {first}")
    rep.lines.append(f"feasible symmetric exchanges from (A, B): {len(first)} of {total}: "
                     + ", ".join(f"{name(e)} <-> {name(f)}" for e, f in first))
    A2 = as_basis(set(A) - {v} | {y})
    B2 = as_basis(set(B) - {y} | {v})
    second = symmetric_exchanges(oracle, anchor, A2, B2)
    _require(second == [(y, v)], f"feasible exchanges from (A', B'): {second}")
    rep.lines.append(f"A' = {names(A2)}  B' = {names(B2)}; feasible: "
                     + ", ".join(f"{name(e)} <-> {name(f)}" for e, f in second))

    reach = symmetric_exchange_reachability(oracle, anchor, A, B)
    _require(reach.pairs is not None and set(reach.pairs) == {(A, B), (A2, B2)},
             f"pair graph nodes: {reach.pairs}")
    _require(not reach.reachable, "(B, A) reachable")
    rep.lines.append("pair graph:")
    rep.lines += ["  " + ln for ln in reach.lines(name)]
    rep.facts.update(first=first, second=second, reach=reach, candidates=total)

    dist = embracing_distance(oracle, anchor, A, B)
    _require(dist.finite and dist.distance <= oracle.rank, f"plain distance {dist.distance}")
    steps = ", ".join(f"({name(r)} -> {name(a)})" for r, a in dist.witness.steps)
    rep.lines.append(f"plain embracing distance A -> B: {dist.distance} <= rank {oracle.rank}; witness {steps}")
    rep.facts["distance"] = dist.distance
    return rep
