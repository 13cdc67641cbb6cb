"""Representation-independent oriented matroid vocabulary.

Signed circuits, anchors, the oracle interface every representation
implements, circuit-axiom validation, the embracing predicate and
exchange-sequence verification.  An explicit oracle backed by a list of
signed circuits lives here too, together with its text format.
"""

from __future__ import annotations

import abc
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from .errors import AnchorInBasis, AnchorNotSpanned, FormatError

ElementId = int
BasisSet = tuple  # sorted tuple of ElementId


def as_basis(elements: Iterable[int]) -> BasisSet:
    """Canonical sorted tuple form of a basis; rejects repeated ids."""
    out = tuple(sorted(elements))
    if len(set(out)) != len(out):
        raise ValueError(f"repeated element in basis {out}")
    return out


@dataclass(frozen=True)
class SignedCircuit:
    positive: frozenset = field(default_factory=frozenset)
    negative: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "positive", frozenset(self.positive))
        object.__setattr__(self, "negative", frozenset(self.negative))
        if self.positive & self.negative:
            raise ValueError("positive and negative parts must be disjoint")

    @property
    def support(self) -> frozenset:
        return self.positive | self.negative

    def __neg__(self) -> "SignedCircuit":
        return SignedCircuit(self.negative, self.positive)

    def sign(self, element: int) -> int:
        if element in self.positive:
            return 1
        if element in self.negative:
            return -1
        return 0

    def key(self) -> tuple:
        return (tuple(sorted(self.positive)), tuple(sorted(self.negative)))

    def canonical(self) -> "SignedCircuit":
        """The lexicographically smaller of C and -C."""
        neg = -self
        return self if self.key() <= neg.key() else neg

    def oriented(self, element: int, sign: int = -1) -> "SignedCircuit":
        """Return C or -C so that `element` carries `sign`."""
        if element not in self.support:
            raise ValueError(f"element {element} not in circuit")
        return self if self.sign(element) == sign else -self

    def __str__(self) -> str:
        return format_circuit(self)


@dataclass(frozen=True)
class ElementAnchor:
    element: int


@dataclass(frozen=True)
class VertexPairAnchor:
    source: int
    target: int

    def __post_init__(self):
        if self.source == self.target:
            raise ValueError("vertex-pair anchor needs source != target")


Anchor = Union[ElementAnchor, VertexPairAnchor]


def as_anchor(anchor) -> Anchor:
    """Accept a bare int as an element anchor and a 2-tuple as a vertex pair."""
    if isinstance(anchor, (ElementAnchor, VertexPairAnchor)):
        return anchor
    if isinstance(anchor, int):
        return ElementAnchor(anchor)
    if isinstance(anchor, tuple) and len(anchor) == 2:
        return VertexPairAnchor(*anchor)
    raise TypeError(f"cannot interpret {anchor!r} as an anchor")


class OrientedMatroidOracle(abc.ABC):
    """Answers basis tests and anchored fundamental circuits.

    Implementations must be deterministic and must not mutate shared state
    apart from pure memoization.
    """

    ground_size: int
    rank: int

    @abc.abstractmethod
    def is_basis(self, basis: Sequence[int]) -> bool: ...

    @abc.abstractmethod
    def anchored_fundamental_circuit(self, basis: Sequence[int], anchor) -> SignedCircuit:
        """Unique circuit inside basis + anchor, oriented with the anchor negative."""

    def anchor_element(self, anchor) -> int:
        """Element id that represents the anchor inside returned circuits."""
        anchor = as_anchor(anchor)
        if not isinstance(anchor, ElementAnchor):
            raise TypeError(f"{type(self).__name__} only supports element anchors")
        if not 0 <= anchor.element < self.ground_size:
            raise ValueError(f"anchor element {anchor.element} out of range")
        return anchor.element

    def exchange_elements(self, anchor) -> tuple:
        """Every ground element that may enter a basis during an exchange."""
        a = self.anchor_element(anchor)
        return tuple(e for e in range(self.ground_size) if e != a)

    def bases(self, anchor=None) -> Iterator[BasisSet]:
        """All bases, by brute force over r-subsets (excluding the anchor if given)."""
        pool = range(self.ground_size) if anchor is None else self.exchange_elements(anchor)
        for combo in itertools.combinations(pool, self.rank):
            if self.is_basis(combo):
                yield combo


def is_embracing(oracle: OrientedMatroidOracle, basis: Sequence[int], anchor) -> bool:
    """True iff every non-anchor element of C(basis, anchor) is positive."""
    a = oracle.anchor_element(anchor)
    if a in basis:
        raise AnchorInBasis(f"anchor {a} belongs to basis {tuple(basis)}")
    circuit = oracle.anchored_fundamental_circuit(basis, anchor)
    return circuit.negative == {a}


def extract_circuits(oracle: OrientedMatroidOracle) -> set:
    """All signed circuits (both orientations), via fundamental circuits of every basis.

    Every circuit minus one element extends to a basis, so this recovers the
    full circuit family.
    """
    found = set()
    for basis in oracle.bases():
        inside = set(basis)
        for e in range(oracle.ground_size):
            if e in inside:
                continue
            c = oracle.anchored_fundamental_circuit(basis, ElementAnchor(e))
            found.add(c)
            found.add(-c)
    return found


# -- axiom validation -------------------------------------------------------

@dataclass
class AxiomResult:
    passed: bool
    witness: tuple = ()

    def __bool__(self):
        return self.passed


@dataclass
class AxiomReport:
    ids: AxiomResult
    nontriviality: AxiomResult
    symmetry: AxiomResult
    incomparability: AxiomResult
    elimination: AxiomResult

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results().values())

    def results(self) -> dict:
        return {
            "ids": self.ids,
            "nontriviality": self.nontriviality,
            "symmetry": self.symmetry,
            "incomparability": self.incomparability,
            "elimination": self.elimination,
        }

    def lines(self) -> list:
        out = []
        for name, res in self.results().items():
            status = "pass" if res.passed else "FAIL"
            wit = "" if res.passed else "  witness: " + ", ".join(map(str, res.witness))
            out.append(f"{name}: {status}{wit}")
        return out


def validate_circuit_axioms(circuits: Iterable[SignedCircuit], ground_size: int) -> AxiomReport:
    """Exhaustively check the signed circuit axioms on a finite list.

    Incomparability is checked on supports.  Failures carry the first
    violating circuits (and element, for elimination) as witness.
    """
    family = list(dict.fromkeys(circuits))
    members = set(family)

    ids = AxiomResult(True)
    for c in family:
        if any(not 0 <= e < ground_size for e in c.support):
            ids = AxiomResult(False, (c,))
            break

    nontrivial = AxiomResult(True)
    for c in family:
        if not c.support:
            nontrivial = AxiomResult(False, (c,))
            break

    symmetric = AxiomResult(True)
    for c in family:
        if -c not in members:
            symmetric = AxiomResult(False, (c,))
            break

    incomparable = AxiomResult(True)
    for x, y in itertools.permutations(family, 2):
        if x.support <= y.support and x != -y:
            incomparable = AxiomResult(False, (x, y))
            break

    eliminable = AxiomResult(True)
    for x, y in itertools.product(family, repeat=2):
        if x == -y:
            continue
        for e in sorted(x.positive & y.negative):
            pos = (x.positive | y.positive) - {e}
            neg = (x.negative | y.negative) - {e}
            if not any(z.positive <= pos and z.negative <= neg for z in family):
                eliminable = AxiomResult(False, (x, y, e))
                break
        if not eliminable.passed:
            break

    return AxiomReport(ids, nontrivial, symmetric, incomparable, eliminable)


# -- exchange sequences -----------------------------------------------------

@dataclass(frozen=True)
class ExchangeSequence:
    start: BasisSet
    steps: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "start", as_basis(self.start))
        object.__setattr__(self, "steps", tuple((int(r), int(a)) for r, a in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def bases(self) -> Iterator[BasisSet]:
        """T_0, ..., T_q; steps that do not apply cleanly are still replayed set-wise."""
        current = set(self.start)
        yield tuple(sorted(current))
        for removed, added in self.steps:
            current.discard(removed)
            current.add(added)
            yield tuple(sorted(current))

    @property
    def final(self) -> BasisSet:
        *_, last = self.bases()
        return last

    def format(self, distance=None) -> str:
        """Witness text: start line, one `- r + a` line per step, distance line."""
        lines = ["start: " + " ".join(map(str, self.start))]
        lines += [f"- {r} + {a}" for r, a in self.steps]
        if distance is None:
            distance = len(self)
        lines.append(f"distance: {distance}")
        return "\n".join(lines) + "\n"


@dataclass
class VerificationReport:
    valid: bool
    length: int
    monotone: bool = False
    strictly_monotone: bool = False
    failed_step: int | None = None
    reason: str = ""


def verify_exchange_sequence(oracle: OrientedMatroidOracle, anchor, A, B,
                             seq: ExchangeSequence) -> VerificationReport:
    """Replay `seq` from A and check it is an embracing exchange sequence ending in B.

    Step 0 refers to the start basis itself.  Monotonicity flags are only
    set for valid sequences.
    """
    A, B = as_basis(A), as_basis(B)
    target = set(B)
    q = len(seq)

    def fail(step, reason):
        return VerificationReport(False, q, failed_step=step, reason=reason)

    if seq.start != A:
        return fail(0, "sequence does not start at A")
    a = oracle.anchor_element(anchor)
    current = set(A)
    if not oracle.is_basis(A):
        return fail(0, "start is not a basis")
    if a in current or not is_embracing(oracle, A, anchor):
        return fail(0, "start is not embracing")

    monotone = True
    overlap = len(current & target)
    for i, (removed, added) in enumerate(seq.steps, start=1):
        if removed not in current:
            return fail(i, f"removed element {removed} not in current basis")
        if added in current:
            return fail(i, f"added element {added} already in current basis")
        if added == a:
            return fail(i, "anchor element added to basis")
        current.remove(removed)
        current.add(added)
        basis = tuple(sorted(current))
        if not oracle.is_basis(basis):
            return fail(i, f"{basis} is not a basis")
        if not is_embracing(oracle, basis, anchor):
            return fail(i, f"{basis} is not embracing")
        new_overlap = len(current & target)
        if new_overlap < overlap:
            monotone = False
        overlap = new_overlap

    if current != target:
        return fail(q, "sequence does not end at B")
    strict = q == len(set(A) - target)
    return VerificationReport(True, q, monotone=monotone, strictly_monotone=strict)


# -- explicit oriented matroids ----------------------------------------------

class ExplicitOracle(OrientedMatroidOracle):
    """Oriented matroid given by its list of signed circuits.

    Circuits are closed under negation on construction; the rank is taken
    as declared.
    """

    def __init__(self, ground_size: int, rank: int, circuits: Iterable[SignedCircuit]):
        self.ground_size = ground_size
        self.rank = rank
        closed = set()
        for c in circuits:
            closed.add(c)
            closed.add(-c)
        self.circuits = frozenset(closed)
        # one representative per support is enough for orientation lookups
        self._by_support = {}
        for c in sorted(closed, key=SignedCircuit.key):
            self._by_support.setdefault(c.support, c)

    def is_basis(self, basis) -> bool:
        b = set(basis)
        if len(b) != len(basis) or len(b) != self.rank:
            return False
        if any(not 0 <= e < self.ground_size for e in b):
            return False
        return not any(s <= b for s in self._by_support)

    def anchored_fundamental_circuit(self, basis, anchor) -> SignedCircuit:
        e = self.anchor_element(anchor)
        if e in basis:
            raise AnchorInBasis(f"anchor {e} belongs to basis {tuple(basis)}")
        span = set(basis) | {e}
        for support, c in self._by_support.items():
            if e in support and support <= span:
                return c.oriented(e, -1)
        raise AnchorNotSpanned(f"no circuit in basis {tuple(basis)} + {e}")

    def to_text(self) -> str:
        lines = [f"ground {self.ground_size} rank {self.rank}"]
        for c in sorted({c.canonical() for c in self.circuits}, key=SignedCircuit.key):
            lines.append(format_circuit(c))
        return "\n".join(lines) + "\n"


def format_circuit(c: SignedCircuit) -> str:
    pos = " ".join(map(str, sorted(c.positive)))
    neg = " ".join(map(str, sorted(c.negative)))
    return f"+ {pos} ; - {neg}".replace("  ", " ").rstrip()


def parse_circuit(line: str) -> SignedCircuit:
    text = line.strip().replace("+", " + ").replace("-", " - ")
    if ";" in text:
        left, right = text.split(";", 1)
    else:
        left, right = text, ""
    left, right = left.split(), right.split()
    if not left or left[0] != "+":
        raise FormatError(f"circuit line must start with '+': {line!r}")
    if right and right[0] != "-":
        raise FormatError(f"negative part must start with '-': {line!r}")
    try:
        pos = [int(x) for x in left[1:]]
        neg = [int(x) for x in right[1:]]
    except ValueError as exc:
        raise FormatError(f"bad element id in {line!r}") from exc
    if any(x < 0 for x in pos + neg):
        raise FormatError(f"negative element id in {line!r}")
    return SignedCircuit(frozenset(pos), frozenset(neg))


def parse_explicit(text: str) -> tuple:
    """Parse the explicit format into (ground_size, rank, circuits).

    Circuits are returned as written (no closure), so that axiom validation
    sees exactly the file's contents.
    """
    ground = rank = None
    circuits = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        if words[0] == "ground":
            if len(words) != 4 or words[2] != "rank":
                raise FormatError(f"bad header {line!r}")
            ground, rank = int(words[1]), int(words[3])
            continue
        if ground is None:
            raise FormatError("missing 'ground <n> rank <r>' header")
        c = parse_circuit(line)
        if any(e >= ground for e in c.support):
            raise FormatError(f"element id out of range in {line!r}")
        circuits.append(c)
    if ground is None:
        raise FormatError("missing 'ground <n> rank <r>' header")
    return ground, rank, circuits
