"""Point configurations over exact rationals as affine oriented matroids.

Each point p is lifted to (p, 1); a set of points is affinely independent
iff its lifted columns are linearly independent, and the signs of a lifted
linear dependence give the signed circuit.  The anchor (usually the origin)
is an ordinary element of the ground set.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import exact
from .core import (
    OrientedMatroidOracle,
    SignedCircuit,
    as_basis,
)
from .errors import (
    AnchorInBasis,
    AnchorNotSpanned,
    AnchorOnFace,
    DegenerateSimplex,
    FormatError,
    NotACircuit,
)


def rational_point(coords) -> tuple:
    return tuple(exact.to_fraction(x) for x in coords)


def lift(point) -> tuple:
    return tuple(point) + (Fraction(1),)


@dataclass(frozen=True)
class PointConfiguration:
    d: int
    points: tuple
    anchor_index: int
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        pts = tuple(rational_point(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if any(len(p) != self.d for p in pts):
            raise ValueError(f"every point must have dimension {self.d}")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        if not 0 <= self.anchor_index < len(pts):
            raise ValueError("anchor index out of range")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def with_origin(cls, points, labels=None) -> "PointConfiguration":
        """Configuration of `points` plus the origin, appended last as the anchor."""
        pts = [rational_point(p) for p in points]
        d = len(pts[0]) if pts else 0
        if labels is not None:
            labels = tuple(labels) + ("o",)
        return cls(d, tuple(pts) + ((Fraction(0),) * d,), len(pts), labels)

    def name(self, i: int) -> str:
        return str(i) if self.labels is None else self.labels[i]

    def lifted(self, ids) -> list:
        return [lift(self.points[i]) for i in ids]

    def to_text(self) -> str:
        lines = [f"points {self.d} {len(self.points)}"]
        for p in self.points:
            lines.append(" ".join(_fmt(x) for x in p))
        lines.append(f"anchor {self.anchor_index}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "PointConfiguration":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
        config, _ = parse_points_lines(lines)
        return config


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_points_lines(lines: list) -> tuple:
    """Parse `points d count` + coordinates + `anchor i` from `lines`; returns (config, rest)."""
    head = lines[0].split() if lines else []
    if len(head) != 3 or head[0] != "points":
        raise FormatError("expected 'points <d> <count>'")
    d, count = int(head[1]), int(head[2])
    pts = []
    for line in lines[1:1 + count]:
        words = line.split()
        if len(words) != d:
            raise FormatError(f"expected {d} coordinates in {line!r}")
        try:
            pts.append(tuple(Fraction(w) for w in words))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad rational in {line!r}") from exc
    rest = lines[1 + count:]
    if len(pts) != count or not rest or not rest[0].startswith("anchor"):
        raise FormatError("expected 'anchor <index>' after the points")
    anchor = int(rest[0].split()[1])
    try:
        return PointConfiguration(d, tuple(pts), anchor), rest[1:]
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def lifted_rank(points: Sequence) -> int:
    """Rank of the lifted points; equals len(points) iff they are affinely independent."""
    return exact.rank([lift(rational_point(p)) for p in points])


def affine_dependence(points: Sequence) -> list:
    """Coefficients of the lifted linear dependence of a minimally dependent point set.

    Scaled to coprime integers (as Fractions) with the first coefficient positive.
    """
    pts = [rational_point(p) for p in points]
    k = len(pts)
    if k == 0 or lifted_rank(pts) != k - 1:
        raise NotACircuit("point set is not minimally dependent")
    for i in range(k):
        if lifted_rank(pts[:i] + pts[i + 1:]) != k - 1:
            raise NotACircuit("a proper subset is already dependent")
    (vec,) = exact.nullspace([lift(p) for p in pts])
    scale = 1
    for x in vec:
        scale = scale * x.denominator // _gcd(scale, x.denominator)
    ints = [int(x * scale) for x in vec]
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    sign = 1 if ints[0] > 0 else -1
    return [Fraction(sign * x // g) for x in ints]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def affine_signed_circuit(points: Sequence, ids=None, anchor=None) -> SignedCircuit:
    """Signed circuit of a minimally dependent point set.

    `ids` labels the points (default 0..k-1).  Orientation: the anchor
    negative when it is among `ids`, the lexicographic canonical form
    otherwise.
    """
    coeffs = affine_dependence(points)
    ids = list(range(len(coeffs))) if ids is None else list(ids)
    c = SignedCircuit(
        frozenset(i for i, x in zip(ids, coeffs) if x > 0),
        frozenset(i for i, x in zip(ids, coeffs) if x < 0),
    )
    if anchor is not None and anchor in c.support:
        return c.oriented(anchor, -1)
    return c.canonical()


def barycentric(config: PointConfiguration, simplex: Sequence[int], target: int | None = None):
    """Coefficients expressing the target point's lift in the simplex's lifted points."""
    if target is None:
        target = config.anchor_index
    return exact.solve(config.lifted(simplex), lift(config.points[target]))


class AffineOracle(OrientedMatroidOracle):
    def __init__(self, config: PointConfiguration):
        self.config = config
        self.ground_size = len(config.points)
        self.rank = lifted_rank(config.points)
        self._basis_memo = {}
        self._circuit_memo = {}

    def is_basis(self, basis) -> bool:
        key = tuple(basis)
        hit = self._basis_memo.get(key)
        if hit is None:
            hit = (
                len(set(key)) == len(key) == self.rank
                and all(0 <= i < self.ground_size for i in key)
                and lifted_rank([self.config.points[i] for i in key]) == self.rank
            )
            self._basis_memo[key] = hit
        return hit

    def anchored_fundamental_circuit(self, basis, anchor) -> SignedCircuit:
        e = self.anchor_element(anchor)
        key = (tuple(basis), e)
        hit = self._circuit_memo.get(key)
        if hit is not None:
            return hit
        if e in basis:
            raise AnchorInBasis(f"anchor {e} belongs to basis {tuple(basis)}")
        if not self.is_basis(basis):
            raise DegenerateSimplex(f"{tuple(basis)} is not a basis")
        lam = barycentric(self.config, basis, e)
        if lam is None:  # pragma: no cover - a basis spans every point
            raise AnchorNotSpanned(f"{e} not spanned by {tuple(basis)}")
        # lift(e) - sum lam_b lift(b) = 0, so e is negative and b carries sign(lam_b)
        hit = SignedCircuit(
            frozenset(b for b, x in zip(basis, lam) if x > 0),
            frozenset([e]) | frozenset(b for b, x in zip(basis, lam) if x < 0),
        )
        self._circuit_memo[key] = hit
        return hit


def is_zero_embracing(config: PointConfiguration, simplex: Sequence[int]) -> bool:
    """Strict containment of the anchor in the simplex, by barycentric signs.

    An anchor on the boundary (no negative coefficient, some zero) raises
    AnchorOnFace instead of returning False.
    """
    simplex = tuple(simplex)
    if config.anchor_index in simplex:
        raise AnchorInBasis("anchor belongs to the simplex")
    pts = [config.points[i] for i in simplex]
    full = lifted_rank(config.points)
    if len(set(simplex)) != len(simplex) or len(simplex) != full or lifted_rank(pts) != full:
        raise DegenerateSimplex(f"{simplex} is not a basis")
    lam = barycentric(config, simplex)
    if any(x < 0 for x in lam):
        return False
    if any(x == 0 for x in lam):
        raise AnchorOnFace(f"anchor lies on a face of {simplex}")
    return True


@dataclass
class PositionReport:
    dependent: list
    anchor_on_hyperplane: list

    @property
    def ok(self) -> bool:
        return not self.dependent and not self.anchor_on_hyperplane


def check_general_position(config: PointConfiguration) -> PositionReport:
    """All affinely dependent (d+1)-subsets, split by whether they contain the anchor.

    Subsets with the anchor mean the anchor lies on the hyperplane spanned by
    the other d points; those are reported without the anchor.
    """
    dependent, on_plane = [], []
    a = config.anchor_index
    for combo in itertools.combinations(range(len(config.points)), config.d + 1):
        if lifted_rank([config.points[i] for i in combo]) == config.d + 1:
            continue
        if a in combo:
            on_plane.append(tuple(i for i in combo if i != a))
        else:
            dependent.append(combo)
    return PositionReport(dependent, on_plane)


def embracing_simplices(config: PointConfiguration) -> list:
    """Every basis avoiding the anchor that strictly contains it."""
    oracle = AffineOracle(config)
    return [S for S in oracle.bases(config.anchor_index) if is_zero_embracing(config, S)]


# Rational points on the unit circle via t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)),
# listed clockwise u, x, y, v, w, z.
_EXAMPLE2_PARAMS = {
    "u": Fraction(0),
    "x": Fraction(-1, 4),
    "y": Fraction(-1, 2),
    "v": Fraction(-3, 2),
    "w": Fraction(6),
    "z": Fraction(11, 4),
}


def circle_point(t: Fraction) -> tuple:
    t = Fraction(t)
    den = 1 + t * t
    return ((1 - t * t) / den, 2 * t / den)


def build_example2() -> tuple:
    """Six points on the unit circle plus the origin; returns (config, A, B).

    Element ids: u, x, y, v, w, z = 0..5, origin = 6.  A = {u, v, w} and
    B = {x, y, z}.  The constructor asserts clockwise order, that both
    triangles contain the origin, that the antipode of w falls strictly
    between u and x, and general position.
    """
    names = ("u", "x", "y", "v", "w", "z")
    pts = [circle_point(_EXAMPLE2_PARAMS[n]) for n in names]
    config = PointConfiguration.with_origin(pts, labels=names)
    u, x, y, v, w, z = range(6)
    A, B = as_basis((u, v, w)), as_basis((x, y, z))

    # consecutive points turn clockwise around the origin
    for p, q in zip(pts, pts[1:] + pts[:1]):
        assert p[0] * q[1] - p[1] * q[0] < 0
    assert is_zero_embracing(config, A) and is_zero_embracing(config, B)
    # -w lies clockwise after u and before x
    anti = (-pts[w][0], -pts[w][1])
    assert pts[u][0] * anti[1] - pts[u][1] * anti[0] < 0
    assert anti[0] * pts[x][1] - anti[1] * pts[x][0] < 0
    assert check_general_position(config).ok
    return config, A, B
