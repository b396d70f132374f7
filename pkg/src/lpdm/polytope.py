"""The feasible-set polytope: suffix-sum bounds cut out of the cube.

For an interval spec with bounds S and T, the polytope is

    P = { x in [0, 1]^n : profile(S)_i <= x_i + ... + x_n <= profile(T)_i }.

Its vertices are exactly the indicator vectors of the feasible sets,
its dimension drops by one for every index where the two profiles
agree, and intersecting two such polytopes over the same ground gives
another one (or nothing).  Everything here is exact: coordinates are
``fractions.Fraction`` or int, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError
from .matroid import LpdmSpec, SetFamily, contract, delete
from .subsets import (
    SubsetMask,
    interval,
    is_valid_profile,
    mask_from_profile,
    profile,
)

__all__ = [
    "Facet",
    "FaceResult",
    "HRep",
    "contains",
    "dimension",
    "face",
    "hrep",
    "intersect",
    "is_linked",
    "vertex_set",
]


@dataclass(frozen=True)
class HRep:
    """Half-space description: per-index lower/upper suffix-sum bounds."""

    n: int
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self) -> None:
        lower = tuple(self.lower)
        upper = tuple(self.upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if len(lower) != self.n or len(upper) != self.n:
            raise ArgumentError("bounds must have one entry per coordinate")
        if not (is_valid_profile(lower) and is_valid_profile(upper)):
            raise ArgumentError("bounds must be suffix-count profiles")
        if any(a > b for a, b in zip(lower, upper)):
            raise ArgumentError("lower bounds exceed upper bounds")


def hrep(m: LpdmSpec) -> HRep:
    return HRep(m.n, profile(m.lower_mask()), profile(m.upper_mask()))


def _as_fractions(point, n: int) -> tuple[Fraction, ...]:
    pt = tuple(point)
    if len(pt) != n:
        raise ArgumentError(f"point has {len(pt)} coordinates, expected {n}")
    return tuple(Fraction(v) for v in pt)


def contains(h: HRep, point) -> bool:
    """Exact membership test against the half-space description."""
    xs = _as_fractions(point, h.n)
    if any(x < 0 or x > 1 for x in xs):
        return False
    s = Fraction(0)
    for i in range(h.n, 0, -1):
        s += xs[i - 1]
        if not h.lower[i - 1] <= s <= h.upper[i - 1]:
            return False
    return True


def dimension(m: LpdmSpec) -> int:
    """n minus the number of indices where the two profiles agree."""
    a = profile(m.lower_mask())
    b = profile(m.upper_mask())
    return m.n - sum(1 for x, y in zip(a, b) if x == y)


def is_linked(m: LpdmSpec) -> bool:
    """Full-dimensional: the profiles differ at every index."""
    a = profile(m.lower_mask())
    b = profile(m.upper_mask())
    return all(x < y for x, y in zip(a, b))


def intersect(m1: LpdmSpec, m2: LpdmSpec):
    """The spec whose polytope is the intersection, or None when empty.

    Componentwise max of the lower profiles against componentwise min
    of the upper profiles; both stay valid profiles.
    """
    if m1.ground != m2.ground:
        raise ArgumentError("intersection needs a common ground")
    a1, b1 = profile(m1.lower_mask()), profile(m1.upper_mask())
    a2, b2 = profile(m2.lower_mask()), profile(m2.upper_mask())
    c = tuple(max(x, y) for x, y in zip(a1, a2))
    d = tuple(min(x, y) for x, y in zip(b1, b2))
    if any(x > y for x, y in zip(c, d)):
        return None
    return LpdmSpec(
        m1.ground,
        m1.labels(mask_from_profile(c)),
        m1.labels(mask_from_profile(d)),
    )


def vertex_set(m: LpdmSpec) -> list[tuple[int, ...]]:
    """Indicator vectors of the feasible sets, in canonical order."""
    out = []
    for s in interval(m.lower_mask(), m.upper_mask()):
        out.append(tuple(1 if i in s.members else 0 for i in range(1, m.n + 1)))
    return out


@dataclass(frozen=True)
class Facet:
    """A defining inequality of the polytope, pinned to equality.

    kind "coordinate": x_index = level (level 0 or 1).
    kind "suffix":     x_index + ... + x_n = the lower or upper profile
    bound at ``index`` (level "lower" or "upper").
    """

    kind: str
    index: int
    level: object

    def __post_init__(self) -> None:
        if self.kind not in ("coordinate", "suffix"):
            raise ArgumentError(f"unknown facet kind {self.kind!r}")
        if not isinstance(self.index, int) or self.index < 1:
            raise ArgumentError(f"facet index must be a positive integer, got {self.index!r}")
        if self.kind == "coordinate" and self.level not in (0, 1):
            raise ArgumentError(f"coordinate facet level must be 0 or 1, got {self.level!r}")
        if self.kind == "suffix" and self.level not in ("lower", "upper"):
            raise ArgumentError(f"suffix facet level must be 'lower' or 'upper', got {self.level!r}")


@dataclass(frozen=True)
class FaceResult:
    """A face of the polytope, with a direct-sum certificate.

    ``family`` collects the feasible sets whose vertices lie on the
    face.  When the face is nonempty, ``factors`` names specs on two
    complementary sub-grounds whose feasible families multiply out to
    exactly ``family`` (unions of one member from each); for an empty
    face it is None.
    """

    family: SetFamily
    factors: tuple[LpdmSpec, ...] | None
    kind: str


def _sub_spec(parent: LpdmSpec, positions: list[int], members: list[frozenset[int]]) -> LpdmSpec:
    """Build the interval spec for a family of position-sets living on a
    contiguous block of the parent ground; verifies it is an interval."""
    ground = tuple(parent.ground[p - 1] for p in positions)
    k = len(positions)
    remap = {p: i for i, p in enumerate(positions, start=1)}
    masks = [SubsetMask(k, frozenset(remap[x] for x in mem)) for mem in members]
    profs = [profile(s) for s in masks]
    lo = tuple(min(pr[j] for pr in profs) for j in range(k))
    hi = tuple(max(pr[j] for pr in profs) for j in range(k))
    lo_mask, hi_mask = mask_from_profile(lo), mask_from_profile(hi)
    if set(s.members for s in interval(lo_mask, hi_mask)) != set(s.members for s in masks):
        raise AssertionError("face factor is not a Gale interval")

    def to_labels(s: SubsetMask) -> frozenset[int]:
        return frozenset(ground[p - 1] for p in s.members)

    return LpdmSpec(ground, to_labels(lo_mask), to_labels(hi_mask))


def face(m: LpdmSpec, facet: Facet) -> FaceResult:
    """Feasible sets on a facet of the polytope, with its splitting.

    A coordinate facet x_i = 1 (resp. 0) splits off the singleton
    interval on {i} against the contraction (resp. deletion) by i; a
    suffix facet at index i splits the ground into the positions below
    i and the positions from i up.
    """
    if not 1 <= facet.index <= m.n:
        raise ArgumentError(f"facet index {facet.index} outside [1, {m.n}]")
    n = m.n
    i = facet.index
    a = profile(m.lower_mask())
    b = profile(m.upper_mask())
    masks = interval(m.lower_mask(), m.upper_mask())

    if facet.kind == "coordinate":
        keep = [s for s in masks if (i in s.members) == bool(facet.level)]
        kind = f"coordinate-{facet.level}"
    else:
        target = a[i - 1] if facet.level == "lower" else b[i - 1]
        keep = [s for s in masks if sum(1 for x in s.members if x >= i) == target]
        kind = f"suffix-{facet.level}"

    family = SetFamily(m.ground, tuple(m.labels(s) for s in keep))
    if not keep:
        return FaceResult(family, None, kind)

    label = m.ground[i - 1]
    if facet.kind == "coordinate":
        if facet.level == 1:
            one = LpdmSpec((label,), frozenset({label}), frozenset({label}))
            factors = (one, contract(m, label))
        else:
            zero = LpdmSpec((label,), frozenset(), frozenset())
            factors = (zero, delete(m, label))
    else:
        low_pos = list(range(1, i))
        high_pos = list(range(i, n + 1))
        low_members = [frozenset(x for x in s.members if x < i) for s in keep]
        high_members = [frozenset(x for x in s.members if x >= i) for s in keep]
        factors = (
            _sub_spec(m, low_pos, low_members),
            _sub_spec(m, high_pos, high_members),
        )
    return FaceResult(family, factors, kind)
