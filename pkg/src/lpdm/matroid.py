"""Gale-interval delta matroids and their standard operations.

An ``LpdmSpec`` names the delta matroid whose feasible sets are the
Gale interval [S, T] over an ordered ground set.  The ground carries
explicit labels (default 1..n) so that minors keep their element names:
deleting 5 from a matroid on [5] leaves a matroid on {1, 2, 3, 4}.  All
order computations happen positionally (labels are ranked by their
position in the ground tuple); labels are only translated at the
boundary.

The operations implemented here:

* ``feasible_sets``        -- enumerate the interval.
* ``verify_exchange``      -- the symmetric exchange axiom, with witness.
* ``classify_elements``    -- loops and coloops.
* ``dual``, ``delete``, ``contract``, ``direct_sum`` -- minors and sums,
  all returning interval specs again (closed-form bound updates).
* ``homogeneous_component`` -- the fixed-size layer, an ordinary lattice
  path matroid given by elementwise bounds on sorted tuples.
* ``envelope_bases`` / ``envelope_project`` -- the matroid on the signed
  ground {-n, ..., -1, 1, ..., n} whose bases project onto the feasible
  vertices, plus the halving projection itself.
* ``project_element``      -- drop an element from every feasible set
  (the result need not be an interval; see ``family_interval_bounds``).
* ``catalan_spec``         -- the interval of symmetric paths weakly
  below the staircase that starts with an E step; its feasible count is
  the central binomial coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArgumentError, DomainError, OrderError
from .subsets import (
    SubsetMask,
    gale_leq,
    interval,
    mask_from_profile,
    profile,
    sort_key,
)

__all__ = [
    "LpdmSpec",
    "SetFamily",
    "TypeALpmSpec",
    "catalan_spec",
    "classify_elements",
    "contract",
    "delete",
    "direct_sum",
    "dual",
    "envelope_bases",
    "envelope_ground",
    "envelope_project",
    "exchange_witness",
    "family_interval_bounds",
    "feasible_sets",
    "homogeneous_component",
    "project_element",
    "relabel",
    "signed_label_set",
    "verify_exchange",
]


def _check_ground(ground: tuple[int, ...]) -> None:
    if any(not isinstance(g, int) for g in ground):
        raise ArgumentError(f"ground labels must be integers: {ground!r}")
    if len(set(ground)) != len(ground):
        raise ArgumentError(f"ground labels must be distinct: {ground!r}")


@dataclass(frozen=True)
class LpdmSpec:
    """The delta matroid with feasible sets the Gale interval [lower, upper]."""

    ground: tuple[int, ...]
    lower: frozenset[int]
    upper: frozenset[int]

    def __post_init__(self) -> None:
        ground = tuple(self.ground)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "lower", frozenset(self.lower))
        object.__setattr__(self, "upper", frozenset(self.upper))
        _check_ground(ground)
        for side in (self.lower, self.upper):
            if not side <= set(ground):
                raise ArgumentError(f"bound {sorted(side)!r} is not within the ground {ground!r}")
        if not gale_leq(self.lower_mask(), self.upper_mask()):
            raise OrderError(
                f"lower bound {sorted(self.lower)!r} is not below {sorted(self.upper)!r}"
            )

    @classmethod
    def of(cls, n: int, lower=(), upper=()) -> "LpdmSpec":
        return cls(tuple(range(1, n + 1)), frozenset(lower), frozenset(upper))

    @property
    def n(self) -> int:
        return len(self.ground)

    def position(self, label: int) -> int:
        try:
            return self.ground.index(label) + 1
        except ValueError:
            raise ArgumentError(f"label {label!r} is not in the ground {self.ground!r}") from None

    def _positions(self, labels: frozenset[int]) -> frozenset[int]:
        index = {g: i for i, g in enumerate(self.ground, start=1)}
        return frozenset(index[x] for x in labels)

    def labels(self, positions) -> frozenset[int]:
        members = positions.members if isinstance(positions, SubsetMask) else positions
        return frozenset(self.ground[p - 1] for p in members)

    def lower_mask(self) -> SubsetMask:
        return SubsetMask(self.n, self._positions(self.lower))

    def upper_mask(self) -> SubsetMask:
        return SubsetMask(self.n, self._positions(self.upper))

    def standard_ground(self) -> bool:
        return self.ground == tuple(range(1, self.n + 1))


@dataclass(frozen=True)
class SetFamily:
    """A finite family of subsets of a labelled ground, kept in the
    canonical order (by size, then by ground position)."""

    ground: tuple[int, ...]
    members: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        ground = tuple(self.ground)
        object.__setattr__(self, "ground", ground)
        _check_ground(ground)
        index = {g: i for i, g in enumerate(ground, start=1)}
        seen = set()
        normal = []
        for m in self.members:
            fs = frozenset(m)
            if not fs <= set(ground):
                raise ArgumentError(f"member {sorted(fs)!r} is not within the ground {ground!r}")
            if fs not in seen:
                seen.add(fs)
                normal.append(fs)
        normal.sort(key=lambda fs: (len(fs), tuple(sorted(index[x] for x in fs))))
        object.__setattr__(self, "members", tuple(normal))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, fs) -> bool:
        return frozenset(fs) in set(self.members)

    def sorted_member_lists(self) -> list[list[int]]:
        index = {g: i for i, g in enumerate(self.ground, start=1)}
        return [sorted(m, key=lambda x: index[x]) for m in self.members]


def feasible_sets(m: LpdmSpec) -> SetFamily:
    """Enumerate the Gale interval [lower, upper] as label sets."""
    masks = interval(m.lower_mask(), m.upper_mask())
    return SetFamily(m.ground, tuple(m.labels(s) for s in masks))


def exchange_witness(family: SetFamily):
    """None if the symmetric exchange axiom holds, else a witness
    (A1, A2, e) with e in the symmetric difference such that no f in the
    symmetric difference (f = e allowed) makes A1 xor {e, f} feasible."""
    if not family.members:
        raise DomainError("the empty family has no feasible sets to exchange")
    members = set(family.members)
    for a1 in family.members:
        for a2 in family.members:
            diff = a1 ^ a2
            for e in diff:
                if not any(a1 ^ {e, f} in members for f in diff):
                    return (a1, a2, e)
    return None


def verify_exchange(family: SetFamily) -> bool:
    """Does the family satisfy the symmetric exchange axiom?"""
    return exchange_witness(family) is None


def _suffix_equal_after(s: frozenset[int], t: frozenset[int], p: int, n: int) -> bool:
    # |S inter {p+1..n}| == |T inter {p+1..n}|
    return sum(1 for x in s if x > p) == sum(1 for x in t if x > p)


def classify_elements(m: LpdmSpec) -> tuple[frozenset[int], frozenset[int]]:
    """(loops, coloops) as label sets.

    A coloop is in every feasible set: it must sit in both bounds and
    the two bounds must agree strictly above it, so that no feasible set
    can trade it away.  Loops (in no feasible set) are the coloops of
    the dual.
    """
    n = m.n
    s = m.lower_mask().members
    t = m.upper_mask().members
    coloops = set()
    for p in range(1, n + 1):
        if p in s and p in t and _suffix_equal_after(s, t, p, n):
            coloops.add(p)
    loops = set()
    for p in range(1, n + 1):
        if p not in s and p not in t and _suffix_equal_after(s, t, p, n):
            loops.add(p)
    return (m.labels(frozenset(loops)), m.labels(frozenset(coloops)))


def dual(m: LpdmSpec) -> LpdmSpec:
    """Complement every feasible set: the interval [G - T, G - S]."""
    g = frozenset(m.ground)
    return LpdmSpec(m.ground, g - m.upper, g - m.lower)


def delete(m: LpdmSpec, label: int) -> LpdmSpec:
    """Feasible sets avoiding ``label``, on the ground without it.

    Closed form on positions: if the deleted position p lies in the
    lower bound, replace it by the smallest free position above it (it
    exists unless p is a coloop); if p lies in the upper bound, replace
    it by the largest free position below it, or drop it when no such
    position exists.
    """
    p = m.position(label)
    n = m.n
    s = set(m.lower_mask().members)
    t = set(m.upper_mask().members)
    if p in s and p in t and _suffix_equal_after(frozenset(s), frozenset(t), p, n):
        raise DomainError(f"element {label!r} is a coloop and cannot be deleted")
    if p in s:
        q = min(x for x in range(p + 1, n + 1) if x not in s)
        s.discard(p)
        s.add(q)
    if p in t:
        t.discard(p)
        below = [x for x in range(1, p) if x not in t]
        if below:
            t.add(max(below))
    new_ground = tuple(g for g in m.ground if g != label)
    return LpdmSpec(new_ground, m.labels(frozenset(s)), m.labels(frozenset(t)))


def contract(m: LpdmSpec, label: int) -> LpdmSpec:
    """Feasible sets through ``label`` with the element removed, on the
    ground without it.  Dual to deletion: if the contracted position p
    is missing from the lower bound, drop the largest bound element
    below it (if any); if missing from the upper bound, drop the
    smallest bound element above it (it exists unless p is a loop).
    """
    p = m.position(label)
    n = m.n
    s = set(m.lower_mask().members)
    t = set(m.upper_mask().members)
    if p not in s and p not in t and _suffix_equal_after(frozenset(s), frozenset(t), p, n):
        raise DomainError(f"element {label!r} is a loop and cannot be contracted")
    if p in s:
        s.discard(p)
    else:
        below = [x for x in s if x < p]
        if below:
            s.discard(max(below))
    if p in t:
        t.discard(p)
    else:
        t.discard(min(x for x in t if x > p))
    new_ground = tuple(g for g in m.ground if g != label)
    return LpdmSpec(new_ground, m.labels(frozenset(s)), m.labels(frozenset(t)))


def direct_sum(m1: LpdmSpec, m2: LpdmSpec) -> LpdmSpec:
    """Concatenate grounds (all of m1 ordered before all of m2) and take
    unions of bounds; feasible sets are exactly the unions F1 u F2."""
    if set(m1.ground) & set(m2.ground):
        raise ArgumentError(
            f"grounds overlap: {sorted(set(m1.ground) & set(m2.ground))!r}"
        )
    return LpdmSpec(m1.ground + m2.ground, m1.lower | m2.lower, m1.upper | m2.upper)


def relabel(m: LpdmSpec, new_ground) -> LpdmSpec:
    """Rename labels positionally (the i-th label becomes new_ground[i-1])."""
    new_ground = tuple(new_ground)
    if len(new_ground) != m.n:
        raise ArgumentError(f"new ground has {len(new_ground)} labels, expected {m.n}")
    _check_ground(new_ground)
    mapping = dict(zip(m.ground, new_ground))
    return LpdmSpec(
        new_ground,
        frozenset(mapping[x] for x in m.lower),
        frozenset(mapping[x] for x in m.upper),
    )


def _type_a_interval(lo: tuple[int, ...], hi: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Sorted position tuples a with lo <= a <= hi elementwise."""
    k = len(lo)
    out: list[tuple[int, ...]] = []
    acc: list[int] = []

    def grow(j: int, prev: int) -> None:
        if j == k:
            out.append(tuple(acc))
            return
        for a in range(max(lo[j], prev + 1), hi[j] + 1):
            acc.append(a)
            grow(j + 1, a)
            acc.pop()

    grow(0, 0)
    return out


@dataclass(frozen=True)
class TypeALpmSpec:
    """A lattice path matroid: bases are the k-subsets lying elementwise
    between two sorted bounds.  Labels follow the parent ground."""

    ground: tuple[int, ...]
    k: int
    lower: tuple[int, ...]
    upper: tuple[int, ...]

    def __post_init__(self) -> None:
        ground = tuple(self.ground)
        lower = tuple(self.lower)
        upper = tuple(self.upper)
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        _check_ground(ground)
        if len(lower) != self.k or len(upper) != self.k:
            raise ArgumentError("bounds must have exactly k elements")
        index = {g: i for i, g in enumerate(ground, start=1)}
        lo = [index[x] for x in lower]
        hi = [index[x] for x in upper]
        if lo != sorted(lo) or hi != sorted(hi):
            raise ArgumentError("bounds must be sorted along the ground")
        if any(a > b for a, b in zip(lo, hi)):
            raise ArgumentError("lower bound exceeds upper bound elementwise")

    def bases(self) -> SetFamily:
        index = {g: i for i, g in enumerate(self.ground, start=1)}
        lo = tuple(index[x] for x in self.lower)
        hi = tuple(index[x] for x in self.upper)
        members = tuple(
            frozenset(self.ground[p - 1] for p in tup) for tup in _type_a_interval(lo, hi)
        )
        return SetFamily(self.ground, members)


def homogeneous_component(m: LpdmSpec, k: int):
    """The layer of feasible sets of size k, or None when empty.

    The layer of a Gale interval is always an ordinary lattice path
    matroid: the elementwise interval between its smallest and largest
    members.
    """
    if not 0 <= k <= m.n:
        raise ArgumentError(f"size {k} outside [0, {m.n}]")
    masks = [s for s in interval(m.lower_mask(), m.upper_mask()) if len(s.members) == k]
    if not masks:
        return None
    tuples = [s.as_tuple() for s in masks]
    lo = tuple(min(t[j] for t in tuples) for j in range(k))
    hi = tuple(max(t[j] for t in tuples) for j in range(k))
    if set(_type_a_interval(lo, hi)) != set(tuples):
        raise AssertionError("size layer failed to form an elementwise interval")
    return TypeALpmSpec(
        m.ground,
        k,
        tuple(m.ground[p - 1] for p in lo),
        tuple(m.ground[p - 1] for p in hi),
    )


def envelope_ground(n: int) -> tuple[int, ...]:
    """The signed ground -n < ... < -1 < 1 < ... < n."""
    return tuple(range(-n, 0)) + tuple(range(1, n + 1))


def signed_label_set(s: SubsetMask) -> frozenset[int]:
    """S together with -i for every i not in S: the n-subset of the
    signed ground that encodes S."""
    return frozenset(i if i in s.members else -i for i in range(1, s.n + 1))


def _signed_position(x: int, n: int) -> int:
    return x + n + 1 if x < 0 else x + n


def envelope_bases(m: LpdmSpec) -> SetFamily:
    """Bases of the enveloping matroid on the signed ground: the
    n-subsets lying elementwise between the signed encodings of the two
    bounds.  Requires the standard ground 1..n."""
    if not m.standard_ground():
        raise ArgumentError("the enveloping matroid is defined over the standard ground 1..n")
    n = m.n
    lo_set = signed_label_set(m.lower_mask())
    hi_set = signed_label_set(m.upper_mask())
    lo = tuple(sorted(_signed_position(x, n) for x in lo_set))
    hi = tuple(sorted(_signed_position(x, n) for x in hi_set))
    if any(a > b for a, b in zip(lo, hi)):
        raise AssertionError("signed encodings are not nested")
    ground = envelope_ground(n)
    members = tuple(
        frozenset(ground[p - 1] for p in tup) for tup in _type_a_interval(lo, hi)
    )
    return SetFamily(ground, members)


def envelope_project(basis: frozenset[int], n: int) -> tuple[Fraction, ...]:
    """Halving projection from the signed cube to the cube: coordinate i
    of the image of the indicator vector of B is ((x_i - x_{-i}) + 1)/2."""
    basis = frozenset(basis)
    if len(basis) != n:
        raise ArgumentError(f"expected an n-subset of the signed ground, got {sorted(basis)!r}")
    for x in basis:
        if not isinstance(x, int) or x == 0 or abs(x) > n:
            raise ArgumentError(f"label {x!r} outside the signed ground")
    out = []
    for i in range(1, n + 1):
        xi = 1 if i in basis else 0
        xmi = 1 if -i in basis else 0
        out.append(Fraction(xi - xmi + 1, 2))
    return tuple(out)


def project_element(family: SetFamily, label: int) -> SetFamily:
    """Drop ``label`` from every member (and from the ground)."""
    if label not in family.ground:
        raise ArgumentError(f"label {label!r} is not in the ground {family.ground!r}")
    new_ground = tuple(g for g in family.ground if g != label)
    return SetFamily(new_ground, tuple(m - {label} for m in family.members))


def family_interval_bounds(family: SetFamily):
    """(lower, upper, is_interval): the componentwise profile bounds of
    the family and whether the family equals the full Gale interval
    between them.  Families that are not intervals (projections, for
    instance) report False."""
    if not family.members:
        raise DomainError("empty family")
    n = len(family.ground)
    index = {g: i for i, g in enumerate(family.ground, start=1)}
    masks = [SubsetMask(n, frozenset(index[x] for x in m)) for m in family.members]
    profs = [profile(s) for s in masks]
    lo = tuple(min(p[j] for p in profs) for j in range(n))
    hi = tuple(max(p[j] for p in profs) for j in range(n))
    lo_mask = mask_from_profile(lo)
    hi_mask = mask_from_profile(hi)
    full = interval(lo_mask, hi_mask)
    is_interval = len(full) == len(masks) and set(s.members for s in full) == set(
        s.members for s in masks
    )

    def to_labels(s: SubsetMask) -> frozenset[int]:
        return frozenset(family.ground[p - 1] for p in s.members)

    return (to_labels(lo_mask), to_labels(hi_mask), is_interval)


def catalan_spec(n: int) -> LpdmSpec:
    """The interval of symmetric paths weakly below the staircase that
    begins with an E step, on the ground [2n]: lower bound empty, upper
    bound the odd numbers.  Its feasible count is binomial(2n, n)."""
    if n < 1:
        raise ArgumentError("n must be at least 1")
    return LpdmSpec.of(2 * n, frozenset(), frozenset(range(1, 2 * n, 2)))
