"""JSON shapes for the command line tool.

Subsets are sorted integer arrays, points are arrays of "p/q" strings,
rationals are canonical "p/q" strings, specs are {"n", "S", "T"} with an
optional explicit "ground".  Structural problems raise ``UsageError``
(usage exit code); semantic problems surface as the usual domain errors
from the constructors.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UsageError
from .matroid import LpdmSpec, SetFamily, TypeALpmSpec
from .polytope import Facet, HRep
from .subsets import SubsetMask
from .triangulate import LatticeSimplex

__all__ = [
    "facet_from_json",
    "family_json",
    "frac_str",
    "hrep_json",
    "parse_frac",
    "parse_int",
    "parse_int_list",
    "parse_point",
    "parse_spec",
    "parse_subset",
    "point_json",
    "simplex_json",
    "spec_json",
    "typea_json",
]


def _require_dict(obj, what: str) -> dict:
    if not isinstance(obj, dict):
        raise UsageError(f"{what} must be a JSON object, got {type(obj).__name__}")
    return obj


def parse_int(obj, key: str) -> int:
    val = _require_dict(obj, "input").get(key)
    if not isinstance(val, int) or isinstance(val, bool):
        raise UsageError(f"field {key!r} must be an integer")
    return val


def parse_int_list(val, key: str) -> list[int]:
    if not isinstance(val, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in val):
        raise UsageError(f"field {key!r} must be an array of integers")
    return list(val)


def parse_subset(obj, key: str = "S", n_key: str = "n") -> SubsetMask:
    obj = _require_dict(obj, "input")
    n = parse_int(obj, n_key)
    if key not in obj:
        raise UsageError(f"missing field {key!r}")
    return SubsetMask(n, frozenset(parse_int_list(obj[key], key)))


def parse_spec(obj) -> LpdmSpec:
    obj = _require_dict(obj, "spec")
    ground = obj.get("ground")
    if ground is not None:
        ground = tuple(parse_int_list(ground, "ground"))
        if "n" in obj and parse_int(obj, "n") != len(ground):
            raise UsageError("field 'n' disagrees with the ground size")
    else:
        ground = tuple(range(1, parse_int(obj, "n") + 1))
    for key in ("S", "T"):
        if key not in obj:
            raise UsageError(f"missing field {key!r}")
    lower = frozenset(parse_int_list(obj["S"], "S"))
    upper = frozenset(parse_int_list(obj["T"], "T"))
    return LpdmSpec(ground, lower, upper)


def spec_json(m: LpdmSpec) -> dict:
    index = {g: i for i, g in enumerate(m.ground, start=1)}
    out = {
        "n": m.n,
        "S": sorted(m.lower, key=lambda x: index[x]),
        "T": sorted(m.upper, key=lambda x: index[x]),
    }
    if not m.standard_ground():
        out["ground"] = list(m.ground)
    return out


def family_json(fam: SetFamily) -> dict:
    return {"ground": list(fam.ground), "members": fam.sorted_member_lists()}


def typea_json(spec: TypeALpmSpec) -> dict:
    return {
        "ground": list(spec.ground),
        "k": spec.k,
        "S": list(spec.lower),
        "T": list(spec.upper),
    }


def hrep_json(h: HRep) -> dict:
    return {"n": h.n, "a": list(h.lower), "b": list(h.upper)}


def frac_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_frac(val) -> Fraction:
    if isinstance(val, bool):
        raise UsageError(f"not a rational: {val!r}")
    if isinstance(val, int):
        return Fraction(val)
    if isinstance(val, str):
        try:
            return Fraction(val)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"not a rational: {val!r}") from exc
    raise UsageError(f"not a rational: {val!r}")


def point_json(point) -> list[str]:
    return [frac_str(c) for c in point]


def parse_point(val, key: str = "x") -> tuple[Fraction, ...]:
    if not isinstance(val, list):
        raise UsageError(f"field {key!r} must be an array of rationals")
    return tuple(parse_frac(c) for c in val)


def simplex_json(simp: LatticeSimplex) -> dict:
    out = {"vertices": [list(v) for v in simp.vertices]}
    if simp.perm is not None:
        out["perm"] = list(simp.perm.images)
    return out


def facet_from_json(obj) -> Facet:
    obj = _require_dict(obj, "facet")
    kind = obj.get("kind")
    if kind not in ("coordinate", "suffix"):
        raise UsageError("facet 'kind' must be 'coordinate' or 'suffix'")
    index = parse_int(obj, "i")
    if kind == "coordinate":
        level = obj.get("value")
        if level not in (0, 1) or isinstance(level, bool):
            raise UsageError("coordinate facet needs 'value' 0 or 1")
    else:
        level = obj.get("side")
        if level not in ("lower", "upper"):
            raise UsageError("suffix facet needs 'side' 'lower' or 'upper'")
    return Facet(kind, index, level)
