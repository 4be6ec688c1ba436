"""Classes of the letter-swap equivariantization and the forgetful map.

At the decategorified level the swap action leaves two kinds of simple
classes: a free orbit over each pair {w, gamma(w)} of swapped nonempty
words, and a sign pair of fixed points sitting over the empty word. The
forgetful map sends a free orbit to the sum of its two words and either
fixed point to the trivial class, so its image is exactly the swap-fixed
part of the nonnegative combinations: constants plus sums of star elements.
check_surjectivity_onto_invariants verifies that identification degree by
degree.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fusion import FusionElement
from .invariants import graded_component
from .words import EMPTY_WORD, StarClass, Word, star_class

__all__ = [
    "EquivariantClass",
    "forget",
    "induce",
    "classes_up_to",
    "check_surjectivity_onto_invariants",
    "FREE_ORBIT",
    "FIXED_POINT",
]

FREE_ORBIT = "free_orbit"
FIXED_POINT = "fixed_point"


@dataclass(frozen=True, slots=True)
class EquivariantClass:
    """A simple class of the equivariantized category, at the label level.

    kind is "free_orbit" (orbit holds the letter-swap class, sign is None)
    or "fixed_point" (orbit is None, sign is +1 or -1; the underlying word
    is the empty one).
    """

    kind: str
    orbit: StarClass | None = None
    sign: int | None = None

    def __post_init__(self) -> None:
        if self.kind == FREE_ORBIT:
            if self.orbit is None or self.sign is not None:
                raise ValueError("a free orbit carries a class and no sign")
        elif self.kind == FIXED_POINT:
            if self.orbit is not None or self.sign not in (1, -1):
                raise ValueError("a fixed point carries a sign of +-1 and no class")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    @classmethod
    def free(cls, orbit: StarClass) -> "EquivariantClass":
        return cls(FREE_ORBIT, orbit=orbit)

    @classmethod
    def fixed(cls, sign: int) -> "EquivariantClass":
        return cls(FIXED_POINT, sign=sign)

    @property
    def degree(self) -> int:
        return self.orbit.degree if self.orbit is not None else 0

    def __str__(self) -> str:
        if self.kind == FREE_ORBIT:
            return f"free_orbit({self.orbit})"
        return f"fixed_point({'+' if self.sign > 0 else '-'})"

    def to_json_dict(self) -> dict[str, object]:
        if self.kind == FREE_ORBIT:
            return {"kind": FREE_ORBIT, "rep": str(self.orbit)}
        return {"kind": FIXED_POINT, "rep": "e", "sign": self.sign}


def forget(e: EquivariantClass) -> FusionElement:
    """Underlying combination of word labels: the orbit sum, or the trivial class."""
    if e.kind == FREE_ORBIT:
        w = e.orbit.rep
        return FusionElement({w: 1, w.gamma(): 1})
    return FusionElement({EMPTY_WORD: 1})


def induce(w: Word) -> tuple[EquivariantClass, ...]:
    """The classes sitting over a word: one free orbit, or the two fixed points."""
    if w.length == 0:
        return (EquivariantClass.fixed(1), EquivariantClass.fixed(-1))
    return (EquivariantClass.free(star_class(w)),)


def classes_up_to(degree: int) -> list[EquivariantClass]:
    """Every equivariant class of degree <= the bound, fixed points first."""
    if degree < 0:
        raise ValueError("negative degree")
    out = [EquivariantClass.fixed(1), EquivariantClass.fixed(-1)]
    for d in range(1, degree + 1):
        out.extend(EquivariantClass.free(c) for c in graded_component(d))
    return out


def check_surjectivity_onto_invariants(degree: int) -> bool:
    """Does the forgetful image cover every swap-invariant basis element up to degree?

    The invariant part of the nonnegative combinations is spanned by the
    trivial class together with one orbit sum w + gamma(w) per letter-swap
    class, so it suffices to hit each of those on the nose.
    """
    if degree < 0:
        raise ValueError("negative degree")
    image = {forget(e) for e in classes_up_to(degree)}
    if FusionElement({EMPTY_WORD: 1}) not in image:
        return False
    for d in range(1, degree + 1):
        for c in graded_component(d):
            target = FusionElement({c.rep: 1, c.rep.gamma(): 1})
            if target not in image:
                return False
    return True
