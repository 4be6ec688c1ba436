"""The subalgebra of free polynomials fixed by the letter swap.

A nonempty word w contributes the invariant w + gamma(w); these sums, one
per letter-swap class, form a linear basis of the positive-degree invariant
subspace. The product of two basis elements always expands as a sum of
exactly two of them, which is the combinatorial engine behind the
degree-by-degree generation test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .words import EmptyWordError, FreePoly, StarClass, Word, parse_word, star_class

__all__ = [
    "StarVector",
    "star_element",
    "graded_component",
    "star_product",
    "is_invariant",
    "express_in_star_basis",
    "NotInvariantError",
]


class NotInvariantError(ValueError):
    """The polynomial is not fixed by the letter swap."""


def star_element(w: Word) -> FreePoly:
    """The invariant w + gamma(w) attached to a nonempty word."""
    if w.length == 0:
        raise EmptyWordError("the empty word has no star element")
    return FreePoly({w: 1, w.gamma(): 1})


def graded_component(d: int) -> list[StarClass]:
    """All 2**(d-1) letter-swap classes of degree d, representatives in lex order."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    # canonical representatives are exactly the words starting with a,
    # whose packings fill 0 .. 2**(d-1)-1 in lex order
    return [StarClass(Word(bits, d)) for bits in range(1 << (d - 1))]


def star_product(c1: StarClass, c2: StarClass) -> tuple[StarClass, StarClass]:
    """The two classes whose star elements sum to the product of the inputs'.

    With representatives w1, w2 the product (w1 + gamma(w1))(w2 + gamma(w2))
    regroups as the star element of w1·w2 plus that of w1·gamma(w2). The two
    classes are always distinct.
    """
    w1, w2 = c1.rep, c2.rep
    return (star_class(w1 + w2), star_class(w1 + w2.gamma()))


def is_invariant(p: FreePoly) -> bool:
    return p.gamma() == p


@dataclass(frozen=True)
class StarVector:
    """Coordinates of a homogeneous invariant in the star basis of one degree."""

    degree: int
    coeffs: Mapping[StarClass, Fraction]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        clean = {}
        for c, v in self.coeffs.items():
            if c.degree != self.degree:
                raise ValueError(f"class {c!r} has degree {c.degree}, vector has {self.degree}")
            v = Fraction(v)
            if v:
                clean[c] = v
        object.__setattr__(self, "coeffs", clean)

    def expand(self) -> FreePoly:
        acc = FreePoly.zero()
        for c, v in self.coeffs.items():
            acc = acc + v * star_element(c.rep)
        return acc

    def __getitem__(self, c: StarClass) -> Fraction:
        return self.coeffs.get(c, Fraction(0))

    def to_json_dict(self) -> dict[str, object]:
        out: dict[str, object] = {str(c.rep): str(v) for c, v in sorted(self.coeffs.items())}
        out["degree"] = self.degree
        return out

    @classmethod
    def from_json_dict(cls, data: Mapping[str, object]) -> "StarVector":
        degree = int(data["degree"])  # type: ignore[arg-type]
        coeffs = {
            StarClass(parse_word(k)): Fraction(str(v))
            for k, v in data.items()
            if k != "degree"
        }
        return cls(degree, coeffs)


def express_in_star_basis(p: FreePoly) -> list[StarVector]:
    """Star-basis coordinates of an invariant, one vector per positive degree.

    The expansion of the returned vectors reproduces p exactly, which is why
    a nonzero constant term is rejected: degree zero has no star classes, its
    invariants are the scalars.
    """
    if not is_invariant(p):
        raise NotInvariantError(f"not fixed by the letter swap: {p}")
    out: list[StarVector] = []
    for d, part in p.homogeneous_components().items():
        if d == 0:
            raise ValueError(
                "nonzero constant term: degree-0 invariants are scalars and have no "
                "star-basis expansion"
            )
        coeffs: dict[StarClass, Fraction] = {}
        for w, c in part.items():
            if (w.bits >> (w.length - 1)) & 1:
                continue  # the swap partner carries the same coefficient
            coeffs[StarClass(w)] = c
        out.append(StarVector(d, coeffs))
    return out
