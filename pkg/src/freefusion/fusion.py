"""Tensor decomposition of word-labeled irreducibles and their exact dimensions.

The product of the irreducibles labeled x and y splits as follows: strip a
suffix g from x whose dual equals a prefix of y, glue what is left of x to
what is left of y, and sum over all admissible suffix lengths. Each summand
has length len(x) + len(y) - 2*len(g), so the summands are pairwise distinct
and every multiplicity is 1. The empty word (the trivial object) appears
exactly when y is the dual of x.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .words import EMPTY_WORD, Word

__all__ = [
    "FusionElement",
    "fuse",
    "character_product",
    "DimensionTable",
    "haar_pairing",
    "leading_part",
    "ZeroElementError",
]


class ZeroElementError(ValueError):
    """The zero element has no leading part."""


class FusionElement:
    """A finite integer combination of word-labeled irreducibles.

    Immutable. Addition is term-wise; multiplication extends the tensor
    decomposition of single words bilinearly.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, int] | None = None):
        data: dict[Word, int] = {}
        if terms:
            for word, mult in terms.items():
                m = int(mult)
                if m:
                    data[word] = m
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FusionElement is immutable")

    @classmethod
    def zero(cls) -> "FusionElement":
        return cls()

    @classmethod
    def unit(cls) -> "FusionElement":
        return cls({EMPTY_WORD: 1})

    @classmethod
    def of(cls, w: Word, mult: int = 1) -> "FusionElement":
        return cls({w: mult})

    # ---- mapping access ----

    def __getitem__(self, w: Word) -> int:
        return self._terms.get(w, 0)

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> Iterable[tuple[Word, int]]:
        return self._terms.items()

    def words(self) -> Iterable[Word]:
        return self._terms.keys()

    @property
    def semiring_positive(self) -> bool:
        """True when every multiplicity is nonnegative (no virtual part)."""
        return all(m >= 0 for m in self._terms.values())

    # ---- arithmetic ----

    def __add__(self, other: "FusionElement") -> "FusionElement":
        if not isinstance(other, FusionElement):
            return NotImplemented
        acc = dict(self._terms)
        for w, m in other._terms.items():
            acc[w] = acc.get(w, 0) + m
        return FusionElement(acc)

    def __sub__(self, other: "FusionElement") -> "FusionElement":
        if not isinstance(other, FusionElement):
            return NotImplemented
        acc = dict(self._terms)
        for w, m in other._terms.items():
            acc[w] = acc.get(w, 0) - m
        return FusionElement(acc)

    def __neg__(self) -> "FusionElement":
        return FusionElement({w: -m for w, m in self._terms.items()})

    def __mul__(self, other: "FusionElement | int") -> "FusionElement":
        if isinstance(other, FusionElement):
            return character_product(self, other)
        if isinstance(other, int):
            return FusionElement({w: m * other for w, m in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other: int) -> "FusionElement":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FusionElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # ---- structure ----

    def degree(self) -> int:
        if not self._terms:
            raise ZeroElementError("the zero element has no degree")
        return max(w.length for w in self._terms)

    def map_words(self, fn) -> "FusionElement":
        """Push the element through a word-to-word map, merging collisions."""
        acc: dict[Word, int] = {}
        for w, m in self._terms.items():
            v = fn(w)
            acc[v] = acc.get(v, 0) + m
        return FusionElement(acc)

    def pairing(self, other: "FusionElement") -> int:
        """Bilinear extension of the one-or-zero pairing on irreducibles.

        For products of characters this counts common irreducible summands
        with multiplicity.
        """
        if len(self._terms) > len(other._terms):
            self, other = other, self
        return sum(m * other[w] for w, m in self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for w in sorted(self._terms):
            m = self._terms[w]
            bits.append(f"{m}*{w}" if m != 1 else str(w))
        return " + ".join(bits)

    def __repr__(self) -> str:
        inner = ", ".join(f"{w}: {m}" for w, m in sorted(self._terms.items()))
        return f"FusionElement({{{inner}}})"

    def to_json_dict(self) -> dict[str, int]:
        return dict(sorted((str(w), m) for w, m in self._terms.items()))

    @classmethod
    def from_json_dict(cls, data: Mapping[str, int]) -> "FusionElement":
        from .words import parse_word

        return cls({parse_word(k): int(v) for k, v in data.items()})


def fuse(x: Word, y: Word) -> FusionElement:
    """Decompose the product of the irreducibles labeled x and y.

    Sums a·b over all splittings x = a·g, y = dual(g)·b. Since the summand
    for a suffix of length L has length len(x)+len(y)-2L, the result is
    multiplicity-free.
    """
    terms: dict[Word, int] = {}
    for glen in range(min(x.length, y.length) + 1):
        if x.suffix(glen).dual() == y.prefix(glen):
            terms[x.drop_suffix(glen) + y.drop_prefix(glen)] = 1
    return FusionElement(terms)


def character_product(f: FusionElement, g: FusionElement) -> FusionElement:
    """Bilinear extension of fuse to integer combinations."""
    acc: dict[Word, int] = {}
    for w1, m1 in f.items():
        for w2, m2 in g.items():
            m = m1 * m2
            for z, mz in fuse(w1, w2).items():
                acc[z] = acc.get(z, 0) + m * mz
    return FusionElement(acc)


class DimensionTable:
    """Exact dimensions of word-labeled irreducibles at a fixed matrix size n.

    Appending a letter multiplies the dimension by n, with a correction
    subtracting the second-to-last value whenever the appended letter differs
    from the previous one (i.e. the word ends with the swap of the new
    letter). This is the unique dimension function multiplicative over fuse.
    """

    __slots__ = ("n", "_memo")

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"matrix size must be an integer >= 2, got {n!r}")
        self.n = n
        self._memo: dict[Word, int] = {EMPTY_WORD: 1}

    def dim(self, w: Word) -> int:
        memo = self._memo
        got = memo.get(w)
        if got is not None:
            return got
        # walk up the prefixes, reusing whatever is already known
        known = w.length - 1
        while known > 0 and w.prefix(known) not in memo:
            known -= 1
        for i in range(known, w.length):
            p = w.prefix(i + 1)
            prev = memo[w.prefix(i)]
            if i >= 1 and ((w.bits >> (w.length - i)) & 1) != ((w.bits >> (w.length - i - 1)) & 1):
                memo[p] = self.n * prev - memo[w.prefix(i - 1)]
            else:
                memo[p] = self.n * prev
        return memo[w]

    def dim_element(self, f: FusionElement) -> int:
        return sum(m * self.dim(w) for w, m in f.items())


def haar_pairing(x: Word, y: Word) -> int:
    """1 when the two labels coincide, 0 otherwise."""
    return 1 if x == y else 0


def leading_part(f: FusionElement) -> FusionElement:
    """Restrict to the words of maximal length. Raises on the zero element."""
    if not f:
        raise ZeroElementError("the zero element has no leading part")
    top = f.degree()
    return FusionElement({w: m for w, m in f.items() if w.length == top})
