"""Words over the two-letter alphabet and the free polynomials they span.

A word is an irreducible label: the letter ``a`` stands for the fundamental
object, ``b`` for its conjugate. Words are bit-packed, one bit per letter
(a=0, b=1) with the first letter in the most significant bit, so that the
letter swap is a masked complement, conjugation is a bit reversal plus
complement, and integer comparison of equal-length packings agrees with
lexicographic order under a < b.

Everything in this module is an immutable value and every operation is a
pure function, so instances are safe to share across threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "Word",
    "EMPTY_WORD",
    "StarClass",
    "FreePoly",
    "ParseError",
    "EmptyWordError",
    "parse_word",
    "gamma",
    "dual",
    "star_class",
    "gamma_poly",
    "words_of_length",
    "all_words",
]


class ParseError(ValueError):
    """A word string was not over {a, b} ("e" denotes the empty word)."""


class EmptyWordError(ValueError):
    """The empty word was passed where only positive degree makes sense."""


def _reverse_bits(bits: int, length: int) -> int:
    out = 0
    for _ in range(length):
        out = (out << 1) | (bits & 1)
        bits >>= 1
    return out


@dataclass(frozen=True, slots=True)
class Word:
    """A finite word over {a, b}, packed into an int plus an explicit length."""

    bits: int = 0
    length: int = 0

    def __post_init__(self) -> None:
        if self.length < 0 or self.bits < 0 or (self.bits >> self.length) != 0:
            raise ValueError(f"bad packing: bits={self.bits!r} length={self.length!r}")

    # ---- construction and display ----

    @classmethod
    def from_str(cls, text: str) -> "Word":
        """Parse "e" or a nonempty string of a's and b's."""
        if text in ("e", ""):
            return cls(0, 0)
        if not re.fullmatch(r"[ab]+", text):
            raise ParseError(f"not a word over {{a, b}}: {text!r}")
        bits = 0
        for ch in text:
            bits = (bits << 1) | (ch == "b")
        return cls(bits, len(text))

    def __str__(self) -> str:
        if self.length == 0:
            return "e"
        return "".join("ab"[(self.bits >> (self.length - 1 - i)) & 1] for i in range(self.length))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    # ---- basic structure ----

    @property
    def degree(self) -> int:
        return self.length

    def __len__(self) -> int:
        return self.length

    def __bool__(self) -> bool:
        return self.length > 0

    def letters(self) -> Iterator[str]:
        s = str(self)
        return iter(s if self.length else "")

    def __lt__(self, other: "Word") -> bool:
        # graded order, lexicographic (a < b) within a degree
        return (self.length, self.bits) < (other.length, other.bits)

    def __le__(self, other: "Word") -> bool:
        return (self.length, self.bits) <= (other.length, other.bits)

    def __gt__(self, other: "Word") -> bool:
        return (self.length, self.bits) > (other.length, other.bits)

    def __ge__(self, other: "Word") -> bool:
        return (self.length, self.bits) >= (other.length, other.bits)

    # ---- slicing ----

    def prefix(self, k: int) -> "Word":
        if not 0 <= k <= self.length:
            raise ValueError(f"prefix length {k} out of range for {self!r}")
        return Word(self.bits >> (self.length - k), k)

    def suffix(self, k: int) -> "Word":
        if not 0 <= k <= self.length:
            raise ValueError(f"suffix length {k} out of range for {self!r}")
        return Word(self.bits & ((1 << k) - 1), k)

    def drop_prefix(self, k: int) -> "Word":
        return self.suffix(self.length - k)

    def drop_suffix(self, k: int) -> "Word":
        return self.prefix(self.length - k)

    def __add__(self, other: "Word") -> "Word":
        """Concatenation."""
        if not isinstance(other, Word):
            return NotImplemented
        return Word((self.bits << other.length) | other.bits, self.length + other.length)

    # ---- the three symmetries ----

    def gamma(self) -> "Word":
        """Swap every letter (a <-> b)."""
        mask = (1 << self.length) - 1
        return Word(self.bits ^ mask, self.length)

    def reverse(self) -> "Word":
        return Word(_reverse_bits(self.bits, self.length), self.length)

    def dual(self) -> "Word":
        """Conjugate label: reverse the word and swap every letter."""
        mask = (1 << self.length) - 1
        return Word(_reverse_bits(self.bits, self.length) ^ mask, self.length)


EMPTY_WORD = Word(0, 0)


def parse_word(text: str) -> Word:
    return Word.from_str(text)


def gamma(w: Word) -> Word:
    return w.gamma()


def dual(w: Word) -> Word:
    return w.dual()


def words_of_length(d: int) -> Iterator[Word]:
    """All 2**d words of a given length, in lexicographic order."""
    if d < 0:
        raise ValueError("negative length")
    return (Word(bits, d) for bits in range(1 << d))


def all_words(max_len: int) -> Iterator[Word]:
    """All words of length 0..max_len in graded lexicographic order."""
    for d in range(max_len + 1):
        yield from words_of_length(d)


@dataclass(frozen=True, slots=True)
class StarClass:
    """An unordered pair {w, gamma(w)} of nonempty words, named by its smaller member.

    The representative always starts with the letter a, so the classes of a
    fixed degree d are in bijection with the 2**(d-1) words a·{a,b}^(d-1).
    """

    rep: Word

    def __post_init__(self) -> None:
        if self.rep.length == 0:
            raise EmptyWordError("the empty word has no letter-swap class")
        if self.rep.gamma() < self.rep:
            raise ValueError(f"{self.rep!r} is not canonical; use StarClass.of")

    @classmethod
    def of(cls, w: Word) -> "StarClass":
        g = w.gamma()
        return cls(g if g < w else w)

    @property
    def degree(self) -> int:
        return self.rep.length

    def members(self) -> tuple[Word, Word]:
        return (self.rep, self.rep.gamma())

    def __str__(self) -> str:
        return str(self.rep)

    def __repr__(self) -> str:
        return f"StarClass({str(self.rep)!r})"

    def __lt__(self, other: "StarClass") -> bool:
        return self.rep < other.rep

    def __le__(self, other: "StarClass") -> bool:
        return self.rep <= other.rep


def star_class(w: Word) -> StarClass:
    """The letter-swap class of a nonempty word."""
    return StarClass.of(w)


Coefficient = Union[int, Fraction]


class FreePoly:
    """An element of the free ring on the two letters, with rational coefficients.

    Words multiply by concatenation; there are no relations. Zero terms are
    never stored. Instances are immutable: all arithmetic returns new objects.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Coefficient] | None = None):
        data: dict[Word, Fraction] = {}
        if terms:
            for word, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    data[word] = c
        object.__setattr__(self, "_terms", data)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("FreePoly is immutable")

    # ---- construction ----

    @classmethod
    def zero(cls) -> "FreePoly":
        return cls()

    @classmethod
    def one(cls) -> "FreePoly":
        return cls({EMPTY_WORD: 1})

    @classmethod
    def monomial(cls, w: Word, coeff: Coefficient = 1) -> "FreePoly":
        return cls({w: coeff})

    # ---- mapping access ----

    def __getitem__(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def __iter__(self) -> Iterator[Word]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> Iterable[tuple[Word, Fraction]]:
        return self._terms.items()

    def words(self) -> Iterable[Word]:
        return self._terms.keys()

    # ---- ring structure ----

    def __add__(self, other: "FreePoly") -> "FreePoly":
        if not isinstance(other, FreePoly):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, Fraction(0)) + c
        return FreePoly(acc)

    def __sub__(self, other: "FreePoly") -> "FreePoly":
        if not isinstance(other, FreePoly):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            acc[w] = acc.get(w, Fraction(0)) - c
        return FreePoly(acc)

    def __neg__(self) -> "FreePoly":
        return FreePoly({w: -c for w, c in self._terms.items()})

    def __mul__(self, other: "FreePoly | Coefficient") -> "FreePoly":
        if isinstance(other, FreePoly):
            acc: dict[Word, Fraction] = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    w = w1 + w2
                    acc[w] = acc.get(w, Fraction(0)) + c1 * c2
            return FreePoly(acc)
        if isinstance(other, (int, Fraction)):
            return FreePoly({w: c * other for w, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other: Coefficient) -> "FreePoly":
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FreePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # ---- structure queries ----

    def degree(self) -> int:
        """Largest word length present. Undefined (raises) for the zero element."""
        if not self._terms:
            raise ValueError("the zero element has no degree")
        return max(w.length for w in self._terms)

    def is_homogeneous(self) -> bool:
        lens = {w.length for w in self._terms}
        return len(lens) <= 1

    def homogeneous_components(self) -> dict[int, "FreePoly"]:
        """Split by word length; keys are the degrees that actually occur."""
        parts: dict[int, dict[Word, Fraction]] = {}
        for w, c in self._terms.items():
            parts.setdefault(w.length, {})[w] = c
        return {d: FreePoly(t) for d, t in sorted(parts.items())}

    def gamma(self) -> "FreePoly":
        """Apply the letter swap to every word; a ring automorphism."""
        return FreePoly({w.gamma(): c for w, c in self._terms.items()})

    # ---- display and serialization ----

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        bits = []
        for w in sorted(self._terms):
            c = self._terms[w]
            bits.append(f"{c}*{w}" if c != 1 else str(w))
        return " + ".join(bits)

    def __repr__(self) -> str:
        return f"FreePoly({{{', '.join(f'{w}: {c}' for w, c in sorted(self._terms.items()))}}})"

    def to_json_dict(self) -> dict[str, str]:
        """Word string -> coefficient string, keys sorted as plain strings."""
        pairs = sorted(((str(w), str(c)) for w, c in self._terms.items()))
        return dict(pairs)

    @classmethod
    def from_json_dict(cls, data: Mapping[str, str]) -> "FreePoly":
        return cls({parse_word(k): Fraction(v) for k, v in data.items()})


def gamma_poly(p: FreePoly) -> FreePoly:
    return p.gamma()
