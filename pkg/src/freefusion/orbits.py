"""Orbits of word labels under degree-preserving symmetries.

The built-in family is generated by the letter swap and the dual, which
commute and square to the identity, so every orbit has size 1, 2, or 4.
The letter swap respects the tensor decomposition outright; the dual
respects it with the factor order reversed (it is an anti-symmetry), and
verify_fusion_compatible checks whichever identity a permutation declares.
A finite family with finite orbits on every label is the combinatorial
shadow of a compact symmetry, which compact_action_check probes up to a
length bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .fusion import fuse
from .words import Word, all_words

__all__ = [
    "IrrPermutation",
    "OrbitReport",
    "CompactCheck",
    "IDENTITY",
    "GAMMA",
    "DUAL",
    "DUAL_GAMMA",
    "BUILTIN_PERMUTATIONS",
    "custom_permutation",
    "verify_fusion_compatible",
    "orbit",
    "compact_action_check",
    "IncompatiblePermutationError",
    "GeneratorOrbitInfiniteError",
    "DEFAULT_CAP",
    "DEFAULT_MAX_LEN",
]

DEFAULT_CAP = 64
DEFAULT_MAX_LEN = 10


class IncompatiblePermutationError(ValueError):
    """A user map failed the fusion-compatibility screen."""


class GeneratorOrbitInfiniteError(RuntimeError):
    """The distinguished generating label already has a truncated orbit."""


@dataclass(frozen=True)
class IrrPermutation:
    """A degree-preserving bijection of word labels.

    anti=True declares that the map reverses factor order, so compatibility
    is checked against fuse of the swapped images.
    """

    name: str
    action: Callable[[Word], Word]
    anti: bool = False

    def __call__(self, w: Word) -> Word:
        img = self.action(w)
        if img.length != w.length:
            raise ValueError(f"{self.name} changed the length of {w}")
        return img

    def __repr__(self) -> str:
        return f"IrrPermutation({self.name!r}{', anti' if self.anti else ''})"


IDENTITY = IrrPermutation("identity", lambda w: w)
GAMMA = IrrPermutation("gamma", Word.gamma)
DUAL = IrrPermutation("dual", Word.dual, anti=True)
DUAL_GAMMA = IrrPermutation("dual-gamma", lambda w: w.gamma().dual(), anti=True)

BUILTIN_PERMUTATIONS: Mapping[str, IrrPermutation] = {
    p.name: p for p in (IDENTITY, GAMMA, DUAL, DUAL_GAMMA)
}


def verify_fusion_compatible(p: IrrPermutation, max_len: int) -> bool:
    """Does p respect every tensor decomposition with total length <= max_len?

    For a straight symmetry the image of fuse(x, y) must equal
    fuse(p(x), p(y)); for an anti-symmetry it must equal fuse(p(y), p(x)).
    """
    if max_len < 0:
        raise ValueError("negative length bound")
    for x in all_words(max_len):
        for y in all_words(max_len - x.length):
            image = fuse(x, y).map_words(p)
            direct = fuse(p(y), p(x)) if p.anti else fuse(p(x), p(y))
            if image != direct:
                return False
    return True


def custom_permutation(
    name: str,
    table: Mapping[Word, Word],
    check_len: int = 6,
    anti: bool = False,
) -> IrrPermutation:
    """Wrap a finitely-supported word map, identity off the table.

    The table must be a degree-preserving bijection on its support, and the
    wrapped map must pass the fusion-compatibility screen up to check_len;
    otherwise IncompatiblePermutationError.
    """
    support = dict(table)
    for src, dst in support.items():
        if src.length != dst.length:
            raise IncompatiblePermutationError(
                f"{name}: {src} -> {dst} changes the length"
            )
    images = list(support.values())
    if len(set(images)) != len(images) or set(images) != set(support):
        raise IncompatiblePermutationError(
            f"{name}: table is not a permutation of its support"
        )

    p = IrrPermutation(name, lambda w: support.get(w, w), anti=anti)
    if not verify_fusion_compatible(p, check_len):
        raise IncompatiblePermutationError(
            f"{name}: breaks a tensor decomposition at total length <= {check_len}"
        )
    return p


@dataclass(frozen=True)
class OrbitReport:
    """Closure of one label under a generating set, possibly cut off at cap."""

    seed: Word
    orbit: frozenset[Word]
    size: int
    truncated: bool

    def to_json_dict(self) -> dict[str, object]:
        return {
            "seed": str(self.seed),
            "orbit": [str(w) for w in sorted(self.orbit)],
            "size": self.size,
            "truncated": self.truncated,
        }


def orbit(seed: Word, gens: Iterable[IrrPermutation], cap: int = DEFAULT_CAP) -> OrbitReport:
    """Breadth-first closure of seed under the generators.

    Stops before the orbit would exceed cap elements, reporting
    truncated=True with whatever was collected.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    gens = tuple(gens)
    seen = {seed}
    frontier = [seed]
    truncated = False
    while frontier and not truncated:
        nxt = []
        for w in frontier:
            for p in gens:
                img = p(w)
                if img in seen:
                    continue
                if len(seen) >= cap:
                    truncated = True
                    break
                seen.add(img)
                nxt.append(img)
            if truncated:
                break
        frontier = nxt
    return OrbitReport(seed, frozenset(seen), len(seen), truncated)


@dataclass(frozen=True)
class CompactCheck:
    """Verdict of the finite-orbit sweep, with the largest orbit seen."""

    compact: bool
    max_orbit_size: int
    words_checked: int


def compact_action_check(
    gens: Iterable[IrrPermutation],
    generator_word: Word,
    max_len: int = DEFAULT_MAX_LEN,
    cap: int = DEFAULT_CAP,
) -> CompactCheck:
    """Probe the finiteness criterion: finite orbit on a generating label
    propagating to finite orbits everywhere, up to the length bound.

    Raises GeneratorOrbitInfiniteError when the distinguished label itself
    truncates, since then the criterion's hypothesis already fails.
    """
    gens = tuple(gens)
    root = orbit(generator_word, gens, cap)
    if root.truncated:
        raise GeneratorOrbitInfiniteError(
            f"orbit of {generator_word} exceeded cap {cap}"
        )
    biggest = root.size
    checked = 0
    compact = True
    for w in all_words(max_len):
        rep = orbit(w, gens, cap)
        checked += 1
        if rep.truncated:
            compact = False
        biggest = max(biggest, rep.size)
    return CompactCheck(compact, biggest, checked)
