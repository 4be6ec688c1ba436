"""Self-check suites: every structural property the library promises, rerun on demand.

Each check returns a CheckResult; run_checks() drives the whole battery at
sizes taken from a VerifyConfig. Randomized checks derive their generator
from (seed, check name), so reruns with the same flags are identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import equivariant, generation, invariants, orbits
from .fusion import DimensionTable, FusionElement, fuse, leading_part
from .linalg import rank_fraction_free, rank_rational
from .words import EMPTY_WORD, FreePoly, Word, all_words

__all__ = ["CheckResult", "VerifyConfig", "run_checks"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerifyConfig:
    word_len: int = 10          # exhaustive bound for single-word properties
    pair_len: int = 8           # exhaustive bound on total length of word pairs
    dim_len: int = 6            # per-word length bound for the dimension identity
    samples: int = 200          # randomized sample count per randomized check
    kmax: int = 5               # generation slices to test
    surj_degree: int = 6
    compat_len: int = 6         # fusion-compatibility screen bound
    seed: int = 0


def _rng(cfg: VerifyConfig, name: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{name}")


def _random_word(rng: random.Random, max_len: int, min_len: int = 0) -> Word:
    d = rng.randint(min_len, max_len)
    return Word(rng.getrandbits(d) if d else 0, d)


def _random_poly(rng: random.Random, max_terms: int = 6, max_len: int = 5) -> FreePoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[_random_word(rng, max_len)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return FreePoly(terms)


def _pairs(total_len: int):
    for x in all_words(total_len):
        for y in all_words(total_len - x.length):
            yield x, y


# ---- word layer ----

def check_swap_involution(cfg: VerifyConfig) -> CheckResult:
    n = 0
    for w in all_words(cfg.word_len):
        if w.gamma().gamma() != w:
            return CheckResult("swap involution", False, f"fails at {w}")
        if w.length and w.gamma() == w:
            return CheckResult("swap involution", False, f"fixed nonempty word {w}")
        n += 1
    return CheckResult("swap involution", True, f"{n} words, length <= {cfg.word_len}")


def check_dual_involution(cfg: VerifyConfig) -> CheckResult:
    for w in all_words(cfg.word_len):
        if w.dual().dual() != w:
            return CheckResult("dual involution", False, f"fails at {w}")
        if w.dual().gamma() != w.gamma().dual() or w.gamma().dual() != w.reverse():
            return CheckResult("dual involution", False, f"swap/dual tangle at {w}")
    return CheckResult("dual involution", True, f"length <= {cfg.word_len}")


def check_free_ring(cfg: VerifyConfig) -> CheckResult:
    rng = _rng(cfg, "free ring")
    one = FreePoly.one()
    for _ in range(cfg.samples):
        p, q, r = (_random_poly(rng) for _ in range(3))
        if (p * q) * r != p * (q * r):
            return CheckResult("free ring", False, f"associativity fails: {p}; {q}; {r}")
        if p * one != p or one * p != p:
            return CheckResult("free ring", False, f"unit fails on {p}")
        if (p * q).gamma() != p.gamma() * q.gamma():
            return CheckResult("free ring", False, f"swap not multiplicative: {p}; {q}")
        if (p + q).gamma() != p.gamma() + q.gamma():
            return CheckResult("free ring", False, f"swap not additive: {p}; {q}")
    return CheckResult("free ring", True, f"{cfg.samples} random triples")


# ---- fusion layer ----

def check_fusion_associative(cfg: VerifyConfig) -> CheckResult:
    rng = _rng(cfg, "fusion associativity")
    for _ in range(cfg.samples):
        x = _random_word(rng, 6)
        y = _random_word(rng, min(6, 12 - x.length))
        z = _random_word(rng, max(0, 12 - x.length - y.length))
        cx, cy, cz = (FusionElement.of(v) for v in (x, y, z))
        if (cx * cy) * cz != cx * (cy * cz):
            return CheckResult(
                "fusion associativity", False, f"fails at ({x}, {y}, {z})"
            )
    return CheckResult("fusion associativity", True, f"{cfg.samples} random triples")


def check_fusion_structure(cfg: VerifyConfig) -> CheckResult:
    unit = FusionElement.unit()
    for x, y in _pairs(cfg.pair_len):
        f = fuse(x, y)
        if any(m != 1 for _, m in f.items()):
            return CheckResult("fusion structure", False, f"multiplicity at ({x}, {y})")
        contains_unit = f[EMPTY_WORD] == 1
        if contains_unit != (y == x.dual()):
            return CheckResult("fusion structure", False, f"unit rule fails at ({x}, {y})")
        if leading_part(f) != FusionElement.of(x + y):
            return CheckResult("fusion structure", False, f"leading term wrong at ({x}, {y})")
        if f.map_words(Word.gamma) != fuse(x.gamma(), y.gamma()):
            return CheckResult("fusion structure", False, f"swap equivariance fails at ({x}, {y})")
        if FusionElement.of(x) * unit != FusionElement.of(x):
            return CheckResult("fusion structure", False, f"unit object fails at {x}")
    return CheckResult("fusion structure", True, f"all pairs, total length <= {cfg.pair_len}")


def check_dimension_identity(cfg: VerifyConfig) -> CheckResult:
    for n in (2, 3, 5):
        table = DimensionTable(n)
        for x in all_words(cfg.dim_len):
            for y in all_words(cfg.dim_len):
                if table.dim(x) * table.dim(y) != table.dim_element(fuse(x, y)):
                    return CheckResult(
                        "dimension identity", False, f"fails at n={n}, ({x}, {y})"
                    )
    for w in all_words(cfg.pair_len):
        t = DimensionTable(3)
        if not t.dim(w) == t.dim(w.gamma()) == t.dim(w.dual()):
            return CheckResult("dimension identity", False, f"symmetry fails at {w}")
    return CheckResult(
        "dimension identity", True, f"n in (2, 3, 5), word lengths <= {cfg.dim_len}"
    )


# ---- invariant layer ----

def check_star_basis(cfg: VerifyConfig) -> CheckResult:
    rng = _rng(cfg, "star basis")
    for d in range(1, cfg.word_len + 1):
        comp = invariants.graded_component(d)
        if len(comp) != 1 << (d - 1):
            return CheckResult("star basis", False, f"component size wrong at degree {d}")
        if comp != sorted(comp):
            return CheckResult("star basis", False, f"component order wrong at degree {d}")
    for _ in range(cfg.samples):
        p = _random_poly(rng, max_terms=5, max_len=6)
        p = p - FreePoly.monomial(EMPTY_WORD, p[EMPTY_WORD])
        sym = p + p.gamma()
        vectors = invariants.express_in_star_basis(sym)
        total = FreePoly.zero()
        for v in vectors:
            total = total + v.expand()
        if total != sym:
            return CheckResult("star basis", False, f"round trip fails on {sym}")
    return CheckResult("star basis", True, f"{cfg.samples} random invariants")


def check_star_products(cfg: VerifyConfig) -> CheckResult:
    count = 0
    for d1 in range(1, cfg.pair_len):
        for d2 in range(1, cfg.pair_len - d1 + 1):
            for c1 in invariants.graded_component(d1):
                for c2 in invariants.graded_component(d2):
                    u, v = invariants.star_product(c1, c2)
                    if u == v:
                        return CheckResult(
                            "star products", False, f"collapsed pair at ({c1}, {c2})"
                        )
                    lhs = invariants.star_element(c1.rep) * invariants.star_element(c2.rep)
                    rhs = invariants.star_element(u.rep) + invariants.star_element(v.rep)
                    if lhs != rhs:
                        return CheckResult(
                            "star products", False, f"expansion fails at ({c1}, {c2})"
                        )
                    count += 1
    return CheckResult("star products", True, f"{count} pairs, total degree <= {cfg.pair_len}")


# ---- generation layer ----

def check_generation_graphs(cfg: VerifyConfig) -> CheckResult:
    rng = _rng(cfg, "generation graphs")
    for k in range(1, cfg.kmax + 1):
        g = generation.build_graph(k)
        if len(g.vertices) != 1 << k:
            return CheckResult("generation graphs", False, f"vertex count wrong at k={k}")
        if not g.is_regular(k):
            return CheckResult("generation graphs", False, f"not {k}-regular at k={k}")
        if k <= 5:
            if not generation.verify_hypercube_iso(g):
                return CheckResult("generation graphs", False, f"not a hypercube at k={k}")
        else:
            if g.diameter() != k:
                return CheckResult("generation graphs", False, f"diameter wrong at k={k}")
        rows = generation.product_rows(k)
        for row in rows:
            vec = invariants.StarVector(
                k + 1,
                {c: Fraction(x) for c, x in zip(g.vertices, row) if x},
            )
            if generation.bw_invariant(vec, g) != 0:
                return CheckResult(
                    "generation graphs", False, f"product with nonzero invariant at k={k}"
                )
        for c in g.vertices:
            unit = invariants.StarVector(k + 1, {c: Fraction(1)})
            if abs(generation.bw_invariant(unit, g)) != 1:
                return CheckResult(
                    "generation graphs", False, f"basis invariant not +-1 at k={k}"
                )
        report = generation.degree_generated(k)
        if report.generated or report.span_rank > (1 << k) - 1:
            return CheckResult(
                "generation graphs", False, f"slice k={k} unexpectedly generated"
            )
        if report.witness != g.vertices[0] or abs(report.witness_invariant) != 1:
            return CheckResult("generation graphs", False, f"witness wrong at k={k}")
        shuffled = list(rows)
        rng.shuffle(shuffled)
        if rank_fraction_free(shuffled) != report.span_rank:
            return CheckResult(
                "generation graphs", False, f"rank depends on row order at k={k}"
            )
        if k <= 4 and rank_rational(rows) != report.span_rank:
            return CheckResult(
                "generation graphs", False, f"rank oracles disagree at k={k}"
            )
    return CheckResult("generation graphs", True, f"k = 1..{cfg.kmax}")


def check_pair_reduction(cfg: VerifyConfig) -> CheckResult:
    cases = [(k, t) for k in range(2, min(cfg.kmax, 4) + 1) for t in range(3, k + 2)]
    for k, t in cases:
        if not generation.verify_pair_reduction(k, t):
            return CheckResult("pair reduction", False, f"fails at k={k}, t={t}")
    return CheckResult("pair reduction", True, ", ".join(f"(k={k}, t={t})" for k, t in cases))


# ---- equivariant layer ----

def check_equivariant(cfg: VerifyConfig) -> CheckResult:
    for w in all_words(cfg.surj_degree):
        total = FusionElement.zero()
        for e in equivariant.induce(w):
            total = total + equivariant.forget(e)
        expected = (
            FusionElement({EMPTY_WORD: 2})
            if w.length == 0
            else FusionElement({w: 1, w.gamma(): 1})
        )
        if total != expected:
            return CheckResult("equivariant classes", False, f"induce/forget fails at {w}")
    for e in equivariant.classes_up_to(cfg.surj_degree):
        img = equivariant.forget(e)
        if img.map_words(Word.gamma) != img:
            return CheckResult("equivariant classes", False, f"image of {e} not swap-fixed")
    if not equivariant.check_surjectivity_onto_invariants(cfg.surj_degree):
        return CheckResult(
            "equivariant classes", False, f"not surjective up to degree {cfg.surj_degree}"
        )
    return CheckResult("equivariant classes", True, f"degree <= {cfg.surj_degree}")


# ---- orbit layer ----

def check_orbits(cfg: VerifyConfig) -> CheckResult:
    for p in orbits.BUILTIN_PERMUTATIONS.values():
        if not orbits.verify_fusion_compatible(p, cfg.compat_len):
            return CheckResult("orbit engine", False, f"{p.name} incompatible")
    gens = tuple(orbits.BUILTIN_PERMUTATIONS.values())
    for w in all_words(min(cfg.word_len, 8)):
        rep = orbits.orbit(w, gens)
        if rep.truncated:
            return CheckResult("orbit engine", False, f"orbit of {w} truncated")
        if rep.size not in (1, 2, 4):
            return CheckResult("orbit engine", False, f"orbit of {w} has size {rep.size}")
        for member in rep.orbit:
            for p in gens:
                if p(member) not in rep.orbit:
                    return CheckResult("orbit engine", False, f"orbit of {w} not closed")
    probe = orbits.compact_action_check(
        (orbits.GAMMA, orbits.DUAL), Word.from_str("a"), max_len=min(cfg.word_len, 8)
    )
    if not probe.compact or probe.max_orbit_size > 4:
        return CheckResult("orbit engine", False, "compactness probe failed")
    return CheckResult("orbit engine", True, f"builtins at length <= {cfg.compat_len}")


ALL_CHECKS = (
    check_swap_involution,
    check_dual_involution,
    check_free_ring,
    check_fusion_associative,
    check_fusion_structure,
    check_dimension_identity,
    check_star_basis,
    check_star_products,
    check_generation_graphs,
    check_pair_reduction,
    check_equivariant,
    check_orbits,
)


def run_checks(cfg: VerifyConfig | None = None) -> list[CheckResult]:
    cfg = cfg or VerifyConfig()
    return [check(cfg) for check in ALL_CHECKS]
