"""Degree-by-degree certificates that the invariant subalgebra is not finitely generated.

Fix k >= 1 and look at the degree-(k+1) slice of the letter-swap invariant
subalgebra. Its star basis has 2**k classes, and every product of two
lower-degree basis elements expands as the sum of exactly two of them. Wire
those pairs up as a graph: the result is connected, bipartite, and in fact
isomorphic to the k-dimensional hypercube. Assigning +1 to one side of the
bipartition and -1 to the other gives a linear functional that kills every
two-factor product but takes value +-1 on each single basis element, so the
two-factor products never span the slice. Since longer products reduce to
sums of two-factor ones, no finite set of generators can cover every degree:
each k >= 1 yields a fresh witness one degree up.

degree_generated() machine-checks one slice (exact integer elimination for
the span rank, the witness functional for the certificate) and
finite_generation_scan() sweeps k = 1..kmax.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product as iter_product
from typing import Iterable, Iterator, Mapping, Sequence

from .invariants import (
    StarVector,
    express_in_star_basis,
    graded_component,
    star_element,
    star_product,
)
from .linalg import RationalRowSpace, rank_fraction_free
from .words import StarClass

__all__ = [
    "BLACK",
    "WHITE",
    "HypercubeGraph",
    "GenerationReport",
    "build_graph",
    "two_color",
    "verify_hypercube_iso",
    "bw_invariant",
    "product_rows",
    "degree_generated",
    "verify_pair_reduction",
    "finite_generation_scan",
    "NotBipartiteError",
    "DegreeMismatchError",
    "ResourceLimitError",
    "DEFAULT_DIM_BUDGET",
]

BLACK = "black"
WHITE = "white"

DEFAULT_DIM_BUDGET = 256


class NotBipartiteError(ValueError):
    """An odd cycle turned up where the theory promises a bipartite graph."""


class DegreeMismatchError(ValueError):
    """A star vector was paired with a graph of a different degree."""


class ResourceLimitError(RuntimeError):
    """The requested slice exceeds the configured dimension budget."""


@dataclass(frozen=True)
class HypercubeGraph:
    """The product graph on the degree-(k+1) star classes.

    Vertices are the 2**k classes; an edge joins the two classes produced by
    each two-factor star product. The stored coloring must be a proper
    2-coloring; the constructor refuses anything else rather than repairing it.
    """

    k: int
    vertices: tuple[StarClass, ...]
    edges: frozenset[tuple[StarClass, StarClass]]
    coloring: Mapping[StarClass, str]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if len(self.vertices) != 1 << self.k:
            raise ValueError(
                f"expected {1 << self.k} vertices for k={self.k}, got {len(self.vertices)}"
            )
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValueError("duplicate vertices")
        for a, b in self.edges:
            if a not in vset or b not in vset:
                raise ValueError(f"edge ({a}, {b}) leaves the vertex set")
            if a == b:
                raise NotBipartiteError(f"loop at {a}")
        missing = [v for v in self.vertices if v not in self.coloring]
        if missing:
            raise ValueError(f"coloring misses {missing[0]}")
        bad = [c for c in self.coloring.values() if c not in (BLACK, WHITE)]
        if bad:
            raise ValueError(f"unknown color {bad[0]!r}")
        for a, b in self.edges:
            if self.coloring[a] == self.coloring[b]:
                raise NotBipartiteError(f"edge ({a}, {b}) joins two {self.coloring[a]} vertices")

    @cached_property
    def _adjacency(self) -> dict[StarClass, tuple[StarClass, ...]]:
        nbrs: dict[StarClass, set[StarClass]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return {v: tuple(sorted(ns)) for v, ns in nbrs.items()}

    def neighbors(self, v: StarClass) -> tuple[StarClass, ...]:
        return self._adjacency[v]

    def degree_of(self, v: StarClass) -> int:
        return len(self._adjacency[v])

    def is_regular(self, deg: int) -> bool:
        return all(len(ns) == deg for ns in self._adjacency.values())

    def bfs_distances(self, root: StarClass) -> dict[StarClass, int]:
        dist = {root: 0}
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for u in self.neighbors(v):
                    if u not in dist:
                        dist[u] = dist[v] + 1
                        nxt.append(u)
            frontier = nxt
        return dist

    def diameter(self) -> int:
        worst = 0
        for v in self.vertices:
            dist = self.bfs_distances(v)
            if len(dist) != len(self.vertices):
                raise ValueError("graph is not connected")
            worst = max(worst, max(dist.values()))
        return worst

    def edge_list(self) -> list[tuple[str, str]]:
        return sorted((str(min(a, b)), str(max(a, b))) for a, b in self.edges)

    def to_dot(self) -> str:
        lines = [f"graph star_products_deg{self.k + 1} {{", "  node [shape=circle];"]
        for v in self.vertices:
            if self.coloring[v] == BLACK:
                lines.append(f'  "{v}" [style=filled, fillcolor=black, fontcolor=white];')
            else:
                lines.append(f'  "{v}" [style=filled, fillcolor=white];')
        for a, b in self.edge_list():
            lines.append(f'  "{a}" -- "{b}";')
        lines.append("}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict[str, object]:
        return {
            "k": self.k,
            "vertices": [str(v) for v in self.vertices],
            "edges": [list(e) for e in self.edge_list()],
            "coloring": {str(v): self.coloring[v] for v in self.vertices},
        }


def two_color(vertices: Sequence[StarClass], adjacency: Mapping[StarClass, Iterable[StarClass]]) -> dict[StarClass, str]:
    """Proper 2-coloring by breadth-first search, or NotBipartiteError.

    Each component is entered at its lexicographically first vertex, which
    is colored black, so the result is deterministic.
    """
    coloring: dict[StarClass, str] = {}
    for root in sorted(vertices):
        if root in coloring:
            continue
        coloring[root] = BLACK
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                flip = WHITE if coloring[v] == BLACK else BLACK
                for u in sorted(adjacency[v]):
                    got = coloring.get(u)
                    if got is None:
                        coloring[u] = flip
                        nxt.append(u)
                    elif got != flip:
                        raise NotBipartiteError(f"odd cycle through ({v}, {u})")
            frontier = nxt
    return coloring


def _edge_pairs(k: int) -> Iterator[tuple[StarClass, StarClass]]:
    """Unordered class pairs produced by two-factor products in degree k+1."""
    for i in range(1, k + 1):
        for c1 in graded_component(i):
            for c2 in graded_component(k + 1 - i):
                u, v = star_product(c1, c2)
                assert u != v, "two-factor products always split over two classes"
                yield (u, v) if u < v else (v, u)


def build_graph(k: int) -> HypercubeGraph:
    """Assemble the degree-(k+1) product graph and 2-color it."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    vertices = tuple(graded_component(k + 1))
    edges = frozenset(_edge_pairs(k))
    adjacency: dict[StarClass, set[StarClass]] = {v: set() for v in vertices}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    coloring = two_color(vertices, adjacency)
    return HypercubeGraph(k, vertices, edges, coloring)


def verify_hypercube_iso(g: HypercubeGraph) -> bool:
    """Full search for an isomorphism with the k-dimensional hypercube.

    Vertices of the reference cube are the integers 0..2**k-1 with edges on
    single-bit flips. The search maps them in increasing order, pruning by
    degree, by consistency with every previously mapped vertex, and by
    BFS-layer (a cube vertex at Hamming weight h must land at distance h
    from the image of 0). Fixing the image of vertex 0 loses no generality
    because the cube is vertex-transitive.
    """
    k, n = g.k, len(g.vertices)
    if n != 1 << k:
        return False
    if not g.is_regular(k):
        return False
    adj = {v: set(g.neighbors(v)) for v in g.vertices}

    root = g.vertices[0]
    layer = g.bfs_distances(root)
    if len(layer) != n:
        return False

    earlier_nbrs: list[list[int]] = []
    for i in range(n):
        earlier_nbrs.append([i ^ (1 << b) for b in range(k) if (i >> b) & 1])

    mapping: list[StarClass | None] = [None] * n
    used: set[StarClass] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        req = [mapping[j] for j in earlier_nbrs[i]]
        cands = set.intersection(*(adj[r] for r in req)) if req else {root}
        weight = bin(i).count("1")
        for c in sorted(cands - used):
            if layer[c] != weight:
                continue
            nb = adj[c]
            ok = True
            for j in range(i):
                if (mapping[j] in nb) != ((i ^ j).bit_count() == 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[i] = c
            used.add(c)
            if extend(i + 1):
                return True
            mapping[i] = None
            used.remove(c)
        return False

    return extend(0)


def bw_invariant(v: StarVector, g: HypercubeGraph) -> Fraction:
    """Black coefficient sum minus white coefficient sum of a top-degree vector."""
    if v.degree != g.k + 1:
        raise DegreeMismatchError(f"vector degree {v.degree}, graph degree {g.k + 1}")
    total = Fraction(0)
    for c, coeff in v.coeffs.items():
        total += coeff if g.coloring[c] == BLACK else -coeff
    return total


def product_rows(k: int) -> list[list[int]]:
    """Star-basis rows of every ordered two-factor product landing in degree k+1.

    Entries are 0 or 1; each row carries exactly two ones because the two
    classes of a product are distinct.
    """
    vertices = graded_component(k + 1)
    index = {c: i for i, c in enumerate(vertices)}
    rows = []
    for i in range(1, k + 1):
        for c1 in graded_component(i):
            for c2 in graded_component(k + 1 - i):
                u, v = star_product(c1, c2)
                iu, iv = index[u], index[v]
                assert iu != iv
                row = [0] * len(vertices)
                row[iu] = 1
                row[iv] = 1
                rows.append(row)
    return rows


@dataclass(frozen=True)
class GenerationReport:
    """Outcome of the generation test for one degree slice."""

    k: int
    component_dim: int
    span_rank: int
    generated: bool
    witness: StarClass | None
    witness_invariant: Fraction | None

    def to_json_dict(self) -> dict[str, object]:
        return {
            "k": self.k,
            "component_dim": self.component_dim,
            "span_rank": self.span_rank,
            "generated": self.generated,
            "witness": None if self.witness is None else str(self.witness),
            "witness_invariant": None
            if self.witness_invariant is None
            else str(self.witness_invariant),
        }


def degree_generated(k: int, dim_budget: int = DEFAULT_DIM_BUDGET) -> GenerationReport:
    """Test whether degree k+1 lies in the span of two-factor products.

    The span rank comes from exact integer elimination. When the slice is
    not spanned (the expected outcome for every k), the report names the
    lexicographically first class as witness together with its signed
    bipartition value, which vanishes on the whole span.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if (1 << k) > dim_budget:
        raise ResourceLimitError(
            f"degree slice needs {1 << k} columns, budget is {dim_budget}"
        )
    g = build_graph(k)
    rank = rank_fraction_free(product_rows(k))
    dim = 1 << k
    generated = rank == dim
    if generated:
        return GenerationReport(k, dim, rank, True, None, None)
    witness = g.vertices[0]
    unit = StarVector(k + 1, {witness: Fraction(1)})
    return GenerationReport(k, dim, rank, False, witness, bw_invariant(unit, g))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    # ordered splittings into strictly positive parts
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in _compositions(total - head, parts - 1):
            yield (head, *rest)


def verify_pair_reduction(k: int, t: int) -> bool:
    """Check that every t-factor product in degree k+1 stays in the two-factor span."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 3 <= t <= k + 1:
        raise ValueError(f"t must satisfy 3 <= t <= k+1 = {k + 1}, got {t}")
    vertices = graded_component(k + 1)
    index = {c: i for i, c in enumerate(vertices)}
    space = RationalRowSpace(len(vertices))
    space.extend(product_rows(k))
    for degrees in _compositions(k + 1, t):
        components = [graded_component(d) for d in degrees]
        for classes in iter_product(*components):
            poly = star_element(classes[0].rep)
            for c in classes[1:]:
                poly = poly * star_element(c.rep)
            vectors = express_in_star_basis(poly)
            assert len(vectors) == 1 and vectors[0].degree == k + 1
            dense = [0] * len(vertices)
            for cls, coeff in vectors[0].coeffs.items():
                dense[index[cls]] = coeff
            if not space.contains(dense):
                return False
    return True


def finite_generation_scan(kmax: int, dim_budget: int = DEFAULT_DIM_BUDGET) -> list[GenerationReport]:
    """Run the generation test for every k = 1..kmax."""
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    return [degree_generated(k, dim_budget) for k in range(1, kmax + 1)]
