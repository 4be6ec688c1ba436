import random
from fractions import Fraction

import pytest

from freefusion.generation import (
    BLACK,
    WHITE,
    DegreeMismatchError,
    GenerationReport,
    HypercubeGraph,
    NotBipartiteError,
    ResourceLimitError,
    build_graph,
    bw_invariant,
    degree_generated,
    finite_generation_scan,
    product_rows,
    two_color,
    verify_hypercube_iso,
    verify_pair_reduction,
)
from freefusion.invariants import (
    StarVector,
    express_in_star_basis,
    graded_component,
    star_element,
)
from freefusion.linalg import rank_fraction_free, rank_rational
from freefusion.words import Word, star_class

w = Word.from_str


class TestBuildGraph:
    def test_k1(self):
        g = build_graph(1)
        assert [str(v) for v in g.vertices] == ["aa", "ab"]
        assert g.edge_list() == [("aa", "ab")]
        assert g.coloring[star_class(w("aa"))] == BLACK
        assert g.coloring[star_class(w("ab"))] == WHITE

    def test_k2_is_a_four_cycle(self):
        g = build_graph(2)
        assert g.edge_list() == [
            ("aaa", "aab"),
            ("aaa", "abb"),
            ("aab", "aba"),
            ("aba", "abb"),
        ]
        assert g.is_regular(2)

    def test_counts_and_regularity(self):
        for k in range(1, 7):
            g = build_graph(k)
            assert len(g.vertices) == 1 << k
            assert len(g.edges) == k * (1 << (k - 1))
            assert g.is_regular(k)

    def test_proper_coloring(self):
        for k in range(1, 6):
            g = build_graph(k)
            for a, b in g.edges:
                assert g.coloring[a] != g.coloring[b]
            assert g.coloring[g.vertices[0]] == BLACK

    def test_diameter(self):
        for k in range(1, 6):
            assert build_graph(k).diameter() == k

    def test_k_zero_rejected(self):
        with pytest.raises(ValueError):
            build_graph(0)

    def test_every_edge_comes_from_a_product(self):
        k = 3
        g = build_graph(k)
        seen = set()
        for i in range(1, k + 1):
            for c1 in graded_component(i):
                for c2 in graded_component(k + 1 - i):
                    from freefusion.invariants import star_product

                    u, v = star_product(c1, c2)
                    seen.add((min(u, v), max(u, v)))
        assert seen == set(g.edges)


class TestTwoColor:
    def test_odd_cycle_raises(self):
        a, b, c = (star_class(x) for x in (w("aaa"), w("aab"), w("aba")))
        adjacency = {a: {b, c}, b: {a, c}, c: {a, b}}
        with pytest.raises(NotBipartiteError):
            two_color([a, b, c], adjacency)

    def test_disconnected_components_each_rooted_black(self):
        a, b, c, d = (star_class(x) for x in (w("aaa"), w("aab"), w("aba"), w("abb")))
        adjacency = {a: {b}, b: {a}, c: {d}, d: {c}}
        coloring = two_color([a, b, c, d], adjacency)
        assert coloring[a] == BLACK and coloring[c] == BLACK
        assert coloring[b] == WHITE and coloring[d] == WHITE


class TestHypercubeGraphType:
    def test_constructor_rejects_improper_coloring(self):
        g = build_graph(2)
        bad = dict(g.coloring)
        flip = g.vertices[1]
        bad[flip] = bad[g.vertices[0]]
        with pytest.raises(NotBipartiteError):
            HypercubeGraph(g.k, g.vertices, g.edges, bad)

    def test_constructor_rejects_wrong_vertex_count(self):
        g = build_graph(2)
        with pytest.raises(ValueError):
            HypercubeGraph(3, g.vertices, g.edges, dict(g.coloring))

    def test_dot_export(self):
        g = build_graph(2)
        dot = g.to_dot()
        assert dot.startswith("graph star_products_deg3 {")
        assert '"aaa" -- "aab";' in dot
        assert dot.count("--") == 4
        assert "fillcolor=black" in dot and "fillcolor=white" in dot

    def test_json_shape(self):
        data = build_graph(1).to_json_dict()
        assert data == {
            "k": 1,
            "vertices": ["aa", "ab"],
            "edges": [["aa", "ab"]],
            "coloring": {"aa": "black", "ab": "white"},
        }


class TestHypercubeIso:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_true_for_built_graphs(self, k):
        assert verify_hypercube_iso(build_graph(k))

    def test_false_for_a_path(self):
        vs = tuple(graded_component(3))
        edges = frozenset(
            {(vs[0], vs[1]), (vs[1], vs[2]), (vs[2], vs[3])}
        )
        coloring = {vs[0]: BLACK, vs[1]: WHITE, vs[2]: BLACK, vs[3]: WHITE}
        path = HypercubeGraph(2, vs, edges, coloring)
        assert not verify_hypercube_iso(path)

    def test_false_for_regular_non_cube(self):
        # Degree and count alone do not settle the question at k=4: swap
        # the disjoint cube edges (0,1),(6,7) for (0,7),(1,6).  The result
        # is still connected, 4-regular and bipartite, but not a cube: in
        # the cube every edge lies on exactly three 4-cycles, while the
        # new edge (0,7) lies on two (via 2-3 and 4-5 only).
        vs = tuple(graded_component(5))
        cube = {
            (min(i, i ^ (1 << b)), max(i, i ^ (1 << b)))
            for i in range(16)
            for b in range(4)
        }
        switched = (cube - {(0, 1), (6, 7)}) | {(0, 7), (1, 6)}
        edges = frozenset((vs[i], vs[j]) for i, j in switched)
        coloring = {
            vs[i]: BLACK if bin(i).count("1") % 2 == 0 else WHITE
            for i in range(16)
        }
        h = HypercubeGraph(4, vs, edges, coloring)
        assert not verify_hypercube_iso(h)


class TestBwInvariant:
    def test_unit_vectors(self):
        for k in range(1, 5):
            g = build_graph(k)
            for v in g.vertices:
                value = bw_invariant(StarVector(k + 1, {v: Fraction(1)}), g)
                assert value == (1 if g.coloring[v] == BLACK else -1)

    def test_vanishes_on_two_factor_products(self):
        for k in range(1, 5):
            g = build_graph(k)
            for d1 in range(1, k + 1):
                for c1 in graded_component(d1):
                    for c2 in graded_component(k + 1 - d1):
                        p = star_element(c1.rep) * star_element(c2.rep)
                        (vec,) = express_in_star_basis(p)
                        assert bw_invariant(vec, g) == 0

    def test_linear(self):
        g = build_graph(3)
        rng = random.Random(17)
        vs = list(g.vertices)
        for _ in range(40):
            c1 = {v: Fraction(rng.randint(-3, 3)) for v in rng.sample(vs, 3)}
            c2 = {v: Fraction(rng.randint(-3, 3)) for v in rng.sample(vs, 3)}
            merged = {v: c1.get(v, Fraction(0)) + c2.get(v, Fraction(0)) for v in set(c1) | set(c2)}
            lhs = bw_invariant(StarVector(4, merged), g)
            rhs = bw_invariant(StarVector(4, c1), g) + bw_invariant(StarVector(4, c2), g)
            assert lhs == rhs

    def test_degree_mismatch(self):
        g = build_graph(2)
        with pytest.raises(DegreeMismatchError):
            bw_invariant(StarVector(2, {star_class(w("aa")): Fraction(1)}), g)

    def test_zero_vector(self):
        g = build_graph(2)
        assert bw_invariant(StarVector(3, {}), g) == 0


class TestDegreeGenerated:
    def test_k1_frozen(self):
        r = degree_generated(1)
        assert r == GenerationReport(
            1, 2, 1, False, star_class(w("aa")), Fraction(1)
        )

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_never_generated(self, k):
        r = degree_generated(k)
        assert not r.generated
        assert r.component_dim == 1 << k
        assert r.span_rank <= r.component_dim - 1
        assert r.witness == star_class(Word(0, k + 1))
        assert abs(r.witness_invariant) == 1

    def test_rank_matches_rational_oracle(self):
        for k in range(1, 5):
            rows = product_rows(k)
            assert rank_fraction_free(rows) == rank_rational(rows)

    def test_rank_is_row_order_independent(self):
        rng = random.Random(29)
        for k in range(1, 5):
            rows = product_rows(k)
            base = rank_fraction_free(rows)
            for _ in range(5):
                rng.shuffle(rows)
                assert rank_fraction_free(rows) == base

    def test_rows_have_exactly_two_unit_entries(self):
        for k in range(1, 6):
            for row in product_rows(k):
                assert sorted(set(row)) in ([0, 1], [1])
                assert sum(row) == 2

    def test_budget(self):
        with pytest.raises(ResourceLimitError):
            degree_generated(9, dim_budget=256)
        with pytest.raises(ValueError):
            degree_generated(0)

    def test_json_field_order(self):
        data = degree_generated(2).to_json_dict()
        assert list(data) == [
            "k",
            "component_dim",
            "span_rank",
            "generated",
            "witness",
            "witness_invariant",
        ]
        assert data["witness"] == "aaa"
        assert data["witness_invariant"] == "1"
        assert data["generated"] is False


class TestPairReduction:
    @pytest.mark.parametrize("k,t", [(2, 3), (3, 3), (3, 4), (4, 3)])
    def test_holds(self, k, t):
        assert verify_pair_reduction(k, t)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            verify_pair_reduction(1, 3)
        with pytest.raises(ValueError):
            verify_pair_reduction(3, 2)
        with pytest.raises(ValueError):
            verify_pair_reduction(3, 5)


class TestScan:
    def test_small_scan(self):
        reports = finite_generation_scan(3)
        assert [r.k for r in reports] == [1, 2, 3]
        assert all(not r.generated for r in reports)

    def test_kmax_validation(self):
        with pytest.raises(ValueError):
            finite_generation_scan(0)

    def test_budget_propagates(self):
        with pytest.raises(ResourceLimitError):
            finite_generation_scan(9, dim_budget=64)
