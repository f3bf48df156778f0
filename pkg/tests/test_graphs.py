import math
import random
from collections import Counter

import numpy as np
import pytest
import sympy

from hornlr import (
    BipartiteGraph,
    Graph,
    InputError,
    Partition,
    bipartite_complement,
    char_poly_exact,
    clique_number,
    complete_bipartite,
    connected_bipartite_graphs,
    degree_partitions,
    diameter,
    disjoint_union,
    even_cycle,
    integer_spectrum,
    line_graph,
    matching,
    numeric_spectrum,
    star_decomposition,
)
from hornlr.graphs import (
    expand_root_multiset,
    graph_to_json_dict,
    graph_to_text,
    is_bipartite_graph,
    is_connected,
    parse_graph_json,
    parse_graph_text,
    root_multiplicity,
)

from oracles import brute_force_clique, poly_mul


def _triangle():
    return Graph(3, [(0, 1), (1, 2), (0, 2)])


def _cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def _random_graph(rng, n, p=0.5):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# constructions


def test_line_graph_examples():
    lg, order = line_graph(complete_bipartite(1, 3))
    assert lg == _triangle()
    assert order == ((0, 0), (0, 1), (0, 2))

    lg, _ = line_graph(complete_bipartite(2, 2))
    assert sorted(lg.degrees()) == [2, 2, 2, 2]
    assert diameter(lg) == 2  # C_4

    lg, _ = line_graph(BipartiteGraph(1, 1, [(0, 0)]))
    assert lg.order == 1 and lg.edges() == []

    with pytest.raises(InputError):
        line_graph(BipartiteGraph(2, 2, []))


def test_star_decomposition_examples():
    gx, gy = star_decomposition(complete_bipartite(1, 3))
    assert gx == _triangle()
    assert gy.edges() == []

    gx, gy = star_decomposition(complete_bipartite(2, 2))
    assert sorted(gx.degrees()) == [1, 1, 1, 1]
    assert sorted(gy.degrees()) == [1, 1, 1, 1]


def test_star_decomposition_sums_to_line_graph():
    rng = random.Random(2)
    for _ in range(60):
        bg = _random_bipartite(rng)
        if bg.edge_count == 0:
            continue
        lg, _ = line_graph(bg)
        gx, gy = star_decomposition(bg)
        ax = np.array(gx.adjacency_rows())
        ay = np.array(gy.adjacency_rows())
        assert (ax + ay == np.array(lg.adjacency_rows())).all()


def _random_bipartite(rng, max_side=4, p=0.5):
    m, n = rng.randint(1, max_side), rng.randint(1, max_side)
    edges = [(i, j) for i in range(m) for j in range(n) if rng.random() < p]
    return BipartiteGraph(m, n, edges)


def test_degree_partitions_examples():
    assert degree_partitions(complete_bipartite(1, 3)) == (
        Partition([3]),
        Partition([1, 1, 1]),
    )
    assert degree_partitions(complete_bipartite(2, 2)) == (
        Partition([2, 2]),
        Partition([2, 2]),
    )
    for s in (2, 3, 4):
        alpha, beta = degree_partitions(complete_bipartite(s, s))
        assert alpha == beta == Partition([s] * s)


def test_degree_partitions_names_isolated_vertex():
    bg = BipartiteGraph(2, 1, [(0, 0)])
    with pytest.raises(InputError, match="x1"):
        degree_partitions(bg)
    bg = BipartiteGraph(1, 2, [(0, 1)])
    with pytest.raises(InputError, match="y0"):
        degree_partitions(bg)


def test_degree_partition_sizes_match_edge_count():
    rng = random.Random(4)
    for _ in range(50):
        bg = _random_bipartite(rng)
        if 0 in bg.x_degrees() or 0 in bg.y_degrees():
            continue
        alpha, beta = degree_partitions(bg)
        assert alpha.size == beta.size == bg.edge_count
        assert alpha.length == bg.x_size and beta.length == bg.y_size


# ---------------------------------------------------------------------------
# exact spectra


def test_char_poly_examples():
    assert char_poly_exact(Graph(1)) == (1, 0)  # x
    assert char_poly_exact(Graph(2, [(0, 1)])) == (1, 0, -1)  # x^2 - 1
    assert char_poly_exact(_cycle_graph(4)) == (1, 0, -4, 0, 0)  # x^4 - 4x^2


def test_char_poly_matches_sympy_on_random_graphs():
    rng = random.Random(6)
    x = sympy.symbols("x")
    for _ in range(25):
        g = _random_graph(rng, rng.randint(1, 7))
        expected = sympy.Matrix(g.adjacency_rows()).charpoly(x).all_coeffs()
        assert list(char_poly_exact(g)) == [int(c) for c in expected]


def test_integer_spectrum_examples():
    assert integer_spectrum(_cycle_graph(4)) == ((2, 1), (0, 2), (-2, 1))
    assert integer_spectrum(_triangle()) == ((2, 1), (-1, 2))
    assert integer_spectrum(_cycle_graph(5)) is None


def test_integer_spectrum_consistency_with_numeric():
    rng = random.Random(8)
    for _ in range(40):
        g = _random_graph(rng, rng.randint(1, 8))
        numeric = numeric_spectrum(g)
        roots = integer_spectrum(g)
        if roots is not None:
            exact = expand_root_multiset(roots)
            assert len(exact) == g.order
            assert max(abs(a - b) for a, b in zip(exact, numeric)) < 1e-9
        else:
            assert any(abs(v - round(v)) > 1e-9 for v in numeric)


def test_root_multiplicity():
    poly = char_poly_exact(_cycle_graph(4))
    assert root_multiplicity(poly, 0) == 2
    assert root_multiplicity(poly, 2) == 1
    assert root_multiplicity(poly, 1) == 0


def test_numeric_spectrum_examples():
    assert numeric_spectrum(Graph(2, [(0, 1)])) == pytest.approx([1, -1])
    assert numeric_spectrum(_cycle_graph(4)) == pytest.approx([2, 0, 0, -2])


# ---------------------------------------------------------------------------
# metrics


def test_diameter_examples():
    assert diameter(_triangle()) == 1
    assert diameter(_cycle_graph(4)) == 2
    assert diameter(Graph(2)) == math.inf
    assert diameter(Graph(1)) == 0


def test_clique_examples():
    assert clique_number(_triangle()) == 3
    assert clique_number(_cycle_graph(4)) == 2
    lg, _ = line_graph(complete_bipartite(2, 3))
    assert clique_number(lg) == 3


def test_clique_matches_brute_force():
    rng = random.Random(10)
    for _ in range(40):
        g = _random_graph(rng, rng.randint(1, 9), p=rng.choice([0.2, 0.5, 0.8]))
        assert clique_number(g) == brute_force_clique(g)


def test_line_graph_clique_equals_max_degree():
    rng = random.Random(12)
    for _ in range(40):
        bg = _random_bipartite(rng)
        degs = bg.x_degrees() + bg.y_degrees()
        if max(degs, default=0) < 2:
            continue
        lg, _ = line_graph(bg)
        assert clique_number(lg) == max(degs)


def test_connectivity_and_bipartiteness():
    assert is_connected(_triangle())
    assert not is_connected(Graph(2))
    assert is_bipartite_graph(_cycle_graph(4))
    assert not is_bipartite_graph(_cycle_graph(5))
    assert complete_bipartite(2, 3).is_connected()
    assert not matching(2).is_connected()


# ---------------------------------------------------------------------------
# complement and generators


def test_bipartite_complement_examples():
    for s in (2, 3):
        assert bipartite_complement(complete_bipartite(s, s)).edge_count == 0
    rng = random.Random(14)
    for _ in range(30):
        bg = _random_bipartite(rng)
        assert bipartite_complement(bipartite_complement(bg)) == bg
    for s in (3, 4):
        comp = bipartite_complement(matching(s + 1))
        assert comp.regular_degree() == s
        assert comp.x_size == comp.y_size == s + 1


def test_generators():
    c4 = even_cycle(4)
    k22 = complete_bipartite(2, 2)
    assert sorted(c4.x_degrees() + c4.y_degrees()) == sorted(
        k22.x_degrees() + k22.y_degrees()
    )
    assert integer_spectrum(c4.as_graph()) == integer_spectrum(k22.as_graph())

    two_c6 = disjoint_union([even_cycle(6), even_cycle(6)])
    assert two_c6.order == 12 and two_c6.edge_count == 12
    assert two_c6.regular_degree() == 2

    comp = bipartite_complement(two_c6)
    assert comp.regular_degree() == 4
    assert comp.x_size == comp.y_size == 6

    with pytest.raises(InputError):
        even_cycle(5)
    with pytest.raises(InputError):
        even_cycle(2)


def test_even_cycle_really_is_a_cycle():
    for length in (4, 6, 8, 10):
        g = even_cycle(length).as_graph()
        assert g.order == length
        assert set(g.degrees()) == {2}
        assert is_connected(g)
        assert diameter(g) == length // 2


def test_regular_complement_char_poly_identity():
    # for an s-regular bipartite graph on classes of size n:
    # p(x) * (x^2 - (n-s)^2) == p_complement(x) * (x^2 - s^2)
    cases = [
        disjoint_union([even_cycle(4), even_cycle(4)]),
        disjoint_union([even_cycle(6), even_cycle(6)]),
        complete_bipartite(3, 3),
        matching(4),
        bipartite_complement(matching(5)),
    ]
    for bg in cases:
        s = bg.regular_degree()
        assert s is not None
        n = bg.x_size
        p = list(char_poly_exact(bg.as_graph()))
        q = list(char_poly_exact(bipartite_complement(bg).as_graph()))
        lhs = poly_mul(p, [1, 0, -((n - s) ** 2)])
        rhs = poly_mul(q, [1, 0, -(s**2)])
        assert lhs == rhs, (bg, s, n)


# ---------------------------------------------------------------------------
# line graph spectral laws


def test_minus_two_multiplicity_law_on_small_corpus():
    count = 0
    for bg in connected_bipartite_graphs(6):
        lg, _ = line_graph(bg)
        e, nu = lg.order, bg.order
        poly = char_poly_exact(lg)
        assert root_multiplicity(poly, -2) == e - nu + 1
        # numeric clustering agrees
        numeric = numeric_spectrum(lg)
        assert sum(1 for v in numeric if abs(v + 2) < 1e-6) == e - nu + 1
        count += 1
    assert count == 27  # 1 + 1 + 3 + 5 + 17 connected bipartite graphs on 2..6 vertices


def test_least_line_graph_eigenvalue_is_at_least_minus_two():
    rng = random.Random(16)
    for _ in range(40):
        bg = _random_bipartite(rng)
        if bg.edge_count == 0:
            continue
        lg, _ = line_graph(bg)
        assert numeric_spectrum(lg)[-1] >= -2 - 1e-9


def test_star_factor_spectrum_is_shifted_degree_partition():
    rng = random.Random(18)
    for _ in range(40):
        bg = _random_bipartite(rng)
        if 0 in bg.x_degrees() or 0 in bg.y_degrees():
            continue
        alpha, _ = degree_partitions(bg)
        gx, _ = star_decomposition(bg)
        roots = integer_spectrum(gx)
        assert roots is not None  # disjoint cliques are integral
        shifted = Counter(v + 1 for v in expand_root_multiset(roots))
        expected = Counter(alpha.parts)
        expected[0] += bg.edge_count - bg.x_size
        expected = Counter({v: m for v, m in expected.items() if m})
        assert shifted == expected


# ---------------------------------------------------------------------------
# file formats


def test_text_format_round_trip():
    bg = complete_bipartite(2, 3)
    assert parse_graph_text(graph_to_text(bg)) == bg
    text = "X 1\nY 3\n0 0\n0 1\n0 2\n"
    assert parse_graph_text(text) == complete_bipartite(1, 3)


def test_json_format_round_trip():
    import json

    bg = bipartite_complement(matching(3))
    assert parse_graph_json(json.dumps(graph_to_json_dict(bg))) == bg


def test_format_errors():
    from hornlr import FormatError

    for bad in ["", "X 2\n", "X a\nY 2\n", "X 1\nY 1\n0\n", "X 1\nY 1\n0 0\n0 0\n"]:
        with pytest.raises(FormatError):
            parse_graph_text(bad)
    for bad in ["{]", "[]", '{"x_size": 1}', '{"x_size":1,"y_size":1,"edges":[[0,0],[0,0]]}']:
        with pytest.raises(FormatError):
            parse_graph_json(bad)


# ---------------------------------------------------------------------------
# corpus generator


def test_connected_bipartite_counts():
    # published counts of connected bipartite graphs on 2..8 nodes
    expected = {2: 1, 3: 1, 4: 3, 5: 5, 6: 17, 7: 44, 8: 182}
    got = Counter(bg.order for bg in connected_bipartite_graphs(8))
    assert dict(got) == expected


def test_corpus_members_are_connected_and_isolated_free():
    for bg in connected_bipartite_graphs(6):
        assert bg.is_connected()
        assert 0 not in bg.x_degrees() and 0 not in bg.y_degrees()
        assert bg.x_size <= bg.y_size


def test_corpus_dedup_matches_pairwise_isomorphism():
    # brute-force check that no two emitted order-<=6 graphs are isomorphic
    graphs = [bg for bg in connected_bipartite_graphs(6)]
    from itertools import permutations

    def isomorphic(g1, g2):
        if (g1.x_size, g1.y_size) != (g2.x_size, g2.y_size):
            return False
        e2 = set(g2.sorted_edges)
        swaps = [False, True] if g1.x_size == g1.y_size else [False]
        for swap in swaps:
            e1 = (
                set(g1.sorted_edges)
                if not swap
                else {(y, x) for x, y in g1.sorted_edges}
            )
            if len(e1) != len(e2):
                continue
            for pm in permutations(range(g2.x_size)):
                for pn in permutations(range(g2.y_size)):
                    if {(pm[x], pn[y]) for x, y in e1} == e2:
                        return True
        return False

    for i, g1 in enumerate(graphs):
        for g2 in graphs[i + 1 :]:
            assert not isomorphic(g1, g2)
