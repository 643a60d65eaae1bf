"""Graph construction, transforms, stable sets, classification, enumeration."""

import itertools

import pytest

from koszulforge.errors import InputError, ResourceCapError
from koszulforge.graphs import (Graph, are_isomorphic, classify, complement,
                                complete, cycle, enumerate_graphs, graph,
                                graph_from_json, induced, is_bipartite,
                                parse_graph, path, stable_sets, union)


def brute_force_stable_sets(g):
    """Independent oracle: check every subset directly."""
    out = []
    for r in range(g.n + 1):
        for subset in itertools.combinations(range(1, g.n + 1), r):
            if all(not g.has_edge(i, j)
                   for i, j in itertools.combinations(subset, 2)):
                out.append(subset)
    return sorted(out, key=lambda s: (len(s), s))


def test_graph_validation():
    with pytest.raises(InputError):
        graph(3, [(1, 1)])
    with pytest.raises(InputError):
        graph(3, [(0, 2)])
    with pytest.raises(InputError):
        graph(3, [(2, 4)])
    g = graph(3, [(2, 1), (1, 2)])  # normalizes and dedups
    assert g.edges == frozenset({(1, 2)})


def test_parse_families():
    assert parse_graph("cycle(7)").n == 7
    assert len(parse_graph("cycle(7)").edges) == 7
    assert len(parse_graph("complete(5)").edges) == 10
    assert len(parse_graph("path(4)").edges) == 3
    g = parse_graph("complement(cycle(7))")
    assert g.n == 7 and len(g.edges) == 21 - 7


def test_parse_nested_and_union():
    g = parse_graph("union(cycle(5), complete(1))")
    assert g.n == 6 and len(g.edges) == 5
    gg = parse_graph("complement(complement(cycle(6)))")
    assert gg == cycle(6)


def test_parse_paper_terms():
    g1 = parse_graph("paper:G1")
    assert g1.n == 6
    assert g1.edges == frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
                                  (1, 6), (1, 5), (2, 6)})
    fam1 = parse_graph("paper:family(1)")
    assert fam1.n == 9
    comp = complement(fam1)
    assert comp.edges == frozenset({(1, 2), (2, 3), (3, 4), (4, 5), (5, 6),
                                    (6, 7), (1, 7), (8, 9)})
    cb = parse_graph("paper:cbar(3)")
    assert cb == complement(cycle(7))


def test_parse_errors():
    for bad in ("", "cycle(2)", "paper:cbar(2)", "paper:family(0)",
                "triangle(3)", "cycle(3) extra", "paper:G9"):
        with pytest.raises(InputError):
            parse_graph(bad)


def test_parse_json_and_edge_text():
    g = parse_graph('{"n": 4, "edges": [[1, 2], [3, 4]]}')
    assert g.n == 4 and g.edges == frozenset({(1, 2), (3, 4)})
    g2 = parse_graph("1 2\n# a comment\n2 3\n")
    assert g2.n == 3 and len(g2.edges) == 2
    with pytest.raises(InputError):
        parse_graph('{"n": 2, "edges": [[1, 5]]}')
    assert graph_from_json({"n": 2, "edges": []}).n == 2


def test_transforms():
    g = cycle(5)
    assert complement(complement(g)) == g
    assert induced(cycle(5), [1, 2, 3, 4]) == path(4)
    h = union(path(2), path(3))
    assert h.n == 5
    assert (4, 5) in h.edges and (1, 2) in h.edges
    with pytest.raises(InputError):
        induced(g, [0, 1])
    # the pentagon's complement is the pentagon again
    assert are_isomorphic(complement(cycle(5)), cycle(5))


def test_g3_complement_is_hexagon():
    assert are_isomorphic(complement(parse_graph("paper:G3")), cycle(6))
    assert is_bipartite(complement(parse_graph("paper:G3")))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_stable_sets_against_brute_force(n):
    for g in (cycle(max(n, 3)), complete(n), path(n)):
        fam = stable_sets(g)
        assert list(fam.sets) == brute_force_stable_sets(g)


def test_stable_sets_cycle5():
    fam = stable_sets(cycle(5))
    assert len(fam.sets) == 11
    assert fam.alpha == 2


def test_stable_sets_complete():
    fam = stable_sets(complete(6))
    assert list(fam.sets) == [()] + [(i,) for i in range(1, 7)]
    assert fam.alpha == 1


def test_stable_sets_odd_cycle_complements():
    for k in range(3, 9):
        fam = stable_sets(parse_graph(f"paper:cbar({k})"))
        assert len(fam.sets) == 4 * k + 3
        assert fam.alpha == 2
        # the sets are exactly the empty set, singletons, and cyclic pairs
        n = 2 * k + 1
        pairs = {s for s in fam.sets if len(s) == 2}
        assert pairs == {(i, i + 1) for i in range(1, n)} | {(1, n)}


def test_stable_sets_every_pair_is_nonedge():
    for spec in ("paper:G1", "paper:G2", "paper:G5", "cycle(6)"):
        g = parse_graph(spec)
        for s in stable_sets(g).sets:
            for i, j in itertools.combinations(s, 2):
                assert not g.has_edge(i, j)


def test_classify_cycle5():
    flags = classify(cycle(5))
    assert not flags.bipartite
    assert flags.almost_bipartite
    assert not flags.comparability
    assert not flags.perfect


def test_classify_cbar7():
    flags = classify(parse_graph("complement(cycle(7))"))
    assert not flags.perfect
    assert not flags.comparability
    assert not flags.almost_bipartite
    assert not flags.complement_bipartite


def test_classify_complete4():
    flags = classify(complete(4))
    assert not flags.bipartite
    assert flags.comparability
    assert flags.perfect
    assert flags.max_cliques_equicardinal


def test_classify_bipartite_implications():
    for spec in ("path(5)", "cycle(6)", "complete(3)", "paper:G2", "cycle(5)"):
        flags = classify(parse_graph(spec))
        if flags.bipartite:
            assert flags.almost_bipartite and flags.perfect
        if flags.comparability:
            assert flags.perfect


def test_classify_complement_flag_consistency():
    for spec in ("cycle(5)", "paper:G3", "complete(4)"):
        g = parse_graph(spec)
        assert classify(g).complement_bipartite == classify(complement(g)).bipartite


def test_classify_size_cap():
    with pytest.raises(ResourceCapError):
        classify(complete(13))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_enumerate_counts(n, count):
    assert len(enumerate_graphs(n)) == count


def test_enumerate_counts_n6():
    assert len(enumerate_graphs(6)) == 156


def test_enumerate_matches_brute_force_dedup_n4():
    # oracle: dedup all 2^6 edge sets by permutation-search isomorphism
    pairs = list(itertools.combinations(range(1, 5), 2))
    reps: list[Graph] = []
    for bits in range(1 << 6):
        g = graph(4, [pairs[i] for i in range(6) if (bits >> i) & 1])
        if not any(are_isomorphic(g, h) for h in reps):
            reps.append(g)
    assert len(reps) == len(enumerate_graphs(4)) == 11


def test_enumerate_pairwise_noniso_n5():
    graphs5 = enumerate_graphs(5)
    for g, h in itertools.combinations(graphs5, 2):
        assert not are_isomorphic(g, h)


def test_enumerate_is_deterministic():
    a = [g.to_json() for g in enumerate_graphs(4)]
    b = [g.to_json() for g in enumerate_graphs(4)]
    assert a == b


def test_enumerate_range_check():
    with pytest.raises(InputError):
        enumerate_graphs(0)
    with pytest.raises(InputError):
        enumerate_graphs(8)


def test_alpha_one_iff_complete():
    for spec in ("complete(2)", "complete(5)", "cycle(4)", "path(3)",
                 "paper:G2"):
        g = parse_graph(spec)
        fam = stable_sets(g)
        is_complete = len(g.edges) == g.n * (g.n - 1) // 2
        assert (fam.alpha == 1) == is_complete
