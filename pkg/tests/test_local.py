import pytest

from sigmaroots import (
    BudgetExceeded,
    DimVector,
    RepType,
    UGraph,
    Weight,
    ext_dim,
    local_graph,
    parse_rep_type,
    refine_type,
    rep_types,
    underlying_graph,
)

from helpers import brute_rep_types, quiver_d4_tilde


def test_ext_dim_examples(a2, kronecker):
    assert ext_dim(kronecker, (1, 0), (0, 1)) == 2
    assert ext_dim(a2, (1, 0), (0, 1)) == 1
    for b, c in [((1, 0), (0, 1)), ((2, 1), (1, 1))]:
        assert ext_dim(kronecker, b, c) == ext_dim(kronecker, c, b)


def test_local_graph_vertex_simples(kronecker):
    g = local_graph(kronecker, [(1, 0), (0, 1)])
    assert g.l == 2
    assert g.loops == (0, 0)
    assert g.edge(0, 1) == 2


def test_local_graph_two_loop(two_loop):
    g = local_graph(two_loop, [(1,)])
    assert g.l == 1
    assert g.loops == (4,)


def test_local_graph_repeated_part(kronecker):
    g = local_graph(kronecker, [(1, 1), (1, 1)])
    assert g.loops == (2, 2)
    assert g.edge(0, 1) == 0


def test_local_graph_reproduces_underlying_graph(a3, d4_tilde):
    for q in (a3, d4_tilde):
        simples = [DimVector(1 if i == v else 0 for i in range(q.k)) for v in range(q.k)]
        assert local_graph(q, simples) == underlying_graph(q)


def test_local_graph_rejects_negative_counts(a2):
    # sym((1,0),(1,0)) = 2 would prescribe -2 edges between the two copies
    with pytest.raises(ValueError):
        local_graph(a2, [(1, 0), (1, 0)])


def test_loops_even_edges_match_ext(kronecker):
    parts = [(1, 0), (0, 1), (1, 1)]
    g = local_graph(kronecker, parts)
    assert all(x % 2 == 0 for x in g.loops)
    for i in range(3):
        for j in range(i + 1, 3):
            assert g.edge(i, j) == ext_dim(kronecker, parts[i], parts[j])


def test_rep_types_kronecker_small(kronecker):
    got = rep_types(kronecker, [0, 0], (1, 1))
    assert [t.label() for t in got] == ["(1,0,1);(1,1,0)"]


def test_rep_types_exclude_trivial(kronecker):
    got = rep_types(kronecker, [0, 0], (1, 1))
    assert all(t.parts != ((1, DimVector((1, 1))),) for t in got)


def test_rep_types_vertex_simple_empty(a2):
    assert rep_types(a2, [0, 0], (1, 0)) == []


def test_rep_types_match_brute_oracle(kronecker, a2, jordan, two_loop):
    for q in (kronecker, a2, jordan, two_loop):
        lam = Weight.zeros(q.k)
        bound = DimVector([3] * q.k)
        from sigmaroots.quiver import iter_box

        for a in iter_box(bound):
            got = {t.parts for t in rep_types(q, lam, a)}
            assert got == brute_rep_types(q, lam, a)


def test_rep_types_revalidate(kronecker):
    from sigmaroots import SigmaContext

    ctx = SigmaContext(kronecker, Weight.zeros(2))
    for t in rep_types(kronecker, [0, 0], (2, 2), context=ctx):
        assert t.total() == (2, 2)
        betas = t.betas
        assert len(set(betas)) == len(betas)
        for beta in betas:
            assert ctx.is_member(beta)


def test_rep_types_budget(kronecker):
    with pytest.raises(BudgetExceeded):
        rep_types(kronecker, [0, 0], (2, 2), budget=3)


def test_refine_type_examples(kronecker):
    t = RepType(((2, DimVector((1, 1))),))
    refined = refine_type(kronecker, t)
    assert refined.parts == ((1, (1, 1)), (1, (1, 1)))
    unchanged = refine_type(kronecker, RepType(((2, DimVector((1, 0))),)))
    assert unchanged.parts == ((2, (1, 0)),)
    strict = refine_type(kronecker, t, threshold=1)
    assert strict.parts == ((2, (1, 1)),)


def test_refine_threshold_validation(kronecker):
    with pytest.raises(ValueError):
        refine_type(kronecker, RepType(((1, DimVector((1, 1))),)), threshold=2)


def test_rep_type_parse_and_label():
    t = parse_rep_type("(1,1,0);(1,0,1)", 2)
    assert t.parts == ((1, (0, 1)), (1, (1, 0)))
    assert t.label() == "(1,0,1);(1,1,0)"
    with pytest.raises(ValueError):
        parse_rep_type("(1,1)", 2)
    with pytest.raises(ValueError):
        parse_rep_type("1,1,0", 2)


def test_rep_type_validation():
    with pytest.raises(ValueError):
        RepType(((0, DimVector((1, 0))),))
    with pytest.raises(ValueError):
        RepType(((1, DimVector((0, 0))),))
    with pytest.raises(ValueError):
        RepType(())


def test_ugraph_json_round_trip():
    g = UGraph(3, [(0, 1, 2), (1, 2, 1)], [1, 0, 0])
    assert UGraph.from_json(g.to_json()) == g
    with pytest.raises(ValueError):
        UGraph.from_json({"vertices": 2, "edges": [[1, 1, 1]], "loops": [0, 0]})
    with pytest.raises(ValueError):
        UGraph.from_json({"vertices": 2, "edges": [[1, 3, 1]], "loops": [0, 0]})


def test_ugraph_to_quiver_round_trip(d4_tilde):
    g = underlying_graph(d4_tilde)
    assert underlying_graph(g.to_quiver()) == g
