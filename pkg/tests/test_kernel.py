import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from condcolor.families import (
    FamilySpec,
    gen_complete,
    gen_complete_kpartite,
    gen_cycle,
    gen_gear,
    gen_path,
    line_graph,
    gen_complete_kary_tree,
    gen_windmill,
)
from condcolor.graph import InputError, distance2_neighborhood, max_degree
from condcolor.kernel import (
    Coloring,
    ProblemSpec,
    clamp_r,
    greedy_square_coloring,
    trivial_lower_bound,
    verify_c3,
    verify_conditional,
    verify_proper,
    verify_vset_d2r,
    vset_lower_bound,
)

from conftest import connected_graphs
import oracles


def C(*colors):
    return Coloring.of(colors)


def test_coloring_validation():
    with pytest.raises(InputError):
        Coloring(2, (1, 3))
    with pytest.raises(InputError):
        Coloring(0, ())
    c = C(2, 1, 2)
    assert c.k == 2 and c.classes() == [[0, 2], [1]]
    with pytest.raises(InputError):
        verify_proper(gen_path(2), c)


def test_verify_proper_examples():
    assert verify_proper(gen_cycle(4), C(1, 2, 1, 2)).ok
    assert verify_proper(gen_complete(3), C(1, 1, 2)).by_condition("C1") == [(0, 1)]
    assert verify_proper(gen_path(4), C(1, 2, 3, 1)).ok


def test_verify_conditional_examples():
    rep = verify_conditional(gen_cycle(4), C(1, 2, 1, 2), 2)
    assert rep.by_condition("C2") == [0, 1, 2, 3]
    assert verify_conditional(gen_cycle(6), C(1, 2, 3, 1, 2, 3), 2).ok
    rep = verify_conditional(gen_path(4), C(1, 2, 3, 2), 2)
    assert rep.by_condition("C2") == [2]


def test_surjectivity_flag():
    c = Coloring(4, (1, 2, 3, 1, 2, 3))
    assert verify_conditional(gen_cycle(6), c, 2).by_condition("surjectivity") == [(4,)]
    assert verify_conditional(gen_cycle(6), c, 2, require_surjective=False).ok


def test_verify_c3_examples():
    assert verify_c3(gen_complete(3), 2) == (True, None)
    ok, edge = verify_c3(gen_path(3), 2)
    assert not ok and edge == (0, 1)
    mf2 = FamilySpec.parse("middle(friendship(2))").build()
    assert max_degree(mf2) == 6
    assert verify_c3(mf2, 6)[0]


def test_verify_vset_examples():
    assert verify_vset_d2r(gen_complete(4), range(4), 3) == (True, None)
    assert verify_vset_d2r(gen_path(4), [0, 3], 2) == (False, (0, 3))
    assert verify_vset_d2r(gen_complete(4), range(4), 2) == (False, 0)
    mf2 = FamilySpec.parse("middle(friendship(2))").build()
    # 1-based labels v_1..v_7 and v_10
    assert verify_vset_d2r(mf2, [0, 1, 2, 3, 4, 5, 6, 9], 6) == (True, None)


def test_vset_lower_bound_examples():
    for n in (3, 4, 5, 6):
        assert vset_lower_bound(gen_complete(n), n - 1)[0] == n
    assert vset_lower_bound(FamilySpec.parse("middle(friendship(2))").build(), 6)[0] >= 8
    lw = FamilySpec.parse("line(windmill(3,2))").build()
    assert vset_lower_bound(lw, max_degree(lw))[0] >= 5


@given(connected_graphs(max_n=7), st.integers(1, 4))
def test_vset_lower_bound_is_verified_and_maximum(g, r):
    size, wit = vset_lower_bound(g, r)
    assert len(wit) == size
    assert verify_vset_d2r(g, wit.members, r)[0]
    assert size == oracles.max_vset(g.n, g.edges(), r)


def test_vset_budget_still_valid():
    g = FamilySpec.parse("middle(friendship(3))").build()
    size, wit = vset_lower_bound(g, max_degree(g), budget=3)
    assert verify_vset_d2r(g, wit.members, max_degree(g))[0] and size == len(wit)


def test_trivial_lower_bound_examples():
    assert trivial_lower_bound(gen_gear(3), 4) == 4
    assert trivial_lower_bound(gen_cycle(5), 2) == 3
    lt = line_graph(gen_complete_kary_tree(2, 2))
    # the line graph of the height-2 binary tree has maximum degree 3
    assert max_degree(lt) == 3
    assert trivial_lower_bound(lt, 4) == 4


def test_clamp_logs(caplog):
    with caplog.at_level(logging.INFO, logger="condcolor.kernel"):
        assert clamp_r(gen_cycle(5), 7) == 2
    assert "exceeds maximum degree" in caplog.text
    assert ProblemSpec(gen_windmill(3, 2), 9).effective_r == 4
    with pytest.raises(InputError):
        ProblemSpec(gen_cycle(3), 0)


def test_greedy_square_examples():
    assert greedy_square_coloring(gen_path(3)).colors == (1, 2, 3)
    assert greedy_square_coloring(gen_cycle(4)).colors == (1, 2, 3, 4)
    lt = line_graph(gen_complete_kary_tree(2, 2))
    assert greedy_square_coloring(lt).k <= 5
    with pytest.raises(InputError):
        greedy_square_coloring(gen_path(3), [0, 0, 1])


@given(connected_graphs(max_n=8), st.permutations(range(8)))
def test_greedy_square_separates_distance_two(g, perm):
    order = [v for v in perm if v < g.n]
    c = greedy_square_coloring(g, order)
    for v in range(g.n):
        assert all(c[u] != c[v] for u in distance2_neighborhood(g, v))
    assert verify_conditional(g, c, max_degree(g)).ok


@given(connected_graphs(min_n=2, max_n=7), st.data())
def test_r1_is_properness_and_monotone(g, data):
    k = data.draw(st.integers(1, g.n))
    colors = data.draw(st.lists(st.integers(1, k), min_size=g.n, max_size=g.n))
    c = Coloring(k, tuple(colors))
    r1 = verify_conditional(g, c, 1, require_surjective=False)
    assert r1.ok == verify_proper(g, c).ok
    ok_at = [verify_conditional(g, c, r, require_surjective=False).ok for r in range(1, 5)]
    # once invalid at some r, invalid for all larger r
    assert ok_at == sorted(ok_at, reverse=True)


def test_kpartite_star_c3_fails():
    assert not verify_c3(gen_complete_kpartite([1, 3]), 1)[0]
