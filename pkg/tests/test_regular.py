import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquedyn import (
    are_isomorphic,
    canonical_form,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_connected,
    matching_graph,
    random_regular,
    two_switch,
)
from cliquedyn.regular import (
    RegularGenSpec,
    _pruned_labeled_regular,
    enumerate_regular,
    enumerate_regular_brute,
)


def classes(k, n, **kw):
    return list(enumerate_regular(RegularGenSpec(k=k, n=n, **kw)))


def canon_set(graphs):
    return {canonical_form(g) for g in graphs}


def test_cubic_small_counts():
    assert len(classes(3, 4)) == 1
    assert are_isomorphic(classes(3, 4)[0], complete_graph(4))
    conn6 = classes(3, 6, connected_only=True)
    assert len(conn6) == 2


def test_two_regular_partition_counts():
    # one class per partition of n into cycle lengths >= 3
    expected = {3: 1, 4: 1, 5: 1, 6: 2, 7: 2, 8: 3, 9: 4}
    for n, count in expected.items():
        assert len(classes(2, n)) == count


def test_two_regular_n9_members():
    got = canon_set(classes(2, 9))
    want = canon_set(
        [
            cycle_graph(9),
            disjoint_union([cycle_graph(3), cycle_graph(6)]),
            disjoint_union([cycle_graph(4), cycle_graph(5)]),
            disjoint_union([cycle_graph(3)] * 3),
        ]
    )
    assert got == want


def test_unsatisfiable_spec_warns_and_yields_nothing():
    with pytest.warns(UserWarning):
        assert classes(3, 7) == []
    with pytest.warns(UserWarning):
        assert classes(5, 4) == []


def test_deterministic_output_order():
    a = [canonical_form(g) for g in classes(3, 8)]
    b = [canonical_form(g) for g in classes(3, 8)]
    assert a == b == sorted(a)


def test_ceiling_is_enforced():
    with pytest.raises(ValueError):
        classes(4, 12)
    with pytest.raises(ValueError):
        classes(3, 16)  # default cubic ceiling is 14
    # explicit override allows it (kept tiny here: n=16 would be slow)
    assert len(list(enumerate_regular(RegularGenSpec(k=4, n=9), ceiling=9))) == 16


@pytest.mark.parametrize("k,n", [(3, 4), (3, 6), (1, 6), (2, 7), (2, 8), (4, 7)])
def test_matches_brute_force_fast_cases(k, n):
    assert canon_set(classes(k, n)) == canon_set(enumerate_regular_brute(k, n))


@pytest.mark.slow
@pytest.mark.parametrize("k,n", [(3, 8), (4, 8), (5, 8), (2, 6)])
def test_matches_brute_force_slow_cases(k, n):
    assert canon_set(classes(k, n)) == canon_set(enumerate_regular_brute(k, n))


@pytest.mark.slow
def test_cubic_expansion_matches_generic_dfs_at_n10():
    # two independent exhaustive routes must agree
    from cliquedyn.canon import canonical_graph

    via_expansion = canon_set(classes(3, 10))
    via_dfs = {canonical_form(g) for g in _pruned_labeled_regular(10, 3)}
    assert via_expansion == via_dfs
    assert len(via_expansion) == 21


def _has_reducible_edge(g):
    # edge {x,y} is reducible when deleting x,y and reconnecting their
    # other neighbors pairwise keeps the graph simple
    from cliquedyn import bits

    for x, y in g.edges():
        a, b = (w for w in bits(g.rows[x]) if w != y)
        c, d = (w for w in bits(g.rows[y]) if w != x)
        if g.has_edge(a, b) or g.has_edge(c, d):
            continue
        if {a, b} == {c, d}:
            continue
        return True
    return False


@pytest.mark.parametrize("n", [6, 8, 10])
def test_irreducible_family_matches_census(n):
    # the explicitly constructed irreducible family must be exactly the
    # connected classes without a reducible edge
    from cliquedyn.regular import _irreducible_cubic_connected

    family = canon_set(_irreducible_cubic_connected(n))
    census = {
        canonical_form(g)
        for g in classes(3, n, connected_only=True)
        if not _has_reducible_edge(g)
    }
    assert family == census


@pytest.mark.slow
@pytest.mark.parametrize("n", [12, 14])
def test_irreducible_family_matches_census_large(n):
    from cliquedyn.regular import _irreducible_cubic_connected

    spec = RegularGenSpec(k=3, n=n, connected_only=True)
    family = canon_set(_irreducible_cubic_connected(n))
    census = {
        canonical_form(g)
        for g in enumerate_regular(spec)
        if not _has_reducible_edge(g)
    }
    assert family == census


def test_cubic_known_class_counts():
    assert len(classes(3, 6)) == 2
    assert len(classes(3, 8)) == 6
    assert len(classes(3, 8, connected_only=True)) == 5
    assert len(classes(3, 10, connected_only=True)) == 19


@pytest.mark.slow
def test_cubic_n12_counts():
    assert len(classes(3, 12, connected_only=True)) == 85
    assert len(classes(3, 12)) == 94


def test_complement_route():
    # 5-regular on 8 vertices enumerates via 2-regular complements
    got = classes(5, 8)
    assert len(got) == 3
    assert all(set(g.degrees()) == {5} for g in got)


def test_degenerate_degrees():
    assert len(classes(0, 5)) == 1
    assert len(classes(6, 7)) == 1
    assert are_isomorphic(classes(1, 6)[0], matching_graph(3))


def test_two_switch_c4():
    c4 = cycle_graph(4)
    out = two_switch(c4, (1, 2), (3, 0))
    assert sorted(out.edges()) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert are_isomorphic(out, cycle_graph(4))


def test_two_switch_c6_gives_relabeled_c6():
    # replacing {0,1},{3,4} by {0,3},{1,4} re-wires C_6 into another 6-cycle
    out = two_switch(cycle_graph(6), (0, 1), (3, 4))
    assert are_isomorphic(out, cycle_graph(6))
    # the other orientation of the same edge pair splits into two triangles
    out2 = two_switch(cycle_graph(6), (0, 1), (4, 3))
    assert are_isomorphic(out2, disjoint_union([cycle_graph(3), cycle_graph(3)]))


def test_two_switch_errors_name_failed_pair():
    c4 = cycle_graph(4)
    with pytest.raises(ValueError, match="not an edge"):
        two_switch(c4, (0, 2), (1, 3))
    with pytest.raises(ValueError, match="already adjacent"):
        two_switch(cycle_graph(5), (0, 1), (4, 3))
    with pytest.raises(ValueError, match="distinct"):
        two_switch(c4, (0, 1), (1, 2))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_two_switch_preserves_degrees(seed):
    import random as _random

    rng = _random.Random(seed)
    g = random_regular(3, 10, seed=seed)
    edges = list(g.edges())
    for _ in range(20):
        e1 = rng.choice(edges)
        e2 = rng.choice(edges)
        if rng.getrandbits(1):
            e2 = (e2[1], e2[0])
        try:
            g2 = two_switch(g, e1, e2)
        except ValueError:
            continue
        assert g2.degrees() == g.degrees()
        g = g2
        edges = list(g.edges())


def test_random_regular_unique_small_classes():
    # only one 1-regular graph on 6 vertices and one 2-regular on 5
    assert are_isomorphic(random_regular(1, 6, seed=5), matching_graph(3))
    assert are_isomorphic(random_regular(2, 5, seed=9), cycle_graph(5))


def test_random_regular_deterministic():
    a = random_regular(3, 12, seed=123)
    b = random_regular(3, 12, seed=123)
    assert a == b
    c = random_regular(3, 12, seed=124)
    assert a != c


def test_random_regular_is_regular():
    for k, n, seed in [(3, 10, 0), (4, 11, 1), (6, 20, 2), (5, 12, 3)]:
        g = random_regular(k, n, seed=seed)
        assert set(g.degrees()) == {k}
        g.validate()


def test_random_regular_rejects_bad_params():
    with pytest.raises(ValueError):
        random_regular(3, 5, seed=0)
    with pytest.raises(ValueError):
        random_regular(5, 5, seed=0)


def test_random_mode_stream():
    spec = RegularGenSpec(k=3, n=8, mode="random", count=5, seed=7)
    got = list(enumerate_regular(spec))
    assert len(got) == 5
    assert all(set(g.degrees()) == {3} for g in got)
