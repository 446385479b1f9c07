import pytest
from hypothesis import given, strategies as st

import oracles
from combdyn.core import (
    AntichainA,
    AntichainB,
    DomainError,
    DyckWord,
    NoncrossingMatching,
    OrderSubset,
    Permutation,
    PartialMatching,
    Tableau,
    classify_tunnel,
    dump,
    enumerate_antichains,
    enumerate_antichains_B,
    enumerate_avoiders,
    enumerate_dyck,
    is_321_avoiding,
    parse_antichain,
    reverse_complement,
    tunnels,
)

P = Permutation.parse


def test_permutation_parse_forms():
    assert P("2 4 1 3") == P("2413") == Permutation((2, 4, 1, 3))
    assert str(P("10 1 2 3 4 5 6 7 8 9")) == "10 1 2 3 4 5 6 7 8 9"


@pytest.mark.parametrize("bad", ["1 1 2", "0 1", "1 3", "a b"])
def test_permutation_rejects_non_bijections(bad):
    with pytest.raises(DomainError):
        P(bad)


def test_is_321_avoiding_examples():
    assert is_321_avoiding(P("241358967"))
    assert is_321_avoiding(Permutation.identity(7))
    assert not is_321_avoiding(P("321"))


@pytest.mark.parametrize("n", range(1, 8))
def test_is_321_avoiding_matches_triple_scan(n):
    for p in oracles.all_perms(n):
        assert is_321_avoiding(Permutation(p)) == oracles.avoids_321(p)


def test_enumerate_avoiders_small():
    assert [p.compact() for p in enumerate_avoiders(3)] == ["123", "132", "213", "231", "312"]
    assert [p.compact() for p in enumerate_avoiders(1)] == ["1"]
    with pytest.raises(DomainError):
        list(enumerate_avoiders(0))


@pytest.mark.parametrize("n", range(1, 9))
def test_enumerate_avoiders_against_filter(n):
    got = [p.images for p in enumerate_avoiders(n)]
    assert got == sorted(oracles.avoiders(n))


def test_catalan_counts():
    assert [sum(1 for _ in enumerate_avoiders(n)) for n in range(1, 9)] == [1, 2, 5, 14, 42, 132, 429, 1430]


def test_enumerate_antichains_small():
    assert [list(a.elements) for a in enumerate_antichains(2)] == [[], [(1, 1)]]
    got = {a.elements for a in enumerate_antichains(3)}
    assert got == {(), ((1, 1),), ((2, 2),), ((1, 2),), ((1, 1), (2, 2))}
    assert AntichainA(5, [(1, 3), (3, 4)]) in set(enumerate_antichains(5))


@pytest.mark.parametrize("n", range(1, 7))
def test_enumerate_antichains_against_subsets(n):
    got = {frozenset(a.elements) for a in enumerate_antichains(n)}
    assert got == set(oracles.antichains(n))


def test_enumerate_antichains_B():
    assert [a.elements for a in enumerate_antichains_B(1)] == [(), ((1, 1),)]
    assert sum(1 for _ in enumerate_antichains_B(2)) == 6
    assert AntichainB(4, [(1, 2)]) in set(enumerate_antichains_B(4))


@pytest.mark.parametrize("n", range(1, 8))
def test_enumerate_dyck_against_filter(n):
    assert [d.steps for d in enumerate_dyck(n)] == sorted(oracles.dyck_words(n))


def test_dyck_word_validation():
    for bad in ["UDD", "DU", "UUD", "UXD"]:
        with pytest.raises(DomainError):
            DyckWord(bad)


def test_peaks_and_valleys_use_heights_after_step():
    d = DyckWord("UUDUDD")
    assert d.peaks() == [(2, 2), (4, 2)]
    assert d.valleys() == [(3, 1)]


def test_tunnels_examples():
    pairs = [(t.open, t.close) for t in tunnels(DyckWord("UUUDUDDDUD"))]
    assert sorted(pairs) == [(1, 8), (2, 7), (3, 4), (5, 6), (9, 10)]
    n = 4
    assert [(t.open, t.close) for t in tunnels(DyckWord("UD" * n))] == [(1, 2), (3, 4), (5, 6), (7, 8)]
    nested = tunnels(DyckWord("U" * n + "D" * n))
    assert sorted((t.open, t.close) for t in nested) == [(k, 2 * n + 1 - k) for k in range(1, n + 1)]
    assert all(t.kind == "centered" for t in nested)


def test_tunnel_classes():
    n = 5
    assert classify_tunnel(1, 10, n) == "centered"
    assert classify_tunnel(3, 4, n) == "left"
    assert classify_tunnel(7, 8, n) == "right"
    assert classify_tunnel(2, 7, n) == "left-across"
    assert classify_tunnel(4, 9, n) == "right-across"


@pytest.mark.parametrize("n", range(1, 8))
def test_tunnel_classes_partition_midline_crossings(n):
    for d in enumerate_dyck(n):
        ts = tunnels(d)
        crossing = sum(1 for t in ts if t.open <= n < t.close)
        across = sum(1 for t in ts if t.kind in ("left-across", "right-across", "centered"))
        assert crossing == across == d.heights()[n]


@pytest.mark.parametrize("n", range(1, 9))
def test_vertex_parity(n):
    for d in enumerate_dyck(n):
        assert all((x + h) % 2 == 0 for x, h in d.peaks() + d.valleys())


def test_reverse_complement_examples():
    assert reverse_complement(P("41235")) == P("13452")
    assert reverse_complement(Permutation.identity(6)) == Permutation.identity(6)


@pytest.mark.parametrize("n", range(1, 7))
def test_reverse_complement_matches_array_rotation(n):
    for p in oracles.all_perms(n):
        q = Permutation(p)
        assert reverse_complement(q).images == oracles.rotate_array_rc(p)
        assert reverse_complement(q).inverse() == reverse_complement(q.inverse())


@given(st.permutations(list(range(1, 12))))
def test_reverse_complement_is_involution(images):
    p = Permutation(tuple(images))
    assert reverse_complement(reverse_complement(p)) == p


def test_antichain_validation():
    with pytest.raises(DomainError):
        AntichainA(5, [(1, 3), (2, 2)])
    with pytest.raises(DomainError):
        AntichainA(3, [(1, 3)])
    with pytest.raises(DomainError):
        AntichainB(2, [(2, 3)])


def test_order_subset_closure():
    OrderSubset(4, [(1, 1), (2, 2), (1, 2)], "ideal")
    with pytest.raises(DomainError):
        OrderSubset(4, [(1, 2)], "ideal")
    with pytest.raises(DomainError):
        OrderSubset(4, [(1, 1)], "filter")


def test_matching_validation():
    NoncrossingMatching.from_arcs([(1, 4), (2, 3)])
    with pytest.raises(DomainError):
        NoncrossingMatching.from_arcs([(1, 3), (2, 4)])
    with pytest.raises(DomainError):
        NoncrossingMatching.from_arcs([(1, 2), (2, 3)])
    m = NoncrossingMatching.from_arcs([(4, 1), (3, 2)])
    assert m.arcs == ((1, 4), (2, 3)) and m.partner(2) == 3 and m.bar(1) == 4


def test_partial_matching_unmatched():
    pm = PartialMatching(6, [(2, 3)])
    assert pm.unmatched == (1, 4, 5, 6)
    assert pm.relabel(lambda k: 7 - k).arcs == ((4, 5),)


def test_tableau_validation_and_shape():
    t = Tableau.from_rows([[1, 2, 4], [3]])
    assert t.shape == (3, 1) and t.size == 4 and t.is_straight()
    with pytest.raises(DomainError):
        Tableau.from_rows([[1, 2], [3], [4, 5]])
    with pytest.raises(DomainError):
        Tableau.from_rows([[2, 1]])


def test_dump_formats():
    assert dump(P("2 1")) == "2 1"
    assert dump(P("2 1"), "json") == "[2, 1]"
    assert dump(DyckWord("UD"), "json") == '"UD"'
    assert dump(AntichainA(4, [(2, 3), (1, 1)])) == "[[1,1],[2,3]]"
    assert parse_antichain("[[1,1],[2,3]]", 4) == AntichainA(4, [(1, 1), (2, 3)])
