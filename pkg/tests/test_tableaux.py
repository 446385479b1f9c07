from itertools import combinations, permutations

import pytest

import oracles
from combdyn import dynamics as dy
from combdyn import tableaux as tb
from combdyn.core import (
    DomainError,
    DyckWord,
    PartialMatching,
    Permutation,
    Tableau,
    enumerate_avoiders,
    enumerate_dyck,
    reverse_complement,
)

P = Permutation.parse
T = Tableau.from_rows


def test_rsk_examples():
    assert tb.rsk(P("41235")) == (T([[1, 2, 3, 5], [4]]), T([[1, 3, 4, 5], [2]]))
    assert tb.rsk(P("123")) == (T([[1, 2, 3]]), T([[1, 2, 3]]))
    assert tb.rsk_inv(T([[1, 2, 3, 5], [4]]), T([[1, 3, 4, 5], [2]])) == P("41235")
    assert tb.rsk_inv(T([[1, 2, 3]]), T([[1, 2, 3]])) == P("123")


@pytest.mark.parametrize("n", range(1, 7))
def test_rsk_inverse_swaps_tableaux(n):
    for images in permutations(range(1, n + 1)):
        p = Permutation(images)
        Pt, Qt = tb.rsk(p)
        assert tb.rsk(p.inverse()) == (Qt, Pt)
        assert tb.rsk_inv(Pt, Qt) == p


def _longest_decreasing(images):
    return max(k for k in range(1, len(images) + 1)
               if any(list(c) == sorted(c, reverse=True) for c in combinations(images, k)))


@pytest.mark.parametrize("n", range(1, 7))
def test_rsk_rows_equal_longest_decreasing(n):
    for images in permutations(range(1, n + 1)):
        assert len(tb.rsk(Permutation(images))[0].rows) == _longest_decreasing(images)


@pytest.mark.parametrize("n", range(1, 6))
def test_rsk_of_reverse_complement_is_evacuation(n):
    for images in permutations(range(1, n + 1)):
        p = Permutation(images)
        Pt, Qt = tb.rsk(p)
        assert tb.rsk(reverse_complement(p)) == (tb.evacuation(Pt), tb.evacuation(Qt))


def test_rskd_examples():
    assert tb.rskd(P("41235")) == DyckWord("UUUDUDDDUD")
    assert tb.rskd(Permutation.identity(4)) == DyckWord("UUUUDDDD")
    assert tb.rskd(P("35124")) == DyckWord("UUDUDDUUDD")
    with pytest.raises(DomainError):
        tb.rskd(P("321"))


@pytest.mark.parametrize("n", range(1, 8))
def test_rskd_properties(n):
    seen = set()
    for p in enumerate_avoiders(n):
        d = tb.rskd(p)
        seen.add(d.steps)
        assert tb.rskd_inv(d) == p
        assert tb.rskd(p.inverse()) == d.reflect()
        assert d.is_symmetric() == p.is_involution()
        assert tb.rskd(dy.rowmotion_S(p)) == dy.promotion_dyck_inv(d)
    assert seen == set(oracles.dyck_words(n))


def test_tab_examples():
    assert tb.tab(DyckWord("UUUDUDDDUD")) == T([[1, 2, 3, 5, 9], [4, 6, 7, 8, 10]])
    assert tb.tab(DyckWord("UUUDDD")) == T([[1, 2, 3], [4, 5, 6]])
    assert tb.tab(DyckWord("UUDUDDUUDD")) == T([[1, 2, 4, 7, 8], [3, 5, 6, 9, 10]])
    assert tb.tab_inv(T([[1, 2, 4, 7, 8], [3, 5, 6, 9, 10]])) == DyckWord("UUDUDDUUDD")


def test_toggle_first_frame():
    t = T([[1, 2, 4, 7, 8], [3, 5, 6, 9, 10]])
    assert tb.toggle(t, 1) == t
    assert tb.toggle(t, 2) == T([[1, 3, 4, 7, 8], [2, 5, 6, 9, 10]])


def test_toggle_is_involution_on_SYT44():
    for t in tb.standard_tableaux((4, 4)):
        for i in range(1, 8):
            assert tb.toggle(tb.toggle(t, i), i) == t


def test_toggle_fixes_row_neighbours():
    t = T([[1, 2, 3], [4]])
    assert tb.toggle(t, 1) == t and tb.toggle(t, 2) == t


def test_promotion_examples():
    assert tb.promotion_syt(T([[1, 2, 4, 7, 8], [3, 5, 6, 9, 10]])) == T([[1, 3, 5, 6, 7], [2, 4, 8, 9, 10]])
    row = T([[1, 2, 3, 4, 5]])
    assert tb.promotion_syt(row) == row


@pytest.mark.parametrize("n", range(1, 8))
def test_tab_intertwines_promotion(n):
    for d in enumerate_dyck(n):
        assert tb.tab(dy.promotion_dyck(d)) == tb.promotion_syt(tb.tab(d))


def test_evacuation_example():
    t = T([[1, 2, 3, 6, 7, 9], [4, 5, 8, 10]])
    expected = T([[1, 3, 5, 6, 7, 10], [2, 4, 8, 9]])
    assert tb.evacuation(t) == expected
    assert tb.evac_via_rotation(t) == expected
    assert tb.evacuation(T([[1]])) == T([[1]])
    assert tb.evac_via_rotation(T([[1, 2, 3, 4]])) == T([[1, 2, 3, 4]])


def test_jdt_examples():
    straight = T([[1, 2, 4], [3]])
    assert tb.jdt_rectify(straight) == straight
    small = T([[1, 2], [3]])
    assert tb.rotate_complement(small) == T([[None, 1], [2, 3]])
    assert tb.jdt_rectify(tb.rotate_complement(small)) == tb.evacuation(small) == T([[1, 3], [2]])


def _two_row_tableaux(size):
    for shape in tb.two_row_shapes(size):
        yield from tb.standard_tableaux(shape)


@pytest.mark.parametrize("size", range(1, 11))
def test_evacuations_agree_on_two_row_tableaux(size):
    for t in _two_row_tableaux(size):
        e = tb.evacuation(t)
        assert e == tb.evac_via_rotation(t)
        assert tb.evacuation(e) == t
        assert tb.partial_match(e) == tb.partial_match(t).relabel(lambda k: size + 1 - k)


@pytest.mark.parametrize("k", range(1, 6))
def test_evacuations_agree_on_rectangles(k):
    for t in tb.standard_tableaux((k, k)):
        assert tb.evacuation(t) == tb.evac_via_rotation(t)
        assert tb.evacuation(tb.evacuation(t)) == t


def test_evacuations_agree_on_three_row_shapes():
    for shape in [(3, 2, 1), (4, 2, 1), (3, 3, 2), (2, 2, 2)]:
        for t in tb.standard_tableaux(shape):
            assert tb.evacuation(t) == tb.evac_via_rotation(t)


def test_partial_match_examples():
    pm = tb.partial_match(T([[1, 2, 3, 6, 7, 9], [4, 5, 8, 10]]))
    assert pm == PartialMatching(10, [(2, 5), (3, 4), (7, 8), (9, 10)])
    assert pm.unmatched == (1, 6)
    assert tb.partial_match(T([[1, 2, 3]])).unmatched == (1, 2, 3)


def test_standard_tableaux_counts():
    # hook length formula values
    assert sum(1 for _ in tb.standard_tableaux((5, 5))) == 42
    assert sum(1 for _ in tb.standard_tableaux((3, 2, 1))) == 16
