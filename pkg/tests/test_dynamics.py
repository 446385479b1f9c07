import pytest

import oracles
from combdyn import bijections as bj
from combdyn import dynamics as dy
from combdyn import tableaux as tb
from combdyn.core import (
    AntichainA,
    AntichainB,
    DyckWord,
    NoncrossingMatching,
    OrderSubset,
    Permutation,
    enumerate_antichains,
    enumerate_antichains_B,
    enumerate_avoiders,
    enumerate_dyck,
)

P = Permutation.parse
A = AntichainA
M = NoncrossingMatching.from_arcs


def test_up_transfer_examples():
    ideal = dy.up_transfer_inv(A(6, [(1, 1), (2, 4), (3, 5)]))
    assert len(ideal) == 10
    assert dy.up_transfer_inv(A(6, [])).members == ()


@pytest.mark.parametrize("n", range(1, 7))
def test_transfers_round_trip(n):
    for a in enumerate_antichains(n):
        assert dy.up_transfer(dy.up_transfer_inv(a)) == a
        assert dy.down_transfer(dy.down_transfer_inv(a)) == a


def test_rowmotion_A_examples():
    assert dy.rowmotion_A(A(6, [(1, 1), (2, 4), (3, 5)])) == A(6, [(1, 2), (2, 5)])
    assert dy.rowmotion_A(A(6, [(1, 2), (2, 5)])) == A(6, [(1, 3)])
    assert dy.rowmotion_A(A(9, [(1, 1), (2, 3), (6, 7), (7, 8)])) == A(9, [(1, 2), (4, 4), (5, 5), (6, 8)])
    assert dy.rowmotion_A_inv(A(6, [(1, 3)])) == A(6, [(1, 2), (2, 5)])


@pytest.mark.parametrize("n", range(1, 7))
def test_rowmotion_A_matches_definition(n):
    for a in oracles.antichains(n):
        got = dy.rowmotion_A(A(n, a), cross_check=True)
        assert frozenset(got.elements) == oracles.rowmotion_by_definition(n, a)


@pytest.mark.parametrize("n", range(1, 7))
def test_rowmotion_A_inverse_and_order(n):
    for a in enumerate_antichains(n):
        b = dy.rowmotion_A(a)
        assert dy.rowmotion_A_inv(b) == a
        x = a
        for _ in range(2 * n - 1):
            x = dy.rowmotion_A(x)
        assert x == dy.rowmotion_A_inv(a)


def test_rowmotion_I_examples():
    first = dy.up_transfer_inv(A(6, [(1, 1), (2, 4), (3, 5)]))
    assert dy.rowmotion_I(first) == dy.up_transfer_inv(A(6, [(1, 2), (2, 5)]))
    assert dy.rowmotion_I(OrderSubset(3, [], "ideal")) == OrderSubset(3, [(1, 1), (2, 2)], "ideal")


@pytest.mark.parametrize("n", range(1, 7))
def test_rowmotion_on_ideals_and_filters_is_conjugate(n):
    for a in enumerate_antichains(n):
        assert dy.rowmotion_I(dy.up_transfer_inv(a)) == dy.up_transfer_inv(dy.rowmotion_A(a))
        assert dy.rowmotion_F(dy.down_transfer_inv(a)) == dy.down_transfer_inv(dy.rowmotion_A(a))


def test_rowmotion_D_examples():
    assert dy.rowmotion_D(DyckWord("UDUDUD")) == DyckWord("UUDUDD")
    assert dy.rowmotion_D(bj.e_p(P("241358967"))) == bj.e_p(P("312569478"))


@pytest.mark.parametrize("n", range(1, 8))
def test_rowmotion_D_round_trip(n):
    for d in enumerate_dyck(n):
        assert dy.rowmotion_D_inv(dy.rowmotion_D(d)) == d


def test_rowmotion_S_examples():
    assert dy.rowmotion_S(P("241358967")) == P("312569478")
    assert dy.rowmotion_S(P("312569478")) == P("124673589")
    orbit = dy.orbit_of(P("1423"), "rs")
    assert [p.compact() for p in orbit.elements] == ["1423", "2134", "1342", "2413", "3124", "1243", "2314", "3142"]


@pytest.mark.parametrize("n", range(1, 8))
def test_rowmotion_S_identities(n):
    for p in enumerate_avoiders(n):
        q = dy.rowmotion_S(p, cross_check=True)
        assert dy.rowmotion_S_inv(q) == p
        assert bj.e_p(q) == dy.rowmotion_D(bj.e_p(p))
        assert bj.d_v(q) == dy.rowmotion_D_inv(bj.d_v(p))
        assert dy.rowmotion_S(bj.lks(p)) == p.inverse()
        lhs = bj.lks(dy.rowmotion_S_inv(p))
        assert lhs == dy.rowmotion_S(bj.lks(p))
        assert lhs == bj.exc_inv(bj.lka(dy.rowmotion_A(bj.exc_map(p))))


def test_promotion_dyck_examples():
    assert dy.promotion_dyck(DyckWord("UUDUDDUUDD")) == DyckWord("UDUDUUUDDD")
    assert dy.promotion_dyck(DyckWord("UD")) == DyckWord("UD")


@pytest.mark.parametrize("n", range(1, 8))
def test_promotion_dyck_inverse(n):
    for d in enumerate_dyck(n):
        assert dy.promotion_dyck_inv(dy.promotion_dyck(d)) == d


def test_rotate_examples():
    first = M([(1, 6), (2, 3), (4, 5), (7, 10), (8, 9)])
    assert dy.rotate(first) == M([(1, 8), (2, 7), (3, 4), (5, 6), (9, 10)])
    n = 4
    nested = M([(k, 2 * n + 1 - k) for k in range(1, n + 1)])
    assert dy.rotate(nested) == M([(k + 1, (2 * n + 1 - k) % (2 * n) + 1) for k in range(1, n + 1)])


def test_rotation_has_order_dividing_2n():
    for d in enumerate_dyck(4):
        m = bj.match_map(d)
        assert dy.rotate(m, 8) == m
        assert 8 % dy.orbit_of(m, "rot").size == 0


def test_ast_examples():
    assert dy.ast_steps(A(5, [(1, 3), (3, 4)])) == [(4, 3), (9, 10), (5, 2), (7, 8), (6, 1)]
    assert dy.ast(A(1, [])) == M([(1, 2)])
    assert dy.ast(A(5, [(1, 2), (2, 4)])) == M([(1, 6), (2, 3), (4, 5), (7, 10), (8, 9)])


def test_ast_b_examples():
    expected = M([(2, 3), (7, 8), (15, 16), (1, 14), (4, 13), (5, 12), (10, 11), (6, 9)])
    assert dy.ast_b(AntichainB(4, [(1, 2)])) == expected
    assert dy.ast_b(AntichainB(1, [])) == dy.ast(A(2, []))


@pytest.mark.parametrize("m", range(1, 5))
def test_ast_b_is_centrally_symmetric(m):
    for a in enumerate_antichains_B(m):
        assert dy.is_centrally_symmetric(dy.ast_b(a))


@pytest.mark.parametrize("n", range(1, 8))
def test_ast_theorem_and_equivariance(n):
    for a in enumerate_antichains(n):
        x = dy.ast(a)
        assert x == bj.match_map(tb.rskd(bj.exc_inv(a)))
        assert dy.ast(dy.rowmotion_A(a)) == dy.rotate(x)


def test_bottoms_examples():
    m = M([(1, 6), (2, 3), (4, 5), (7, 10), (8, 9)])
    assert dy.bottoms(m) == {3, 5, 6, 7, 8}
    assert dy.matching_from_bottoms({3, 5, 6, 7, 8}, 5) == m
    n = 4
    nested = M([(k, 2 * n + 1 - k) for k in range(1, n + 1)])
    assert dy.bottoms(nested) == set(range(n + 1, 2 * n + 1))
    assert dy.matching_from_bottoms(range(n + 1, 2 * n + 1), n) == nested


@pytest.mark.parametrize("n", range(1, 7))
def test_bottoms_determine_the_matching(n):
    for arcs in oracles.noncrossing_matchings(n):
        m = M(arcs)
        assert dy.matching_from_bottoms(dy.bottoms(m), n) == m


@pytest.mark.parametrize("n", range(1, 6))
def test_bottoms_of_ast_read_off_excedances(n):
    for p in enumerate_avoiders(n):
        exc = p.excedances()
        expected = {j for _, j in exc} | {2 * n + 1 - i for i in range(1, n + 1) if i not in {i for i, _ in exc}}
        assert dy.bottoms(dy.ast(bj.exc_map(p))) == expected


@pytest.mark.parametrize("n", range(1, 8))
def test_rowmotion_orbit_sizes_divide_2n(n):
    for orb in dy.orbits(enumerate_antichains(n), "ra"):
        assert (2 * n) % orb.size == 0


@pytest.mark.parametrize("n", range(1, 8))
def test_n_fold_rowmotion_reflects(n):
    for a in enumerate_antichains(n):
        b = a
        for _ in range(n):
            b = dy.rowmotion_A(b)
        assert set(b.elements) == {(n - j, n - i) for i, j in a.elements}


@pytest.mark.parametrize("n", range(1, 8))
def test_lka_reverses_rowmotion(n):
    for a in enumerate_antichains(n):
        assert bj.lka(dy.rowmotion_A(a)) == dy.rowmotion_A_inv(bj.lka(a))


def test_orbit_listing():
    orb = dy.orbit_of(P("15234"), "rs")
    assert orb.size == 10 and orb.representative == P("12354")
    parts = dy.orbits(enumerate_avoiders(4), "rs")
    assert sum(o.size for o in parts) == 14
    assert [o.representative for o in parts] == sorted(o.representative for o in parts)
