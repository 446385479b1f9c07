"""Static bijections between 321-avoiders, Dyck words, antichains and matchings.

Word conventions: the above-diagonal drawing reads N as U and E as D; the
below-diagonal drawing (used by ``d_v``) reads E as U and N as D, so every
output lands in the same set of U/D words.
"""
from __future__ import annotations

from .core import (
    AntichainA,
    AntichainB,
    DomainError,
    DyckWord,
    NoncrossingMatching,
    Permutation,
    require_321_avoiding,
    tunnel_pairs,
    word_from_peaks,
    word_from_valleys,
)


def _fill_increasing(n: int, fixed: dict[int, int]) -> Permutation:
    # non-excedance entries of a 321-avoider form an increasing sequence
    images = [0] * n
    for i, v in fixed.items():
        images[i - 1] = v
    rest = iter(sorted(set(range(1, n + 1)) - set(fixed.values())))
    for k in range(n):
        if images[k] == 0:
            images[k] = next(rest)
    return Permutation(tuple(images))


def e_p(p: Permutation) -> DyckWord:
    """Dyck word whose peaks sit at the weak excedances of ``p``."""
    require_321_avoiding(p)
    wexc = p.weak_excedances()
    out = ["U" * wexc[0][1]]
    for (i0, j0), (i1, j1) in zip(wexc, wexc[1:]):
        out.append("D" * (i1 - i0) + "U" * (j1 - j0))
    i_r, j_r = wexc[-1]
    out.append("D" * (p.n - i_r + 1) + "U" * (p.n - j_r))
    return DyckWord("".join(out))


def e_p_inv(d: DyckWord) -> Permutation:
    fixed = {}
    for x, h in d.peaks():
        fixed[(x - h + 2) // 2] = (x + h) // 2
    return _fill_increasing(d.n, fixed)


def e_v(p: Permutation) -> DyckWord:
    """Dyck word whose valleys sit at the excedances of ``p``."""
    require_321_avoiding(p)
    return word_from_valleys([(i + j - 1, j - i - 1) for i, j in p.excedances()], p.n)


def e_v_inv(d: DyckWord) -> Permutation:
    fixed = {}
    for x, h in d.valleys():
        fixed[(x - h) // 2] = (x + h + 2) // 2
    return _fill_increasing(d.n, fixed)


def d_v(p: Permutation) -> DyckWord:
    """Below-diagonal path with valleys at the weak deficiencies, read E->U, N->D.

    A deficiency (i, j) of ``p`` is an excedance (j, i) of its inverse, so the
    identified word is ``e_v`` of the inverse.
    """
    require_321_avoiding(p)
    return e_v(p.inverse())


def lk(d: DyckWord) -> DyckWord:
    """Lalanne-Kreweras involution."""
    return d_v(e_p_inv(d))


def lks(p: Permutation) -> Permutation:
    require_321_avoiding(p)
    return e_p_inv(lk(e_p(p)))


def exc_map(p: Permutation) -> AntichainA:
    require_321_avoiding(p)
    return AntichainA(p.n, [(i, j - 1) for i, j in p.excedances()])


def exc_inv(a: AntichainA) -> Permutation:
    return _fill_increasing(a.n, {i: j + 1 for i, j in a.elements})


def ant_map(d: DyckWord) -> AntichainA:
    """Antichain read off the valleys of ``d``."""
    return AntichainA(d.n, [((x - h) // 2, (x + h) // 2) for x, h in d.valleys()])


def ant_inv(a: AntichainA) -> DyckWord:
    return word_from_valleys([(i + j, j - i) for i, j in a.elements], a.n)


def path_map(a: AntichainA) -> DyckWord:
    """Dyck word whose peaks of height >= 2 are the elements of ``a``.

    Where two consecutive prescribed peaks are too far apart for a direct
    valley, the word returns to the axis and pads with UD factors.
    """
    n = a.n
    out: list[str] = []
    x, h = 0, 0
    for i, j in a.elements:
        px, ph = i + j, j - i + 2
        dx, dh = px - x, ph - h
        down = (dx - dh) // 2
        if h - down >= 0:
            out.append("D" * down + "U" * (dx - down))
        else:
            gap = px - ph - (x + h)
            out.append("D" * h + "UD" * (gap // 2) + "U" * ph)
        x, h = px, ph
    out.append("D" * h + "UD" * ((2 * n - x - h) // 2))
    return DyckWord("".join(out))


def path_inv(d: DyckWord) -> AntichainA:
    return AntichainA(d.n, [((x - h + 2) // 2, (x + h - 2) // 2) for x, h in d.peaks() if h >= 2])


def lka(a: AntichainA) -> AntichainA:
    """Panyushev's complement: swap complemented left and right endpoint sets.

    The complemented endpoint sets are each sorted increasingly and zipped.
    """
    universe = set(range(1, a.n))
    lefts = sorted(universe - {j for _, j in a.elements})
    rights = sorted(universe - {i for i, _ in a.elements})
    return AntichainA(a.n, list(zip(lefts, rights)))


def lka_by_paths(a: AntichainA) -> AntichainA:
    """Same map as :func:`lka`, computed as ant . LK . ant^-1."""
    return ant_map(lk(ant_inv(a)))


def match_map(d: DyckWord) -> NoncrossingMatching:
    return NoncrossingMatching(d.n, tunnel_pairs(d.steps))


def match_inv(m: NoncrossingMatching) -> DyckWord:
    steps = [""] * (2 * m.n)
    for x, y in m.arcs:
        steps[x - 1], steps[y - 1] = "U", "D"
    return DyckWord("".join(steps))


def hat(a: AntichainB) -> AntichainA:
    """Symmetric antichain of A^(2m-1) associated with a type B antichain."""
    m = a.m
    els = set(a.elements) | {(2 * m - j, 2 * m - i) for i, j in a.elements}
    return AntichainA(2 * m, els)


def is_symmetric(a: AntichainA) -> bool:
    n = a.n
    return set(a.elements) == {(n - j, n - i) for i, j in a.elements}


def unhat(a: AntichainA) -> AntichainB:
    if a.n % 2:
        raise DomainError(f"A^{a.n - 1} has no type B quotient (n must be even)")
    if not is_symmetric(a):
        raise DomainError(f"antichain {a} is not symmetric under [i,j] -> [n-j,n-i]")
    m = a.n // 2
    return AntichainB(m, [(i, j) for i, j in a.elements if i + j <= 2 * m])
